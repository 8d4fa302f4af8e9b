#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace verlab {

// An element of (1/2)Z stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr static HalfInt from_doubled(std::int64_t doubled) { return HalfInt(doubled); }
  constexpr static HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integral() const { return doubled_ % 2 == 0; }

  constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
  constexpr friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.doubled_ + b.doubled_); }
  constexpr friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.doubled_ - b.doubled_); }
  constexpr friend auto operator<=>(HalfInt, HalfInt) = default;

  // "3" or "5/2"
  std::string to_string() const {
    if (is_integral()) {
      return std::to_string(doubled_ / 2);
    }
    return std::to_string(doubled_) + "/2";
  }

 private:
  constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}
  std::int64_t doubled_ = 0;
};

}  // namespace verlab
