#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace foel {

/// Exact half-integer, stored as twice its value.
///
/// Used for spin magnitudes s_x, total-spin labels S and S^3 eigenvalues M.
/// All arithmetic is exact; conversion to double only happens on request.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Dimension 2s+1 of the spin-s representation.
  constexpr int multiplet_dim() const { return twice_ + 1; }

  /// s(s+1), exact in double for any realistic magnitude.
  constexpr double casimir_value() const { return value() * (value() + 1.0); }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "1", "-1/2", ...
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

}  // namespace foel

template <>
struct std::hash<foel::HalfInt> {
  std::size_t operator()(const foel::HalfInt& h) const noexcept { return std::hash<int>{}(h.twice()); }
};
