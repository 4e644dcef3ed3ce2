#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace opdyn {

// Exact rational number with 64-bit numerator/denominator, always reduced
// and with a positive denominator. Comparisons go through 128-bit cross
// multiplication so they never overflow for reduced operands.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  // Accepts "p/q", integers, and finite decimals such as "0.7" or "-1.25".
  static Rational parse(std::string_view text);

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  // floor(this * k) for a non-negative integer k, exact.
  std::int64_t floor_times(std::int64_t k) const;
  // True when this * k is an integer.
  bool times_is_integer(std::int64_t k) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// lhs_weight >= ratio * total_weight, evaluated exactly.
inline bool at_least_fraction(std::int64_t lhs_weight, const Rational& ratio,
                              std::int64_t total_weight) noexcept {
  return static_cast<__int128>(lhs_weight) * ratio.den() >=
         static_cast<__int128>(ratio.num()) * total_weight;
}

}  // namespace opdyn
