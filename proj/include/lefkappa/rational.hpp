#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace lefkappa {

/// Exact fraction with a positive denominator, always stored in lowest terms.
///
/// All arithmetic is overflow-checked; an intermediate that does not fit in
/// 64 bits raises Error(Overflow) rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  /// Throws Error(NonInteger) when the value is fractional; never rounds.
  std::int64_t to_integer() const;

  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lefkappa
