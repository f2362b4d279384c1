#include "lefkappa/rational.hpp"

#include <limits>
#include <numeric>

#include "lefkappa/checked.hpp"
#include "lefkappa/error.hpp"

namespace lefkappa {

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0)
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (denominator < 0) {
    numerator = checked::neg(numerator);
    denominator = checked::neg(denominator);
  }
  // gcd takes |numerator|, which does not exist at INT64_MIN.
  if (numerator == std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::Overflow, "numerator at INT64_MIN");
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1)
    throw Error(ErrorCode::NonInteger, to_string() + " is not an integer",
                *this);
  return num_;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked::neg(num_);
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t da = a.den_ / g;
  const std::int64_t db = b.den_ / g;
  return {checked::add(checked::mul(a.num_, db), checked::mul(b.num_, da)),
          checked::mul(a.den_, db)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const std::int64_t n1 = g1 ? a.num_ / g1 : a.num_;
  const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
  const std::int64_t n2 = g2 ? b.num_ / g2 : b.num_;
  const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
  return {checked::mul(n1, n2), checked::mul(d1, d2)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Products of two int64 always fit in 128 bits.
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace lefkappa
