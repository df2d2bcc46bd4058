#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chemin {

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Every probability and expectation in the library is a Rational; nothing
/// on a computation path goes through floating point. The integer type is
/// arbitrary width, so sums over all 13^6 card tuples and products with the
/// prior weights never overflow.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument if `den` is zero.
  Rational(Integer num, Integer den);

  /// Parses "n", "-n", "p/q" or a plain decimal such as "-0.024706".
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;
  /// Rounds half away from zero to `precision` digits after the point.
  std::string to_decimal(int precision) const;
  /// Display and statistics only.
  double to_double() const;

 private:
  Integer num_{0};
  Integer den_{1};
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace chemin
