#include "chemin/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace chemin {

namespace {

Rational::Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  // Accumulated by hand: the cpp_int string constructor reads a leading 0 as octal.
  Rational::Integer value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational::Integer pow10(int exponent) {
  Rational::Integer result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational with zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Integer num;
  Integer den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = parse_integer(body.substr(0, slash), text);
    den = parse_integer(body.substr(slash + 1), text);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) parse_integer({}, text);
    num = whole.empty() ? Integer(0) : parse_integer(whole, text);
    den = pow10(static_cast<int>(frac.size()));
    if (!frac.empty()) num = num * den + parse_integer(frac, text);
  } else {
    num = parse_integer(body, text);
  }
  return Rational(negative ? Integer(-num) : num, den);
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  *this = Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = Rational(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  *this = Rational(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const Rational::Integer a = lhs.num_ * rhs.den_;
  const Rational::Integer b = rhs.num_ * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal(int precision) const {
  if (precision < 0) throw std::invalid_argument("negative decimal precision");
  const Integer scaled = boost::multiprecision::abs(num_) * pow10(precision);
  Integer quotient = scaled / den_;
  const Integer remainder = scaled % den_;
  if (remainder * 2 >= den_) ++quotient;

  std::string digits = quotient.str();
  if (static_cast<int>(digits.size()) <= precision) {
    digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
  }
  std::string out;
  if (num_.sign() < 0 && !quotient.is_zero()) out += '-';
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(precision));
  if (precision > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<std::size_t>(precision));
  }
  return out;
}

double Rational::to_double() const {
  return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace chemin
