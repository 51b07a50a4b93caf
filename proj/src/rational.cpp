#include "fgl/rational.hpp"

#include <stdexcept>

namespace fgl {

Rational::Rational(BigUint num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = BigUint(1);
    return;
  }
  BigUint g = BigUint::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  std::size_t slash = text.find('/');
  std::string_view num_text = slash == std::string_view::npos ? text : text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) +
                                "' (expected \"a/b\" or \"a\" with nonnegative decimal a, b)");
  }
  BigUint den = BigUint::from_decimal(den_text);
  if (den.is_zero()) {
    throw std::invalid_argument("not a rational: '" + std::string(text) +
                                "' (zero denominator)");
  }
  return Rational(BigUint::from_decimal(num_text), std::move(den));
}

std::string Rational::str() const { return num_.to_decimal() + "/" + den_.to_decimal(); }

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  BigUint left = a.num_ * b.den_;
  BigUint right = b.num_ * a.den_;
  if (left < right) throw std::invalid_argument("Rational: subtraction below zero");
  return Rational(left - right, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
  return BigUint::compare(a.num_ * b.den_, b.num_ * a.den_);
}

}  // namespace fgl
