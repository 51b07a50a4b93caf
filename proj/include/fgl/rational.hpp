#ifndef FGL_RATIONAL_HPP
#define FGL_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "fgl/bigint.hpp"

namespace fgl {

// Exact nonnegative rational, always in lowest terms with denominator >= 1.
// Probabilities and enumeration weights never leave [0, inf), so there is no
// sign to carry.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::uint64_t num, std::uint64_t den = 1) : Rational(BigUint(num), BigUint(den)) {}
  Rational(BigUint num, BigUint den);

  // Accepts "a/b" or "a" with decimal a, b and b > 0. Anything else throws.
  static Rational parse(std::string_view text);

  const BigUint& num() const { return num_; }
  const BigUint& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  // Always slash form, e.g. "0/1", "1/2", "1/1".
  std::string str() const;
  double to_double() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);  // throws if a < b
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws if b == 0
  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }

  static int compare(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

 private:
  void reduce();
  BigUint num_, den_;
};

}  // namespace fgl

#endif
