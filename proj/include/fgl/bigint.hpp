#ifndef FGL_BIGINT_HPP
#define FGL_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fgl {

// Unsigned arbitrary-precision integer. Little-endian 32-bit limbs with no
// trailing zero limbs; an empty limb vector is zero. Probability weights are
// products of many small fractions, so everything downstream assumes these
// never overflow.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT: implicit on purpose

  static BigUint from_decimal(std::string_view text);
  static BigUint from_limbs(std::vector<std::uint32_t> limbs);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
  // Number of bits in the value; 0 for zero.
  std::size_t bit_length() const;
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // requires fits_u64()
  double to_double() const;

  // -1, 0, +1
  static int compare(const BigUint& a, const BigUint& b);

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);  // throws if rhs > *this
  BigUint& operator<<=(std::size_t bits);
  BigUint& operator>>=(std::size_t bits);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(const BigUint& a, const BigUint& b);
  friend BigUint operator<<(BigUint a, std::size_t bits) { return a <<= bits; }
  friend BigUint operator>>(BigUint a, std::size_t bits) { return a >>= bits; }

  // Arguments by value so callers may alias outputs with inputs.
  static void divmod(BigUint num, BigUint den, BigUint& quot, BigUint& rem);
  friend BigUint operator/(const BigUint& a, const BigUint& b);
  friend BigUint operator%(const BigUint& a, const BigUint& b);

  static BigUint gcd(BigUint a, BigUint b);
  static BigUint lcm(const BigUint& a, const BigUint& b);
  static BigUint pow(const BigUint& base, unsigned exp);

  friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

  const std::vector<std::uint32_t>& limbs() const { return limbs_; }

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

}  // namespace fgl

#endif
