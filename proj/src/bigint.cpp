#include "fgl/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace fgl {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) limbs_.push_back(static_cast<std::uint32_t>(value));
  if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
}

BigUint BigUint::from_limbs(std::vector<std::uint32_t> limbs) {
  BigUint out;
  out.limbs_ = std::move(limbs);
  out.trim();
  return out;
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return 32 * (limbs_.size() - 1) + std::bit_width(limbs_.back());
}

std::uint64_t BigUint::to_u64() const {
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

double BigUint::to_double() const {
  if (fits_u64()) return static_cast<double>(to_u64());
  // Top 64 bits carry all double precision; scale the rest back in.
  std::size_t bl = bit_length();
  BigUint top = *this >> (bl - 64);
  return std::ldexp(static_cast<double>(top.to_u64()), static_cast<int>(bl - 64));
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
    if (carry == 0 && i >= rhs.limbs_.size()) break;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (compare(*this, rhs) < 0) {
    throw std::invalid_argument("BigUint: subtraction underflow");
  }
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  if (a.is_zero() || b.is_zero()) return BigUint{};
  BigUint out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a.limbs_[i];
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t t = ai * b.limbs_[j] + out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    out.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

BigUint& BigUint::operator<<=(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  if (bit_shift != 0) {
    std::uint32_t carry = 0;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
      std::uint32_t next = limbs_[i] >> (32 - bit_shift);
      limbs_[i] = (limbs_[i] << bit_shift) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }
  return *this;
}

BigUint& BigUint::operator>>=(std::size_t bits) {
  std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
  if (bit_shift != 0) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint32_t high = (i + 1 < limbs_.size()) ? limbs_[i + 1] : 0;
      limbs_[i] = (limbs_[i] >> bit_shift) | (high << (32 - bit_shift));
    }
  }
  trim();
  return *this;
}

void BigUint::divmod(BigUint num, BigUint den, BigUint& quot, BigUint& rem) {
  if (den.is_zero()) throw std::invalid_argument("BigUint: division by zero");
  if (compare(num, den) < 0) {
    quot = BigUint{};
    rem = std::move(num);
    return;
  }
  if (den.limbs_.size() == 1) {
    std::uint32_t d = den.limbs_[0];
    quot.limbs_.assign(num.limbs_.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = num.limbs_.size(); i-- > 0;) {
      std::uint64_t cur = (r << 32) | num.limbs_[i];
      quot.limbs_[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    quot.trim();
    rem = BigUint(r);
    return;
  }

  // Knuth algorithm D on 32-bit limbs.
  const std::size_t n = den.limbs_.size();
  const std::size_t m = num.limbs_.size() - n;
  const unsigned shift = static_cast<unsigned>(std::countl_zero(den.limbs_.back()));

  std::vector<std::uint32_t> v = (den << shift).limbs_;
  std::vector<std::uint32_t> u = (num << shift).limbs_;
  u.resize(num.limbs_.size() + 1, 0);

  quot.limbs_.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t top = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = top / v[n - 1];
    std::uint64_t rhat = top % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }

    std::uint64_t mul_carry = 0;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v[i] + mul_carry;
      mul_carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                       static_cast<std::int64_t>(p & 0xFFFFFFFFu) - borrow;
      u[i + j] = static_cast<std::uint32_t>(t);
      borrow = t < 0 ? 1 : 0;
    }
    std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                     static_cast<std::int64_t>(mul_carry) - borrow;
    u[j + n] = static_cast<std::uint32_t>(t);

    if (t < 0) {
      --qhat;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + carry;
        u[i + j] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
      }
      u[j + n] = static_cast<std::uint32_t>(u[j + n] + carry);
    }
    quot.limbs_[j] = static_cast<std::uint32_t>(qhat);
  }
  quot.trim();

  u.resize(n);
  rem = from_limbs(std::move(u));
  rem >>= shift;
}

BigUint operator/(const BigUint& a, const BigUint& b) {
  BigUint q, r;
  BigUint::divmod(a, b, q, r);
  return q;
}

BigUint operator%(const BigUint& a, const BigUint& b) {
  BigUint q, r;
  BigUint::divmod(a, b, q, r);
  return r;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
  while (!b.is_zero()) {
    BigUint q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigUint BigUint::lcm(const BigUint& a, const BigUint& b) {
  if (a.is_zero() || b.is_zero()) return BigUint{};
  return (a / gcd(a, b)) * b;
}

BigUint BigUint::pow(const BigUint& base, unsigned exp) {
  BigUint result{1};
  BigUint acc = base;
  while (exp != 0) {
    if (exp & 1u) result = result * acc;
    exp >>= 1u;
    if (exp != 0) acc = acc * acc;
  }
  return result;
}

BigUint BigUint::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("BigUint: empty decimal string");
  BigUint out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t chunk_len = std::min<std::size_t>(9, text.size() - pos);
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t i = 0; i < chunk_len; ++i) {
      char c = text[pos + i];
      if (c < '0' || c > '9') {
        throw std::invalid_argument("BigUint: invalid decimal digit '" +
                                    std::string(1, c) + "'");
      }
      chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
      scale *= 10;
    }
    out = out * BigUint(scale) + BigUint(chunk);
    pos += chunk_len;
  }
  return out;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  std::string out;
  BigUint value = *this;
  const BigUint chunk_div(1000000000u);
  while (!value.is_zero()) {
    BigUint q, r;
    divmod(value, chunk_div, q, r);
    std::uint64_t digits = r.to_u64();
    bool last_chunk = q.is_zero();
    for (int i = 0; i < 9; ++i) {
      out.push_back(static_cast<char>('0' + digits % 10));
      digits /= 10;
      if (last_chunk && digits == 0) break;
    }
    value = std::move(q);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace fgl
