#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace k3fm {

/// Arbitrary-precision signed integer on base-2^32 limbs (little-endian).
/// Division truncates toward zero, matching the built-in integer types;
/// floordiv() is provided separately for floor semantics.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // implicit: integer literals participate in arithmetic
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ull : static_cast<unsigned long long>(v);
    mag_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned long long m) {
    if (m == 0) return;
    sign_ = 1;
    mag_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
  }

  /// Parses an optionally signed decimal string. Throws std::invalid_argument
  /// on anything that is not a plain integer (floats are rejected here).
  explicit BigInt(std::string_view decimal) {
    size_t i = 0;
    int sgn = 1;
    if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
      if (decimal[i] == '-') sgn = -1;
      ++i;
    }
    if (i == decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (size_t j = i; j < decimal.size(); ++j)
      if (decimal[j] < '0' || decimal[j] > '9')
        throw std::invalid_argument("BigInt: invalid digit in \"" + std::string(decimal) + "\"");
    // accumulate in 9-digit chunks: mag = mag*10^k + chunk
    while (i < decimal.size()) {
      size_t take = std::min<size_t>(9, decimal.size() - i);
      uint32_t chunk = 0, scale = 1;
      for (size_t j = 0; j < take; ++j) {
        chunk = chunk * 10 + static_cast<uint32_t>(decimal[i + j] - '0');
        scale *= 10;
      }
      mul_small_inplace(mag_, scale);
      add_small_inplace(mag_, chunk);
      i += take;
    }
    sign_ = mag_.empty() ? 0 : sgn;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

  size_t bit_length() const {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    size_t bits = (mag_.size() - 1) * 32;
    while (top) {
      ++bits;
      top >>= 1;
    }
    return bits;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
      return r;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = sub_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      r.mag_ = sub_mag(b.mag_, a.mag_);
      r.sign_ = b.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  /// Quotient and remainder with |r| < |b| and sign(r) = sign(a).
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) return {BigInt(), BigInt()};
    std::vector<uint32_t> q, r;
    divmod_mag(a.mag_, b.mag_, q, r);
    BigInt qq, rr;
    qq.mag_ = std::move(q);
    qq.sign_ = qq.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rr.mag_ = std::move(r);
    rr.sign_ = rr.mag_.empty() ? 0 : a.sign_;
    return {qq, rr};
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  /// Floor division: q = ⌊a/b⌋ (used for exact enumeration bounds).
  static BigInt floordiv(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero() && (r.sign_ != b.sign_)) q = q - BigInt(1);
    return q;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
  BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  /// Left shift by whole bits; defined for non-negative values.
  friend BigInt operator<<(const BigInt& a, size_t bits) {
    if (a.sign_ < 0) throw std::domain_error("BigInt: shift of negative value");
    if (a.sign_ == 0 || bits == 0) return a;
    BigInt r;
    size_t limbs = bits / 32, rem = bits % 32;
    r.mag_.assign(limbs, 0);
    uint32_t carry = 0;
    for (uint32_t limb : a.mag_) {
      r.mag_.push_back(rem ? ((limb << rem) | carry) : limb);
      carry = rem ? static_cast<uint32_t>(limb >> (32 - rem)) : 0;
    }
    if (carry) r.mag_.push_back(carry);
    r.sign_ = 1;
    return r;
  }

  friend BigInt operator>>(const BigInt& a, size_t bits) {
    if (a.sign_ < 0) throw std::domain_error("BigInt: shift of negative value");
    if (a.sign_ == 0) return a;
    size_t limbs = bits / 32, rem = bits % 32;
    if (limbs >= a.mag_.size()) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.begin() + static_cast<long>(limbs), a.mag_.end());
    if (rem) {
      for (size_t i = 0; i < r.mag_.size(); ++i) {
        uint32_t hi = (i + 1 < r.mag_.size()) ? r.mag_[i + 1] : 0;
        r.mag_[i] = static_cast<uint32_t>((r.mag_[i] >> rem) | (static_cast<uint64_t>(hi) << (32 - rem)));
      }
    }
    trim(r.mag_);
    r.sign_ = r.mag_.empty() ? 0 : 1;
    return r;
  }

  static BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
      BigInt t = x % y;
      x = std::move(y);
      y = std::move(t);
    }
    return x;
  }

  /// ⌊√n⌋ for n ≥ 0 via integer Newton iteration.
  static BigInt isqrt(const BigInt& n) {
    if (n.sign_ < 0) throw std::domain_error("BigInt: isqrt of negative value");
    if (n <= BigInt(1)) return n;
    BigInt x = BigInt(1) << (n.bit_length() / 2 + 1);
    while (true) {
      BigInt y = (x + n / x) >> 1;
      if (y >= x) return x;
      x = std::move(y);
    }
  }

  bool fits_longlong() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = to_ull();
    if (sign_ >= 0) return m <= 0x7fffffffffffffffull;
    return m <= 0x8000000000000000ull;
  }

  long long to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: value exceeds long long");
    unsigned long long m = to_ull();
    return sign_ < 0 ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> work = mag_;
    std::string out;
    while (!work.empty()) {
      uint32_t rem = divmod_small_inplace(work, 1000000000u);
      std::string part = std::to_string(rem);
      if (!work.empty()) part.insert(0, 9 - part.size(), '0');
      out.insert(0, part);
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
  }

 private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;  // little-endian, no leading zero limbs

  unsigned long long to_ull() const {
    unsigned long long m = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() > 1) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    return m;
  }

  static int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }

  static void trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> out;
    out.reserve(big.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      uint64_t t = carry + big[i] + (i < small.size() ? small[i] : 0u);
      out.push_back(static_cast<uint32_t>(t));
      carry = t >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t t = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0u) - borrow;
      borrow = t < 0 ? 1 : 0;
      out.push_back(static_cast<uint32_t>(t + (borrow << 32)));
    }
    trim(out);
    return out;
  }

  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t t = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
        out[i + j] = static_cast<uint32_t>(t);
        carry = t >> 32;
      }
      out[i + b.size()] = static_cast<uint32_t>(carry);
    }
    trim(out);
    return out;
  }

  static void mul_small_inplace(std::vector<uint32_t>& v, uint32_t m) {
    uint64_t carry = 0;
    for (auto& limb : v) {
      uint64_t t = static_cast<uint64_t>(limb) * m + carry;
      limb = static_cast<uint32_t>(t);
      carry = t >> 32;
    }
    if (carry) v.push_back(static_cast<uint32_t>(carry));
    trim(v);
  }

  static void add_small_inplace(std::vector<uint32_t>& v, uint32_t a) {
    uint64_t carry = a;
    for (size_t i = 0; carry && i < v.size(); ++i) {
      uint64_t t = v[i] + carry;
      v[i] = static_cast<uint32_t>(t);
      carry = t >> 32;
    }
    if (carry) v.push_back(static_cast<uint32_t>(carry));
  }

  // divides v by d in place, returns the remainder
  static uint32_t divmod_small_inplace(std::vector<uint32_t>& v, uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = v.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | v[i];
      v[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    trim(v);
    return static_cast<uint32_t>(rem);
  }

  // Knuth algorithm D on magnitudes; q and r receive quotient and remainder.
  static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(u, v) < 0) {
      r = u;
      return;
    }
    if (v.size() == 1) {
      q = u;
      uint32_t rem = divmod_small_inplace(q, v[0]);
      if (rem) r.push_back(rem);
      return;
    }
    int s = 0;
    for (uint32_t top = v.back(); !(top & 0x80000000u); top <<= 1) ++s;
    const size_t n = v.size();
    const size_t m = u.size() - n;
    std::vector<uint32_t> vn(n), un(u.size() + 1, 0);
    for (size_t i = 0; i < n; ++i) {
      vn[i] = static_cast<uint32_t>(v[i] << s);
      if (s && i > 0) vn[i] |= static_cast<uint32_t>(v[i - 1] >> (32 - s));
    }
    for (size_t i = 0; i < u.size(); ++i) {
      un[i] |= static_cast<uint32_t>(u[i] << s);
      if (s) un[i + 1] |= static_cast<uint32_t>(u[i] >> (32 - s));
    }
    q.assign(m + 1, 0);
    const uint64_t base = 1ull << 32;
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t top = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
      uint64_t qhat = top / vn[n - 1];
      uint64_t rhat = top % vn[n - 1];
      while (qhat >= base ||
             qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }
      uint64_t carry = 0;
      int64_t borrow = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * vn[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(un[i + j]) - static_cast<int64_t>(p & 0xffffffffu) + borrow;
        un[i + j] = static_cast<uint32_t>(t);
        borrow = t >> 32;
      }
      int64_t t = static_cast<int64_t>(un[j + n]) - static_cast<int64_t>(carry) + borrow;
      un[j + n] = static_cast<uint32_t>(t);
      borrow = t >> 32;
      if (borrow) {
        --qhat;
        uint64_t c = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t w = static_cast<uint64_t>(un[i + j]) + vn[i] + c;
          un[i + j] = static_cast<uint32_t>(w);
          c = w >> 32;
        }
        un[j + n] = static_cast<uint32_t>(un[j + n] + c);
      }
      q[j] = static_cast<uint32_t>(qhat);
    }
    trim(q);
    r.assign(un.begin(), un.begin() + static_cast<long>(n));
    if (s) {
      for (size_t i = 0; i < r.size(); ++i) {
        uint32_t hi = (i + 1 < r.size()) ? r[i + 1] : 0;
        r[i] = static_cast<uint32_t>((r[i] >> s) | (static_cast<uint64_t>(hi) << (32 - s)));
      }
    }
    trim(r);
  }
};

inline std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace k3fm
