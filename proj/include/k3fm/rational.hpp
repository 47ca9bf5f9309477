#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "k3fm/bigint.hpp"

namespace k3fm {

/// Exact rational number; denominator kept positive and coprime to the numerator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // implicit: integers embed
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }

  /// Exact integer value; only call when is_integer().
  const BigInt& as_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: " + to_string() + " is not an integer");
    return num_;
  }

  BigInt floor() const { return BigInt::floordiv(num_, den_); }

  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, already_reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const {
    return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
  }

 private:
  struct already_reduced {};
  Rational(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace k3fm
