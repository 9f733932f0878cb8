#pragma once

// Exact rational numbers over GMP. Values are always in canonical form:
// reduced fraction, denominator > 0.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wedgerep {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  // Parses "p" or "p/q".
  explicit Rational(const std::string& s) {
    if (v_.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  // Canonical decimal string, "p" or "p/q" with q > 1.
  std::string str() const { return v_.get_str(); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational rat_neg(const Rational& a) { return -a; }
inline Rational rat_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace wedgerep
