#pragma once

// Multivariate Laurent polynomials over Q with per-variable truncation windows.
//
// A LaurentPoly stores finitely many terms plus, per variable, a window
// [lo, hi]:
//   * hi is the validity bound: every coefficient whose exponent vector
//     satisfies e_v <= hi_v for all v is exact. hi = +inf means no
//     truncation ever happened in that variable.
//   * lo is a certified lower bound on the exponents of the *untruncated*
//     object (negative exponents are never truncated, so lo is exact
//     bookkeeping, not a validity limit).
// Windows combine under arithmetic:
//   add: lo = min(lo_a, lo_b), hi = min(hi_a, hi_b)
//   mul: lo = lo_a + lo_b,     hi = min(hi_a + lo_b, hi_b + lo_a)
// A variable absent from the window map has window [0, +inf] (its exponent
// is identically 0 as far as the certificate is concerned).
//
// Canonical term order is graded lexicographic on exponent vectors with
// variable order z1 < ... < zk < w1 < ... < wk; map iteration order equals
// serialization order.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wedgerep/rational.hpp"

namespace wedgerep {

enum class VarFamily : uint8_t { z = 0, w = 1 };

struct VarId {
  VarFamily family = VarFamily::z;
  int index = 1;  // 1-based

  friend bool operator==(const VarId&, const VarId&) = default;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId zvar(int i) { return VarId{VarFamily::z, i}; }
inline VarId wvar(int i) { return VarId{VarFamily::w, i}; }

inline std::string to_string(VarId v) {
  return (v.family == VarFamily::z ? "z" : "w") + std::to_string(v.index);
}

inline std::vector<VarId> zvars(int k) {
  std::vector<VarId> r;
  for (int i = 1; i <= k; ++i) r.push_back(zvar(i));
  return r;
}
inline std::vector<VarId> wvars(int k) {
  std::vector<VarId> r;
  for (int i = 1; i <= k; ++i) r.push_back(wvar(i));
  return r;
}

// Sparse exponent vector: sorted by VarId, no zero entries. The total degree
// is cached for the graded-lex comparison.
class ExpVec {
 public:
  ExpVec() = default;

  static ExpVec unit(VarId v, int e) {
    ExpVec r;
    if (e != 0) {
      r.e_.emplace_back(v, e);
      r.deg_ = e;
    }
    return r;
  }

  int get(VarId v) const {
    for (const auto& [var, e] : e_)
      if (var == v) return e;
    return 0;
  }

  bool empty() const { return e_.empty(); }
  const std::vector<std::pair<VarId, int>>& entries() const { return e_; }
  long total_degree() const { return deg_; }

  ExpVec operator+(const ExpVec& o) const {
    ExpVec r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
      if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
        r.e_.push_back(*a++);
      } else if (a == e_.end() || b->first < a->first) {
        r.e_.push_back(*b++);
      } else {
        int s = a->second + b->second;
        if (s != 0) r.e_.emplace_back(a->first, s);
        ++a;
        ++b;
      }
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  ExpVec operator-() const {
    ExpVec r = *this;
    for (auto& [var, e] : r.e_) e = -e;
    r.deg_ = -r.deg_;
    return r;
  }

  friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e_ == b.e_; }

  // Graded lex: total degree first, then variable-by-variable (missing = 0).
  friend bool operator<(const ExpVec& x, const ExpVec& y) {
    if (x.deg_ != y.deg_) return x.deg_ < y.deg_;
    auto a = x.e_.begin(), b = y.e_.begin();
    while (a != x.e_.end() || b != y.e_.end()) {
      VarId va = (a != x.e_.end()) ? a->first : b->first;
      VarId vb = (b != y.e_.end()) ? b->first : a->first;
      VarId v = std::min(va, vb);
      int ea = (a != x.e_.end() && a->first == v) ? a->second : 0;
      int eb = (b != y.e_.end() && b->first == v) ? b->second : 0;
      if (ea != eb) return ea < eb;
      if (a != x.e_.end() && a->first == v) ++a;
      if (b != y.e_.end() && b->first == v) ++b;
    }
    return false;
  }

 private:
  std::vector<std::pair<VarId, int>> e_;
  long deg_ = 0;
};

inline constexpr long kExpInf = std::numeric_limits<int>::max() / 2;

inline long sat_add(long a, long b) {
  if (a >= kExpInf || b >= kExpInf) return kExpInf;
  long s = a + b;
  return s >= kExpInf ? kExpInf : s;
}

struct VarWindow {
  long lo = 0;
  long hi = kExpInf;
  friend bool operator==(const VarWindow&, const VarWindow&) = default;
};

class Window {
 public:
  Window() = default;

  VarWindow at(VarId v) const {
    auto it = m_.find(v);
    return it == m_.end() ? VarWindow{} : it->second;
  }

  void set(VarId v, VarWindow b) {
    if (b == VarWindow{}) {
      m_.erase(v);
    } else {
      if (b.lo > 0) b.lo = 0;  // absent-variable terms always carry exponent 0
      m_[v] = b;
    }
  }

  const std::map<VarId, VarWindow>& entries() const { return m_; }

  bool admits(const ExpVec& e) const {
    for (const auto& [v, exp] : e.entries())
      if (exp > at(v).hi) return false;
    return true;
  }

  static Window combine_add(const Window& a, const Window& b) {
    Window r;
    for_union(a, b, [&](VarId v, VarWindow x, VarWindow y) {
      r.set(v, VarWindow{std::min(x.lo, y.lo), std::min(x.hi, y.hi)});
    });
    return r;
  }

  static Window combine_mul(const Window& a, const Window& b) {
    Window r;
    for_union(a, b, [&](VarId v, VarWindow x, VarWindow y) {
      r.set(v, VarWindow{sat_add(x.lo, y.lo),
                         std::min(sat_add(x.hi, y.lo), sat_add(y.hi, x.lo))});
    });
    return r;
  }

  // Intersection used for equality checks: compare only where both are valid.
  static Window intersect(const Window& a, const Window& b) {
    Window r;
    for_union(a, b, [&](VarId v, VarWindow x, VarWindow y) {
      r.set(v, VarWindow{std::min(x.lo, y.lo), std::min(x.hi, y.hi)});
    });
    return r;
  }

  bool fully_exact() const {
    for (const auto& [v, b] : m_)
      if (b.hi < kExpInf) return false;
    return true;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [v, b] : m_) {
      if (!first) s += ", ";
      first = false;
      s += to_string(v) + ":[" + std::to_string(b.lo) + "," +
           (b.hi >= kExpInf ? std::string("inf") : std::to_string(b.hi)) + "]";
    }
    return s + "}";
  }

 private:
  template <class F>
  static void for_union(const Window& a, const Window& b, F&& f) {
    auto ia = a.m_.begin();
    auto ib = b.m_.begin();
    while (ia != a.m_.end() || ib != b.m_.end()) {
      if (ib == b.m_.end() || (ia != a.m_.end() && ia->first < ib->first)) {
        f(ia->first, ia->second, VarWindow{});
        ++ia;
      } else if (ia == a.m_.end() || ib->first < ia->first) {
        f(ib->first, VarWindow{}, ib->second);
        ++ib;
      } else {
        f(ia->first, ia->second, ib->second);
        ++ia;
        ++ib;
      }
    }
  }

  std::map<VarId, VarWindow> m_;
};

// Thrown when a coefficient is requested outside the validity window: the
// value there is unknown (truncated away), not zero.
class WindowError : public std::runtime_error {
 public:
  explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return constant(Rational(1)); }
  static LaurentPoly constant(const Rational& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[ExpVec{}] = c;
    return p;
  }
  static LaurentPoly monomial(const ExpVec& e, const Rational& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[e] = c;
    p.tighten_lo();
    return p;
  }
  static LaurentPoly var_pow(VarId v, int e, const Rational& c = Rational(1)) {
    return monomial(ExpVec::unit(v, e), c);
  }

  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  const Window& window() const { return window_; }
  bool is_zero() const { return terms_.empty(); }

  // Exact coefficient; zero if absent; WindowError outside the window.
  Rational coefficient(const ExpVec& e) const {
    if (!window_.admits(e))
      throw WindowError("coefficient at " + debug_expvec(e) +
                        " lies outside validity window " + window_.str());
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    Window nw = Window::combine_add(window_, o.window_);
    const bool shrunk = !(nw.entries() == window_.entries());
    window_ = std::move(nw);
    for (const auto& [e, c] : o.terms_) {
      if (!window_.admits(e)) continue;
      auto [it, fresh] = terms_.emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    if (shrunk) drop_outside_window();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a += -b;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.window_ = Window::combine_mul(a.window_, b.window_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        ExpVec e = ea + eb;
        if (!r.window_.admits(e)) continue;
        auto [it, fresh] = r.terms_.emplace(e, ca * cb);
        if (!fresh) {
          it->second += ca * cb;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero()) {
      r.window_ = window_;
      return r;
    }
    r = *this;
    for (auto& [e, v] : r.terms_) v = v * c;
    return r;
  }

  // Imposes hi_v := min(hi_v, hi) for the given variable and drops the terms
  // that fall outside.
  LaurentPoly truncated_hi(VarId v, long hi) const {
    LaurentPoly r = *this;
    VarWindow b = r.window_.at(v);
    b.hi = std::min(b.hi, hi);
    b.lo = std::min(b.lo, b.hi);
    r.window_.set(v, b);
    r.drop_outside_window();
    return r;
  }

  LaurentPoly truncated_to(const Window& w) const {
    LaurentPoly r = *this;
    r.window_ = Window::intersect(r.window_, w);
    r.drop_outside_window();
    return r;
  }

  // Structural equality of canonical forms (terms and windows).
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_ && a.window_.entries() == b.window_.entries();
  }

  std::string str() const;

  static std::string debug_expvec(const ExpVec& e) {
    if (e.empty()) return "1";
    std::string s;
    for (const auto& [v, exp] : e.entries()) {
      if (!s.empty()) s += "*";
      s += to_string(v);
      if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s;
  }

 private:
  void drop_outside_window() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (!window_.admits(it->first))
        it = terms_.erase(it);
      else
        ++it;
    }
    tighten_lo();
  }

  // For fully exact values the support itself is the best certificate.
  void tighten_lo() {
    if (!window_.fully_exact()) return;
    std::map<VarId, long> lo;
    for (const auto& [v, b] : window_.entries()) lo[v] = 0;
    for (const auto& [e, c] : terms_)
      for (const auto& [v, exp] : e.entries()) {
        auto [it, fresh] = lo.emplace(v, std::min(0, exp));
        if (!fresh) it->second = std::min(it->second, (long)exp);
      }
    Window w;
    for (const auto& [v, l] : lo) w.set(v, VarWindow{std::min(l, 0L), kExpInf});
    window_ = w;
  }

  std::map<ExpVec, Rational> terms_;
  Window window_;
};

struct WindowedEq {
  bool equal = true;
  Window window;  // the box actually compared
};

// Compares two values on the intersection of their windows and reports which
// box was checked. Prevents claiming identities beyond the computed order.
inline WindowedEq compare_on_common_window(const LaurentPoly& a, const LaurentPoly& b) {
  Window w = Window::intersect(a.window(), b.window());
  WindowedEq r{true, w};
  LaurentPoly ta = a.truncated_to(w), tb = b.truncated_to(w);
  r.equal = ta.terms() == tb.terms();
  return r;
}

inline std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string coef = c.str();
    bool neg = !coef.empty() && coef[0] == '-';
    if (neg) coef = coef.substr(1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = debug_expvec(e);
    if (mono == "1") {
      s += coef;
    } else if (coef == "1") {
      s += mono;
    } else {
      s += coef + "*" + mono;
    }
  }
  return s;
}

// Inverts a power series with constant term 1 in the single variable `v`
// (non-negative exponents only), truncated at degree D.
inline LaurentPoly lp_invert_unit(const LaurentPoly& a, VarId v, long D) {
  if (a.coefficient(ExpVec{}) != Rational(1))
    throw std::invalid_argument("lp_invert_unit: constant term must be 1");
  std::vector<Rational> c(static_cast<size_t>(D) + 1);
  for (const auto& [e, q] : a.terms()) {
    if (e.entries().size() > 1 ||
        (e.entries().size() == 1 && e.entries()[0].first != v))
      throw std::invalid_argument("lp_invert_unit: not univariate in " + to_string(v));
    int exp = e.get(v);
    if (exp < 0)
      throw std::invalid_argument("lp_invert_unit: negative exponent");
    if (exp <= D) c[exp] = q;
  }
  std::vector<Rational> inv(static_cast<size_t>(D) + 1);
  inv[0] = Rational(1);
  for (long n = 1; n <= D; ++n) {
    Rational s(0);
    for (long i = 1; i <= n; ++i) s += c[i] * inv[n - i];
    inv[n] = -s;
  }
  LaurentPoly r;
  for (long n = 0; n <= D; ++n)
    r += LaurentPoly::var_pow(v, static_cast<int>(n), inv[n]);
  return r.truncated_hi(v, D);
}

// Exact division f / d. The divisor's graded-lex leading term is cancelled
// repeatedly; terminates iff the division is exact (the quotient has finitely
// many terms), otherwise throws after a step guard.
inline LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& d,
                                long max_steps = 1 << 20) {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (!f.window().fully_exact() || !d.window().fully_exact())
    throw std::invalid_argument("divide_exact: operands must be exact (no truncation)");
  LaurentPoly rem = f, q;
  const auto& dlead = *d.terms().rbegin();
  while (!rem.is_zero()) {
    if (--max_steps < 0)
      throw std::logic_error("divide_exact: division does not terminate (inexact)");
    const auto& rlead = *rem.terms().rbegin();
    LaurentPoly t = LaurentPoly::monomial(rlead.first + (-dlead.first),
                                          rlead.second / dlead.second);
    q += t;
    rem -= t * d;
  }
  return q;
}

}  // namespace wedgerep
