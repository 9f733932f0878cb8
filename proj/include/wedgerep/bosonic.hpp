#pragma once

// The polynomial ring B_r = Q[e_1,...,e_r] with LaurentPoly coefficients,
// the h_j sequence (inverse series of E_r(z)), Schur determinants and their
// substituted variants, the Schur-basis decomposition, the basis isomorphism
// B_r ≅ ∧^r V, and the B_r-module structure of ∧^r V (e_i acts as "raise i
// distinct slots", h_i as "raise slots by a total of i").
//
// Canonical internal form is the e-monomial basis; the Schur form is a view
// computed by a weight-graded linear solve (the transition matrix is
// invertible weight by weight).

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wedgerep/exterior.hpp"
#include "wedgerep/laurent.hpp"
#include "wedgerep/partition.hpp"
#include "wedgerep/schubert.hpp"
#include "wedgerep/symfun.hpp"

namespace wedgerep {

// Exponent vector over e_1..e_r, trimmed (no trailing zeros).
using EMono = std::vector<int>;

inline int emono_weight(const EMono& a) {
  int w = 0;
  for (size_t i = 0; i < a.size(); ++i) w += static_cast<int>(i + 1) * a[i];
  return w;
}

struct EMonoOrder {
  bool operator()(const EMono& a, const EMono& b) const {
    int wa = emono_weight(a), wb = emono_weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
  }
};

class BrElement {
 public:
  explicit BrElement(int rank = 0) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("BrElement: negative rank");
  }

  static BrElement zero(int r) { return BrElement(r); }
  static BrElement one(int r) { return constant(r, Rational(1)); }
  static BrElement constant(int r, const Rational& c) {
    return term(r, EMono{}, LaurentPoly::constant(c));
  }
  static BrElement constant(int r, const LaurentPoly& c) {
    return term(r, EMono{}, c);
  }
  static BrElement e(int r, int i) {
    if (i < 1 || i > r) throw std::invalid_argument("BrElement::e: index out of range");
    EMono m(static_cast<size_t>(i), 0);
    m[static_cast<size_t>(i) - 1] = 1;
    return term(r, std::move(m), LaurentPoly::one());
  }
  static BrElement term(int r, EMono m, LaurentPoly c) {
    BrElement x(r);
    trim(m);
    if (static_cast<int>(m.size()) > r)
      throw std::invalid_argument("BrElement: exponent beyond e_r");
    if (!c.is_zero()) x.terms_.emplace(std::move(m), std::move(c));
    return x;
  }

  int rank() const { return rank_; }
  const std::map<EMono, LaurentPoly, EMonoOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly coefficient(EMono m) const {
    trim(m);
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentPoly::zero() : it->second;
  }

  void add_term(EMono m, const LaurentPoly& c) {
    trim(m);
    if (static_cast<int>(m.size()) > rank_)
      throw std::invalid_argument("BrElement: exponent beyond e_r");
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BrElement operator-() const {
    BrElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  BrElement& operator+=(const BrElement& o) {
    check_ranks(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BrElement& operator-=(const BrElement& o) { return *this += -o; }
  friend BrElement operator+(BrElement a, const BrElement& b) { return a += b; }
  friend BrElement operator-(BrElement a, const BrElement& b) { return a += -b; }
  friend BrElement operator*(const BrElement& a, const BrElement& b) {
    check_ranks(a, b);
    BrElement r(a.rank_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        EMono m(std::max(ma.size(), mb.size()), 0);
        for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        r.add_term(std::move(m), ca * cb);
      }
    }
    return r;
  }
  BrElement& operator*=(const BrElement& o) { return *this = *this * o; }

  BrElement scaled(const LaurentPoly& c) const {
    BrElement r(rank_);
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }
  BrElement scaled(const Rational& c) const {
    BrElement r(rank_);
    for (const auto& [m, v] : terms_) r.add_term(m, v.scaled(c));
    return r;
  }

  BrElement truncated_hi(VarId v, long hi) const {
    BrElement r(rank_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.truncated_hi(v, hi));
    return r;
  }

  friend bool operator==(const BrElement& a, const BrElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string mono;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "e" + std::to_string(i + 1);
        if (m[i] != 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) mono = "1";
      bool simple = c.terms().size() == 1 && c.terms().begin()->first.empty();
      std::string coef = simple ? c.terms().begin()->second.str() : "(" + c.str() + ")";
      if (coef == "1" && mono != "1") s += mono;
      else if (mono == "1") s += coef;
      else s += coef + "*" + mono;
    }
    return s;
  }

 private:
  static void trim(EMono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int x : m)
      if (x < 0) throw std::invalid_argument("BrElement: negative e-exponent");
  }
  static void check_ranks(const BrElement& a, const BrElement& b) {
    if (a.rank_ != b.rank_)
      throw std::invalid_argument("BrElement: rank mismatch");
  }

  int rank_;
  std::map<EMono, LaurentPoly, EMonoOrder> terms_;
};

inline WindowedEq compare_on_common_window(const BrElement& a, const BrElement& b) {
  if (a.rank() != b.rank()) return {false, Window{}};
  Window w;
  for (const auto& [m, c] : a.terms()) w = Window::intersect(w, c.window());
  for (const auto& [m, c] : b.terms()) w = Window::intersect(w, c.window());
  WindowedEq r{true, w};
  std::vector<EMono> keys;
  for (const auto& [m, c] : a.terms()) keys.push_back(m);
  for (const auto& [m, c] : b.terms()) keys.push_back(m);
  for (const auto& m : keys) {
    LaurentPoly ca = a.coefficient(m).truncated_to(w);
    LaurentPoly cb = b.coefficient(m).truncated_to(w);
    if (!(ca.terms() == cb.terms())) {
      r.equal = false;
      break;
    }
  }
  return r;
}

// --- h sequence -------------------------------------------------------------

// h_j in B_r: coefficients of 1/E_r(z), via h_j = e_1 h_{j-1} - e_2 h_{j-2}
// + ... ; h_0 = 1, h_{j<0} = 0. Memoized (shared across threads).
inline BrElement h_poly(int r, int j) {
  if (j < 0) return BrElement::zero(r);
  static std::mutex mu;
  static std::map<std::pair<int, int>, BrElement> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({r, j});
  if (it != cache.end()) return it->second;
  std::vector<BrElement> h;
  h.push_back(BrElement::one(r));
  for (int n = 1; n <= j; ++n) {
    auto found = cache.find({r, n});
    if (found != cache.end()) {
      h.push_back(found->second);
      continue;
    }
    BrElement s = BrElement::zero(r);
    for (int i = 1; i <= std::min(n, r); ++i) {
      BrElement t = BrElement::e(r, i) * h[static_cast<size_t>(n - i)];
      s += (i % 2 == 1) ? t : -t;
    }
    h.push_back(s);
  }
  for (int n = 0; n <= j; ++n) cache.insert({{r, n}, h[static_cast<size_t>(n)]});
  return h[static_cast<size_t>(j)];
}

// E_r(v) = 1 - e_1 v + ... + (-1)^r e_r v^r, exact.
inline BrElement e_poly(int r, VarId v) {
  BrElement s = BrElement::one(r);
  for (int i = 1; i <= r; ++i) {
    BrElement t = BrElement::e(r, i).scaled(LaurentPoly::var_pow(v, i));
    s += (i % 2 == 1) ? -t : t;
  }
  return s;
}

// 1/E_r(v) = sum_{m>=0} h_m v^m, truncated at degree D (window [0, D]).
inline BrElement inv_e_series(int r, VarId v, long D) {
  BrElement s(r);
  for (long m = 0; m <= D; ++m)
    s += h_poly(r, static_cast<int>(m)).scaled(LaurentPoly::var_pow(v, static_cast<int>(m)));
  return s.truncated_hi(v, D);
}

// --- Schur determinants ------------------------------------------------------

template <class Ring>
Ring det_cofactor(const std::vector<std::vector<Ring>>& m, const Ring& one) {
  const size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  Ring acc = one - one;  // zero of the ring
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Ring>> minor;
    minor.reserve(n - 1);
    for (size_t a = 0; a < n; ++a) {
      if (a == i) continue;
      std::vector<Ring> row;
      row.reserve(n - 1);
      for (size_t b = 1; b < n; ++b) row.push_back(m[a][b]);
      minor.push_back(std::move(row));
    }
    Ring term = m[i][0] * det_cofactor(minor, one);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Delta_lambda(H_r) = det(h_{lambda_j - j + i})_{1<=i,j<=r}. Memoized.
inline BrElement schur_det(const Partition& lambda, int r) {
  if (length(lambda) > r)
    throw std::invalid_argument("schur_det: length(lambda) > r");
  if (r == 0) return BrElement::one(0);
  static std::mutex mu;
  static std::map<std::pair<int, Partition>, BrElement> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({r, lambda});
    if (it != cache.end()) return it->second;
  }
  std::vector<std::vector<BrElement>> m(static_cast<size_t>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      m[static_cast<size_t>(i - 1)].push_back(h_poly(r, part(lambda, j) - j + i));
  BrElement d = det_cofactor(m, BrElement::one(r));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(r, lambda), std::move(d)).first->second;
}

// --- substituted determinants -----------------------------------------------

// A substitution sends the h-sequence index j to a transformed entry (a
// BrElement, usually with Laurent coefficients). Every substitution used
// here maps h_0 -> 1 and h_{j<0} -> 0, which makes the substituted
// determinant independent of the matrix size (any size >= length(lambda)).
using HSubst = std::function<BrElement(int)>;

inline HSubst hsub_identity(int rank) {
  return [rank](int j) { return h_poly(rank, j); };
}

inline VarSet varset_of(const std::vector<VarId>& vars, bool inverted) {
  if (vars.empty()) return VarSet{VarFamily::z, inverted, 0};
  VarSet vs{vars[0].family, inverted, static_cast<int>(vars.size())};
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].family != vs.family || vars[i].index != static_cast<int>(i + 1))
      throw std::invalid_argument("varset_of: variables must be x_1..x_k of one family");
  return vs;
}

// sigma_minus(x_k) h_j = sum_{m>=0} h_m(x_k^{-1}) h_{j-m}
inline HSubst hsub_sigma_minus(int rank, const std::vector<VarId>& vars) {
  VarSet vs = varset_of(vars, true);
  return [rank, vs](int j) {
    BrElement s(rank);
    for (int m = 0; m <= std::max(j, 0); ++m)
      s += h_poly(rank, j - m).scaled(complete(m, vs));
    return s;
  };
}

// sigma_minus_bar(x_k) h_j = sum_{i=0..k} (-1)^i e_i(x_k^{-1}) h_{j-i}
inline HSubst hsub_sigma_minus_bar(int rank, const std::vector<VarId>& vars) {
  VarSet vs = varset_of(vars, true);
  return [rank, vs](int j) {
    BrElement s(rank);
    for (int i = 0; i <= vs.k; ++i) {
      BrElement t = h_poly(rank, j - i).scaled(elementary(i, vs));
      s += (i % 2 == 0) ? t : -t;
    }
    return s;
  };
}

// det(T(h_{lambda_j - j + i})) of the given size (>= length(lambda); the
// value is size-stable for the substitutions used here). size < 0 means
// "length(lambda)".
inline BrElement schur_det_substituted(const Partition& lambda, int rank,
                                       const HSubst& sub, int size = -1) {
  if (size < 0) size = length(lambda);
  if (size < length(lambda))
    throw std::invalid_argument("schur_det_substituted: size < length(lambda)");
  if (size == 0) return BrElement::one(rank);
  std::vector<std::vector<BrElement>> m(static_cast<size_t>(size));
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j)
      m[static_cast<size_t>(i - 1)].push_back(sub(part(lambda, j) - j + i));
  return det_cofactor(m, BrElement::one(rank));
}

// The substitution-commutes-with-evaluation identity only holds for
// length(lambda) <= r; this wrapper enforces that precondition.
inline BrElement schur_det_transformed(const Partition& lambda, int r,
                                       const HSubst& sub) {
  if (length(lambda) > r)
    throw std::invalid_argument(
        "schur_det_transformed: length(lambda) > r; substitution and "
        "evaluation do not commute there (the substituted determinant is "
        "generally nonzero while the transformed element vanishes)");
  return schur_det_substituted(lambda, r, sub, r);
}

// sigma_minus(z) h_j and sigma_minus_bar(z) h_j as displayed finite Laurent
// expansions over B_r.
inline BrElement sigma_minus_h(int r, int j, VarId var) {
  return hsub_sigma_minus(r, {var})(j);
}
inline BrElement sigma_minus_bar_h(int r, int j, VarId var) {
  return hsub_sigma_minus_bar(r, {var})(j);
}

// --- Schur-basis decomposition ----------------------------------------------

namespace detail {

struct WeightBlock {
  std::vector<EMono> emonos;        // canonical order
  std::vector<Partition> mus;       // canonical order
  std::vector<std::vector<Rational>> inv;  // maps emono coords -> schur coords
};

inline std::vector<EMono> emonos_of_weight(int r, int d) {
  std::vector<EMono> out;
  EMono cur(static_cast<size_t>(r), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == r) {
      if (left == 0) {
        EMono m = cur;
        while (!m.empty() && m.back() == 0) m.pop_back();
        out.push_back(m);
      }
      return;
    }
    for (int a = 0; a * (i + 1) <= left; ++a) {
      cur[static_cast<size_t>(i)] = a;
      self(self, i + 1, left - a * (i + 1));
      cur[static_cast<size_t>(i)] = 0;
    }
  };
  if (r == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), EMonoOrder{});
  return out;
}

inline std::vector<std::vector<Rational>> invert_matrix(
    std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("invert_matrix: singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline const WeightBlock& weight_block(int r, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, WeightBlock> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({r, d});
  if (it != cache.end()) return it->second;
  WeightBlock b;
  b.emonos = emonos_of_weight(r, d);
  for (const auto& mu_ : enumerate_partitions(r, d))
    if (weight(mu_) == d) b.mus.push_back(mu_);
  if (b.mus.size() != b.emonos.size())
    throw std::logic_error("weight_block: basis size mismatch");
  const size_t n = b.mus.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (size_t j = 0; j < n; ++j) {
    BrElement d_mu = schur_det(b.mus[j], r);
    for (size_t i = 0; i < n; ++i)
      m[i][j] = d_mu.coefficient(b.emonos[i]).coefficient(ExpVec{});
  }
  b.inv = invert_matrix(std::move(m));
  return cache.emplace(std::make_pair(r, d), std::move(b)).first->second;
}

}  // namespace detail

// Unique expansion of x over the Schur determinants {Delta_mu(H_r)}.
inline std::map<Partition, LaurentPoly> schur_basis_decompose(const BrElement& x) {
  std::map<Partition, LaurentPoly> out;
  std::map<int, std::vector<std::pair<EMono, LaurentPoly>>> by_weight;
  for (const auto& [m, c] : x.terms())
    by_weight[emono_weight(m)].emplace_back(m, c);
  for (const auto& [d, terms] : by_weight) {
    const auto& blk = detail::weight_block(x.rank(), d);
    std::vector<LaurentPoly> coords(blk.emonos.size());
    for (const auto& [m, c] : terms) {
      auto pos = std::lower_bound(blk.emonos.begin(), blk.emonos.end(), m,
                                  EMonoOrder{});
      coords[static_cast<size_t>(pos - blk.emonos.begin())] = c;
    }
    for (size_t j = 0; j < blk.mus.size(); ++j) {
      LaurentPoly c;
      for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero() || blk.inv[j][i].is_zero()) continue;
        c += coords[i].scaled(blk.inv[j][i]);
      }
      if (!c.is_zero()) out[blk.mus[j]] = c;
    }
  }
  return out;
}

// --- basis isomorphism and module structure ----------------------------------

// Delta_lambda(H_r) -> [b]^r_lambda, extended linearly.
inline ExtElement bf_iso(const BrElement& x) {
  ExtElement u;
  for (const auto& [mu, c] : schur_basis_decompose(x))
    u += basis_monomial(x.rank(), mu).scaled(c);
  return u;
}

// Inverse: requires u homogeneous of degree r.
inline BrElement bf_iso_inv(const ExtElement& u, int r) {
  int d = 0;
  if (!u.is_homogeneous(&d))
    throw std::invalid_argument("bf_iso_inv: inhomogeneous input");
  if (!u.is_zero() && d != r)
    throw std::invalid_argument("bf_iso_inv: degree != r");
  BrElement x(r);
  for (const auto& [m, c] : u.terms()) {
    auto [rr, lambda] = partition_from_indices(m);
    x += schur_det(lambda, r).scaled(c);
  }
  return x;
}

// The action of x on u in the B_r-module structure of ∧^r V.
inline ExtElement module_action(const BrElement& x, const ExtElement& u) {
  int d = 0;
  if (!u.is_homogeneous(&d))
    throw std::invalid_argument("module_action: inhomogeneous input");
  if (!u.is_zero() && d != x.rank())
    throw std::invalid_argument("module_action: degree != rank");
  ExtElement out;
  for (const auto& [m, c] : x.terms()) {
    ExtElement v = u;
    for (size_t i = 0; i < m.size(); ++i)
      for (int rep = 0; rep < m[i]; ++rep)
        v = raise_slots_component(static_cast<int>(i + 1), v);
    out += v.scaled(c);
  }
  return out;
}

// --- series identities over B_r ----------------------------------------------

struct BrWitness {
  bool holds = false;
  Window window;
};

// prod_j 1/E_k(z_j) = sum_mu s_mu(z_k) Delta_mu(H_k), compared on the box
// [0, D]^k.
inline BrWitness cauchy_expand(int k, long D) {
  BrElement lhs = BrElement::one(k);
  for (int j = 1; j <= k; ++j) lhs *= inv_e_series(k, zvar(j), D);
  BrElement rhs(k);
  for (const auto& mu : enumerate_partitions(k, static_cast<int>(D) * k))
    rhs += schur_det(mu, k).scaled(schur(mu, zset(k)));
  for (int j = 1; j <= k; ++j) rhs = rhs.truncated_hi(zvar(j), D);
  auto eq = compare_on_common_window(lhs, rhs);
  return {eq.equal, eq.window};
}

// x_j = [z^j] log(1/E_r(z)) for j = 1..D. (Equivalently p_j/j in the
// universal roots of E_r; Newton's identities are the test oracle.)
inline std::vector<BrElement> newton_vars(int r, long D) {
  VarId t = zvar(1);
  BrElement s = inv_e_series(r, t, D) - BrElement::one(r);  // valuation >= 1
  BrElement log_s(r), power = s;
  Rational sign(1);
  for (long n = 1; n <= D; ++n) {
    log_s += power.scaled(sign / Rational(n));
    power = (power * s).truncated_hi(t, D);
    sign = -sign;
  }
  std::vector<BrElement> xs;
  for (long j = 1; j <= D; ++j) {
    BrElement xj(r);
    for (const auto& [m, c] : log_s.terms()) {
      Rational q = c.coefficient(ExpVec::unit(t, static_cast<int>(j)));
      if (!q.is_zero()) xj.add_term(m, LaurentPoly::constant(q));
    }
    xs.push_back(std::move(xj));
  }
  return xs;
}

}  // namespace wedgerep
