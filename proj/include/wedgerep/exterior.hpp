#pragma once

// Exterior algebra of V = ⊕_{i>=0} Q·b_i and its restricted dual.
//
// Monomials are strictly decreasing index sequences; the empty sequence is
// the unit of degree 0. Elements are finite linear combinations with
// LaurentPoly coefficients, so operator images (series in z, w) live in the
// same type. Primal and dual elements share the implementation and are kept
// apart by a tag type.
//
// Contraction by a wedge of covectors applies the first wedge factor first;
// this is the unique order for which contraction by a full-degree dual
// monomial reproduces the duality pairing, and it is frozen by tests.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedgerep/laurent.hpp"
#include "wedgerep/partition.hpp"

namespace wedgerep {

// Strictly decreasing non-negative indices.
using IndexSeq = std::vector<int>;

inline bool strictly_decreasing(const IndexSeq& m) {
  for (size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i] <= m[i + 1]) return false;
  return m.empty() || m.back() >= 0;
}

// Sorts into strictly decreasing order; returns 0 if an index repeats, else
// the sign of the sorting permutation.
inline int normalize_indices(IndexSeq& m) {
  int sign = 1;
  for (size_t i = 1; i < m.size(); ++i) {
    size_t j = i;
    while (j > 0 && m[j - 1] < m[j]) {
      std::swap(m[j - 1], m[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && m[j - 1] == m[j]) return 0;
  }
  return sign;
}

struct IndexSeqOrder {
  bool operator()(const IndexSeq& a, const IndexSeq& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// [b]^r_lambda = b_{r-1+l1} ^ b_{r-2+l2} ^ ... ^ b_{lr}
inline IndexSeq indices_from_partition(int r, const Partition& lambda) {
  if (length(lambda) > r)
    throw std::invalid_argument("indices_from_partition: length(lambda) > r");
  IndexSeq m(r);
  for (int j = 1; j <= r; ++j) m[j - 1] = r - j + part(lambda, j);
  return m;
}

// Inverse map: recovers (r, lambda) from a strictly decreasing sequence.
inline std::pair<int, Partition> partition_from_indices(const IndexSeq& m) {
  if (!strictly_decreasing(m))
    throw std::invalid_argument("partition_from_indices: not canonical");
  int r = static_cast<int>(m.size());
  Partition lambda;
  for (int j = 1; j <= r; ++j) {
    int v = m[j - 1] - (r - j);
    if (v < 0) throw std::logic_error("partition_from_indices: negative part");
    if (v > 0) lambda.push_back(v);
    else break;  // strictly decreasing indices force zeros afterwards
  }
  validate_partition(lambda);
  return {r, lambda};
}

struct PrimalTag {};
struct DualTag {};

template <class Tag>
class Multi {
 public:
  Multi() = default;

  static Multi zero() { return Multi(); }
  static Multi unit() { return term(IndexSeq{}, LaurentPoly::one()); }
  static Multi basis(int index) {
    return term(IndexSeq{index}, LaurentPoly::one());
  }
  static Multi term(IndexSeq m, LaurentPoly c) {
    Multi e;
    int s = normalize_indices(m);
    if (s == 0 || c.is_zero()) return e;
    if (s < 0) c = -c;
    e.terms_.emplace(std::move(m), std::move(c));
    return e;
  }

  const std::map<IndexSeq, LaurentPoly, IndexSeqOrder>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  bool is_homogeneous(int* degree_out = nullptr) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      if (d < 0) d = static_cast<int>(m.size());
      else if (d != static_cast<int>(m.size())) return false;
    }
    if (degree_out) *degree_out = (d < 0 ? 0 : d);
    return true;
  }

  int degree() const {
    int d = 0;
    if (!is_homogeneous(&d))
      throw std::invalid_argument("degree: element is not homogeneous");
    return d;
  }

  Multi operator-() const {
    Multi r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Multi& operator+=(const Multi& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Multi& operator-=(const Multi& o) { return *this += -o; }
  friend Multi operator+(Multi a, const Multi& b) { return a += b; }
  friend Multi operator-(Multi a, const Multi& b) { return a += -b; }

  Multi scaled(const LaurentPoly& c) const {
    Multi r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }
  Multi scaled(const Rational& c) const {
    Multi r;
    for (const auto& [m, v] : terms_) r.add_term(m, v.scaled(c));
    return r;
  }

  void add_term(IndexSeq m, LaurentPoly c) {
    int s = normalize_indices(m);
    if (s == 0) return;
    if (s < 0) c = -c;
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly coefficient(IndexSeq m) const {
    int s = normalize_indices(m);
    if (s == 0) return LaurentPoly::zero();
    auto it = terms_.find(m);
    if (it == terms_.end()) return LaurentPoly::zero();
    return s < 0 ? -it->second : it->second;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string mono;
      if (m.empty()) {
        mono = "1";
      } else {
        for (size_t i = 0; i < m.size(); ++i) {
          if (i) mono += "^";
          mono += (std::is_same_v<Tag, PrimalTag> ? "b" : "B") + std::to_string(m[i]);
        }
      }
      s += "(" + c.str() + ")*" + mono;
    }
    return s;
  }

 private:
  std::map<IndexSeq, LaurentPoly, IndexSeqOrder> terms_;
};

using ExtElement = Multi<PrimalTag>;
using DualElement = Multi<DualTag>;

template <class Tag>
WindowedEq compare_on_common_window(const Multi<Tag>& a, const Multi<Tag>& b) {
  Window w;
  for (const auto& [m, c] : a.terms()) w = Window::intersect(w, c.window());
  for (const auto& [m, c] : b.terms()) w = Window::intersect(w, c.window());
  WindowedEq r{true, w};
  std::vector<IndexSeq> keys;
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

template <class Tag>
Multi<Tag> wedge(const Multi<Tag>& a, const Multi<Tag>& b) {
  Multi<Tag> r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      IndexSeq m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

inline ExtElement basis_monomial(int r, const Partition& lambda) {
  return ExtElement::term(indices_from_partition(r, lambda), LaurentPoly::one());
}
inline DualElement dual_monomial(int r, const Partition& mu) {
  return DualElement::term(indices_from_partition(r, mu), LaurentPoly::one());
}

// Pairing of canonical strictly-decreasing monomials: det(beta_{i_a}(b_{j_b}))
// collapses to the Kronecker delta.
inline Rational pairing(const IndexSeq& dual, const IndexSeq& primal) {
  if (dual.size() != primal.size())
    throw std::invalid_argument("pairing: degree mismatch");
  return dual == primal ? Rational(1) : Rational(0);
}

// Bilinear extension; both elements must be homogeneous of equal degree.
inline LaurentPoly pairing(const DualElement& eta, const ExtElement& u) {
  int de = 0, du = 0;
  if (!eta.is_homogeneous(&de) || !u.is_homogeneous(&du))
    throw std::invalid_argument("pairing: inhomogeneous arguments");
  if (!eta.is_zero() && !u.is_zero() && de != du)
    throw std::invalid_argument("pairing: degree mismatch");
  LaurentPoly s;
  for (const auto& [m, c] : eta.terms()) {
    auto it = u.terms().find(m);
    if (it != u.terms().end()) s += c * it->second;
  }
  return s;
}

// beta_j ⌟ u: degree -1; on a monomial, sum over slots a (1-based) of
// (-1)^{a+1} beta_j(b_{i_a}) times the monomial with slot a removed.
inline ExtElement contract_covector(int j, const ExtElement& u) {
  ExtElement r;
  for (const auto& [m, c] : u.terms()) {
    for (size_t a = 0; a < m.size(); ++a) {
      if (m[a] != j) continue;
      IndexSeq rest;
      rest.reserve(m.size() - 1);
      for (size_t t = 0; t < m.size(); ++t)
        if (t != a) rest.push_back(m[t]);
      r.add_term(std::move(rest), (a % 2 == 0) ? c : -c);
      break;  // indices are distinct
    }
  }
  return r;
}

// beta(w^{-1}) ⌟ u = sum_j w^{-j} (beta_j ⌟ u); exact (finite on each monomial).
inline ExtElement contract_series(VarId wv, const ExtElement& u) {
  ExtElement r;
  for (const auto& [m, c] : u.terms()) {
    for (size_t a = 0; a < m.size(); ++a) {
      IndexSeq rest;
      rest.reserve(m.size() - 1);
      for (size_t t = 0; t < m.size(); ++t)
        if (t != a) rest.push_back(m[t]);
      LaurentPoly coef = c * LaurentPoly::var_pow(wv, -m[a]);
      r.add_term(std::move(rest), (a % 2 == 0) ? coef : -coef);
    }
  }
  return r;
}

// Contraction by a dual monomial (strictly decreasing indices): iterated
// single contractions, first index (= first wedge factor) first. For equal
// degrees this reproduces pairing().
inline ExtElement contract_dual(const IndexSeq& nu, const ExtElement& u) {
  ExtElement r = u;
  for (int idx : nu) {
    if (r.is_zero()) break;
    r = contract_covector(idx, r);
  }
  return r;
}

inline ExtElement contract_dual(const DualElement& eta, const ExtElement& u) {
  ExtElement r;
  for (const auto& [m, c] : eta.terms()) r += contract_dual(m, u).scaled(c);
  return r;
}

}  // namespace wedgerep
