#pragma once

// Symmetric polynomials in finitely many variables (or their formal
// inverses): elementary, complete, power sums, Vandermonde, and Schur
// polynomials via the bialternant quotient. The alternant layout puts the
// highest powers in the bottom row, so the quotient by the Vandermonde is
// sign-consistent.

#include <functional>
#include <stdexcept>
#include <vector>

#include "wedgerep/laurent.hpp"
#include "wedgerep/partition.hpp"

namespace wedgerep {

struct VarSet {
  VarFamily family = VarFamily::z;
  bool inverted = false;
  int k = 1;

  VarId var(int i) const { return VarId{family, i}; }
  int exp_sign() const { return inverted ? -1 : 1; }
  std::vector<VarId> vars() const {
    std::vector<VarId> v;
    for (int i = 1; i <= k; ++i) v.push_back(var(i));
    return v;
  }
};

inline VarSet zset(int k, bool inverted = false) {
  return VarSet{VarFamily::z, inverted, k};
}
inline VarSet wset(int k, bool inverted = false) {
  return VarSet{VarFamily::w, inverted, k};
}

// e_i over the k variables; e_0 = 1, e_i = 0 for i > k.
inline LaurentPoly elementary(int i, const VarSet& vs) {
  if (i < 0) throw std::invalid_argument("elementary: negative degree");
  if (i > vs.k) return LaurentPoly::zero();
  LaurentPoly r;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next, int left) -> void {
    if (left == 0) {
      ExpVec e;
      for (int v : pick) e = e + ExpVec::unit(vs.var(v), vs.exp_sign());
      r += LaurentPoly::monomial(e, Rational(1));
      return;
    }
    for (int v = next; v <= vs.k - left + 1; ++v) {
      pick.push_back(v);
      self(self, v + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 1, i);
  return r;
}

// h_i over the k variables; h_0 = 1.
inline LaurentPoly complete(int i, const VarSet& vs) {
  if (i < 0) throw std::invalid_argument("complete: negative degree");
  LaurentPoly r;
  std::vector<int> mult(static_cast<size_t>(vs.k) + 1, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == vs.k) {
      mult[v] = left;
      ExpVec e;
      for (int t = 1; t <= vs.k; ++t)
        e = e + ExpVec::unit(vs.var(t), vs.exp_sign() * mult[t]);
      r += LaurentPoly::monomial(e, Rational(1));
      return;
    }
    for (int m = 0; m <= left; ++m) {
      mult[v] = m;
      self(self, v + 1, left - m);
    }
  };
  if (vs.k == 0) return i == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  rec(rec, 1, i);
  return r;
}

inline LaurentPoly power_sum(int i, const VarSet& vs) {
  if (i < 1) throw std::invalid_argument("power_sum: degree must be >= 1");
  LaurentPoly r;
  for (int v = 1; v <= vs.k; ++v)
    r += LaurentPoly::var_pow(vs.var(v), vs.exp_sign() * i);
  return r;
}

// Vandermonde prod_{i<j} (x_j - x_i) in the given (possibly inverted) vars.
inline LaurentPoly vandermonde(const VarSet& vs) {
  LaurentPoly r = LaurentPoly::one();
  for (int i = 1; i <= vs.k; ++i)
    for (int j = i + 1; j <= vs.k; ++j)
      r *= LaurentPoly::var_pow(vs.var(j), vs.exp_sign()) -
           LaurentPoly::var_pow(vs.var(i), vs.exp_sign());
  return r;
}

// Alternant det(x_j^{lambda_{k-i+1}+i-1}): row i carries exponent
// lambda_{k-i+1}+i-1, bottom row the highest powers.
inline LaurentPoly alternant(const Partition& lambda, const VarSet& vs) {
  if (length(lambda) > vs.k)
    throw std::invalid_argument("alternant: length(lambda) > k");
  const int k = vs.k;
  std::vector<int> rowexp(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) rowexp[i - 1] = part(lambda, k - i + 1) + i - 1;
  LaurentPoly r;
  std::vector<int> perm(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) perm[i] = i;
  // Leibniz over column permutations; k stays tiny here.
  do {
    int sign = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    ExpVec e;
    for (int i = 0; i < k; ++i)
      e = e + ExpVec::unit(vs.var(perm[i] + 1), vs.exp_sign() * rowexp[i]);
    r += LaurentPoly::monomial(e, Rational(sign));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

// Schur polynomial s_lambda as the exact bialternant quotient.
inline LaurentPoly schur(const Partition& lambda, const VarSet& vs) {
  if (length(lambda) > vs.k)
    throw std::invalid_argument("schur: length(lambda) > k");
  if (vs.k == 0) return LaurentPoly::one();
  return divide_exact(alternant(lambda, vs), vandermonde(vs));
}

struct IdentityWitness {
  bool holds = false;
  LaurentPoly lhs, rhs;
};

// e_i(x_k)/(x_1...x_k) = e_{k-i}(x_k^{-1})
inline IdentityWitness ei_reciprocal(int i, int k) {
  if (i < 0 || i > k) throw std::invalid_argument("ei_reciprocal: need 0 <= i <= k");
  VarSet plain = zset(k), inv = zset(k, true);
  ExpVec all_inv;
  for (int v = 1; v <= k; ++v) all_inv = all_inv + ExpVec::unit(zvar(v), -1);
  IdentityWitness w;
  w.lhs = elementary(i, plain) * LaurentPoly::monomial(all_inv, Rational(1));
  w.rhs = elementary(k - i, inv);
  w.holds = compare_on_common_window(w.lhs, w.rhs).equal;
  return w;
}

}  // namespace wedgerep
