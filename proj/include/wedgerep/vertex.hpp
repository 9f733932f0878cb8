#pragma once

// Vertex operators on the exterior algebra and the gl(∧^k V)-action on B_r.
//
//   gamma(z_k)      [b]^r_λ = σ₊(z_k) σ̄₋(z_k) [b]^{r+k}_λ        (degree +k)
//   gamma_star(w_k) [b]^r_λ = (σ̄₊(w_k) Δ_λ(σ₋(w_k) H_{r-k})) [b]^{r-k}_0
//                                                                 (degree -k)
// gamma_star is computed through the B_{r-k}-module route (multiplication by
// ∏_j E_{r-k}(w_j) after the determinant substitution); the generalized
// row-of-covectors determinant is an independent second route used by tests,
// related by  diagram * ∏_j w_j^{r-1}  =  module_route * Δ₀(w_k).
//
// action_direct evaluates ([b]^k_μ ⊗ [β]^k_ν) Δ_λ(H_r) by plain multilinear
// algebra (contract, wedge, basis isomorphism) in exact rational arithmetic;
// it is the oracle every generating-function expansion is checked against:
//
//   vertex form:      ∏_j (z_j/w_j)^{r-k} · gamma(z_k) gamma_star(w_k) [b]^r_λ
//   determinant form: ∏_j (z_j/w_j)^{r-k} · (∏_j w_j^{r-1}/Δ₀(w_k)) ·
//                     ∏_j E_r(z_j)^{-1} · det(mixed w-rows / σ̄₋(z_k)H_r rows)
//   power-sum form:   determinant form with ∏ E_r(z_j)^{-1} replaced by
//                     exp(Σ_j x_j p_j(z_k)),  where exp(Σ x_j z^j) = 1/E_r(z).
//
// The coefficient of s_μ(z_k) s_ν(w_k^{-1}) is read off by multiplying by
// both Vandermonde determinants and extracting a single monomial.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedgerep/bosonic.hpp"
#include "wedgerep/exterior.hpp"
#include "wedgerep/laurent.hpp"
#include "wedgerep/partition.hpp"
#include "wedgerep/schubert.hpp"
#include "wedgerep/symfun.hpp"

namespace wedgerep {

struct ActionQuery {
  int k = 0;
  int r = 0;
  Partition lambda, mu, nu;
  long trunc = 6;
};

inline void validate_query(const ActionQuery& q) {
  if (q.k < 0 || q.r < 0 || q.trunc < 0)
    throw std::invalid_argument("ActionQuery: k, r, trunc must be >= 0");
  if (length(q.lambda) > q.r)
    throw std::invalid_argument("ActionQuery: length(lambda) > r");
  if (length(q.mu) > q.k || length(q.nu) > q.k)
    throw std::invalid_argument("ActionQuery: length(mu/nu) > k");
}

// ([b]^k_mu ⊗ [β]^k_nu) Δ_λ(H_r) via contraction then wedge; zero for k > r.
inline BrElement action_direct(const ActionQuery& q) {
  validate_query(q);
  if (q.k > q.r) return BrElement::zero(q.r);
  ExtElement u = basis_monomial(q.r, q.lambda);
  ExtElement contracted = contract_dual(indices_from_partition(q.k, q.nu), u);
  ExtElement out = wedge(basis_monomial(q.k, q.mu), contracted);
  return bf_iso_inv(out, q.r);
}

// gamma(z_k): reindex each basis term from rank d to rank d+k, then
// σ̄₋(z_k) (exact), then σ₊(z_k) (window D). Q[w,w^{-1}]-linear.
inline ExtElement gamma(const std::vector<VarId>& zv, long trunc,
                        const ExtElement& u) {
  const int k = static_cast<int>(zv.size());
  ExtElement lifted;
  for (const auto& [m, c] : u.terms()) {
    auto [d, lambda] = partition_from_indices(m);
    lifted += basis_monomial(d + k, lambda).scaled(c);
  }
  if (k == 0) return lifted;
  return sigma_plus_multi(zv, trunc, sigma_minus_bar_multi(zv, lifted));
}

// gamma_star(w_k) through the module route; exact. Terms of degree < k die.
inline ExtElement gamma_star(const std::vector<VarId>& wv, const ExtElement& u) {
  const int k = static_cast<int>(wv.size());
  ExtElement out;
  for (const auto& [m, c] : u.terms()) {
    auto [d, lambda] = partition_from_indices(m);
    if (k > d) continue;
    const int n = d - k;
    BrElement det = schur_det_substituted(lambda, n, hsub_sigma_minus(n, wv));
    BrElement pref = BrElement::one(n);
    for (const auto& w : wv) pref *= e_poly(n, w);
    out += module_action(pref * det, basis_monomial(n, Partition{})).scaled(c);
  }
  return out;
}

// Independent route: the (k rows of w-powers / one row of vectors)
// determinant, Laplace-expanded along the scalar rows. For the basis term
// [b]^r_λ with column exponents q_j = r - j + λ_j:
//   Σ_{|S|=k} (-1)^{Σ(j_a - a)} det(w_i^{-q_{j_a}})_{i,a} · (wedge of the rest)
inline ExtElement gamma_star_diagram(const std::vector<VarId>& wv, int r,
                                     const Partition& lambda) {
  const int k = static_cast<int>(wv.size());
  if (k > r) return ExtElement::zero();
  IndexSeq full = indices_from_partition(r, lambda);
  ExtElement out;
  std::vector<int> subset;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(subset.size()) == k) {
      int sgn = 0;
      for (int a = 0; a < k; ++a) sgn += subset[static_cast<size_t>(a)] - a;
      std::vector<std::vector<LaurentPoly>> minor(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i)
        for (int a = 0; a < k; ++a)
          minor[static_cast<size_t>(i)].push_back(LaurentPoly::var_pow(
              wv[static_cast<size_t>(i)],
              -full[static_cast<size_t>(subset[static_cast<size_t>(a)])]));
      LaurentPoly d = det_cofactor(minor, LaurentPoly::one());
      IndexSeq rest;
      for (int t = 0; t < r; ++t)
        if (std::find(subset.begin(), subset.end(), t) == subset.end())
          rest.push_back(full[static_cast<size_t>(t)]);
      out.add_term(std::move(rest), (sgn % 2 == 0) ? d : -d);
      return;
    }
    for (int t = from; t <= r - (k - static_cast<int>(subset.size())); ++t) {
      subset.push_back(t);
      self(self, t + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct ExpandedAction {
  int k = 0;
  int r = 0;
  Partition lambda;
  long trunc = 0;
  BrElement value{0};  // B_r-valued Laurent polynomial in z_1..z_k, w_1..w_k
};

// ∏_j (z_j/w_j)^{r-k} as a Laurent monomial.
inline LaurentPoly ratio_prefactor(int k, int r) {
  ExpVec e;
  for (int j = 1; j <= k; ++j) {
    e = e + ExpVec::unit(zvar(j), r - k);
    e = e + ExpVec::unit(wvar(j), -(r - k));
  }
  return LaurentPoly::monomial(e, Rational(1));
}

// First closed form: prefactor * gamma(z_k) gamma_star(w_k) [b]^r_λ,
// converted to B_r through the basis isomorphism.
inline ExpandedAction action_vertex_form(int k, int r, const Partition& lambda,
                                         long D) {
  validate_query(ActionQuery{k, r, lambda, {}, {}, D});
  ExpandedAction res{k, r, lambda, D, BrElement::zero(r)};
  if (k > r) return res;
  ExtElement g =
      gamma(zvars(k), D, gamma_star(wvars(k), basis_monomial(r, lambda)));
  res.value = bf_iso_inv(g, r).scaled(ratio_prefactor(k, r));
  return res;
}

namespace detail {

// (∏_j w_j^{r-1} / Δ₀(w_k)) · det(M) where M has k rows of w-powers
// w_i^{-(r-j+λ_j)} over r-k rows of σ̄₋(z_k)-transformed h's from H_r.
// Exact in every variable (the Vandermonde division happens before any
// truncated factor enters; the determinant alternates in the w-rows).
inline BrElement mixed_determinant_normalized(int k, int r,
                                              const Partition& lambda) {
  HSubst sub = k == 0 ? hsub_identity(r) : hsub_sigma_minus_bar(r, zvars(k));
  std::vector<std::vector<BrElement>> m(static_cast<size_t>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (i <= k)
        m[static_cast<size_t>(i - 1)].push_back(BrElement::constant(
            r, LaurentPoly::var_pow(wvar(i), -(r - j + part(lambda, j)))));
      else
        m[static_cast<size_t>(i - 1)].push_back(sub(part(lambda, j) - j + i));
    }
  BrElement det = r == 0 ? BrElement::one(0) : det_cofactor(m, BrElement::one(r));
  LaurentPoly vdm = vandermonde(wset(k));
  BrElement quotient(r);
  for (const auto& [mono, c] : det.terms())
    quotient.add_term(mono, divide_exact(c, vdm));
  ExpVec wpref;
  for (int j = 1; j <= k; ++j) wpref = wpref + ExpVec::unit(wvar(j), r - 1);
  return quotient.scaled(LaurentPoly::monomial(wpref, Rational(1)));
}

}  // namespace detail

// Second closed form (deformed Giambelli determinant).
inline ExpandedAction action_determinant_form(int k, int r,
                                              const Partition& lambda, long D) {
  validate_query(ActionQuery{k, r, lambda, {}, {}, D});
  ExpandedAction res{k, r, lambda, D, BrElement::zero(r)};
  if (k > r) return res;
  BrElement value = detail::mixed_determinant_normalized(k, r, lambda);
  for (int j = 1; j <= k; ++j) value *= inv_e_series(r, zvar(j), D);
  res.value = value.scaled(ratio_prefactor(k, r));
  return res;
}

// exp(Σ_{j>=1} x_j p_j(z_k)) truncated to the box [.., D]^k, where
// exp(Σ_j x_j z^j) = 1/E_r(z) defines the x_j.
inline BrElement exp_power_sums(int r, int k, long D) {
  BrElement total = BrElement::one(r);
  if (k == 0) return total;
  BrElement arg(r);
  std::vector<BrElement> xs = newton_vars(r, D);
  for (long j = 1; j <= D; ++j)
    arg += xs[static_cast<size_t>(j - 1)].scaled(
        power_sum(static_cast<int>(j), zset(k)));
  for (int j = 1; j <= k; ++j) {
    arg = arg.truncated_hi(zvar(j), D);
    total = total.truncated_hi(zvar(j), D);
  }
  BrElement power = total;
  Rational fact(1);
  for (long n = 1; n <= D * k; ++n) {
    power = power * arg;
    if (power.is_zero()) break;
    fact *= Rational(n);
    total += power.scaled(Rational(1) / fact);
  }
  return total;
}

// Third closed form: determinant form with the power-sum exponential.
inline ExpandedAction action_power_sum_form(int k, int r, const Partition& lambda,
                                            long D) {
  validate_query(ActionQuery{k, r, lambda, {}, {}, D});
  ExpandedAction res{k, r, lambda, D, BrElement::zero(r)};
  if (k > r) return res;
  BrElement value =
      detail::mixed_determinant_normalized(k, r, lambda) * exp_power_sums(r, k, D);
  res.value = value.scaled(ratio_prefactor(k, r));
  return res;
}

// Reads the coefficient of s_mu(z_k) s_nu(w_k^{-1}): multiply by both
// Vandermonde determinants and take the coefficient of
// z_1^{k-1+mu_1}...z_k^{mu_k} w_1^{-k+1-nu_1}...w_k^{-nu_k}.
// Refuses (WindowError) when the target lies outside the validity window.
inline BrElement extract_action_coeff(const ExpandedAction& ea, const Partition& mu,
                                      const Partition& nu) {
  const int k = ea.k;
  if (length(mu) > k || length(nu) > k)
    throw std::invalid_argument("extract_action_coeff: length(mu/nu) > k");
  BrElement p = ea.value;
  if (k > 0) p = p.scaled(vandermonde(zset(k)) * vandermonde(wset(k, true)));
  ExpVec target;
  for (int i = 1; i <= k; ++i) {
    target = target + ExpVec::unit(zvar(i), k - i + part(mu, i));
    target = target + ExpVec::unit(wvar(i), -(k - i) - part(nu, i));
  }
  BrElement out(ea.r);
  for (const auto& [m, c] : p.terms()) {
    Rational q;
    try {
      q = c.coefficient(target);
    } catch (const WindowError& e) {
      throw WindowError(std::string(e.what()) +
                        " -- increase trunc (need D >= k-1+mu_1+(r-k)+1 = " +
                        std::to_string(k - 1 + part(mu, 1) + (ea.r - k) + 1) +
                        ")");
    }
    if (!q.is_zero()) out.add_term(m, LaurentPoly::constant(q));
  }
  return out;
}

}  // namespace wedgerep
