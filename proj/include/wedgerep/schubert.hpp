#pragma once

// Schubert derivations on the exterior algebra: the four Hasse-Schmidt
// derivations generated by the index shifts b_j -> b_{j±1}, their
// multivariate products, component operators, the generic
// exp(sum delta(phi^i) z^i / i) construction, and transposes on the dual.
//
// All four act factor-wise on wedge monomials (the HS property). sigma_plus
// is a genuine power series and needs a truncation order; the other three
// are exact:
//   sigma_plus(z)      b_j = sum_{i>=0} b_{j+i} z^i        (truncated at D)
//   sigma_plus_bar(z)  b_j = b_j - b_{j+1} z
//   sigma_minus(z)     b_j = sum_{i=0..j} b_{j-i} z^{-i}
//   sigma_minus_bar(z) b_j = b_j - b_{j-1} z^{-1}          (b_{-1} = 0)

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wedgerep/exterior.hpp"
#include "wedgerep/laurent.hpp"

namespace wedgerep {

enum class SchubertKind { sigma_plus, sigma_plus_bar, sigma_minus, sigma_minus_bar };

struct SchubertOp {
  SchubertKind kind = SchubertKind::sigma_plus;
  std::vector<VarId> vars;
  long trunc = -1;  // required for sigma_plus only
};

// One term of a per-factor image: coeff * var^exponent * basis(index).
struct FactorTerm {
  int index;
  int exponent;
  Rational coeff;
};

// Applies a per-factor expansion to every wedge factor and multiplies out
// (the HS property). `degree_cap` prunes branches whose summed exponent in
// `var` exceeds it and records the truncation in the coefficient windows;
// pass kExpInf for exact operators.
template <class Tag, class FactorFn>
Multi<Tag> hs_factorwise(const Multi<Tag>& u, VarId var, long degree_cap,
                         FactorFn&& factor) {
  Multi<Tag> out;
  for (const auto& [mono, coeff] : u.terms()) {
    std::vector<std::vector<FactorTerm>> images;
    images.reserve(mono.size());
    for (int idx : mono) images.push_back(factor(idx));

    struct Partial {
      IndexSeq indices;
      long degree;
      Rational c;
    };
    std::vector<Partial> acc{{IndexSeq{}, 0, Rational(1)}};
    for (const auto& opts : images) {
      std::vector<Partial> next;
      next.reserve(acc.size() * opts.size());
      for (const auto& p : acc) {
        for (const auto& t : opts) {
          long nd = p.degree + t.exponent;
          if (degree_cap < kExpInf && nd > degree_cap) continue;
          Partial q;
          q.indices = p.indices;
          q.indices.push_back(t.index);
          q.degree = nd;
          q.c = p.c * t.coeff;
          next.push_back(std::move(q));
        }
      }
      acc = std::move(next);
    }
    for (auto& p : acc) {
      LaurentPoly c =
          coeff * LaurentPoly::var_pow(var, static_cast<int>(p.degree), p.c);
      if (degree_cap < kExpInf) c = c.truncated_hi(var, degree_cap);
      out.add_term(std::move(p.indices), std::move(c));
    }
  }
  return out;
}

inline ExtElement sigma_plus(VarId var, long trunc, const ExtElement& u) {
  if (trunc < 0) throw std::invalid_argument("sigma_plus: truncation order required");
  return hs_factorwise(u, var, trunc, [&](int j) {
    std::vector<FactorTerm> v;
    for (int i = 0; i <= trunc; ++i) v.push_back({j + i, i, Rational(1)});
    return v;
  });
}

inline ExtElement sigma_plus_bar(VarId var, const ExtElement& u) {
  return hs_factorwise(u, var, kExpInf, [&](int j) {
    return std::vector<FactorTerm>{{j, 0, Rational(1)}, {j + 1, 1, Rational(-1)}};
  });
}

inline ExtElement sigma_minus(VarId var, const ExtElement& u) {
  return hs_factorwise(u, var, kExpInf, [&](int j) {
    std::vector<FactorTerm> v;
    for (int i = 0; i <= j; ++i) v.push_back({j - i, -i, Rational(1)});
    return v;
  });
}

inline ExtElement sigma_minus_bar(VarId var, const ExtElement& u) {
  return hs_factorwise(u, var, kExpInf, [&](int j) {
    std::vector<FactorTerm> v{{j, 0, Rational(1)}};
    if (j >= 1) v.push_back({j - 1, -1, Rational(-1)});
    return v;
  });
}

// Multivariate product sigma(z_1)...sigma(z_k): the rightmost factor acts
// first. Same-sign factors commute, so the order is immaterial; the
// commutativity itself is a tested property, not an assumption here.
inline ExtElement apply(const SchubertOp& op, const ExtElement& u) {
  if (op.vars.empty()) throw std::invalid_argument("apply: no variables");
  ExtElement r = u;
  for (auto it = op.vars.rbegin(); it != op.vars.rend(); ++it) {
    switch (op.kind) {
      case SchubertKind::sigma_plus: r = sigma_plus(*it, op.trunc, r); break;
      case SchubertKind::sigma_plus_bar: r = sigma_plus_bar(*it, r); break;
      case SchubertKind::sigma_minus: r = sigma_minus(*it, r); break;
      case SchubertKind::sigma_minus_bar: r = sigma_minus_bar(*it, r); break;
    }
  }
  return r;
}

inline ExtElement sigma_plus_multi(const std::vector<VarId>& vars, long trunc,
                                   const ExtElement& u) {
  ExtElement r = u;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) r = sigma_plus(*it, trunc, r);
  return r;
}
inline ExtElement sigma_plus_bar_multi(const std::vector<VarId>& vars,
                                       const ExtElement& u) {
  ExtElement r = u;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) r = sigma_plus_bar(*it, r);
  return r;
}
inline ExtElement sigma_minus_multi(const std::vector<VarId>& vars, const ExtElement& u) {
  ExtElement r = u;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) r = sigma_minus(*it, r);
  return r;
}
inline ExtElement sigma_minus_bar_multi(const std::vector<VarId>& vars,
                                        const ExtElement& u) {
  ExtElement r = u;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) r = sigma_minus_bar(*it, r);
  return r;
}

// Component operators. With sigma_plus_bar(z) = sum_i (-1)^i sbar_i z^i and
// sigma_minus_bar(z) = sum_i (-1)^i sbar_{-i} z^{-i}, the alternating signs
// cancel against the per-slot minus signs: sbar_i raises i distinct slots by
// one, sbar_{-i} lowers i distinct slots by one (terms hitting index -1
// vanish). [z^i] sigma_plus(z) raises slots by a total of i with repeats.
inline ExtElement raise_slots_component(int i, const ExtElement& u) {
  ExtElement out;
  for (const auto& [mono, coeff] : u.terms()) {
    const int d = static_cast<int>(mono.size());
    if (i > d) continue;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int left) -> void {
      if (left == 0) {
        IndexSeq m = mono;
        for (int s : pick) m[static_cast<size_t>(s)] += 1;
        out.add_term(std::move(m), coeff);
        return;
      }
      for (int s = from; s <= d - left; ++s) {
        pick.push_back(s);
        self(self, s + 1, left - 1);
        pick.pop_back();
      }
    };
    rec(rec, 0, i);
  }
  return out;
}

inline ExtElement lower_slots_component(int i, const ExtElement& u) {
  ExtElement out;
  for (const auto& [mono, coeff] : u.terms()) {
    const int d = static_cast<int>(mono.size());
    if (i > d) continue;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int left) -> void {
      if (left == 0) {
        IndexSeq m = mono;
        bool dead = false;
        for (int s : pick) {
          if (m[static_cast<size_t>(s)] == 0) { dead = true; break; }
          m[static_cast<size_t>(s)] -= 1;
        }
        if (!dead) out.add_term(std::move(m), coeff);
        return;
      }
      for (int s = from; s <= d - left; ++s) {
        pick.push_back(s);
        self(self, s + 1, left - 1);
        pick.pop_back();
      }
    };
    rec(rec, 0, i);
  }
  return out;
}

inline ExtElement raise_total_component(int i, const ExtElement& u) {
  ExtElement out;
  for (const auto& [mono, coeff] : u.terms()) {
    const int d = static_cast<int>(mono.size());
    if (d == 0) {
      if (i == 0) out.add_term(IndexSeq{}, coeff);
      continue;
    }
    std::vector<int> inc(static_cast<size_t>(d), 0);
    auto rec = [&](auto&& self, int a, int left) -> void {
      if (a == d - 1) {
        inc[static_cast<size_t>(a)] = left;
        IndexSeq m = mono;
        for (int t = 0; t < d; ++t)
          m[static_cast<size_t>(t)] += inc[static_cast<size_t>(t)];
        out.add_term(std::move(m), coeff);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        inc[static_cast<size_t>(a)] = v;
        self(self, a + 1, left - v);
      }
    };
    rec(rec, 0, i);
  }
  return out;
}

// The V-endomorphism shifts (sigma_1 b_j = b_{j+1}, sigma_{-1} b_j = b_{j-1},
// b_{<0} = 0), on degree-1 elements.
inline ExtElement shift_endo(int s, const ExtElement& u) {
  ExtElement out;
  for (const auto& [m, c] : u.terms()) {
    if (m.size() != 1)
      throw std::invalid_argument("shift_endo: defined on V only");
    int j = m[0] + s;
    if (j >= 0) out.add_term(IndexSeq{j}, c);
  }
  return out;
}

// exp(sum_{i>=1} delta(phi^i) z^{dir*i} / i) applied to u, where delta is the
// even-derivation extension of gl(V) to the exterior algebra. phi_pow(i, j)
// returns phi^i(b_j) as an element of V. For dir = +1 the series is
// truncated at z-degree D; for dir = -1 local nilpotency makes it finite.
using PhiPower = std::function<ExtElement(int, int)>;

inline ExtElement hs_exp(const PhiPower& phi_pow, VarId var, int dir, long D,
                         const ExtElement& u) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("hs_exp: dir must be ±1");
  auto apply_T = [&](const ExtElement& v) {
    ExtElement out;
    for (long i = 1; i <= D; ++i) {
      ExtElement di;  // delta(phi^i) v
      for (const auto& [mono, coeff] : v.terms()) {
        for (size_t a = 0; a < mono.size(); ++a) {
          ExtElement img = phi_pow(static_cast<int>(i), mono[a]);
          for (const auto& [im, ic] : img.terms()) {
            if (im.size() != 1)
              throw std::invalid_argument("hs_exp: phi_pow must map V to V");
            IndexSeq m = mono;
            m[a] = im[0];
            di.add_term(std::move(m), coeff * ic);
          }
        }
      }
      out += di.scaled(LaurentPoly::var_pow(var, dir * static_cast<int>(i),
                                            Rational(1, i)));
    }
    if (dir > 0) {
      ExtElement capped;
      for (const auto& [m, c] : out.terms())
        capped.add_term(m, c.truncated_hi(var, D));
      return capped;
    }
    return out;
  };
  ExtElement total = u, power = u;
  Rational fact(1);
  const long nmax = dir > 0 ? D : (1L << 14);
  for (long n = 1; n <= nmax; ++n) {
    power = apply_T(power);
    if (power.is_zero()) break;
    fact *= Rational(n);
    total += power.scaled(Rational(1) / fact);
  }
  if (dir > 0) {
    ExtElement capped;
    for (const auto& [m, c] : total.terms())
      capped.add_term(m, c.truncated_hi(var, D));
    return capped;
  }
  return total;
}

// Transposes on the restricted dual, characterized by (D^T eta)(u) = eta(Du).
// They are again HS derivations and act factor-wise.
inline DualElement transpose_sigma_plus(VarId var, const DualElement& eta) {
  return hs_factorwise(eta, var, kExpInf, [&](int m) {
    std::vector<FactorTerm> v;
    for (int j = 0; j <= m; ++j) v.push_back({j, m - j, Rational(1)});
    return v;
  });
}

inline DualElement transpose_sigma_plus_bar(VarId var, const DualElement& eta) {
  return hs_factorwise(eta, var, kExpInf, [&](int m) {
    std::vector<FactorTerm> v{{m, 0, Rational(1)}};
    if (m >= 1) v.push_back({m - 1, 1, Rational(-1)});
    return v;
  });
}

// sigma_minus(w)^T beta_m = sum_{j>=m} w^{m-j} beta_j is an infinite series;
// dual indices are capped at max_index, which must dominate every index the
// caller pairs against.
inline DualElement transpose_sigma_minus(VarId var, const DualElement& eta,
                                         int max_index) {
  return hs_factorwise(eta, var, kExpInf, [&](int m) {
    std::vector<FactorTerm> v;
    for (int j = m; j <= max_index; ++j) v.push_back({j, m - j, Rational(1)});
    return v;
  });
}

inline DualElement transpose_sigma_minus_bar(VarId var, const DualElement& eta) {
  return hs_factorwise(eta, var, kExpInf, [&](int m) {
    return std::vector<FactorTerm>{{m, 0, Rational(1)}, {m + 1, -1, Rational(-1)}};
  });
}

}  // namespace wedgerep
