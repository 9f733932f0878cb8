// Dev scratch 2: window interpretation of the gamma-product reduction.
#include <iostream>

#include "wedgerep/vertex.hpp"

using namespace wedgerep;

int main() {
  // Compare gamma gamma_star vs the four-operator composite inside the box
  // {z_j <= D, w_j <= wcap} for various wcap.
  for (int k = 1; k <= 2; ++k) {
    for (int r = k; r <= 4 && r <= k + 2; ++r) {
      for (const auto& lam : enumerate_partitions(r, 3)) {
        long D = 4;
        ExtElement lhs = gamma(zvars(k), D, gamma_star(wvars(k), basis_monomial(r, lam)));
        ExtElement rhs = sigma_plus_multi(
            zvars(k), D,
            sigma_minus_bar_multi(
                zvars(k),
                sigma_plus_bar_multi(
                    wvars(k), sigma_minus_multi(wvars(k), basis_monomial(r, lam)))));
        ExtElement diff = lhs - rhs;
        // find, per w-cap, whether the difference vanishes
        std::string caps;
        for (long wcap = 0; wcap <= r; ++wcap) {
          bool zero = true;
          for (const auto& [m, c] : diff.terms()) {
            LaurentPoly t = c;
            for (int j = 1; j <= k; ++j) {
              t = t.truncated_hi(zvar(j), D);
              t = t.truncated_hi(wvar(j), wcap);
            }
            if (!t.is_zero()) { zero = false; break; }
          }
          caps += zero ? '1' : '0';
        }
        std::cout << "k=" << k << " r=" << r << " lam=" << partition_str(lam)
                  << " len<=r-k:" << (length(lam) <= r - k)
                  << " equal-by-wcap[0.." << r << "]=" << caps << "\n";
      }
    }
  }
  return 0;
}
