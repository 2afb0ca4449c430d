#pragma once

// Characteristic classes of the genus-0 and genus-1 universal surface
// bundles, and the Riemann-Roch dimension table for powers of the
// canonical bundle.
//
// The vertical Euler class of the universal sphere bundle is fixed as +z;
// every value exported here is independent of that sign.

#include <cstdint>

#include "spinsurf/polynomial.hpp"

namespace spinsurf {

/// kappa_n of the unit sphere bundle of an oriented 3-plane bundle V, in
/// p1 = p1(V): kappa_{2k} = 2 p1^k, odd classes vanish. Computed by
/// kappa_{n+2} = p1 kappa_n from kappa_0 = 2, kappa_1 = 0.
IntPolynomial sphere_kappa(int n);
IntPolynomial sphere_kappa_closed(int n);

/// kappa_n of the projective bundle P(W), W a complex 2-plane bundle:
/// 2 (c1^2 - 4 c2)^k for n = 2k, zero for odd n.
IntPolynomial proj_bundle_kappa(int n);

/// kappa_n of the universal spin sphere bundle over HP^infinity:
/// (-1)^m 2^{2m+1} u^m for n = 2m, zero for odd n.
IntPolynomial hp_infinity_kappa(int n);

/// Power-sum recursion lambda_n + c2 lambda_{n-2} - c3 lambda_{n-3} = 0 over
/// the integers, seeds lambda_1 = 0, lambda_2 = -2 c2, lambda_3 = 3 c3.
/// lambda_0 is the index-bundle rank 2.
IntPolynomial sphere_lambda_integral(int n);

/// sphere_lambda_integral reduced modulo 2 c3 = 0.
QuotientedPolynomial sphere_lambda(int n);

/// lambda_n - kappa_n in Z[c2, c3]/(2 c3), with p1 mapped to -c2.
QuotientedPolynomial lambda_kappa_difference(int n);

/// kappa_n pulled into the quotient ring via p1 -> -c2.
QuotientedPolynomial sphere_kappa_in_quotient(int n);

/// Torus bundles: every kappa_n is zero; lambda_n = (-1)^n (1 - 2^n) u^n.
BigInt torus_kappa(int n);
IntPolynomial torus_lambda(int n);

struct RiemannRochDim {
  int genus = 0;
  int power = 0;
  std::int64_t dimension = 0;
};

/// dim ker of the Cauchy-Riemann operator on the m-th power of the
/// canonical bundle of a genus-g surface. Rows m = 0 and m = 1 win for every
/// genus; then the genus-specific rows. For g = 0, m <= 0 this is
/// h^0(O(-2m)) = 1 - 2m.
RiemannRochDim riemann_roch_dim(int g, int m);

/// dim ker(m) - dim ker(1 - m) == (2m - 1)(g - 1).
bool serre_duality_check(int g, int m);

/// Checks that overlapping rows of the table agree for 0 <= g <= max_genus.
bool riemann_roch_rows_consistent(int max_genus = 10);

}  // namespace spinsurf
