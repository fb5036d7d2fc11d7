#pragma once

#include <complex>

namespace radonfrac {

using cd = std::complex<double>;

// Complex gamma function, Lanczos approximation (g=7, 9 coefficients),
// reflection formula for Re z < 1/2.
cd cgamma(cd z);

// log|Gamma(z)| without overflow for large |Im z|.
double log_abs_gamma(cd z);

// Surface area of S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

double binomial(int n, int k);

constexpr double PI = 3.14159265358979323846;

} // namespace radonfrac
