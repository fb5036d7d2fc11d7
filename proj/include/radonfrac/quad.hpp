#pragma once

#include <vector>

namespace radonfrac {

// Gauss-Legendre nodes/weights on [-1,1]
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// nodes/weights rescaled to [a,b]
void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w);

} // namespace radonfrac
