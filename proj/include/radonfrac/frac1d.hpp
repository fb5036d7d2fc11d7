#pragma once

#include <functional>
#include <string>

#include "radonfrac/gamma.hpp"
#include "radonfrac/grid.hpp"

namespace radonfrac {

// complex order with its analytic-continuation level:
// smallest nonnegative integer level with Re(alpha) + level > 0
struct FracOrder {
	cd alpha;
	int level = 0;

	FracOrder(cd a) : alpha(a), level(minimal_level(a)) {}
	FracOrder(cd a, int lvl) : alpha(a), level(lvl)
	{
		if (a.real() + lvl <= 0)
			throw std::invalid_argument("FracOrder: Re(alpha) + level must be > 0");
	}
	static int minimal_level(cd a)
	{
		int l = 0;
		while (a.real() + l <= 0)
			++l;
		return l;
	}
};

enum class Side { Plus, Minus };

struct Signal {
	Grid1D grid;
	std::vector<cd> values;
	// optional analytic derivative provider: samples of the order-th
	// derivative on the same grid (order >= 1)
	std::function<std::vector<cd>(int order)> deriv;
	std::vector<std::string> warnings;

	double sup() const
	{
		double m = 0.0;
		for (auto& v : values)
			m = std::max(m, std::abs(v));
		return m;
	}
};

// kappa_l(a) = int_0^infty (1 - e^{-v})^l v^{-a-1} dv, 0 < a < l
double kappa(int l, double a);

// lambda_{l,a}(eta), eta > 0
double lambda_kernel(int l, double a, double eta);

// int_0^infty lambda_{l,a}, quadrature + asymptotic tail (should be 1)
double lambda_kernel_mass(int l, double a);

// Riemann-Liouville integral I^alpha_{+/-}, Re alpha > 0, by product
// integration (exact cell moments of tau^{alpha-1} against the piecewise
// linear interpolant). The signal is treated as 0 beyond the grid; a
// boundary magnitude > 1e-12 (relative) on the incoming side attaches a
// truncation warning, > 1e-6 throws.
Signal rl_integral(const Signal& w, FracOrder alpha, Side side);

// analytic continuation: I^alpha = (+/-1)^l I^{alpha+l} d^l/dt^l,
// derivatives from the signal's provider or spectral differentiation
Signal rl_continued(const Signal& w, FracOrder alpha, Side side);

// truncated Marchaud derivative D^a_{+,eps}, a > 0, l > a, eps a multiple of h
Signal marchaud_truncated(const Signal& phi, double a, double eps, int l);

// Richardson extrapolation of marchaud_truncated at eps = {h, 2h, 4h}
// eliminating the eps^(l-a) and eps^(l+1-a) error terms; stability of the
// single-step extrapolants is reported through the returned signal's warnings
Signal marchaud_extrapolated(const Signal& phi, double a, int l);

// (-i tau)^{-alpha} for Side::Plus, (+i tau)^{-alpha} for Side::Minus
cd fourier_symbol(cd alpha, double tau, Side side = Side::Plus);

// exact moment int_a^b t^p dt (p = -1 handled by the log form)
cd power_moment(cd p, double a, double b);

} // namespace radonfrac
