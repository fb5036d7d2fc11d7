#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonfrac/frac1d.hpp"
#include "radonfrac/gamma.hpp"
#include "radonfrac/quad.hpp"

using namespace radonfrac;

namespace {

Signal gaussian_signal(const Grid1D& g)
{
	Signal s;
	s.grid = g;
	s.values.resize(g.count);
	for (int k = 0; k < g.count; ++k) {
		double t = g.node(k);
		s.values[k] = std::exp(-t * t);
	}
	return s;
}

double sup_diff(const Signal& a, const Signal& b)
{
	double m = 0.0;
	for (std::size_t k = 0; k < a.values.size(); ++k)
		m = std::max(m, std::abs(a.values[k] - b.values[k]));
	return m;
}

} // namespace

TEST_CASE("normalizing constants of the difference kernel")
{
	// kappa_1(1/2) = 2 sqrt(pi); kappa_2(1) = 2 log 2;
	// kappa_2(1/2) = 2 sqrt(pi) (2 - sqrt(2))
	CHECK(std::abs(kappa(1, 0.5) - 2.0 * std::sqrt(PI)) < 1e-10);
	CHECK(std::abs(kappa(2, 1.0) - 2.0 * std::log(2.0)) < 1e-10);
	CHECK(std::abs(kappa(2, 0.5) -
	               2.0 * std::sqrt(PI) * (2.0 - std::sqrt(2.0))) < 1e-10);
	CHECK_THROWS_AS(kappa(1, 1.5), std::exception);
}

TEST_CASE("kernel mass and decay")
{
	CHECK(std::abs(lambda_kernel_mass(1, 0.5) - 1.0) < 1e-8);
	CHECK(std::abs(lambda_kernel_mass(2, 0.5) - 1.0) < 1e-8);
	CHECK(std::abs(lambda_kernel_mass(2, 1.0) - 1.0) < 1e-8);
	// far-field decay eta^{-1-a}
	CHECK(std::abs(lambda_kernel(1, 0.5, 10.0)) < 0.5 * std::pow(10.0, -1.5));
}

TEST_CASE("half integral of the unit step")
{
	// I^{1/2} 1_{[0,inf)}(t) = 2 sqrt(t/pi)
	Grid1D g(-1.0, 3.0, 4096);
	Signal s;
	s.grid = g;
	s.values.resize(g.count);
	for (int k = 0; k < g.count; ++k)
		s.values[k] = g.node(k) >= 0.0 ? 1.0 : 0.0;
	Signal out = rl_integral(s, cd(0.5), Side::Plus);
	int k1 = (int)std::lround((1.0 - g.lo) / g.h());
	CHECK(std::abs(out.values[k1] - 2.0 / std::sqrt(PI)) < 1e-3);
}

TEST_CASE("full integral of the gaussian")
{
	Signal s = gaussian_signal(Grid1D(-8.0, 8.0, 4096));
	Signal out = rl_integral(s, cd(1.0), Side::Plus);
	int k0 = 2048;  // t = g.lo + k h; node at t ~ 0
	double t0 = s.grid.node(k0);
	double want = 0.5 * std::sqrt(PI) * (1.0 + std::erf(t0));
	CHECK(std::abs(out.values[k0] - want) < 1e-6);
}

TEST_CASE("semigroup on a short grid")
{
	Signal s = gaussian_signal(Grid1D(-8.0, 8.0, 4096));
	Signal a = rl_integral(rl_integral(s, cd(0.25), Side::Plus), cd(0.25),
	                       Side::Plus);
	Signal b = rl_integral(s, cd(0.5), Side::Plus);
	CHECK(sup_diff(a, b) / b.sup() < 5e-6);
}

TEST_CASE("boundary policy")
{
	// nonvanishing incoming boundary is rejected
	Grid1D g(0.5, 4.0, 512);
	Signal s;
	s.grid = g;
	s.values.assign(g.count, 1.0);
	CHECK_THROWS_AS(rl_integral(s, cd(0.5), Side::Plus), std::exception);
}

TEST_CASE("analytic continuation to negative orders")
{
	Grid1D g(-8.0, 8.0, 8192);
	Signal s = gaussian_signal(g);
	s.deriv = [g](int order) {
		std::vector<cd> d(g.count);
		for (int k = 0; k < g.count; ++k) {
			double t = g.node(k);
			double e = std::exp(-t * t);
			d[k] = (order == 1) ? -2.0 * t * e
			                    : (4.0 * t * t - 2.0) * e;
		}
		return d;
	};

	// I^0 with one continuation level is the identity (up to the h^2
	// trapezoid-order residual of the product rule)
	Signal id0 = rl_continued(s, FracOrder(cd(0.0), 1), Side::Plus);
	CHECK(sup_diff(id0, s) < 1e-5);

	// I^{-1} = d/dt, evaluated at the node nearest t = 1
	Signal d1 = rl_continued(s, FracOrder(cd(-1.0), 2), Side::Plus);
	int k1 = (int)std::lround((1.0 - g.lo) / g.h());
	double t1 = g.node(k1);
	double dwant = -2.0 * t1 * std::exp(-t1 * t1);
	CHECK(std::abs(d1.values[k1] - dwant) < 1e-5);

	// and without the derivative provider (spectral differentiation)
	Signal plain = gaussian_signal(g);
	Signal d2 = rl_continued(plain, FracOrder(cd(-1.0), 2), Side::Plus);
	CHECK(std::abs(d2.values[k1] - dwant) < 1e-5);

	// I^{-1/2} I^{1/2} = identity; the half integral needs its own
	// derivative provider (d/dt I^{1/2} g = I^{1/2} g') because its slow
	// right tail defeats spectral differentiation
	Signal half = rl_integral(gaussian_signal(g), cd(0.5), Side::Plus);
	half.deriv = [g](int order) {
		Signal dg;
		dg.grid = g;
		dg.values.resize(g.count);
		for (int k = 0; k < g.count; ++k) {
			double t = g.node(k);
			double e = std::exp(-t * t);
			dg.values[k] = (order == 1)
			                   ? -2.0 * t * e
			                   : (4.0 * t * t - 2.0) * e;
		}
		return rl_integral(dg, cd(0.5), Side::Plus).values;
	};
	Signal back = rl_continued(half, FracOrder(cd(-0.5), 1), Side::Plus);
	CHECK(sup_diff(back, gaussian_signal(g)) < 1e-4);
}

TEST_CASE("reflected side")
{
	Grid1D g(-8.0, 8.0, 4096);
	Signal s = gaussian_signal(g);
	Signal plus = rl_integral(s, cd(0.5), Side::Plus);
	Signal minus = rl_integral(s, cd(0.5), Side::Minus);
	// even input: I_- is the reflection of I_+
	for (int k = 0; k < g.count; ++k)
		CHECK(std::abs(minus.values[k] -
		               plus.values[g.count - 1 - k]) < 1e-10);
}

TEST_CASE("fourier symbols")
{
	CHECK(std::abs(fourier_symbol(cd(1.0), 1.0, Side::Plus) - cd(0.0, 1.0)) <
	      1e-14);
	CHECK(std::abs(fourier_symbol(cd(1.0), 1.0, Side::Minus) -
	               cd(0.0, -1.0)) < 1e-14);
	cd a1(0.3, 0.1), a2(0.4, -0.2);
	cd prod = fourier_symbol(a1, 2.3) * fourier_symbol(a2, 2.3);
	CHECK(std::abs(prod - fourier_symbol(a1 + a2, 2.3)) < 1e-13);
	CHECK_THROWS_AS(fourier_symbol(cd(0.5), 0.0), std::exception);
}

TEST_CASE("truncated marchaud derivative as a kernel average")
{
	// D^a_{+,eps} I^a g (x) = int_0^inf lambda_{l,a}(eta) g(x - eps eta) deta
	Grid1D g(-10.0, 10.0, 8192);
	Signal base = gaussian_signal(g);
	Signal phi = rl_integral(base, cd(0.5), Side::Plus);
	const double eps = 0.25;
	int steps = (int)std::lround(eps / g.h());
	Signal d = marchaud_truncated(phi, 0.5, steps * g.h(), 1);
	int kx = (int)std::lround((0.7 - g.lo) / g.h());
	const double x = g.node(kx);

	// right-hand side by quadrature, eta = u^2 to absorb the eta^{-1/2}
	// behavior at the origin
	std::vector<double> xs, ws;
	double rhs = 0.0;
	double left = 0.0;
	while (left < 8.0) {
		double right = std::min(8.0, left + 0.5);
		gauss_legendre(32, left, right, xs, ws);
		for (std::size_t i = 0; i < xs.size(); ++i) {
			double eta = xs[i] * xs[i];
			rhs += ws[i] * 2.0 * xs[i] * lambda_kernel(1, 0.5, eta) *
			       std::exp(-(x - eps * eta) * (x - eps * eta));
		}
		left = right;
	}
	CHECK(std::abs(d.values[kx] - rhs) < 1e-3);
}

TEST_CASE("extrapolated marchaud inverts the half integral")
{
	Grid1D g(-8.0, 8.0, 4096);
	Signal base = gaussian_signal(g);
	Signal phi = rl_integral(base, cd(0.5), Side::Plus);
	Signal d = marchaud_extrapolated(phi, 0.5, 1);
	CHECK(sup_diff(d, base) < 1e-3);
	Signal d2 = marchaud_extrapolated(phi, 0.5, 2);
	CHECK(sup_diff(d2, base) < 1e-3);
}

TEST_CASE("power moments")
{
	CHECK(std::abs(power_moment(cd(-1.0), 1.0, 2.0) - cd(std::log(2.0))) <
	      1e-14);
	CHECK(std::abs(power_moment(cd(2.0), 1.0, 2.0) - cd(7.0 / 3.0)) <
	      1e-14);
	cd p(0.5, 0.3);
	cd want = (std::pow(cd(2.0), p + 1.0) - cd(1.0)) / (p + 1.0);
	CHECK(std::abs(power_moment(p, 1.0, 2.0) - want) < 1e-13);
}

TEST_CASE("order bookkeeping")
{
	CHECK(FracOrder(cd(0.5)).level == 0);
	CHECK(FracOrder(cd(0.0)).level == 1);
	CHECK(FracOrder(cd(-1.2)).level == 2);
	CHECK(FracOrder(cd(-0.5, 3.0)).level == 1);
	CHECK_THROWS_AS(FracOrder(cd(-1.0), 1), std::exception);
}
