#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonfrac/fracradon.hpp"
#include "radonfrac/gamma.hpp"

using namespace radonfrac;

namespace {

double rel_l2(const Signal& a, const Signal& b)
{
	double num = 0.0, den = 0.0;
	for (std::size_t k = 0; k < a.values.size(); ++k) {
		num += std::norm(a.values[k] - b.values[k]);
		den += std::norm(b.values[k]);
	}
	return std::sqrt(num / den);
}

} // namespace

TEST_CASE("full integral of the transversal image")
{
	// I^1 along x_n exhausts the mass: T_+^1 f (0, 8) ~ int Tf(0,.) = pi
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	double x[2] = {0.0, 8.0};
	cd v = t_plus(ff, cd(1.0), x);
	CHECK(std::abs(v - PI) < 1e-6);
}

TEST_CASE("order zero is the plain transform")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	const double xp = 0.4;
	Grid1D g(-16.0, 16.0, 2049);
	Signal t0 = t_plus_slice(ff, FracOrder(cd(0.0), 1), &xp, g);
	Signal tf = transversal_slice(ff, &xp, g);
	double m = 0.0;
	for (int k = 0; k < g.count; ++k)
		m = std::max(m, std::abs(t0.values[k] - tf.values[k]));
	// the continuation route carries the h^2 residual of the product rule
	CHECK(m / tf.sup() < 1e-4);
}

TEST_CASE("order ladder on slices")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	const double xp = 0.4;
	Grid1D g(-24.0, 24.0, 6145);
	Signal a = t_plus_slice(ff, cd(0.3), &xp, g);
	a.deriv = nullptr;
	Signal ladder = rl_integral(a, cd(0.4), Side::Plus);
	Signal direct = t_plus_slice(ff, cd(0.7), &xp, g);
	double m = 0.0;
	for (int k = 0; k < g.count; ++k)
		m = std::max(m, std::abs(ladder.values[k] - direct.values[k]));
	CHECK(m / direct.sup() < 1e-4);
}

TEST_CASE("evaluation methods agree")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	const double xp = 0.3;
	Grid1D g(-20.0, 20.0, 4097);
	Signal d = t_plus_slice(ff, cd(0.5), &xp, g, {}, FracMethod::Direct);
	// force one continuation level so the derivative route is exercised
	Signal c = t_plus_slice(ff, FracOrder(cd(0.5), 1), &xp, g, {},
	                        FracMethod::Continued);
	CHECK(rel_l2(d, c) < 1e-4);

	TestFunction bl = TestFunction::bandlimited(1.0, 3.0, 7, 2);
	FieldFn fb = FieldFn::from(bl);
	Grid1D gb(-80.0, 80.0, 16385);
	Signal cb = t_plus_slice(fb, cd(0.5), &xp, gb, {}, FracMethod::Continued);
	Signal sb = t_plus_slice(fb, cd(0.5), &xp, gb, {}, FracMethod::Spectral,
	                         false);
	CHECK(rel_l2(cb, sb) < 1e-4);
}

TEST_CASE("duality of the one-sided pair")
{
	// <T_+^a f, g> = <f, T*_+^a g>
	TestFunction fa = TestFunction::gaussian(1.0, 2);
	TestFunction fb = TestFunction::gaussian(2.0, 2);
	FieldFn ffa = FieldFn::from(fa);
	FieldFn ffb = FieldFn::from(fb);
	Grid1D g(-24.0, 24.0, 1229);
	cd lhs = 0.0, rhs = 0.0;
	for (int i = -10; i <= 10; ++i) {
		double xp = 0.5 * i;
		Signal tp = t_plus_slice(ffa, cd(0.5), &xp, g);
		Signal ts = t_star_plus_slice(ffb, cd(0.5), &xp, g);
		cd accl = 0.0, accr = 0.0;
		for (int k = 0; k < g.count; ++k) {
			double x[2] = {xp, g.node(k)};
			accl += tp.values[k] * std::conj(fb.value(x));
			accr += fa.value(x) * std::conj(ts.values[k]);
		}
		lhs += accl * g.h() * 0.5;
		rhs += accr * g.h() * 0.5;
	}
	CHECK(std::abs(lhs - rhs) < 1e-3 * std::abs(lhs));
}

TEST_CASE("fractional conjugation to the hyperplane family")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	FracPointOpts fo;
	fo.step = 1.0 / 256;
	fo.quad.step = 0.08;
	const double phi = 1.2;
	double th[2] = {std::cos(phi), std::sin(phi)};
	cd lhs = r_plus(ff, cd(0.5), th, 0.5, fo);
	// Lambda_{1/2}: |theta_n|^{-1/2} (T_+^{1/2} f)(-theta'/theta_n, t/theta_n)
	double x[2] = {-th[0] / th[1], 0.5 / th[1]};
	cd rhs = std::pow(std::abs(th[1]), -0.5) * t_plus(ff, cd(0.5), x, fo);
	CHECK(std::abs(lhs - rhs) < 1e-5 * std::abs(lhs));
}

TEST_CASE("parabolic family via conjugation and directly")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	const double xp = 0.4;
	Grid1D g(-10.0, 10.0, 1025);
	Signal a = p_plus_slice(ff, cd(0.5), &xp, g);
	Signal b = p_plus_slice_direct(ff, cd(0.5), &xp, g);
	CHECK(rel_l2(a, b) < 1e-4);
}

TEST_CASE("analyticity of the order map")
{
	// mean over a circle in the order plane reproduces the center value
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	double x[2] = {0.3, 0.6};
	cd center = t_plus(ff, cd(0.75), x);
	cd mean = 0.0;
	const int M = 8;
	for (int k = 0; k < M; ++k) {
		double ph = 2.0 * PI * k / M;
		cd al = cd(0.75) + 0.2 * cd(std::cos(ph), std::sin(ph));
		mean += t_plus(ff, al, x);
	}
	mean /= (double)M;
	CHECK(std::abs(mean - center) < 1e-4 * std::abs(center));
}

TEST_CASE("vanishing-moment class membership")
{
	CHECK_NOTHROW(require_phi(TestFunction::bandlimited(1.0, 3.0, 7, 2)));
	CHECK_THROWS_AS(require_phi(TestFunction::gaussian(1.0, 2)),
	                std::exception);
}

TEST_CASE("hypersingular route on a coarse grid")
{
	TestFunction bl = TestFunction::bandlimited(1.0, 3.0, 7, 2);
	FieldFn ff = FieldFn::from(bl);
	const double xp = 0.0;
	Grid1D g(-40.0, 40.0, 2561);
	Signal h1 = t_plus_hypersingular_slice(ff, -0.5, &xp, g, 1);
	Signal h2 = t_plus_hypersingular_slice(ff, -0.5, &xp, g, 2);
	Signal sp = t_plus_slice(ff, FracOrder(cd(-0.5)), &xp, g, {},
	                         FracMethod::Spectral, false);
	CHECK(rel_l2(h1, sp) < 5e-3);
	CHECK(rel_l2(h1, h2) < 5e-3);
}

TEST_CASE("inversion and compositions on the band-limited corpus")
{
	TestFunction bl = TestFunction::bandlimited(1.0, 3.0, 7, 2);
	auto inv = invert_check(bl);
	CHECK(inv.rel_l2 < 1e-2);
	auto comp = composition_check(bl, cd(-0.25), cd(-0.75));
	CHECK(comp.rel_l2 < 1e-2);
	auto tts = tt_star_check(bl);
	CHECK(tts.rel_l2 < 1e-2);
}
