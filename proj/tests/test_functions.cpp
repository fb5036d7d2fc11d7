#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonfrac/functions.hpp"
#include "radonfrac/gamma.hpp"
#include "radonfrac/quad.hpp"

using namespace radonfrac;

TEST_CASE("gaussian values and transform")
{
	TestFunction f = TestFunction::gaussian(2.0, 3);
	double x0[3] = {0.0, 0.0, 0.0};
	double x1[3] = {0.3, -0.5, 1.1};
	CHECK(std::abs(f.value(x0) - cd(1.0)) < 1e-15);
	double r2 = 0.09 + 0.25 + 1.21;
	CHECK(std::abs(f.value(x1) - cd(std::exp(-2.0 * r2))) < 1e-14);

	double xi[3] = {0.7, -0.2, 1.3};
	double q = 0.49 + 0.04 + 1.69;
	cd want = std::pow(PI / 2.0, 1.5) * std::exp(-q / 8.0);
	CHECK(std::abs(f.fourier(xi) - want) < 1e-13 * std::abs(want));
}

TEST_CASE("mollifier support and unit mass")
{
	TestFunction f = TestFunction::mollifier(0.5, 2);
	double out[2] = {0.51, 0.0};
	CHECK(std::abs(f.value(out)) == 0.0);
	double in[2] = {0.2, 0.1};
	CHECK(f.value(in).real() > 0.0);

	// radial mass sigma_1 int_0^eps f0(r) r dr = 1
	std::vector<double> x, w;
	double mass = 0.0;
	for (int k = 0; k < 8; ++k) {
		gauss_legendre(48, 0.0625 * k, 0.0625 * (k + 1), x, w);
		for (std::size_t i = 0; i < x.size(); ++i) {
			double p[2] = {x[i], 0.0};
			mass += w[i] * f.value(p).real() * x[i];
		}
	}
	CHECK(std::abs(sphere_area(2) * mass - 1.0) < 1e-8);
}

TEST_CASE("log-decay profile")
{
	TestFunction f = TestFunction::logdecay(2.0, 2);
	double x0[2] = {0.0, 0.0};
	// (2)^{-1} / log 2
	CHECK(std::abs(f.value(x0).real() - 0.5 / std::log(2.0)) < 1e-14);
	CHECK_FALSE(f.has_derivatives());
	CHECK_FALSE(f.rapidly_decaying());
}

TEST_CASE("band-limited corpus members")
{
	TestFunction f = TestFunction::bandlimited(1.0, 3.0, 7, 2);
	CHECK((int)f.band_atoms().size() == 8);
	for (const auto& a : f.band_atoms()) {
		double m = std::hypot(a.freq[0], a.freq[1]);
		CHECK(a.freq[1] >= 1.0);
		CHECK(m <= 3.0 + 1e-12);
	}
	// deterministic construction
	TestFunction g = TestFunction::bandlimited(1.0, 3.0, 7, 2);
	for (std::size_t k = 0; k < f.band_atoms().size(); ++k) {
		CHECK(f.band_atoms()[k].freq[0] == g.band_atoms()[k].freq[0]);
		CHECK(f.band_atoms()[k].phase == g.band_atoms()[k].phase);
	}
	TestFunction h = TestFunction::bandlimited(1.0, 3.0, 8, 2);
	bool differs = false;
	for (std::size_t k = 0; k < f.band_atoms().size(); ++k)
		if (f.band_atoms()[k].freq[0] != h.band_atoms()[k].freq[0])
			differs = true;
	CHECK(differs);
}

TEST_CASE("ray evaluation matches pointwise values")
{
	for (auto f : {TestFunction::gaussian(1.0, 2),
	               TestFunction::bandlimited(1.0, 3.0, 7, 2),
	               TestFunction::mollifier(0.8, 2),
	               TestFunction::logdecay(1.5, 2)}) {
		double x0[2] = {-1.3, 0.4};
		double dir[2] = {0.6, 0.8};
		std::vector<cd> out(41);
		f.eval_ray(x0, dir, 0.2, 41, out.data());
		for (int k = 0; k < 41; ++k) {
			double x[2] = {x0[0] + 0.2 * k * dir[0],
			               x0[1] + 0.2 * k * dir[1]};
			CHECK(std::abs(out[k] - f.value(x)) < 1e-12);
		}
	}
}

TEST_CASE("partials against finite differences")
{
	for (auto f : {TestFunction::gaussian(1.5, 2),
	               TestFunction::bandlimited(1.0, 3.0, 7, 2)}) {
		double x[2] = {0.4, -0.9};
		const double h = 1e-5;
		for (int ax = 0; ax < 2; ++ax) {
			double xp[2] = {x[0], x[1]}, xm[2] = {x[0], x[1]};
			xp[ax] += h;
			xm[ax] -= h;
			cd fd = (f.value(xp) - f.value(xm)) / (2.0 * h);
			CHECK(std::abs(f.partial(x, ax) - fd) < 1e-7);
			cd fd2 = (f.value(xp) - 2.0 * f.value(x) + f.value(xm)) /
			         (h * h);
			CHECK(std::abs(f.partial2(x, ax) - fd2) < 1e-4);
		}
		cd lap = f.partial2(x, 0) + f.partial2(x, 1);
		CHECK(std::abs(f.laplacian(x) - lap) < 1e-12);
	}
}

TEST_CASE("decay at the suggested radius")
{
	for (auto f : {TestFunction::gaussian(1.0, 2),
	               TestFunction::bandlimited(1.0, 3.0, 7, 2)}) {
		double R = f.suggested_radius();
		double x[2] = {R, 0.0};
		CHECK(std::abs(f.value(x)) < 1e-11);
	}
}

TEST_CASE("DSL parsing")
{
	TestFunction a = TestFunction::parse("gaussian:a=2", 2);
	CHECK(a.kind() == FnKind::Gaussian);
	CHECK(a.gauss_a() == doctest::Approx(2.0));
	CHECK(a.dim() == 2);

	TestFunction b = TestFunction::parse("logdecay:p=1.5,n=3", 2);
	CHECK(b.kind() == FnKind::LogDecay);
	CHECK(b.dim() == 3);
	CHECK(b.log_p() == doctest::Approx(1.5));

	TestFunction c = TestFunction::parse("bandlimited:r0=1,r1=3,seed=9", 2);
	CHECK(c.kind() == FnKind::BandLimited);
	CHECK(c.band_r0() == doctest::Approx(1.0));

	TestFunction d = TestFunction::parse("mollifier:eps=0.5", 3);
	CHECK(d.kind() == FnKind::Mollifier);
	CHECK(d.moll_eps() == doctest::Approx(0.5));

	CHECK_THROWS_AS(TestFunction::parse("box:w=1", 2), std::exception);
	CHECK_THROWS_AS(TestFunction::parse("gaussian:b=1", 2), std::exception);
}

TEST_CASE("radon oracle for the gaussian")
{
	CHECK(std::abs(gaussian_radon_oracle(2, 0.0) - std::sqrt(PI)) < 1e-14);
	CHECK(std::abs(gaussian_radon_oracle(3, 0.5) - PI * std::exp(-0.25)) <
	      1e-14);
}
