#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonfrac/spectral.hpp"

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

// band-limited 1-D probe with vanishing spectral mass near tau = 0
Signal modulated_signal(const Grid1D& g)
{
	Signal s;
	s.grid = g;
	s.values.resize(g.count);
	for (int k = 0; k < g.count; ++k) {
		double t = g.node(k);
		s.values[k] = std::exp(-t * t / 128.0) * std::cos(2.0 * t);
	}
	return s;
}

} // namespace

TEST_CASE("dft matches the continuous transform of the gaussian")
{
	Signal s = gaussian_signal(Grid1D(-16.0, 16.0, 2048));
	Spectrum1D sp = dft(s);
	for (int k : {1, 5, 20, 60, 2047}) {
		double tau = sp.freq(k);
		cd want = std::sqrt(PI) * std::exp(-tau * tau / 4.0);
		CHECK(std::abs(sp.coeff[k] - want) < 1e-10);
	}
}

TEST_CASE("roundtrip and Parseval")
{
	Signal s = modulated_signal(Grid1D(-40.0, 40.0, 1536));
	Signal back = idft(dft(s));
	double m = 0.0;
	for (int k = 0; k < s.grid.count; ++k)
		m = std::max(m, std::abs(back.values[k] - s.values[k]));
	CHECK(m < 1e-12);

	Spectrum1D sp = dft(s);
	double space = 0.0, freq = 0.0;
	for (auto& v : s.values)
		space += std::norm(v);
	space *= s.grid.h();
	for (auto& c : sp.coeff)
		freq += std::norm(c);
	freq /= s.grid.count * s.grid.h();
	CHECK(std::abs(space / freq - 1.0) < 1e-12);
}

TEST_CASE("multiplier application and the zero-bin policy")
{
	Signal s = gaussian_signal(Grid1D(-16.0, 16.0, 1024));
	Signal same = apply_multiplier(
	    s, [](double) { return cd(1.0); }, ZeroBin::Zero);
	// identity multiplier only loses the dc bin
	Spectrum1D sp = dft(s);
	double m = 0.0;
	for (int k = 0; k < s.grid.count; ++k)
		m = std::max(m, std::abs(same.values[k] -
		                         (s.values[k] -
		                          sp.coeff[0] / (s.grid.h() * 1024.0))));
	CHECK(m < 1e-11);
	CHECK_THROWS_AS(apply_multiplier(
	                    s, [](double) { return cd(1.0); }, ZeroBin::Error),
	                std::exception);
	// no dc mass: policy Error passes
	Signal b = modulated_signal(Grid1D(-80.0, 80.0, 4096));
	CHECK_NOTHROW(apply_multiplier(
	    b, [](double) { return cd(1.0); }, ZeroBin::Error));
}

TEST_CASE("spectral derivative of the gaussian")
{
	Signal s = gaussian_signal(Grid1D(-16.0, 16.0, 2048));
	Signal d = spectral_derivative(s, 1);
	Signal d2 = spectral_derivative(s, 2);
	for (int k : {512, 1024, 1400}) {
		double t = s.grid.node(k);
		double e = std::exp(-t * t);
		CHECK(std::abs(d.values[k] - (-2.0 * t * e)) < 1e-8);
		CHECK(std::abs(d2.values[k] - (4.0 * t * t - 2.0) * e) < 1e-7);
	}
}

TEST_CASE("spectral route agrees with product integration")
{
	// the product-integration route carries the O(h^2) error of its
	// piecewise linear interpolant; the tolerance reflects that order
	Grid1D g(-80.0, 80.0, 16384);
	Signal s = modulated_signal(g);
	Signal direct = rl_integral(s, cd(0.5), Side::Plus);
	Signal spec = apply_multiplier(
	    s, [](double tau) { return fourier_symbol(cd(0.5), tau, Side::Plus); },
	    ZeroBin::Zero);
	double num = 0.0, den = 0.0;
	for (int k = 0; k < g.count; ++k) {
		num += std::norm(direct.values[k] - spec.values[k]);
		den += std::norm(direct.values[k]);
	}
	CHECK(std::sqrt(num / den) < 1e-4);
}

TEST_CASE("riesz potential composition and weak limit")
{
	TestFunction bl = TestFunction::bandlimited(1.0, 3.0, 7, 2);
	SampledField f = sample(bl, GridND::square(2, -64.0, 63.5, 256));
	SampledField a = riesz_nd(riesz_nd(f, 0.5), 0.7);
	SampledField b = riesz_nd(f, 1.2);
	double num = 0.0, den = 0.0;
	for (std::size_t i = 0; i < f.values.size(); ++i) {
		num += std::norm(a.values[i] - b.values[i]);
		den += std::norm(b.values[i]);
	}
	CHECK(std::sqrt(num / den) < 1e-10);

	SampledField c = riesz_nd(f, 1e-7);
	num = den = 0.0;
	for (std::size_t i = 0; i < f.values.size(); ++i) {
		num += std::norm(c.values[i] - f.values[i]);
		den += std::norm(f.values[i]);
	}
	CHECK(std::sqrt(num / den) < 1e-5);
	CHECK_THROWS_AS(riesz_nd(f, 2.5), std::exception);
}

TEST_CASE("fourier slice theorem, gaussian probes")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	Grid1D off(-16.0, 16.0, 2048);
	std::vector<SliceProbe> pr(2), pt(2);
	pr[0].theta[0] = 1.0;
	pr[0].theta[1] = 0.0;
	pr[0].rho = 1.3;
	pr[1].theta[0] = 0.6;
	pr[1].theta[1] = 0.8;
	pr[1].rho = 2.1;
	CHECK(slice_check(ga, SliceVariant::R, pr, off) < 1e-6);
	pt[0].xprime[0] = 0.0;
	pt[0].rho = 1.3;
	pt[1].xprime[0] = 0.7;
	pt[1].rho = 1.8;
	CHECK(slice_check(ga, SliceVariant::T, pt, off) < 1e-6);
}

TEST_CASE("fourier slice theorem, band-limited probes")
{
	TestFunction bl = TestFunction::bandlimited(1.0, 3.0, 7, 2);
	Grid1D off(-80.0, 80.0, 2048);
	std::vector<SliceProbe> pr, pt;
	for (int k = 0; k < 2; ++k) {
		const auto& at = bl.band_atoms()[k];
		double rho = std::hypot(at.freq[0], at.freq[1]);
		SliceProbe a{};
		a.theta[0] = at.freq[0] / rho;
		a.theta[1] = at.freq[1] / rho;
		a.rho = rho;
		pr.push_back(a);
		SliceProbe b{};
		b.xprime[0] = -at.freq[0] / at.freq[1];
		b.rho = at.freq[1];
		pt.push_back(b);
	}
	CHECK(slice_check(bl, SliceVariant::R, pr, off) < 1e-8);
	CHECK(slice_check(bl, SliceVariant::T, pt, off) < 1e-8);
}
