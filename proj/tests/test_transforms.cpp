#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonfrac/gamma.hpp"
#include "radonfrac/quad.hpp"
#include "radonfrac/transforms.hpp"

using namespace radonfrac;

TEST_CASE("radon of the gaussian against the closed form")
{
	for (int n : {2, 3}) {
		TestFunction ga = TestFunction::gaussian(1.0, n);
		FieldFn ff = FieldFn::from(ga);
		double th[3] = {0.0, 0.0, 0.0};
		th[n - 1] = 1.0;
		for (double t : {0.0, 0.7, -1.4}) {
			cd v = radon(ff, th, t);
			double want = gaussian_radon_oracle(n, t);
			CHECK(std::abs(v - want) < 1e-8 * want);
		}
	}
}

TEST_CASE("evenness of the radon transform")
{
	TestFunction bl = TestFunction::bandlimited(1.0, 3.0, 7, 2);
	FieldFn ff = FieldFn::from(bl);
	double th[2] = {0.6, 0.8};
	double mth[2] = {-0.6, -0.8};
	for (double t : {0.4, 1.7}) {
		cd a = radon(ff, th, t);
		cd b = radon(ff, mth, -t);
		CHECK(std::abs(a - b) < 1e-10);
	}
}

TEST_CASE("radon preserves mass of the mollifier")
{
	TestFunction mo = TestFunction::mollifier(0.5, 2);
	FieldFn ff = FieldFn::from(mo);
	double th[2] = {0.28, 0.96};
	std::vector<double> x, w;
	double mass = 0.0;
	for (int k = 0; k < 10; ++k) {
		gauss_legendre(24, -0.5 + 0.1 * k, -0.4 + 0.1 * k, x, w);
		for (std::size_t i = 0; i < x.size(); ++i)
			mass += w[i] * radon(ff, th, x[i]).real();
	}
	CHECK(std::abs(mass - 1.0) < 1e-6);
}

TEST_CASE("radial reduction")
{
	auto f0 = [](double r) { return std::exp(-r * r); };
	CHECK(std::abs(radon_radial(f0, 3, 0.0, 12.0) - PI) < 1e-8);
	CHECK(std::abs(radon_radial(f0, 2, 0.5, 12.0) -
	               std::sqrt(PI) * std::exp(-0.25)) < 1e-8);
	CHECK(std::abs(radon_radial(f0, 3, 1.0, 12.0) - PI * std::exp(-1.0)) <
	      1e-8);
}

TEST_CASE("slope form against the hyperplane form")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	QuadOpts o;
	o.step = 0.1;
	const double phi = 0.9;
	double th[2] = {std::cos(phi), std::sin(phi)};
	double xp = -th[0] / th[1];
	for (double t : {0.3, -0.8}) {
		cd lhs = radon(ff, th, t, o);
		double x[2] = {xp, t / th[1]};
		cd rhs = transversal(ff, x, o) / std::abs(th[1]);
		CHECK(std::abs(lhs - rhs) < 1e-8);
	}
}

TEST_CASE("parabolic transform via the shear conjugation")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	FieldFn b1 = coordinate_map(MapKind::B1, ff);
	QuadOpts o;
	o.L = 6.5;
	o.step = 0.06;
	double x[2] = {0.4, 0.9};
	cd direct = parabolic(ff, x, o);
	double xt[2] = {2.0 * x[0], x[1] - x[0] * x[0]};
	cd conj = transversal(b1, xt, o);
	CHECK(std::abs(direct - conj) < 1e-8 * std::abs(direct));
}

TEST_CASE("adjoint pairing of T and T*")
{
	TestFunction fa = TestFunction::gaussian(1.0, 2);
	TestFunction fb = TestFunction::gaussian(2.0, 2);
	FieldFn ffa = FieldFn::from(fa);
	FieldFn ffb = FieldFn::from(fb);
	QuadOpts o;
	o.step = 0.1;
	GridND g = GridND::square(2, -8.0, 7.9375, 256);
	cd lhs = 0.0, rhs = 0.0;
	for (std::size_t i = 0; i < g.size(); ++i) {
		double x[2];
		g.node(i, x);
		lhs += transversal(ffa, x, o) * std::conj(fb.value(x));
		rhs += fa.value(x) * std::conj(transversal_dual(ffb, x, o));
	}
	lhs *= g.cell_volume();
	rhs *= g.cell_volume();
	CHECK(std::abs(lhs - rhs) < 1e-6 * std::abs(lhs));
}

TEST_CASE("direction sets")
{
	DirectionSet c = DirectionSet::circle(128);
	double s = 0.0;
	for (double w : c.weights)
		s += w;
	CHECK(std::abs(s - 2.0 * PI) < 1e-12);
	for (int i = 0; i < c.size(); ++i) {
		int j = c.antipode(i);
		CHECK(std::abs(c.dirs[i][0] + c.dirs[j][0]) < 1e-12);
		CHECK(std::abs(c.dirs[i][1] + c.dirs[j][1]) < 1e-12);
	}

	DirectionSet sp = DirectionSet::sphere(24, 48);
	s = 0.0;
	for (double w : sp.weights)
		s += w;
	CHECK(std::abs(s - 4.0 * PI) < 1e-10);
	int j = sp.antipode(7);
	for (int a = 0; a < 3; ++a)
		CHECK(std::abs(sp.dirs[7][a] + sp.dirs[j][a]) < 1e-12);
}

TEST_CASE("dual transform of a constant cylinder function")
{
	CylinderField cf;
	cf.dirs = DirectionSet::circle(64);
	cf.offsets = Grid1D(-2.0, 2.0, 41);
	cf.values.assign((std::size_t)cf.dirs.size() * 41, cd(1.0));
	double x[2] = {0.3, 0.4};
	CHECK(std::abs(radon_dual(cf, x) - 2.0 * PI) < 1e-12);
}

TEST_CASE("slice derivative provider")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	double th[2] = {0.6, 0.8};
	Grid1D g(-6.0, 6.0, 1201);
	Signal s = radon_slice(ff, th, g);
	REQUIRE((bool)s.deriv);
	auto d1 = s.deriv(1);
	for (int k : {200, 600, 900}) {
		cd fd = (s.values[k + 1] - s.values[k - 1]) / (2.0 * g.h());
		CHECK(std::abs(d1[k] - fd) < 1e-4);
	}
}

TEST_CASE("lambda maps round trip")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn u = FieldFn::from(ga);
	CylFn lm = lambda_map(cd(0.5), u);
	FieldFn back = lambda_inv(cd(0.5), lm, 2);
	for (double xn : {0.7, -1.2}) {
		double x[2] = {0.4, xn};
		CHECK(std::abs(back.value(x) - u.value(x)) < 1e-12);
	}
}

TEST_CASE("shear coordinate maps")
{
	TestFunction ga = TestFunction::gaussian(1.0, 2);
	FieldFn ff = FieldFn::from(ga);
	FieldFn b1 = coordinate_map(MapKind::B1, ff);
	FieldFn id1 = coordinate_map(MapKind::B1Inv, b1);
	FieldFn b2 = coordinate_map(MapKind::B2, ff);
	double x[2] = {0.7, -0.4};
	CHECK(std::abs(id1.value(x) - ff.value(x)) < 1e-14);
	double xm[2] = {2.0 * x[0], x[1] - x[0] * x[0]};
	CHECK(std::abs(b2.value(x) - ff.value(xm)) < 1e-14);
	FieldFn id2 = coordinate_map(MapKind::B2Inv, b2);
	CHECK(std::abs(id2.value(x) - ff.value(x)) < 1e-14);
}

TEST_CASE("orthonormal basis of the hyperplane")
{
	double th[3] = {0.48, 0.6, 0.64};
	double u1[3], u2[3];
	theta_basis(th, 3, u1, u2);
	auto dot = [](const double* a, const double* b) {
		return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
	};
	CHECK(std::abs(dot(u1, th)) < 1e-13);
	CHECK(std::abs(dot(u2, th)) < 1e-13);
	CHECK(std::abs(dot(u1, u2)) < 1e-13);
	CHECK(std::abs(dot(u1, u1) - 1.0) < 1e-13);
	CHECK(std::abs(dot(u2, u2) - 1.0) < 1e-13);
}

TEST_CASE("parallel loop")
{
	std::vector<double> v(1000, 0.0);
	parallel_for(v.size(), [&v](std::size_t i) { v[i] = (double)i; });
	double s = 0.0;
	for (double c : v)
		s += c;
	CHECK(s == doctest::Approx(999.0 * 1000.0 / 2.0));
	CHECK(thread_count() >= 1);
}
