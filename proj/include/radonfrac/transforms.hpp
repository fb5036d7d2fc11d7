#pragma once

#include <array>
#include <functional>

#include "radonfrac/frac1d.hpp"
#include "radonfrac/functions.hpp"
#include "radonfrac/grid.hpp"

namespace radonfrac {

// evaluatable scalar field on R^n; ray gives samples of f(x0 + k step dir)
struct FieldFn {
	int n = 2;
	std::function<cd(const double*)> value;
	std::function<void(const double*, const double*, double, int, cd*)> ray;
	std::function<cd(const double*, int)> part;   // first partials
	std::function<cd(const double*, int)> part2;  // pure second partials
	double radius = 8.0;  // decay radius hint
	double step = 0.25;   // quadrature step hint

	cd operator()(const double* x) const { return value(x); }
	void eval_ray(const double* x0, const double* dir, double h, int count,
	              cd* out) const;
	cd laplacian(const double* x) const;
	bool has_part() const { return (bool)part; }

	static FieldFn from(const TestFunction& f);
	// field of the order-th partial along the last axis (order <= 2)
	FieldFn dn(int order) const;
};

struct QuadOpts {
	double L = 0.0;     // truncation radius; 0 = field radius hint
	double step = 0.0;  // quadrature step; 0 = field step hint
	double decay_tol = 1e-9;
	std::vector<std::string>* warnings = nullptr;
};

struct DirectionSet {
	int n = 2;
	std::vector<std::array<double, 3>> dirs;
	std::vector<double> weights;  // sum to sphere_area(n)
	int polar = 0, azimuth = 0;   // n=3 layout

	static DirectionSet circle(int M = 128);
	static DirectionSet sphere(int npolar = 24, int nazimuth = 48);
	int size() const { return (int)dirs.size(); }
	int antipode(int i) const;
};

struct CylinderField {
	DirectionSet dirs;
	Grid1D offsets;
	std::vector<cd> values;  // direction-major

	cd& at(int i, int k) { return values[(std::size_t)i * offsets.count + k]; }
	cd at(int i, int k) const
	{
		return values[(std::size_t)i * offsets.count + k];
	}
};

// deterministic orthonormal basis of theta-perp (Householder reflection);
// u2 is filled for n=3 only
void theta_basis(const double* theta, int n, double* u1, double* u2);

cd radon(const FieldFn& f, const double* theta, double t, QuadOpts opts = {});
cd radon(const TestFunction& f, const double* theta, double t,
         QuadOpts opts = {});
// slice t -> Rf(theta, t); when the field has partials and analytic_deriv is
// set, attaches a derivative provider using d/dt Rf = sum_k theta_k R[d_k f]
// and d^2/dt^2 Rf = R[Laplacian f]
Signal radon_slice(const FieldFn& f, const double* theta, const Grid1D& tgrid,
                   QuadOpts opts = {}, bool analytic_deriv = true);
CylinderField radon_field(const FieldFn& f, const DirectionSet& dirs,
                          const Grid1D& offsets, QuadOpts opts = {});

// sigma_{n-2} int_{|t|}^R f0(r)(r^2-t^2)^{(n-3)/2} r dr; n=2 endpoint handled
// by r = |t| cosh u
double radon_radial(const std::function<double(double)>& f0, int n, double t,
                    double R);

cd transversal(const FieldFn& f, const double* x, QuadOpts opts = {});
cd transversal_dual(const FieldFn& g, const double* x, QuadOpts opts = {});
// slice x_n -> Tf(x', x_n) (dual=false) or T*f (dual=true)
Signal transversal_slice(const FieldFn& f, const double* xprime,
                         const Grid1D& xngrid, QuadOpts opts = {},
                         bool dual = false, bool analytic_deriv = true);
cd parabolic(const FieldFn& f, const double* x, QuadOpts opts = {});
Signal parabolic_slice(const FieldFn& f, const double* xprime,
                       const Grid1D& xngrid, QuadOpts opts = {});

// (R* phi)(x) = sum_i w_i phi(theta_i, x.theta_i), linear interp in offset
cd radon_dual(const CylinderField& phi, const double* x);

// coordinate conjugations
using CylFn = std::function<cd(const double* theta, double t)>;

// (Lambda_alpha u)(theta,t) = |theta_n|^{alpha-1} u(-theta'/theta_n, t/theta_n)
CylFn lambda_map(cd alpha, const FieldFn& u, double eq_floor = 1e-3);
// inverse map back to R^n
FieldFn lambda_inv(cd alpha, const CylFn& phi, int n);

enum class MapKind { B1, B1Inv, B2, B2Inv };
FieldFn coordinate_map(MapKind kind, const FieldFn& f);

// run fn(i) for i in [0, count), split across FRACRADON_THREADS workers
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);
int thread_count();

} // namespace radonfrac
