#pragma once

#include "radonfrac/fracradon.hpp"

namespace radonfrac {

struct NormReport {
	std::string id, input;
	double p = 1.0, nu = 0.0, mu = 0.0;
	cd alpha = 0.0;
	double measured = 0.0;
	double bound = 0.0;
	bool has_bound = true;
	bool pass = false;
	bool informational = false;
	std::string detail;
};

// mixed norm over the cylinder: (sum_i w_i sum_k h |t_k|^{nu p} |phi_ik|^p)^{1/p};
// a node at t = 0 with nu != 0 uses the cell-average of |t|^{nu p}
double weighted_norm_cylinder(const CylinderField& phi, double p, double nu);
// (int |x_n|^{nu p} (1+|x'|^2)^{-mu p/2} |f|^p dx)^{1/p} over a sampled field
double weighted_norm_u(const SampledField& f, double p, double nu, double mu);

// sharp constant 2^{1/p} pi^{(n-1)/2} Gamma((1-n/p')/2) / Gamma(n/(2p));
// finite for 1 <= p < n/(n-1), throws at and beyond the endpoint
double constant_A(double p, int n);

struct ExponentSet {
	double p = 0.0, q = 0.0, nu = 0.0, mu = 0.0;
};
// endpoint exponents p = (n+1)/(n+alpha0), q = (n+1)/(1-alpha0),
// nu = -alpha0 - (n-1)/p', mu = -n(1-2/p); alpha0 in [(1-n)/2, 1]
ExponentSet exponents(double alpha0, int n);

// ||Rf||~_{p,nu} / ||f||_p against the sharp constant A (nu = -(n-1)/p';
// equality within 1e-4 at p = 1, <= 1.01 A otherwise); radial inputs
NormReport radon_norm_audit(const TestFunction& f, double p);
// ||Tf||_{p,u} / ||f||_p against 2^{-1/p} A
NormReport transversal_norm_audit(const TestFunction& f, double p);
// ||P_+^alpha f||_{p,v} / ||f||_p (informational bound) and its exact match
// with ||T_+^alpha B1 f||_{p,u}
NormReport parabolic_norm_audit(const TestFunction& f, double p, double alpha);

struct WeakTypeReport {
	std::vector<double> lambda, measure, scaled;
	double stability = 0.0;  // max/min of lambda^{1/(1-alpha)} * measure
	bool monotone = false;
	bool pass = false;
};
// superlevel measures of R_+^alpha f (radial input) by cell-center counts
WeakTypeReport weak_type_audit(const TestFunction& f, double alpha,
                               const std::vector<double>& lambdas);

struct GrowthTable {
	std::vector<double> L, value;
	bool increasing = false;
	double ratio = 0.0;   // last / first
	double cauchy = 0.0;  // relative size of the last increment
};
// partial integrals of R_+^alpha applied to the log-decay witness at t_probe,
// truncated at radius L over the ladder
GrowthTable divergence_witness(double p, double alpha, int n,
                               const std::vector<double>& ladder,
                               double t_probe);

// worst relative deviation of |Gamma(1+i gamma)|^2 from
// pi gamma / sinh(pi gamma) over the probes
double gamma_modulus_check(const std::vector<double>& gammas);
// relative error of |Gamma(a+ib)| against
// sqrt(2 pi) |b|^{a-1/2} e^{-pi |b|/2}
double gamma_asymptotic_error(double a, double b);

// ||T_+^{-1/2+i gamma} f||_2^2 / ||f||_2^2 against
// (2 pi)^{n-1} cosh(gamma pi); band-limited inputs, n = 2.
// The transversal slices are shared across the gamma probes.
std::vector<NormReport> l2_identity_check(const TestFunction& f,
                                          const std::vector<double>& gammas,
                                          double xstep = 0.025);

struct TransferResult {
	double lhs = 0.0, rhs = 0.0, rel = 0.0;
};

// weighted-measure transfer between R_+^alpha and T_+^alpha (alpha = 0 gives
// the plain R/T case): cylinder integral of |t|^{nu p}|R_+^alpha f|^p against
// 2 int |x_n|^{nu p} |T_+^alpha f|^p (1+|x'|^2)^{-e} dx,
// e = (n + (alpha-1+nu)p + 1)/2; radial inputs, n = 2
TransferResult transfer_identity_RT(const TestFunction& f, double alpha,
                                    double p, double nu);
// int Rf (1+t^2)^{-n/2} = sigma_{n-1} int f (1+|x|^2)^{-1/2}
TransferResult transfer_radon_weight(const TestFunction& f);
// int Tf (1+|x|^2)^{-n/2} = (sigma_{n-1}/2) int f (1+|x|^2)^{-1/2}
TransferResult transfer_transversal_weight(const TestFunction& f);
// parabolic analogue (n = 2):
// int Pf (1+4|x'|^2+(x_n-|x'|^2)^2)^{-n/2}
//   = (sigma_{n-1}/2^n) int f (1+|x'|^2+(x_n+|x'|^2)^2)^{-1/2}
TransferResult transfer_parabolic_weight(const TestFunction& f);

} // namespace radonfrac
