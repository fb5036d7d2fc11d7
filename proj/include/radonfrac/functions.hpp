#pragma once

#include <array>
#include <string>
#include <vector>

#include "radonfrac/grid.hpp"

namespace radonfrac {

enum class FnKind { Gaussian, Mollifier, LogDecay, BandLimited };

struct BandAtom {
	std::array<double, 3> freq{};  // representative with freq[n-1] > 0
	double phase = 0.0;            // coefficient e^{i phase}, unit magnitude
};

// Analytic test-function corpus. Gaussian e^{-a|x|^2}; mollifier
// (C/eps^n) exp(-eps^2/(eps^2-|x|^2)) supported in |x| <= eps with unit mass;
// log-decay (2+|x|)^{-n/p} (log(2+|x|))^{-1}; band-limited sum of
// Gaussian-windowed plane waves with spectrum in {r0 <= |xi_n|, |xi| <= r1}.
class TestFunction {
public:
	static TestFunction gaussian(double a, int n);
	static TestFunction mollifier(double eps, int n);
	static TestFunction logdecay(double p, int n);
	static TestFunction bandlimited(double r0, double r1, unsigned seed, int n,
	                                int atoms = 8);
	// DSL: gaussian:a=1  mollifier:eps=0.5  logdecay:p=1.5,n=2
	//      bandlimited:r0=1,r1=3,seed=7   (n may be given in any DSL)
	static TestFunction parse(const std::string& dsl, int default_n);

	FnKind kind() const { return kind_; }
	int dim() const { return n_; }
	std::string name() const;

	cd value(const double* x) const;
	cd value(const std::vector<double>& x) const;
	// samples f(x0 + k*step*dir), k = 0..count-1
	void eval_ray(const double* x0, const double* dir, double step, int count,
	              cd* out) const;

	bool has_derivatives() const { return kind_ != FnKind::LogDecay; }
	cd partial(const double* x, int axis) const;
	// second partial along one axis
	cd partial2(const double* x, int axis) const;
	cd laplacian(const double* x) const;

	bool has_fourier() const
	{
		return kind_ == FnKind::Gaussian || kind_ == FnKind::BandLimited;
	}
	// continuous transform under the e^{+i x.xi} convention
	cd fourier(const double* xi) const;

	// spatial scale hints for grid selection
	double suggested_radius() const;  // |f| below ~1e-13 outside this radius
	double suggested_step() const;
	bool rapidly_decaying() const { return kind_ != FnKind::LogDecay; }

	// parameter accessors
	double gauss_a() const { return a_; }
	double moll_eps() const { return eps_; }
	double log_p() const { return p_; }
	double band_r0() const { return r0_; }
	double band_r1() const { return r1_; }
	double band_envelope() const { return sigma_; }
	const std::vector<BandAtom>& band_atoms() const { return atoms_; }

private:
	TestFunction() = default;
	FnKind kind_ = FnKind::Gaussian;
	int n_ = 2;
	double a_ = 1.0;                    // gaussian
	double eps_ = 1.0, moll_c_ = 1.0;   // mollifier
	double p_ = 2.0;                    // logdecay
	double r0_ = 1.0, r1_ = 3.0, sigma_ = 8.0;  // bandlimited
	unsigned seed_ = 7;
	std::vector<BandAtom> atoms_;
};

SampledField sample(const TestFunction& f, const GridND& g);

// exact hyperplane Radon transform of e^{-|x|^2} in R^n: pi^{(n-1)/2} e^{-t^2}
double gaussian_radon_oracle(int n, double t);

} // namespace radonfrac
