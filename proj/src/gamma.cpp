#include "radonfrac/gamma.hpp"
#include "radonfrac/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace radonfrac {

namespace {

const double lanczos_g = 7.0;
const double lanczos_p[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cd lanczos_core(cd z)
{
	// valid for Re z >= 0.5; z is the argument of Gamma
	z -= 1.0;
	cd x = lanczos_p[0];
	for (int i = 1; i < 9; ++i)
		x += lanczos_p[i] / (z + cd(i, 0));
	cd t = z + lanczos_g + 0.5;
	return std::sqrt(2.0 * PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

cd cgamma(cd z)
{
	if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
		throw std::domain_error("cgamma: pole at nonpositive integer");
	if (z.real() < 0.5) {
		// reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
		return PI / (std::sin(PI * z) * lanczos_core(1.0 - z));
	}
	return lanczos_core(z);
}

double log_abs_gamma(cd z)
{
	if (z.real() < 0.5) {
		cd s = std::sin(PI * z);
		// |sin(pi z)| can overflow for large |Im z|; use log form
		double ls = std::log(std::abs(s));
		return std::log(PI) - ls - log_abs_gamma(1.0 - z);
	}
	cd w = z - 1.0;
	cd x = lanczos_p[0];
	for (int i = 1; i < 9; ++i)
		x += lanczos_p[i] / (w + cd(i, 0));
	cd t = w + lanczos_g + 0.5;
	return 0.5 * std::log(2.0 * PI) +
	       ((w + 0.5) * std::log(t)).real() - t.real() + std::log(std::abs(x));
}

double sphere_area(int n)
{
	if (n < 1)
		throw std::domain_error("sphere_area: n >= 1 required");
	return 2.0 * std::pow(PI, 0.5 * n) / cgamma(cd(0.5 * n, 0.0)).real();
}

double binomial(int n, int k)
{
	if (k < 0 || k > n)
		return 0.0;
	double r = 1.0;
	for (int i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w)
{
	x.resize(n);
	w.resize(n);
	for (int i = 0; i < (n + 1) / 2; ++i) {
		double t = std::cos(PI * (i + 0.75) / (n + 0.5));
		double p0 = 0.0, p1 = 0.0;
		for (int it = 0; it < 100; ++it) {
			p0 = 1.0;
			p1 = t;
			for (int k = 2; k <= n; ++k) {
				double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
				p0 = p1;
				p1 = p2;
			}
			double dp = n * (t * p1 - p0) / (t * t - 1.0);
			double dt = p1 / dp;
			t -= dt;
			if (std::abs(dt) < 1e-15)
				break;
		}
		double dp = n * (t * p1 - p0) / (t * t - 1.0);
		x[n - 1 - i] = t;
		x[i] = -t;
		w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
	}
	if (n % 2 == 1) {
		x[n / 2] = 0.0;
	}
}

void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w)
{
	gauss_legendre(n, x, w);
	for (int i = 0; i < n; ++i) {
		x[i] = 0.5 * (a + b) + 0.5 * (b - a) * x[i];
		w[i] *= 0.5 * (b - a);
	}
}

} // namespace radonfrac
