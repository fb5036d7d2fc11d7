#include "radonfrac/spectral.hpp"
#include "radonfrac/fft.hpp"
#include "radonfrac/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace radonfrac {

namespace {

std::mutex plan_mutex;

fftw_plan get_plan(const std::vector<int>& dims, int sign)
{
	static std::map<std::pair<std::vector<int>, int>, fftw_plan> cache;
	std::lock_guard<std::mutex> lock(plan_mutex);
	auto key = std::make_pair(dims, sign);
	auto it = cache.find(key);
	if (it != cache.end())
		return it->second;
	std::size_t total = 1;
	for (int d : dims)
		total *= d;
	std::vector<cd> buf(total);
	fftw_plan p = fftw_plan_dft(
	    (int)dims.size(), dims.data(), reinterpret_cast<fftw_complex*>(buf.data()),
	    reinterpret_cast<fftw_complex*>(buf.data()),
	    sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
	cache.emplace(key, p);
	return p;
}

} // namespace

void fft_nd_inplace(const std::vector<int>& dims, std::vector<cd>& a, int sign)
{
	fftw_plan p = get_plan(dims, sign);
	fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(a.data()),
	                 reinterpret_cast<fftw_complex*>(a.data()));
}

void fft_inplace(std::vector<cd>& a, int sign)
{
	fft_nd_inplace({(int)a.size()}, a, sign);
}

std::vector<cd> causal_convolve(const std::vector<cd>& kernel,
                                const std::vector<cd>& v)
{
	const std::size_t N = v.size();
	std::size_t M = 1;
	while (M < 2 * N)
		M <<= 1;
	std::vector<cd> a(M, 0.0), b(M, 0.0);
	std::copy(kernel.begin(), kernel.end(), a.begin());
	std::copy(v.begin(), v.end(), b.begin());
	fft_inplace(a, +1);
	fft_inplace(b, +1);
	for (std::size_t i = 0; i < M; ++i)
		a[i] *= b[i];
	fft_inplace(a, -1);
	std::vector<cd> out(N);
	for (std::size_t i = 0; i < N; ++i)
		out[i] = a[i] / (double)M;
	return out;
}

Spectrum1D dft(const Signal& s)
{
	Spectrum1D sp;
	sp.grid = s.grid;
	sp.coeff = s.values;
	fft_inplace(sp.coeff, +1);
	const double h = s.grid.h();
	const int N = s.grid.count;
	for (int k = 0; k < N; ++k) {
		double xi = sp.freq(k);
		sp.coeff[k] *= h * std::exp(cd(0.0, s.grid.lo * xi));
	}
	return sp;
}

Signal idft(const Spectrum1D& sp)
{
	Signal s;
	s.grid = sp.grid;
	s.values = sp.coeff;
	const double h = sp.grid.h();
	const int N = sp.grid.count;
	for (int k = 0; k < N; ++k) {
		double xi = sp.freq(k);
		s.values[k] *= std::exp(cd(0.0, -sp.grid.lo * xi)) / (h * N);
	}
	fft_inplace(s.values, -1);
	return s;
}

SpectrumND dft(const SampledField& f)
{
	SpectrumND sp;
	sp.grid = f.grid;
	sp.coeff = f.values;
	std::vector<int> dims;
	for (auto& a : f.grid.axes)
		dims.push_back(a.count);
	fft_nd_inplace(dims, sp.coeff, +1);
	double hs = f.grid.cell_volume();
	int n = f.grid.n;
	int k[8];
	for (std::size_t i = 0; i < sp.coeff.size(); ++i) {
		f.grid.unflatten(i, k);
		double ph = 0.0;
		for (int a = 0; a < n; ++a)
			ph += f.grid.axes[a].lo * sp.freq(a, k[a]);
		sp.coeff[i] *= hs * std::exp(cd(0.0, ph));
	}
	return sp;
}

SampledField idft(const SpectrumND& sp)
{
	SampledField f;
	f.grid = sp.grid;
	f.values = sp.coeff;
	std::vector<int> dims;
	std::size_t total = 1;
	for (auto& a : sp.grid.axes) {
		dims.push_back(a.count);
		total *= a.count;
	}
	double scale = 1.0 / (sp.grid.cell_volume() * (double)total);
	int n = sp.grid.n;
	int k[8];
	for (std::size_t i = 0; i < f.values.size(); ++i) {
		sp.grid.unflatten(i, k);
		double ph = 0.0;
		for (int a = 0; a < n; ++a)
			ph += sp.grid.axes[a].lo * sp.freq(a, k[a]);
		f.values[i] *= scale * std::exp(cd(0.0, -ph));
	}
	fft_nd_inplace(dims, f.values, -1);
	return f;
}

namespace {

void handle_zero_bin(cd& c0, double total_mass, ZeroBin policy)
{
	if (policy == ZeroBin::Error && std::norm(c0) > 1e-12 * total_mass)
		throw std::runtime_error(
		    "apply_multiplier: nonzero mass in the zero-frequency bin");
	c0 = 0.0;
}

} // namespace

Signal apply_multiplier(const Signal& s, const std::function<cd(double)>& m,
                        ZeroBin policy)
{
	Spectrum1D sp = dft(s);
	double total = 0.0;
	for (auto& c : sp.coeff)
		total += std::norm(c);
	handle_zero_bin(sp.coeff[0], total, policy);
	for (int k = 1; k < sp.grid.count; ++k)
		sp.coeff[k] *= m(sp.freq(k));
	return idft(sp);
}

SampledField apply_multiplier_nd(const SampledField& f,
                                 const std::function<cd(const double*)>& m,
                                 ZeroBin policy)
{
	SpectrumND sp = dft(f);
	double total = 0.0;
	for (auto& c : sp.coeff)
		total += std::norm(c);
	handle_zero_bin(sp.coeff[0], total, policy);
	int n = f.grid.n;
	int k[8];
	double xi[8];
	for (std::size_t i = 1; i < sp.coeff.size(); ++i) {
		sp.grid.unflatten(i, k);
		for (int a = 0; a < n; ++a)
			xi[a] = sp.freq(a, k[a]);
		sp.coeff[i] *= m(xi);
	}
	return idft(sp);
}

SampledField riesz_nd(const SampledField& f, double lambda)
{
	int n = f.grid.n;
	if (!(lambda > 0.0) || lambda >= n)
		throw std::invalid_argument("riesz_nd: need 0 < lambda < n");
	return apply_multiplier_nd(
	    f,
	    [lambda, n](const double* xi) {
		    double q = 0.0;
		    for (int a = 0; a < n; ++a)
			    q += xi[a] * xi[a];
		    return cd(std::pow(q, -0.5 * lambda), 0.0);
	    },
	    ZeroBin::Error);
}

Signal spectral_derivative(const Signal& s, int order)
{
	return apply_multiplier(
	    s,
	    [order](double tau) {
		    return std::pow(cd(0.0, -tau), order);
	    },
	    ZeroBin::Zero);
}

double slice_check(const TestFunction& f, SliceVariant variant,
                   const std::vector<SliceProbe>& probes, const Grid1D& offsets)
{
	if (!f.has_fourier())
		throw std::invalid_argument("slice_check: closed-form transform required");
	FieldFn ff = FieldFn::from(f);
	double worst = 0.0;
	for (auto& pr : probes) {
		Signal slice;
		if (variant == SliceVariant::R) {
			slice = radon_slice(ff, pr.theta, offsets, {}, false);
		} else {
			slice = transversal_slice(ff, pr.xprime, offsets, {}, false, false);
		}
		Spectrum1D sp = dft(slice);
		// snap the probe to the nearest lattice frequency
		int best = 1;
		double bd = 1e300;
		for (int k = 0; k < sp.grid.count; ++k) {
			double d = std::abs(sp.freq(k) - pr.rho);
			if (d < bd) {
				bd = d;
				best = k;
			}
		}
		double rho = sp.freq(best);
		double xi[3];
		int n = f.dim();
		if (variant == SliceVariant::R) {
			for (int a = 0; a < n; ++a)
				xi[a] = rho * pr.theta[a];
		} else {
			for (int a = 0; a + 1 < n; ++a)
				xi[a] = -pr.xprime[a] * rho;
			xi[n - 1] = rho;
		}
		cd rhs = f.fourier(xi);
		cd lhs = sp.coeff[best];
		double err = std::abs(lhs - rhs) / std::abs(rhs);
		worst = std::max(worst, err);
	}
	return worst;
}

} // namespace radonfrac
