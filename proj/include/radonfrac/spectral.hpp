#pragma once

#include <functional>

#include "radonfrac/frac1d.hpp"
#include "radonfrac/functions.hpp"
#include "radonfrac/grid.hpp"

namespace radonfrac {

// Discrete spectra approximating the continuous transform
// f^(xi) = int f(x) e^{+i x.xi} dx  (trapezoid-equivalent h-scaling).
// Coefficients are stored in FFT order: bin k on an axis of N nodes with
// spacing h carries frequency 2 pi k~ / (N h), k~ = k for k < N/2, else k - N.

struct Spectrum1D {
	Grid1D grid;  // spatial grid the spectrum came from
	std::vector<cd> coeff;
	double freq(int k) const
	{
		int N = grid.count;
		int kk = (k < (N + 1) / 2) ? k : k - N;
		return 2.0 * PI * kk / (N * grid.h());
	}
};

struct SpectrumND {
	GridND grid;
	std::vector<cd> coeff;
	double freq(int axis, int k) const
	{
		int N = grid.axes[axis].count;
		int kk = (k < (N + 1) / 2) ? k : k - N;
		return 2.0 * PI * kk / (N * grid.axes[axis].h());
	}
};

Spectrum1D dft(const Signal& s);
Signal idft(const Spectrum1D& sp);
SpectrumND dft(const SampledField& f);
SampledField idft(const SpectrumND& sp);

enum class ZeroBin { Zero, Error };

// coefficient-wise product with m(tau); the zero-frequency bin is set to 0 or
// rejected (relative DC mass above 1e-12) per policy
Signal apply_multiplier(const Signal& s, const std::function<cd(double)>& m,
                        ZeroBin policy);
// m receives the frequency vector (length n); applied to every bin whose
// frequency vector norm is 0 the policy decides
SampledField apply_multiplier_nd(const SampledField& f,
                                 const std::function<cd(const double*)>& m,
                                 ZeroBin policy);

// Riesz potential I_2^lambda: multiplier |xi|^{-lambda}, 0 < lambda < n
SampledField riesz_nd(const SampledField& f, double lambda);

// spectral derivative of given order along the signal variable
Signal spectral_derivative(const Signal& s, int order);

enum class SliceVariant { R, T };

struct SliceProbe {
	double theta[3];  // R-variant: unit direction
	double xprime[2]; // T-variant: slope point x'
	double rho;       // probe frequency (snapped to the offset-grid lattice)
};

// Fourier slice theorem check: DFT_t of the transform slice against
// f^(rho theta) (R) or f^(-x' xi_n, xi_n) (T). Returns max relative error
// over the probes. offsets: grid for the slice variable.
double slice_check(const TestFunction& f, SliceVariant variant,
                   const std::vector<SliceProbe>& probes, const Grid1D& offsets);

} // namespace radonfrac
