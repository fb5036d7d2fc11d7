#pragma once

#include <complex>
#include <vector>

namespace radonfrac {

using cd = std::complex<double>;

// unnormalized DFT: sign=+1 computes sum a_j e^{+2 pi i jk/N} (FFTW backward),
// sign=-1 the conjugate transform
void fft_inplace(std::vector<cd>& a, int sign);
void fft_nd_inplace(const std::vector<int>& dims, std::vector<cd>& a, int sign);

// linear (causal) convolution out[i] = sum_{j<=i} k[i-j] v[j], via zero-padded FFT
std::vector<cd> causal_convolve(const std::vector<cd>& kernel,
                                const std::vector<cd>& v);

} // namespace radonfrac
