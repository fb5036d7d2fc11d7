#pragma once

#include "radonfrac/spectral.hpp"
#include "radonfrac/transforms.hpp"

namespace radonfrac {

// How the 1-D fractional step is evaluated on a slice:
//   Direct        Riemann-Liouville product integration (Re alpha > 0)
//   Continued     analytic continuation through derivatives of the slice
//   Spectral      DFT multiplier (-/+ i tau)^{-alpha}
// Hypersingular negative real orders have their own entry point below.
enum class FracMethod { Direct, Continued, Spectral };

// slice x_n -> (T_+^alpha f)(x', x_n)
Signal t_plus_slice(const FieldFn& f, FracOrder alpha, const double* xprime,
                    const Grid1D& g, QuadOpts opts = {},
                    FracMethod method = FracMethod::Continued,
                    bool analytic_deriv = true);
// slice x_n -> (T*_+^alpha g)(x', x_n)
Signal t_star_plus_slice(const FieldFn& g_, FracOrder alpha,
                         const double* xprime, const Grid1D& g,
                         QuadOpts opts = {},
                         FracMethod method = FracMethod::Continued,
                         bool analytic_deriv = true);
// slice t -> (R_+^alpha f)(theta, t)
Signal r_plus_slice(const FieldFn& f, FracOrder alpha, const double* theta,
                    const Grid1D& tgrid, QuadOpts opts = {},
                    FracMethod method = FracMethod::Continued,
                    bool analytic_deriv = true);
// slice x_n -> (P_+^alpha f)(x', x_n), via the shear conjugation
// (P_+^alpha f)(x', x_n) = (T_+^alpha B1 f)(2x', x_n - |x'|^2)
Signal p_plus_slice(const FieldFn& f, FracOrder alpha, const double* xprime,
                    const Grid1D& g, QuadOpts opts = {},
                    FracMethod method = FracMethod::Continued);
// same quantity from the parabolic transform itself (cross-check route)
Signal p_plus_slice_direct(const FieldFn& f, FracOrder alpha,
                           const double* xprime, const Grid1D& g,
                           QuadOpts opts = {},
                           FracMethod method = FracMethod::Direct);

struct FracPointOpts {
	FracMethod method = FracMethod::Continued;
	QuadOpts quad{};
	double lo = -24.0;    // left end of the internal slice grid
	double pad = 12.0;    // margin past the evaluation point
	double step = 0.015625;
	bool analytic_deriv = true;
};

cd t_plus(const FieldFn& f, FracOrder alpha, const double* x,
          FracPointOpts o = {});
cd t_star_plus(const FieldFn& g, FracOrder alpha, const double* x,
               FracPointOpts o = {});
cd r_plus(const FieldFn& f, FracOrder alpha, const double* theta, double t,
          FracPointOpts o = {});
cd p_plus(const FieldFn& f, FracOrder alpha, const double* x,
          FracPointOpts o = {});

// T_+^a for real a in [(1-n)/2, 0) as a hypersingular integral: truncated
// Marchaud derivatives of the transversal slice at eps = {h, 2h, 4h},
// combined by second-order extrapolation in eps. l > -a.
Signal t_plus_hypersingular_slice(const FieldFn& f, double a,
                                  const double* xprime, const Grid1D& g,
                                  int l, QuadOpts opts = {});

// relative spectral mass of the x'=0 transversal slice below |tau| < cut
double band_mass_below(const FieldFn& f, double cut, const Grid1D& g,
                       QuadOpts opts = {});
// negative orders require the vanishing-moment class: band-limited corpus
// member with no spectral mass near tau = 0 (relative mass < 1e-12)
void require_phi(const TestFunction& f);

struct CompositionReport {
	double rel_l2 = 0.0;
	std::vector<std::string> warnings;
};

// f = (2 pi)^{1-n} T_+^{(1-n)/2} T*_+^{(1-n)/2} f on a patch (n = 2)
CompositionReport invert_check(const TestFunction& f);
// T_+^alpha T*_+^beta f against the spectral form of
// 2 pi I_+^alpha I_-^beta I^1 f, all three potentials acting in x_n (n = 2)
CompositionReport composition_check(const TestFunction& f, cd alpha, cd beta);
// T T* f = 2 pi I^1 f with the Riesz integral along x_n (n = 2)
CompositionReport tt_star_check(const TestFunction& f);

} // namespace radonfrac
