#include "radonfrac/fracradon.hpp"
#include "radonfrac/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace radonfrac {

namespace {

Signal frac_apply(Signal s, FracOrder alpha, Side side, FracMethod method)
{
	switch (method) {
	case FracMethod::Direct:
		if (alpha.alpha.real() <= 0.0)
			throw std::invalid_argument(
			    "FracMethod::Direct: Re alpha > 0 required");
		return rl_integral(s, FracOrder(alpha.alpha, 0), side);
	case FracMethod::Continued:
		return rl_continued(s, alpha, side);
	case FracMethod::Spectral: {
		const cd al = alpha.alpha;
		Signal out = apply_multiplier(
		    s, [al, side](double tau) { return fourier_symbol(al, tau, side); },
		    ZeroBin::Zero);
		out.warnings = s.warnings;
		return out;
	}
	}
	throw std::logic_error("frac_apply: unknown method");
}

} // namespace

Signal t_plus_slice(const FieldFn& f, FracOrder alpha, const double* xprime,
                    const Grid1D& g, QuadOpts opts, FracMethod method,
                    bool analytic_deriv)
{
	Signal s = transversal_slice(f, xprime, g, opts, false,
	                             analytic_deriv && method == FracMethod::Continued);
	return frac_apply(std::move(s), alpha, Side::Plus, method);
}

Signal t_star_plus_slice(const FieldFn& g_, FracOrder alpha,
                         const double* xprime, const Grid1D& g, QuadOpts opts,
                         FracMethod method, bool analytic_deriv)
{
	Signal s = transversal_slice(g_, xprime, g, opts, true,
	                             analytic_deriv && method == FracMethod::Continued);
	return frac_apply(std::move(s), alpha, Side::Minus, method);
}

Signal r_plus_slice(const FieldFn& f, FracOrder alpha, const double* theta,
                    const Grid1D& tgrid, QuadOpts opts, FracMethod method,
                    bool analytic_deriv)
{
	Signal s = radon_slice(f, theta, tgrid, opts,
	                       analytic_deriv && method == FracMethod::Continued);
	return frac_apply(std::move(s), alpha, Side::Plus, method);
}

Signal p_plus_slice(const FieldFn& f, FracOrder alpha, const double* xprime,
                    const Grid1D& g, QuadOpts opts, FracMethod method)
{
	const int n = f.n;
	double q = 0.0;
	double xp2[2] = {0.0, 0.0};
	for (int a = 0; a + 1 < n; ++a) {
		q += xprime[a] * xprime[a];
		xp2[a] = 2.0 * xprime[a];
	}
	FieldFn b1 = coordinate_map(MapKind::B1, f);
	Grid1D shifted(g.lo - q, g.hi - q, g.count);
	Signal s = t_plus_slice(b1, alpha, xp2, shifted, opts, method, true);
	s.grid = g;
	return s;
}

Signal p_plus_slice_direct(const FieldFn& f, FracOrder alpha,
                           const double* xprime, const Grid1D& g,
                           QuadOpts opts, FracMethod method)
{
	Signal s = parabolic_slice(f, xprime, g, opts);
	if (method != FracMethod::Continued)
		s.deriv = nullptr;
	return frac_apply(std::move(s), alpha, Side::Plus, method);
}

namespace {

// grid with a node exactly at target, spanning at least [lo0, hi0]
Grid1D aligned_grid(double lo0, double hi0, double target, double step,
                    int& idx)
{
	long k = std::lround((target - lo0) / step);
	double lo = target - (double)k * step;
	int count = (int)std::ceil((hi0 - lo) / step) + 1;
	idx = (int)k;
	return Grid1D::from_step(lo, step, count);
}

Grid1D point_grid(const FracPointOpts& o, double at, int& idx)
{
	double lo0 = std::min(o.lo, at - o.pad);
	double hi0 = std::max(-o.lo, at + o.pad);
	return aligned_grid(lo0, hi0, at, o.step, idx);
}

} // namespace

cd t_plus(const FieldFn& f, FracOrder alpha, const double* x, FracPointOpts o)
{
	int idx;
	Grid1D g = point_grid(o, x[f.n - 1], idx);
	Signal s = t_plus_slice(f, alpha, x, g, o.quad, o.method, o.analytic_deriv);
	return s.values[idx];
}

cd t_star_plus(const FieldFn& gf, FracOrder alpha, const double* x,
               FracPointOpts o)
{
	int idx;
	Grid1D g = point_grid(o, x[gf.n - 1], idx);
	Signal s =
	    t_star_plus_slice(gf, alpha, x, g, o.quad, o.method, o.analytic_deriv);
	return s.values[idx];
}

cd r_plus(const FieldFn& f, FracOrder alpha, const double* theta, double t,
          FracPointOpts o)
{
	int idx;
	Grid1D g = point_grid(o, t, idx);
	Signal s = r_plus_slice(f, alpha, theta, g, o.quad, o.method,
	                        o.analytic_deriv);
	return s.values[idx];
}

cd p_plus(const FieldFn& f, FracOrder alpha, const double* x, FracPointOpts o)
{
	int idx;
	Grid1D g = point_grid(o, x[f.n - 1], idx);
	Signal s = p_plus_slice(f, alpha, x, g, o.quad, o.method);
	return s.values[idx];
}

Signal t_plus_hypersingular_slice(const FieldFn& f, double a,
                                  const double* xprime, const Grid1D& g,
                                  int l, QuadOpts opts)
{
	if (!(a < 0.0) || a < 0.5 * (1 - f.n) - 1e-12)
		throw std::domain_error(
		    "t_plus_hypersingular_slice: order must lie in [(1-n)/2, 0)");
	const double am = -a;
	if ((double)l <= am)
		throw std::invalid_argument("t_plus_hypersingular_slice: need l > -a");
	Signal s = transversal_slice(f, xprime, g, opts, false, false);
	const double h = g.h();
	Signal r1 = marchaud_truncated(s, am, h, l);
	Signal r2 = marchaud_truncated(s, am, 2.0 * h, l);
	Signal r4 = marchaud_truncated(s, am, 4.0 * h, l);
	// truncation error of the Marchaud form expands in eps^{l-a}, eps^{l+1-a};
	// combine the eps = {h, 2h, 4h} values to cancel both leading terms
	const double r = std::exp2((double)l - am);
	const double t2 = std::exp2((double)l + 1.0 - am);
	const double den = (r - 1.0) * (t2 - 1.0);
	const double wa = r * t2 / den, wb = -(r + t2) / den, wc = 1.0 / den;
	Signal out;
	out.grid = g;
	out.values.resize(r1.values.size());
	for (std::size_t i = 0; i < out.values.size(); ++i)
		out.values[i] =
		    wa * r1.values[i] + wb * r2.values[i] + wc * r4.values[i];
	out.warnings = r1.warnings;
	return out;
}

double band_mass_below(const TestFunction& f, double cut)
{
	const int n = f.dim();
	GridND g = (n == 2) ? GridND::square(2, -64.0, 63.5, 256)
	                    : GridND::square(n, -64.0, 63.0, 128);
	SampledField sf = sample(f, g);
	SpectrumND sp = dft(sf);
	double below = 0.0, total = 0.0;
	int k[8];
	for (std::size_t i = 0; i < sp.coeff.size(); ++i) {
		double m = std::norm(sp.coeff[i]);
		total += m;
		sp.grid.unflatten(i, k);
		if (std::abs(sp.freq(n - 1, k[n - 1])) < cut)
			below += m;
	}
	return total > 0.0 ? below / total : 0.0;
}

void require_phi(const TestFunction& f)
{
	if (f.kind() != FnKind::BandLimited)
		throw std::invalid_argument(
		    "negative orders need the vanishing-moment (band-limited) class");
	if (band_mass_below(f, f.band_r0()) >= 1e-12)
		throw std::runtime_error(
		    "require_phi: spectral mass near tau = 0 above 1e-12");
}

namespace {

// Slope-slice cache for the T / T* composition pipelines (n = 2).
// T*f is sampled on a common offset grid for a fine ladder of slopes; the
// outer transversal integral and both 1-D fractional steps act afterwards
// on the composed signal (the fractional convolutions commute with the
// slope integral and with the x_n shifts).
struct DualCache {
	std::vector<double> ynodes;
	double wq = 0.0;
	Grid1D sgrid{-105.0, 105.0, 1681};
	std::vector<std::vector<cd>> slices;
};

const DualCache& dual_cache(const TestFunction& f)
{
	static std::map<std::string, std::shared_ptr<DualCache>> cache;
	static std::mutex mu;
	std::string key = f.name();
	{
		std::lock_guard<std::mutex> lock(mu);
		auto it = cache.find(key);
		if (it != cache.end())
			return *it->second;
	}
	auto c = std::make_shared<DualCache>();
	const double ymax = 4.5;
	const int m = 180;  // slope step 0.025: resolves the band-limited slices
	c->wq = ymax / m;
	for (int j = -m; j <= m; ++j)
		c->ynodes.push_back(j * c->wq);
	c->slices.resize(c->ynodes.size());
	FieldFn ff = FieldFn::from(f);
	parallel_for(c->ynodes.size(), [&](std::size_t i) {
		double y = c->ynodes[i];
		QuadOpts o;
		o.step = ff.step / (1.0 + std::abs(y));
		c->slices[i] =
		    transversal_slice(ff, &y, c->sgrid, o, true, false).values;
	});
	std::lock_guard<std::mutex> lock(mu);
	auto [it, ok] = cache.emplace(key, c);
	(void)ok;
	return *it->second;
}

// (T T* f)(x', .) on [-96, 96]
Signal outer_compose(const DualCache& c, double xprime)
{
	Signal w;
	w.grid = Grid1D(-96.0, 96.0, 1537);
	w.values.assign(1537, 0.0);
	for (std::size_t j = 0; j < c.ynodes.size(); ++j) {
		const double shift = xprime * c.ynodes[j];
		const auto& sl = c.slices[j];
		for (int k = 0; k < 1537; ++k)
			w.values[k] += interp_cubic(c.sgrid, sl, w.grid.node(k) + shift);
	}
	for (auto& v : w.values)
		v *= c.wq;
	return w;
}

void merge_warnings(CompositionReport& rep, const Signal& s)
{
	for (auto& w : s.warnings)
		if (std::find(rep.warnings.begin(), rep.warnings.end(), w) ==
		    rep.warnings.end())
			rep.warnings.push_back(w);
}

int patch_index(double xn)
{
	return (int)std::llround((xn + 96.0) / 0.125);
}

} // namespace

CompositionReport invert_check(const TestFunction& f)
{
	if (f.dim() != 2)
		throw std::invalid_argument("invert_check: n = 2 only");
	require_phi(f);
	const DualCache& c = dual_cache(f);
	CompositionReport rep;
	const FracOrder half(cd(-0.5, 0.0));
	double num = 0.0, den = 0.0;
	for (int ix = 0; ix <= 32; ++ix) {
		const double xp = -2.0 + 0.125 * ix;
		Signal w = outer_compose(c, xp);
		Signal a = rl_continued(w, half, Side::Minus);
		Signal b = rl_continued(a, half, Side::Plus);
		merge_warnings(rep, b);
		for (int k = 0; k <= 32; ++k) {
			const double xn = -2.0 + 0.125 * k;
			const cd got = b.values[patch_index(xn)] / (2.0 * PI);
			const double xv[2] = {xp, xn};
			const cd ref = f.value(xv);
			num += std::norm(got - ref);
			den += std::norm(ref);
		}
	}
	rep.rel_l2 = std::sqrt(num / den);
	return rep;
}

CompositionReport composition_check(const TestFunction& f, cd alpha, cd beta)
{
	if (f.dim() != 2)
		throw std::invalid_argument("composition_check: n = 2 only");
	require_phi(f);
	const DualCache& c = dual_cache(f);
	CompositionReport rep;
	SampledField sf = sample(f, GridND::square(2, -64.0, 63.75, 512));
	// T T* contributes 2 pi / |xi_n|; the two one-sided orders act in the
	// last variable only
	SampledField rhs = apply_multiplier_nd(
	    sf,
	    [alpha, beta](const double* xi) -> cd {
		    if (xi[1] == 0.0)
			    return 0.0;
		    return 2.0 * PI * fourier_symbol(alpha, xi[1], Side::Plus) *
		           fourier_symbol(beta, xi[1], Side::Minus) /
		           std::abs(xi[1]);
	    },
	    ZeroBin::Error);
	double num = 0.0, den = 0.0;
	for (int ix = 0; ix <= 16; ++ix) {
		const double xp = -2.0 + 0.25 * ix;
		Signal w = outer_compose(c, xp);
		Signal a = rl_continued(w, FracOrder(beta), Side::Minus);
		Signal b = rl_continued(a, FracOrder(alpha), Side::Plus);
		merge_warnings(rep, b);
		const int kx = (int)std::llround((xp + 64.0) / 0.25);
		for (int k = 0; k <= 16; ++k) {
			const double xn = -2.0 + 0.25 * k;
			const int ky = (int)std::llround((xn + 64.0) / 0.25);
			const cd got = b.values[patch_index(xn)];
			const cd ref = rhs.values[(std::size_t)kx * 512 + ky];
			num += std::norm(got - ref);
			den += std::norm(ref);
		}
	}
	rep.rel_l2 = std::sqrt(num / den);
	return rep;
}

CompositionReport tt_star_check(const TestFunction& f)
{
	if (f.dim() != 2)
		throw std::invalid_argument("tt_star_check: n = 2 only");
	require_phi(f);
	const DualCache& c = dual_cache(f);
	CompositionReport rep;
	SampledField sf = sample(f, GridND::square(2, -64.0, 63.75, 512));
	// T T* f = 2 pi I^1 f with the Riesz integral taken along x_n alone
	SampledField rhs = apply_multiplier_nd(
	    sf,
	    [](const double* xi) -> cd {
		    return xi[1] == 0.0 ? cd(0.0) : cd(1.0 / std::abs(xi[1]));
	    },
	    ZeroBin::Error);
	double num = 0.0, den = 0.0;
	for (int ix = 0; ix <= 16; ++ix) {
		const double xp = -2.0 + 0.25 * ix;
		Signal w = outer_compose(c, xp);
		const int kx = (int)std::llround((xp + 64.0) / 0.25);
		for (int k = 0; k <= 16; ++k) {
			const double xn = -2.0 + 0.25 * k;
			const int ky = (int)std::llround((xn + 64.0) / 0.25);
			const cd got = w.values[patch_index(xn)];
			const cd ref = 2.0 * PI * rhs.values[(std::size_t)kx * 512 + ky];
			num += std::norm(got - ref);
			den += std::norm(ref);
		}
	}
	rep.rel_l2 = std::sqrt(num / den);
	return rep;
}

} // namespace radonfrac
