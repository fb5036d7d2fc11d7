#include "radonfrac/functions.hpp"
#include "radonfrac/gamma.hpp"
#include "radonfrac/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace radonfrac {

namespace {

double dot(const double* a, const double* b, int n)
{
	double s = 0.0;
	for (int i = 0; i < n; ++i)
		s += a[i] * b[i];
	return s;
}

// integral of exp(-1/(1-r^2)) r^{n-1} over [0,1] by panelled Gauss-Legendre;
// the integrand is smooth and vanishes with all derivatives at r = 1
double bump_radial_integral(int n)
{
	std::vector<double> xs, ws;
	double s = 0.0;
	const int panels = 16;
	for (int p = 0; p < panels; ++p) {
		gauss_legendre(24, (double)p / panels, (double)(p + 1) / panels,
		               xs, ws);
		for (std::size_t i = 0; i < xs.size(); ++i) {
			double r = xs[i];
			s += ws[i] * std::exp(-1.0 / (1.0 - r * r)) *
			     std::pow(r, n - 1);
		}
	}
	return s;
}

} // namespace

TestFunction TestFunction::gaussian(double a, int n)
{
	if (a <= 0 || n < 1)
		throw std::invalid_argument("gaussian: a > 0, n >= 1 required");
	TestFunction f;
	f.kind_ = FnKind::Gaussian;
	f.n_ = n;
	f.a_ = a;
	return f;
}

TestFunction TestFunction::mollifier(double eps, int n)
{
	if (eps <= 0 || n < 1)
		throw std::invalid_argument("mollifier: eps > 0, n >= 1 required");
	TestFunction f;
	f.kind_ = FnKind::Mollifier;
	f.n_ = n;
	f.eps_ = eps;
	f.moll_c_ = 1.0 / (sphere_area(n) * bump_radial_integral(n));
	return f;
}

TestFunction TestFunction::logdecay(double p, int n)
{
	if (p < 1 || n < 1)
		throw std::invalid_argument("logdecay: p >= 1, n >= 1 required");
	TestFunction f;
	f.kind_ = FnKind::LogDecay;
	f.n_ = n;
	f.p_ = p;
	return f;
}

TestFunction TestFunction::bandlimited(double r0, double r1, unsigned seed,
                                       int n, int atoms)
{
	if (!(0 < r0 && r0 < r1) || n < 1 || atoms < 1 || atoms > 16)
		throw std::invalid_argument("bandlimited: need 0 < r0 < r1, 1 <= atoms <= 16");
	TestFunction f;
	f.kind_ = FnKind::BandLimited;
	f.n_ = n;
	f.r0_ = r0;
	f.r1_ = r1;
	f.seed_ = seed;
	f.sigma_ = std::max(8.0, 10.8 / (r1 - r0));
	const double din = 5.4 / f.sigma_, dout = 6.2 / f.sigma_;
	const double lat = 0.25;
	// admissible lattice frequencies, representative half-space xi_n > 0
	std::vector<std::array<double, 3>> cand;
	double rmax = r1 - dout;
	int kmax = (int)std::floor(rmax / lat);
	auto admissible = [&](const std::array<double, 3>& xi) {
		double nrm2 = 0.0;
		for (int i = 0; i < n; ++i)
			nrm2 += xi[i] * xi[i];
		return xi[n - 1] >= r0 + din - 1e-12 && nrm2 <= rmax * rmax + 1e-12;
	};
	if (n == 1) {
		for (int k = 1; k <= kmax; ++k) {
			std::array<double, 3> xi{k * lat, 0, 0};
			if (admissible(xi))
				cand.push_back(xi);
		}
	} else if (n == 2) {
		for (int kn = 1; kn <= kmax; ++kn)
			for (int k1 = -kmax; k1 <= kmax; ++k1) {
				std::array<double, 3> xi{k1 * lat, kn * lat, 0};
				if (admissible(xi))
					cand.push_back(xi);
			}
	} else {
		for (int kn = 1; kn <= kmax; ++kn)
			for (int k1 = -kmax; k1 <= kmax; ++k1)
				for (int k2 = -kmax; k2 <= kmax; ++k2) {
					std::array<double, 3> xi{k1 * lat, k2 * lat, kn * lat};
					if (admissible(xi))
						cand.push_back(xi);
				}
	}
	if (cand.empty())
		throw std::invalid_argument(
		    "bandlimited: empty admissible band (r1 - r0 too small)");
	std::mt19937 rng(seed);
	std::uniform_real_distribution<double> uph(0.0, 2.0 * PI);
	int m = std::min<int>(atoms, (int)cand.size());
	for (int i = 0; i < m; ++i) {
		std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
		std::size_t j = pick(rng);
		BandAtom at;
		at.freq = cand[j];
		at.phase = uph(rng);
		f.atoms_.push_back(at);
		cand.erase(cand.begin() + j);
	}
	return f;
}

std::string TestFunction::name() const
{
	std::ostringstream os;
	switch (kind_) {
	case FnKind::Gaussian: os << "gaussian:a=" << a_; break;
	case FnKind::Mollifier: os << "mollifier:eps=" << eps_; break;
	case FnKind::LogDecay: os << "logdecay:p=" << p_; break;
	case FnKind::BandLimited:
		os << "bandlimited:r0=" << r0_ << ",r1=" << r1_ << ",seed=" << seed_;
		break;
	}
	os << ",n=" << n_;
	return os.str();
}

TestFunction TestFunction::parse(const std::string& dsl, int default_n)
{
	auto colon = dsl.find(':');
	std::string head = dsl.substr(0, colon);
	double a = 1, eps = 1, p = 2, r0 = 1, r1 = 3;
	unsigned seed = 7;
	int n = default_n, atoms = 8;
	if (colon != std::string::npos) {
		std::stringstream ss(dsl.substr(colon + 1));
		std::string kv;
		while (std::getline(ss, kv, ',')) {
			auto eq = kv.find('=');
			if (eq == std::string::npos)
				throw std::invalid_argument("function DSL: expected key=value, got '" +
				                            kv + "'");
			std::string key = kv.substr(0, eq);
			double val = std::stod(kv.substr(eq + 1));
			if (key == "a") a = val;
			else if (key == "eps") eps = val;
			else if (key == "p") p = val;
			else if (key == "r0") r0 = val;
			else if (key == "r1") r1 = val;
			else if (key == "seed") seed = (unsigned)val;
			else if (key == "n") n = (int)val;
			else if (key == "atoms") atoms = (int)val;
			else
				throw std::invalid_argument("function DSL: unknown key '" + key + "'");
		}
	}
	if (head == "gaussian") return gaussian(a, n);
	if (head == "mollifier") return mollifier(eps, n);
	if (head == "logdecay") return logdecay(p, n);
	if (head == "bandlimited") return bandlimited(r0, r1, seed, n, atoms);
	throw std::invalid_argument("function DSL: unknown kind '" + head + "'");
}

cd TestFunction::value(const double* x) const
{
	switch (kind_) {
	case FnKind::Gaussian: {
		return std::exp(-a_ * dot(x, x, n_));
	}
	case FnKind::Mollifier: {
		double r2 = dot(x, x, n_);
		double e2 = eps_ * eps_;
		if (r2 >= e2)
			return 0.0;
		return moll_c_ / std::pow(eps_, n_) * std::exp(-e2 / (e2 - r2));
	}
	case FnKind::LogDecay: {
		double r = std::sqrt(dot(x, x, n_));
		return std::pow(2.0 + r, -(double)n_ / p_) / std::log(2.0 + r);
	}
	case FnKind::BandLimited: {
		double env = std::exp(-dot(x, x, n_) / (2.0 * sigma_ * sigma_));
		double trig = 0.0;
		for (auto& at : atoms_)
			trig += 2.0 * std::cos(dot(at.freq.data(), x, n_) + at.phase);
		return trig * env;
	}
	}
	return 0.0;
}

cd TestFunction::value(const std::vector<double>& x) const
{
	if ((int)x.size() != n_)
		throw std::invalid_argument("evaluate: dimension mismatch");
	return value(x.data());
}

void TestFunction::eval_ray(const double* x0, const double* dir, double step,
                            int count, cd* out) const
{
	if (kind_ == FnKind::Mollifier || kind_ == FnKind::LogDecay) {
		double x[3];
		for (int k = 0; k < count; ++k) {
			for (int i = 0; i < n_; ++i)
				x[i] = x0[i] + k * step * dir[i];
			out[k] = value(x);
		}
		return;
	}
	// gaussian envelope exp(A + Bk + Ck^2), refreshed blockwise to cap the
	// drift of the multiplicative recurrence and to survive underflow
	const double c = (kind_ == FnKind::Gaussian) ? a_ : 1.0 / (2.0 * sigma_ * sigma_);
	const double A = -c * dot(x0, x0, n_);
	const double B = -c * 2.0 * step * dot(x0, dir, n_);
	const double C = -c * step * step * dot(dir, dir, n_);
	const double m2 = std::exp(2.0 * C);
	const int nat = (int)atoms_.size();
	cd z[16], rot[16];
	for (int j = 0; j < nat; ++j) {
		double w = dot(atoms_[j].freq.data(), dir, n_) * step;
		rot[j] = cd(std::cos(w), std::sin(w));
	}
	double env = 0.0, u = 0.0, le = 0.0, dle = 0.0;
	const int block = 64;
	for (int k = 0; k < count; ++k) {
		if (k % block == 0) {
			le = A + B * k + C * (double)k * k;
			dle = B + C * (2.0 * k + 1.0);
			env = (le < -700.0) ? 0.0 : std::exp(le);
			u = std::exp(dle);
			for (int j = 0; j < nat; ++j) {
				double ph = atoms_[j].phase;
				for (int i = 0; i < n_; ++i)
					ph += atoms_[j].freq[i] * (x0[i] + k * step * dir[i]);
				z[j] = cd(std::cos(ph), std::sin(ph));
			}
		}
		if (kind_ == FnKind::Gaussian) {
			out[k] = env;
		} else {
			double trig = 0.0;
			for (int j = 0; j < nat; ++j)
				trig += z[j].real();
			out[k] = 2.0 * trig * env;
		}
		// the exponent is carried additively so that the recurrence can
		// be re-seeded when exp(dle) over- or underflows (0 * inf = nan).
		// The -700 cutoff keeps every re-seed in the normal range: seeding
		// a subnormal loses up to all of its precision, and the error
		// would persist through the multiplicative recurrence
		le += dle;
		dle += 2.0 * C;
		if (le < -700.0) {
			env = 0.0;
		} else {
			env *= u;
			if (!(env > 0.0) || !std::isfinite(env))
				env = std::exp(le);
		}
		u *= m2;
		for (int j = 0; j < nat; ++j)
			z[j] *= rot[j];
	}
}

cd TestFunction::partial(const double* x, int axis) const
{
	switch (kind_) {
	case FnKind::Gaussian:
		return -2.0 * a_ * x[axis] * value(x);
	case FnKind::Mollifier: {
		double r2 = dot(x, x, n_);
		double e2 = eps_ * eps_;
		if (r2 >= e2)
			return 0.0;
		double d = e2 - r2;
		return value(x) * (-2.0 * e2 * x[axis] / (d * d));
	}
	case FnKind::BandLimited: {
		double env = std::exp(-dot(x, x, n_) / (2.0 * sigma_ * sigma_));
		double t0 = 0.0, t1 = 0.0;
		for (auto& at : atoms_) {
			double ph = dot(at.freq.data(), x, n_) + at.phase;
			t0 += 2.0 * std::cos(ph);
			t1 += -2.0 * at.freq[axis] * std::sin(ph);  // 2 Re(i xi z)
		}
		return (t1 - x[axis] / (sigma_ * sigma_) * t0) * env;
	}
	default:
		throw std::runtime_error("partial: no analytic derivative for this kind");
	}
}

cd TestFunction::partial2(const double* x, int axis) const
{
	switch (kind_) {
	case FnKind::Gaussian:
		return (-2.0 * a_ + 4.0 * a_ * a_ * x[axis] * x[axis]) * value(x);
	case FnKind::BandLimited: {
		double s2 = sigma_ * sigma_;
		double env = std::exp(-dot(x, x, n_) / (2.0 * s2));
		double t0 = 0.0, t1 = 0.0, t2 = 0.0;
		for (auto& at : atoms_) {
			double ph = dot(at.freq.data(), x, n_) + at.phase;
			double w = at.freq[axis];
			t0 += 2.0 * std::cos(ph);
			t1 += -2.0 * w * std::sin(ph);
			t2 += -2.0 * w * w * std::cos(ph);
		}
		double g = -x[axis] / s2;
		return (t2 + 2.0 * t1 * g + t0 * (g * g - 1.0 / s2)) * env;
	}
	default:
		throw std::runtime_error("partial2: no analytic derivative for this kind");
	}
}

cd TestFunction::laplacian(const double* x) const
{
	cd s = 0.0;
	for (int i = 0; i < n_; ++i)
		s += partial2(x, i);
	return s;
}

cd TestFunction::fourier(const double* xi) const
{
	switch (kind_) {
	case FnKind::Gaussian: {
		double q = dot(xi, xi, n_);
		return std::pow(PI / a_, 0.5 * n_) * std::exp(-q / (4.0 * a_));
	}
	case FnKind::BandLimited: {
		double s2 = sigma_ * sigma_;
		double norm = std::pow(2.0 * PI * s2, 0.5 * n_);
		cd s = 0.0;
		for (auto& at : atoms_) {
			double dp = 0.0, dm = 0.0;
			for (int i = 0; i < n_; ++i) {
				double vp = xi[i] + at.freq[i], vm = xi[i] - at.freq[i];
				dp += vp * vp;
				dm += vm * vm;
			}
			cd c(std::cos(at.phase), std::sin(at.phase));
			s += c * std::exp(-0.5 * s2 * dp) + std::conj(c) * std::exp(-0.5 * s2 * dm);
		}
		return norm * s;
	}
	default:
		throw std::runtime_error("fourier: no closed form for this kind");
	}
}

double TestFunction::suggested_radius() const
{
	switch (kind_) {
	case FnKind::Gaussian: return std::sqrt(32.0 / a_);
	case FnKind::Mollifier: return eps_;
	case FnKind::BandLimited: return 8.0 * sigma_;
	default: return std::numeric_limits<double>::infinity();
	}
}

double TestFunction::suggested_step() const
{
	switch (kind_) {
	case FnKind::Gaussian: return 0.25 / std::sqrt(a_);
	case FnKind::Mollifier: return eps_ / 256.0;
	case FnKind::BandLimited: return std::min(0.3, 0.9 / r1_);
	default: return 0.25;
	}
}

SampledField sample(const TestFunction& f, const GridND& g)
{
	if (f.dim() != g.n)
		throw std::invalid_argument("sample: dimension mismatch");
	SampledField out;
	out.grid = g;
	out.values.resize(g.size());
	const Grid1D& last = g.axes[g.n - 1];
	std::size_t rows = g.size() / last.count;
	double dir[3] = {0, 0, 0};
	dir[g.n - 1] = 1.0;
	for (std::size_t r = 0; r < rows; ++r) {
		double x0[3];
		g.node(r * last.count, x0);
		f.eval_ray(x0, dir, last.h(), last.count, &out.values[r * last.count]);
	}
	return out;
}

double gaussian_radon_oracle(int n, double t)
{
	if (n < 2)
		throw std::invalid_argument("gaussian_radon_oracle: n >= 2 required");
	return std::pow(PI, 0.5 * (n - 1)) * std::exp(-t * t);
}

cd interp_cubic(const Grid1D& g, const std::vector<cd>& v, double x)
{
	if (!g.contains(x))
		return 0.0;
	double h = g.h();
	int i = g.cell(x);
	double s = (x - g.node(i)) / h;
	if (i == 0 || i >= g.count - 2) {
		// linear at the edges
		return v[i] * (1.0 - s) + v[i + 1] * s;
	}
	// 4-point Lagrange on nodes i-1..i+2
	double sm = s + 1.0, s1 = s - 1.0, s2 = s - 2.0;
	double c0 = -s * s1 * s2 / 6.0;
	double c1 = sm * s1 * s2 / 2.0;
	double c2 = -sm * s * s2 / 2.0;
	double c3 = sm * s * s1 / 6.0;
	return c0 * v[i - 1] + c1 * v[i] + c2 * v[i + 1] + c3 * v[i + 2];
}

cd interp_linear(const Grid1D& g, const std::vector<cd>& v, double x)
{
	if (!g.contains(x))
		throw std::out_of_range("interp_linear: point outside grid");
	int i = g.cell(x);
	double s = (x - g.node(i)) / g.h();
	return v[i] * (1.0 - s) + v[i + 1] * s;
}

} // namespace radonfrac
