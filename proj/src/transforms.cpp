#include "radonfrac/transforms.hpp"
#include "radonfrac/gamma.hpp"
#include "radonfrac/quad.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <thread>

namespace radonfrac {

int thread_count()
{
	static int n = [] {
		if (const char* e = std::getenv("FRACRADON_THREADS")) {
			int v = std::atoi(e);
			if (v >= 1)
				return v;
		}
		unsigned hc = std::thread::hardware_concurrency();
		return hc ? (int)hc : 1;
	}();
	return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn)
{
	int nt = thread_count();
	if (nt <= 1 || count < 2) {
		for (std::size_t i = 0; i < count; ++i)
			fn(i);
		return;
	}
	nt = std::min<std::size_t>(nt, count);
	std::vector<std::thread> pool;
	for (int t = 0; t < nt; ++t) {
		std::size_t a = count * t / nt, b = count * (t + 1) / nt;
		pool.emplace_back([a, b, &fn] {
			for (std::size_t i = a; i < b; ++i)
				fn(i);
		});
	}
	for (auto& th : pool)
		th.join();
}

void FieldFn::eval_ray(const double* x0, const double* dir, double h, int count,
                       cd* out) const
{
	if (ray) {
		ray(x0, dir, h, count, out);
		return;
	}
	double x[3];
	for (int k = 0; k < count; ++k) {
		for (int i = 0; i < n; ++i)
			x[i] = x0[i] + k * h * dir[i];
		out[k] = value(x);
	}
}

cd FieldFn::laplacian(const double* x) const
{
	if (!part2)
		throw std::runtime_error("FieldFn: no second derivatives");
	cd s = 0.0;
	for (int a = 0; a < n; ++a)
		s += part2(x, a);
	return s;
}

FieldFn FieldFn::from(const TestFunction& f)
{
	auto p = std::make_shared<TestFunction>(f);
	FieldFn ff;
	ff.n = f.dim();
	ff.radius = f.suggested_radius();
	ff.step = f.suggested_step();
	ff.value = [p](const double* x) { return p->value(x); };
	ff.ray = [p](const double* x0, const double* d, double h, int c, cd* out) {
		p->eval_ray(x0, d, h, c, out);
	};
	if (f.has_derivatives()) {
		ff.part = [p](const double* x, int a) { return p->partial(x, a); };
		if (f.kind() != FnKind::Mollifier)
			ff.part2 = [p](const double* x, int a) { return p->partial2(x, a); };
	}
	return ff;
}

FieldFn FieldFn::dn(int order) const
{
	if (order == 0)
		return *this;
	FieldFn d;
	d.n = n;
	d.radius = radius;
	d.step = step;
	int last = n - 1;
	if (order == 1) {
		if (!part)
			throw std::runtime_error("FieldFn::dn: no first derivatives");
		auto pf = part;
		d.value = [pf, last](const double* x) { return pf(x, last); };
	} else if (order == 2) {
		if (!part2)
			throw std::runtime_error("FieldFn::dn: no second derivatives");
		auto pf = part2;
		d.value = [pf, last](const double* x) { return pf(x, last); };
	} else {
		throw std::runtime_error("FieldFn::dn: order <= 2 supported");
	}
	return d;
}

namespace {

struct RQuad {
	double L;
	double step;
	int m;  // nodes per half-axis; count = 2m+1
};

RQuad resolve(const FieldFn& f, const QuadOpts& o)
{
	RQuad q;
	q.L = o.L > 0 ? o.L : f.radius;
	if (!std::isfinite(q.L))
		throw std::invalid_argument(
		    "quadrature: truncation radius required for slowly decaying input");
	q.step = o.step > 0 ? o.step : f.step;
	q.m = (int)std::ceil(q.L / q.step);
	q.step = q.L / q.m;
	return q;
}

void decay_warn(const QuadOpts& o, const cd* buf, int count, const char* what)
{
	if (!o.warnings)
		return;
	double mx = 0.0;
	for (int i = 0; i < count; ++i)
		mx = std::max(mx, std::abs(buf[i]));
	if (std::abs(buf[0]) > o.decay_tol * mx ||
	    std::abs(buf[count - 1]) > o.decay_tol * mx)
		o.warnings->push_back(std::string(what) +
		                      ": integrand not decayed at truncation radius");
}

double integrate_gl_panels(const std::function<double(double)>& fn, double a,
                           double b, double first = 1.0)
{
	std::vector<double> x, w;
	double s = 0.0, left = a;
	double width = std::min(first, b - a);
	while (left < b - 1e-14 * (1.0 + std::abs(b))) {
		double right = std::min(b, left + width);
		gauss_legendre(32, left, right, x, w);
		for (int i = 0; i < 32; ++i)
			s += w[i] * fn(x[i]);
		left = right;
		width *= 2.0;
	}
	return s;
}

} // namespace

void theta_basis(const double* th, int n, double* u1, double* u2)
{
	if (n == 2) {
		u1[0] = -th[1];
		u1[1] = th[0];
		return;
	}
	double s = th[2] >= 0 ? 1.0 : -1.0;
	double c = 1.0 / (1.0 + s * th[2]);
	double v[3] = {th[0], th[1], th[2] + s};
	for (int i = 0; i < 3; ++i) {
		u1[i] = (i == 0 ? 1.0 : 0.0) - c * th[0] * v[i];
		u2[i] = (i == 1 ? 1.0 : 0.0) - c * th[1] * v[i];
	}
}

DirectionSet DirectionSet::circle(int M)
{
	if (M < 2 || M % 2)
		throw std::invalid_argument("DirectionSet::circle: even M >= 2 required");
	DirectionSet d;
	d.n = 2;
	for (int i = 0; i < M; ++i) {
		double a = 2.0 * PI * i / M;
		d.dirs.push_back({std::cos(a), std::sin(a), 0.0});
		d.weights.push_back(2.0 * PI / M);
	}
	return d;
}

DirectionSet DirectionSet::sphere(int npolar, int nazimuth)
{
	if (npolar < 2 || nazimuth < 2 || nazimuth % 2)
		throw std::invalid_argument("DirectionSet::sphere: bad layout");
	DirectionSet d;
	d.n = 3;
	d.polar = npolar;
	d.azimuth = nazimuth;
	std::vector<double> c, w;
	gauss_legendre(npolar, c, w);
	for (int j = 0; j < npolar; ++j) {
		double st = std::sqrt(std::max(0.0, 1.0 - c[j] * c[j]));
		for (int k = 0; k < nazimuth; ++k) {
			double ps = 2.0 * PI * k / nazimuth;
			d.dirs.push_back({st * std::cos(ps), st * std::sin(ps), c[j]});
			d.weights.push_back(w[j] * 2.0 * PI / nazimuth);
		}
	}
	return d;
}

int DirectionSet::antipode(int i) const
{
	if (n == 2) {
		int M = size();
		return (i + M / 2) % M;
	}
	int j = i / azimuth, k = i % azimuth;
	return (polar - 1 - j) * azimuth + (k + azimuth / 2) % azimuth;
}

cd radon(const FieldFn& f, const double* theta, double t, QuadOpts opts)
{
	RQuad q = resolve(f, opts);
	double u1[3], u2[3];
	theta_basis(theta, f.n, u1, u2);
	int count = 2 * q.m + 1;
	std::vector<cd> buf(count);
	if (f.n == 2) {
		double x0[2] = {t * theta[0] - q.L * u1[0], t * theta[1] - q.L * u1[1]};
		f.eval_ray(x0, u1, q.step, count, buf.data());
		decay_warn(opts, buf.data(), count, "radon");
		cd s = 0.0;
		for (auto& v : buf)
			s += v;
		return s * q.step;
	}
	cd s = 0.0;
	for (int i = 0; i < count; ++i) {
		double s1 = -q.L + i * q.step;
		double x0[3];
		for (int a = 0; a < 3; ++a)
			x0[a] = t * theta[a] + s1 * u1[a] - q.L * u2[a];
		f.eval_ray(x0, u2, q.step, count, buf.data());
		for (auto& v : buf)
			s += v;
	}
	return s * q.step * q.step;
}

cd radon(const TestFunction& f, const double* theta, double t, QuadOpts opts)
{
	return radon(FieldFn::from(f), theta, t, opts);
}

Signal radon_slice(const FieldFn& f, const double* theta, const Grid1D& tgrid,
                   QuadOpts opts, bool analytic_deriv)
{
	RQuad q = resolve(f, opts);
	double u1[3], u2[3];
	theta_basis(theta, f.n, u1, u2);
	int count = 2 * q.m + 1;
	Signal out;
	out.grid = tgrid;
	out.values.assign(tgrid.count, 0.0);
	std::vector<cd> buf(tgrid.count);
	if (f.n == 2) {
		for (int i = 0; i < count; ++i) {
			double s1 = -q.L + i * q.step;
			double x0[2] = {tgrid.lo * theta[0] + s1 * u1[0],
			                tgrid.lo * theta[1] + s1 * u1[1]};
			f.eval_ray(x0, theta, tgrid.h(), tgrid.count, buf.data());
			for (int k = 0; k < tgrid.count; ++k)
				out.values[k] += buf[k];
		}
		for (auto& v : out.values)
			v *= q.step;
	} else {
		for (int i = 0; i < count; ++i)
			for (int j = 0; j < count; ++j) {
				double s1 = -q.L + i * q.step, s2 = -q.L + j * q.step;
				double x0[3];
				for (int a = 0; a < 3; ++a)
					x0[a] = tgrid.lo * theta[a] + s1 * u1[a] + s2 * u2[a];
				f.eval_ray(x0, theta, tgrid.h(), tgrid.count, buf.data());
				for (int k = 0; k < tgrid.count; ++k)
					out.values[k] += buf[k];
			}
		for (auto& v : out.values)
			v *= q.step * q.step;
	}
	if (analytic_deriv && f.part) {
		FieldFn fc = f;
		double th[3] = {theta[0], theta[1], f.n == 3 ? theta[2] : 0.0};
		Grid1D g = tgrid;
		out.deriv = [fc, th, g, opts](int order) -> std::vector<cd> {
			// d/dt Rf = sum_k theta_k R[d_k f]; d^2/dt^2 Rf = R[Laplacian f]
			if (order == 1) {
				std::vector<cd> acc(g.count, 0.0);
				for (int a = 0; a < fc.n; ++a) {
					FieldFn da;
					da.n = fc.n;
					da.radius = fc.radius;
					da.step = fc.step;
					auto pf = fc.part;
					da.value = [pf, a](const double* x) { return pf(x, a); };
					Signal s = radon_slice(da, th, g, opts, false);
					for (int k = 0; k < g.count; ++k)
						acc[k] += th[a] * s.values[k];
				}
				return acc;
			}
			if (order == 2) {
				FieldFn la;
				la.n = fc.n;
				la.radius = fc.radius;
				la.step = fc.step;
				la.value = [fc](const double* x) { return fc.laplacian(x); };
				return radon_slice(la, th, g, opts, false).values;
			}
			throw std::runtime_error("radon_slice: derivative order <= 2");
		};
	}
	return out;
}

CylinderField radon_field(const FieldFn& f, const DirectionSet& dirs,
                          const Grid1D& offsets, QuadOpts opts)
{
	CylinderField out;
	out.dirs = dirs;
	out.offsets = offsets;
	out.values.assign((std::size_t)dirs.size() * offsets.count, 0.0);
	parallel_for(dirs.size(), [&](std::size_t i) {
		Signal s = radon_slice(f, dirs.dirs[i].data(), offsets, opts, false);
		std::copy(s.values.begin(), s.values.end(),
		          out.values.begin() + i * offsets.count);
	});
	return out;
}

double radon_radial(const std::function<double(double)>& f0, int n, double t,
                    double R)
{
	double at = std::abs(t);
	if (at >= R)
		return 0.0;
	if (n == 3) {
		return sphere_area(2) *
		       integrate_gl_panels([&](double r) { return f0(r) * r; }, at, R);
	}
	if (n != 2)
		throw std::invalid_argument("radon_radial: n in {2,3}");
	if (at < 1e-300)
		return 2.0 * integrate_gl_panels(f0, 0.0, R);
	double umax = std::acosh(R / at);
	return 2.0 * integrate_gl_panels(
	                 [&](double u) {
		                 double r = at * std::cosh(u);
		                 return f0(r) * r;
	                 },
	                 0.0, umax, 0.5);
}

namespace {

cd transversal_core(const FieldFn& f, const double* x, double sgn, QuadOpts opts)
{
	RQuad q = resolve(f, opts);
	int count = 2 * q.m + 1;
	std::vector<cd> buf(count);
	if (f.n == 2) {
		double dir[2] = {1.0, sgn * x[0]};
		double x0[2] = {-q.L, x[1] - sgn * x[0] * q.L};
		f.eval_ray(x0, dir, q.step, count, buf.data());
		decay_warn(opts, buf.data(), count, "transversal");
		cd s = 0.0;
		for (auto& v : buf)
			s += v;
		return s * q.step;
	}
	cd s = 0.0;
	double dir[3] = {0.0, 1.0, sgn * x[1]};
	for (int i = 0; i < count; ++i) {
		double y1 = -q.L + i * q.step;
		double x0[3] = {y1, -q.L, x[2] + sgn * (x[0] * y1 - x[1] * q.L)};
		f.eval_ray(x0, dir, q.step, count, buf.data());
		for (auto& v : buf)
			s += v;
	}
	return s * q.step * q.step;
}

} // namespace

cd transversal(const FieldFn& f, const double* x, QuadOpts opts)
{
	return transversal_core(f, x, +1.0, opts);
}

cd transversal_dual(const FieldFn& g, const double* x, QuadOpts opts)
{
	return transversal_core(g, x, -1.0, opts);
}

Signal transversal_slice(const FieldFn& f, const double* xprime,
                         const Grid1D& xngrid, QuadOpts opts, bool dual,
                         bool analytic_deriv)
{
	RQuad q = resolve(f, opts);
	double sgn = dual ? -1.0 : 1.0;
	int count = 2 * q.m + 1;
	Signal out;
	out.grid = xngrid;
	out.values.assign(xngrid.count, 0.0);
	std::vector<cd> buf(xngrid.count);
	double en[3] = {0, 0, 0};
	en[f.n - 1] = 1.0;
	if (f.n == 2) {
		for (int i = 0; i < count; ++i) {
			double y = -q.L + i * q.step;
			double x0[2] = {y, xngrid.lo + sgn * xprime[0] * y};
			f.eval_ray(x0, en, xngrid.h(), xngrid.count, buf.data());
			for (int k = 0; k < xngrid.count; ++k)
				out.values[k] += buf[k];
		}
		for (auto& v : out.values)
			v *= q.step;
	} else {
		for (int i = 0; i < count; ++i)
			for (int j = 0; j < count; ++j) {
				double y1 = -q.L + i * q.step, y2 = -q.L + j * q.step;
				double x0[3] = {y1, y2,
				                xngrid.lo + sgn * (xprime[0] * y1 + xprime[1] * y2)};
				f.eval_ray(x0, en, xngrid.h(), xngrid.count, buf.data());
				for (int k = 0; k < xngrid.count; ++k)
					out.values[k] += buf[k];
			}
		for (auto& v : out.values)
			v *= q.step * q.step;
	}
	if (analytic_deriv && f.part) {
		FieldFn fc = f;
		double xp[2] = {xprime[0], f.n == 3 ? xprime[1] : 0.0};
		Grid1D g = xngrid;
		out.deriv = [fc, xp, g, opts, dual](int order) {
			return transversal_slice(fc.dn(order), xp, g, opts, dual, false).values;
		};
	}
	return out;
}

cd parabolic(const FieldFn& f, const double* x, QuadOpts opts)
{
	RQuad q = resolve(f, opts);
	int count = 2 * q.m + 1;
	cd s = 0.0;
	if (f.n == 2) {
		for (int i = 0; i < count; ++i) {
			double y = -q.L + i * q.step;
			double p[2] = {x[0] - y, x[1] - y * y};
			s += f.value(p);
		}
		return s * q.step;
	}
	for (int i = 0; i < count; ++i)
		for (int j = 0; j < count; ++j) {
			double y1 = -q.L + i * q.step, y2 = -q.L + j * q.step;
			double p[3] = {x[0] - y1, x[1] - y2, x[2] - y1 * y1 - y2 * y2};
			s += f.value(p);
		}
	return s * q.step * q.step;
}

Signal parabolic_slice(const FieldFn& f, const double* xprime,
                       const Grid1D& xngrid, QuadOpts opts)
{
	RQuad q = resolve(f, opts);
	int count = 2 * q.m + 1;
	Signal out;
	out.grid = xngrid;
	out.values.assign(xngrid.count, 0.0);
	std::vector<cd> buf(xngrid.count);
	double en[3] = {0, 0, 0};
	en[f.n - 1] = 1.0;
	if (f.n == 2) {
		for (int i = 0; i < count; ++i) {
			double y = -q.L + i * q.step;
			double x0[2] = {xprime[0] - y, xngrid.lo - y * y};
			f.eval_ray(x0, en, xngrid.h(), xngrid.count, buf.data());
			for (int k = 0; k < xngrid.count; ++k)
				out.values[k] += buf[k];
		}
		for (auto& v : out.values)
			v *= q.step;
	} else {
		for (int i = 0; i < count; ++i)
			for (int j = 0; j < count; ++j) {
				double y1 = -q.L + i * q.step, y2 = -q.L + j * q.step;
				double x0[3] = {xprime[0] - y1, xprime[1] - y2,
				                xngrid.lo - y1 * y1 - y2 * y2};
				f.eval_ray(x0, en, xngrid.h(), xngrid.count, buf.data());
				for (int k = 0; k < xngrid.count; ++k)
					out.values[k] += buf[k];
			}
		for (auto& v : out.values)
			v *= q.step * q.step;
	}
	if (f.part) {
		FieldFn fc = f;
		double xp[2] = {xprime[0], f.n == 3 ? xprime[1] : 0.0};
		Grid1D g = xngrid;
		out.deriv = [fc, xp, g, opts](int order) {
			return parabolic_slice(fc.dn(order), xp, g, opts).values;
		};
	}
	return out;
}

cd radon_dual(const CylinderField& phi, const double* x)
{
	const Grid1D& g = phi.offsets;
	cd s = 0.0;
	for (int i = 0; i < phi.dirs.size(); ++i) {
		double t = 0.0;
		for (int a = 0; a < phi.dirs.n; ++a)
			t += x[a] * phi.dirs.dirs[i][a];
		if (!g.contains(t))
			throw std::out_of_range("radon_dual: x.theta outside the offsets grid");
		int c = g.cell(t);
		double u = (t - g.node(c)) / g.h();
		s += phi.dirs.weights[i] *
		     (phi.at(i, c) * (1.0 - u) + phi.at(i, c + 1) * u);
	}
	return s;
}

CylFn lambda_map(cd alpha, const FieldFn& u, double eq_floor)
{
	FieldFn uc = u;
	return [uc, alpha, eq_floor](const double* theta, double t) -> cd {
		int n = uc.n;
		double tn = theta[n - 1];
		if (std::abs(tn) < eq_floor)
			throw std::domain_error("lambda_map: direction too close to the equator");
		double x[3];
		for (int a = 0; a + 1 < n; ++a)
			x[a] = -theta[a] / tn;
		x[n - 1] = t / tn;
		return std::exp((alpha - 1.0) * std::log(std::abs(tn))) * uc.value(x);
	};
}

FieldFn lambda_inv(cd alpha, const CylFn& phi, int n)
{
	FieldFn f;
	f.n = n;
	f.value = [phi, alpha, n](const double* x) -> cd {
		double q = 1.0;
		for (int a = 0; a + 1 < n; ++a)
			q += x[a] * x[a];
		double r = std::sqrt(q);
		double theta[3];
		for (int a = 0; a + 1 < n; ++a)
			theta[a] = x[a] / r;
		theta[n - 1] = -1.0 / r;
		return std::exp((alpha - 1.0) * 0.5 * std::log(q)) *
		       phi(theta, -x[n - 1] / r);
	};
	return f;
}

FieldFn coordinate_map(MapKind kind, const FieldFn& f)
{
	FieldFn out;
	out.n = f.n;
	out.radius = f.radius;
	out.step = f.step;
	int n = f.n;
	auto mapped = [kind, n](const double* x, double* y) {
		double q = 0.0;
		switch (kind) {
		case MapKind::B1:
			for (int a = 0; a + 1 < n; ++a) {
				y[a] = x[a];
				q += x[a] * x[a];
			}
			y[n - 1] = x[n - 1] - q;
			break;
		case MapKind::B1Inv:
			for (int a = 0; a + 1 < n; ++a) {
				y[a] = x[a];
				q += x[a] * x[a];
			}
			y[n - 1] = x[n - 1] + q;
			break;
		case MapKind::B2:
			for (int a = 0; a + 1 < n; ++a) {
				y[a] = 2.0 * x[a];
				q += x[a] * x[a];
			}
			y[n - 1] = x[n - 1] - q;
			break;
		case MapKind::B2Inv:
			for (int a = 0; a + 1 < n; ++a) {
				y[a] = 0.5 * x[a];
				q += 0.25 * x[a] * x[a];
			}
			y[n - 1] = x[n - 1] + q;
			break;
		}
	};
	FieldFn fc = f;
	out.value = [fc, mapped](const double* x) {
		double y[3];
		mapped(x, y);
		return fc.value(y);
	};
	// rays along e_n stay rays along e_n under all four maps
	out.ray = [fc, mapped, n](const double* x0, const double* dir, double h,
	                          int count, cd* outv) {
		bool along_n = true;
		for (int a = 0; a + 1 < n; ++a)
			along_n = along_n && dir[a] == 0.0;
		double y0[3];
		mapped(x0, y0);
		if (along_n) {
			double d[3] = {0, 0, 0};
			d[n - 1] = dir[n - 1];
			fc.eval_ray(y0, d, h, count, outv);
			return;
		}
		double x[3], y[3];
		for (int k = 0; k < count; ++k) {
			for (int a = 0; a < n; ++a)
				x[a] = x0[a] + k * h * dir[a];
			mapped(x, y);
			outv[k] = fc.value(y);
		}
	};
	if (f.part) {
		out.part = [fc, mapped, n](const double* x, int a) -> cd {
			if (a != n - 1)
				throw std::runtime_error(
				    "coordinate_map: only the last-axis partial is provided");
			double y[3];
			mapped(x, y);
			return fc.part(y, a);
		};
	}
	if (f.part2) {
		out.part2 = [fc, mapped, n](const double* x, int a) -> cd {
			if (a != n - 1)
				throw std::runtime_error(
				    "coordinate_map: only the last-axis partial is provided");
			double y[3];
			mapped(x, y);
			return fc.part2(y, a);
		};
	}
	return out;
}

} // namespace radonfrac
