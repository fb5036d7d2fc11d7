// command-line front end: transforms, fractional integrals, verification
// suites, and CSV/JSON reports

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "radonfrac/report.hpp"
#include "radonfrac/verify.hpp"

using namespace radonfrac;

namespace {

Grid1D parse_grid(const std::string& s, const TestFunction& f)
{
	if (s.empty()) {
		double R = f.rapidly_decaying() ? f.suggested_radius() + 2.0
		                                : 16.0;
		return Grid1D(-R, R, 257);
	}
	double lo, hi;
	int count;
	char c1, c2;
	std::istringstream is(s);
	if (!(is >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':')
		throw std::invalid_argument("bad grid spec (want lo:hi:count): " +
		                            s);
	return Grid1D(lo, hi, count);
}

std::vector<double> parse_list(const std::string& s)
{
	std::vector<double> v;
	std::istringstream is(s);
	std::string tok;
	while (std::getline(is, tok, ','))
		v.push_back(std::stod(tok));
	return v;
}

// --theta: n components, or a single angle in radians when n = 2
std::vector<double> parse_theta(const std::string& s, int n)
{
	if (s.empty()) {
		std::vector<double> th(n, 0.0);
		th[n - 1] = 1.0;
		return th;
	}
	std::vector<double> v = parse_list(s);
	if ((int)v.size() == 1 && n == 2)
		return {std::cos(v[0]), std::sin(v[0])};
	if ((int)v.size() != n)
		throw std::invalid_argument("theta needs " + std::to_string(n) +
		                            " components");
	double m = 0.0;
	for (double c : v)
		m += c * c;
	m = std::sqrt(m);
	if (m <= 0.0)
		throw std::invalid_argument("theta must be nonzero");
	for (double& c : v)
		c /= m;
	return v;
}

std::vector<double> parse_xprime(const std::string& s, int n)
{
	if (s.empty())
		return std::vector<double>(n - 1, 0.0);
	std::vector<double> v = parse_list(s);
	if ((int)v.size() != n - 1)
		throw std::invalid_argument("xprime needs " +
		                            std::to_string(n - 1) +
		                            " components");
	return v;
}

cd parse_alpha(const std::string& s)
{
	std::vector<double> v = parse_list(s);
	if (v.empty() || v.size() > 2)
		throw std::invalid_argument("alpha: re or re,im");
	return cd(v[0], v.size() == 2 ? v[1] : 0.0);
}

void emit(const Table& t, const std::string& fmt, const std::string& path)
{
	std::ostringstream os;
	if (fmt == "json")
		write_json(os, t);
	else if (fmt == "csv")
		write_csv(os, t);
	else
		throw std::invalid_argument("unknown output format: " + fmt);
	if (path.empty()) {
		std::cout << os.str();
	} else {
		std::ofstream f(path, std::ios::binary);
		if (!f)
			throw std::runtime_error("cannot open " + path);
		f << os.str();
	}
}

Table signal_table(const Signal& s, const std::string& argname)
{
	Table t;
	t.columns = {argname, "value_re", "value_im"};
	for (int k = 0; k < s.grid.count; ++k)
		t.rows.push_back({fmt_num(s.grid.node(k)),
		                  fmt_num(s.values[k].real()),
		                  fmt_num(s.values[k].imag())});
	for (auto& w : s.warnings)
		t.meta.emplace_back("warning", w);
	return t;
}

struct CommonArgs {
	std::string fn = "gaussian:a=1";
	int n = 2;
	std::string grid, theta, xprime;
	std::string out = "csv", output;
};

void add_common(CLI::App* cmd, CommonArgs& a)
{
	cmd->add_option("--fn", a.fn, "test function DSL");
	cmd->add_option("--n", a.n, "dimension (2 or 3)")
	    ->check(CLI::Range(2, 3));
	cmd->add_option("--grid", a.grid, "slice grid lo:hi:count");
	cmd->add_option("--theta", a.theta,
	                "direction (components, or one angle for n=2)");
	cmd->add_option("--xprime", a.xprime, "slope point (n-1 components)");
	cmd->add_option("--out", a.out, "csv or json");
	cmd->add_option("--output", a.output, "output path (default stdout)");
}

int run_transform(const CommonArgs& a, const std::string& op)
{
	TestFunction f = TestFunction::parse(a.fn, a.n);
	FieldFn ff = FieldFn::from(f);
	Grid1D g = parse_grid(a.grid, f);
	Signal s;
	std::string argname;
	if (op == "radon") {
		auto th = parse_theta(a.theta, f.dim());
		s = radon_slice(ff, th.data(), g);
		argname = "t";
	} else if (op == "transversal" || op == "dual") {
		auto xp = parse_xprime(a.xprime, f.dim());
		s = transversal_slice(ff, xp.data(), g, {}, op == "dual");
		argname = "xn";
	} else if (op == "parabolic") {
		auto xp = parse_xprime(a.xprime, f.dim());
		s = parabolic_slice(ff, xp.data(), g);
		argname = "xn";
	} else {
		throw std::invalid_argument("unknown transform op: " + op);
	}
	Table t = signal_table(s, argname);
	t.meta.insert(t.meta.begin(),
	              {{"op", op},
	               {"fn", f.name()},
	               {"n", std::to_string(f.dim())},
	               {"grid", fmt_num(g.lo) + ":" + fmt_num(g.hi) + ":" +
	                            std::to_string(g.count)}});
	emit(t, a.out, a.output);
	return 0;
}

int run_fracint(const CommonArgs& a, const std::string& op,
                const std::string& alpha_s, const std::string& method,
                int level)
{
	TestFunction f = TestFunction::parse(a.fn, a.n);
	FieldFn ff = FieldFn::from(f);
	Grid1D g = parse_grid(a.grid, f);
	cd alpha = parse_alpha(alpha_s);
	Signal s;
	std::string argname = "xn";
	if (method == "hypersingular") {
		if (op != "T")
			throw std::invalid_argument(
			    "hypersingular route applies to op T");
		if (alpha.imag() != 0.0 || alpha.real() >= 0.0)
			throw std::invalid_argument(
			    "hypersingular route needs real alpha < 0");
		auto xp = parse_xprime(a.xprime, f.dim());
		int l = level > 0 ? level
		                  : (int)std::floor(-alpha.real()) + 1;
		s = t_plus_hypersingular_slice(ff, alpha.real(), xp.data(), g,
		                               l);
	} else {
		FracMethod m;
		if (method == "direct")
			m = FracMethod::Direct;
		else if (method == "continued")
			m = FracMethod::Continued;
		else if (method == "spectral")
			m = FracMethod::Spectral;
		else
			throw std::invalid_argument("unknown method: " + method);
		FracOrder ord{alpha};
		if (op == "R") {
			auto th = parse_theta(a.theta, f.dim());
			s = r_plus_slice(ff, ord, th.data(), g, {}, m);
			argname = "t";
		} else if (op == "T") {
			auto xp = parse_xprime(a.xprime, f.dim());
			s = t_plus_slice(ff, ord, xp.data(), g, {}, m);
		} else if (op == "Tstar") {
			auto xp = parse_xprime(a.xprime, f.dim());
			s = t_star_plus_slice(ff, ord, xp.data(), g, {}, m);
		} else if (op == "P") {
			auto xp = parse_xprime(a.xprime, f.dim());
			s = p_plus_slice(ff, ord, xp.data(), g, {}, m);
		} else {
			throw std::invalid_argument("unknown fracint op: " + op);
		}
	}
	Table t = signal_table(s, argname);
	t.meta.insert(t.meta.begin(), {{"op", op},
	                               {"alpha", fmt_num(alpha)},
	                               {"method", method},
	                               {"fn", f.name()},
	                               {"n", std::to_string(f.dim())}});
	emit(t, a.out, a.output);
	return 0;
}

int run_verify(const CommonArgs& a, const std::string& suite)
{
	auto rs = run_suite(suite, a.n);
	Table t = results_table(rs);
	t.meta = {{"suite", suite}, {"n", std::to_string(a.n)}};
	emit(t, a.out, a.output);
	bool ok = true;
	for (auto& r : rs)
		if (!r.informational && !r.pass)
			ok = false;
	return ok ? 0 : 1;
}

int run_norms(const CommonArgs& a, const std::string& op, double p,
              const std::string& alpha_s)
{
	TestFunction f = TestFunction::parse(a.fn, a.n);
	std::vector<NormReport> rs;
	if (op == "R")
		rs.push_back(radon_norm_audit(f, p));
	else if (op == "T")
		rs.push_back(transversal_norm_audit(f, p));
	else if (op == "P")
		rs.push_back(parabolic_norm_audit(f, p,
		                                  parse_alpha(alpha_s).real()));
	else
		throw std::invalid_argument("unknown norms op: " + op);
	Table t = norms_table(rs);
	t.meta = {{"fn", f.name()}, {"n", std::to_string(f.dim())}};
	emit(t, a.out, a.output);
	bool ok = true;
	for (auto& r : rs)
		if (!r.informational && !r.pass)
			ok = false;
	return ok ? 0 : 1;
}

int run_report(const CommonArgs& a)
{
	std::vector<CheckResult> all;
	for (int n : {2, 3})
		for (auto& c : run_suite("all", n)) {
			CheckResult r = c;
			r.detail = "n=" + std::to_string(n) +
			           (r.detail.empty() ? "" : "; " + r.detail);
			all.push_back(std::move(r));
		}
	Table t = results_table(all);
	t.meta = {{"report", "full verification battery"},
	          {"dimensions", "2,3"}};
	emit(t, a.out, a.output);
	bool ok = true;
	for (auto& r : all)
		if (!r.informational && !r.pass)
			ok = false;
	return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"fractional integrals generated by Radon-type transforms"};
	app.require_subcommand(1);

	CommonArgs at, af, av, an, ar;
	std::string top, fop = "T", nop = "R", suite = "all";
	std::string falpha = "0.5", nalpha = "0.5", method = "continued";
	int level = 0;
	double np = 1.0;

	auto* ct = app.add_subcommand("transform", "evaluate a transform slice");
	add_common(ct, at);
	ct->add_option("--op", top, "radon|transversal|dual|parabolic")
	    ->required();

	auto* cf = app.add_subcommand("fracint", "fractional integral slice");
	add_common(cf, af);
	cf->add_option("--op", fop, "R|T|Tstar|P");
	cf->add_option("--alpha", falpha, "order re[,im]");
	cf->add_option("--method", method,
	               "direct|continued|hypersingular|spectral");
	cf->add_option("--l", level, "difference order (hypersingular)");

	auto* cv = app.add_subcommand("verify", "run a verification suite");
	add_common(cv, av);
	cv->add_option("--suite", suite,
	               "identities|constants|sharpness|smoke|all");

	auto* cn = app.add_subcommand("norms", "norm inequality audit");
	add_common(cn, an);
	cn->add_option("--op", nop, "R|T|P");
	cn->add_option("--p", np, "Lebesgue exponent");
	cn->add_option("--alpha", nalpha, "order (P only)");

	auto* cr = app.add_subcommand("report", "full battery, n = 2 and 3");
	add_common(cr, ar);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		if (ct->parsed())
			return run_transform(at, top);
		if (cf->parsed())
			return run_fracint(af, fop, falpha, method, level);
		if (cv->parsed())
			return run_verify(av, suite);
		if (cn->parsed())
			return run_norms(an, nop, np, nalpha);
		if (cr->parsed())
			return run_report(ar);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
