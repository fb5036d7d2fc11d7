#include "radonfrac/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace radonfrac {

std::string fmt_num(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

std::string fmt_num(cd v)
{
	if (v.imag() == 0.0)
		return fmt_num(v.real());
	return fmt_num(v.real()) + (v.imag() < 0 ? "-" : "+") +
	       fmt_num(std::abs(v.imag())) + "i";
}

namespace {

// quote a CSV field when it contains a comma, quote, or newline
std::string csv_field(const std::string& s)
{
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"')
			out += '"';
		out += c;
	}
	out += '"';
	return out;
}

} // namespace

void write_csv(std::ostream& os, const Table& t)
{
	for (auto& kv : t.meta)
		os << "# " << kv.first << " = " << kv.second << "\n";
	for (std::size_t c = 0; c < t.columns.size(); ++c)
		os << (c ? "," : "") << csv_field(t.columns[c]);
	os << "\n";
	for (auto& row : t.rows) {
		for (std::size_t c = 0; c < row.size(); ++c)
			os << (c ? "," : "") << csv_field(row[c]);
		os << "\n";
	}
}

void write_json(std::ostream& os, const Table& t)
{
	nlohmann::ordered_json j;
	j["meta"] = nlohmann::ordered_json::object();
	for (auto& kv : t.meta)
		j["meta"][kv.first] = kv.second;
	j["rows"] = nlohmann::ordered_json::array();
	for (auto& row : t.rows) {
		nlohmann::ordered_json r = nlohmann::ordered_json::object();
		for (std::size_t c = 0; c < row.size() && c < t.columns.size();
		     ++c)
			r[t.columns[c]] = row[c];
		j["rows"].push_back(std::move(r));
	}
	os << j.dump(2) << "\n";
}

Table results_table(const std::vector<CheckResult>& rs)
{
	Table t;
	t.columns = {"criterion", "id",  "pass",   "informational",
	             "measured",  "tol", "detail"};
	for (auto& r : rs)
		t.rows.push_back({std::to_string(r.criterion), r.id,
		                  r.pass ? "1" : "0",
		                  r.informational ? "1" : "0",
		                  fmt_num(r.measured), fmt_num(r.tol), r.detail});
	return t;
}

Table norms_table(const std::vector<NormReport>& rs)
{
	Table t;
	t.columns = {"id",       "input", "p",         "nu",
	             "mu",       "alpha", "measured",  "bound",
	             "has_bound", "pass",  "informational", "detail"};
	for (auto& r : rs)
		t.rows.push_back({r.id, r.input, fmt_num(r.p), fmt_num(r.nu),
		                  fmt_num(r.mu), fmt_num(r.alpha),
		                  fmt_num(r.measured), fmt_num(r.bound),
		                  r.has_bound ? "1" : "0", r.pass ? "1" : "0",
		                  r.informational ? "1" : "0", r.detail});
	return t;
}

} // namespace radonfrac
