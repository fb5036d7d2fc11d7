#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "radonfrac/verify.hpp"

namespace radonfrac {

// tabular report: metadata lines, a header, string-formatted rows
struct Table {
	std::vector<std::pair<std::string, std::string>> meta;
	std::vector<std::string> columns;
	std::vector<std::vector<std::string>> rows;
};

// 17 significant digits, locale-independent
std::string fmt_num(double v);
std::string fmt_num(cd v);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

Table results_table(const std::vector<CheckResult>& rs);
Table norms_table(const std::vector<NormReport>& rs);

} // namespace radonfrac
