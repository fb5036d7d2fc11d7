#pragma once

#include "radonfrac/estimates.hpp"

namespace radonfrac {

// One verification check. `criterion` groups checks under the numbered
// acceptance gates (1..14); 0 marks supplementary checks. Informational
// results are reported but do not gate.
struct CheckResult {
	int criterion = 0;
	std::string id;
	bool pass = false;
	bool informational = false;
	double measured = 0.0;
	double tol = 0.0;
	std::string detail;
};

std::vector<CheckResult> verify_identities(int n);
std::vector<CheckResult> verify_constants(int n);
std::vector<CheckResult> verify_sharpness(int n);
// fast subset used for command-line smoke testing
std::vector<CheckResult> verify_smoke(int n);

// suite: identities | constants | sharpness | smoke | all
std::vector<CheckResult> run_suite(const std::string& suite, int n);

} // namespace radonfrac
