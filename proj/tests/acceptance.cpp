// acceptance gate: run every verification suite at n = 2 and n = 3 and
// report one line per numbered criterion

#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "radonfrac/verify.hpp"

using namespace radonfrac;

int main()
{
	auto t0 = std::chrono::steady_clock::now();
	std::vector<CheckResult> all;
	for (int n : {2, 3}) {
		auto rs = run_suite("all", n);
		for (auto& r : rs) {
			r.detail = "n=" + std::to_string(n) +
			           (r.detail.empty() ? "" : "; " + r.detail);
			all.push_back(std::move(r));
		}
	}

	std::map<int, std::vector<const CheckResult*>> by;
	for (auto& r : all)
		by[r.criterion].push_back(&r);

	bool ok = true;
	for (int c = 1; c <= 14; ++c) {
		auto it = by.find(c);
		if (it == by.end()) {
			std::printf("criterion %2d: FAIL (no checks ran)\n", c);
			ok = false;
			continue;
		}
		bool pass = true;
		int gating = 0;
		for (auto* r : it->second)
			if (!r->informational) {
				++gating;
				if (!r->pass)
					pass = false;
			}
		if (gating == 0)
			pass = false;
		std::printf("criterion %2d: %s (%zu checks)\n", c,
		            pass ? "PASS" : "FAIL", it->second.size());
		for (auto* r : it->second)
			if (!r->pass && !r->informational)
				std::printf("    failed: %s  measured=%.6g tol=%.6g  [%s]\n",
				            r->id.c_str(), r->measured, r->tol,
				            r->detail.c_str());
		if (!pass)
			ok = false;
	}

	auto dt = std::chrono::duration<double>(
	              std::chrono::steady_clock::now() - t0)
	              .count();
	std::printf("%s in %.1f s (%zu checks total)\n",
	            ok ? "ACCEPTED" : "REJECTED", dt, all.size());
	return ok ? 0 : 1;
}
