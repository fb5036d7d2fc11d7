#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "radonfrac/gamma.hpp"

namespace {

std::string bin()
{
	const char* b = std::getenv("FRACRADON_BIN");
	REQUIRE(b != nullptr);
	return b;
}

int run(const std::string& args)
{
	std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
	int st = std::system(cmd.c_str());
	REQUIRE(st != -1);
	return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path)
{
	std::ifstream f(path, std::ios::binary);
	REQUIRE((bool)f);
	std::ostringstream os;
	os << f.rdbuf();
	return os.str();
}

// rows of a CSV body (skips # metadata and the header line)
std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
	std::vector<std::vector<std::string>> rows;
	std::istringstream is(text);
	std::string line;
	bool header = true;
	while (std::getline(is, line)) {
		if (line.empty() || line[0] == '#')
			continue;
		if (header) {
			header = false;
			continue;
		}
		std::vector<std::string> cells;
		std::istringstream ls(line);
		std::string c;
		while (std::getline(ls, c, ','))
			cells.push_back(c);
		rows.push_back(std::move(cells));
	}
	return rows;
}

} // namespace

TEST_CASE("usage errors exit with code 2")
{
	CHECK(run("transform --bogus-flag") == 2);
	CHECK(run("unknown-subcommand") == 2);
	CHECK(run("transform") == 2);  // --op is required
	CHECK(run("transform --op radon --fn box:w=1") == 2);
	CHECK(run("transform --op radon --grid 2:1:10") == 2);
	CHECK(run("--help") == 0);
}

TEST_CASE("transform emits the expected slice")
{
	const std::string out = "cli_radon.csv";
	CHECK(run("transform --op radon --fn gaussian:a=1 --n 2 "
	          "--theta 0 --grid -2:2:5 --output " +
	          out) == 0);
	auto rows = csv_rows(slurp(out));
	REQUIRE(rows.size() == 5);
	// t = 0 row carries Rf(theta, 0) = sqrt(pi)
	REQUIRE(rows[2].size() >= 2);
	CHECK(std::stod(rows[2][0]) == doctest::Approx(0.0).epsilon(1e-12));
	CHECK(std::stod(rows[2][1]) ==
	      doctest::Approx(std::sqrt(radonfrac::PI)).epsilon(1e-6));
	// and the metadata block is present
	CHECK(slurp(out).rfind("# op = radon", 0) == 0);
}

TEST_CASE("output is deterministic")
{
	const std::string a = "cli_det_a.csv", b = "cli_det_b.csv";
	const std::string args =
	    "fracint --op T --alpha 0.5 --method continued "
	    "--fn gaussian:a=1 --n 2 --xprime 0.4 --grid -8:8:65 --output ";
	CHECK(run(args + a) == 0);
	CHECK(run(args + b) == 0);
	CHECK(slurp(a) == slurp(b));
	CHECK(!slurp(a).empty());
}

TEST_CASE("json output")
{
	const std::string out = "cli_json.json";
	CHECK(run("transform --op transversal --fn gaussian:a=1 --n 2 "
	          "--grid -4:4:17 --out json --output " +
	          out) == 0);
	std::string text = slurp(out);
	CHECK(text.find("\"rows\"") != std::string::npos);
	CHECK(text.find("value_re") != std::string::npos);
}

TEST_CASE("verify smoke suite passes")
{
	const std::string out = "cli_smoke.csv";
	CHECK(run("verify --suite smoke --n 2 --output " + out) == 0);
	auto rows = csv_rows(slurp(out));
	CHECK(rows.size() >= 4);
	CHECK(run("verify --suite nosuch --n 2") == 2);
	CHECK(run("verify --suite smoke --n 4") == 2);
}

TEST_CASE("norm audit subcommand")
{
	const std::string out = "cli_norms.csv";
	CHECK(run("norms --op R --p 1 --fn gaussian:a=1 --n 2 --output " +
	          out) == 0);
	auto rows = csv_rows(slurp(out));
	REQUIRE(rows.size() == 1);
}

TEST_CASE("domain errors exit with code 2")
{
	// hypersingular route needs a negative real order and op T
	CHECK(run("fracint --op T --alpha 0.5 --method hypersingular "
	          "--fn gaussian:a=1") == 2);
	CHECK(run("fracint --op P --alpha -0.5 --method hypersingular "
	          "--fn gaussian:a=1") == 2);
	// the direct route is restricted to positive real part
	CHECK(run("fracint --op T --alpha -0.5 --method direct "
	          "--fn gaussian:a=1 --grid -16:16:257") == 2);
}
