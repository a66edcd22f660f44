#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regk/cli.hpp"
#include "regk/serialize.hpp"
#include "support.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace regk;
using regk::test::data_path;
using regk::test::golden_path;

namespace {

struct Result {
	int code;
	std::string out, err;
};

Result cli(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run(args, out, err);
	return {code, out.str(), err.str()};
}

std::string slurp(std::string const &path)
{
	std::ifstream f(path);
	REQUIRE_MESSAGE(f, "missing file " << path);
	std::stringstream s;
	s << f.rdbuf();
	return s.str();
}

std::string temp_file(std::string const &name, std::string const &content)
{
	std::string path = std::string(REGK_BINARY_DIR) + "/" + name;
	std::ofstream(path) << content;
	return path;
}

} // namespace

TEST_CASE("weyl on A2")
{
	auto r = cli({"weyl", "--instance", data_path("a2.json")});
	REQUIRE(r.code == 0);
	auto j = Json::parse(r.out);
	CHECK(j["weyl_order"] == 6);
	std::vector<int> sizes;
	for (auto const &c : j["c_sets"])
		sizes.push_back(c["size"].get<int>());
	CHECK(sizes == std::vector<int>{1, 2, 2, 1});
	CHECK(j["partition"] == true);
}

TEST_CASE("golden outputs")
{
	struct Case {
		std::vector<std::string> args;
		char const *golden;
	};
	std::vector<Case> cases{
	    {{"verify-all", "--instance", data_path("wonderful_a1.json")}, "verify_all_wonderful_a1.json"},
	    {{"verify-all", "--instance", data_path("wonderful_a2.json")}, "verify_all_wonderful_a2.json"},
	    {{"verify-all", "--instance", data_path("quadrant_a1xa1.json")}, "verify_all_quadrant_a1xa1.json"},
	    {{"weyl", "--instance", data_path("a2.json")}, "weyl_a2.json"},
	    {{"kring", "--instance", data_path("wonderful_a1.json"), "--table", "ordinary"}, "kring_ordinary_wonderful_a1.json"},
	    {{"kring", "--instance", data_path("quadrant_a1xa1.json"), "--table", "equivariant"},
	     "kring_equivariant_quadrant_a1xa1.json"},
	};
	for (auto const &c : cases)
	{
		CAPTURE(c.golden);
		auto r = cli(c.args);
		CHECK(r.code == 0);
		CHECK(r.out == slurp(golden_path(c.golden)));
	}
}

TEST_CASE("exit codes and structured errors")
{
	auto malformed = temp_file("malformed.json", "{ \"root_system\": ");
	auto r = cli({"weyl", "--instance", malformed});
	CHECK(r.code == 2);
	auto e = Json::parse(r.err);
	CHECK(e["error"]["kind"] == "invalid_input");

	CHECK(cli({"weyl", "--instance", "/nonexistent/x.json"}).code == 2);
	CHECK(cli({"bogus"}).code == 2);
	CHECK(cli({"kring", "--instance", data_path("quadrant_a1xa1.json"), "--table", "bogus"}).code == 2);
	CHECK(cli({"weyl", "--instance", data_path("p1.json")}).code == 2); // no root system

	auto unknown = temp_file("unknown_key.json", R"({"root_system": "A1", "colour": 3})");
	CHECK(cli({"weyl", "--instance", unknown}).code == 2);
	auto bad_cartan = temp_file("bad_cartan.json", R"({"root_system": {"cartan": [[2, -3], [-3, 2]]}})");
	CHECK(cli({"weyl", "--instance", bad_cartan}).code == 2);

	// an ample check that fails is a verification failure, not an input error
	auto not_ample = temp_file("not_ample.json", R"({"fan": {"rays": [[1, 0], [1, 1], [0, 1]],
	  "maximal_cones": [[0, 1], [1, 2]]}, "psi": [0, -1, 0], "bb_direction": [1, 2]})");
	auto na = cli({"fan", "--instance", not_ample});
	CHECK(na.code == 1);
	CHECK(Json::parse(na.err)["error"]["kind"] == "verification_failure");

	// a fan that does not subdivide the chamber cannot carry a compactification
	auto wrong = temp_file("wrong_support.json", R"({"root_system": "A1xA1",
	  "fan": {"rays": [[1, 0], [1, 1]], "maximal_cones": [[0, 1]]}})");
	CHECK(cli({"kring", "--instance", wrong}).code == 2);
	CHECK(cli({"fan", "--instance", wrong}).code == 1);
}

TEST_CASE("verify-all passes on every shipped instance")
{
	for (auto f : {"wonderful_a1.json", "wonderful_a2.json", "quadrant_a1xa1.json", "p1.json", "square.json",
	               "quadrant.json", "a2.json"})
	{
		CAPTURE(f);
		auto r = cli({"verify-all", "--instance", data_path(f)});
		CHECK(r.code == 0);
		CHECK(Json::parse(r.out)["passed"] == true);
	}
}

TEST_CASE("kring verifications")
{
	auto r = cli({"kring", "--instance", data_path("quadrant_a1xa1.json"), "--verify", "membership", "--verify",
	              "oracle", "--verify", "presentation"});
	CHECK(r.code == 0);
	auto j = Json::parse(r.out);
	CHECK(j["membership"]["passed"] == true);
	CHECK(j["oracle"]["ordinary_agree"] == true);
	CHECK(j["presentation"]["negative_control"]["detected"] == true);
	CHECK(j["presentation"]["rank_over_wonderful"] == 2);
}

TEST_CASE("output does not depend on parallelism")
{
	for (auto f : {"quadrant_a1xa1.json", "wonderful_a2.json"})
	{
		auto a = cli({"verify-all", "--instance", data_path(f), "--threads", "1"});
		auto b = cli({"--threads", "3", "verify-all", "--instance", data_path(f)});
		CHECK(a.code == 0);
		CHECK(a.out == b.out);
	}
}

TEST_CASE("searched psi and direction")
{
	auto path = temp_file("searched.json", R"({"fan": {"rays": [[1, 0], [1, 1], [0, 1]],
	  "maximal_cones": [[0, 1], [1, 2]]}})");
	auto r = cli({"toric-k", "--instance", path});
	CHECK(r.code == 0);
	auto f = cli({"fan", "--instance", path});
	REQUIRE(f.code == 0);
	auto j = Json::parse(f.out);
	CHECK(j["psi_searched"] == true);
	CHECK(j["git"]["pic_rank"] == 1);
}
