#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regk/ordinary.hpp"
#include "support.hpp"

using namespace regk;
using regk::test::data_path;

namespace {

CompactificationModel load(char const *file)
{
	return load_instance(data_path(file)).compactification_model();
}

} // namespace

TEST_CASE("ordinary ranks")
{
	auto a1 = load("wonderful_a1.json");
	OrdinaryModel o1(a1);
	CHECK(o1.rank() == 4);
	auto r1 = ordinary_rank(o1);
	CHECK(r1.rank == 4);
	CHECK(r1.determinant == 1);

	auto q = load("quadrant_a1xa1.json");
	OrdinaryModel oq(q);
	CHECK(oq.rank() == 32);
	auto rq = ordinary_rank(oq);
	CHECK(rq.rank == 32);
	CHECK(rq.determinant == 1);
}

TEST_CASE("gamma_e is the unit and the ring is commutative and associative")
{
	for (auto file : {"wonderful_a1.json", "quadrant_a1xa1.json"})
	{
		auto m = load(file);
		OrdinaryModel o(m);
		CHECK(o.unit() == o.gamma(0));
		CHECK(oracle_project(o, m.unit()) == o.unit());
		std::mt19937 rng(41);
		std::uniform_int_distribution<std::size_t> pick(0, o.rank() - 1);
		std::uniform_int_distribution<int> coef(-3, 3);
		auto rnd = [&] {
			OrdinaryClass x = o.zero();
			for (int k = 0; k < 3; ++k)
				x[pick(rng)] += coef(rng);
			return x;
		};
		for (std::size_t a = 0; a < o.rank(); ++a)
		{
			auto e = o.zero();
			e[a] = 1;
			CHECK(o.multiply(o.unit(), e) == e);
		}
		for (int k = 0; k < 20; ++k)
		{
			auto x = rnd(), y = rnd(), z = rnd();
			CHECK(o.multiply(x, y) == o.multiply(y, x));
			CHECK(o.multiply(o.multiply(x, y), z) == o.multiply(x, o.multiply(y, z)));
		}
	}
}

TEST_CASE("the flag relation of K(P^1) holds in the ordinary ring of wonderful A1")
{
	auto m = load("wonderful_a1.json");
	OrdinaryModel o(m);
	// (fbar_e - fbar_s) gamma_e
	OrdinaryClass d = o.zero();
	d[o.index(0, 0, 0)] = 1;
	d[o.index(0, 0, 1)] = -1;
	CHECK(o.multiply(d, d) == o.zero());
	CHECK(o.phi(one_minus_exp(m.root_system().simple_root(0))) == FlagKClass{2, -2});
}

TEST_CASE("the two ordinary paths give identical tables")
{
	for (auto file : {"wonderful_a1.json", "quadrant_a1xa1.json"})
	{
		auto m = load(file);
		OrdinaryModel o(m);
		auto r = compare_tables(o, o.table(), ordinary_oracle_table(o));
		CHECK(r.agree);
		CHECK(r.pairs == o.rank() * o.rank());
	}
}

TEST_CASE("a corrupted table entry is reported")
{
	auto m = load("wonderful_a1.json");
	OrdinaryModel o(m);
	auto t = o.table();
	auto u = t;
	u[5][0] += 1;
	auto r = compare_tables(o, t, u);
	CHECK_FALSE(r.agree);
	CHECK(r.mismatches.size() == 1);
}

TEST_CASE("presentation over the wonderful compactification")
{
	auto q = load("quadrant_a1xa1.json");
	OrdinaryModel oq(q);
	auto rel = presentation_relations(q);
	CHECK(rel.non_faces == std::vector<RayMask>{0b101});
	REQUIRE(rel.monomials.size() == 2);
	CHECK(rel.monomials[0].exponents == std::vector<int>{1, 1, 0});
	CHECK(rel.monomials[1].exponents == std::vector<int>{0, 1, 1});
	auto rep = check_presentation(oq, rel);
	CHECK(rep.check.passed);
	CHECK_FALSE(rep.vacuous);
	CHECK(rep.rank == 2);
	CHECK(rep.ordinary_rank == 32);

	auto bad = rel;
	bad.monomials[0].exponents = {0, 1, 0};
	auto fail = check_presentation(oq, bad);
	CHECK_FALSE(fail.check.passed);
	bad = rel;
	bad.non_faces = {0b011};
	CHECK_FALSE(check_presentation(oq, bad).check.passed);

	auto a1 = load("wonderful_a1.json");
	OrdinaryModel o1(a1);
	auto r1 = verify_presentation_over_wonderful(o1);
	CHECK(r1.check.passed);
	CHECK(r1.vacuous);
	CHECK(r1.rank == 1);
}
