#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regk/root_system.hpp"
#include "support.hpp"

#include <set>

using namespace regk;
using regk::test::wt;

namespace {

// Independent characterization: w in W^I iff l(w s_i) > l(w) for all i in I.
std::set<std::size_t> coset_reps_by_length(RootSystem const &rs, RootSubset I)
{
	std::set<std::size_t> out;
	for (std::size_t w = 0; w < rs.weyl_order(); ++w)
	{
		bool ok = true;
		for (auto i : I.indices())
			ok = ok && rs.inversion_count(rs.weyl()[w] * rs.simple_reflection(i)) > rs.inversion_count(rs.weyl()[w]);
		if (ok)
			out.insert(w);
	}
	return out;
}

} // namespace

TEST_CASE("Weyl group orders and longest elements")
{
	for (auto [name, order, pos] : {std::tuple{"A1", 2, 1}, {"A2", 6, 3}, {"A1xA1", 4, 2}, {"B2", 8, 4}})
	{
		auto rs = RootSystem::builtin(name);
		CHECK(rs.weyl_order() == static_cast<std::size_t>(order));
		CHECK(rs.positive_roots().size() == static_cast<std::size_t>(pos));
		CHECK(rs.weyl()[0].is_identity());
		CHECK(rs.inversion_count(rs.weyl()[rs.longest_element()]) == static_cast<std::size_t>(pos));
		for (auto const &w : rs.weyl())
		{
			CHECK(rs.inversion_count(w) == w.length());
			CHECK((w * w.inverse()).is_identity());
		}
	}
}

TEST_CASE("simple reflections and root coordinates")
{
	auto a2 = RootSystem::builtin("A2");
	CHECK(a2.simple_root(0) == wt({2, -1}));
	CHECK(a2.simple_reflection(0).act(a2.simple_root(0)) == -a2.simple_root(0));
	CHECK(a2.simple_reflection(0).act(a2.fundamental_weight(0)) == a2.fundamental_weight(0) - a2.simple_root(0));
	CHECK(a2.simple_reflection(0).act(a2.fundamental_weight(1)) == a2.fundamental_weight(1));
	CHECK(a2.root_sign(a2.simple_root(0) + a2.simple_root(1)) == 1);
	CHECK(a2.root_sign(-a2.simple_root(1)) == -1);
	CHECK(a2.root_sign(wt({2, 2})) == 0);
	CHECK(a2.root_lattice_to_weight(wt({1, -1})) == wt({3, -3}));
	auto a1a1 = RootSystem::builtin("A1xA1");
	CHECK(a1a1.root_lattice_to_weight(wt({1, -1})) == wt({2, -2}));
	// s_i on N is the transpose action: <s(m), s(x)> is preserved by pairing M and N
	for (auto const &w : a2.weyl())
	{
		Weight x = wt({1, 2}), y = wt({-1, 1});
		CHECK(w.act_coweight(x + y) == w.act_coweight(x) + w.act_coweight(y));
	}
}

TEST_CASE("C-sets partition W with the expected sizes")
{
	for (auto [name, sizes] : {std::pair{"A1", std::vector<std::size_t>{1, 1}},
	                           {"A2", {1, 2, 2, 1}},
	                           {"A1xA1", {1, 1, 1, 1}},
	                           {"B2", {1, 3, 3, 1}}})
	{
		auto rs = RootSystem::builtin(name);
		auto cs = rs.c_sets();
		std::vector<std::size_t> got;
		std::vector<int> seen(rs.weyl_order(), 0);
		for (auto const &[I, ws] : cs)
		{
			got.push_back(ws.size());
			for (auto w : ws)
			{
				++seen[w];
				CHECK(rs.c_set_of(w) == I);
			}
		}
		CHECK(got == sizes);
		for (int k : seen)
			CHECK(k == 1);
	}
}

TEST_CASE("minimal coset representatives agree with the length criterion")
{
	for (auto name : {"A2", "B2", "A1xA1"})
	{
		auto rs = RootSystem::builtin(name);
		for (auto I : all_subsets(rs.rank()))
		{
			auto reps = rs.minimal_coset_reps(I);
			CHECK(std::set<std::size_t>(reps.begin(), reps.end()) == coset_reps_by_length(rs, I));
			CHECK(reps.size() * rs.parabolic_elements(I).size() == rs.weyl_order());
		}
	}
	auto a2 = RootSystem::builtin("A2");
	std::vector<std::string> names;
	for (auto w : a2.minimal_coset_reps(RootSubset{2}))
		names.push_back(a2.weyl()[w].name());
	CHECK(names == std::vector<std::string>{"e", "s1", "s2s1"});
}

TEST_CASE("Cartan matrix validation")
{
	CHECK_THROWS_AS(RootSystem({{2, -1}, {-1, 1}}, 0), InvalidInput);
	CHECK_THROWS_AS(RootSystem({{2, -1}, {0, 2}}, 0), InvalidInput);
	CHECK_THROWS_AS(RootSystem({{2, -3}, {-3, 2}}, 0), InvalidInput); // affine-like, infinite W
	CHECK_THROWS_AS(RootSystem::builtin("E8"), InvalidInput);
	RootSystem g2({{2, -1}, {-3, 2}}, 0, "G2");
	CHECK(g2.weyl_order() == 12);
	RootSystem central({{2}}, 1, "A1+T1");
	CHECK(central.dim() == 2);
	CHECK(central.simple_reflection(0).act(wt({1, 5})) == wt({-1, 5}));
}

TEST_CASE("W-action on Laurent elements")
{
	auto a2 = RootSystem::builtin("A2");
	LaurentElement orbit;
	std::set<Weight> seen;
	for (auto const &w : a2.weyl())
		if (seen.insert(w.act(a2.fundamental_weight(0))).second)
			orbit += exp_weight(w.act(a2.fundamental_weight(0)));
	CHECK(orbit.size() == 3);
	CHECK(is_invariant(orbit, a2.simple_reflections()));
	CHECK_FALSE(is_invariant(exp_weight(a2.fundamental_weight(0)), a2.simple_reflections()));
	auto t = tensor(exp_weight(wt({1, 0})), exp_weight(a2.fundamental_weight(0)));
	CHECK(tensor_act_right(a2.simple_reflection(0), t) ==
	      tensor(exp_weight(wt({1, 0})), exp_weight(a2.simple_reflection(0).act(a2.fundamental_weight(0)))));
}
