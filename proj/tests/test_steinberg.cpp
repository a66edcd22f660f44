#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regk/steinberg.hpp"
#include "support.hpp"

using namespace regk;
using regk::test::random_laurent;
using regk::test::wt;

namespace {

std::shared_ptr<SteinbergBasis const> basis_of(char const *name)
{
	return std::make_shared<SteinbergBasis const>(std::make_shared<RootSystem const>(RootSystem::builtin(name)));
}

} // namespace

TEST_CASE("A1 Steinberg basis")
{
	auto b = basis_of("A1");
	CHECK(b->element(0) == constant(1, 1));
	CHECK(b->element(1) == exp_weight(wt({-1})));
	auto d = exp_weight(wt({1})) - exp_weight(wt({-1}));
	CHECK((b->determinant() == d || b->determinant() == -d));
}

TEST_CASE("A1 structure constants against a Cramer solve")
{
	// f_s^2 = a_e + a_s f_s evaluated at u = e and u = s:
	//   e^{-2w} = a_e + a_s e^{-w},  e^{2w} = a_e + a_s e^{w}
	LaurentElement x = exp_weight(wt({1})), xi = exp_weight(wt({-1}));
	LaurentElement det = x - xi;
	auto as = divide_exact(x * x - xi * xi, det);
	REQUIRE(as);
	auto ae = divide_exact(xi * xi * x - x * x * xi, det);
	REQUIRE(ae);

	auto b = basis_of("A1");
	auto a = structure_constants(*b);
	CHECK(a[1][1][0] == *ae);
	CHECK(a[1][1][1] == *as);
	CHECK(a[1][1][0] == constant(-1, 1));
	CHECK(a[1][1][1] == x + xi);

	FlagK flag(b, a);
	CHECK(flag.constants()[1][1] == FlagKClass{-1, 2});
	CHECK(flag.lambda_bar(RootSubset{1}) == FlagKClass{2, -2});
	FlagKClass d{1, -1};
	CHECK(flag.multiply(d, d) == FlagKClass{0, 0});
}

TEST_CASE("Steinberg elements are invariant under the complementary parabolic")
{
	for (auto name : {"A2", "B2", "A1xA1"})
	{
		auto b = basis_of(name);
		RootSystem const &rs = b->root_system();
		for (std::size_t w = 0; w < rs.weyl_order(); ++w)
		{
			RootSubset J = RootSubset::all(rs.rank()) - rs.c_set_of(w);
			std::vector<WeylElement> gens;
			for (auto i : J.indices())
				gens.push_back(rs.simple_reflection(i));
			CHECK(is_invariant(b->element(w), gens));
		}
	}
}

TEST_CASE("expansion round trip with invariant coefficients")
{
	std::mt19937 rng(23);
	for (auto name : {"A2", "B2", "A1xA1"})
	{
		auto b = basis_of(name);
		RootSystem const &rs = b->root_system();
		for (int k = 0; k < 10; ++k)
		{
			auto g = random_laurent(rng, rs.dim(), 4);
			auto c = b->expand(g);
			LaurentElement back;
			for (std::size_t w = 0; w < c.size(); ++w)
			{
				CHECK(is_invariant(c[w], rs.simple_reflections()));
				back += c[w] * b->element(w);
			}
			CHECK(back == g);
		}
	}
}

TEST_CASE("structure constants respect the C-set support and commutativity")
{
	for (auto name : {"A2", "A1xA1"})
	{
		auto b = basis_of(name);
		RootSystem const &rs = b->root_system();
		auto a = structure_constants(*b, 2);
		for (std::size_t v = 0; v < a.size(); ++v)
			for (std::size_t vp = 0; vp < a.size(); ++vp)
			{
				LaurentElement prod;
				for (std::size_t w = 0; w < a.size(); ++w)
				{
					CHECK(a[v][vp][w] == a[vp][v][w]);
					if (!a[v][vp][w].is_zero())
						CHECK(rs.c_set_of(w).subset_of(rs.c_set_of(v) | rs.c_set_of(vp)));
					prod += a[v][vp][w] * b->element(w);
				}
				CHECK(prod == b->element(v) * b->element(vp));
			}
		FlagK flag(b, a);
		CHECK(flag.multiply(flag.unit(), flag.basis_class(1)) == flag.basis_class(1));
		CHECK(augment(constant(1, rs.dim())) == 1);
	}
}

TEST_CASE("characteristic image is a ring map")
{
	std::mt19937 rng(29);
	auto b = basis_of("A2");
	FlagK flag(b, structure_constants(*b));
	for (int k = 0; k < 10; ++k)
	{
		auto f = random_laurent(rng, 2, 3, -2, 2), g = random_laurent(rng, 2, 3, -2, 2);
		CHECK(flag.characteristic_image(f * g) ==
		      flag.multiply(flag.characteristic_image(f), flag.characteristic_image(g)));
	}
	// W-invariants go to their augmentation
	LaurentElement inv;
	for (auto const &w : b->root_system().weyl())
		inv += exp_weight(w.act(wt({1, 1})));
	auto ci = flag.characteristic_image(inv);
	CHECK(ci[0] == 6);
	for (std::size_t w = 1; w < ci.size(); ++w)
		CHECK(ci[w] == 0);
}

TEST_CASE("steinberg_element rejects elements outside W^I")
{
	auto rs = RootSystem::builtin("A2");
	std::size_t s1 = 1;
	REQUIRE(rs.weyl()[s1].name() == "s1");
	CHECK_THROWS_AS(steinberg_element(rs, s1, RootSubset{1}), InvalidInput);
	CHECK_NOTHROW(steinberg_element(rs, s1, RootSubset{2}));
}
