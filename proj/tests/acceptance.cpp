// Acceptance run: one PASS/FAIL line per criterion with its runtime limit.

#include "regk/cli.hpp"
#include "regk/instance.hpp"
#include "regk/ordinary.hpp"
#include "regk/steinberg.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace regk;

namespace {

std::string data_path(std::string const &name) { return std::string(REGK_SOURCE_DIR) + "/data/instances/" + name; }

std::shared_ptr<RootSystem const> builtin(char const *name)
{
	return std::make_shared<RootSystem const>(RootSystem::builtin(name));
}

struct Outcome {
	bool ok = true;
	std::string detail;
	void require(bool cond, std::string const &what)
	{
		if (!cond && ok)
		{
			ok = false;
			detail = what;
		}
	}
};

bool criterion(int id, double limit, char const *title, std::function<void(Outcome &)> const &body)
{
	Outcome o;
	auto t0 = std::chrono::steady_clock::now();
	try
	{
		body(o);
	}
	catch (std::exception const &e)
	{
		o.ok = false;
		o.detail = std::string("exception: ") + e.what();
	}
	double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	bool pass = o.ok && (limit <= 0 || secs < limit);
	std::cout << "criterion " << std::setw(2) << id << " " << (pass ? "PASS" : "FAIL") << "  " << std::fixed
	          << std::setprecision(3) << secs << " s";
	if (limit > 0)
		std::cout << " (limit " << std::setprecision(0) << limit << " s)";
	std::cout << "  " << title;
	if (!o.ok)
		std::cout << ": " << o.detail;
	else if (!pass)
		std::cout << ": over the time limit";
	std::cout << std::endl;
	return pass;
}

void c1(Outcome &o)
{
	for (auto name : {"A1", "A2", "A1xA1", "B2"})
	{
		auto rs = builtin(name);
		std::vector<int> seen(rs->weyl_order(), 0);
		for (auto const &[I, ws] : rs->c_sets())
			for (auto w : ws)
			{
				++seen[w];
				o.require(rs->c_set_of(w) == I, std::string(name) + ": c_set_of disagrees with C^I");
			}
		for (int k : seen)
			o.require(k == 1, std::string(name) + ": C^I is not a partition of W");
	}
	auto a2 = builtin("A2");
	auto cs = a2->c_sets();
	std::vector<std::size_t> sizes;
	for (std::uint32_t bits : {0u, 1u, 2u, 3u}) // empty, {a1}, {a2}, both
		sizes.push_back(cs[RootSubset{bits}].size());
	o.require(sizes == std::vector<std::size_t>{1, 2, 2, 1}, "A2 C^I sizes are not 1,2,2,1");
}

void c2(Outcome &o)
{
	auto rs = builtin("A2");
	SteinbergBasis b(rs);
	std::vector<WeylElement> gens{rs->simple_reflection(0), rs->simple_reflection(1)};
	std::mt19937 rng(2024);
	std::uniform_int_distribution<int> e(-3, 3), c(-5, 5), n(1, 5);
	for (int k = 0; k < 100; ++k)
	{
		std::vector<LaurentElement::Term> t;
		for (int j = n(rng); j > 0; --j)
			t.emplace_back(Weight{e(rng), e(rng)}, c(rng));
		auto g = LaurentElement::from_terms(std::move(t));
		auto co = b.expand(g);
		LaurentElement back;
		for (std::size_t w = 0; w < co.size(); ++w)
		{
			o.require(is_invariant(co[w], gens), "coefficient is not W-invariant");
			back = back + co[w] * b.element(w);
		}
		o.require(back == g, "expansion does not reconstruct the input");
	}
}

void c3(Outcome &o)
{
	auto b = std::make_shared<SteinbergBasis const>(builtin("A1"));
	auto a = structure_constants(*b);
	// Cramer oracle at u = e and u = s
	LaurentElement x = exp_weight(Weight{1}), xi = exp_weight(Weight{-1});
	auto as = divide_exact(x * x - xi * xi, x - xi);
	auto ae = divide_exact(xi * xi * x - x * x * xi, x - xi);
	o.require(as && ae, "oracle division is not exact");
	o.require(a[1][1][0] == *ae && *ae == constant(-1, 1), "a^e differs from -1");
	o.require(a[1][1][1] == *as && *as == x + xi, "a^s differs from e^w + e^-w");
	FlagK flag(b, a);
	FlagKClass d{1, -1};
	o.require(flag.multiply(d, d) == FlagKClass{0, 0}, "(fbar_e - fbar_s)^2 != 0");
}

void c4(Outcome &o)
{
	Instance in = load_instance(data_path("quadrant.json"));
	in.psi = std::vector<Integer>{0, 1, 0};
	in.bb_direction = Weight{1, 2};
	auto t = in.toric_model();
	auto const &mo = t.order();
	o.require(mo.star_property, "star property fails");
	o.require(mo.cell_dims == std::vector<std::size_t>{2, 1}, "cell dimensions are not (2, 1)");
	auto const &M = t.basis_matrix();
	for (std::size_t j = 0; j < M.size(); ++j)
		for (std::size_t i = 0; i < M.size(); ++i)
		{
			if (i == j)
				o.require(!M[j][i].is_zero(), "zero diagonal entry in the basis matrix");
			else if (j < i)
				o.require(M[j][i].is_zero(), "basis matrix is not triangular");
		}
	auto sr = t.verify_point_presentation();
	o.require(sr.check.passed && sr.rank == 2, "point-base presentation rank is not 2");
}

std::vector<std::string> const kInstances{"wonderful_a1.json", "quadrant_a1xa1.json"};

void c5(Outcome &o)
{
	for (auto const &f : kInstances)
	{
		auto m = load_instance(data_path(f)).compactification_model();
		auto r = compare_multiplications(m);
		o.require(r.agree && r.pairs == m.weyl_order() * m.weyl_order(),
		          f + ": " + (r.mismatches.empty() ? std::string("pair count") : r.mismatches.front()));
	}
}

void c6(Outcome &o)
{
	std::vector<std::size_t> expected{4, 32};
	for (std::size_t k = 0; k < kInstances.size(); ++k)
	{
		auto m = load_instance(data_path(kInstances[k])).compactification_model();
		OrdinaryModel ord(m);
		auto r = ordinary_rank(ord);
		o.require(ord.rank() == expected[k] && r.rank == expected[k] && r.determinant == 1,
		          kInstances[k] + ": rank certificate fails");
	}
}

void c7(Outcome &o)
{
	for (auto const &f : kInstances)
	{
		auto m = load_instance(data_path(f)).compactification_model();
		OrdinaryModel ord(m);
		auto r = compare_tables(ord, ord.table(), ordinary_oracle_table(ord));
		o.require(r.agree, f + ": " + (r.mismatches.empty() ? std::string() : r.mismatches.front()));
		o.require(oracle_project(ord, m.unit()) == ord.unit(), f + ": unit does not specialize");
	}
}

void c8(Outcome &o)
{
	auto m = load_instance(data_path("quadrant_a1xa1.json")).compactification_model();
	OrdinaryModel ord(m);
	auto rel = presentation_relations(m);
	auto rep = check_presentation(ord, rel);
	o.require(rep.check.passed, rep.check.failures.empty() ? "presentation fails" : rep.check.failures.front());
	o.require(rep.rank == 2 && rep.ordinary_rank == 32, "rank bookkeeping fails");
	bool corrupted = false;
	for (auto &r : rel.monomials)
		for (auto &e : r.exponents)
			if (e != 0 && !corrupted)
			{
				e = 0;
				corrupted = true;
			}
	o.require(corrupted, "no monomial relation to corrupt");
	o.require(!check_presentation(ord, rel).check.passed, "negative control was not detected");
}

void c9(Outcome &o)
{
	struct Case {
		char const *file;
		std::size_t pic;
	};
	for (auto [file, pic] : {Case{"p1.json", 1}, Case{"quadrant.json", 1}, Case{"square.json", 2}})
	{
		Instance in = load_instance(data_path(file));
		auto g = git_invariants(in.require_fan());
		o.require(g.exact && g.pic_rank == pic, std::string(file) + ": Picard rank or exactness fails");
		auto sr = in.toric_model().verify_point_presentation();
		o.require(sr.check.passed && sr.rank == in.require_fan().cone_count(),
		          std::string(file) + ": presentation rank differs from the number of cones");
	}
}

void c10(Outcome &o)
{
	for (auto const &f : kInstances)
	{
		std::ostringstream a, b, err;
		int ca = run({"verify-all", "--instance", data_path(f), "--threads", "1"}, a, err);
		int cb = run({"verify-all", "--instance", data_path(f), "--threads", "4"}, b, err);
		o.require(ca == 0 && cb == 0, f + ": verify-all failed");
		o.require(a.str() == b.str(), f + ": output depends on the thread count");
	}
}

} // namespace

int main()
{
	bool all = true;
	all &= criterion(1, 1, "C^I partition of W", c1);
	all &= criterion(2, 60, "Steinberg expansion of 100 random A2 elements", c2);
	all &= criterion(3, 1, "A1 structure constants and K(G/B) relation", c3);
	all &= criterion(4, 1, "quadrant moment order, triangular basis, point presentation", c4);
	all &= criterion(5, 120, "structural vs pointwise equivariant multiplication", c5);
	all &= criterion(6, 30, "ordinary Z-rank certificates", c6);
	all &= criterion(7, 120, "ordinary table vs augmentation oracle", c7);
	all &= criterion(8, 60, "presentation over the wonderful compactification", c8);
	all &= criterion(9, 1, "GIT Picard ranks and point-base presentation ranks", c9);
	all &= criterion(10, 0, "verify-all output independent of thread count", c10);
	std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
	return all ? 0 : 1;
}
