#include "regk/cli.hpp"

#include "regk/instance.hpp"
#include "regk/ordinary.hpp"
#include "regk/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace regk {

namespace {

struct Section {
	Json data;
	bool passed = true;
	std::string failure; // first failure, for the error stream

	void fail(std::string const &why)
	{
		if (passed)
			failure = why;
		passed = false;
	}
	void absorb(CheckReport const &r)
	{
		for (auto const &f : r.failures)
			fail(f);
	}
};

Json strings(std::vector<std::string> const &v)
{
	Json a = Json::array();
	for (auto const &s : v)
		a.push_back(s);
	return a;
}

std::string wname(RootSystem const &rs, std::size_t w) { return rs.weyl()[w].name(); }

Section weyl_section(Instance const &in)
{
	RootSystem const &rs = in.require_root_system();
	Section s;
	Json &d = s.data;
	d["root_system"] = rs.name();
	d["rank"] = rs.rank();
	d["central_rank"] = rs.central_rank();
	d["weyl_order"] = rs.weyl_order();
	Json el = Json::array();
	for (std::size_t w = 0; w < rs.weyl_order(); ++w)
		el.push_back(Json{{"name", wname(rs, w)},
		                  {"length", rs.inversion_count(rs.weyl()[w])},
		                  {"c_set", subset_to_json(rs.c_set_of(w))}});
	d["elements"] = el;
	Json cs = Json::array();
	std::size_t total = 0;
	std::vector<int> seen(rs.weyl_order(), 0);
	for (auto const &[I, ws] : rs.c_sets())
	{
		Json names = Json::array();
		for (auto w : ws)
		{
			names.push_back(wname(rs, w));
			++seen[w];
		}
		total += ws.size();
		cs.push_back(Json{{"I", subset_to_json(I)}, {"size", ws.size()}, {"elements", names}});
	}
	d["c_sets"] = cs;
	bool partition = total == rs.weyl_order() && std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
	d["partition"] = partition;
	if (!partition)
		s.fail("the sets C^I do not partition W");
	return s;
}

Section steinberg_section(Instance const &in, unsigned threads)
{
	auto rs = in.root_system;
	in.require_root_system();
	Section s;
	Json &d = s.data;
	auto basis = std::make_shared<SteinbergBasis const>(rs);
	Json el = Json::array();
	for (std::size_t w = 0; w < basis->size(); ++w)
		el.push_back(Json{{"w", wname(*rs, w)}, {"f", to_json(basis->element(w))}});
	d["basis"] = el;
	d["determinant"] = to_json(basis->determinant());

	// round trip on every e^{+-w_i} and on products of basis elements
	std::size_t round_trips = 0;
	for (std::size_t i = 0; i < rs->dim(); ++i)
		for (int sign : {1, -1})
		{
			Weight e(rs->dim());
			e[i] = sign;
			basis->expand(exp_weight(e));
			++round_trips;
		}
	auto a = structure_constants(*basis, threads);
	Json sc = Json::array();
	for (std::size_t v = 0; v < a.size(); ++v)
		for (std::size_t vp = 0; vp < a.size(); ++vp)
			for (std::size_t w = 0; w < a.size(); ++w)
				if (!a[v][vp][w].is_zero())
					sc.push_back(Json{{"v", wname(*rs, v)},
					                  {"v'", wname(*rs, vp)},
					                  {"w", wname(*rs, w)},
					                  {"a", to_json(a[v][vp][w])}});
	round_trips += a.size() * a.size();
	d["structure_constants"] = sc;
	d["round_trips"] = round_trips;

	FlagK flag(basis, a);
	Json fk = Json::array();
	for (std::size_t v = 0; v < a.size(); ++v)
		for (std::size_t vp = 0; vp < a.size(); ++vp)
			fk.push_back(Json{{"v", wname(*rs, v)}, {"v'", wname(*rs, vp)}, {"c", to_json(flag.constants()[v][vp])}});
	d["flag_constants"] = fk;
	return s;
}

Json moment_json(MomentOrder const &mo)
{
	Json j;
	j["order"] = mo.order;
	Json mom = Json::array();
	for (auto const &q : mo.moments)
		mom.push_back(q.get_str());
	j["moments"] = mom;
	Json tau = Json::array();
	for (auto t : mo.tau)
		tau.push_back(mask_to_json(t));
	j["tau"] = tau;
	j["cell_dims"] = mo.cell_dims;
	j["star_property"] = mo.star_property;
	return j;
}

Section fan_section(Instance const &in)
{
	Fan const &f = in.require_fan();
	Section s;
	Json &d = s.data;
	Json rays = Json::array();
	for (auto const &r : f.rays())
		rays.push_back(to_json(r));
	d["rays"] = rays;
	d["maximal_cones"] = f.cones();
	d["defaulted_to_chamber"] = in.fan_is_chamber;
	d["smooth"] = f.is_smooth();
	d["complete"] = f.is_complete();
	Json walls = Json::array();
	for (auto const &w : f.walls())
		walls.push_back(Json{{"cones", {w.a, w.b}},
		                     {"facet", mask_to_json(w.facet)},
		                     {"character", to_json(wall_character(f, w.a, w.b))}});
	d["walls"] = walls;
	Json nf = Json::array();
	for (auto m : f.minimal_non_faces())
		nf.push_back(mask_to_json(m));
	d["minimal_non_faces"] = nf;

	if (in.root_system)
	{
		auto sub = validate_positive_subdivision(*in.root_system, f);
		d["positive_subdivision"] = Json{{"valid", sub.valid}, {"failures", strings(sub.failures)}};
		if (!sub.valid)
			s.fail(sub.failures.front());
	}

	auto psi = in.resolved_psi();
	d["psi"] = to_json(psi);
	d["psi_searched"] = !in.psi.has_value();
	auto amp = check_ample(f, psi);
	d["ample"] = amp.ample;
	if (!amp.ample)
	{
		s.fail(amp.failures.front());
		return s;
	}
	Weight dir = in.resolved_direction(psi);
	d["bb_direction"] = to_json(dir);
	d["direction_searched"] = !in.bb_direction.has_value();
	auto mo = moment_order(f, psi, dir);
	d["moment_order"] = moment_json(mo);
	if (!mo.star_property)
		s.fail(mo.failures.empty() ? "star property fails" : mo.failures.front());

	try
	{
		auto g = git_invariants(f);
		Json gale = Json::array();
		for (auto const &a : g.gale_duals)
			gale.push_back(to_json(a));
		d["git"] = Json{{"pic_rank", g.pic_rank},
		                {"gale_duals", gale},
		                {"smith_diagonal", to_json(g.smith_diagonal)},
		                {"exact", g.exact}};
		if (!g.exact)
			s.fail("GIT sequence is not exact");
	}
	catch (VerificationFailure const &e)
	{
		d["git"] = Json{{"error", e.what()}};
		s.fail(e.what());
	}
	return s;
}

Section toric_section(Instance const &in)
{
	ToricModel t = in.toric_model();
	Section s;
	Json &d = s.data;
	d["moment_order"] = moment_json(t.order());
	Json bm = Json::array();
	for (auto const &row : t.basis_matrix())
	{
		Json r = Json::array();
		for (auto const &x : row)
			r.push_back(to_json(x));
		bm.push_back(r);
	}
	d["basis_matrix"] = bm;
	Json gens = Json::array();
	for (std::size_t j = 0; j < t.fan().ray_count(); ++j)
	{
		auto g = t.ray_generator(j);
		Json res = Json::array(), co = Json::array();
		for (auto const &x : g.restrictions)
			res.push_back(to_json(x));
		for (auto const &x : t.expand_in_orbit_basis(g))
			co.push_back(to_json(x));
		gens.push_back(Json{{"ray", j}, {"restrictions", res}, {"orbit_coordinates", co}});
	}
	d["ray_generators"] = gens;
	auto lb = t.check_congruences(t.line_bundle(in.resolved_psi()));
	d["line_bundle_congruences"] = lb.passed;
	s.absorb(lb);
	auto sr = t.verify_point_presentation();
	d["point_presentation"] = Json{{"passed", sr.check.passed}, {"rank", sr.rank}, {"failures", strings(sr.check.failures)}};
	s.absorb(sr.check);
	return s;
}

Json coordinates_json(CompactificationModel const &m, EquivariantClass const &x)
{
	RootSystem const &rs = m.root_system();
	auto c = m.coordinates(x);
	Json out = Json::array();
	for (std::size_t w = 0; w < c.size(); ++w)
	{
		bool any = std::any_of(c[w].begin(), c[w].end(), [](TensorElement const &t) { return !t.is_zero(); });
		if (!any)
			continue;
		Json co = Json::array();
		for (auto const &t : c[w])
			co.push_back(to_json(t));
		out.push_back(Json{{"w", wname(rs, w)}, {"coefficients", co}});
	}
	return out;
}

Json equivariant_table(CompactificationModel const &m)
{
	RootSystem const &rs = m.root_system();
	std::size_t const n = m.weyl_order();
	auto rows = parallel_map(n * n, m.threads(), [&](std::size_t k) {
		std::size_t v = k / n, vp = k % n;
		auto p = m.multiply_structural(m.basis_element(rs.c_set_of(v), v), m.basis_element(rs.c_set_of(vp), vp));
		return Json{{"v", wname(rs, v)}, {"v'", wname(rs, vp)}, {"product", coordinates_json(m, p)}};
	});
	Json t = Json::array();
	for (auto &r : rows)
		t.push_back(std::move(r));
	return t;
}

Json ordinary_table_json(OrdinaryModel const &o)
{
	std::size_t const N = o.rank();
	auto T = o.table();
	Json t = Json::array();
	for (std::size_t k = 0; k < N * N; ++k)
	{
		Json nz = Json::array();
		for (std::size_t x = 0; x < N; ++x)
			if (T[k][x] != 0)
				nz.push_back(Json::array({x, to_json(T[k][x])}));
		if (!nz.empty())
			t.push_back(Json{{"a", k / N}, {"b", k % N}, {"product", nz}});
	}
	return t;
}

Json ordinary_basis_json(OrdinaryModel const &o)
{
	RootSystem const &rs = o.model().root_system();
	Json b = Json::array();
	for (std::size_t v = 0; v < o.weyl_order(); ++v)
		for (std::size_t i = 0; i < o.cone_count(); ++i)
			for (std::size_t w = 0; w < o.weyl_order(); ++w)
				b.push_back(Json{{"v", wname(rs, v)}, {"i", i + 1}, {"w", wname(rs, w)}});
	return b;
}

Section membership_section(CompactificationModel const &m)
{
	RootSystem const &rs = m.root_system();
	std::size_t const n = m.weyl_order();
	Section s;
	std::size_t checked = 0;
	for (std::size_t v = 0; v < n; ++v)
	{
		s.absorb(m.check_membership(m.to_tuple(m.basis_element(rs.c_set_of(v), v))));
		++checked;
	}
	auto reps = parallel_map(n * n, m.threads(), [&](std::size_t k) {
		std::size_t v = k / n, vp = k % n;
		return m.check_membership(
		    m.to_tuple(m.multiply_structural(m.basis_element(rs.c_set_of(v), v), m.basis_element(rs.c_set_of(vp), vp))));
	});
	for (auto const &r : reps)
		s.absorb(r);
	checked += reps.size();
	s.data = Json{{"tuples_checked", checked}, {"passed", s.passed}};
	return s;
}

Section oracle_section(CompactificationModel const &m, OrdinaryModel const &o)
{
	Section s;
	auto eq = compare_multiplications(m);
	for (auto const &x : eq.mismatches)
		s.fail(x);
	auto ord = compare_tables(o, o.table(), ordinary_oracle_table(o));
	for (auto const &x : ord.mismatches)
		s.fail("ordinary table mismatch at " + x);
	bool unit = oracle_project(o, m.unit()) == o.unit();
	if (!unit)
		s.fail("augmented equivariant unit differs from the ordinary unit");
	auto rk = ordinary_rank(o);
	if (rk.rank != o.rank() || rk.determinant != 1)
		s.fail("ordinary Z-rank certificate fails");
	s.data = Json{{"equivariant_pairs", eq.pairs},
	              {"equivariant_agree", eq.agree},
	              {"ordinary_pairs", ord.pairs},
	              {"ordinary_agree", ord.agree},
	              {"unit_specializes", unit},
	              {"ordinary_rank", rk.rank},
	              {"passed", s.passed}};
	return s;
}

Section presentation_section(OrdinaryModel const &o)
{
	Section s;
	auto rel = presentation_relations(o.model());
	auto rep = check_presentation(o, rel);
	s.absorb(rep.check);

	// negative control: drop one exponent of the first nontrivial monomial relation
	Json control = nullptr;
	for (auto &r : rel.monomials)
	{
		auto it = std::find_if(r.exponents.begin(), r.exponents.end(), [](int e) { return e != 0; });
		if (it == r.exponents.end())
			continue;
		control = Json{{"character", to_json(r.character)}, {"ray", it - r.exponents.begin()}};
		*it = 0;
		auto bad = check_presentation(o, rel);
		control["detected"] = !bad.check.passed;
		if (bad.check.passed)
			s.fail("negative control: corrupted relation was not detected");
		break;
	}
	Json mono = Json::array();
	for (auto const &r : presentation_relations(o.model()).monomials)
		mono.push_back(Json{{"character", to_json(r.character)}, {"exponents", r.exponents}});
	Json nf = Json::array();
	for (auto f : rel.non_faces)
		nf.push_back(mask_to_json(f));
	s.data = Json{{"vacuous", rep.vacuous},
	              {"non_faces", nf},
	              {"monomial_relations", mono},
	              {"failures", strings(rep.check.failures)},
	              {"rank_over_wonderful", rep.rank},
	              {"ordinary_rank", rep.ordinary_rank},
	              {"negative_control", control},
	              {"passed", s.passed}};
	return s;
}

void merge(Section &into, std::string const &key, Section const &part)
{
	into.data[key] = part.data;
	if (!part.passed)
		into.fail(key + ": " + part.failure);
}

struct Options {
	std::string instance;
	int threads = 0;
	std::string table;
	std::vector<std::string> verify;
};

Section dispatch(std::string const &cmd, Options const &opt)
{
	Instance in = load_instance(opt.instance);
	if (opt.threads > 0)
		in.threads = static_cast<unsigned>(opt.threads);
	if (cmd == "weyl")
		return weyl_section(in);
	if (cmd == "steinberg")
		return steinberg_section(in, in.threads);
	if (cmd == "fan")
		return fan_section(in);
	if (cmd == "toric-k")
		return toric_section(in);

	Section out;
	out.data["instance"] = in.name;
	if (cmd == "kring")
	{
		auto m = in.compactification_model();
		OrdinaryModel o(m);
		std::string table = opt.table.empty() && opt.verify.empty() ? "equivariant" : opt.table;
		if (table == "equivariant")
			out.data["equivariant_table"] = equivariant_table(m);
		else if (table == "ordinary")
		{
			out.data["ordinary_rank"] = o.rank();
			out.data["ordinary_basis"] = ordinary_basis_json(o);
			out.data["ordinary_table"] = ordinary_table_json(o);
		}
		for (auto const &v : opt.verify)
		{
			if (v == "membership")
				merge(out, "membership", membership_section(m));
			else if (v == "oracle")
				merge(out, "oracle", oracle_section(m, o));
			else
				merge(out, "presentation", presentation_section(o));
		}
		return out;
	}

	// verify-all
	if (in.root_system)
	{
		merge(out, "weyl", weyl_section(in));
		Section st = steinberg_section(in, in.threads);
		st.data = Json{{"determinant", st.data["determinant"]}, {"round_trips", st.data["round_trips"]}};
		merge(out, "steinberg", st);
	}
	merge(out, "fan", fan_section(in));
	merge(out, "toric_k", toric_section(in));
	if (in.root_system)
	{
		auto m = in.compactification_model();
		OrdinaryModel o(m);
		out.data["equivariant_basis_size"] = m.weyl_order();
		out.data["ordinary_rank"] = o.rank();
		merge(out, "membership", membership_section(m));
		merge(out, "oracle", oracle_section(m, o));
		merge(out, "presentation", presentation_section(o));
	}
	out.data["passed"] = out.passed;
	return out;
}

void report_error(std::ostream &err, char const *kind, std::string const &msg)
{
	err << Json{{"error", {{"kind", kind}, {"message", msg}}}}.dump() << "\n";
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Equivariant and ordinary K-rings of regular compactifications"};
	app.require_subcommand(1);
	Options opt;
	app.add_option("--threads", opt.threads, "worker threads (output does not depend on it)")
	    ->check(CLI::PositiveNumber);
	auto add = [&](char const *name, char const *desc) {
		auto *sub = app.add_subcommand(name, desc);
		sub->add_option("--instance", opt.instance, "instance JSON file")->required();
		sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
		return sub;
	};
	add("weyl", "Weyl group and the sets C^I");
	add("steinberg", "Steinberg basis, structure constants and K(G/B) constants");
	add("fan", "fan validation, ampleness, moment order and GIT invariants");
	add("toric-k", "GKM model of the toric variety and the point-base presentation");
	auto *kring = add("kring", "multiplication tables and verifications for K(X)");
	kring->add_option("--table", opt.table, "equivariant or ordinary")
	    ->check(CLI::IsMember({"equivariant", "ordinary"}));
	kring->add_option("--verify", opt.verify, "membership, oracle or presentation (repeatable)")
	    ->check(CLI::IsMember({"membership", "oracle", "presentation"}));
	add("verify-all", "run every check on an instance");

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try
	{
		app.parse(rev);
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return 0;
	}
	catch (CLI::ParseError const &e)
	{
		report_error(err, "invalid_input", e.what());
		return 2;
	}

	std::string cmd = app.get_subcommands().front()->get_name();
	try
	{
		Section s = dispatch(cmd, opt);
		out << s.data.dump(2) << "\n";
		if (!s.passed)
		{
			report_error(err, "verification_failure", s.failure);
			return 1;
		}
		return 0;
	}
	catch (InvalidInput const &e)
	{
		report_error(err, "invalid_input", e.what());
		return 2;
	}
	catch (VerificationFailure const &e)
	{
		report_error(err, "verification_failure", e.what());
		return 1;
	}
	catch (std::exception const &e)
	{
		report_error(err, "internal_inconsistency", e.what());
		return 3;
	}
}

} // namespace regk
