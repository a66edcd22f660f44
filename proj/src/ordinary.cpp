#include "regk/ordinary.hpp"

#include "regk/linalg.hpp"

#include <cstdlib>

namespace regk {

namespace {

LaurentElement invert_u(LaurentElement const &r)
{
	return r.map_keys([](Weight const &w) { return -w; });
}

std::string basis_name(OrdinaryModel const &ord, std::size_t a)
{
	std::size_t const n = ord.weyl_order(), m = ord.cone_count();
	std::size_t w = a % n, i = (a / n) % m, v = a / (n * m);
	auto const &W = ord.model().root_system().weyl();
	return "fbar_" + W[w].name() + " xbar(tau_" + std::to_string(i + 1) + ") gamma_" + W[v].name();
}

std::vector<GKMClass> orbit_classes(ToricModel const &toric)
{
	std::vector<GKMClass> out;
	for (RayMask tau : toric.order().tau)
		out.push_back(toric.orbit_class(tau));
	return out;
}

} // namespace

OrdinaryModel::OrdinaryModel(CompactificationModel const &model)
    : model_(&model), n_(model.weyl_order()), m_(model.cone_count())
{
	RootSystem const &rs = model.root_system();
	ToricModel const &toric = model.toric();
	FlagK const &flag = model.flag();
	for (std::size_t v = 0; v < n_; ++v)
		cset_.push_back(rs.c_set_of(v));

	auto orbits = orbit_classes(toric);
	r_.assign(m_, std::vector<std::vector<FlagKClass>>(m_));
	for (std::size_t i = 0; i < m_; ++i)
		for (std::size_t j = 0; j < m_; ++j)
			for (auto const &r : toric.expand_in_orbit_basis(orbits[i] * orbits[j]))
				r_[i][j].push_back(phi(r));

	std::vector<FlagKClass> lam;
	for (RootSubset I : all_subsets(rs.rank()))
		lam.push_back(flag.lambda_bar(I));
	auto const &c = flag.constants();
	gam_.assign(n_, std::vector<std::vector<FlagKClass>>(n_));
	for (std::size_t v = 0; v < n_; ++v)
		for (std::size_t vp = 0; vp < n_; ++vp)
			for (std::size_t w = 0; w < n_; ++w)
			{
				RootSubset I = cset_[v], Ip = cset_[vp];
				FlagKClass g = flag.multiply(lam[(I & Ip).bits], lam[((I | Ip) - cset_[w]).bits]);
				gam_[v][vp].push_back(flag_scale(c[v][vp][w], std::move(g)));
			}
	fprod_.assign(n_, std::vector<FlagKClass>(n_));
	for (std::size_t w = 0; w < n_; ++w)
		for (std::size_t wp = 0; wp < n_; ++wp)
			fprod_[w][wp] = flag.multiply(flag.basis_class(w), flag.basis_class(wp));

	unit_coeffs_ = from_toric(toric.unit());
}

FlagKClass OrdinaryModel::phi(LaurentElement const &r) const
{
	FlagKClass out(n_, 0);
	for (auto const &[mu, c] : r.terms())
	{
		auto const &ex = model_->expansion(-mu);
		for (std::size_t w = 0; w < n_; ++w)
			out[w] += c * augment(ex[w]);
	}
	return out;
}

OrdinaryClass OrdinaryModel::basis_class(std::size_t v, std::size_t i, std::size_t w) const
{
	if (v >= n_ || i >= m_ || w >= n_)
		throw InvalidInput("ordinary basis index out of range");
	OrdinaryClass x = zero();
	x[index(v, i, w)] = 1;
	return x;
}

OrdinaryClass OrdinaryModel::unit() const { return unit_coeffs_; }

OrdinaryClass OrdinaryModel::gamma(std::size_t v) const
{
	if (v >= n_)
		throw InvalidInput("Weyl element index out of range");
	OrdinaryClass x = zero();
	for (std::size_t k = 0; k < m_ * n_; ++k)
		x[v * m_ * n_ + k] = unit_coeffs_[k];
	return x;
}

OrdinaryClass OrdinaryModel::from_toric(GKMClass const &g) const
{
	OrdinaryClass x = zero();
	auto r = model_->toric().expand_in_orbit_basis(g);
	for (std::size_t i = 0; i < m_; ++i)
	{
		FlagKClass f = phi(r[i]);
		for (std::size_t w = 0; w < n_; ++w)
			x[index(0, i, w)] = f[w];
	}
	return x;
}

OrdinaryClass OrdinaryModel::multiply(OrdinaryClass const &a, OrdinaryClass const &b) const
{
	if (a.size() != rank() || b.size() != rank())
		throw InvalidInput("ordinary class has the wrong length");
	FlagK const &flag = model_->flag();
	std::vector<std::size_t> sa, sb;
	for (std::size_t k = 0; k < rank(); ++k)
	{
		if (a[k] != 0)
			sa.push_back(k);
		if (b[k] != 0)
			sb.push_back(k);
	}
	OrdinaryClass out = zero();
	for (std::size_t ka : sa)
		for (std::size_t kb : sb)
		{
			std::size_t w1 = ka % n_, i = (ka / n_) % m_, v = ka / (n_ * m_);
			std::size_t w2 = kb % n_, j = (kb / n_) % m_, vp = kb / (n_ * m_);
			Integer coef = a[ka] * b[kb];
			for (std::size_t k = 0; k < m_; ++k)
			{
				FlagKClass g = flag.multiply(fprod_[w1][w2], r_[i][j][k]);
				bool nonzero = false;
				for (auto const &x : g)
					nonzero = nonzero || x != 0;
				if (!nonzero)
					continue;
				for (std::size_t w = 0; w < n_; ++w)
				{
					FlagKClass h = flag.multiply(g, gam_[v][vp][w]);
					for (std::size_t x = 0; x < n_; ++x)
						if (h[x] != 0)
							out[index(w, k, x)] += coef * h[x];
				}
			}
		}
	return out;
}

OrdinaryTable OrdinaryModel::table() const
{
	std::size_t const N = rank();
	return parallel_map(N * N, model_->threads(), [&](std::size_t k) {
		return multiply(basis_class(k / N / (m_ * n_), (k / N / n_) % m_, (k / N) % n_),
		                basis_class(k % N / (m_ * n_), (k % N / n_) % m_, (k % N) % n_));
	});
}

EquivariantClass oracle_lift(OrdinaryModel const &ord, std::size_t v, std::size_t i, std::size_t w)
{
	CompactificationModel const &model = ord.model();
	ToricModel const &toric = model.toric();
	GKMClass x = toric.orbit_class(toric.order().tau.at(i));
	LaurentElement r = invert_u(model.steinberg().element(w));
	LaurentElement one = constant(1, model.root_system().dim());
	Tuple c;
	for (auto const &g : x.restrictions)
		c.push_back(tensor(r * g, one));
	return model.lift(v, std::move(c));
}

OrdinaryClass oracle_project(OrdinaryModel const &ord, EquivariantClass const &x)
{
	auto coords = ord.model().coordinates(x);
	OrdinaryClass out = ord.zero();
	for (std::size_t v = 0; v < coords.size(); ++v)
		for (std::size_t i = 0; i < coords[v].size(); ++i)
		{
			FlagKClass f = ord.phi(collapse_v(coords[v][i]));
			for (std::size_t w = 0; w < f.size(); ++w)
				out[ord.index(v, i, w)] = f[w];
		}
	return out;
}

OrdinaryTable ordinary_oracle_table(OrdinaryModel const &ord)
{
	std::size_t const N = ord.rank(), n = ord.weyl_order(), m = ord.cone_count();
	std::vector<EquivariantClass> lifts;
	for (std::size_t k = 0; k < N; ++k)
		lifts.push_back(oracle_lift(ord, k / (m * n), (k / n) % m, k % n));
	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	for (std::size_t a = 0; a < N; ++a)
		for (std::size_t b = a; b < N; ++b)
			pairs.emplace_back(a, b);
	auto prods = parallel_map(pairs.size(), ord.model().threads(), [&](std::size_t k) {
		auto [a, b] = pairs[k];
		return oracle_project(ord, ord.model().multiply_pointwise(lifts[a], lifts[b]));
	});
	OrdinaryTable t(N * N);
	for (std::size_t k = 0; k < pairs.size(); ++k)
	{
		auto [a, b] = pairs[k];
		t[b * N + a] = prods[k];
		t[a * N + b] = std::move(prods[k]);
	}
	return t;
}

PairTableResult compare_tables(OrdinaryModel const &ord, OrdinaryTable const &a, OrdinaryTable const &b)
{
	std::size_t const N = ord.rank();
	PairTableResult out;
	out.pairs = N * N;
	if (a.size() != N * N || b.size() != N * N)
	{
		out.agree = false;
		out.mismatches.push_back("table sizes differ from rank^2");
		return out;
	}
	for (std::size_t k = 0; k < N * N; ++k)
		if (a[k] != b[k])
		{
			out.agree = false;
			out.mismatches.push_back(basis_name(ord, k / N) + " * " + basis_name(ord, k % N));
		}
	return out;
}

OrdinaryRankReport ordinary_rank(OrdinaryModel const &ord)
{
	std::size_t const N = ord.rank(), n = ord.weyl_order(), m = ord.cone_count();
	IntMatrix rows;
	for (std::size_t k = 0; k < N; ++k)
	{
		auto p = oracle_project(ord, oracle_lift(ord, k / (m * n), (k / n) % m, k % n));
		rows.emplace_back(p.begin(), p.end());
	}
	OrdinaryRankReport rep;
	rep.rank = rank(to_rational(rows));
	rep.determinant = abs(determinant(rows));
	return rep;
}

PresentationRelations presentation_relations(CompactificationModel const &model)
{
	Fan const &fan = model.toric().fan();
	PresentationRelations rel;
	rel.non_faces = fan.minimal_non_faces();
	for (std::size_t k = 0; k < fan.dim(); ++k)
	{
		MonomialRelation r{Weight(fan.dim()), {}};
		r.character[k] = 1;
		for (std::size_t j = 0; j < fan.ray_count(); ++j)
			r.exponents.push_back(static_cast<int>(pairing(r.character, fan.ray(j)).get_si()));
		rel.monomials.push_back(std::move(r));
	}
	return rel;
}

PresentationReport check_presentation(OrdinaryModel const &ord, PresentationRelations const &rel)
{
	CompactificationModel const &model = ord.model();
	ToricModel const &toric = model.toric();
	Fan const &fan = toric.fan();
	RootSystem const &rs = model.root_system();
	std::size_t const n = model.weyl_order(), m = model.cone_count(), R = fan.ray_count();
	PresentationReport rep;
	CheckReport &chk = rep.check;

	Fan chamber = positive_chamber(rs);
	rep.vacuous = chamber.rays() == fan.rays() && chamber.cones() == fan.cones();

	auto rays_of = [&](RayMask f) {
		std::string s;
		for (auto j : mask_indices(f))
			s += fan.ray(j).to_string();
		return s;
	};
	auto mul = [&](EquivariantClass const &a, EquivariantClass const &b) { return model.multiply_structural(a, b); };

	std::vector<EquivariantClass> X, Xinv;
	std::vector<OrdinaryClass> Xo, Xoinv;
	for (std::size_t j = 0; j < R; ++j)
	{
		X.push_back(model.from_toric(toric.ray_generator(j)));
		Xinv.push_back(model.from_toric(toric.ray_generator_power(j, -1)));
		Xo.push_back(ord.from_toric(toric.ray_generator(j)));
		Xoinv.push_back(ord.from_toric(toric.ray_generator_power(j, -1)));
	}
	EquivariantClass const one = model.unit();
	OrdinaryClass const one_o = ord.unit();

	// (a)
	for (RayMask f : rel.non_faces)
	{
		EquivariantClass p = one;
		OrdinaryClass po = one_o;
		for (auto j : mask_indices(f))
		{
			p = mul(p, model.subtract(one, X[j]));
			OrdinaryClass d = one_o;
			for (std::size_t k = 0; k < d.size(); ++k)
				d[k] -= Xo[j][k];
			po = ord.multiply(po, d);
		}
		if (p != model.zero())
			chk.fail("(a) non-face relation fails for rays " + rays_of(f));
		if (po != ord.zero())
			chk.fail("(a) ordinary non-face relation fails for rays " + rays_of(f));
	}

	// (b)
	for (auto const &r : rel.monomials)
	{
		if (r.exponents.size() != R)
			throw InvalidInput("monomial relation has the wrong number of exponents");
		EquivariantClass p = one;
		OrdinaryClass po = one_o;
		for (std::size_t j = 0; j < R; ++j)
			for (int e = 0; e < std::abs(r.exponents[j]); ++e)
			{
				p = mul(p, r.exponents[j] > 0 ? X[j] : Xinv[j]);
				po = ord.multiply(po, r.exponents[j] > 0 ? Xo[j] : Xoinv[j]);
			}
		GKMClass L = toric.constant(exp_weight(toric.to_lambda(r.character)));
		std::vector<Integer> psi;
		for (std::size_t j = 0; j < R; ++j)
			psi.push_back(pairing(r.character, fan.ray(j)));
		if (toric.line_bundle(psi) != L)
			chk.fail("(b) line bundle of " + r.character.to_string() + " is not the constant class");
		if (p != model.from_toric(L))
			chk.fail("(b) monomial relation fails for character " + r.character.to_string());
		if (po != ord.from_toric(L))
			chk.fail("(b) ordinary monomial relation fails for character " + r.character.to_string());
	}

	// (c)
	auto orbits = orbit_classes(toric);
	LaurentElement const uno = constant(1, rs.dim());
	FlagKClass const fone = model.flag().unit();
	std::size_t reached = 0;
	for (std::size_t i = 0; i < m; ++i)
	{
		bool ok = true;
		EquivariantClass xi = model.from_toric(orbits[i]);
		OrdinaryClass xo = ord.from_toric(orbits[i]);
		for (std::size_t v = 0; v < n && ok; ++v)
		{
			EquivariantClass y = mul(xi, model.basis_element(rs.c_set_of(v), v));
			EquivariantCoordinates expect(n, std::vector<TensorElement>(m));
			expect[v][i] = tensor(uno, uno);
			try
			{
				if (model.coordinates(y) != expect)
				{
					chk.fail("(c) x(tau_" + std::to_string(i + 1) + ") b_" + rs.weyl()[v].name() +
					         " is not a coordinate basis element");
					ok = false;
				}
				for (std::size_t j = 0; j < R && ok; ++j)
				{
					EquivariantClass z = mul(X[j], y);
					model.coordinates(z);
					if (z != model.multiply_pointwise(X[j], y))
					{
						chk.fail("(c) X_" + std::to_string(j + 1) + " x(tau_" + std::to_string(i + 1) +
						         ") b_" + rs.weyl()[v].name() + ": product paths differ");
						ok = false;
					}
				}
			}
			catch (VerificationFailure const &e)
			{
				chk.fail(std::string("(c) ") + e.what());
				ok = false;
			}
			OrdinaryClass expect_o = ord.zero();
			for (std::size_t w = 0; w < n; ++w)
				expect_o[ord.index(v, i, w)] = fone[w];
			if (ord.multiply(xo, ord.gamma(v)) != expect_o)
			{
				chk.fail("(c) ordinary xbar(tau_" + std::to_string(i + 1) + ") gamma_" + rs.weyl()[v].name() +
				         " is not a basis element");
				ok = false;
			}
		}
		if (ok)
			++reached;
	}

	// (d)
	rep.rank = reached;
	auto point = toric.verify_point_presentation();
	if (reached != m || point.rank != m)
		chk.fail("(d) rank over the wonderful ring is " + std::to_string(reached) + " (specialized orbit rank " +
		         std::to_string(point.rank) + "), expected " + std::to_string(m));
	auto orank = ordinary_rank(ord);
	rep.ordinary_rank = orank.rank;
	if (orank.rank != ord.rank() || orank.determinant != 1)
		chk.fail("(d) ordinary Z-rank is " + std::to_string(orank.rank) + ", expected " + std::to_string(ord.rank()));
	return rep;
}

PresentationReport verify_presentation_over_wonderful(OrdinaryModel const &ord)
{
	return check_presentation(ord, presentation_relations(ord.model()));
}

} // namespace regk
