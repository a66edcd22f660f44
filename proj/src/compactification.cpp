#include "regk/compactification.hpp"

namespace regk {

CompactificationModel::CompactificationModel(std::shared_ptr<RootSystem const> rs, ToricModel toric, unsigned threads)
    : rs_(std::move(rs)), toric_(std::move(toric)), threads_(threads)
{
	if (rs_->dim() != toric_.lattice_dim())
		throw InvalidInput("fan dimension differs from the rank of the root system");
	basis_ = std::make_shared<SteinbergBasis const>(rs_);
	a_ = structure_constants(*basis_, threads_);
	flag_ = std::make_shared<FlagK const>(basis_, a_);
	for (RootSubset I : all_subsets(rs_->rank()))
	{
		LaurentElement p = regk::constant(1, rs_->dim());
		for (std::size_t i : I.indices())
			p *= one_minus_exp(rs_->simple_root(i));
		binom_.push_back(std::move(p));
	}
	wall_chi_ = toric_.wall_characters();
}

LaurentElement CompactificationModel::binomial_product(RootSubset I) const { return binom_[I.bits]; }

EquivariantClass CompactificationModel::zero() const
{
	return EquivariantClass{std::vector<std::vector<TensorElement>>(weyl_order(), Tuple(cone_count()))};
}

EquivariantClass CompactificationModel::unit() const { return basis_element(RootSubset{}, 0); }

EquivariantClass CompactificationModel::basis_element(RootSubset I, std::size_t v) const
{
	if (v >= weyl_order())
		throw InvalidInput("Weyl element index out of range");
	if (rs_->c_set_of(v) != I)
		throw InvalidInput("basis_element: " + rs_->weyl()[v].name() + " is not in C^I for the given I");
	LaurentElement one = regk::constant(1, rs_->dim());
	return lift(v, Tuple(cone_count(), tensor(one, one)));
}

EquivariantClass CompactificationModel::lift(std::size_t v, Tuple c) const
{
	if (c.size() != cone_count())
		throw InvalidInput("coefficient tuple length differs from the number of maximal cones");
	EquivariantClass x = zero();
	x.coeff[v] = std::move(c);
	return x;
}

EquivariantClass CompactificationModel::from_toric(GKMClass const &g) const
{
	LaurentElement one = regk::constant(1, rs_->dim());
	Tuple c;
	for (auto const &r : g.restrictions)
		c.push_back(tensor(r, one));
	return lift(0, std::move(c));
}

EquivariantClass CompactificationModel::add(EquivariantClass const &a, EquivariantClass const &b) const
{
	EquivariantClass c = a;
	for (std::size_t v = 0; v < c.coeff.size(); ++v)
		for (std::size_t s = 0; s < c.coeff[v].size(); ++s)
			c.coeff[v][s] += b.coeff[v][s];
	return c;
}

EquivariantClass CompactificationModel::subtract(EquivariantClass const &a, EquivariantClass const &b) const
{
	EquivariantClass c = a;
	for (std::size_t v = 0; v < c.coeff.size(); ++v)
		for (std::size_t s = 0; s < c.coeff[v].size(); ++s)
			c.coeff[v][s] -= b.coeff[v][s];
	return c;
}

Tuple CompactificationModel::to_tuple(EquivariantClass const &x) const
{
	Tuple f(cone_count());
	for (std::size_t v = 0; v < weyl_order(); ++v)
	{
		TensorElement b = tensor(binomial_product(rs_->c_set_of(v)), basis_->element(v));
		for (std::size_t s = 0; s < cone_count(); ++s)
			if (!x.coeff[v][s].is_zero())
				f[s] += x.coeff[v][s] * b;
	}
	return f;
}

std::vector<LaurentElement> const &CompactificationModel::expansion(Weight const &mu) const
{
	{
		std::lock_guard lock(cache_->mutex);
		auto it = cache_->map.find(mu);
		if (it != cache_->map.end())
			return it->second;
	}
	auto ex = basis_->expand(exp_weight(mu));
	std::lock_guard lock(cache_->mutex);
	return cache_->map.try_emplace(mu, std::move(ex)).first->second;
}

EquivariantClass CompactificationModel::from_tuple(Tuple const &f) const
{
	if (f.size() != cone_count())
		throw InvalidInput("tuple length differs from the number of maximal cones");
	std::size_t const n = weyl_order();
	EquivariantClass x = zero();
	for (std::size_t s = 0; s < cone_count(); ++s)
	{
		std::vector<std::vector<TensorElement::Term>> parts(n);
		for (auto const &[k, c] : f[s].terms())
		{
			auto const &ex = expansion(k.v);
			for (std::size_t w = 0; w < n; ++w)
				for (auto const &[kv, cv] : ex[w].terms())
					parts[w].emplace_back(WeightPair{k.u, kv}, c * cv);
		}
		for (std::size_t w = 0; w < n; ++w)
		{
			TensorElement g = TensorElement::from_terms(std::move(parts[w]));
			auto q = divide_u(g, binomial_product(rs_->c_set_of(w)));
			if (!q)
				throw VerificationFailure("tuple is not in the ring: the " + rs_->weyl()[w].name() +
				                          "-component at cone " + std::to_string(s) +
				                          " is not divisible by its binomial product");
			x.coeff[w][s] = std::move(*q);
		}
	}
	if (to_tuple(x) != f)
		throw InternalInconsistency("coordinate solve does not reconstruct the tuple");
	auto const &walls = toric_.fan().walls();
	for (std::size_t w = 0; w < n; ++w)
		for (std::size_t k = 0; k < walls.size(); ++k)
			if (!tensor_divisible_by_u_binomial(x.coeff[w][walls[k].a] - x.coeff[w][walls[k].b], wall_chi_[k]))
				throw VerificationFailure("tuple is not in the ring: the " + rs_->weyl()[w].name() +
				                          "-coefficient violates a wall congruence");
	return x;
}

EquivariantClass CompactificationModel::multiply_structural(EquivariantClass const &a, EquivariantClass const &b) const
{
	std::size_t const n = weyl_order();
	EquivariantClass out = zero();
	for (std::size_t v = 0; v < n; ++v)
		for (std::size_t vp = 0; vp < n; ++vp)
		{
			Tuple prod(cone_count());
			bool any = false;
			for (std::size_t s = 0; s < cone_count(); ++s)
			{
				if (a.coeff[v][s].is_zero() || b.coeff[vp][s].is_zero())
					continue;
				prod[s] = a.coeff[v][s] * b.coeff[vp][s];
				any = true;
			}
			if (!any)
				continue;
			RootSubset const I = rs_->c_set_of(v), Ip = rs_->c_set_of(vp);
			for (std::size_t w = 0; w < n; ++w)
			{
				auto const &aw = a_[v][vp][w];
				if (aw.is_zero())
					continue;
				RootSubset const J = rs_->c_set_of(w);
				TensorElement k = tensor(binomial_product(I & Ip) * binomial_product((I | Ip) - J), aw);
				for (std::size_t s = 0; s < cone_count(); ++s)
					if (!prod[s].is_zero())
						out.coeff[w][s] += prod[s] * k;
			}
		}
	return out;
}

EquivariantClass CompactificationModel::multiply_pointwise(EquivariantClass const &a, EquivariantClass const &b) const
{
	Tuple fa = to_tuple(a), fb = to_tuple(b);
	for (std::size_t s = 0; s < fa.size(); ++s)
		fa[s] *= fb[s];
	return from_tuple(fa);
}

CheckReport CompactificationModel::check_membership(Tuple const &f) const
{
	CheckReport rep;
	if (f.size() != cone_count())
	{
		rep.fail("tuple length differs from the number of maximal cones");
		return rep;
	}
	Fan const &fan = toric_.fan();
	for (std::size_t s = 0; s < cone_count(); ++s)
		for (std::size_t i = 0; i < rs_->rank(); ++i)
		{
			if (!facet_orthogonal_to_root(fan, s, i))
				continue;
			TensorElement d = tensor_act_right(rs_->simple_reflection(i), f[s]) - f[s];
			if (!tensor_divisible_by_u_binomial(d, rs_->simple_root(i)))
				rep.fail("condition (i) fails at cone " + std::to_string(s) + " for simple root " + std::to_string(i + 1));
		}
	auto const &walls = fan.walls();
	for (std::size_t k = 0; k < walls.size(); ++k)
		if (!tensor_divisible_by_u_binomial(f[walls[k].a] - f[walls[k].b], wall_chi_[k]))
			rep.fail("condition (ii) fails across the wall between cones " + std::to_string(walls[k].a) + " and " +
			         std::to_string(walls[k].b));
	return rep;
}

EquivariantCoordinates CompactificationModel::coordinates(EquivariantClass const &x) const
{
	EquivariantCoordinates c;
	for (auto const &t : x.coeff)
		c.push_back(toric_.expand_tensor(t));
	return c;
}

PairTableResult compare_multiplications(CompactificationModel const &model)
{
	RootSystem const &rs = model.root_system();
	std::size_t const n = model.weyl_order();
	auto results = parallel_map(n * n, model.threads(), [&](std::size_t k) -> std::string {
		std::size_t v = k / n, vp = k % n;
		auto a = model.basis_element(rs.c_set_of(v), v);
		auto b = model.basis_element(rs.c_set_of(vp), vp);
		auto s = model.multiply_structural(a, b);
		auto p = model.multiply_pointwise(a, b);
		if (s != p)
			return "b_" + rs.weyl()[v].name() + " * b_" + rs.weyl()[vp].name() + ": structural and pointwise products differ";
		auto mem = model.check_membership(model.to_tuple(s));
		if (!mem.passed)
			return "b_" + rs.weyl()[v].name() + " * b_" + rs.weyl()[vp].name() + ": " + mem.failures.front();
		return {};
	});
	PairTableResult out;
	out.pairs = n * n;
	for (auto &r : results)
		if (!r.empty())
		{
			out.agree = false;
			out.mismatches.push_back(std::move(r));
		}
	return out;
}

} // namespace regk
