#include "regk/toric_k.hpp"

namespace regk {

namespace {

GKMClass pointwise(GKMClass const &a, GKMClass const &b, int op)
{
	if (a.restrictions.size() != b.restrictions.size())
		throw InvalidInput("GKM classes over different fans");
	GKMClass c;
	c.restrictions.reserve(a.restrictions.size());
	for (std::size_t s = 0; s < a.restrictions.size(); ++s)
	{
		auto const &x = a.restrictions[s];
		auto const &y = b.restrictions[s];
		c.restrictions.push_back(op == 0 ? x + y : op == 1 ? x - y : x * y);
	}
	return c;
}

} // namespace

GKMClass operator+(GKMClass const &a, GKMClass const &b) { return pointwise(a, b, 0); }
GKMClass operator-(GKMClass const &a, GKMClass const &b) { return pointwise(a, b, 1); }
GKMClass operator*(GKMClass const &a, GKMClass const &b) { return pointwise(a, b, 2); }

GKMClass scale(LaurentElement const &r, GKMClass const &g)
{
	GKMClass c = g;
	for (auto &x : c.restrictions)
		x = r * x;
	return c;
}

ToricModel::ToricModel(Fan fan, std::shared_ptr<RootSystem const> rs, MomentOrder order)
    : fan_(std::move(fan)), rs_(std::move(rs)), order_(std::move(order))
{
	if (rs_ && rs_->dim() != fan_.dim())
		throw InvalidInput("fan dimension " + std::to_string(fan_.dim()) + " differs from the rank " +
		                   std::to_string(rs_->dim()) + " of the root system");
	if (!fan_.is_smooth())
		throw InvalidInput("toric K-theory model needs a smooth fan");
	std::size_t const m = fan_.cone_count();
	if (order_.order.size() != m || order_.tau.size() != m)
		throw InvalidInput("moment order does not cover every maximal cone");
	for (std::size_t s = 0; s < m; ++s)
	{
		std::vector<Weight> d;
		for (auto const &u : fan_.dual_basis(s))
			d.push_back(to_lambda(u));
		dual_.push_back(std::move(d));
	}
	for (auto const &w : fan_.walls())
		wall_chi_.push_back(to_lambda(wall_character(fan_, w.a, w.b)));

	for (std::size_t i = 0; i < m; ++i)
		orbit_basis_.push_back(orbit_class(order_.tau[i]));
	basis_.assign(m, std::vector<LaurentElement>(m));
	for (std::size_t j = 0; j < m; ++j)
		for (std::size_t i = 0; i < m; ++i)
		{
			basis_[j][i] = orbit_basis_[i].restrictions[order_.order[j]];
			if (i > j && !basis_[j][i].is_zero())
				throw VerificationFailure("orbit basis matrix is not triangular at (" + std::to_string(j + 1) + "," +
				                          std::to_string(i + 1) + ")");
		}
	for (std::size_t j = 0; j < m; ++j)
		if (basis_[j][j].is_zero())
			throw VerificationFailure("orbit basis matrix has a zero diagonal entry");
}

Weight ToricModel::to_lambda(Weight const &m) const { return rs_ ? rs_->root_lattice_to_weight(m) : m; }

GKMClass ToricModel::constant(LaurentElement const &r) const
{
	return GKMClass{std::vector<LaurentElement>(fan_.cone_count(), r)};
}

GKMClass ToricModel::unit() const { return constant(regk::constant(1, lattice_dim())); }

GKMClass ToricModel::ray_generator(std::size_t j) const { return ray_generator_power(j, 1); }

GKMClass ToricModel::ray_generator_power(std::size_t j, int k) const
{
	if (j >= fan_.ray_count())
		throw InvalidInput("ray index out of range");
	GKMClass g;
	for (std::size_t s = 0; s < fan_.cone_count(); ++s)
	{
		Weight e(lattice_dim());
		auto const &c = fan_.cones()[s];
		for (std::size_t t = 0; t < c.size(); ++t)
			if (c[t] == j)
				e = k * dual_[s][t];
		g.restrictions.push_back(exp_weight(e));
	}
	return g;
}

GKMClass ToricModel::orbit_class(RayMask tau) const
{
	if (!fan_.is_face(tau))
		throw InvalidInput("orbit_class: ray set is not a cone of the fan");
	GKMClass x = unit();
	for (auto j : mask_indices(tau))
		x = x * (unit() - ray_generator(j));
	return x;
}

GKMClass ToricModel::line_bundle(std::vector<Integer> const &psi) const
{
	GKMClass g;
	for (std::size_t s = 0; s < fan_.cone_count(); ++s)
		g.restrictions.push_back(exp_weight(to_lambda(integral_linear_form(fan_, psi, s))));
	return g;
}

CheckReport ToricModel::check_congruences(GKMClass const &g) const
{
	CheckReport rep;
	if (g.restrictions.size() != fan_.cone_count())
	{
		rep.fail("class has " + std::to_string(g.restrictions.size()) + " restrictions for " +
		         std::to_string(fan_.cone_count()) + " maximal cones");
		return rep;
	}
	auto const &walls = fan_.walls();
	for (std::size_t k = 0; k < walls.size(); ++k)
	{
		auto diff = g.restrictions[walls[k].a] - g.restrictions[walls[k].b];
		if (!divide_exact(diff, one_minus_exp(-wall_chi_[k])))
			rep.fail("congruence fails across the wall between cones " + std::to_string(walls[k].a) + " and " +
			         std::to_string(walls[k].b));
	}
	return rep;
}

std::vector<LaurentElement> ToricModel::expand_in_orbit_basis(GKMClass const &g) const
{
	auto rep = check_congruences(g);
	if (!rep.passed)
		throw InvalidInput("expand_in_orbit_basis: " + rep.failures.front());
	std::size_t const m = cone_count();
	std::vector<LaurentElement> r(m);
	for (std::size_t j = 0; j < m; ++j)
	{
		LaurentElement rem = g.restrictions[order_.order[j]];
		for (std::size_t i = 0; i < j; ++i)
			rem -= r[i] * basis_[j][i];
		auto q = divide_exact(rem, basis_[j][j]);
		if (!q)
			throw InternalInconsistency("orbit-basis solve: inexact division for a class satisfying the congruences");
		r[j] = std::move(*q);
	}
	GKMClass recon = constant(LaurentElement{});
	for (std::size_t i = 0; i < m; ++i)
		recon = recon + scale(r[i], orbit_basis_[i]);
	if (recon != g)
		throw InternalInconsistency("orbit-basis solve does not reconstruct its input");
	return r;
}

std::vector<TensorElement> ToricModel::expand_tensor(std::vector<TensorElement> const &g) const
{
	std::size_t const m = cone_count();
	if (g.size() != m)
		throw InvalidInput("tuple length differs from the number of maximal cones");
	std::vector<TensorElement> r(m);
	for (std::size_t j = 0; j < m; ++j)
	{
		TensorElement rem = g[order_.order[j]];
		for (std::size_t i = 0; i < j; ++i)
			rem -= mul_u(r[i], basis_[j][i]);
		auto q = divide_u(rem, basis_[j][j]);
		if (!q)
			throw VerificationFailure("tuple is not in the span of the orbit basis (cone " +
			                          std::to_string(order_.order[j]) + ")");
		r[j] = std::move(*q);
	}
	for (std::size_t s = 0; s < m; ++s)
	{
		TensorElement recon;
		for (std::size_t i = 0; i < m; ++i)
			recon += mul_u(r[i], orbit_basis_[i].restrictions[s]);
		if (recon != g[s])
			throw VerificationFailure("orbit-basis solve does not reconstruct the tuple at cone " + std::to_string(s));
	}
	return r;
}

std::vector<Integer> ToricModel::specialize(GKMClass const &g) const
{
	std::vector<Integer> out;
	for (auto const &r : expand_in_orbit_basis(g))
		out.push_back(augment(r));
	return out;
}

CheckReport ToricModel::sr_vanishing_check() const
{
	CheckReport rep;
	GKMClass const zero = constant(LaurentElement{});
	for (RayMask f : fan_.minimal_non_faces())
	{
		GKMClass x = unit();
		for (auto j : mask_indices(f))
			x = x * (unit() - ray_generator(j));
		if (x != zero)
		{
			std::string rays;
			for (auto j : mask_indices(f))
				rays += fan_.ray(j).to_string();
			rep.fail("Stanley-Reisner relation fails for non-face " + rays);
		}
	}
	return rep;
}

ToricModel::PointPresentationReport ToricModel::verify_point_presentation() const
{
	PointPresentationReport out;
	CheckReport &rep = out.check;
	std::size_t const n = lattice_dim(), m = cone_count();
	std::vector<Weight> us;
	Weight all(n);
	for (std::size_t k = 0; k < n; ++k)
	{
		Weight e(n);
		e[k] = 1;
		us.push_back(e);
		all += e;
	}
	us.push_back(all);
	std::vector<Integer> unit_spec = specialize(unit());
	for (auto const &u : us)
	{
		GKMClass p = unit();
		for (std::size_t j = 0; j < fan_.ray_count(); ++j)
		{
			Integer k = pairing(u, fan_.ray(j));
			if (k != 0)
				p = p * ray_generator_power(j, static_cast<int>(k.get_si()));
		}
		if (p != constant(exp_weight(to_lambda(u))))
			rep.fail("monomial relation fails for u = " + u.to_string());
		else if (specialize(p) != unit_spec)
			rep.fail("specialized monomial relation fails for u = " + u.to_string());
	}
	auto sr = sr_vanishing_check();
	for (auto &f : sr.failures)
		rep.fail(f);

	RatMatrix spec;
	for (std::size_t i = 0; i < m; ++i)
	{
		RatVector row;
		for (auto const &x : specialize(orbit_basis_[i]))
			row.emplace_back(x);
		spec.push_back(std::move(row));
	}
	out.rank = rank(spec);
	if (out.rank != m)
		rep.fail("specialized orbit classes have rank " + std::to_string(out.rank) + ", expected " + std::to_string(m));
	return out;
}

} // namespace regk
