#include "regk/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace regk {

Integer pairing(Weight const &m, Weight const &x)
{
	if (m.dim() != x.dim())
		throw InvalidInput("pairing: dimension mismatch");
	Integer s = 0;
	for (std::size_t i = 0; i < m.dim(); ++i)
		s += static_cast<long>(m[i]) * static_cast<long>(x[i]);
	return s;
}

std::vector<std::size_t> mask_indices(RayMask m)
{
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < 64; ++i)
		if ((m >> i) & 1u)
			out.push_back(i);
	return out;
}

RayMask make_mask(std::vector<std::size_t> const &idx)
{
	RayMask m = 0;
	for (auto i : idx)
		m |= RayMask{1} << i;
	return m;
}

namespace {

std::string ray_list(Fan const &f, RayMask m)
{
	std::string s = "{";
	for (auto i : mask_indices(m))
		s += (s.size() > 1 ? "," : "") + f.ray(i).to_string();
	return s + "}";
}

IntMatrix ray_matrix(std::vector<Weight> const &rays, std::vector<std::size_t> const &idx)
{
	IntMatrix b;
	for (auto j : idx)
	{
		IntVector row;
		for (int x : rays[j].coords())
			row.emplace_back(x);
		b.push_back(std::move(row));
	}
	return b;
}

Weight to_weight(IntVector const &v)
{
	Weight w(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
	{
		if (!v[i].fits_sint_p())
			throw InvalidInput("lattice vector entry out of range");
		w[i] = static_cast<int>(v[i].get_si());
	}
	return w;
}

// Primitive normal of the hyperplane spanned by the given rays (n-1 of them).
Weight facet_normal(std::vector<Weight> const &rays, std::vector<std::size_t> const &facet, std::size_t n)
{
	auto ker = integer_kernel(ray_matrix(rays, facet), n);
	if (ker.size() != 1)
		throw InvalidInput("facet rays are linearly dependent");
	return to_weight(ker[0]);
}

} // namespace

Fan::Fan(std::vector<Weight> rays, std::vector<std::vector<std::size_t>> maximal_cones)
    : n_(rays.empty() ? 0 : rays[0].dim()), rays_(std::move(rays)), cones_(std::move(maximal_cones))
{
	validate();
}

void Fan::validate()
{
	if (rays_.empty() || cones_.empty())
		throw InvalidInput("fan needs at least one ray and one maximal cone");
	if (n_ == 0)
		throw InvalidInput("fan rays have dimension 0");
	if (rays_.size() > 64)
		throw InvalidInput("fans with more than 64 rays are not supported");
	for (std::size_t j = 0; j < rays_.size(); ++j)
	{
		if (rays_[j].dim() != n_)
			throw InvalidInput("ray " + std::to_string(j) + " has the wrong dimension");
		int g = 0;
		for (int x : rays_[j].coords())
			g = std::gcd(g, x);
		if (g != 1)
			throw InvalidInput("ray " + rays_[j].to_string() + " is not primitive");
	}
	std::set<RayMask> seen;
	RayMask used = 0;
	for (auto &c : cones_)
	{
		std::sort(c.begin(), c.end());
		if (std::adjacent_find(c.begin(), c.end()) != c.end())
			throw InvalidInput("maximal cone lists a ray twice");
		for (auto j : c)
			if (j >= rays_.size())
				throw InvalidInput("maximal cone references ray index " + std::to_string(j) + " out of range");
		if (c.size() != n_)
			throw InvalidInput("maximal cone " + ray_list(*this, make_mask(c)) +
			                   " is not full-dimensional and simplicial");
		if (determinant(ray_matrix(rays_, c)) == 0)
			throw InvalidInput("maximal cone " + ray_list(*this, make_mask(c)) + " has dependent rays");
		RayMask m = make_mask(c);
		if (!seen.insert(m).second)
			throw InvalidInput("maximal cone " + ray_list(*this, m) + " listed twice");
		masks_.push_back(m);
		used |= m;
	}
	for (std::size_t j = 0; j < rays_.size(); ++j)
		if (!((used >> j) & 1u))
			throw InvalidInput("ray " + rays_[j].to_string() + " lies in no maximal cone");

	std::map<RayMask, std::vector<std::size_t>> facets;
	for (std::size_t s = 0; s < cones_.size(); ++s)
		for (auto j : cones_[s])
			facets[masks_[s] & ~(RayMask{1} << j)].push_back(s);
	for (auto const &[facet, owners] : facets)
	{
		auto idx = mask_indices(facet);
		Weight normal = facet_normal(rays_, idx, n_);
		auto side = [&](std::size_t s) {
			std::size_t opp = mask_indices(masks_[s] & ~facet)[0];
			return sgn(pairing(normal, rays_[opp]));
		};
		if (owners.size() > 2)
			throw InvalidInput("facet " + ray_list(*this, facet) + " lies in more than two maximal cones");
		if (owners.size() == 2)
		{
			if (side(owners[0]) == side(owners[1]))
				throw InvalidInput("maximal cones " + ray_list(*this, masks_[owners[0]]) + " and " +
				                   ray_list(*this, masks_[owners[1]]) + " overlap");
			walls_.push_back({owners[0], owners[1], facet});
			continue;
		}
		boundary_.emplace_back(owners[0], facet);
		if (side(owners[0]) < 0)
			normal = -normal;
		for (auto const &v : rays_)
			if (pairing(normal, v) < 0)
				throw InvalidInput("fan support is not convex near facet " + ray_list(*this, facet));
	}
	std::sort(walls_.begin(), walls_.end(), [](Wall const &x, Wall const &y) {
		return std::tie(x.a, x.b) < std::tie(y.a, y.b);
	});

	// With matched facets and locally convex boundary, covering multiplicity is
	// constant on the support; check it is 1 at the barycenter of the first cone.
	RatVector p(n_, 0);
	for (auto j : cones_[0])
		for (std::size_t i = 0; i < n_; ++i)
			p[i] += rays_[j][i];
	std::size_t cover = 0;
	for (std::size_t s = 0; s < cones_.size(); ++s)
	{
		auto c = cone_coordinates(s, p);
		if (std::all_of(c.begin(), c.end(), [](Rational const &x) { return x >= 0; }))
			++cover;
	}
	if (cover != 1)
		throw InvalidInput("maximal cones overlap: a generic point lies in " + std::to_string(cover) + " cones");
}

bool Fan::is_smooth() const
{
	for (auto const &c : cones_)
		if (abs(determinant(ray_matrix(rays_, c))) != 1)
			return false;
	return true;
}

bool Fan::is_face(RayMask m) const
{
	return std::any_of(masks_.begin(), masks_.end(), [m](RayMask c) { return (m & ~c) == 0; });
}

std::vector<RayMask> Fan::minimal_non_faces() const
{
	std::set<RayMask> faces;
	for (RayMask c : masks_)
		for (RayMask sub = c;; sub = (sub - 1) & c)
		{
			faces.insert(sub);
			if (sub == 0)
				break;
		}
	std::set<RayMask> out;
	for (RayMask f : faces)
	{
		std::size_t top = f == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(f));
		for (std::size_t j = top; j < rays_.size(); ++j)
		{
			RayMask m = f | (RayMask{1} << j);
			if (faces.contains(m))
				continue;
			bool minimal = true;
			for (auto i : mask_indices(m))
				minimal = minimal && faces.contains(m & ~(RayMask{1} << i));
			if (minimal)
				out.insert(m);
		}
	}
	return {out.begin(), out.end()};
}

std::vector<Weight> Fan::dual_basis(std::size_t s) const
{
	RatMatrix b = to_rational(ray_matrix(rays_, cones_[s]));
	std::vector<Weight> out;
	for (std::size_t k = 0; k < n_; ++k)
	{
		RatVector e(n_, 0);
		e[k] = 1;
		auto u = solve(b, e);
		if (!u)
			throw InvalidInput("dependent rays in a maximal cone");
		IntVector iu;
		for (auto const &x : *u)
		{
			if (x.get_den() != 1)
				throw InvalidInput("maximal cone " + ray_list(*this, masks_[s]) + " is not unimodular");
			iu.emplace_back(x.get_num());
		}
		out.push_back(to_weight(iu));
	}
	return out;
}

RatVector Fan::cone_coordinates(std::size_t s, RatVector const &x) const
{
	RatMatrix bt(n_, RatVector(n_));
	for (std::size_t k = 0; k < n_; ++k)
		for (std::size_t i = 0; i < n_; ++i)
			bt[i][k] = rays_[cones_[s][k]][i];
	auto c = solve(bt, x);
	if (!c)
		throw InvalidInput("dependent rays in a maximal cone");
	return *c;
}

Fan positive_chamber(RootSystem const &rs)
{
	std::size_t const r = rs.rank(), c = rs.central_rank(), n = rs.dim();
	std::vector<Weight> rays;
	for (std::size_t i = 0; i < r; ++i)
	{
		Weight e(n);
		e[i] = 1;
		rays.push_back(e);
	}
	for (std::size_t k = 0; k < c; ++k)
		for (int sign : {1, -1})
		{
			Weight e(n);
			e[r + k] = sign;
			rays.push_back(e);
		}
	std::vector<std::vector<std::size_t>> cones;
	for (std::size_t pattern = 0; pattern < (std::size_t{1} << c); ++pattern)
	{
		std::vector<std::size_t> cone;
		for (std::size_t i = 0; i < r; ++i)
			cone.push_back(i);
		for (std::size_t k = 0; k < c; ++k)
			cone.push_back(r + 2 * k + ((pattern >> k) & 1u));
		cones.push_back(cone);
	}
	return Fan(std::move(rays), std::move(cones));
}

Fan weyl_translates(RootSystem const &rs, Fan const &positive)
{
	std::map<Weight, std::size_t> index;
	std::vector<Weight> rays;
	std::set<std::vector<std::size_t>> seen;
	std::vector<std::vector<std::size_t>> cones;
	for (auto const &w : rs.weyl())
		for (auto const &c : positive.cones())
		{
			std::vector<std::size_t> cone;
			for (auto j : c)
			{
				Weight x = w.act_coweight(positive.ray(j));
				auto [it, inserted] = index.try_emplace(x, rays.size());
				if (inserted)
					rays.push_back(x);
				cone.push_back(it->second);
			}
			std::sort(cone.begin(), cone.end());
			if (seen.insert(cone).second)
				cones.push_back(cone);
		}
	return Fan(std::move(rays), std::move(cones));
}

SubdivisionReport validate_positive_subdivision(RootSystem const &rs, Fan const &positive)
{
	SubdivisionReport rep;
	rep.maximal_cones = positive.cone_count();
	auto fail = [&](std::string s) {
		rep.valid = false;
		rep.failures.push_back(std::move(s));
	};
	if (positive.dim() != rs.dim())
	{
		fail("fan dimension " + std::to_string(positive.dim()) + " differs from the rank " +
		     std::to_string(rs.dim()));
		return rep;
	}
	for (auto const &v : positive.rays())
		for (std::size_t i = 0; i < rs.rank(); ++i)
			if (v[i] < 0)
				fail("ray " + v.to_string() + " lies outside the positive chamber");
	for (std::size_t s = 0; s < positive.cone_count(); ++s)
		if (abs(determinant(ray_matrix(positive.rays(), positive.cones()[s]))) != 1)
			fail("maximal cone " + ray_list(positive, positive.cone_mask(s)) + " is not unimodular");
	for (auto const &[s, facet] : positive.boundary_facets())
	{
		bool in_wall = false;
		for (std::size_t i = 0; i < rs.rank() && !in_wall; ++i)
		{
			bool all = true;
			for (auto j : mask_indices(facet))
				all = all && positive.ray(j)[i] == 0;
			in_wall = all;
		}
		if (!in_wall)
			fail("boundary facet " + ray_list(positive, facet) + " of cone " +
			     ray_list(positive, positive.cone_mask(s)) + " is not in a chamber wall");
	}
	if (!rep.valid)
		return rep;
	try
	{
		Fan full = weyl_translates(rs, positive);
		if (!full.is_complete())
			fail("W-translates of the subdivision do not form a complete fan");
	}
	catch (InvalidInput const &e)
	{
		fail(std::string("W-translates do not glue: ") + e.what());
	}
	return rep;
}

Weight wall_character(Fan const &f, std::size_t sigma, std::size_t sigma_prime)
{
	if (sigma >= f.cone_count() || sigma_prime >= f.cone_count())
		throw InvalidInput("wall_character: cone index out of range");
	RayMask facet = f.cone_mask(sigma) & f.cone_mask(sigma_prime);
	if (sigma == sigma_prime || static_cast<std::size_t>(__builtin_popcountll(facet)) + 1 != f.dim())
		throw InvalidInput("wall_character: cones are not adjacent");
	Weight chi = facet_normal(f.rays(), mask_indices(facet), f.dim());
	std::size_t opp = mask_indices(f.cone_mask(sigma) & ~facet)[0];
	if (pairing(chi, f.ray(opp)) < 0)
		chi = -chi;
	return chi;
}

bool facet_orthogonal_to_root(Fan const &f, std::size_t sigma, std::size_t i)
{
	std::size_t zeros = 0;
	for (auto j : f.cones()[sigma])
		if (f.ray(j)[i] == 0)
			++zeros;
	return zeros + 1 >= f.dim();
}

RatVector linear_form(Fan const &f, std::vector<Integer> const &psi, std::size_t sigma)
{
	if (psi.size() != f.ray_count())
		throw InvalidInput("psi has " + std::to_string(psi.size()) + " values for " +
		                   std::to_string(f.ray_count()) + " rays");
	auto const &c = f.cones()[sigma];
	RatMatrix b = to_rational(ray_matrix(f.rays(), c));
	RatVector rhs;
	for (auto j : c)
		rhs.emplace_back(psi[j]);
	return *solve(b, rhs);
}

Weight integral_linear_form(Fan const &f, std::vector<Integer> const &psi, std::size_t sigma)
{
	IntVector h;
	for (auto const &x : linear_form(f, psi, sigma))
	{
		if (x.get_den() != 1)
			throw InvalidInput("piecewise linear function is not integral on a maximal cone");
		h.emplace_back(x.get_num());
	}
	return to_weight(h);
}

namespace {

Rational rat_pairing(RatVector const &h, Weight const &v)
{
	Rational s = 0;
	for (std::size_t i = 0; i < v.dim(); ++i)
		s += h[i] * v[i];
	return s;
}

} // namespace

AmpleReport check_ample(Fan const &f, std::vector<Integer> const &psi)
{
	AmpleReport rep;
	for (std::size_t s = 0; s < f.cone_count(); ++s)
	{
		RatVector h = linear_form(f, psi, s);
		for (std::size_t j = 0; j < f.ray_count(); ++j)
		{
			Rational val = rat_pairing(h, f.ray(j));
			if (f.cone_contains(s, j))
				continue;
			if (val < psi[j])
			{
				rep.ample = false;
				rep.failures.push_back("h on cone " + ray_list(f, f.cone_mask(s)) + " is below psi at ray " +
				                       f.ray(j).to_string());
			}
			else if (val == psi[j])
			{
				rep.ample = false;
				rep.failures.push_back("h on cone " + ray_list(f, f.cone_mask(s)) + " is not strictly above psi at ray " +
				                       f.ray(j).to_string());
			}
		}
	}
	return rep;
}

MomentOrder moment_order(Fan const &f, std::vector<Integer> const &psi, Weight const &v)
{
	if (v.dim() != f.dim())
		throw InvalidInput("direction has the wrong dimension");
	auto amp = check_ample(f, psi);
	if (!amp.ample)
		throw InvalidInput("psi is not ample: " + amp.failures.front());
	std::size_t const m = f.cone_count();
	RatVector vr(v.dim());
	for (std::size_t i = 0; i < v.dim(); ++i)
		vr[i] = v[i];

	std::vector<std::pair<Rational, std::size_t>> mu;
	bool in_support = false;
	std::vector<RayMask> tau(m, 0);
	for (std::size_t s = 0; s < m; ++s)
	{
		mu.emplace_back(rat_pairing(linear_form(f, psi, s), v), s);
		auto c = f.cone_coordinates(s, vr);
		bool inside = true;
		for (std::size_t k = 0; k < c.size(); ++k)
		{
			if (c[k] == 0)
				throw InvalidInput("direction " + v.to_string() + " is not generic: it lies on a hyperplane spanned by a facet of cone " +
				                   ray_list(f, f.cone_mask(s)));
			if (c[k] < 0)
			{
				tau[s] |= RayMask{1} << f.cones()[s][k];
				inside = false;
			}
		}
		in_support = in_support || inside;
	}
	if (!in_support)
		throw InvalidInput("direction " + v.to_string() + " lies outside the support of the fan");
	std::sort(mu.begin(), mu.end());
	for (std::size_t i = 1; i < m; ++i)
		if (mu[i].first == mu[i - 1].first)
			throw InvalidInput("direction " + v.to_string() + " is not generic: two fixed points have equal moment");

	MomentOrder out;
	for (auto const &[val, s] : mu)
	{
		out.order.push_back(s);
		out.moments.push_back(val);
		out.tau.push_back(tau[s]);
		out.cell_dims.push_back(f.dim() - static_cast<std::size_t>(__builtin_popcountll(tau[s])));
	}
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			if ((out.tau[i] & ~f.cone_mask(out.order[j])) == 0 && i > j)
			{
				out.star_property = false;
				out.failures.push_back("tau_" + std::to_string(i + 1) + " lies in sigma_" + std::to_string(j + 1));
			}
	return out;
}

namespace {

// All integer vectors in [-bound, bound]^n, ordered by L1 norm then lexicographically.
std::vector<std::vector<int>> small_vectors(std::size_t n, int bound)
{
	std::vector<std::vector<int>> out;
	std::vector<int> x(n, -bound);
	for (;;)
	{
		out.push_back(x);
		std::size_t i = 0;
		while (i < n && x[i] == bound)
			x[i++] = -bound;
		if (i == n)
			break;
		++x[i];
	}
	auto norm = [](std::vector<int> const &a) {
		int s = 0;
		for (int t : a)
			s += std::abs(t);
		return s;
	};
	std::stable_sort(out.begin(), out.end(), [&](auto const &a, auto const &b) {
		int na = norm(a), nb = norm(b);
		return na != nb ? na < nb : a < b;
	});
	return out;
}

} // namespace

std::optional<std::vector<Integer>> find_ample_psi(Fan const &f, int bound)
{
	if (f.ray_count() > 10)
		throw InvalidInput("ample search supports at most 10 rays");
	for (auto const &x : small_vectors(f.ray_count(), bound))
	{
		std::vector<Integer> psi(x.begin(), x.end());
		if (check_ample(f, psi).ample)
			return psi;
	}
	return std::nullopt;
}

std::optional<Weight> find_generic_direction(Fan const &f, std::vector<Integer> const &psi, int bound)
{
	for (auto const &x : small_vectors(f.dim(), bound))
	{
		Weight v = Weight::from(std::span<const int>(x));
		try
		{
			moment_order(f, psi, v);
			return v;
		}
		catch (InvalidInput const &)
		{
		}
	}
	return std::nullopt;
}

GitInvariants git_invariants(Fan const &f)
{
	std::size_t const d = f.ray_count(), n = f.dim();
	std::vector<std::size_t> all(d);
	for (std::size_t j = 0; j < d; ++j)
		all[j] = j;
	IntMatrix q = ray_matrix(f.rays(), all);
	if (rank(to_rational(q)) != n)
		throw InvalidInput("rays do not span N");
	SmithForm s = smith_normal_form(q);
	GitInvariants out;
	std::vector<std::string> torsion;
	for (std::size_t i = 0; i < n; ++i)
	{
		out.smith_diagonal.push_back(s.d[i][i]);
		if (s.d[i][i] != 1)
			torsion.push_back(s.d[i][i].get_str());
	}
	if (!torsion.empty())
	{
		std::string t;
		for (auto const &x : torsion)
			t += (t.empty() ? "" : ", ") + x;
		throw VerificationFailure("cokernel of Q has torsion with invariant factors " + t);
	}
	out.pic_rank = d - n;
	IntMatrix a(s.u.begin() + static_cast<long>(n), s.u.end());
	for (auto &row : a)
	{
		auto nz = std::find_if(row.begin(), row.end(), [](Integer const &x) { return x != 0; });
		if (nz != row.end() && *nz < 0)
			for (auto &x : row)
				x = -x;
	}
	for (std::size_t j = 0; j < d; ++j)
	{
		IntVector col;
		for (auto const &row : a)
			col.push_back(row[j]);
		out.gale_duals.push_back(std::move(col));
	}
	IntMatrix aq = multiply(a, q);
	bool zero = true;
	for (auto const &row : aq)
		for (auto const &x : row)
			zero = zero && x == 0;
	out.exact = zero && abs(determinant(s.u)) == 1;
	return out;
}

} // namespace regk
