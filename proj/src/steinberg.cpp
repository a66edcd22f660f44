#include "regk/steinberg.hpp"

#include <set>

namespace regk {

LaurentElement p_element(RootSystem const &rs, std::size_t v)
{
	WeylElement const vinv = rs.weyl()[v].inverse();
	Weight lam(rs.dim());
	for (std::size_t i = 0; i < rs.rank(); ++i)
		if (rs.root_sign(vinv.act(rs.simple_root(i))) < 0)
			lam += rs.fundamental_weight(i);
	return exp_weight(lam);
}

LaurentElement steinberg_element(RootSystem const &rs, std::size_t v, RootSubset I)
{
	auto reps = rs.minimal_coset_reps(I);
	if (!std::binary_search(reps.begin(), reps.end(), v))
		throw InvalidInput("steinberg_element: " + rs.weyl()[v].name() + " is not a minimal coset representative");
	// p_v is a monomial e^lam; its W_I-orbit is the orbit of v^{-1}(lam).
	Weight start = rs.weyl()[v].inverse().act(p_element(rs, v).leading().first);
	std::set<Weight> orbit{start};
	std::vector<Weight> queue{start};
	for (std::size_t head = 0; head < queue.size(); ++head)
		for (std::size_t i : I.indices())
		{
			Weight next = rs.simple_reflection(i).act(queue[head]);
			if (orbit.insert(next).second)
				queue.push_back(next);
		}
	std::vector<LaurentElement::Term> terms;
	for (auto const &w : orbit)
		terms.emplace_back(w, 1);
	return LaurentElement::from_terms(std::move(terms));
}

namespace {

LaurentElement exact(LaurentElement const &f, LaurentElement const &g, char const *what)
{
	auto q = divide_exact(f, g);
	if (!q)
		throw InternalInconsistency(std::string("inexact division in ") + what);
	return *q;
}

} // namespace

SteinbergBasis::SteinbergBasis(std::shared_ptr<RootSystem const> rs) : rs_(std::move(rs))
{
	RootSystem const &R = *rs_;
	std::size_t const n = R.weyl_order();
	RootSubset const delta = RootSubset::all(R.rank());
	f_.reserve(n);
	for (std::size_t w = 0; w < n; ++w)
		f_.push_back(steinberg_element(R, w, delta - R.c_set_of(w)));

	m_.assign(n, std::vector<LaurentElement>(n));
	for (std::size_t u = 0; u < n; ++u)
		for (std::size_t w = 0; w < n; ++w)
			m_[u][w] = weyl_act(R.weyl()[u], f_[w]);

	// Fraction-free Gauss-Jordan on [M | I]. After step k every entry is a
	// minor of the augmented matrix, so the division by the previous pivot is exact.
	std::size_t const dim = R.dim();
	std::vector<std::vector<LaurentElement>> a(n, std::vector<LaurentElement>(2 * n));
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t j = 0; j < n; ++j)
			a[i][j] = m_[i][j];
		a[i][n + i] = constant(1, dim);
	}
	LaurentElement prev = constant(1, dim);
	for (std::size_t k = 0; k < n; ++k)
	{
		std::size_t p = k;
		while (p < n && a[p][k].is_zero())
			++p;
		if (p == n)
			throw InternalInconsistency("Steinberg matrix is singular");
		std::swap(a[p], a[k]);
		for (std::size_t i = 0; i < n; ++i)
		{
			if (i == k)
				continue;
			LaurentElement const aik = a[i][k];
			for (std::size_t j = 0; j < 2 * n; ++j)
			{
				LaurentElement t = a[k][k] * a[i][j] - aik * a[k][j];
				a[i][j] = exact(t, prev, "Steinberg elimination");
			}
		}
		prev = a[k][k];
	}
	det_ = prev;
	adj_.assign(n, std::vector<LaurentElement>(n));
	for (std::size_t i = 0; i < n; ++i)
	{
		if (a[i][i] != det_)
			throw InternalInconsistency("Steinberg elimination did not reach a scalar diagonal");
		for (std::size_t j = 0; j < n; ++j)
			adj_[i][j] = a[i][n + j];
	}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			LaurentElement s;
			for (std::size_t k = 0; k < n; ++k)
				s += m_[i][k] * adj_[k][j];
			if (s != (i == j ? det_ : LaurentElement{}))
				throw InternalInconsistency("Steinberg adjugate check failed");
		}
}

std::vector<LaurentElement> SteinbergBasis::expand(LaurentElement const &g) const
{
	RootSystem const &R = *rs_;
	std::size_t const n = size();
	std::vector<LaurentElement> b(n);
	for (std::size_t u = 0; u < n; ++u)
		b[u] = weyl_act(R.weyl()[u], g);
	std::vector<LaurentElement> c(n);
	LaurentElement recon;
	for (std::size_t w = 0; w < n; ++w)
	{
		LaurentElement s;
		for (std::size_t u = 0; u < n; ++u)
			s += adj_[w][u] * b[u];
		c[w] = exact(s, det_, "Steinberg expansion");
		if (!is_invariant(c[w], R.simple_reflections()))
			throw InternalInconsistency("Steinberg coefficient is not W-invariant");
		recon += c[w] * f_[w];
	}
	if (recon != g)
		throw InternalInconsistency("Steinberg expansion does not reconstruct its input");
	return c;
}

StructureTable structure_constants(SteinbergBasis const &basis, unsigned threads)
{
	RootSystem const &R = basis.root_system();
	std::size_t const n = basis.size();
	auto flat = parallel_map(n * n, threads, [&](std::size_t k) {
		return basis.expand(basis.element(k / n) * basis.element(k % n));
	});
	StructureTable a(n, std::vector<std::vector<LaurentElement>>(n));
	for (std::size_t v = 0; v < n; ++v)
		for (std::size_t vp = 0; vp < n; ++vp)
		{
			auto &row = a[v][vp] = std::move(flat[v * n + vp]);
			RootSubset const allowed = R.c_set_of(v) | R.c_set_of(vp);
			for (std::size_t w = 0; w < n; ++w)
				if (!row[w].is_zero() && !R.c_set_of(w).subset_of(allowed))
					throw InternalInconsistency("structure constant outside the expected support");
		}
	return a;
}

FlagK::FlagK(std::shared_ptr<SteinbergBasis const> basis, StructureTable const &a) : basis_(std::move(basis))
{
	std::size_t const n = basis_->size();
	c_.assign(n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n)));
	for (std::size_t v = 0; v < n; ++v)
		for (std::size_t vp = 0; vp < n; ++vp)
			for (std::size_t w = 0; w < n; ++w)
				c_[v][vp][w] = augment(a[v][vp][w]);
}

FlagKClass FlagK::unit() const { return basis_class(0); }

FlagKClass FlagK::basis_class(std::size_t w) const
{
	FlagKClass x(size(), 0);
	x[w] = 1;
	return x;
}

FlagKClass FlagK::multiply(FlagKClass const &a, FlagKClass const &b) const
{
	std::size_t const n = size();
	FlagKClass out(n, 0);
	for (std::size_t v = 0; v < n; ++v)
	{
		if (a[v] == 0)
			continue;
		for (std::size_t vp = 0; vp < n; ++vp)
		{
			if (b[vp] == 0)
				continue;
			Integer ab = a[v] * b[vp];
			for (std::size_t w = 0; w < n; ++w)
				out[w] += ab * c_[v][vp][w];
		}
	}
	return out;
}

FlagKClass FlagK::characteristic_image(LaurentElement const &g) const
{
	auto c = basis_->expand(g);
	FlagKClass out(c.size());
	for (std::size_t w = 0; w < c.size(); ++w)
		out[w] = augment(c[w]);
	return out;
}

FlagKClass FlagK::lambda_bar(RootSubset I) const
{
	RootSystem const &R = basis_->root_system();
	LaurentElement p = constant(1, R.dim());
	for (std::size_t i : I.indices())
		p *= one_minus_exp(-R.simple_root(i));
	return characteristic_image(p);
}

FlagKClass flag_add(FlagKClass a, FlagKClass const &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

FlagKClass flag_scale(Integer const &k, FlagKClass a)
{
	for (auto &x : a)
		x *= k;
	return a;
}

} // namespace regk
