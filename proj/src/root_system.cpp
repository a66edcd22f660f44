#include "regk/root_system.hpp"

#include "regk/linalg.hpp"

#include <deque>
#include <set>

namespace regk {

std::vector<std::size_t> RootSubset::indices() const
{
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < 32; ++i)
		if (contains(i))
			out.push_back(i);
	return out;
}

std::vector<RootSubset> all_subsets(std::size_t r)
{
	std::vector<RootSubset> out;
	for (std::uint32_t b = 0; b < (1u << r); ++b)
		out.push_back({b});
	return out;
}

namespace {

std::vector<int> matmul(std::vector<int> const &a, std::vector<int> const &b, std::size_t r)
{
	std::vector<int> c(r * r, 0);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t k = 0; k < r; ++k)
			if (a[i * r + k])
				for (std::size_t j = 0; j < r; ++j)
					c[i * r + j] += a[i * r + k] * b[k * r + j];
	return c;
}

Weight apply(std::vector<int> const &m, std::size_t r, Weight const &x)
{
	if (x.dim() < r)
		throw InvalidInput("Weyl action: lattice dimension " + std::to_string(x.dim()) + " below rank " +
		                   std::to_string(r));
	Weight y = x;
	for (std::size_t i = 0; i < r; ++i)
	{
		long long s = 0;
		for (std::size_t j = 0; j < r; ++j)
			s += static_cast<long long>(m[i * r + j]) * x[j];
		y[i] = static_cast<int>(s);
	}
	return y;
}

} // namespace

WeylElement::WeylElement(std::vector<int> word, std::vector<int> on_weights, std::vector<int> on_coweights,
                         std::size_t r)
    : word_(std::move(word)), mw_(std::move(on_weights)), mn_(std::move(on_coweights)), r_(r)
{
}

Weight WeylElement::act(Weight const &lambda) const { return apply(mw_, r_, lambda); }

Weight WeylElement::act_coweight(Weight const &x) const { return apply(mn_, r_, x); }

WeylElement WeylElement::operator*(WeylElement const &o) const
{
	if (o.r_ != r_)
		throw InvalidInput("Weyl product: rank mismatch");
	std::vector<int> w = word_;
	w.insert(w.end(), o.word_.begin(), o.word_.end());
	return WeylElement(std::move(w), matmul(mw_, o.mw_, r_), matmul(mn_, o.mn_, r_), r_);
}

WeylElement WeylElement::inverse() const
{
	// W is finite, so w^{-1} = w^{k-1} where k is the order of w.
	if (is_identity())
		return *this;
	WeylElement p = *this;
	std::vector<int> prev_w, prev_n;
	while (!p.is_identity())
	{
		prev_w = p.mw_;
		prev_n = p.mn_;
		p.mw_ = matmul(p.mw_, mw_, r_);
		p.mn_ = matmul(p.mn_, mn_, r_);
	}
	return WeylElement(std::vector<int>(word_.rbegin(), word_.rend()), std::move(prev_w), std::move(prev_n), r_);
}

bool WeylElement::is_identity() const
{
	for (std::size_t i = 0; i < r_; ++i)
		for (std::size_t j = 0; j < r_; ++j)
			if (mw_[i * r_ + j] != (i == j ? 1 : 0))
				return false;
	return true;
}

std::string WeylElement::name() const
{
	if (word_.empty())
		return "e";
	std::string s;
	for (int i : word_)
		s += "s" + std::to_string(i + 1);
	return s;
}

RootSystem::RootSystem(std::vector<std::vector<int>> cartan, std::size_t central_rank, std::string name,
                       std::size_t weyl_bound)
    : name_(std::move(name)), r_(cartan.size()), c_(central_rank), cartan_(std::move(cartan))
{
	if (r_ + c_ == 0)
		throw InvalidInput("root system has rank 0 and no central torus");
	if (r_ + c_ > kMaxWeightDim)
		throw InvalidInput("total rank exceeds " + std::to_string(kMaxWeightDim));
	validate();
	for (std::size_t i = 0; i < r_; ++i)
	{
		std::vector<int> mw(r_ * r_, 0), mn(r_ * r_, 0);
		for (std::size_t j = 0; j < r_; ++j)
		{
			mw[j * r_ + j] = 1;
			mn[j * r_ + j] = 1;
			mw[j * r_ + i] -= cartan_[j][i];
			mn[j * r_ + i] -= cartan_[i][j];
		}
		simple_.emplace_back(std::vector<int>{static_cast<int>(i)}, std::move(mw), std::move(mn), r_);
	}
	build_roots();
	build_weyl(weyl_bound);
}

RootSystem RootSystem::builtin(std::string const &type, std::size_t central_rank)
{
	if (type == "A1")
		return RootSystem({{2}}, central_rank, type);
	if (type == "A2")
		return RootSystem({{2, -1}, {-1, 2}}, central_rank, type);
	if (type == "A1xA1")
		return RootSystem({{2, 0}, {0, 2}}, central_rank, type);
	if (type == "B2")
		return RootSystem({{2, -1}, {-2, 2}}, central_rank, type);
	throw InvalidInput("unknown root system type '" + type + "' (built-ins: A1, A2, A1xA1, B2)");
}

void RootSystem::validate() const
{
	for (auto const &row : cartan_)
		if (row.size() != r_)
			throw InvalidInput("Cartan matrix is not square");
	for (std::size_t i = 0; i < r_; ++i)
		for (std::size_t j = 0; j < r_; ++j)
		{
			if (i == j && cartan_[i][j] != 2)
				throw InvalidInput("Cartan matrix diagonal entry is not 2");
			if (i != j && cartan_[i][j] > 0)
				throw InvalidInput("Cartan matrix has a positive off-diagonal entry");
			if (i != j && (cartan_[i][j] == 0) != (cartan_[j][i] == 0))
				throw InvalidInput("Cartan matrix zero pattern is not symmetric");
		}
	// Symmetrize: d_i a_ij = d_j a_ji, propagated along the Dynkin graph.
	std::vector<Rational> d(r_, 0);
	for (std::size_t s = 0; s < r_; ++s)
	{
		if (d[s] != 0)
			continue;
		d[s] = 1;
		std::deque<std::size_t> q{s};
		while (!q.empty())
		{
			std::size_t i = q.front();
			q.pop_front();
			for (std::size_t j = 0; j < r_; ++j)
				if (j != i && cartan_[i][j] != 0 && d[j] == 0)
				{
					d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
					q.push_back(j);
				}
		}
	}
	for (std::size_t i = 0; i < r_; ++i)
		for (std::size_t j = 0; j < r_; ++j)
			if (d[i] * cartan_[i][j] != d[j] * cartan_[j][i])
				throw InvalidInput("Cartan matrix is not symmetrizable");
	for (std::size_t k = 1; k <= r_; ++k)
	{
		RatMatrix b(k, RatVector(k));
		for (std::size_t i = 0; i < k; ++i)
			for (std::size_t j = 0; j < k; ++j)
				b[i][j] = d[i] * cartan_[i][j];
		if (determinant(b) <= 0)
			throw InvalidInput("Cartan matrix is not of finite type");
	}
}

Weight RootSystem::simple_root(std::size_t i) const
{
	Weight a(dim());
	for (std::size_t j = 0; j < r_; ++j)
		a[j] = cartan_[j][i];
	return a;
}

Weight RootSystem::fundamental_weight(std::size_t i) const
{
	Weight w(dim());
	w[i] = 1;
	return w;
}

Weight RootSystem::root_lattice_to_weight(Weight const &m) const
{
	if (m.dim() != dim())
		throw InvalidInput("character dimension mismatch");
	Weight w(dim());
	for (std::size_t j = 0; j < r_; ++j)
	{
		long long s = 0;
		for (std::size_t i = 0; i < r_; ++i)
			s += static_cast<long long>(cartan_[j][i]) * m[i];
		w[j] = static_cast<int>(s);
	}
	for (std::size_t k = r_; k < dim(); ++k)
		w[k] = m[k];
	return w;
}

void RootSystem::build_roots()
{
	// Orbit of the simple roots in simple-root coordinates:
	// s_i(a_k) = a_k - cartan[i][k] a_i.
	std::set<std::vector<int>> seen;
	std::deque<std::vector<int>> q;
	for (std::size_t i = 0; i < r_; ++i)
	{
		std::vector<int> e(r_, 0);
		e[i] = 1;
		if (seen.insert(e).second)
			q.push_back(e);
	}
	while (!q.empty())
	{
		auto m = q.front();
		q.pop_front();
		for (std::size_t i = 0; i < r_; ++i)
		{
			auto n = m;
			for (std::size_t k = 0; k < r_; ++k)
				n[i] -= cartan_[i][k] * m[k];
			if (seen.insert(n).second)
			{
				if (seen.size() > 100000)
					throw InvalidInput("root system is not finite");
				q.push_back(n);
			}
		}
	}
	for (auto const &m : seen)
	{
		bool nonneg = true, nonpos = true;
		for (int x : m)
		{
			nonneg = nonneg && x >= 0;
			nonpos = nonpos && x <= 0;
		}
		if (!nonneg && !nonpos)
			throw InternalInconsistency("root with mixed-sign coordinates");
		Weight ms(dim());
		for (std::size_t i = 0; i < r_; ++i)
			ms[i] = m[i];
		Weight lam = root_lattice_to_weight(ms);
		root_sign_[std::vector<int>(lam.coords().begin(), lam.coords().begin() + r_)] = nonneg ? 1 : -1;
		if (nonneg)
		{
			pos_.push_back(lam);
			pos_simple_.push_back(ms);
		}
	}
	if (pos_.size() * 2 != seen.size())
		throw InternalInconsistency("root system is not symmetric under negation");
}

int RootSystem::root_sign(Weight const &lambda) const
{
	auto it = root_sign_.find(std::vector<int>(lambda.coords().begin(), lambda.coords().begin() + r_));
	if (it == root_sign_.end())
		return 0;
	for (std::size_t k = r_; k < lambda.dim(); ++k)
		if (lambda[k] != 0)
			return 0;
	return it->second;
}

void RootSystem::build_weyl(std::size_t bound)
{
	std::vector<int> id(r_ * r_, 0);
	for (std::size_t i = 0; i < r_; ++i)
		id[i * r_ + i] = 1;
	weyl_.emplace_back(std::vector<int>{}, id, id, r_);
	index_[id] = 0;
	for (std::size_t head = 0; head < weyl_.size(); ++head)
		for (std::size_t i = 0; i < r_; ++i)
		{
			WeylElement w = weyl_[head] * simple_[i];
			if (index_.contains(w.weight_matrix()))
				continue;
			if (weyl_.size() >= bound)
				throw InvalidInput("Weyl group exceeds the enumeration bound " + std::to_string(bound));
			index_[w.weight_matrix()] = weyl_.size();
			weyl_.push_back(std::move(w));
		}
	c_of_.resize(weyl_.size());
	for (std::size_t w = 0; w < weyl_.size(); ++w)
	{
		RootSubset desc;
		for (std::size_t i = 0; i < r_; ++i)
			if (root_sign(weyl_[w].act(simple_root(i))) < 0)
				desc.bits |= 1u << i;
		c_of_[w] = desc;
	}
}

std::size_t RootSystem::index_of(WeylElement const &w) const
{
	auto it = index_.find(w.weight_matrix());
	if (it == index_.end())
		throw InvalidInput("element is not in the Weyl group of " + name_);
	return it->second;
}

std::size_t RootSystem::longest_element() const { return weyl_.size() - 1; }

std::size_t RootSystem::inversion_count(WeylElement const &w) const
{
	std::size_t n = 0;
	for (auto const &a : pos_)
		if (root_sign(w.act(a)) < 0)
			++n;
	return n;
}

std::vector<std::size_t> RootSystem::minimal_coset_reps(RootSubset I) const
{
	std::vector<std::size_t> out;
	for (std::size_t w = 0; w < weyl_.size(); ++w)
	{
		bool ok = true;
		for (std::size_t i : I.indices())
			ok = ok && root_sign(weyl_[w].act(simple_root(i))) > 0;
		if (ok)
			out.push_back(w);
	}
	return out;
}

std::vector<std::size_t> RootSystem::parabolic_elements(RootSubset I) const
{
	std::vector<std::size_t> out{0};
	std::set<std::size_t> seen{0};
	for (std::size_t head = 0; head < out.size(); ++head)
		for (std::size_t i : I.indices())
		{
			std::size_t w = index_of(weyl_[out[head]] * simple_[i]);
			if (seen.insert(w).second)
				out.push_back(w);
		}
	std::sort(out.begin(), out.end());
	return out;
}

std::map<RootSubset, std::vector<std::size_t>> RootSystem::c_sets() const
{
	RootSubset const delta = RootSubset::all(r_);
	std::map<RootSubset, std::vector<std::size_t>> out;
	for (RootSubset I : all_subsets(r_))
	{
		auto reps = minimal_coset_reps(delta - I);
		std::set<std::size_t> removed;
		for (RootSubset J : all_subsets(r_))
			if (J.subset_of(I) && J != I)
				for (std::size_t w : minimal_coset_reps(delta - J))
					removed.insert(w);
		std::vector<std::size_t> c;
		for (std::size_t w : reps)
			if (!removed.contains(w))
				c.push_back(w);
		out[I] = std::move(c);
	}
	return out;
}

LaurentElement weyl_act(WeylElement const &w, LaurentElement const &f)
{
	return f.map_keys([&](Weight const &k) { return w.act(k); });
}

bool is_invariant(LaurentElement const &f, std::vector<WeylElement> const &gens)
{
	for (auto const &s : gens)
		if (weyl_act(s, f) != f)
			return false;
	return true;
}

TensorElement tensor_act_right(WeylElement const &w, TensorElement const &t)
{
	return t.map_keys([&](WeightPair const &k) { return WeightPair{k.u, w.act(k.v)}; });
}

} // namespace regk
