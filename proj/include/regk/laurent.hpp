#pragma once

#include "regk/common.hpp"
#include "regk/weight.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regk {

/// Finitely supported map Key -> nonzero Integer, i.e. an element of the
/// group algebra Z[L] of a lattice L. Terms are kept sorted ascending by the
/// monomial order of Key with no zero coefficients, so equality is
/// structural.
template <class Key>
class SparsePoly {
public:
	using Term = std::pair<Key, Integer>;

	SparsePoly() = default;

	static SparsePoly monomial(Key k, Integer c = 1)
	{
		SparsePoly p;
		if (c != 0)
			p.terms_.emplace_back(std::move(k), std::move(c));
		return p;
	}

	/// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
	static SparsePoly from_terms(std::vector<Term> terms)
	{
		SparsePoly p;
		p.terms_ = std::move(terms);
		p.canonicalize();
		return p;
	}

	std::vector<Term> const &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	Term const &leading() const { return terms_.back(); }

	Integer coefficient(Key const &k) const
	{
		auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
		                           [](Term const &t, Key const &key) { return t.first < key; });
		if (it != terms_.end() && it->first == k)
			return it->second;
		return 0;
	}

	/// Sum of coefficients (the augmentation / dimension of a virtual character).
	Integer coefficient_sum() const
	{
		Integer s = 0;
		for (auto const &[k, c] : terms_)
			s += c;
		return s;
	}

	SparsePoly &operator+=(SparsePoly const &o) { return *this = merge(*this, o, 1); }
	SparsePoly &operator-=(SparsePoly const &o) { return *this = merge(*this, o, -1); }
	SparsePoly &operator*=(SparsePoly const &o) { return *this = *this * o; }

	friend SparsePoly operator+(SparsePoly const &a, SparsePoly const &b) { return merge(a, b, 1); }
	friend SparsePoly operator-(SparsePoly const &a, SparsePoly const &b) { return merge(a, b, -1); }
	friend SparsePoly operator-(SparsePoly a)
	{
		for (auto &t : a.terms_)
			t.second = -t.second;
		return a;
	}

	friend SparsePoly operator*(SparsePoly const &a, SparsePoly const &b)
	{
		if (a.is_zero() || b.is_zero())
			return {};
		std::vector<Term> out;
		out.reserve(a.size() * b.size());
		for (auto const &[ka, ca] : a.terms_)
			for (auto const &[kb, cb] : b.terms_)
				out.emplace_back(ka + kb, ca * cb);
		return from_terms(std::move(out));
	}

	friend SparsePoly operator*(Integer const &k, SparsePoly a)
	{
		if (k == 0)
			return {};
		for (auto &t : a.terms_)
			t.second *= k;
		return a;
	}

	/// Multiplication by the monomial e^shift.
	SparsePoly shifted(Key const &shift) const
	{
		SparsePoly p = *this;
		for (auto &t : p.terms_)
			t.first += shift;
		return p; // translation preserves the order
	}

	/// Applies a lattice map to every exponent and re-canonicalizes.
	template <class F>
	auto map_keys(F &&f) const
	{
		using K2 = std::decay_t<decltype(f(std::declval<Key const &>()))>;
		std::vector<typename SparsePoly<K2>::Term> out;
		out.reserve(terms_.size());
		for (auto const &[k, c] : terms_)
			out.emplace_back(f(k), c);
		return SparsePoly<K2>::from_terms(std::move(out));
	}

	friend bool operator==(SparsePoly const &, SparsePoly const &) = default;

private:
	std::vector<Term> terms_;

	void canonicalize()
	{
		std::sort(terms_.begin(), terms_.end(),
		          [](Term const &x, Term const &y) { return x.first < y.first; });
		std::vector<Term> out;
		out.reserve(terms_.size());
		for (auto &t : terms_)
		{
			if (!out.empty() && out.back().first == t.first)
				out.back().second += t.second;
			else
			{
				if (!out.empty() && out.back().second == 0)
					out.pop_back();
				out.push_back(std::move(t));
			}
		}
		if (!out.empty() && out.back().second == 0)
			out.pop_back();
		terms_ = std::move(out);
	}

	static SparsePoly merge(SparsePoly const &a, SparsePoly const &b, int sign)
	{
		SparsePoly r;
		r.terms_.reserve(a.size() + b.size());
		auto i = a.terms_.begin(), j = b.terms_.begin();
		while (i != a.terms_.end() || j != b.terms_.end())
		{
			if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first))
				r.terms_.push_back(*i++);
			else if (i == a.terms_.end() || j->first < i->first)
			{
				r.terms_.emplace_back(j->first, sign * j->second);
				++j;
			}
			else
			{
				Integer c = sign > 0 ? Integer(i->second + j->second) : Integer(i->second - j->second);
				if (c != 0)
					r.terms_.emplace_back(i->first, std::move(c));
				++i;
				++j;
			}
		}
		return r;
	}
};

/// Element of R(T) = Z[X*(T)].
using LaurentElement = SparsePoly<Weight>;
/// Element of R(T)(u) (x) R(T)(v); ring operations never mix the two factors.
using TensorElement = SparsePoly<WeightPair>;

/// e^lambda.
LaurentElement exp_weight(Weight const &lambda);
/// The constant c in a lattice of the given dimension.
LaurentElement constant(Integer c, std::size_t dim);
/// 1 - e^lambda.
LaurentElement one_minus_exp(Weight const &lambda);
/// f^k for k >= 0.
LaurentElement power(LaurentElement const &f, unsigned k);

/// Exact quotient f/g in the Laurent ring, or nullopt when g does not divide f.
/// Long division under the graded-lex order; the quotient is confined to the
/// coordinate box [min f - min g, max f - max g] which guarantees termination.
/// Throws InvalidInput if g = 0.
std::optional<LaurentElement> divide_exact(LaurentElement const &f, LaurentElement const &g);

/// Augmentation: sum of coefficients.
Integer augment(LaurentElement const &f);

// Tensor ring helpers. The "u" factor is the first one.
TensorElement tensor(LaurentElement const &a, LaurentElement const &b);
TensorElement tensor_mul(TensorElement const &a, TensorElement const &b);
/// Multiplies by a(u) (x) 1.
TensorElement mul_u(TensorElement const &t, LaurentElement const &a);
/// Exact division by a(u) (x) 1, or nullopt.
std::optional<TensorElement> divide_u(TensorElement const &t, LaurentElement const &a);
/// Whether (1 - e^{-mu}) (x) 1 divides t.
bool tensor_divisible_by_u_binomial(TensorElement const &t, Weight const &mu);
/// Groups t by v-exponent: t = sum_v g_v(u) (x) e^v.
std::vector<std::pair<Weight, LaurentElement>> split_by_v(TensorElement const &t);
/// Sets every v-variable to 1 (augmentation of the second factor).
LaurentElement collapse_v(TensorElement const &t);

std::string to_string(LaurentElement const &f);

} // namespace regk
