#include "regk/laurent.hpp"

#include <map>

namespace regk {

LaurentElement exp_weight(Weight const &lambda) { return LaurentElement::monomial(lambda); }

LaurentElement constant(Integer c, std::size_t dim) { return LaurentElement::monomial(Weight(dim), std::move(c)); }

LaurentElement one_minus_exp(Weight const &lambda)
{
	return constant(1, lambda.dim()) - exp_weight(lambda);
}

LaurentElement power(LaurentElement const &f, unsigned k)
{
	if (f.is_zero())
	{
		if (k == 0)
			throw InvalidInput("power: 0^0 has no lattice dimension");
		return {};
	}
	LaurentElement r = constant(1, f.terms().front().first.dim());
	LaurentElement b = f;
	while (k)
	{
		if (k & 1)
			r *= b;
		k >>= 1;
		if (k)
			b *= b;
	}
	return r;
}

std::optional<LaurentElement> divide_exact(LaurentElement const &f, LaurentElement const &g)
{
	if (g.is_zero())
		throw InvalidInput("divide_exact: division by zero");
	if (f.is_zero())
		return LaurentElement{};
	std::size_t const n = g.leading().first.dim();
	if (f.leading().first.dim() != n)
		throw InvalidInput("divide_exact: dimension mismatch");

	std::vector<int> flo(n), fhi(n), glo(n), ghi(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		flo[i] = fhi[i] = f.terms().front().first[i];
		glo[i] = ghi[i] = g.terms().front().first[i];
	}
	for (auto const &[k, c] : f.terms())
		for (std::size_t i = 0; i < n; ++i)
		{
			flo[i] = std::min(flo[i], k[i]);
			fhi[i] = std::max(fhi[i], k[i]);
		}
	for (auto const &[k, c] : g.terms())
		for (std::size_t i = 0; i < n; ++i)
		{
			glo[i] = std::min(glo[i], k[i]);
			ghi[i] = std::max(ghi[i], k[i]);
		}
	std::vector<int> qlo(n), qhi(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		qlo[i] = flo[i] - glo[i];
		qhi[i] = fhi[i] - ghi[i];
		if (qlo[i] > qhi[i])
			return std::nullopt;
	}

	std::map<Weight, Integer> rem;
	for (auto const &[k, c] : f.terms())
		rem.emplace(k, c);
	auto const &[gk, gc] = g.leading();
	std::vector<LaurentElement::Term> quotient;
	while (!rem.empty())
	{
		auto it = std::prev(rem.end());
		Weight qk = it->first - gk;
		for (std::size_t i = 0; i < n; ++i)
			if (qk[i] < qlo[i] || qk[i] > qhi[i])
				return std::nullopt;
		if (!mpz_divisible_p(it->second.get_mpz_t(), gc.get_mpz_t()))
			return std::nullopt;
		Integer qc = it->second / gc;
		for (auto const &[k, c] : g.terms())
		{
			auto [pos, inserted] = rem.try_emplace(k + qk, 0);
			pos->second -= qc * c;
			if (pos->second == 0)
				rem.erase(pos);
		}
		quotient.emplace_back(qk, std::move(qc));
	}
	return LaurentElement::from_terms(std::move(quotient));
}

Integer augment(LaurentElement const &f) { return f.coefficient_sum(); }

TensorElement tensor(LaurentElement const &a, LaurentElement const &b)
{
	std::vector<TensorElement::Term> out;
	out.reserve(a.size() * b.size());
	for (auto const &[ka, ca] : a.terms())
		for (auto const &[kb, cb] : b.terms())
			out.emplace_back(WeightPair{ka, kb}, ca * cb);
	return TensorElement::from_terms(std::move(out));
}

TensorElement tensor_mul(TensorElement const &a, TensorElement const &b) { return a * b; }

TensorElement mul_u(TensorElement const &t, LaurentElement const &a)
{
	std::vector<TensorElement::Term> out;
	out.reserve(t.size() * a.size());
	for (auto const &[kt, ct] : t.terms())
		for (auto const &[ka, ca] : a.terms())
			out.emplace_back(WeightPair{kt.u + ka, kt.v}, ct * ca);
	return TensorElement::from_terms(std::move(out));
}

std::vector<std::pair<Weight, LaurentElement>> split_by_v(TensorElement const &t)
{
	std::map<Weight, std::vector<LaurentElement::Term>> groups;
	for (auto const &[k, c] : t.terms())
		groups[k.v].emplace_back(k.u, c);
	std::vector<std::pair<Weight, LaurentElement>> out;
	out.reserve(groups.size());
	for (auto &[v, terms] : groups)
		out.emplace_back(v, LaurentElement::from_terms(std::move(terms)));
	return out;
}

std::optional<TensorElement> divide_u(TensorElement const &t, LaurentElement const &a)
{
	std::vector<TensorElement::Term> out;
	for (auto const &[v, g] : split_by_v(t))
	{
		auto q = divide_exact(g, a);
		if (!q)
			return std::nullopt;
		for (auto const &[k, c] : q->terms())
			out.emplace_back(WeightPair{k, v}, c);
	}
	return TensorElement::from_terms(std::move(out));
}

bool tensor_divisible_by_u_binomial(TensorElement const &t, Weight const &mu)
{
	return divide_u(t, one_minus_exp(-mu)).has_value();
}

LaurentElement collapse_v(TensorElement const &t)
{
	std::vector<LaurentElement::Term> out;
	out.reserve(t.size());
	for (auto const &[k, c] : t.terms())
		out.emplace_back(k.u, c);
	return LaurentElement::from_terms(std::move(out));
}

std::string to_string(LaurentElement const &f)
{
	if (f.is_zero())
		return "0";
	std::string s;
	for (auto const &[k, c] : f.terms())
	{
		if (!s.empty())
			s += c < 0 ? " - " : " + ";
		else if (c < 0)
			s += "-";
		Integer a = abs(c);
		if (a != 1 || k.is_zero())
			s += a.get_str() + (k.is_zero() ? "" : "*");
		if (!k.is_zero())
			s += "e^" + k.to_string();
	}
	return s;
}

} // namespace regk
