#pragma once

#include "regk/instance.hpp"
#include "regk/laurent.hpp"

#include <random>
#include <string>

namespace regk::test {

inline std::string data_path(std::string const &name) { return std::string(REGK_SOURCE_DIR) + "/data/instances/" + name; }
inline std::string golden_path(std::string const &name) { return std::string(REGK_SOURCE_DIR) + "/tests/golden/" + name; }

/// Random Laurent polynomial with `terms` monomials, exponents in [lo, hi]
/// and coefficients in [-5, 5].
inline LaurentElement random_laurent(std::mt19937 &rng, std::size_t dim, int terms, int lo = -3, int hi = 3)
{
	std::uniform_int_distribution<int> e(lo, hi), c(-5, 5);
	std::vector<LaurentElement::Term> t;
	for (int k = 0; k < terms; ++k)
	{
		Weight w(dim);
		for (std::size_t i = 0; i < dim; ++i)
			w[i] = e(rng);
		t.emplace_back(w, c(rng));
	}
	return LaurentElement::from_terms(std::move(t));
}

inline Weight wt(std::initializer_list<int> c) { return Weight(c); }

} // namespace regk::test
