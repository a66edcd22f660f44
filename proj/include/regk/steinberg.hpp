#pragma once

#include "regk/laurent.hpp"
#include "regk/root_system.hpp"

#include <memory>
#include <vector>

namespace regk {

/// p_v = prod over simple a_i with v^{-1}(a_i) < 0 of e^{w_i}.
LaurentElement p_element(RootSystem const &rs, std::size_t v);

/// f_v^I: sum of the distinct W_I-translates of v^{-1}(p_v). Requires v in W^I.
LaurentElement steinberg_element(RootSystem const &rs, std::size_t v, RootSubset I);

/// The Steinberg basis {f_w} of R(T~) over R(T~)^W, with f_w = f_w^{D\I} for
/// w in C^I, and the adjugate data needed to expand in it.
class SteinbergBasis {
public:
	explicit SteinbergBasis(std::shared_ptr<RootSystem const> rs);

	RootSystem const &root_system() const { return *rs_; }
	std::shared_ptr<RootSystem const> root_system_ptr() const { return rs_; }
	std::size_t size() const { return f_.size(); }
	LaurentElement const &element(std::size_t w) const { return f_[w]; }
	std::vector<LaurentElement> const &elements() const { return f_; }

	/// M[u][w] = u(f_w).
	std::vector<std::vector<LaurentElement>> const &matrix() const { return m_; }
	/// d = +-det M, with adj M = d M^{-1} stored internally; d != 0 certifies the basis.
	LaurentElement const &determinant() const { return det_; }

	/// Coefficients c_w in R(T~)^W with g = sum_w c_w f_w. Verifies exact
	/// division, W-invariance and reconstruction.
	std::vector<LaurentElement> expand(LaurentElement const &g) const;

private:
	std::shared_ptr<RootSystem const> rs_;
	std::vector<LaurentElement> f_;
	std::vector<std::vector<LaurentElement>> m_, adj_;
	LaurentElement det_;
};

/// a[v][v'][w] with f_v f_v' = sum_w a^w_{v,v'} f_w.
using StructureTable = std::vector<std::vector<std::vector<LaurentElement>>>;

/// Computes all a^w_{v,v'} (in parallel over pairs) and checks the support
/// property a^w_{v,v'} = 0 unless w lies in C^J with J inside I u I'.
StructureTable structure_constants(SteinbergBasis const &basis, unsigned threads = 1);

/// Element of K(G/B) in the basis f-bar_w.
using FlagKClass = std::vector<Integer>;

/// The model of K(G/B): basis f-bar_w with integer structure constants c^w = e(a^w).
class FlagK {
public:
	FlagK(std::shared_ptr<SteinbergBasis const> basis, StructureTable const &a);

	SteinbergBasis const &basis() const { return *basis_; }
	std::size_t size() const { return basis_->size(); }
	/// c[v][v'][w].
	std::vector<std::vector<std::vector<Integer>>> const &constants() const { return c_; }

	FlagKClass unit() const;
	FlagKClass basis_class(std::size_t w) const;
	FlagKClass multiply(FlagKClass const &a, FlagKClass const &b) const;
	/// c_K(g) = sum_w e(c_w) f-bar_w.
	FlagKClass characteristic_image(LaurentElement const &g) const;
	/// c_K of prod_{a in I} (1 - e^{-a}).
	FlagKClass lambda_bar(RootSubset I) const;

private:
	std::shared_ptr<SteinbergBasis const> basis_;
	std::vector<std::vector<std::vector<Integer>>> c_;
};

FlagKClass flag_add(FlagKClass a, FlagKClass const &b);
FlagKClass flag_scale(Integer const &k, FlagKClass a);

} // namespace regk
