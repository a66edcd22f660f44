#pragma once

#include "regk/compactification.hpp"

#include <vector>

namespace regk {

/// Dense integer coordinates of an element of K(X) in the Z-basis
/// f-bar_w x-bar(tau_i) gamma_v, at index (v * m + i) * |W| + w.
using OrdinaryClass = std::vector<Integer>;

/// Products of all pairs of Z-basis elements: entry a * rank + b.
using OrdinaryTable = std::vector<OrdinaryClass>;

/// The ordinary ring K(X) = sum_v R(T-bar+) gamma_v, where R(T-bar+) is the
/// free K(G/B)-module on x-bar(tau_i).
///
/// Coefficients in R(T~) (u-variables) are sent to K(G/B) by
/// phi(r) = c_K(r(-u)); this turns the binomials prod (1 - e^{a(u)}) of the
/// equivariant basis into lambda-bar_I = c_K(prod (1 - e^{-a})).
///
/// Holds a pointer to the model, which must outlive it.
class OrdinaryModel {
public:
	explicit OrdinaryModel(CompactificationModel const &model);

	CompactificationModel const &model() const { return *model_; }
	std::size_t weyl_order() const { return n_; }
	std::size_t cone_count() const { return m_; }
	/// Z-rank |W|^2 m.
	std::size_t rank() const { return n_ * n_ * m_; }
	std::size_t index(std::size_t v, std::size_t i, std::size_t w) const { return (v * m_ + i) * n_ + w; }

	FlagKClass phi(LaurentElement const &r) const;
	/// phi of the toric constants: x(tau_i) x(tau_j) = sum_k r^k_ij x(tau_k).
	FlagKClass const &toric_constant(std::size_t i, std::size_t j, std::size_t k) const { return r_[i][j][k]; }

	OrdinaryClass zero() const { return OrdinaryClass(rank(), 0); }
	OrdinaryClass basis_class(std::size_t v, std::size_t i, std::size_t w) const;
	OrdinaryClass unit() const;
	/// 1 * gamma_v.
	OrdinaryClass gamma(std::size_t v) const;
	/// Image of the toric class g (times gamma_e).
	OrdinaryClass from_toric(GKMClass const &g) const;

	OrdinaryClass multiply(OrdinaryClass const &a, OrdinaryClass const &b) const;
	OrdinaryTable table() const;

private:
	CompactificationModel const *model_;
	std::size_t n_, m_;
	std::vector<RootSubset> cset_;
	std::vector<std::vector<std::vector<FlagKClass>>> r_; // [i][j][k]
	std::vector<std::vector<std::vector<FlagKClass>>> gam_; // [v][v'][w]: c^w lambda-bar lambda-bar
	std::vector<std::vector<FlagKClass>> fprod_;           // [w][w'] in K(G/B)
	OrdinaryClass unit_coeffs_;                             // 1 in R(T-bar+), on gamma_e
};

/// The second path to K(X): lift each Z-basis element to the equivariant class
/// (r(-u) x(tau_i)) (x) 1 on b_v with c_K(r) = f-bar_w, multiply lifts with
/// multiply_pointwise, expand in the equivariant basis, set the v-variables
/// to 1 and apply phi to the u-variables.
EquivariantClass oracle_lift(OrdinaryModel const &ord, std::size_t v, std::size_t i, std::size_t w);
OrdinaryClass oracle_project(OrdinaryModel const &ord, EquivariantClass const &x);
OrdinaryTable ordinary_oracle_table(OrdinaryModel const &ord);

/// Entrywise comparison of two multiplication tables.
PairTableResult compare_tables(OrdinaryModel const &ord, OrdinaryTable const &a, OrdinaryTable const &b);

/// Z-rank of the projections of the lifted Z-basis (must equal |W|^2 m), with
/// the absolute determinant of their coordinate matrix (must be 1).
struct OrdinaryRankReport {
	std::size_t rank = 0;
	Integer determinant;
};
OrdinaryRankReport ordinary_rank(OrdinaryModel const &ord);

/// Relations of the presentation of K(X) over the wonderful compactification.
/// The vanishing relation of a non-face F is x(F) = prod_{j in F} (1 - X_j);
/// the monomial relation of a character chi is prod_j X_j^{e_j} = e^{chi} (x) 1.
struct MonomialRelation {
	Weight character; ///< in M
	std::vector<int> exponents;
};
struct PresentationRelations {
	std::vector<RayMask> non_faces;
	std::vector<MonomialRelation> monomials;
};
/// Non-faces of F_+ and, for each simple root and each central coordinate,
/// the exponents <chi, v_j>.
PresentationRelations presentation_relations(CompactificationModel const &model);

struct PresentationReport {
	CheckReport check;
	bool vacuous = false;       ///< F_+ is the positive chamber itself
	std::size_t rank = 0;        ///< rank over the wonderful ring
	std::size_t ordinary_rank = 0;
};
/// Checks the relations in the equivariant model and in the ordinary model,
/// that x(tau_i) b_v are exactly the coordinate basis, that multiplication by
/// every X_j stays in their span, and the rank bookkeeping.
PresentationReport check_presentation(OrdinaryModel const &ord, PresentationRelations const &rel);
PresentationReport verify_presentation_over_wonderful(OrdinaryModel const &ord);

} // namespace regk
