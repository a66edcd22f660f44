#pragma once

#include "regk/steinberg.hpp"
#include "regk/toric_k.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace regk {

/// An element of K_{G~xG~}(X) in the basis b_{I,v} = prod_{a in I}(1 - e^{a(u)}) (x) f_v,
/// v in C^I. coeff[v][sigma] is the coefficient of b_v, an element of
/// K_T~(T+) (x) R(G~) written as one restriction per maximal cone in
/// R(T~)(u) (x) R(T~)(v) with W-invariant v-part.
struct EquivariantClass {
	std::vector<std::vector<TensorElement>> coeff;

	friend bool operator==(EquivariantClass const &, EquivariantClass const &) = default;
};

/// Tuples (f_sigma) in prod_sigma R(T~)(x)R(T~).
using Tuple = std::vector<TensorElement>;

/// Coefficients of a class in the basis x(tau_i) b_v: [v][i].
using EquivariantCoordinates = std::vector<std::vector<TensorElement>>;

/// Everything needed to compute in K_{G~xG~}(X) for one regular compactification:
/// the root system, Steinberg data, and the GKM model of the toric variety of F_+.
class CompactificationModel {
public:
	CompactificationModel(std::shared_ptr<RootSystem const> rs, ToricModel toric, unsigned threads = 1);

	RootSystem const &root_system() const { return *rs_; }
	std::shared_ptr<RootSystem const> root_system_ptr() const { return rs_; }
	ToricModel const &toric() const { return toric_; }
	SteinbergBasis const &steinberg() const { return *basis_; }
	StructureTable const &structure() const { return a_; }
	FlagK const &flag() const { return *flag_; }
	unsigned threads() const { return threads_; }
	std::size_t weyl_order() const { return rs_->weyl_order(); }
	std::size_t cone_count() const { return toric_.cone_count(); }

	/// prod_{a in I} (1 - e^{a}) in R(T~).
	LaurentElement binomial_product(RootSubset I) const;

	EquivariantClass zero() const;
	EquivariantClass unit() const;
	/// b_{I,v}; throws InvalidInput unless v in C^I.
	EquivariantClass basis_element(RootSubset I, std::size_t v) const;
	/// The class with coefficient tuple c at b_v and zero elsewhere.
	EquivariantClass lift(std::size_t v, Tuple c) const;
	/// The toric class g (in the u-variables) times b_e.
	EquivariantClass from_toric(GKMClass const &g) const;

	EquivariantClass add(EquivariantClass const &a, EquivariantClass const &b) const;
	EquivariantClass subtract(EquivariantClass const &a, EquivariantClass const &b) const;

	Tuple to_tuple(EquivariantClass const &x) const;
	/// Inverse of to_tuple: Steinberg expansion of the v-variables, division by
	/// the binomial products, then verification of reconstruction and of the
	/// wall congruences of every coefficient. Throws VerificationFailure if the
	/// tuple is not in the ring.
	EquivariantClass from_tuple(Tuple const &f) const;

	/// Bilinear extension of the product rule for basis elements through a^w_{v,v'}.
	EquivariantClass multiply_structural(EquivariantClass const &a, EquivariantClass const &b) const;
	/// Product of tuples in prod_sigma R(T~)(x)R(T~), converted back to coordinates.
	EquivariantClass multiply_pointwise(EquivariantClass const &a, EquivariantClass const &b) const;

	/// Conditions (i) (facets orthogonal to simple roots) and (ii) (wall congruences).
	CheckReport check_membership(Tuple const &f) const;

	/// Steinberg expansion of e^mu, memoized across calls and threads.
	std::vector<LaurentElement> const &expansion(Weight const &mu) const;

	/// Coefficients in the basis x(tau_i) b_v over R(T~)(x)R(G~).
	EquivariantCoordinates coordinates(EquivariantClass const &x) const;

private:
	std::shared_ptr<RootSystem const> rs_;
	ToricModel toric_;
	unsigned threads_;
	std::shared_ptr<SteinbergBasis const> basis_;
	StructureTable a_;
	std::shared_ptr<FlagK const> flag_;
	std::vector<LaurentElement> binom_; // by subset bits
	std::vector<Weight> wall_chi_;

	// Steinberg expansions of e^mu, shared by all products; values never change once inserted.
	struct ExpansionCache {
		std::mutex mutex;
		std::map<Weight, std::vector<LaurentElement>> map;
	};
	std::shared_ptr<ExpansionCache> cache_ = std::make_shared<ExpansionCache>();
};

struct PairTableResult {
	bool agree = true;
	std::size_t pairs = 0;
	std::vector<std::string> mismatches;
};

/// Compares multiply_structural and multiply_pointwise on all pairs of basis elements b_v.
PairTableResult compare_multiplications(CompactificationModel const &model);

} // namespace regk
