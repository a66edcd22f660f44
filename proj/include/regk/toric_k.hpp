#pragma once

#include "regk/fan.hpp"
#include "regk/laurent.hpp"
#include "regk/root_system.hpp"

#include <memory>
#include <string>
#include <vector>

namespace regk {

/// An element of prod_sigma R(T~): one restriction per maximal cone.
struct GKMClass {
	std::vector<LaurentElement> restrictions;

	friend bool operator==(GKMClass const &, GKMClass const &) = default;
};

GKMClass operator+(GKMClass const &a, GKMClass const &b);
GKMClass operator-(GKMClass const &a, GKMClass const &b);
GKMClass operator*(GKMClass const &a, GKMClass const &b);
/// Multiplies every restriction by the constant r in R(T~).
GKMClass scale(LaurentElement const &r, GKMClass const &g);

struct CheckReport {
	bool passed = true;
	std::vector<std::string> failures;
	void fail(std::string s)
	{
		passed = false;
		failures.push_back(std::move(s));
	}
};

/// The GKM model of K_T~ of the smooth toric variety of a fan, with the orbit
/// basis attached to a moment ordering.
///
/// Characters of M are mapped into Lambda = X^*(T~) through the root system
/// (simple roots), or by the identity when no root system is given.
class ToricModel {
public:
	ToricModel(Fan fan, std::shared_ptr<RootSystem const> rs, MomentOrder order);

	Fan const &fan() const { return fan_; }
	MomentOrder const &order() const { return order_; }
	std::size_t lattice_dim() const { return fan_.dim(); }
	std::size_t cone_count() const { return fan_.cone_count(); }
	/// Image in Lambda of a character of M.
	Weight to_lambda(Weight const &m) const;
	/// u_{rho,sigma} in Lambda, indexed like fan().cones()[s].
	std::vector<Weight> const &dual_basis(std::size_t s) const { return dual_[s]; }
	/// Wall characters in Lambda, aligned with fan().walls().
	std::vector<Weight> const &wall_characters() const { return wall_chi_; }

	GKMClass constant(LaurentElement const &r) const;
	GKMClass unit() const;
	GKMClass ray_generator(std::size_t j) const;
	/// X_j^k for any integer k (restrictions of X_j are units).
	GKMClass ray_generator_power(std::size_t j, int k) const;
	/// x(tau) = prod_{rho in tau} (1 - X_rho). Throws if tau is not a face.
	GKMClass orbit_class(RayMask tau) const;
	/// sigma -> e^{h_sigma} for an integral piecewise linear psi.
	GKMClass line_bundle(std::vector<Integer> const &psi) const;

	/// Wall congruences g_sigma = g_sigma' mod (1 - e^{-chi}).
	CheckReport check_congruences(GKMClass const &g) const;

	/// M[j][i] = x(tau_i) restricted to sigma_j (moment order). Built and
	/// certified triangular with nonzero diagonal at construction.
	std::vector<std::vector<LaurentElement>> const &basis_matrix() const { return basis_; }
	/// r_i with g = sum_i r_i x(tau_i), via forward substitution.
	std::vector<LaurentElement> expand_in_orbit_basis(GKMClass const &g) const;
	/// The same solve for tuples in R(T~)(u) (x) R(T~)(v), indexed by maximal cone;
	/// the basis acts through the u-factor.
	std::vector<TensorElement> expand_tensor(std::vector<TensorElement> const &g) const;
	/// Non-equivariant image in Z^m: augment each orbit-basis coefficient.
	std::vector<Integer> specialize(GKMClass const &g) const;

	/// prod_{rho in F} (1 - X_rho) = 0 for every minimal non-face F.
	CheckReport sr_vanishing_check() const;
	struct PointPresentationReport {
		CheckReport check;
		std::size_t rank = 0; ///< Z-rank spanned by the specialized orbit classes
	};
	/// Monomial relations prod_j X_j^{<u,v_j>} = e^u for u in a basis of M,
	/// their specializations to 1 at the trivial base, vanishing on non-faces,
	/// and the Z-rank of the specialized ring.
	PointPresentationReport verify_point_presentation() const;

private:
	Fan fan_;
	std::shared_ptr<RootSystem const> rs_;
	MomentOrder order_;
	std::vector<std::vector<Weight>> dual_;
	std::vector<Weight> wall_chi_;
	std::vector<std::vector<LaurentElement>> basis_;
	std::vector<GKMClass> orbit_basis_;
};

} // namespace regk
