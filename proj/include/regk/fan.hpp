#pragma once

#include "regk/linalg.hpp"
#include "regk/root_system.hpp"
#include "regk/weight.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace regk {

/// Set of ray indices (fans here have at most 64 rays).
using RayMask = std::uint64_t;

/// A pure, full-dimensional simplicial fan in N = Z^n with convex support.
/// Only the maximal cones are stored; a face is any subset of the rays of a
/// maximal cone.
class Fan {
public:
	/// Validates primitivity, full dimension and simpliciality of every maximal
	/// cone, the facet-matching and convexity conditions, and that a generic
	/// interior point is covered exactly once. Throws InvalidInput with a witness.
	Fan(std::vector<Weight> rays, std::vector<std::vector<std::size_t>> maximal_cones);

	std::size_t dim() const { return n_; }
	std::vector<Weight> const &rays() const { return rays_; }
	Weight const &ray(std::size_t j) const { return rays_[j]; }
	std::size_t ray_count() const { return rays_.size(); }
	/// Ray indices of each maximal cone, sorted ascending.
	std::vector<std::vector<std::size_t>> const &cones() const { return cones_; }
	std::size_t cone_count() const { return cones_.size(); }
	RayMask cone_mask(std::size_t s) const { return masks_[s]; }

	bool is_smooth() const;
	bool is_complete() const { return boundary_.empty(); }
	bool is_face(RayMask m) const;
	bool cone_contains(std::size_t s, std::size_t ray) const { return (masks_[s] >> ray) & 1u; }

	/// Pairs of maximal cones sharing a facet, with the index of that facet's
	/// ray set as a mask.
	struct Wall {
		std::size_t a, b;
		RayMask facet;
	};
	std::vector<Wall> const &walls() const { return walls_; }
	/// Facets lying in exactly one maximal cone: (cone, facet mask).
	std::vector<std::pair<std::size_t, RayMask>> const &boundary_facets() const { return boundary_; }

	/// Sets of rays spanning no cone all of whose proper subsets are faces.
	std::vector<RayMask> minimal_non_faces() const;

	/// Dual basis u_{rho,sigma} of the ray basis of a smooth cone, in M coordinates;
	/// entry k corresponds to cones()[s][k].
	std::vector<Weight> dual_basis(std::size_t s) const;

	/// Coordinates of x in the ray basis of cone s.
	RatVector cone_coordinates(std::size_t s, RatVector const &x) const;

private:
	std::size_t n_;
	std::vector<Weight> rays_;
	std::vector<std::vector<std::size_t>> cones_;
	std::vector<RayMask> masks_;
	std::vector<Wall> walls_;
	std::vector<std::pair<std::size_t, RayMask>> boundary_;

	void validate();
};

Integer pairing(Weight const &m, Weight const &x);
std::vector<std::size_t> mask_indices(RayMask m);
RayMask make_mask(std::vector<std::size_t> const &idx);

/// The positive Weyl chamber, subdivided into 2^c smooth cones along the
/// central directions (one cone when c = 0).
Fan positive_chamber(RootSystem const &rs);

/// The complete fan of W-translates of a fan supported on the positive chamber.
Fan weyl_translates(RootSystem const &rs, Fan const &positive);

struct SubdivisionReport {
	bool valid = true;
	std::size_t maximal_cones = 0;
	std::vector<std::string> failures;
};

/// Checks that F_+ is a smooth fan with support the positive chamber and that
/// its W-translates glue to a complete fan.
SubdivisionReport validate_positive_subdivision(RootSystem const &rs, Fan const &positive);

/// Primitive chi in M vanishing on the common facet of sigma and sigma',
/// positive on sigma. Throws InvalidInput if the cones are not adjacent.
Weight wall_character(Fan const &f, std::size_t sigma, std::size_t sigma_prime);

/// Whether some facet of sigma lies in the wall of the i-th simple root.
bool facet_orthogonal_to_root(Fan const &f, std::size_t sigma, std::size_t i);

/// Linear form h_sigma in M_Q with <h_sigma, v_rho> = psi_rho on sigma's rays.
RatVector linear_form(Fan const &f, std::vector<Integer> const &psi, std::size_t sigma);
/// h_sigma for a smooth cone, as an integral character.
Weight integral_linear_form(Fan const &f, std::vector<Integer> const &psi, std::size_t sigma);

struct AmpleReport {
	bool ample = true;
	std::vector<std::string> failures;
};

/// Ample iff <h_sigma, v_rho> >= psi_rho for every ray, with equality exactly
/// on the rays of sigma.
AmpleReport check_ample(Fan const &f, std::vector<Integer> const &psi);

struct MomentOrder {
	std::vector<std::size_t> order;     ///< maximal cone indices, ascending moment value
	std::vector<Rational> moments;     ///< <h_sigma_i, v>
	std::vector<RayMask> tau;           ///< distinguished faces tau_i
	std::vector<std::size_t> cell_dims; ///< n - dim tau_i
	bool star_property = true;
	std::vector<std::string> failures;
};

/// Orders the maximal cones by the moment values of a generic cocharacter v.
/// Throws InvalidInput if psi is not ample or v is not generic.
MomentOrder moment_order(Fan const &f, std::vector<Integer> const &psi, Weight const &v);

/// Smallest-norm integral psi (entries in [-bound, bound]) that is ample, if any.
std::optional<std::vector<Integer>> find_ample_psi(Fan const &f, int bound = 2);
/// A generic direction in the support, searched over small integer vectors.
std::optional<Weight> find_generic_direction(Fan const &f, std::vector<Integer> const &psi, int bound = 4);

struct GitInvariants {
	std::size_t pic_rank = 0;
	std::vector<IntVector> gale_duals;   ///< a_i in Z^{d-n}, one per ray
	std::vector<Integer> smith_diagonal; ///< invariant factors of Q
	bool exact = false;                  ///< sum_i a_i v_i = 0, Q injective, cokernel free
};

GitInvariants git_invariants(Fan const &f);

} // namespace regk
