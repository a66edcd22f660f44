#pragma once

#include "regk/laurent.hpp"
#include "regk/weight.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace regk {

/// Subset of the simple roots, as a bitmask over indices 0..r-1.
struct RootSubset {
	std::uint32_t bits = 0;

	static RootSubset all(std::size_t r) { return {r >= 32 ? ~0u : ((1u << r) - 1u)}; }
	bool contains(std::size_t i) const { return (bits >> i) & 1u; }
	std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits)); }
	bool subset_of(RootSubset o) const { return (bits & ~o.bits) == 0; }
	RootSubset operator|(RootSubset o) const { return {bits | o.bits}; }
	RootSubset operator&(RootSubset o) const { return {bits & o.bits}; }
	/// Set difference.
	RootSubset operator-(RootSubset o) const { return {bits & ~o.bits}; }
	friend bool operator==(RootSubset, RootSubset) = default;
	friend auto operator<=>(RootSubset, RootSubset) = default;
	std::vector<std::size_t> indices() const;
};

/// All subsets of {0..r-1}, in increasing bitmask order.
std::vector<RootSubset> all_subsets(std::size_t r);

/// An element of W, acting on the weight lattice (fundamental-weight
/// coordinates) and on the coweight lattice N (fundamental-coweight
/// coordinates). The central block is fixed.
class WeylElement {
public:
	WeylElement() = default;
	WeylElement(std::vector<int> word, std::vector<int> on_weights, std::vector<int> on_coweights, std::size_t r);

	std::vector<int> const &word() const { return word_; }
	std::size_t length() const { return word_.size(); }
	std::size_t rank() const { return r_; }
	/// Row-major r x r matrices.
	std::vector<int> const &weight_matrix() const { return mw_; }
	std::vector<int> const &coweight_matrix() const { return mn_; }

	Weight act(Weight const &lambda) const;
	/// Action on N (cocharacters, fundamental-coweight coordinates).
	Weight act_coweight(Weight const &x) const;

	/// Word concatenation and matrix product (this first applied last).
	WeylElement operator*(WeylElement const &o) const;
	WeylElement inverse() const;
	bool is_identity() const;
	/// Word as a string like "s1s2" ("e" for the identity).
	std::string name() const;

	friend bool operator==(WeylElement const &a, WeylElement const &b) { return a.mw_ == b.mw_; }

private:
	std::vector<int> word_; // 0-based simple reflection indices
	std::vector<int> mw_, mn_;
	std::size_t r_ = 0;
};

/// A reduced root system with an optional central torus factor.
///
/// Lattices and coordinates:
///  - Lambda = X^*(T~): fundamental weights w_1..w_r, then c central characters.
///  - N: fundamental coweights, then c central cocharacters (the fan lattice).
///  - M = dual of N: simple roots a_1..a_r, then c central characters.
/// Simple root a_i has Lambda coordinates (cartan[0][i], ..., cartan[r-1][i]).
class RootSystem {
public:
	static constexpr std::size_t kDefaultWeylBound = 1000000;

	RootSystem(std::vector<std::vector<int>> cartan, std::size_t central_rank, std::string name = "custom",
	           std::size_t weyl_bound = kDefaultWeylBound);
	/// Built-in types: A1, A2, A1xA1, B2.
	static RootSystem builtin(std::string const &type, std::size_t central_rank = 0);

	std::string const &name() const { return name_; }
	std::size_t rank() const { return r_; }
	std::size_t central_rank() const { return c_; }
	std::size_t dim() const { return r_ + c_; }
	std::vector<std::vector<int>> const &cartan() const { return cartan_; }

	Weight simple_root(std::size_t i) const;
	Weight fundamental_weight(std::size_t i) const;
	/// Maps a character of M (simple-root coordinates) into Lambda.
	Weight root_lattice_to_weight(Weight const &m) const;
	/// Positive roots in Lambda coordinates and in simple-root coordinates.
	std::vector<Weight> const &positive_roots() const { return pos_; }
	std::vector<Weight> const &positive_roots_in_simple() const { return pos_simple_; }
	/// +1 for positive roots, -1 for negative roots, 0 if not a root.
	int root_sign(Weight const &lambda) const;

	WeylElement const &simple_reflection(std::size_t i) const { return simple_[i]; }
	std::vector<WeylElement> const &simple_reflections() const { return simple_; }

	/// W, breadth-first by length; element 0 is the identity.
	std::vector<WeylElement> const &weyl() const { return weyl_; }
	std::size_t weyl_order() const { return weyl_.size(); }
	/// Position of w in weyl(); throws if absent.
	std::size_t index_of(WeylElement const &w) const;
	std::size_t longest_element() const;
	/// Number of positive roots sent to negative roots.
	std::size_t inversion_count(WeylElement const &w) const;

	/// W^I = {w : w(a) > 0 for all a in I}, as indices into weyl().
	std::vector<std::size_t> minimal_coset_reps(RootSubset I) const;
	/// W_I, as indices into weyl().
	std::vector<std::size_t> parabolic_elements(RootSubset I) const;
	/// C^I for every subset I, keyed by I.
	std::map<RootSubset, std::vector<std::size_t>> c_sets() const;
	/// The unique I with weyl()[w] in C^I.
	RootSubset c_set_of(std::size_t w) const { return c_of_[w]; }

	Weight weyl_act(std::size_t w, Weight const &lambda) const { return weyl_[w].act(lambda); }

private:
	std::string name_;
	std::size_t r_, c_;
	std::vector<std::vector<int>> cartan_;
	std::vector<Weight> pos_, pos_simple_;
	std::map<std::vector<int>, int> root_sign_; // keyed by Lambda ss coordinates
	std::vector<WeylElement> simple_;
	std::vector<WeylElement> weyl_;
	std::map<std::vector<int>, std::size_t> index_;
	std::vector<RootSubset> c_of_;

	void validate() const;
	void build_roots();
	void build_weyl(std::size_t bound);
};

LaurentElement weyl_act(WeylElement const &w, LaurentElement const &f);
bool is_invariant(LaurentElement const &f, std::vector<WeylElement> const &gens);
/// Applies w to the second (v) factor only.
TensorElement tensor_act_right(WeylElement const &w, TensorElement const &t);

} // namespace regk
