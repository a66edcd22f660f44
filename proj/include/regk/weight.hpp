#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace regk {

inline constexpr std::size_t kMaxWeightDim = 12;

/// An element of a character lattice Z^n, n <= kMaxWeightDim.
///
/// Coordinates are laid out as the semisimple part (fundamental-weight basis
/// w_1..w_r) followed by the central part (characters of the central torus).
/// The split point is owned by the RootSystem; a Weight is just the vector.
///
/// Ordering is graded lexicographic: total degree first, then lexicographic
/// on the coordinates. It is a total order compatible with addition, which
/// is what polynomial long division needs.
class Weight {
public:
	Weight() = default;
	explicit Weight(std::size_t dim);
	Weight(std::initializer_list<int> coords);
	static Weight from(std::span<const int> coords);
	static Weight from(std::span<const long long> coords);

	std::size_t dim() const { return dim_; }
	int operator[](std::size_t i) const { return c_[i]; }
	int &operator[](std::size_t i) { return c_[i]; }
	std::span<const int> coords() const { return {c_.data(), dim_}; }
	long long degree() const;
	bool is_zero() const;

	Weight &operator+=(Weight const &o);
	Weight &operator-=(Weight const &o);
	friend Weight operator+(Weight a, Weight const &b) { return a += b; }
	friend Weight operator-(Weight a, Weight const &b) { return a -= b; }
	friend Weight operator-(Weight a);
	friend Weight operator*(int k, Weight a);

	friend bool operator==(Weight const &a, Weight const &b) = default;
	friend std::strong_ordering operator<=>(Weight const &a, Weight const &b);

	/// Concatenation (used for the doubled lattice and for block embeddings).
	static Weight concat(Weight const &a, Weight const &b);

	std::size_t hash() const;
	std::string to_string() const;

private:
	std::array<int, kMaxWeightDim> c_{};
	std::size_t dim_ = 0;
};

/// Exponent of a monomial in R(T)(u) (x) R(T)(v).
struct WeightPair {
	Weight u;
	Weight v;

	WeightPair &operator+=(WeightPair const &o)
	{
		u += o.u;
		v += o.v;
		return *this;
	}
	friend WeightPair operator+(WeightPair a, WeightPair const &b) { return a += b; }
	friend bool operator==(WeightPair const &, WeightPair const &) = default;
	friend std::strong_ordering operator<=>(WeightPair const &a, WeightPair const &b)
	{
		if (auto c = a.u <=> b.u; c != 0)
			return c;
		return a.v <=> b.v;
	}
	std::size_t dim() const { return u.dim(); }
};

} // namespace regk

template <>
struct std::hash<regk::Weight> {
	std::size_t operator()(regk::Weight const &w) const noexcept { return w.hash(); }
};
