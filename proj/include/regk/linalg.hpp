#pragma once

#include "regk/common.hpp"

#include <optional>
#include <vector>

namespace regk {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(IntMatrix const &a);
IntMatrix multiply(IntMatrix const &a, IntMatrix const &b);
RatMatrix to_rational(IntMatrix const &a);

Rational determinant(RatMatrix a);
Integer determinant(IntMatrix const &a);
std::size_t rank(RatMatrix a);

/// Unique solution of a x = b for square nonsingular a; nullopt if singular.
std::optional<RatVector> solve(RatMatrix a, RatVector b);

/// Basis of the right kernel {x : a x = 0}, each vector scaled to a primitive
/// integer vector.
std::vector<IntVector> integer_kernel(IntMatrix const &a, std::size_t cols);

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

struct SmithForm {
	IntMatrix u; ///< unimodular, rows x rows
	IntMatrix d; ///< diagonal, d[i][i] | d[i+1][i+1], nonnegative
	IntMatrix v; ///< unimodular, cols x cols
};

/// u * a * v = d.
SmithForm smith_normal_form(IntMatrix const &a);

} // namespace regk
