#pragma once

#include "regk/fan.hpp"
#include "regk/laurent.hpp"
#include "regk/root_system.hpp"

#include <json.hpp>

namespace regk {

/// Output JSON keeps insertion order so that serialized reports are stable.
using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become numbers, others decimal strings.
Json to_json(Integer const &x);
Json to_json(std::vector<Integer> const &v);
Json to_json(Weight const &w);
/// [[exponent, coefficient], ...] in ascending monomial order.
Json to_json(LaurentElement const &f);
/// [[u-exponent, v-exponent, coefficient], ...].
Json to_json(TensorElement const &t);
/// Ray indices of a mask, ascending.
Json mask_to_json(RayMask m);
/// 1-based simple root indices.
Json subset_to_json(RootSubset I);

} // namespace regk
