#pragma once

#include "regk/compactification.hpp"
#include "regk/fan.hpp"
#include "regk/toric_k.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace regk {

/// Parsed instance file. See README.md for the schema.
struct Instance {
	std::string name;
	std::shared_ptr<RootSystem const> root_system; ///< null for pure toric instances
	std::optional<Fan> fan;
	bool fan_is_chamber = false; ///< fan omitted and taken to be the positive chamber
	std::optional<std::vector<Integer>> psi;
	std::optional<Weight> bb_direction;
	unsigned threads = 1;
	int psi_bound = 2;
	int direction_bound = 4;

	RootSystem const &require_root_system() const;
	Fan const &require_fan() const;
	/// psi as given, or the first ample one found by search.
	std::vector<Integer> resolved_psi() const;
	/// bb_direction as given, or the first generic one found by search.
	Weight resolved_direction(std::vector<Integer> const &psi) const;
	MomentOrder moment() const;
	ToricModel toric_model() const;
	CompactificationModel compactification_model() const;
};

/// Throws InvalidInput on any schema violation.
Instance parse_instance(nlohmann::json const &j);
Instance load_instance(std::string const &path);

/// Integer from a JSON number or a decimal string.
Integer parse_integer(nlohmann::json const &j, std::string const &what);

} // namespace regk
