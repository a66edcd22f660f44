#include "regk/instance.hpp"

#include <fstream>

namespace regk {

using nlohmann::json;

namespace {

int parse_int(json const &j, std::string const &what)
{
	Integer x = parse_integer(j, what);
	if (!x.fits_sint_p())
		throw InvalidInput(what + ": integer out of range");
	return static_cast<int>(x.get_si());
}

std::shared_ptr<RootSystem const> parse_root_system(json const &j)
{
	if (j.is_string())
		return std::make_shared<RootSystem const>(RootSystem::builtin(j.get<std::string>()));
	if (!j.is_object())
		throw InvalidInput("root_system: expected a type name or an object");
	std::size_t central = 0;
	if (j.contains("central_rank"))
	{
		int c = parse_int(j["central_rank"], "root_system.central_rank");
		if (c < 0)
			throw InvalidInput("root_system.central_rank: negative");
		central = static_cast<std::size_t>(c);
	}
	if (j.contains("type"))
	{
		if (!j["type"].is_string())
			throw InvalidInput("root_system.type: expected a string");
		return std::make_shared<RootSystem const>(RootSystem::builtin(j["type"].get<std::string>(), central));
	}
	if (!j.contains("cartan") || !j["cartan"].is_array())
		throw InvalidInput("root_system: needs \"type\" or \"cartan\"");
	std::vector<std::vector<int>> cartan;
	for (auto const &row : j["cartan"])
	{
		if (!row.is_array())
			throw InvalidInput("root_system.cartan: rows must be arrays");
		std::vector<int> r;
		for (auto const &x : row)
			r.push_back(parse_int(x, "root_system.cartan"));
		cartan.push_back(std::move(r));
	}
	std::string name = "custom";
	if (j.contains("name"))
	{
		if (!j["name"].is_string())
			throw InvalidInput("root_system.name: expected a string");
		name = j["name"].get<std::string>();
	}
	return std::make_shared<RootSystem const>(std::move(cartan), central, name);
}

Weight parse_weight(json const &j, std::string const &what)
{
	if (!j.is_array() || j.empty() || j.size() > kMaxWeightDim)
		throw InvalidInput(what + ": expected an integer vector of length 1.." + std::to_string(kMaxWeightDim));
	Weight w(j.size());
	for (std::size_t i = 0; i < j.size(); ++i)
		w[i] = parse_int(j[i], what);
	return w;
}

Fan parse_fan(json const &j)
{
	if (!j.is_object() || !j.contains("rays") || !j.contains("maximal_cones"))
		throw InvalidInput("fan: expected an object with \"rays\" and \"maximal_cones\"");
	if (!j["rays"].is_array() || !j["maximal_cones"].is_array())
		throw InvalidInput("fan: \"rays\" and \"maximal_cones\" must be arrays");
	std::vector<Weight> rays;
	for (auto const &r : j["rays"])
		rays.push_back(parse_weight(r, "fan.rays"));
	std::vector<std::vector<std::size_t>> cones;
	for (auto const &c : j["maximal_cones"])
	{
		if (!c.is_array())
			throw InvalidInput("fan.maximal_cones: cones must be arrays of ray indices");
		std::vector<std::size_t> cone;
		for (auto const &x : c)
		{
			int k = parse_int(x, "fan.maximal_cones");
			if (k < 0 || static_cast<std::size_t>(k) >= rays.size())
				throw InvalidInput("fan.maximal_cones: ray index " + std::to_string(k) + " out of range");
			cone.push_back(static_cast<std::size_t>(k));
		}
		cones.push_back(std::move(cone));
	}
	return Fan(std::move(rays), std::move(cones));
}

} // namespace

Integer parse_integer(json const &j, std::string const &what)
{
	if (j.is_number_integer())
		return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
		                              : Integer(std::to_string(j.get<std::int64_t>()));
	if (j.is_string())
	{
		Integer x;
		if (x.set_str(j.get<std::string>(), 10) != 0)
			throw InvalidInput(what + ": not a decimal integer");
		return x;
	}
	throw InvalidInput(what + ": expected an integer");
}

RootSystem const &Instance::require_root_system() const
{
	if (!root_system)
		throw InvalidInput("instance has no root_system");
	return *root_system;
}

Fan const &Instance::require_fan() const
{
	if (!fan)
		throw InvalidInput("instance has no fan");
	return *fan;
}

std::vector<Integer> Instance::resolved_psi() const
{
	if (psi)
		return *psi;
	auto p = find_ample_psi(require_fan(), psi_bound);
	if (!p)
		throw InvalidInput("no ample psi given and none found with entries in [-" + std::to_string(psi_bound) + "," +
		                   std::to_string(psi_bound) + "]");
	return *p;
}

Weight Instance::resolved_direction(std::vector<Integer> const &p) const
{
	if (bb_direction)
		return *bb_direction;
	auto d = find_generic_direction(require_fan(), p, direction_bound);
	if (!d)
		throw InvalidInput("no bb_direction given and no generic direction found");
	return *d;
}

MomentOrder Instance::moment() const
{
	auto p = resolved_psi();
	return moment_order(require_fan(), p, resolved_direction(p));
}

ToricModel Instance::toric_model() const { return ToricModel(require_fan(), root_system, moment()); }

CompactificationModel Instance::compactification_model() const
{
	require_root_system();
	auto sub = validate_positive_subdivision(*root_system, require_fan());
	if (!sub.valid)
		throw InvalidInput("fan is not a smooth subdivision of the positive chamber: " + sub.failures.front());
	return CompactificationModel(root_system, toric_model(), threads);
}

Instance parse_instance(json const &j)
{
	if (!j.is_object())
		throw InvalidInput("instance: expected a JSON object");
	for (auto const &[k, v] : j.items())
		if (k != "root_system" && k != "fan" && k != "psi" && k != "bb_direction" && k != "options" && k != "name")
			throw InvalidInput("instance: unknown key \"" + k + "\"");
	Instance in;
	if (j.contains("name"))
	{
		if (!j["name"].is_string())
			throw InvalidInput("name: expected a string");
		in.name = j["name"].get<std::string>();
	}
	if (j.contains("root_system"))
		in.root_system = parse_root_system(j["root_system"]);
	if (j.contains("fan"))
		in.fan = parse_fan(j["fan"]);
	else if (in.root_system)
	{
		in.fan = positive_chamber(*in.root_system);
		in.fan_is_chamber = true;
	}
	else
		throw InvalidInput("instance needs a fan or a root_system");
	if (in.root_system && in.fan->dim() != in.root_system->dim())
		throw InvalidInput("fan dimension " + std::to_string(in.fan->dim()) + " differs from the rank " +
		                   std::to_string(in.root_system->dim()) + " of the root system");
	if (j.contains("psi"))
	{
		if (!j["psi"].is_array() || j["psi"].size() != in.fan->ray_count())
			throw InvalidInput("psi: expected one integer per ray");
		std::vector<Integer> p;
		for (auto const &x : j["psi"])
			p.push_back(parse_integer(x, "psi"));
		in.psi = std::move(p);
	}
	if (j.contains("bb_direction"))
	{
		Weight d = parse_weight(j["bb_direction"], "bb_direction");
		if (d.dim() != in.fan->dim())
			throw InvalidInput("bb_direction: wrong dimension");
		in.bb_direction = d;
	}
	if (j.contains("options"))
	{
		json const &o = j["options"];
		if (!o.is_object())
			throw InvalidInput("options: expected an object");
		for (auto const &[k, v] : o.items())
		{
			int x = parse_int(v, "options." + k);
			if (k == "threads" && x >= 1)
				in.threads = static_cast<unsigned>(x);
			else if (k == "psi_bound" && x >= 0)
				in.psi_bound = x;
			else if (k == "direction_bound" && x >= 1)
				in.direction_bound = x;
			else
				throw InvalidInput("options: bad key or value \"" + k + "\"");
		}
	}
	return in;
}

Instance load_instance(std::string const &path)
{
	std::ifstream f(path);
	if (!f)
		throw InvalidInput("cannot open instance file " + path);
	json j;
	try
	{
		f >> j;
	}
	catch (json::exception const &e)
	{
		throw InvalidInput("malformed JSON in " + path + ": " + e.what());
	}
	return parse_instance(j);
}

} // namespace regk
