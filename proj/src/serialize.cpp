#include "regk/serialize.hpp"

namespace regk {

Json to_json(Integer const &x)
{
	if (x.fits_slong_p())
		return static_cast<std::int64_t>(x.get_si());
	return x.get_str();
}

Json to_json(std::vector<Integer> const &v)
{
	Json a = Json::array();
	for (auto const &x : v)
		a.push_back(to_json(x));
	return a;
}

Json to_json(Weight const &w)
{
	Json a = Json::array();
	for (int x : w.coords())
		a.push_back(x);
	return a;
}

Json to_json(LaurentElement const &f)
{
	Json a = Json::array();
	for (auto const &[k, c] : f.terms())
		a.push_back(Json::array({to_json(k), to_json(c)}));
	return a;
}

Json to_json(TensorElement const &t)
{
	Json a = Json::array();
	for (auto const &[k, c] : t.terms())
		a.push_back(Json::array({to_json(k.u), to_json(k.v), to_json(c)}));
	return a;
}

Json mask_to_json(RayMask m)
{
	Json a = Json::array();
	for (auto j : mask_indices(m))
		a.push_back(j);
	return a;
}

Json subset_to_json(RootSubset I)
{
	Json a = Json::array();
	for (auto i : I.indices())
		a.push_back(i + 1);
	return a;
}

} // namespace regk
