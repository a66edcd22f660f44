#include "regk/weight.hpp"

#include "regk/common.hpp"

#include <limits>

namespace regk {

namespace {

void check_dim(std::size_t n)
{
	if (n > kMaxWeightDim)
		throw InvalidInput("lattice dimension " + std::to_string(n) + " exceeds supported maximum " +
		                   std::to_string(kMaxWeightDim));
}

int narrow(long long x)
{
	if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min())
		throw InvalidInput("exponent out of range: " + std::to_string(x));
	return static_cast<int>(x);
}

} // namespace

Weight::Weight(std::size_t dim) : dim_(dim) { check_dim(dim); }

Weight::Weight(std::initializer_list<int> coords) : dim_(coords.size())
{
	check_dim(dim_);
	std::size_t i = 0;
	for (int x : coords)
		c_[i++] = x;
}

Weight Weight::from(std::span<const int> coords)
{
	Weight w(coords.size());
	for (std::size_t i = 0; i < coords.size(); ++i)
		w.c_[i] = coords[i];
	return w;
}

Weight Weight::from(std::span<const long long> coords)
{
	Weight w(coords.size());
	for (std::size_t i = 0; i < coords.size(); ++i)
		w.c_[i] = narrow(coords[i]);
	return w;
}

long long Weight::degree() const
{
	long long d = 0;
	for (std::size_t i = 0; i < dim_; ++i)
		d += c_[i];
	return d;
}

bool Weight::is_zero() const
{
	for (std::size_t i = 0; i < dim_; ++i)
		if (c_[i] != 0)
			return false;
	return true;
}

Weight &Weight::operator+=(Weight const &o)
{
	if (o.dim_ != dim_)
		throw InvalidInput("weight dimension mismatch");
	for (std::size_t i = 0; i < dim_; ++i)
		c_[i] += o.c_[i];
	return *this;
}

Weight &Weight::operator-=(Weight const &o)
{
	if (o.dim_ != dim_)
		throw InvalidInput("weight dimension mismatch");
	for (std::size_t i = 0; i < dim_; ++i)
		c_[i] -= o.c_[i];
	return *this;
}

Weight operator-(Weight a)
{
	for (std::size_t i = 0; i < a.dim_; ++i)
		a.c_[i] = -a.c_[i];
	return a;
}

Weight operator*(int k, Weight a)
{
	for (std::size_t i = 0; i < a.dim_; ++i)
		a.c_[i] *= k;
	return a;
}

std::strong_ordering operator<=>(Weight const &a, Weight const &b)
{
	if (auto c = a.dim_ <=> b.dim_; c != 0)
		return c;
	if (auto c = a.degree() <=> b.degree(); c != 0)
		return c;
	for (std::size_t i = 0; i < a.dim_; ++i)
		if (auto c = a.c_[i] <=> b.c_[i]; c != 0)
			return c;
	return std::strong_ordering::equal;
}

Weight Weight::concat(Weight const &a, Weight const &b)
{
	Weight w(a.dim_ + b.dim_);
	for (std::size_t i = 0; i < a.dim_; ++i)
		w.c_[i] = a.c_[i];
	for (std::size_t i = 0; i < b.dim_; ++i)
		w.c_[a.dim_ + i] = b.c_[i];
	return w;
}

std::size_t Weight::hash() const
{
	std::size_t h = dim_ * 0x9e3779b97f4a7c15ull;
	for (std::size_t i = 0; i < dim_; ++i)
		h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(c_[i]))) * 0x100000001b3ull;
	return h;
}

std::string Weight::to_string() const
{
	std::string s = "(";
	for (std::size_t i = 0; i < dim_; ++i)
	{
		if (i)
			s += ",";
		s += std::to_string(c_[i]);
	}
	return s + ")";
}

} // namespace regk
