#include "regk/linalg.hpp"

#include <utility>

namespace regk {

IntMatrix identity_matrix(std::size_t n)
{
	IntMatrix m(n, IntVector(n, 0));
	for (std::size_t i = 0; i < n; ++i)
		m[i][i] = 1;
	return m;
}

IntMatrix transpose(IntMatrix const &a)
{
	if (a.empty())
		return {};
	IntMatrix t(a[0].size(), IntVector(a.size()));
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < a[i].size(); ++j)
			t[j][i] = a[i][j];
	return t;
}

IntMatrix multiply(IntMatrix const &a, IntMatrix const &b)
{
	std::size_t const n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
	IntMatrix c(n, IntVector(m, 0));
	for (std::size_t i = 0; i < n; ++i)
	{
		if (a[i].size() != k)
			throw InvalidInput("matrix product: shape mismatch");
		for (std::size_t l = 0; l < k; ++l)
			if (a[i][l] != 0)
				for (std::size_t j = 0; j < m; ++j)
					c[i][j] += a[i][l] * b[l][j];
	}
	return c;
}

RatMatrix to_rational(IntMatrix const &a)
{
	RatMatrix r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		for (auto const &x : a[i])
			r[i].emplace_back(x);
	return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMatrix &a, std::size_t cols, bool reduced, int *sign = nullptr)
{
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	for (std::size_t col = 0; col < cols && row < a.size(); ++col)
	{
		std::size_t p = row;
		while (p < a.size() && a[p][col] == 0)
			++p;
		if (p == a.size())
			continue;
		if (p != row)
		{
			std::swap(a[p], a[row]);
			if (sign)
				*sign = -*sign;
		}
		for (std::size_t i = reduced ? 0 : row + 1; i < a.size(); ++i)
		{
			if (i == row || a[i][col] == 0)
				continue;
			Rational f = a[i][col] / a[row][col];
			for (std::size_t j = col; j < a[i].size(); ++j)
				a[i][j] -= f * a[row][j];
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

} // namespace

Rational determinant(RatMatrix a)
{
	std::size_t const n = a.size();
	for (auto const &row : a)
		if (row.size() != n)
			throw InvalidInput("determinant of a non-square matrix");
	int sign = 1;
	auto piv = echelon(a, n, false, &sign);
	if (piv.size() < n)
		return 0;
	Rational d = sign;
	for (std::size_t i = 0; i < n; ++i)
		d *= a[i][i];
	return d;
}

Integer determinant(IntMatrix const &a)
{
	Rational d = determinant(to_rational(a));
	return d.get_num();
}

std::size_t rank(RatMatrix a)
{
	std::size_t cols = a.empty() ? 0 : a[0].size();
	return echelon(a, cols, false).size();
}

std::optional<RatVector> solve(RatMatrix a, RatVector b)
{
	std::size_t const n = a.size();
	if (b.size() != n)
		throw InvalidInput("solve: shape mismatch");
	for (std::size_t i = 0; i < n; ++i)
	{
		if (a[i].size() != n)
			throw InvalidInput("solve: matrix not square");
		a[i].push_back(b[i]);
	}
	auto piv = echelon(a, n, true);
	if (piv.size() < n)
		return std::nullopt;
	RatVector x(n);
	for (std::size_t i = 0; i < n; ++i)
		x[i] = a[i][n] / a[i][i];
	return x;
}

IntVector primitive(IntVector v)
{
	Integer g = 0;
	for (auto const &x : v)
		g = gcd(g, x);
	if (g > 1)
		for (auto &x : v)
			x /= g;
	return v;
}

std::vector<IntVector> integer_kernel(IntMatrix const &a, std::size_t cols)
{
	RatMatrix r = to_rational(a);
	auto piv = echelon(r, cols, true);
	std::vector<bool> is_pivot(cols, false);
	for (auto c : piv)
		is_pivot[c] = true;
	std::vector<IntVector> basis;
	for (std::size_t free = 0; free < cols; ++free)
	{
		if (is_pivot[free])
			continue;
		RatVector x(cols, 0);
		x[free] = 1;
		for (std::size_t i = 0; i < piv.size(); ++i)
			x[piv[i]] = -r[i][free] / r[i][piv[i]];
		Integer l = 1;
		for (auto const &q : x)
			l = lcm(l, Integer(q.get_den()));
		IntVector v(cols);
		for (std::size_t i = 0; i < cols; ++i)
			v[i] = Integer(x[i] * l);
		basis.push_back(primitive(std::move(v)));
	}
	return basis;
}

SmithForm smith_normal_form(IntMatrix const &a)
{
	std::size_t const m = a.size(), n = a.empty() ? 0 : a[0].size();
	SmithForm s{identity_matrix(m), a, identity_matrix(n)};
	auto &d = s.d;
	auto row_add = [&](std::size_t dst, std::size_t src, Integer const &q) { // row_dst -= q row_src
		for (std::size_t j = 0; j < n; ++j)
			d[dst][j] -= q * d[src][j];
		for (std::size_t j = 0; j < m; ++j)
			s.u[dst][j] -= q * s.u[src][j];
	};
	auto col_add = [&](std::size_t dst, std::size_t src, Integer const &q) {
		for (std::size_t i = 0; i < m; ++i)
			d[i][dst] -= q * d[i][src];
		for (std::size_t i = 0; i < n; ++i)
			s.v[i][dst] -= q * s.v[i][src];
	};
	auto swap_rows = [&](std::size_t i, std::size_t j) {
		std::swap(d[i], d[j]);
		std::swap(s.u[i], s.u[j]);
	};
	auto swap_cols = [&](std::size_t i, std::size_t j) {
		for (auto &row : d)
			std::swap(row[i], row[j]);
		for (auto &row : s.v)
			std::swap(row[i], row[j]);
	};

	for (std::size_t t = 0; t < std::min(m, n); ++t)
	{
		for (;;)
		{
			std::size_t pi = m, pj = n;
			for (std::size_t i = t; i < m; ++i)
				for (std::size_t j = t; j < n; ++j)
					if (d[i][j] != 0 && (pi == m || abs(d[i][j]) < abs(d[pi][pj])))
						pi = i, pj = j;
			if (pi == m)
				break;
			swap_rows(t, pi);
			swap_cols(t, pj);
			bool clear = true;
			for (std::size_t i = t + 1; i < m; ++i)
			{
				if (d[i][t] == 0)
					continue;
				Integer q = d[i][t] / d[t][t];
				row_add(i, t, q);
				clear = clear && d[i][t] == 0;
			}
			for (std::size_t j = t + 1; j < n; ++j)
			{
				if (d[t][j] == 0)
					continue;
				Integer q = d[t][j] / d[t][t];
				col_add(j, t, q);
				clear = clear && d[t][j] == 0;
			}
			if (!clear)
				continue;
			std::size_t bad = m;
			for (std::size_t i = t + 1; i < m && bad == m; ++i)
				for (std::size_t j = t + 1; j < n; ++j)
					if (!mpz_divisible_p(d[i][j].get_mpz_t(), d[t][t].get_mpz_t()))
					{
						bad = i;
						break;
					}
			if (bad == m)
				break;
			row_add(t, bad, -1);
		}
		if (d[t][t] < 0)
		{
			for (auto &x : d[t])
				x = -x;
			for (auto &x : s.u[t])
				x = -x;
		}
	}
	return s;
}

} // namespace regk
