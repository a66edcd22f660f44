#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace regk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (CLI exit code 2).
class InvalidInput : public Error {
public:
	using Error::Error;
};

/// A mathematical check failed on well-formed input (CLI exit code 1).
class VerificationFailure : public Error {
public:
	using Error::Error;
};

/// An identity guaranteed by theory did not hold; indicates a bug (CLI exit code 3).
class InternalInconsistency : public Error {
public:
	using Error::Error;
};

/// Evaluates fn(0..n-1) on up to `threads` workers. Results are stored by
/// index, so the output never depends on scheduling. The exception of the
/// lowest failing index is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn &&fn)
    -> std::vector<std::invoke_result_t<Fn &, std::size_t>>
{
	using R = std::invoke_result_t<Fn &, std::size_t>;
	std::vector<std::optional<R>> slots(n);
	std::vector<std::exception_ptr> errors(n);
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i = next++; i < n; i = next++)
		{
			try
			{
				slots[i].emplace(fn(i));
			}
			catch (...)
			{
				errors[i] = std::current_exception();
			}
		}
	};
	unsigned workers = threads == 0 ? 1 : threads;
	if (workers > n)
		workers = static_cast<unsigned>(n);
	if (workers <= 1)
		worker();
	else
	{
		std::vector<std::jthread> pool;
		pool.reserve(workers);
		for (unsigned t = 0; t < workers; ++t)
			pool.emplace_back(worker);
	}
	for (auto &e : errors)
		if (e)
			std::rethrow_exception(e);
	std::vector<R> out;
	out.reserve(n);
	for (auto &s : slots)
		out.push_back(std::move(*s));
	return out;
}

} // namespace regk
