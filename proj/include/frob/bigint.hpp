#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace frob {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k) via the multiplicative recurrence C(n, i) = C(n, i-1) * (n-i+1) / i;
// every intermediate value is itself a binomial coefficient. Returns 0 when
// k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// Same, for callers that need a machine-word result. Throws ResourceLimit
// when the value does not fit.
std::uint64_t binomial_u64(std::int64_t n, std::int64_t k);

std::uint64_t to_u64(const BigInt& v);
std::int64_t to_i64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace frob
