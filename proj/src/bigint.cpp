#include "frob/bigint.hpp"

#include <limits>

#include "frob/error.hpp"

namespace frob {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        throw ResourceLimit("integer " + v.str() + " does not fit in 64 bits");
    return v.convert_to<std::uint64_t>();
}

std::int64_t to_i64(const BigInt& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw ResourceLimit("integer " + v.str() + " does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) { return to_u64(binomial(n, k)); }

}  // namespace frob
