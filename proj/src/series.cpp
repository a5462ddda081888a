#include "frob/series.hpp"

#include <algorithm>
#include <sstream>

#include "frob/error.hpp"

namespace frob {

TruncatedSeries::TruncatedSeries(std::vector<BigInt> c, bool term) : coeffs(std::move(c)), terminated(term) {
    for (const auto& v : coeffs)
        if (v < 0) throw InvalidParams("Hilbert series coefficient must be nonnegative, got " + v.str());
}

BigInt TruncatedSeries::at(int e) const {
    if (e >= 0 && e < static_cast<int>(coeffs.size())) return coeffs[e];
    if (e >= 0 && terminated) return 0;
    throw IncomparableTruncation("coefficient of t^" + std::to_string(e) + " is beyond truncation " +
                                 std::to_string(trunc()));
}

int TruncatedSeries::first_zero() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] == 0) return static_cast<int>(i);
    return -1;
}

DegreeList::DegreeList(int n_, std::vector<int> degs) : n(n_), degrees(std::move(degs)) {
    if (n < 1) throw InvalidParams("need at least one variable");
    for (int d : degrees)
        if (d < 1) throw InvalidParams("generator degrees must be positive");
}

DegreeList DegreeList::uniform(int n, int d, int k) {
    if (k < 0) throw InvalidParams("negative generator count");
    return DegreeList(n, std::vector<int>(static_cast<std::size_t>(k), d));
}

SignedSeries expand_rational(const DegreeList& spec, int trunc) {
    if (trunc < 0) throw InvalidParams("truncation must be nonnegative");
    const auto len = static_cast<std::size_t>(trunc) + 1;
    // Numerator prod (1 - t^{d_i}), truncated.
    std::vector<BigInt> num(len, 0);
    num[0] = 1;
    for (int d : spec.degrees) {
        for (std::size_t e = len; e-- > static_cast<std::size_t>(d);) num[e] -= num[e - d];
    }
    // Dividing by (1 - t) is a prefix sum; do it n times.
    for (int i = 0; i < spec.n; ++i)
        for (std::size_t e = 1; e < len; ++e) num[e] += num[e - 1];
    return SignedSeries{std::move(num)};
}

TruncatedSeries ceiling(const SignedSeries& f) {
    std::vector<BigInt> out(f.coeffs.size(), 0);
    bool terminated = false;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] <= 0) {
            terminated = true;
            break;
        }
        out[i] = f.coeffs[i];
    }
    return TruncatedSeries(std::move(out), terminated);
}

TruncatedSeries conjectured_series(const DegreeList& spec, int trunc) { return ceiling(expand_rational(spec, trunc)); }

Ordering lex_compare(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int ft = f.trunc(), gt = g.trunc();
    if (ft != gt && !(ft < gt ? f.terminated : g.terminated))
        throw IncomparableTruncation("series truncated at t^" + std::to_string(ft) + " and t^" +
                                     std::to_string(gt) + " cannot be compared");
    const int top = std::max(ft, gt);
    for (int e = 0; e <= top; ++e) {
        BigInt a = f.at(e), b = g.at(e);
        if (a != b) return a > b ? Ordering::Greater : Ordering::Less;
    }
    return Ordering::Equal;
}

int default_truncation(const DegreeList& spec, int cap) {
    if (cap < 1) throw InvalidParams("truncation cap must be at least 1");
    // The coefficients only depend on lower degrees, so expanding once to
    // cap and scanning is the same as expanding incrementally.
    const TruncatedSeries s = conjectured_series(spec, cap);
    const int zero = s.first_zero();
    if (zero >= 0) return std::min(zero + 1, cap);
    if (spec.k() > spec.n)
        throw CapExceeded("conjectured series does not terminate by t^" + std::to_string(cap) +
                          "; raise the truncation cap");
    return cap;
}

namespace {

template <class Coeffs>
std::string ascii_terms(const Coeffs& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        BigInt c = coeffs[e];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0 || c != 1) os << c;
        if (e >= 1) os << 't';
        if (e >= 2) os << '^' << e;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace

std::string to_ascii(const TruncatedSeries& s) {
    std::string out = ascii_terms(s.coeffs);
    if (!s.terminated) out += " + O(t^" + std::to_string(s.trunc() + 1) + ")";
    return out;
}

std::string to_ascii(const SignedSeries& s) {
    return ascii_terms(s.coeffs) + " + O(t^" + std::to_string(s.trunc() + 1) + ")";
}

std::string to_json_array(const std::vector<BigInt>& coeffs) {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += coeffs[i].str();
    }
    out += ']';
    return out;
}

}  // namespace frob
