#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>

namespace atcert {

// Exact arithmetic throughout: Eulerian counts can exceed machine words once
// the edge cap is raised, and the discharging bounds are rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Rng = std::mt19937_64;

// Enumeration caps. diff/poly refuse above diff_edge_cap, at_number above
// at_edge_cap (both overridable from the CLI).
struct Caps {
    int diff_edge_cap = 32;
    int at_edge_cap = 20;
};

inline std::string rational_str(const Rational& r) {
    return r.str();
}

// FNV-1a, used for input digests in reports.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v);

}  // namespace atcert
