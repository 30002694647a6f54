#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <string>
#include <string_view>

// Under C++20 rewritten comparisons, boost's mixed rational/integer operator==
// (before 1.75) calls itself through the reversed candidate. Exact overloads
// for the integer types used here take precedence over those templates.
namespace boost {
#define BRANCHLAB_RATIONAL_EQ(T)                                                                            \
    inline bool operator==(const rational<long long>& a, T b) { return a.denominator() == 1 && a.numerator() == b; } \
    inline bool operator==(T b, const rational<long long>& a) { return a == b; }                       \
    inline bool operator!=(const rational<long long>& a, T b) { return !(a == b); }                    \
    inline bool operator!=(T b, const rational<long long>& a) { return !(a == b); }
BRANCHLAB_RATIONAL_EQ(int)
BRANCHLAB_RATIONAL_EQ(long)
BRANCHLAB_RATIONAL_EQ(long long)
#undef BRANCHLAB_RATIONAL_EQ
} // namespace boost

namespace branchlab {

using Rational = boost::rational<long long>;

// Always "p/q" with q > 0, e.g. "3/1", "-1/2".
std::string to_string(const Rational& q);

// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline std::size_t hash_value(const Rational& q) {
    std::size_t h = std::hash<long long>{}(q.numerator());
    return h ^ (std::hash<long long>{}(q.denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace branchlab
