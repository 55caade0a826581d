#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74 workaround: rational == integer recurses under C++20 rewriting.
namespace boost {

#define DYADIC_RATIONAL_EQ(T)                                                         \
    inline bool operator==(const rational<std::int64_t>& a, T b)                      \
    {                                                                                 \
        return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b); \
    }                                                                                 \
    inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }

DYADIC_RATIONAL_EQ(int)
DYADIC_RATIONAL_EQ(long)
DYADIC_RATIONAL_EQ(long long)
DYADIC_RATIONAL_EQ(unsigned)

#undef DYADIC_RATIONAL_EQ

} // namespace boost

namespace dyadic {

using Rational = boost::rational<std::int64_t>;

// Undefined quantities (e.g. D when the expected count is zero) are nullopt.
using MaybeRational = std::optional<Rational>;

double to_double(const Rational& r);

// Decimal rendering with 12 significant digits, '.' separator.
std::string format_number(double value);
std::string format_number(const Rational& r);
std::string format_number(const MaybeRational& r);  // "undefined" when empty

// Exact parse of a plain decimal literal such as "0.9" or "6" or "1e-1".
Rational parse_decimal(std::string_view text);

} // namespace dyadic
