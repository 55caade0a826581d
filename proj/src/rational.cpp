#include "dyadic/rational.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

#include "dyadic/error.hpp"

namespace dyadic {

double to_double(const Rational& r)
{
    return static_cast<double>(static_cast<long double>(r.numerator()) /
                               static_cast<long double>(r.denominator()));
}

std::string format_number(double value)
{
    if (value == 0.0)
        return "0";  // avoids "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_number(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return format_number(to_double(r));
}

std::string format_number(const MaybeRational& r)
{
    return r ? format_number(*r) : std::string("undefined");
}

Rational parse_decimal(std::string_view text)
{
    auto fail = [&] {
        throw Error(ErrorKind::parse, "not a decimal number: '" + std::string(text) + "'");
    };
    if (text.empty())
        fail();

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::int64_t digits = 0;
    int scale = 0;  // power of ten to divide by
    bool seen_digit = false, seen_point = false;
    constexpr std::int64_t limit = std::numeric_limits<std::int64_t>::max() / 10;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (digits > limit)
                fail();
            digits = digits * 10 + (c - '0');
            seen_digit = true;
            if (seen_point)
                ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            fail();
        }
    }
    if (!seen_digit)
        fail();

    int exponent = 0;
    if (i < text.size()) {
        std::string exp_text(text.substr(i + 1));
        if (exp_text.empty())
            fail();
        std::size_t used = 0;
        try {
            exponent = std::stoi(exp_text, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != exp_text.size() || exponent > 18 || exponent < -18)
            fail();
    }
    scale -= exponent;

    auto pow10 = [&](int p) {
        std::int64_t v = 1;
        for (int k = 0; k < p; ++k) {
            if (v > limit)
                fail();
            v *= 10;
        }
        return v;
    };
    Rational value;
    if (scale >= 0) {
        value = Rational(digits, pow10(scale));
    } else {
        std::int64_t mul = pow10(-scale);
        if (digits != 0 && digits > std::numeric_limits<std::int64_t>::max() / mul)
            fail();
        value = Rational(digits * mul);
    }
    return negative ? -value : value;
}

} // namespace dyadic
