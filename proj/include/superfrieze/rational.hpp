#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "superfrieze/errors.hpp"

namespace superfrieze {

/// Exact arbitrary-precision rational coefficient type.
using Rat = boost::multiprecision::cpp_rational;

/// Renders a rational as "p" or "p/q" with no decimal point.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" (optional leading sign). Throws InputError on junk.
inline Rat rat_from_string(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in rational '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw InputError("malformed rational '" + s + "'");
    }
}

} // namespace superfrieze
