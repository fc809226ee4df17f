#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "barx/errors.hpp"

namespace barx {

/* Ground field: exact rationals with arbitrary-precision integer parts.
 * cpp_rational keeps values canonical (reduced, positive denominator), which
 * is exactly the invariant we need; nothing here ever rounds. */
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/* Accepts "p", "-p", "p/q". */
inline Rat rat_from_string(const std::string& s)
{
    if (s.empty())
        throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational literal '" + s + "': " + e.what());
    }
}

inline Rat rat_half() { return Rat(1, 2); }

} // namespace barx
