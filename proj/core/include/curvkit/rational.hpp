#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace curvkit {

/// Exact rational used for transport costs and Jaccard-family curvatures.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p/q", "p", or a finite decimal such as "0.25". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace curvkit
