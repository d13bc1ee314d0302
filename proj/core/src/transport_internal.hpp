#pragma once

#include "curvkit/transport.hpp"

namespace curvkit::detail {

/// Shape, sign and balance checks shared by both solvers. Throws std::invalid_argument.
void validate(const TransportInstance& t);

}  // namespace curvkit::detail
