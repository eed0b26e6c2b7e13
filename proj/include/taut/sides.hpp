#pragma once

#include "taut/rational.hpp"

namespace taut {

/// Two exact evaluations of the same quantity along independent routes;
/// every identity check in the library reports its result in this shape.
struct Sides {
    Rat lhs;
    Rat rhs;
    bool equal() const { return lhs == rhs; }
};

}  // namespace taut
