#pragma once

#include "gn/groebner.hpp"

namespace gn {

// I : x_var^infinity, computed by eliminating an auxiliary inverse variable t
// from I + (t*x_var - 1) under a block order with t in front. Returns the
// ideal given by its reduced Groebner basis.
Ideal colonVariableInfinity(const Ideal& I, int var, const Ring& R);

// A intersect B via the auxiliary-variable trick on t*A + (1-t)*B.
Ideal intersectIdeals(const Ideal& A, const Ideal& B, const Ring& R);

// Saturation with respect to the irrelevant maximal ideal:
// intersection over all variables of I : x_i^infinity.
Ideal saturate(const Ideal& I, const Ring& R);

}  // namespace gn
