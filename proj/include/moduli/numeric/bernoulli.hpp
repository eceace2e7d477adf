#pragma once

#include "moduli/numeric/rational.hpp"

namespace moduli::numeric {

// B_m with B_1 = -1/2. Backed by a process-wide grow-only table.
Rational bernoulli(unsigned m);

}  // namespace moduli::numeric
