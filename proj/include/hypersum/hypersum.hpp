#pragma once

// Exact and symbolic evaluation of Euler-type sums of generalized
// hyperharmonic numbers: exact rational/series arithmetic, Stirling and Bell
// sequences, the hyperharmonic number family, a zeta-value polynomial
// algebra with MZV reduction, closed forms for the S/W sum families, and a
// high-precision numeric oracle that cross-checks every closed form.

#include "hypersum/rational.hpp"
#include "hypersum/series.hpp"
#include "hypersum/sequences.hpp"
#include "hypersum/hyperharmonic.hpp"
#include "hypersum/zeta_poly.hpp"
#include "hypersum/mzv.hpp"
#include "hypersum/euler_sums.hpp"
#include "hypersum/numeric.hpp"
#include "hypersum/json_io.hpp"
