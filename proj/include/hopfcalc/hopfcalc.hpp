#pragma once

// Umbrella header: the full calculus plus the verification suite.

#include "hopfcalc/common.hpp"
#include "hopfcalc/coordinate_ring.hpp"
#include "hopfcalc/group_word.hpp"
#include "hopfcalc/james_hopf.hpp"
#include "hopfcalc/lie_idempotent.hpp"
#include "hopfcalc/series_decomp.hpp"
#include "hopfcalc/shuffle_maps.hpp"
#include "hopfcalc/verification.hpp"
