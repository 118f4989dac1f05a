#pragma once

// Umbrella header: harmonic subsums restricted by two-digit pattern
// occurrence counts, to arbitrary decimal precision.

#include "kempner/bigint.hpp"
#include "kempner/counting.hpp"
#include "kempner/moments.hpp"
#include "kempner/oracle.hpp"
#include "kempner/pattern.hpp"
#include "kempner/precision.hpp"
#include "kempner/rational_gf.hpp"
#include "kempner/real.hpp"
#include "kempner/stieltjes.hpp"
#include "kempner/summation.hpp"

