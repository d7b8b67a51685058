#pragma once

// Umbrella header: tail bounds for sums of k values sampled without
// replacement from a zero-sum population, with the exact hypergeometric and
// majorization machinery needed to state, compare, and verify them.

#include "swor/bound_result.hpp"
#include "swor/bounds.hpp"
#include "swor/comparison.hpp"
#include "swor/errors.hpp"
#include "swor/exact_dist.hpp"
#include "swor/hypergeom.hpp"
#include "swor/io.hpp"
#include "swor/majorization.hpp"
#include "swor/monte_carlo.hpp"
#include "swor/numeric.hpp"
#include "swor/population.hpp"
#include "swor/verify.hpp"
