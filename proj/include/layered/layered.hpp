#pragma once

// Umbrella header for the layered tropical algebra kernel.

#include "layered/calculus.hpp"
#include "layered/classical.hpp"
#include "layered/error.hpp"
#include "layered/factorization.hpp"
#include "layered/layered_scalar.hpp"
#include "layered/layering_map.hpp"
#include "layered/poly.hpp"
#include "layered/rational.hpp"
#include "layered/resultant.hpp"
#include "layered/sorting_semiring.hpp"
#include "layered/text.hpp"
