#pragma once

#include "toric/blowup_vector.hpp"
#include "toric/canonical.hpp"
#include "toric/census.hpp"
#include "toric/chop.hpp"
#include "toric/errors.hpp"
#include "toric/lattice.hpp"
#include "toric/polygon.hpp"
#include "toric/rational.hpp"
