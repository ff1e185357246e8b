#pragma once

// Umbrella header for the numerical K-theory toolkit.

#include "fano/ak.hpp"
#include "fano/arith.hpp"
#include "fano/bundles.hpp"
#include "fano/chow.hpp"
#include "fano/ktheory.hpp"
#include "fano/lattice.hpp"
#include "fano/registry.hpp"
#include "fano/sod.hpp"
