#pragma once

/// Umbrella header.

#include "arith.hpp"
#include "core.hpp"
#include "logexp.hpp"
#include "matrices.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "polya.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "schur.hpp"
#include "sequences.hpp"
