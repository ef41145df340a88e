#pragma once

// Umbrella header: pairs of orthogonal projections over R, C and H --
// principal angles and vectors, the two-projection canonical form, and
// optimal commuting approximants to almost-commuting projections.

#include "amat/almost_commuting.hpp"
#include "amat/canonical.hpp"
#include "amat/eigensolve.hpp"
#include "amat/embedding.hpp"
#include "amat/errors.hpp"
#include "amat/experiment.hpp"
#include "amat/kramers.hpp"
#include "amat/linsolve.hpp"
#include "amat/matrix.hpp"
#include "amat/matrix_io.hpp"
#include "amat/polar.hpp"
#include "amat/principal_vectors.hpp"
#include "amat/projection.hpp"
#include "amat/quaternion.hpp"
#include "amat/random_pairs.hpp"
#include "amat/scalar.hpp"
#include "amat/spectral.hpp"
#include "amat/svd.hpp"
