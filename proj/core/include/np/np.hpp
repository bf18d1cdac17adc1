#pragma once

#include "np/catalog.hpp"
#include "np/decompose.hpp"
#include "np/diagonal.hpp"
#include "np/error.hpp"
#include "np/exactmath.hpp"
#include "np/lattice.hpp"
#include "np/matrix.hpp"
#include "np/polygon.hpp"
#include "np/polytope.hpp"
#include "np/primes.hpp"
#include "np/rational.hpp"
