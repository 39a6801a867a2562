#pragma once

// Umbrella header: the whole library in one include.

#include "cyclotopo/numtheory.hpp"
#include "cyclotopo/exactlinalg.hpp"
#include "cyclotopo/polynomial.hpp"
#include "cyclotopo/complex.hpp"
#include "cyclotopo/duality.hpp"
#include "cyclotopo/verify.hpp"
#include "cyclotopo/io.hpp"
