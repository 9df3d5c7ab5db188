#pragma once

// Umbrella header.

#include "torusync/basins.hpp"
#include "torusync/certify.hpp"
#include "torusync/conjecture.hpp"
#include "torusync/fixed_points.hpp"
#include "torusync/interval.hpp"
#include "torusync/io.hpp"
#include "torusync/lyapunov.hpp"
#include "torusync/map.hpp"
#include "torusync/regions.hpp"
#include "torusync/rng.hpp"
#include "torusync/segments.hpp"
#include "torusync/symmetry.hpp"
#include "torusync/torus.hpp"
