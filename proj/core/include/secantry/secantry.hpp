#pragma once

// Convenience umbrella for the whole library.

#include "secantry/arith.hpp"
#include "secantry/chains.hpp"
#include "secantry/counts.hpp"
#include "secantry/errors.hpp"
#include "secantry/ramify.hpp"
#include "secantry/secant.hpp"
#include "secantry/series.hpp"
