#pragma once

/// @file ringlat.hpp
/// @brief Umbrella header for the ringlat library.

#include "ringlat/error.hpp"
#include "ringlat/ring.hpp"
#include "ringlat/poly.hpp"
#include "ringlat/ideal.hpp"
#include "ringlat/construct.hpp"
#include "ringlat/structure.hpp"
#include "ringlat/extension.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/predicates.hpp"
#include "ringlat/minimal.hpp"
#include "ringlat/closures.hpp"
#include "ringlat/crt.hpp"
#include "ringlat/module.hpp"
#include "ringlat/idealization.hpp"
#include "ringlat/combinatorics.hpp"
