#pragma once

/// @file modsupp.hpp
/// @brief Umbrella header for the library (everything except the CLI).

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/module/ambient.hpp"
#include "modsupp/module/code.hpp"
#include "modsupp/module/invariants.hpp"
#include "modsupp/module/submodules.hpp"
#include "modsupp/monomial/betti.hpp"
#include "modsupp/monomial/code_ideal.hpp"
#include "modsupp/monomial/ideal.hpp"
#include "modsupp/ring/chain_factor.hpp"
#include "modsupp/ring/ring.hpp"
#include "modsupp/support/check.hpp"
#include "modsupp/support/support.hpp"
#include "modsupp/weights/estimate.hpp"
#include "modsupp/weights/generalized.hpp"
#include "modsupp/weights/minimal.hpp"
#include "modsupp/weights/structure.hpp"
