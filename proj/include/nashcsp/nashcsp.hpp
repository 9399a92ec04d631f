#pragma once

// Convenience header pulling in the whole library.

#include "nashcsp/error.hpp"
#include "nashcsp/payoff.hpp"
#include "nashcsp/game.hpp"
#include "nashcsp/structure.hpp"
#include "nashcsp/relation.hpp"
#include "nashcsp/csp.hpp"
#include "nashcsp/decomposition.hpp"
#include "nashcsp/solver.hpp"
#include "nashcsp/strong.hpp"
#include "nashcsp/formula.hpp"
#include "nashcsp/oracle.hpp"
#include "nashcsp/generators.hpp"
#include "nashcsp/io.hpp"
