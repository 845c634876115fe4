#pragma once

#include "trop/arith.hpp"
#include "trop/cone.hpp"
#include "trop/cycle.hpp"
#include "trop/cycle_json.hpp"
#include "trop/error.hpp"
#include "trop/fan.hpp"
#include "trop/groebner.hpp"
#include "trop/lattice.hpp"
#include "trop/matrix.hpp"
#include "trop/polynomial.hpp"
#include "trop/simplex.hpp"
#include "trop/tropical.hpp"
