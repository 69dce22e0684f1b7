#pragma once

#include "toricdimer/circulant.hpp"
#include "toricdimer/error.hpp"
#include "toricdimer/families.hpp"
#include "toricdimer/json_io.hpp"
#include "toricdimer/kasteleyn.hpp"
#include "toricdimer/lattice.hpp"
#include "toricdimer/laurent.hpp"
#include "toricdimer/matchings.hpp"
#include "toricdimer/newton.hpp"
#include "toricdimer/torus_graph.hpp"
#include "toricdimer/vec2.hpp"
