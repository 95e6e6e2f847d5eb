#pragma once

// Umbrella header.

#include "tightsrg/arith.hpp"
#include "tightsrg/design.hpp"
#include "tightsrg/errors.hpp"
#include "tightsrg/graph.hpp"
#include "tightsrg/graph6.hpp"
#include "tightsrg/m22.hpp"
#include "tightsrg/nonexistence.hpp"
#include "tightsrg/report.hpp"
#include "tightsrg/search.hpp"
#include "tightsrg/srg.hpp"
