#pragma once

#include "alpha_sequence.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "extract.hpp"
#include "find_trans.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "patterns.hpp"
#include "rational.hpp"
#include "schedule.hpp"
#include "tournament.hpp"
#include "trace.hpp"
