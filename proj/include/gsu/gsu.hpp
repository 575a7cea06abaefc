#pragma once

#include "gsu/error.hpp"
#include "gsu/format.hpp"
#include "gsu/generators.hpp"
#include "gsu/graph.hpp"
#include "gsu/io.hpp"
#include "gsu/mfpt.hpp"
#include "gsu/rng.hpp"
#include "gsu/searchers.hpp"
#include "gsu/sweep.hpp"
#include "gsu/theory.hpp"
#include "gsu/uncertainty.hpp"
