#pragma once

#include "curveplan/baselines.hpp"
#include "curveplan/bench.hpp"
#include "curveplan/dccppa.hpp"
#include "curveplan/geometry.hpp"
#include "curveplan/plan_result.hpp"
#include "curveplan/render.hpp"
#include "curveplan/rng.hpp"
#include "curveplan/scenario.hpp"
#include "curveplan/serialization.hpp"
