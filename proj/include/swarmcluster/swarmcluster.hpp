#pragma once

#include "clustering.hpp"
#include "data.hpp"
#include "harness.hpp"
#include "numerics.hpp"
#include "objectives.hpp"
#include "swarm.hpp"
