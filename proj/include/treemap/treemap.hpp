#pragma once

#include "geometry.hpp"
#include "hierarchy.hpp"
#include "squarified.hpp"
#include "plus.hpp"
#include "metrics.hpp"
#include "bench.hpp"
#include "svg.hpp"
#include "json_io.hpp"
