#pragma once

#include "complex.hpp"
#include "curvature.hpp"
#include "cycles.hpp"
#include "disc.hpp"
#include "errors.hpp"
#include "filling.hpp"
#include "generators.hpp"
#include "hyperbolicity.hpp"
#include "io.hpp"
#include "report.hpp"
