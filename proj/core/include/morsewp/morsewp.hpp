#pragma once

#include "morsewp/analysis.hpp"
#include "morsewp/coherent.hpp"
#include "morsewp/error.hpp"
#include "morsewp/morse.hpp"
#include "morsewp/phasespace.hpp"
#include "morsewp/revival.hpp"
#include "morsewp/specfun.hpp"
