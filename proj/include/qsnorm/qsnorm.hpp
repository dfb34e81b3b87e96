#pragma once

#include "params.hpp"
#include "grid.hpp"
#include "radial_field.hpp"
#include "fiber_map.hpp"
#include "dual_transform.hpp"
#include "ode.hpp"
#include "shooting.hpp"
#include "curves.hpp"
#include "direct_minimizer.hpp"
#include "profile_io.hpp"
