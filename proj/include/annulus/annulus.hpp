#pragma once

// Umbrella header for the annulus m-cluster library.

#include "annulus/config.hpp"
#include "annulus/diagonal.hpp"
#include "annulus/crossing.hpp"
#include "annulus/errors.hpp"
#include "annulus/faces.hpp"
#include "annulus/angulation.hpp"
#include "annulus/quiver.hpp"
#include "annulus/symmetry.hpp"
#include "annulus/mutation.hpp"
#include "annulus/factor.hpp"
#include "annulus/mutclass.hpp"
#include "annulus/diagcat.hpp"
#include "annulus/json_io.hpp"
#include "annulus/properties.hpp"
