#pragma once

#include "densitygeom/chamber.hpp"
#include "densitygeom/config.hpp"
#include "densitygeom/entropy.hpp"
#include "densitygeom/errors.hpp"
#include "densitygeom/invariants.hpp"
#include "densitygeom/states.hpp"
#include "densitygeom/su_basis.hpp"
