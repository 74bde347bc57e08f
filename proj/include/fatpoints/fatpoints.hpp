#pragma once

#include "bounds.hpp"
#include "cremona.hpp"
#include "degeneration.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "interpolation.hpp"
#include "lattice.hpp"
#include "modular.hpp"
#include "rational_linalg.hpp"
#include "system_syntax.hpp"
