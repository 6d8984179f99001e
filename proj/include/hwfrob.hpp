#pragma once

#include "hwfrob/error.hpp"
#include "hwfrob/gfp.hpp"
#include "hwfrob/monomial.hpp"
#include "hwfrob/polynomial.hpp"
#include "hwfrob/freemod.hpp"
#include "hwfrob/resolution.hpp"
#include "hwfrob/lifting.hpp"
#include "hwfrob/fpmatrix.hpp"
#include "hwfrob/cohomology.hpp"
#include "hwfrob/koszul.hpp"
#include "hwfrob/frobenius.hpp"
#include "hwfrob/oracles.hpp"
#include "hwfrob/polyparse.hpp"
#include "hwfrob/report_io.hpp"
