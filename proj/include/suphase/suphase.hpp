#pragma once

#include "suphase/complementarity.hpp"
#include "suphase/gammareal.hpp"
#include "suphase/linalg.hpp"
#include "suphase/polarphase.hpp"
#include "suphase/repmatrix.hpp"
#include "suphase/verify.hpp"
#include "suphase/weightspace.hpp"
