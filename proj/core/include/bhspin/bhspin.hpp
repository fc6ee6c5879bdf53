#pragma once

#include "bhspin/config.hpp"
#include "bhspin/entanglement.hpp"
#include "bhspin/errors.hpp"
#include "bhspin/linalg.hpp"
#include "bhspin/params.hpp"
#include "bhspin/spectrum.hpp"
#include "bhspin/sweep.hpp"
#include "bhspin/thermo.hpp"
