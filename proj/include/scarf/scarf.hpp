#pragma once
// Umbrella header for the whole library.

#include "cli.hpp"
#include "core.hpp"
#include "io.hpp"
#include "nu.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "quadrature.hpp"
#include "rootfind.hpp"
#include "spectra.hpp"
#include "specfun.hpp"
#include "wavefunction.hpp"
