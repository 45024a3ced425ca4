#pragma once

#include "zeta_orbit/dseries.hpp"
#include "zeta_orbit/exactnum.hpp"
#include "zeta_orbit/io.hpp"
#include "zeta_orbit/matrices.hpp"
#include "zeta_orbit/orbit.hpp"
#include "zeta_orbit/parallel.hpp"
#include "zeta_orbit/poly.hpp"
#include "zeta_orbit/pseries.hpp"
#include "zeta_orbit/rep.hpp"
#include "zeta_orbit/report.hpp"
#include "zeta_orbit/scalar.hpp"
#include "zeta_orbit/verify.hpp"
#include "zeta_orbit/window.hpp"
