#pragma once

#include "trusslab/algfile.hpp"
#include "trusslab/catalog.hpp"
#include "trusslab/coalgebra.hpp"
#include "trusslab/cocycle.hpp"
#include "trusslab/error.hpp"
#include "trusslab/hopf_modules.hpp"
#include "trusslab/hopf_truss.hpp"
#include "trusslab/linmap.hpp"
#include "trusslab/modules.hpp"
#include "trusslab/report.hpp"
#include "trusslab/scalar.hpp"
#include "trusslab/set_truss.hpp"
