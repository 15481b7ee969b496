#pragma once

#include "mopquad/catalog.hpp"
#include "mopquad/double_double.hpp"
#include "mopquad/eigensolver.hpp"
#include "mopquad/error.hpp"
#include "mopquad/flops.hpp"
#include "mopquad/hessenberg.hpp"
#include "mopquad/integrate.hpp"
#include "mopquad/oracle.hpp"
#include "mopquad/quadrature.hpp"
#include "mopquad/special.hpp"
#include "mopquad/tridiag.hpp"
#include "mopquad/weights.hpp"
