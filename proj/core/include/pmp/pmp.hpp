#pragma once

#include "pmp/config.hpp"
#include "pmp/errors.hpp"
#include "pmp/expression.hpp"
#include "pmp/field.hpp"
#include "pmp/geometry.hpp"
#include "pmp/kernels.hpp"
#include "pmp/operators.hpp"
#include "pmp/oracle.hpp"
#include "pmp/parallel.hpp"
#include "pmp/polynomial.hpp"
#include "pmp/quadrature.hpp"
#include "pmp/solver.hpp"
