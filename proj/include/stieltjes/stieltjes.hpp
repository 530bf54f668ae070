#pragma once

#include "stieltjes/core.hpp"
#include "stieltjes/function_spec.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/limits.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/singular.hpp"
#include "stieltjes/transforms.hpp"
#include "stieltjes/zoo.hpp"
