#pragma once

#include <complex>

#include "unif/numerics.hpp"

inline double rel(unif::cplx a, unif::cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
