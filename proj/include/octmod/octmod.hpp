#pragma once

// Umbrella header: exact-arithmetic octonion bimodules, para-linear maps,
// regular composition, Hom/tensor/adjoint constructions, and the seeded
// identity-check catalog built on top of them.

#include <octmod/errors.hpp>
#include <octmod/rational.hpp>
#include <octmod/octonion.hpp>
#include <octmod/matrix.hpp>
#include <octmod/bimodule.hpp>
#include <octmod/paralinear.hpp>
#include <octmod/homalg.hpp>
#include <octmod/tensor.hpp>
#include <octmod/functors.hpp>
#include <octmod/rng.hpp>
#include <octmod/report.hpp>
#include <octmod/serialize.hpp>
#include <octmod/checks.hpp>
