#pragma once

// Comparison formulation in which the stationary mass is lumped at the
// instantaneous centre of gravity (r_s replaced by r_g), with the same
// external forces and gravity compensation as the Newton-Euler model.
//
// The Coriolis term is assembled directly from the energy gradients and the
// accelerations come from a pivoted LU solve, so this path shares only the
// mass-matrix builders with state_derivative().

#include <mmsim/dynamics.hpp>

namespace mmsim {

StateDerivative woolsey_state_derivative(const VehicleParams &params, const HydrostaticEnv &env,
                                         const SimState &state, const Vec9 &tau,
                                         const ModelOptions &options = {});

} // namespace mmsim
