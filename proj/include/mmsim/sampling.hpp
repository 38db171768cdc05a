#pragma once

// Random parameter and state generators shared by the property tests and the
// CLI self-check.

#include <mmsim/dynamics.hpp>
#include <mmsim/mass_model.hpp>

#include <random>

namespace mmsim {

using Rng = std::mt19937_64;

double uniform(Rng &rng, double lo, double hi);
Vec3 uniform_vec3(Rng &rng, double lo, double hi);
Vec9 uniform_vec9(Rng &rng, double lo, double hi);

/// Generic valid vehicle: offset stationary mass, full SPD inertia, added
/// mass with a non-zero linear/angular coupling block.
VehicleParams random_params(Rng &rng);

/// Remus-like vehicle: perturbed published values, r_s = 0, diagonal added mass.
VehicleParams random_remus_like_params(Rng &rng);

/// Every state component uniform in [lo, hi]; pitch additionally kept inside +-1.4 rad.
SimState random_state(Rng &rng, double lo = -2.0, double hi = 2.0);

} // namespace mmsim
