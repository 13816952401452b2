#pragma once

#include <random>

#include "hypdisk/hexagon.hpp"

namespace hypdisk {

using Rng = std::mt19937_64;

// Uniform point in the disk of radius rmax about the origin.
std::complex<double> random_disk_point(Rng& rng, double rmax = 0.999);

// Random orientation-preserving disk isometry: rotation composed with a
// translation moving a point of modulus at most rmax.
MobiusTransform random_disk_isometry(Rng& rng, double rmax = 0.8);

// Six sorted uniform angles, rejected until all cyclic gaps exceed 1e-3 rad.
std::array<double, 6> random_hexagon_angles(Rng& rng);

IdealHexagon random_hexagon(Rng& rng);

// Point-symmetric hexagon (theta_{k+3} = theta_k + pi) pushed by a random
// disk isometry.
IdealHexagon random_symmetric_hexagon(Rng& rng);

// Positive sizes log-uniform in [1/scale, scale].
SizeVector random_sizes(Rng& rng, double scale = 8.0);

// Chain over random hexagon angles with random s1; generally non-closing.
CircleChain random_chain(Rng& rng);

} // namespace hypdisk
