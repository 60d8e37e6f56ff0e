#pragma once

#include <eiskern_verify/config.hpp>

#include <cstdint>
#include <vector>

namespace eiskern::verify {

// Lattice points of the grid, each moved by a seeded uniform offset in
// [-step/4, step/4] per coordinate. A jittered point closer than `guard` to Z
// or to iZ falls back to its lattice point; lattice points that violate the
// guard themselves are dropped.
std::vector<Complex> jittered_grid(const Grid& g, std::uint64_t seed, double guard = 0.05);

// Uniform [0, 1) from the top 53 bits of a 64-bit draw.
double unit_uniform(std::uint64_t bits);

bool respects_guard(Complex z, double guard);

}  // namespace eiskern::verify
