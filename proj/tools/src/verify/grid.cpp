#include <eiskern_verify/grid.hpp>

#include <cmath>
#include <random>

namespace eiskern::verify {

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

bool respects_guard(Complex z, double guard) {
  const double dre = std::abs(Complex{z.real() - std::round(z.real()), z.imag()});
  const double dim = std::abs(Complex{z.real(), z.imag() - std::round(z.imag())});
  return dre >= guard && dim >= guard;
}

std::vector<Complex> jittered_grid(const Grid& g, std::uint64_t seed, double guard) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> out;
  const int nre = static_cast<int>(std::floor((g.re_max - g.re_min) / g.step + 1e-9)) + 1;
  const int nim = static_cast<int>(std::floor((g.im_max - g.im_min) / g.step + 1e-9)) + 1;
  for (int i = 0; i < nre; ++i) {
    for (int k = 0; k < nim; ++k) {
      const Complex lattice{g.re_min + i * g.step, g.im_min + k * g.step};
      // Draw both offsets unconditionally so later points do not depend on
      // which earlier points fell back.
      const double dx = (unit_uniform(rng()) - 0.5) * 0.5 * g.step;
      const double dy = (unit_uniform(rng()) - 0.5) * 0.5 * g.step;
      const Complex z = lattice + Complex{dx, dy};
      if (respects_guard(z, guard))
        out.push_back(z);
      else if (respects_guard(lattice, guard))
        out.push_back(lattice);
    }
  }
  return out;
}

}  // namespace eiskern::verify
