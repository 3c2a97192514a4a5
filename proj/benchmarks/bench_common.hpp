#pragma once

#include <photonwf/modes.hpp>

#include <numbers>
#include <random>

namespace photonwf::bench {

inline const Vec3 kBox{2.0 * std::numbers::pi, 2.0 * std::numbers::pi, 2.0 * std::numbers::pi};

inline AmplitudeSet random_amplitudes(std::size_t count, int max_abs, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> un(-max_abs, max_abs);
  std::uniform_int_distribution<int> ul(0, 2);
  std::uniform_real_distribution<double> ua(-1.0, 1.0);
  const int lambdas[3] = {1, -1, 0};
  AmplitudeSet amps(kBox);
  while (amps.size() < count) {
    std::array<int, 3> n{un(rng), un(rng), un(rng)};
    if (n[0] == 0 && n[1] == 0 && n[2] == 0) continue;
    const ModeKey key{n, lambdas[ul(rng)]};
    amps.set(key, cplx(ua(rng), ua(rng)), cplx(ua(rng), ua(rng)), key.lambda == 0);
  }
  return amps;
}

}  // namespace photonwf::bench
