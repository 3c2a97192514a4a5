#include <doctest.h>

#include <photonwf/symmetry.hpp>

#include "oracles.hpp"

#include <random>

using namespace photonwf;

namespace {

double amp_diff(const AmplitudeSet& a, const AmplitudeSet& b) {
  double r = 0.0;
  for (const auto& [key, amp] : a.entries()) {
    const ModeAmplitude o = b.get(key);
    r = std::max({r, std::abs(amp.a - o.a), std::abs(amp.b - o.b)});
  }
  for (const auto& [key, amp] : b.entries()) {
    const ModeAmplitude o = a.get(key);
    r = std::max({r, std::abs(amp.a - o.a), std::abs(amp.b - o.b)});
  }
  return r;
}

}  // namespace

TEST_CASE("parity is an involution on both forms") {
  std::mt19937_64 rng(51);
  const AmplitudeSet amps = oracle::random_amplitudes(rng, 6, 3);
  CHECK(amp_diff(parity(parity(amps)), amps) == 0.0);

  GridSpec grid{{8, 8, 8}, oracle::kUnitBox};
  const FieldGrid f = synthesize_field(amps, grid, 0.4);
  CHECK(oracle::max_diff(parity(parity(f)), f) == 0.0);
}

TEST_CASE("parity of a uniform E field follows the beta0 sign pattern") {
  GridSpec grid{{4, 4, 4}, {1, 1, 1}};
  const std::int64_t n = grid.sites();
  std::vector<double> e(std::size_t(3 * n), 0.3), b(std::size_t(3 * n), -0.8);
  const FieldGrid f = from_real_fields(e, b, grid);
  const FieldGrid pf = parity(f);
  for (std::int64_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) {
      CHECK(pf.at(c, i) == f.at(c, i));        // upper block +
      CHECK(pf.at(c + 3, i) == -f.at(c + 3, i));  // lower block -
    }
}

TEST_CASE("printed amplitude maps") {
  AmplitudeSet amps(oracle::kUnitBox);
  amps.set(ModeKey{{0, 0, 1}, 1}, cplx(1.0, 0.0), cplx(0.0, 2.0));
  amps.set(ModeKey{{0, 2, 0}, 0}, cplx(0.5, 0.5), cplx(-1.0, 0.0), true);

  SUBCASE("parity: a(k,l) -> a(-k,l), b -> -b(-k,l)") {
    const AmplitudeSet p = parity(amps);
    CHECK(p.get(ModeKey{{0, 0, -1}, 1}).a == cplx(1.0, 0.0));
    CHECK(p.get(ModeKey{{0, 0, -1}, 1}).b == cplx(0.0, -2.0));
    CHECK(p.get(ModeKey{{0, -2, 0}, 0}).a == cplx(0.5, 0.5));
  }
  SUBCASE("time reversal: helicity swap, lambda = 0 fixed point") {
    const AmplitudeSet t = time_reversal(amps);
    CHECK(t.get(ModeKey{{0, 0, -1}, -1}).a == cplx(1.0, 0.0));
    CHECK(t.get(ModeKey{{0, 0, -1}, -1}).b == cplx(0.0, 2.0));
    CHECK(t.get(ModeKey{{0, 2, 0}, 0}).a == cplx(0.5, 0.5));  // fixed point
    CHECK(amp_diff(time_reversal(t), amps) == 0.0);           // T^2 = id
  }
  SUBCASE("dual: pure-photon set maps to pure-dual-photon set") {
    AmplitudeSet photon(oracle::kUnitBox);
    photon.set(ModeKey{{1, 0, 0}, 1}, cplx(0.7, -0.1), 0.0);
    const AmplitudeSet d = dual(photon);
    for (const auto& [key, amp] : d.entries()) CHECK(amp.a == cplx(0.0));
    CHECK(d.get(ModeKey{{1, 0, 0}, -1}).b == -cplx(0.7, -0.1));
  }
  SUBCASE("dual^4 = id on amplitudes") {
    const AmplitudeSet d4 = dual(dual(dual(dual(amps))));
    CHECK(amp_diff(d4, amps) == 0.0);
  }
}

TEST_CASE("dual is an anti-involution on fields: dual(dual(psi)) = -psi") {
  std::mt19937_64 rng(52);
  GridSpec grid{{8, 8, 8}, oracle::kUnitBox};
  const FieldGrid f = synthesize_field(oracle::random_amplitudes(rng, 5, 3), grid, 0.2);
  FieldGrid neg = f;
  for (auto& x : neg.data) x = -x;
  CHECK(oracle::max_diff(dual(dual(f)), neg) == 0.0);
}

TEST_CASE("gauge phase") {
  std::mt19937_64 rng(53);
  GridSpec grid{{8, 8, 8}, oracle::kUnitBox};
  const AmplitudeSet amps = oracle::random_amplitudes(rng, 5, 3);
  const FieldGrid f = synthesize_field(amps, grid, 0.6);

  SUBCASE("theta = 0 is the identity") {
    CHECK(amp_diff(gauge_phase(amps, 0.0), amps) == 0.0);
    CHECK(oracle::max_diff(gauge_phase(f, 0.0), f) == 0.0);
  }
  SUBCASE("pointwise modulus and observables invariant") {
    const FieldGrid g = gauge_phase(f, 0.7);
    for (std::int64_t i = 0; i < grid.sites(); i += 7) {
      double n0 = 0.0, n1 = 0.0;
      for (int c = 0; c < 6; ++c) {
        n0 += std::norm(f.at(c, i));
        n1 += std::norm(g.at(c, i));
      }
      CHECK(std::abs(n0 - n1) < 1e-14 * std::max(1.0, n0));
    }
    const Observables o0 = observables(f);
    const Observables o1 = observables(g);
    CHECK(std::abs(o0.j0 - o1.j0) <= 1e-13 * o0.j0);
    for (int c = 0; c < 3; ++c) CHECK(std::abs(o0.j[c] - o1.j[c]) <= 1e-13 * o0.j0);
  }
  SUBCASE("composition adds angles") {
    const AmplitudeSet g1 = gauge_phase(gauge_phase(amps, 0.3), 1.1);
    const AmplitudeSet g2 = gauge_phase(amps, 1.4);
    CHECK(amp_diff(g1, g2) < 1e-15);
  }
}

TEST_CASE("dual and gauge commute with synthesis") {
  std::mt19937_64 rng(54);
  GridSpec grid{{8, 8, 8}, oracle::kUnitBox};
  double worst_dual = 0.0, worst_gauge = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const AmplitudeSet amps = oracle::random_amplitudes(rng, 4, 3);
    const double t = 0.1 * trial - 1.7;
    const FieldGrid f = synthesize_field(amps, grid, t);
    worst_dual = std::max(worst_dual,
                          oracle::max_diff(synthesize_field(dual(amps), grid, t), dual(f)));
    worst_gauge = std::max(
        worst_gauge,
        oracle::max_diff(synthesize_field(gauge_phase(amps, 0.9), grid, t), gauge_phase(f, 0.9)));
  }
  CHECK(worst_dual <= 1e-12);
  CHECK(worst_gauge <= 1e-12);
}

TEST_CASE("transformed solutions still solve the plane-wave symbol equation") {
  // transverse input mode under each transform; every image component must
  // satisfy k0 beta0 v = beta.k v
  AmplitudeSet amps(oracle::kUnitBox);
  amps.set(ModeKey{{1, 2, 0}, 1}, cplx(0.8, 0.1), cplx(-0.2, 0.5));
  const auto residual_of = [](const AmplitudeSet& s) {
    double worst = 0.0;
    for (const auto& m : boost(s, make_boost(0.0, {0, 0, 1})).modes)
      worst = std::max(worst, symbol_residual(m));
    return worst;
  };
  CHECK(residual_of(amps) <= 1e-10);
  CHECK(residual_of(parity(amps)) <= 1e-10);
  CHECK(residual_of(time_reversal(amps)) <= 1e-10);
  CHECK(residual_of(dual(amps)) <= 1e-10);
  CHECK(residual_of(gauge_phase(amps, 0.4)) <= 1e-10);
}

TEST_CASE("boost") {
  AmplitudeSet amps(oracle::kUnitBox);
  amps.set(ModeKey{{1, 2, 2}, 1}, cplx(1.0, 0.0), 0.0);
  amps.set(ModeKey{{0, -1, 2}, -1}, cplx(0.3, -0.4), cplx(0.2, 0.6));

  SUBCASE("rapidity 0 is the identity") {
    const BoostedModes bm = boost(amps, make_boost(0.0, {0.3, -0.5, 0.81}));
    GridSpec grid{{8, 8, 8}, oracle::kUnitBox};
    double worst = 0.0;
    for (int s = 0; s < 30; ++s) {
      const Vec3 x = grid.site_position(s % 8, (3 * s) % 8, (5 * s) % 8);
      worst = std::max(worst, norm_inf(evaluate(bm, x, 0.33) - evaluate_field(amps, x, 0.33)));
    }
    CHECK(worst <= 1e-13);
  }

  SUBCASE("unit axis enforced") {
    CHECK_THROWS_AS((void)boost(amps, BoostParams{0.5, {1.0, 1.0, 0.0}}), std::domain_error);
    CHECK_THROWS_AS(make_boost(0.5, {0, 0, 0}), std::domain_error);
  }

  const BoostParams p = make_boost(0.8, {0.3, -0.5, 0.81});
  const BoostedModes bm = boost(amps, p);

  SUBCASE("boosted plane waves satisfy the symbol equation and the mass shell") {
    for (const auto& m : bm.modes) {
      CHECK(symbol_residual(m) <= 1e-10);
      const double w2 = m.kmu[0] * m.kmu[0];
      const double k2 = m.kmu[1] * m.kmu[1] + m.kmu[2] * m.kmu[2] + m.kmu[3] * m.kmu[3];
      CHECK(std::abs(w2 - k2) <= 1e-10 * std::max(1.0, k2));
    }
  }

  SUBCASE("E and B transform by the classical boost law") {
    const double g = std::cosh(p.rapidity);
    const Vec3 v = std::tanh(p.rapidity) * p.axis;
    const BoostedModes unboosted = boost(amps, make_boost(0.0, p.axis));
    REQUIRE(unboosted.modes.size() == bm.modes.size());
    for (std::size_t idx = 0; idx < bm.modes.size(); ++idx) {
      const BoostedMode& c = unboosted.modes[idx];
      const BoostedMode& m = bm.modes[idx];
      const Vec3c e0 = cplx(std::sqrt(2.0)) * upper(c.spinor);
      const Vec3c b0 = cplx(0.0, -std::sqrt(2.0)) * lower(c.spinor);
      const Vec3c vc = to_complex(v);
      const Vec3c nc = to_complex(p.axis);
      const cplx epar = nc[0] * e0[0] + nc[1] * e0[1] + nc[2] * e0[2];
      const cplx bpar = nc[0] * b0[0] + nc[1] * b0[1] + nc[2] * b0[2];
      const Vec3c vxb = cross(vc, b0);
      const Vec3c vxe = cross(vc, e0);
      Vec3c eexp, bexp;
      for (int i = 0; i < 3; ++i) {
        eexp[i] = epar * nc[i] + g * ((e0[i] - epar * nc[i]) + vxb[i]);
        bexp[i] = bpar * nc[i] + g * ((b0[i] - bpar * nc[i]) - vxe[i]);
      }
      const Vec3c e1 = cplx(std::sqrt(2.0)) * upper(m.spinor);
      const Vec3c b1 = cplx(0.0, -std::sqrt(2.0)) * lower(m.spinor);
      CHECK(norm_inf(e1 - eexp) <= 1e-10);
      CHECK(norm_inf(b1 - bexp) <= 1e-10);
    }
  }

  SUBCASE("Lorentz scalar integral is boost invariant") {
    GridSpec grid{{12, 12, 12}, oracle::kUnitBox};
    const double before = lorentz_scalar_integral(amps, grid, 0.0);
    const double after = lorentz_scalar_integral(bm, grid, 0.0);
    CHECK(std::abs(after - before) <= 1e-9 * std::max(1.0, std::abs(before)));
  }
}

TEST_CASE("pseudo-Lagrangian checks") {
  std::mt19937_64 rng(55);
  GridSpec grid{{8, 8, 8}, oracle::kUnitBox};
  const AmplitudeSet amps = oracle::random_amplitudes(rng, 5, 3, oracle::kUnitBox, false);

  SUBCASE("on-shell fields have vanishing pseudo-Lagrangian density") {
    const auto rep = pseudo_lagrangian_check(amps, {GeneratorSpec::Kind::rotation, {0, 0, 1}},
                                             1e-4, grid, 0.13);
    CHECK(rep.lagrangian_max <= 1e-12);
  }

  SUBCASE("rotation generator leaves L invariant to machine precision") {
    for (const Vec3 axis : {Vec3{0, 0, 1}, Vec3{1, 0, 0}, Vec3{0.6, -0.8, 0.0}}) {
      const auto rep = pseudo_lagrangian_check(amps, {GeneratorSpec::Kind::rotation, axis},
                                               1e-4, grid, 0.13);
      CHECK(rep.delta_max <= 1e-12);
    }
  }

  SUBCASE("boost generator residual scales as epsilon^2") {
    const GeneratorSpec gen{GeneratorSpec::Kind::boost, {0, 0, 1}};
    const double r1 = pseudo_lagrangian_check(amps, gen, 1e-3, grid, 0.13).delta_max;
    const double r2 = pseudo_lagrangian_check(amps, gen, 5e-4, grid, 0.13).delta_max;
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.2));
  }

  SUBCASE("boost-sector identity A6 holds via transversality") {
    const auto rep = pseudo_lagrangian_check(amps, {GeneratorSpec::Kind::boost, {0, 0, 1}},
                                             1e-4, grid, 0.13);
    for (int l = 0; l < 3; ++l) CHECK(rep.a6_max[l] <= 1e-12);
  }
}
