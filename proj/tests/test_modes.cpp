#include <doctest.h>

#include <photonwf/modes.hpp>

#include "oracles.hpp"

#include <random>
#include <sstream>

using namespace photonwf;

TEST_CASE("mode spinor structure") {
  const WaveVector kv = WaveVector::of({1, 2, 2});
  const auto t = polarization_triad(kv);

  SUBCASE("lambda = 0: f = (eps0, 0), g = (0, eps0)") {
    const ModeSpinor s = mode_spinor(kv, 0);
    for (int i = 0; i < 3; ++i) {
      CHECK(s.f[i] == t.eps_zero[i]);
      CHECK(s.f[i + 3] == cplx(0.0));
      CHECK(s.g[i] == cplx(0.0));
      CHECK(s.g[i + 3] == t.eps_zero[i]);
    }
  }
  SUBCASE("lambda = +1: f and g coincide") {
    const ModeSpinor s = mode_spinor(kv, 1);
    for (int i = 0; i < 6; ++i) CHECK(s.f[i] == s.g[i]);
  }
  SUBCASE("f(k,+1) and f(k,-1) orthogonal") {
    CHECK(std::abs(dot(mode_spinor(kv, 1).f, mode_spinor(kv, -1).f)) < 1e-15);
  }
  SUBCASE("bad lambda rejected") {
    CHECK_THROWS_AS((void)mode_spinor(kv, 2), std::domain_error);
  }
}

TEST_CASE("orthonormality and completeness over random modes") {
  std::mt19937_64 rng(31);
  const int lambdas[3] = {1, -1, 0};
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const WaveVector kv = WaveVector::of(oracle::random_k(rng));
    const WaveVector kr = WaveVector::of(-kv.k);
    Mat6c acc;
    for (int a = 0; a < 3; ++a) {
      const ModeSpinor ma = mode_spinor(kv, lambdas[a]);
      const ModeSpinor mar = mode_spinor(kr, lambdas[a]);
      for (int b = 0; b < 3; ++b) {
        const ModeSpinor mb = mode_spinor(kv, lambdas[b]);
        const ModeSpinor mbr = mode_spinor(kr, lambdas[b]);
        const double d = a == b ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(dot(ma.f, mb.f) - d));
        worst = std::max(worst, std::abs(dot(ma.g, mb.g) - d));
        worst = std::max(worst, std::abs(dot(ma.f, mbr.g)));
      }
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          acc(i, j) += ma.f[i] * std::conj(ma.f[j]) + mar.g[i] * std::conj(mar.g[j]);
    }
    worst = std::max(worst, norm_inf(acc - Mat6c::identity()));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("synthesis basics") {
  GridSpec grid{{8, 8, 8}, oracle::kUnitBox};

  SUBCASE("empty amplitude set gives the zero grid") {
    const FieldGrid f = synthesize_field(AmplitudeSet(oracle::kUnitBox), grid, 0.7);
    CHECK(oracle::max_abs(f) == 0.0);
  }

  SUBCASE("single a(k,+1) = 1 at t = 0 is sqrt(w/V) f(k,1) e^{ikx}") {
    AmplitudeSet amps(oracle::kUnitBox);
    const ModeKey key{{1, 0, 0}, 1};
    amps.set(key, 1.0, 0.0);
    const FieldGrid f = synthesize_field(amps, grid, 0.0);
    const WaveVector kv = amps.wavevector(key);
    const ModeSpinor sp = mode_spinor(kv, 1);
    const double pref = std::sqrt(kv.omega / amps.volume());
    for (int ix = 0; ix < 8; ++ix)
      for (int iy = 0; iy < 8; iy += 3)
        for (int iz = 0; iz < 8; iz += 3) {
          const std::int64_t site = grid.site_index(ix, iy, iz);
          const Vec3 x = grid.site_position(ix, iy, iz);
          const cplx ph = std::polar(pref, dot(kv.k, x));
          for (int c = 0; c < 6; ++c) CHECK(std::abs(f.at(c, site) - ph * sp.f[c]) < 1e-14);
        }
  }

  SUBCASE("box mismatch and out-of-band harmonics are rejected") {
    AmplitudeSet amps(Vec3{1.0, 1.0, 1.0});
    amps.set(ModeKey{{1, 0, 0}, 1}, 1.0, 0.0);
    CHECK_THROWS_AS((void)synthesize_field(amps, grid, 0.0), std::invalid_argument);

    AmplitudeSet far(oracle::kUnitBox);
    far.set(ModeKey{{5, 0, 0}, 1}, 1.0, 0.0);
    CHECK_THROWS_WITH_AS((void)synthesize_field(far, grid, 0.0),
                         doctest::Contains("[5,0,0]"), std::invalid_argument);
  }

  SUBCASE("grid synthesis matches pointwise evaluation") {
    std::mt19937_64 rng(32);
    const AmplitudeSet amps = oracle::random_amplitudes(rng, 4, 3);
    for (auto variant : {SynthesisVariant::dual, SynthesisVariant::photon_only,
                         SynthesisVariant::dualphoton_only}) {
      const FieldGrid f = synthesize_field(amps, grid, 0.37, variant);
      for (int s = 0; s < 20; ++s) {
        std::uniform_int_distribution<int> ui(0, 7);
        const int ix = ui(rng), iy = ui(rng), iz = ui(rng);
        const Vec6c direct = evaluate_field(amps, grid.site_position(ix, iy, iz), 0.37, variant);
        const Vec6c ongrid = f.spinor(grid.site_index(ix, iy, iz));
        CHECK(norm_inf(direct - ongrid) < 1e-13);
      }
    }
  }
}

TEST_CASE("projection") {
  GridSpec grid{{16, 16, 16}, oracle::kUnitBox};

  SUBCASE("zero field projects to the empty set") {
    CHECK(project_amplitudes(FieldGrid::zero(grid), 0.3).empty());
  }

  SUBCASE("round trip recovers every amplitude to 1e-12") {
    std::mt19937_64 rng(33);
    const AmplitudeSet amps = oracle::random_amplitudes(rng, 8, 5);
    const double t = 0.37;
    const AmplitudeSet rec = project_amplitudes(synthesize_field(amps, grid, t), t);
    double worst = 0.0;
    for (const auto& [key, amp] : amps.entries()) {
      const ModeAmplitude r = rec.get(key);
      worst = std::max({worst, std::abs(r.a - amp.a), std::abs(r.b - amp.b)});
    }
    for (const auto& [key, amp] : rec.entries()) {
      const ModeAmplitude r = amps.get(key);
      worst = std::max({worst, std::abs(r.a - amp.a), std::abs(r.b - amp.b)});
    }
    CHECK(worst <= 1e-12);
  }

  SUBCASE("a-only synthesis projects to b = 0") {
    std::mt19937_64 rng(34);
    AmplitudeSet amps(oracle::kUnitBox);
    for (int i = 0; i < 5; ++i)
      amps.set(ModeKey{oracle::random_harmonic(rng, 4), i % 2 ? 1 : -1},
               cplx(0.3 + i * 0.1, -0.2), 0.0);
    const AmplitudeSet rec = project_amplitudes(synthesize_field(amps, grid, 0.0), 0.0);
    for (const auto& [key, amp] : rec.entries()) CHECK(std::abs(amp.b) <= 1e-12);
  }

  SUBCASE("synthesis is linear in the amplitudes") {
    std::mt19937_64 rng(39);
    const AmplitudeSet a1 = oracle::random_amplitudes(rng, 3, 3);
    const AmplitudeSet a2 = oracle::random_amplitudes(rng, 3, 3);
    AmplitudeSet combo(oracle::kUnitBox);
    for (const auto& [key, amp] : a1.entries()) combo.set(key, 2.0 * amp.a, 2.0 * amp.b, true);
    for (const auto& [key, amp] : a2.entries()) {
      const ModeAmplitude prev = combo.get(key);
      combo.set(key, prev.a + amp.a, prev.b + amp.b, true);
    }
    const FieldGrid direct = synthesize_field(combo, grid, 0.4);
    FieldGrid sum = synthesize_field(a1, grid, 0.4);
    const FieldGrid f2 = synthesize_field(a2, grid, 0.4);
    for (std::size_t i = 0; i < sum.data.size(); ++i)
      sum.data[i] = 2.0 * sum.data[i] + f2.data[i];
    CHECK(oracle::max_diff(direct, sum) <= 1e-13);
  }

  SUBCASE("projection is linear in the field") {
    std::mt19937_64 rng(35);
    const AmplitudeSet a1 = oracle::random_amplitudes(rng, 3, 3);
    const AmplitudeSet a2 = oracle::random_amplitudes(rng, 3, 3);
    FieldGrid f1 = synthesize_field(a1, grid, 0.1);
    const FieldGrid f2 = synthesize_field(a2, grid, 0.1);
    for (std::size_t i = 0; i < f1.data.size(); ++i) f1.data[i] = 2.0 * f1.data[i] + f2.data[i];
    const AmplitudeSet rec = project_amplitudes(f1, 0.1);
    double worst = 0.0;
    for (const auto& [key, amp] : rec.entries()) {
      const cplx ea = 2.0 * a1.get(key).a + a2.get(key).a;
      const cplx eb = 2.0 * a1.get(key).b + a2.get(key).b;
      worst = std::max({worst, std::abs(amp.a - ea), std::abs(amp.b - eb)});
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("amplitudes from potential") {
  SUBCASE("c(k,1) = alpha maps to a(k,+1) = i alpha") {
    PotentialAmplitudes pot(oracle::kUnitBox);
    const cplx alpha{0.4, -0.7};
    pot.set(PotentialKey{{1, 0, 0}, 1}, alpha);
    const AmplitudeSet amps = amplitudes_from_potential(pot);
    CHECK(amps.size() == 1);
    CHECK(std::abs(amps.get(ModeKey{{1, 0, 0}, 1}).a - kImag * alpha) < 1e-15);
    CHECK(amps.get(ModeKey{{1, 0, 0}, 1}).b == cplx(0.0));
  }
  SUBCASE("c(k,3) = c(k,0) cancels to a(k,0) = 0") {
    PotentialAmplitudes pot(oracle::kUnitBox);
    const cplx gamma{0.9, 0.2};
    pot.set(PotentialKey{{0, 1, 0}, 3}, gamma);
    pot.set(PotentialKey{{0, 1, 0}, 0}, gamma);
    const AmplitudeSet amps = amplitudes_from_potential(pot);
    CHECK(std::abs(amps.get(ModeKey{{0, 1, 0}, 0}).a) == 0.0);
  }
  SUBCASE("empty input gives empty output") {
    CHECK(amplitudes_from_potential(PotentialAmplitudes(oracle::kUnitBox)).empty());
  }
}

TEST_CASE("potential route consistency (reference A-field route vs amplitude map)") {
  std::mt19937_64 rng(36);
  GridSpec grid{{16, 16, 16}, oracle::kUnitBox};
  PotentialAmplitudes pot(oracle::kUnitBox);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> us(0, 3);
  for (int i = 0; i < 6; ++i)
    pot.set(PotentialKey{oracle::random_harmonic(rng, 4), us(rng)}, cplx(u(rng), u(rng)));

  const double t = 0.29;
  const FieldGrid reference = oracle::potential_reference_field(pot, grid, t);
  const FieldGrid viamap =
      synthesize_field(amplitudes_from_potential(pot), grid, t, SynthesisVariant::photon_only);
  CHECK(oracle::max_diff(reference, viamap) < 1e-10);
}

TEST_CASE("synthesis from a real E,B pair keeps the block structure") {
  std::mt19937_64 rng(37);
  GridSpec grid{{8, 8, 8}, oracle::kUnitBox};
  // build a physical field from conjugate-symmetric amplitudes at t = 0:
  // start from real E and B and round-trip through project/synthesize
  const std::int64_t n = grid.sites();
  std::vector<double> e(std::size_t(3 * n)), b(std::size_t(3 * n));
  std::int64_t site = 0;
  for (int ix = 0; ix < 8; ++ix)
    for (int iy = 0; iy < 8; ++iy)
      for (int iz = 0; iz < 8; ++iz, ++site) {
        const Vec3 x = grid.site_position(ix, iy, iz);
        e[std::size_t(site)] = std::cos(x[1]) + 0.3 * std::sin(x[2]);
        e[std::size_t(n + site)] = std::sin(x[0] + x[2]);
        e[std::size_t(2 * n + site)] = 0.2 * std::cos(x[0] - x[1]);
        b[std::size_t(site)] = 0.4 * std::sin(x[2]);
        b[std::size_t(n + site)] = std::cos(x[0]);
        b[std::size_t(2 * n + site)] = 0.7 * std::sin(x[1] - x[0]);
      }
  const FieldGrid f = from_real_fields(e, b, grid);
  const AmplitudeSet amps = project_amplitudes(f, 0.0);
  const FieldGrid back = synthesize_field(amps, grid, 0.0);
  double worst = 0.0;
  for (std::int64_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) {
      worst = std::max(worst, std::abs(back.at(c, i).imag()));
      worst = std::max(worst, std::abs(back.at(c + 3, i).real()));
    }
  CHECK(worst <= 1e-12);
  CHECK(oracle::max_diff(f, back) <= 1e-12);  // no zero-harmonic content above
}

TEST_CASE("amplitude document round trip is byte-stable") {
  std::mt19937_64 rng(38);
  const AmplitudeSet amps = oracle::random_amplitudes(rng, 6, 4);
  std::ostringstream first;
  write_amplitude_document(amps, first);
  std::istringstream in(first.str());
  const AmplitudeSet back = read_amplitude_document(in);
  std::ostringstream second;
  write_amplitude_document(back, second);
  CHECK(first.str() == second.str());
  CHECK(back.size() == amps.size());
  for (const auto& [key, amp] : amps.entries()) {
    CHECK(back.get(key).a == amp.a);
    CHECK(back.get(key).b == amp.b);
    CHECK(back.get(key).virtual_admixture == amp.virtual_admixture);
  }
}

TEST_CASE("mode energy sums w(|a|^2 + |b|^2)") {
  AmplitudeSet amps(oracle::kUnitBox);
  amps.set(ModeKey{{0, 0, 1}, 1}, cplx(1.0, 0.0), cplx(0.0, 2.0));
  amps.set(ModeKey{{3, 4, 0}, 0}, cplx(0.0, 1.0), 0.0, true);
  CHECK(mode_energy(amps) == doctest::Approx(1.0 * (1.0 + 4.0) + 5.0 * 1.0).epsilon(1e-14));
}

TEST_CASE("mode key validation") {
  AmplitudeSet amps(oracle::kUnitBox);
  CHECK_THROWS_AS(amps.set(ModeKey{{0, 0, 0}, 1}, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(amps.set(ModeKey{{1, 0, 0}, 2}, 1.0, 0.0), std::domain_error);
  PotentialAmplitudes pot(oracle::kUnitBox);
  CHECK_THROWS_AS(pot.set(PotentialKey{{0, 0, 0}, 1}, 1.0), std::domain_error);
  CHECK_THROWS_AS(pot.set(PotentialKey{{1, 0, 0}, 4}, 1.0), std::domain_error);
}

TEST_CASE("unflagged virtual content is detected") {
  AmplitudeSet amps(oracle::kUnitBox);
  amps.set(ModeKey{{0, 0, 1}, 0}, cplx(1.0, 0.0), 0.0, false);
  amps.set(ModeKey{{0, 1, 0}, 0}, cplx(1.0, 0.0), 0.0, true);
  amps.set(ModeKey{{1, 0, 0}, 1}, cplx(1.0, 0.0), 0.0, false);
  const auto bad = amps.unflagged_virtual_content();
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == ModeKey{{0, 0, 1}, 0});
}
