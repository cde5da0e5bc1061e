#include <doctest.h>

#include <cmath>
#include <numbers>

#include "omega/analytic.hpp"
#include "omega/schrodinger.hpp"
#include "omega/spectral.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

constexpr double pi = std::numbers::pi;

FloatNum psi_wave(double y) { return FloatNum(std::cos(y), std::sin(y), 0, 0); }
FloatNum q(double y) { return phi_wave(y); }
FloatNum phi_closed(double y) { return FloatNum(0, 0, std::sin(y), std::cos(y)); }

/// The central difference maps e^{iy} to ((1 - cos h) / h^2) e^{iy} exactly on a periodic grid.
double discrete_plane_wave_energy(double h) { return (1.0 - std::cos(h)) / (h * h); }

}  // namespace

TEST_CASE("grid construction") {
  CHECK_THROWS_AS(GridWave::periodic(q, 0, 2 * pi, 2), GridTooCoarse);
  CHECK_THROWS_AS(GridWave::dirichlet(psi_wave, 1.0, 2), GridTooCoarse);
  CHECK_THROWS_AS(GridWave({FloatNum(), FloatNum(), FloatNum()}, 1.0, 1.0, Boundary::periodic), ArithmeticError);
  const GridWave w = GridWave::periodic(psi_wave, 0, 2 * pi, 8);
  CHECK(w.size() == 8);
  CHECK(w.spacing() == doctest::Approx(2 * pi / 8));
  CHECK(w.position(7) == doctest::Approx(2 * pi * 7 / 8));
  const GridWave d = GridWave::dirichlet(psi_wave, pi, 9);
  CHECK(d.spacing() == doctest::Approx(pi / 10));
  CHECK(d.position(0) == doctest::Approx(pi / 10));
}

TEST_CASE("hamiltonian on a constant is zero") {
  const GridWave w = GridWave::periodic([](double) { return FloatNum::unit(3); }, 0, 2 * pi, 32);
  const GridWave hw = hamiltonian_apply(w);
  for (const auto& v : hw.values()) CHECK(coefficient_norm(v) < 1e-12);
}

TEST_CASE("hamiltonian on plane waves matches the discrete dispersion") {
  for (int m : {16, 64, 256}) {
    const GridWave psi = GridWave::periodic(psi_wave, 0, 2 * pi, m);
    const GridWave phi = GridWave::periodic(phi_closed, 0, 2 * pi, m);
    const double e = discrete_plane_wave_energy(psi.spacing());
    const GridWave hpsi = hamiltonian_apply(psi), hphi = hamiltonian_apply(phi);
    for (int n = 0; n < m; ++n) {
      CHECK(approx_equal(hpsi.values()[n], psi.values()[n] * e, 1e-9));
      CHECK(approx_equal(hphi.values()[n], phi.values()[n] * e, 1e-9));
    }
  }
}

TEST_CASE("hamiltonian is linear over central scalars") {
  oracle::FloatGen gen(50);
  std::vector<FloatNum> a, b;
  for (int n = 0; n < 40; ++n) {
    a.push_back(gen.value());
    b.push_back(gen.value());
  }
  const GridWave wa(a, 0, 1, Boundary::dirichlet), wb(b, 0, 1, Boundary::dirichlet);
  const FloatNum c = FloatNum(0.3, -1.1, 0.7, 0.2);
  const Algebra w = Algebra::omega();
  std::vector<FloatNum> mix;
  for (int n = 0; n < 40; ++n) mix.push_back(w.mul(c, a[n]) + b[n] * 2.0);
  const GridWave lhs = hamiltonian_apply(GridWave(mix, 0, 1, Boundary::dirichlet));
  const GridWave ha = hamiltonian_apply(wa), hb = hamiltonian_apply(wb);
  for (int n = 0; n < 40; ++n)
    CHECK(approx_equal(lhs.values()[n], w.mul(c, ha.values()[n]) + hb.values()[n] * 2.0, 1e-9 * 1600));
}

TEST_CASE("classify_energy") {
  CHECK(classify_energy(FloatNum::real(0.5)).classification == EnergyClass::real);
  CHECK(classify_energy(FloatNum::unit(3, 0.5)).classification == EnergyClass::k_proportional);
  CHECK(classify_energy(FloatNum(0.5, 0, 0.1, 0)).classification == EnergyClass::mixed);
  CHECK(classify_energy(FloatNum::unit(1, 2.0)).classification == EnergyClass::i_imaginary);
  CHECK(classify_energy(FloatNum()).classification == EnergyClass::real);
  CHECK(classify_energy(FloatNum(1e-11, 0, 0, 0.5)).classification == EnergyClass::k_proportional);
  CHECK(energy_class_name(EnergyClass::k_proportional) == "k_proportional");
}

TEST_CASE("eigencheck: phi wave with k/2 converges at second order") {
  std::vector<double> residuals;
  for (int m : {64, 128, 256, 512}) {
    const GridWave w = GridWave::periodic(q, 0, 2 * pi, m);
    const double r = eigencheck(w, FloatNum::unit(3, 0.5));
    CHECK(r == doctest::Approx(std::abs(discrete_plane_wave_energy(w.spacing()) - 0.5)).epsilon(1e-3));
    residuals.push_back(r);
  }
  CHECK(residuals.back() < 1e-3);
  for (std::size_t n = 1; n < residuals.size(); ++n)
    CHECK(std::log2(residuals[n - 1] / residuals[n]) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("eigencheck: psi wave with 1/2") {
  const GridWave w = GridWave::periodic(psi_wave, 0, 2 * pi, 256);
  CHECK(eigencheck(w, FloatNum::real(0.5)) < 1e-4);
}

TEST_CASE("eigencheck: real 1/2 and k/2 are the same eigenvalue on phi") {
  // k is the unity of phi, so (1/2) q and (1/2) k q coincide for q in phi.
  const Algebra alg = Algebra::omega();
  for (double y : {0.0, 0.4, 2.0}) CHECK(approx_equal(alg.mul(FloatNum::unit(3), q(y)), q(y), 1e-12));
  const GridWave w = GridWave::periodic(q, 0, 2 * pi, 512);
  CHECK(eigencheck(w, FloatNum::real(0.5)) == doctest::Approx(eigencheck(w, FloatNum::unit(3, 0.5))));
  CHECK(eigencheck(w, FloatNum::real(0.5)) < 1e-3);
  CHECK(eigencheck(w, FloatNum::unit(3, 0.6)) > 0.05);
}

TEST_CASE("eigencheck errors") {
  const GridWave zero({FloatNum(), FloatNum(), FloatNum()}, 0, 1, Boundary::periodic);
  CHECK_THROWS_AS(eigencheck(zero, FloatNum::real(1)), ZeroWave);
}

TEST_CASE("rayleigh energy is reported in the subalgebra's unity") {
  const GridWave phi = GridWave::periodic(q, 0, 2 * pi, 256);
  const EnergyValue e = rayleigh_energy(phi);
  CHECK(e.classification == EnergyClass::k_proportional);
  CHECK(e.value[3] == doctest::Approx(discrete_plane_wave_energy(phi.spacing())).epsilon(1e-9));
  const EnergyValue p = rayleigh_energy(GridWave::periodic(psi_wave, 0, 2 * pi, 256));
  CHECK(p.classification == EnergyClass::real);
  CHECK(p.value[0] == doctest::Approx(e.value[3]).epsilon(1e-12));
  CHECK_THROWS_AS(rayleigh_energy(GridWave({FloatNum(1, 0, 1, 0), FloatNum(), FloatNum()}, 0, 1, Boundary::periodic)),
                  MalformedSignal);
}

TEST_CASE("isomorphism transports eigenstates") {
  const GridWave psi = GridWave::dirichlet([](double y) { return FloatNum::real(std::sin(2 * y)); }, pi, 200);
  std::vector<FloatNum> mapped;
  for (const auto& v : psi.values()) mapped.push_back(iso_map(v, IsoDirection::psi_to_phi));
  const GridWave phi(mapped, psi.y_min(), psi.y_max(), Boundary::dirichlet);
  const double e = box_spectrum(2, pi, 200)[1].value[0];
  CHECK(std::abs(eigencheck(psi, FloatNum::real(e)) - eigencheck(phi, FloatNum::unit(3, e))) < 1e-12);
  CHECK(eigencheck(psi, FloatNum::real(e)) < 1e-9);
}

TEST_CASE("box spectrum") {
  const auto levels = box_spectrum(2, pi, 512);
  REQUIRE(levels.size() == 2);
  CHECK(levels[0].value[0] == doctest::Approx(0.5).epsilon(0.01));
  CHECK(levels[1].value[0] == doctest::Approx(2.0).epsilon(0.01));
  for (int n = 1; n <= 2; ++n) {
    const double exact_discrete = (1.0 - std::cos(n * pi / 513.0)) / std::pow(pi / 513.0, 2);
    CHECK(levels[n - 1].value[0] == doctest::Approx(exact_discrete).epsilon(1e-10));
    CHECK(levels[n - 1].classification == EnergyClass::real);
  }
  CHECK_THROWS_AS(box_spectrum(0, pi, 512), ArithmeticError);
  CHECK_THROWS_AS(box_spectrum(3, pi, 16), GridTooCoarse);
  CHECK_THROWS_AS(box_spectrum(1, -1.0, 16), ArithmeticError);
}

TEST_CASE("box hamiltonian is hermitian") {
  CHECK(box_max_imaginary_part(pi, 64) < 1e-10);
  CHECK(box_max_imaginary_part(2.0, 150) < 1e-10);
}
