#include <cmath>
#include <vector>

#include "bpl/dicke.hpp"
#include "bpl/errors.hpp"
#include "bpl/math_util.hpp"
#include "bpl/rng.hpp"
#include "bpl/statevec.hpp"
#include "doctest.h"

using namespace bpl;
using namespace bpl::statevec;

namespace {

double dist(const StateVector& a, const StateVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i)
    m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
  return m;
}

}  // namespace

TEST_CASE("basic states") {
  const auto z = zero_state(3);
  CHECK(z.amps[0] == cplx(1, 0));
  CHECK(z.norm() == 1.0);
  const auto p = plus_state(3);
  for (const auto& a : p.amps) CHECK(std::abs(a - cplx(1.0 / std::sqrt(8.0), 0)) < 1e-15);
  CHECK_THROWS_AS(zero_state(15), SizeError);
}

TEST_CASE("product rotation uses half angles per qubit") {
  // One qubit about X by pi: |0> -> -i|1>.
  auto s = product_rotation(zero_state(1), std::vector<double>{kPi}, Axis::X);
  CHECK(std::abs(s.amps[0]) < 1e-15);
  CHECK(std::abs(s.amps[1] - cplx(0, -1)) < 1e-15);
  // About Z: |0> gets e^{-i theta/2}.
  auto z = product_rotation(zero_state(1), std::vector<double>{0.8}, Axis::Z);
  CHECK(std::abs(z.amps[0] - std::polar(1.0, -0.4)) < 1e-15);
  CHECK_THROWS_AS(product_rotation(zero_state(2), std::vector<double>{0.1}, Axis::X),
                  DimensionMismatch);
}

TEST_CASE("ring diagonal counts disagreeing neighbors") {
  const auto& d = ring_cost_diagonal(4);
  const std::vector<double> expected{0, 2, 2, 2, 2, 4, 2, 2, 2, 2, 4, 2, 2, 2, 2, 0};
  CHECK(d.values == expected);
}

TEST_CASE("ring circuit costs match the dense oracle") {
  const auto psi = ring_qaoa_state(std::vector<double>{0.7}, std::vector<double>{0.4}, 4);
  CHECK(cost_ring_global(psi) == doctest::Approx(0.3624504040583485).epsilon(1e-13));
  CHECK(cost_ring_local(psi) == doctest::Approx(2.706918366082511).epsilon(1e-13));
  const auto id = ring_qaoa_state(std::vector<double>{0.0}, std::vector<double>{0.0}, 4);
  CHECK(cost_ring_global(id) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(cost_ring_local(id) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK_THROWS_AS(ring_qaoa_state(std::vector<double>{0.1}, std::vector<double>{0.1}, 5),
                  ParityError);
  CHECK_THROWS_AS(ring_qaoa_state(std::vector<double>{0.1}, std::vector<double>{0.1, 0.2}, 4),
                  DimensionMismatch);
}

TEST_CASE("collective rotations agree with the symmetric-subspace simulator") {
  RngStream rng(99, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 2 + int(rng.next_u32() % 7u);  // 2..8
    dicke::DickeVector d = dicke::zero_state(n);
    StateVector s = zero_state(n);
    for (int layer = 0; layer < 6; ++layer) {
      const double angle = rng.uniform(-kPi, kPi);
      const Axis ax = static_cast<Axis>(rng.next_u32() % 3u);
      d = dicke::rotate(d, ax, angle);
      s = product_rotation(s, std::vector<double>(std::size_t(n), angle), ax);
      if (layer % 2 == 1) {
        const double gamma = rng.uniform(0.0, kTwoPi);
        d = dicke::oracle_phase(d, gamma);
        s.amps[0] *= std::polar(1.0, gamma);
      }
    }
    CHECK(dist(embed_dicke(d), s) < 1e-12);
  }
}

TEST_CASE("embedding keeps inner products") {
  const auto d = dicke::rotate(dicke::zero_state(6), Axis::Y, 0.8);
  const auto e = embed_dicke(d);
  CHECK(e.norm() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(overlap(embed_dicke(dicke::zero_state(6)), e) -
                 dicke::overlap(dicke::zero_state(6), d)) < 1e-13);
}

TEST_CASE("correlated ring maximizer is deterministic and beats the start point") {
  const auto a = maximize_correlated_qaoa(4, 2);
  const auto b = maximize_correlated_qaoa(4, 2);
  CHECK(a.beta == b.beta);
  CHECK(a.gamma == b.gamma);
  CHECK(a.value == b.value);
  // Value must beat the unoptimized start (beta = gamma = 0 gives n/2).
  CHECK(a.value > 2.0);
  // And must be a genuine circuit value.
  std::vector<double> beta(2, a.beta), gamma(2, a.gamma);
  CHECK(cost_ring_local(ring_qaoa_state(beta, gamma, 4)) ==
        doctest::Approx(a.value).epsilon(1e-12));
  CHECK_THROWS_AS(maximize_correlated_qaoa(3, 1), SizeError);
  CHECK_THROWS_AS(maximize_correlated_qaoa(4, 7), SizeError);
}
