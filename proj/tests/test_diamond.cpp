#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "spindeg/channel.hpp"
#include "spindeg/diamond.hpp"
#include "spindeg/matrix.hpp"
#include "spindeg/rng.hpp"
#include "spindeg/spin.hpp"

using spindeg::ComplexMatrix;
using spindeg::KrausChannel;
using spindeg::LinearMapChoi;

namespace {

KrausChannel identity_channel(int d) {
  return spindeg::make_kraus_channel({spindeg::ComplexMatrix::identity(d)});
}

// Random CPTP channel from a Haar-ish isometry: take d columns of a random
// (d*k)-dimensional unitary and slice it into k Kraus operators.
KrausChannel random_cptp(spindeg::Rng& rng, int d, int k) {
  const ComplexMatrix u = oracle::random_unitary(rng, d * k);
  std::vector<ComplexMatrix> ops;
  for (int mu = 0; mu < k; ++mu) {
    ComplexMatrix op(d, d);
    for (int o = 0; o < d; ++o)
      for (int i = 0; i < d; ++i) op(o, i) = u(mu * d + o, i);
    ops.push_back(op);
  }
  return spindeg::make_kraus_channel(std::move(ops));
}

ComplexMatrix maximally_entangled(int d) {
  ComplexMatrix v(d * d, 1);
  for (int i = 0; i < d; ++i) v(i * d + i, 0) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

LinearMapChoi scaled(const LinearMapChoi& phi, double c) {
  ComplexMatrix m = phi.choi;
  m *= c;
  return spindeg::make_linear_map_choi(phi.d_in, phi.d_out, m);
}

// Difference from the identity channel on the same space.
LinearMapChoi minus_identity(const KrausChannel& ch) {
  return spindeg::diff_choi(ch, identity_channel(ch.d_in));
}

}  // namespace

TEST_CASE("zero map has zero norm and zero bounds") {
  const int d = 3;
  const LinearMapChoi zero = spindeg::make_linear_map_choi(d, d, ComplexMatrix(d * d, d * d));
  CHECK(spindeg::diamond_norm(zero) <= 1e-8);
  CHECK(spindeg::diamond_upper_maxnorm(zero) == 0.0);
  CHECK(spindeg::diamond_lower_entangled(zero, maximally_entangled(d)) <= 1e-12);
}

TEST_CASE("difference of a channel with itself has zero norm") {
  const auto params = spindeg::make_mls_params(1.0, 0.2);
  const KrausChannel ch = spindeg::mls_channel(params);
  CHECK(spindeg::diamond_norm(spindeg::diff_choi(ch, ch)) <= 1e-8);
}

TEST_CASE("spin conjugation channel sits at diamond distance 2 from the identity") {
  for (double j : {0.5, 1.0, 1.5}) {
    const KrausChannel lj = spindeg::mls_channel(spindeg::make_mls_params(j, 1.0));
    const LinearMapChoi phi = minus_identity(lj);
    const double sdp = spindeg::diamond_norm(phi);
    CHECK(std::abs(sdp - 2.0) < 1e-6);

    const double lower =
        spindeg::diamond_lower_entangled(phi, spindeg::singlet_state(j));
    CHECK(std::abs(lower - 2.0) < 1e-10);
    CHECK(lower <= sdp + 1e-8);
    CHECK(sdp <= spindeg::diamond_upper_maxnorm(phi) + 1e-12);
  }
}

TEST_CASE("depolarizing-style mixtures are exactly 2p from the identity") {
  struct Case {
    double j, p;
  };
  for (const Case c : {Case{0.5, 0.3}, Case{1.0, 0.1}, Case{1.5, 0.1}}) {
    const KrausChannel ch = spindeg::mls_channel(spindeg::make_mls_params(c.j, c.p));
    const LinearMapChoi phi = minus_identity(ch);
    const double sdp = spindeg::diamond_norm(phi);
    CHECK(std::abs(sdp - 2.0 * c.p) < 1e-6);
    const double lower = spindeg::diamond_lower_entangled(phi, spindeg::singlet_state(c.j));
    CHECK(lower <= sdp + 1e-8);
    CHECK(sdp <= spindeg::diamond_upper_maxnorm(phi) + 1e-12);
  }
}

TEST_CASE("CPTP channels have unit diamond norm") {
  spindeg::Rng rng(314);
  struct Shape {
    int d, k;
  };
  for (const Shape s : {Shape{2, 2}, Shape{2, 4}, Shape{3, 2}, Shape{3, 3}, Shape{4, 2}}) {
    const KrausChannel ch = random_cptp(rng, s.d, s.k);
    const LinearMapChoi phi = spindeg::choi(ch);
    const double sdp = spindeg::diamond_norm(phi);
    CHECK(std::abs(sdp - 1.0) < 1e-6);
    const double lower = spindeg::diamond_lower_entangled(phi, maximally_entangled(s.d));
    CHECK(lower <= sdp + 1e-8);
    CHECK(sdp <= spindeg::diamond_upper_maxnorm(phi) + 1e-12);
  }
}

TEST_CASE("scaling the map scales the norm") {
  spindeg::Rng rng(41);
  const KrausChannel a = random_cptp(rng, 2, 2);
  const KrausChannel b = random_cptp(rng, 2, 3);
  const LinearMapChoi phi = spindeg::diff_choi(a, b);
  const double base = spindeg::diamond_norm(phi);
  for (double c : {0.5, 2.0}) {
    const double got = spindeg::diamond_norm(scaled(phi, c));
    CHECK(std::abs(got - c * base) < 1e-6 * std::max(1.0, c * base));
  }
}

TEST_CASE("entangled probes never beat the SDP value") {
  spindeg::Rng rng(2718);
  for (int trial = 0; trial < 4; ++trial) {
    const int d = 2 + trial % 2;
    const KrausChannel a = random_cptp(rng, d, 2);
    const KrausChannel b = random_cptp(rng, d, 2);
    const LinearMapChoi phi = spindeg::diff_choi(a, b);
    const double sdp = spindeg::diamond_norm(phi);
    const double lower = spindeg::diamond_lower_entangled(phi, maximally_entangled(d));
    CHECK(lower <= sdp + 1e-8);
    CHECK(sdp <= spindeg::diamond_upper_maxnorm(phi) + 1e-12);
  }
}

TEST_CASE("upper bound formula on the identity Choi") {
  const LinearMapChoi id2 = spindeg::choi(identity_channel(2));
  // d_in * d_out^2 * max entry = 2 * 4 * 1.
  CHECK(spindeg::diamond_upper_maxnorm(id2) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("probe validation") {
  const LinearMapChoi id2 = spindeg::choi(identity_channel(2));
  CHECK_THROWS_AS(spindeg::diamond_lower_entangled(id2, ComplexMatrix(3, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(spindeg::diamond_lower_entangled(id2, ComplexMatrix(4, 2)),
                  std::invalid_argument);
  ComplexMatrix not_unit(4, 1);
  not_unit(0, 0) = 0.5;
  CHECK_THROWS_AS(spindeg::diamond_lower_entangled(id2, not_unit), std::invalid_argument);
}
