#include "steersim/states.hpp"

#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "steersim/errors.hpp"
#include "test_support.hpp"

namespace steersim::states {
namespace {

using qmat::ComplexMatrix;

// Permutation operator relabelling qubits: new position i takes old qubit perm[i].
ComplexMatrix qubit_permutation(const std::array<int, 3>& perm) {
  ComplexMatrix p(8);
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const std::array<std::size_t, 3> bits = {(idx >> 2) & 1U, (idx >> 1) & 1U, idx & 1U};
    const std::size_t out = (bits[perm[0]] << 2) | (bits[perm[1]] << 1) | bits[perm[2]];
    p(out, idx) = 1.0;
  }
  return p;
}

TEST(Ghz, Elements) {
  const auto g = ghz();
  EXPECT_EQ(g(0, 0), 0.5);
  EXPECT_EQ(g(0, 7), 0.5);
  EXPECT_EQ(g(7, 0), 0.5);
  EXPECT_EQ(g(7, 7), 0.5);
  EXPECT_EQ(g(1, 1), 0.0);
}

TEST(Ghz, ZZParity) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  EXPECT_NEAR(qmat::expval(ghz(), qmat::tensor(qmat::pauli_z(), qmat::pauli_z(), id)), 1.0,
              1e-15);
}

TEST(Werner, PureLimitIsGhz) { EXPECT_EQ(werner(WernerParam(0.0)), ghz()); }

TEST(Werner, MixedLimit) {
  ComplexMatrix mixed = ComplexMatrix::identity(8);
  mixed *= 1.0 / 8.0;
  EXPECT_EQ(werner(WernerParam(1.0)).matrix(), mixed);
}

TEST(Werner, HalfCoherence) { EXPECT_EQ(werner(WernerParam(0.5))(0, 7), 0.25); }

TEST(Werner, MatchesDefinition) {
  for (double v = 0.0; v <= 1.0; v += 0.05) {
    EXPECT_LE(qmat::max_abs_diff(werner(WernerParam(v)).matrix(), testing::oracle_werner(v)),
              1e-16);
    EXPECT_EQ(werner(WernerParam(v))(0, 7).real(), (1.0 - v) / 2.0);
  }
}

TEST(Werner, RejectsOutOfRange) {
  EXPECT_THROW(WernerParam(-0.01), DomainError);
  EXPECT_THROW(WernerParam(1.01), DomainError);
  EXPECT_THROW(WernerParam(NAN), DomainError);
}

TEST(Werner, PermutationSymmetric) {
  const std::array<std::array<int, 3>, 5> perms = {
      {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  for (double v : {0.0, 0.2, 0.37, 0.8, 1.0}) {
    const auto rho = werner(WernerParam(v));
    for (const auto& perm : perms) {
      const ComplexMatrix p = qubit_permutation(perm);
      EXPECT_EQ(p * rho.matrix() * p.adjoint(), rho.matrix());
    }
  }
}

TEST(Werner, Spectrum) {
  for (double v : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    const auto ev = qmat::hermitian_eigenvalues(werner(WernerParam(v)).matrix());
    // Ascending: seven copies of v/8 then 1 - 7v/8 (equal at v = 1).
    for (int i = 0; i < 7; ++i) EXPECT_NEAR(ev[i], v / 8.0, 1e-12);
    EXPECT_NEAR(ev[7], 1.0 - 7.0 * v / 8.0, 1e-12);
  }
}

}  // namespace
}  // namespace steersim::states
