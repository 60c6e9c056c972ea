#include <gtest/gtest.h>

#include "gwalk/exact_linalg.hpp"

using namespace gwalk;

namespace {

CycMatrix rational_matrix(unsigned n, const std::vector<std::vector<BigRational>>& rows) {
  CycMatrix m(n, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = CycNum(n, rows[r][c]);
  return m;
}

CycMatrix diag_pm(unsigned n, const std::vector<int>& d) {
  std::vector<CycNum> v;
  for (int x : d) v.emplace_back(n, BigRational(x));
  return CycMatrix::diagonal(n, v);
}

const BigRational half(1, 2);

}  // namespace

TEST(BuildP, SmallCases) {
  EXPECT_EQ(build_P(2, 0), rational_matrix(2, {{0, 1}, {0, 0}}));
  EXPECT_EQ(build_P(4, 3), rational_matrix(4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {half, half, half, -half}}));
  EXPECT_THROW(build_P(4, 4), IndexOutOfRange);
  EXPECT_THROW(build_P(1, 0), PreconditionViolation);
}

TEST(BuildP, SumIsGrover) {
  for (unsigned n : {2u, 3u, 6u}) {
    CycMatrix sum(n, n);
    for (unsigned j = 0; j < n; ++j) sum = sum + build_P(n, j);
    EXPECT_EQ(sum, build_G(n)) << "n=" << n;
  }
}

TEST(BuildG, EntriesAndInvolution) {
  EXPECT_EQ(build_G(2), rational_matrix(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(build_G(4), rational_matrix(4, {{-half, half, half, half},
                                            {half, -half, half, half},
                                            {half, half, -half, half},
                                            {half, half, half, -half}}));
  for (unsigned n = 2; n <= 8; ++n) EXPECT_TRUE((build_G(n) * build_G(n)).is_identity()) << "n=" << n;
}

TEST(BuildS, EntriesAndOrder) {
  EXPECT_EQ(build_S(2), diag_pm(2, {1, -1}));
  EXPECT_EQ(mat_pow(build_S(4), 2), diag_pm(4, {1, -1, 1, -1}));
  for (unsigned n = 2; n <= 8; ++n) {
    EXPECT_TRUE(mat_pow(build_S(n), n).is_identity()) << "n=" << n;
    for (unsigned j = 1; j < n; ++j) EXPECT_FALSE(mat_pow(build_S(n), j).is_identity());
  }
  EXPECT_EQ(build_S_pow(5, -2), mat_pow(build_S(5), 3));
}

TEST(BuildA, FourierMatrix) {
  EXPECT_EQ(build_A(2), rational_matrix(2, {{1, 1}, {1, -1}}));
  for (unsigned n : {3u, 4u, 7u}) {
    const CycMatrix f = build_A(n);
    EXPECT_EQ(f * conj_transpose(f), CycMatrix::identity(n, n).scaled(BigRational(n))) << "n=" << n;
  }
}

TEST(ConjugateByA, GroverBecomesSignDiagonal) {
  EXPECT_EQ(conjugate_by_A(build_G(3)), diag_pm(3, {1, -1, -1}));
  for (unsigned n = 2; n <= 8; ++n) {
    std::vector<int> d(n, -1);
    d[0] = 1;
    EXPECT_EQ(conjugate_by_A(build_G(n)), diag_pm(n, d)) << "n=" << n;
  }
}

TEST(ConjugateByA, IdentityFixed) {
  for (unsigned n : {2u, 5u}) EXPECT_EQ(conjugate_by_A(CycMatrix::identity(n, n)), CycMatrix::identity(n, n));
  EXPECT_THROW(conjugate_by_A(CycMatrix::identity(3, 4)), DimensionMismatch);
}

TEST(ConjugateByA, PhaseBecomesCyclicShift) {
  // n = 4, j = 1: first row has its 1 in column n - j + 1 = 4 (1-based).
  EXPECT_EQ(conjugate_by_A(build_S(4)),
            rational_matrix(4, {{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  // S^j goes to the j-th power of that shift; S^{-j} to its inverse.
  for (unsigned n = 2; n <= 7; ++n)
    for (unsigned j = 0; j < n; ++j) {
      const CycMatrix shat = conjugate_by_A(build_S_pow(n, j));
      for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c)
          EXPECT_EQ(shat(r, c), (r == (c + j) % n) ? CycNum::one(n) : CycNum::zero(n));
    }
}

TEST(ConjugateByA, CommutatorN3) {
  EXPECT_EQ(conjugate_by_A(commutator(build_S(3), build_G(3))), diag_pm(3, {-1, -1, 1}));
}

TEST(Commutator, FormInFourierBasis) {
  for (unsigned n = 2; n <= 7; ++n)
    for (unsigned j = 1; j < n; ++j) {
      std::vector<int> d(n, 1);
      d[0] = -1;
      d[j] = -1;
      EXPECT_EQ(conjugate_by_A(commutator(build_S_pow(n, j), build_G(n))), diag_pm(n, d)) << n << " " << j;
    }
}

TEST(Commutator, InvolutoryAndSymmetric) {
  const CycMatrix c4 = commutator(build_S(4), build_G(4));
  EXPECT_TRUE((c4 * c4).is_identity());
  const CycMatrix s2 = build_S_pow(5, 2), g = build_G(5);
  EXPECT_EQ(commutator(s2, g), commutator(g, s2));
  // Explicit form S^j G S^{-j} G.
  EXPECT_EQ(commutator(s2, g), s2 * g * build_S_pow(5, -2) * g);
}

TEST(Commutator, GroverDoesNotCommuteWithPhases) {
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned j = 1; j < n; ++j) {
      const CycMatrix sj = build_S_pow(n, j), g = build_G(n);
      EXPECT_FALSE(g * sj == sj * g) << n << " " << j;
    }
}

TEST(MatPow, Basics) {
  EXPECT_TRUE(mat_pow(build_S(6), 6).is_identity());
  EXPECT_TRUE(mat_pow(build_G(3), 0).is_identity());
  EXPECT_EQ(mat_pow(build_G(3), 5), build_G(3));
}

TEST(Kron, SmallCases) {
  EXPECT_EQ(kron(CycMatrix::identity(5, 2), CycMatrix::identity(5, 3)), CycMatrix::identity(5, 6));
  EXPECT_EQ(kron(diag_pm(5, {1, -1}), CycMatrix::identity(5, 2)), diag_pm(5, {1, 1, -1, -1}));
  EXPECT_EQ(kron(build_A(2), CycMatrix::identity(2, 2)),
            rational_matrix(2, {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}));
  EXPECT_THROW(kron(CycMatrix::identity(2, 2), CycMatrix::identity(3, 2)), IncompatibleField);
}

TEST(Errors, MismatchedOperands) {
  EXPECT_THROW(CycMatrix::identity(3, 3) * CycMatrix::identity(3, 2), DimensionMismatch);
  EXPECT_THROW(CycMatrix::identity(3, 3) * CycMatrix::identity(4, 3), IncompatibleField);
}

TEST(BuildU, TwoVertexBlocks) {
  const CycMatrix u = build_U(2);
  const CycMatrix p0 = build_P(2, 0), p1 = build_P(2, 1);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned k = 0; k < 2; ++k) {
      EXPECT_EQ(u(i, k), p0(i, k));
      EXPECT_EQ(u(i, 2 + k), p1(i, k));
      EXPECT_EQ(u(2 + i, k), p1(i, k));
      EXPECT_EQ(u(2 + i, 2 + k), p0(i, k));
    }
}

TEST(BuildU, Unitary) {
  for (unsigned n : {2u, 3u, 4u}) {
    const CycMatrix u = build_U(n);
    EXPECT_TRUE((u * conj_transpose(u)).is_identity()) << "n=" << n;
  }
}

TEST(Diagonalization, HoldsExactly) {
  for (unsigned n = 2; n <= 5; ++n) EXPECT_TRUE(check_diagonalization(n)) << "n=" << n;
}

TEST(Diagonalization, DetectsCorruption) {
  CycMatrix u = build_U(3);
  u(4, 5) += CycNum(3, BigRational(1, 1000));
  EXPECT_FALSE(check_diagonalization(u));
  CycMatrix u2 = build_U(4);
  u2(0, 15) = zeta_pow(4, 1);
  EXPECT_FALSE(check_diagonalization(u2));
}

TEST(EvolutionPeriod, MinimalPowerIsTwoN) {
  for (unsigned n = 2; n <= 4; ++n) {
    const CycMatrix u = build_U(n);
    CycMatrix p = u;
    for (unsigned m = 1; m < 2 * n; ++m) {
      EXPECT_FALSE(p.is_identity()) << "n=" << n << " m=" << m;
      p = p * u;
    }
    EXPECT_TRUE(p.is_identity()) << "n=" << n;
    EXPECT_TRUE(mat_pow(u, 2 * n).is_identity());
  }
}
