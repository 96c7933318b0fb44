#include <gtest/gtest.h>

#include "isurf/normal_forms.hpp"
#include "test_support.hpp"

using namespace isurf;
using isurf::testing::ivec;

namespace {

IntMatrix diag_of(const SmithForm& s, const IntMatrix& m) { return s.left * m * s.right; }

bool is_diagonal_chain(const IntMatrix& d, const IntVec& diag) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (diag[i] < 0) return false;
        if (diag[i] == 0 && diag[i + 1] != 0) return false;
        if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    }
    return true;
}

}  // namespace

TEST(Smith, SwapsOutOfOrderDiagonal) {
    IntMatrix m{{2, 0}, {0, 1}};
    auto s = smith_normal_form(m);
    EXPECT_EQ(s.diagonal, ivec({1, 2}));
    EXPECT_EQ(diag_of(s, m), IntMatrix({{1, 0}, {0, 2}}));
}

TEST(Smith, TwoByTwo) {
    IntMatrix m{{2, 4}, {6, 8}};
    auto s = smith_normal_form(m);
    EXPECT_EQ(s.diagonal, ivec({2, 4}));
    EXPECT_EQ(diag_of(s, m), IntMatrix({{2, 0}, {0, 4}}));
}

TEST(Smith, Identity) {
    auto s = smith_normal_form(IntMatrix::identity(5));
    EXPECT_EQ(s.diagonal, ivec({1, 1, 1, 1, 1}));
}

TEST(Smith, RandomMatricesGiveUnimodularTransformsAndChains) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix m = isurf::testing::random_matrix(r, c, rng, 9);
        auto s = smith_normal_form(m);
        EXPECT_EQ(abs(determinant(s.left)), 1);
        EXPECT_EQ(abs(determinant(s.right)), 1);
        EXPECT_TRUE(is_diagonal_chain(diag_of(s, m), s.diagonal));
        EXPECT_EQ(s.rank, rank(m));
    }
}

TEST(Hermite, CanonicalUnderRowUnimodularChange) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix m = isurf::testing::random_matrix(4, 6, rng, 7);
        IntMatrix u = isurf::testing::random_unimodular(4, rng);
        EXPECT_EQ(row_basis(m), row_basis(u * m));
        auto h = hermite_normal_form(m);
        EXPECT_EQ(h.transform * m, h.h);
    }
}

TEST(Kernel, SaturatedKernel) {
    IntMatrix m{{2, 4, 6}};
    IntMatrix k = integer_kernel(m);
    ASSERT_EQ(k.rows(), 2u);
    EXPECT_TRUE((m * k.transpose()).is_zero());
    EXPECT_TRUE(is_saturated(k));
}

TEST(Saturation, DetectsIndex) {
    IntMatrix s{{2, 0, 0}, {0, 1, 1}};
    EXPECT_FALSE(is_saturated(s));
    EXPECT_EQ(saturation(s), IntMatrix({{1, 0, 0}, {0, 1, 1}}));
}
