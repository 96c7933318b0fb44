#include <gtest/gtest.h>

#include <set>

#include "isurf/normal_forms.hpp"
#include "isurf/roots.hpp"
#include "test_support.hpp"

using namespace isurf;
using isurf::testing::ivec;

namespace {

IntegralLattice rl(Family f, int n) { return root_lattice(DynkinType{f, n}); }

// Independent oracle: exhaustive box search with |x_i| <= sqrt(2 (Q^-1)_ii), Q = -Gram.
long brute_force_root_count(const IntegralLattice& l) {
    std::size_t n = l.rank();
    IntMatrix q = l.gram().scaled(Int(-1));
    RatMatrix qi = inverse(to_rat(q));
    std::vector<long> bound(n);
    for (std::size_t i = 0; i < n; ++i) bound[i] = isqrt_floor(floor_rat(qi(i, i) * 2)).get_si();
    std::vector<std::vector<long>> g(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = q(i, j).get_si();
    std::vector<long> x(n, 0);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            long s = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!x[i]) continue;
                long t = 0;
                for (std::size_t j = 0; j < n; ++j) t += g[i][j] * x[j];
                s += x[i] * t;
            }
            if (s == 2) ++count;
            return;
        }
        for (long v = -bound[k]; v <= bound[k]; ++v) {
            x[k] = v;
            rec(k + 1);
        }
        x[k] = 0;
    };
    rec(0);
    return count;
}

IntegralLattice conjugate(const IntegralLattice& l, const IntMatrix& u) {
    return IntegralLattice(u * l.gram() * u.transpose());
}

}  // namespace

TEST(Roots, ExceptionalCountsMatchBruteForce) {
    for (int n : {6, 7, 8}) {
        auto l = rl(Family::E, n);
        long expected = brute_force_root_count(l);
        EXPECT_EQ(static_cast<long>(enumerate_roots(l).size()), expected);
    }
    EXPECT_EQ(enumerate_roots(rl(Family::E, 8)).size(), 240u);
    EXPECT_EQ(enumerate_roots(rl(Family::E, 7)).size(), 126u);
    EXPECT_EQ(enumerate_roots(rl(Family::E, 6)).size(), 72u);
}

TEST(Roots, ClassicalCountsMatchClosedForms) {
    for (int n = 1; n <= 7; ++n) {
        auto l = rl(Family::A, n);
        EXPECT_EQ(static_cast<long>(enumerate_roots(l).size()), n * (n + 1));
        EXPECT_EQ(brute_force_root_count(l), n * (n + 1));
    }
    for (int n = 4; n <= 7; ++n) {
        auto l = rl(Family::D, n);
        EXPECT_EQ(static_cast<long>(enumerate_roots(l).size()), 2 * n * (n - 1));
        EXPECT_EQ(brute_force_root_count(l), 2 * n * (n - 1));
    }
}

TEST(Roots, NoRootsInNormMinusFour) { EXPECT_TRUE(enumerate_roots(diagonal_lattice({-4})).empty()); }

TEST(Roots, RejectsIndefiniteAndDegenerate) {
    EXPECT_THROW(enumerate_roots(hyperbolic_plane()), PreconditionError);
    EXPECT_THROW(enumerate_roots(diagonal_lattice({-2, 0})), PreconditionError);
}

TEST(Roots, WeylReflectionsPermuteRoots) {
    auto l = rl(Family::E, 7);
    auto roots = enumerate_roots(l);
    std::set<IntVec> all(roots.begin(), roots.end());
    auto dec = decompose_root_system(l, roots);
    IntMatrix s = dec.all_simple_roots();
    for (std::size_t i = 0; i < s.rows(); ++i) {
        std::set<IntVec> image;
        for (const auto& r : roots) image.insert(reflect(l, r, s.row(i)));
        EXPECT_EQ(image, all);
    }
}

TEST(Roots, InvariantUnderBasisChange) {
    std::mt19937_64 rng(17);
    auto base = orthogonal_sum({rl(Family::D, 5), rl(Family::A, 2), diagonal_lattice({-4})});
    auto ref = root_decomposition(base);
    EXPECT_EQ(ref.label(), "D5+A2");
    for (int t = 0; t < 5; ++t) {
        auto l = conjugate(base, isurf::testing::random_unimodular(base.rank(), rng));
        auto d = root_decomposition(l);
        EXPECT_EQ(d.label(), ref.label());
        EXPECT_EQ(d.total, ref.total);
    }
}

TEST(Decompose, ThreeCopiesOfE8) {
    auto e8 = rl(Family::E, 8);
    auto l = orthogonal_sum({e8, e8, e8});
    auto d = root_decomposition(l);
    EXPECT_EQ(d.total, 720u);
    EXPECT_EQ(d.label(), "E8+E8+E8");
    EXPECT_EQ(niemeier_identify(d), "E8+E8+E8");
}

TEST(Decompose, SingleA1) {
    auto d = root_decomposition(diagonal_lattice({-2}));
    EXPECT_EQ(d.label(), "A1");
    EXPECT_EQ(d.total, 2u);
}

TEST(Decompose, NiemeierTwentyFourA1IsRejectedWithoutUnimodularity) {
    std::vector<long> m2(24, -2);
    EXPECT_THROW(niemeier_identify(diagonal_lattice(m2)), PreconditionError);
}

TEST(Decompose, NiemeierRejectsSmallRootSystem) {
    // E8 + E8 + (rank 8 even unimodular with no roots does not exist); use D16+ glue absent: rank < 24 roots
    auto e8 = rl(Family::E, 8);
    auto d = root_decomposition(orthogonal_sum({e8, e8}));
    EXPECT_THROW(niemeier_identify(d), PreconditionError);
}

TEST(Weights, SelfPairings) {
    auto e7 = rl(Family::E, 7), d10 = rl(Family::D, 10);
    auto de7 = root_decomposition(e7);
    auto w7 = fundamental_weight(de7, 0, 7);
    EXPECT_EQ(e7.pair(w7, w7), Rat(-3, 2));
    auto dd = root_decomposition(d10);
    auto w9 = fundamental_weight(dd, 0, 9);
    EXPECT_EQ(d10.pair(w9, w9), Rat(-5, 2));
    auto da = root_decomposition(diagonal_lattice({-2}));
    auto w1 = fundamental_weight(da, 0, 1);
    EXPECT_EQ(w1, (RatVec{Rat(-1, 2)}));  // half of the root -alpha: pairs to +1 with alpha
    EXPECT_EQ(Rat(-2) * w1[0] * w1[0], Rat(-1, 2));
}

TEST(Weights, PairingIsKroneckerAndZeroElsewhere) {
    auto l = orthogonal_sum({rl(Family::E, 7), rl(Family::A, 3)});
    auto d = root_decomposition(l);
    IntMatrix s = d.all_simple_roots();
    for (int j = 1; j <= 7; ++j) {
        auto w = fundamental_weight(d, 0, j);
        for (std::size_t i = 0; i < s.rows(); ++i)
            EXPECT_EQ(l.pair(w, to_rat(s.row(i))), Rat(i + 1 == static_cast<std::size_t>(j) ? 1 : 0));
    }
}

TEST(HighestRoot, Coefficients) {
    auto d8 = root_decomposition(rl(Family::E, 8));
    EXPECT_EQ(highest_root_coefficients(d8, 0), ivec({2, 3, 4, 6, 5, 4, 3, 2}));
    auto da = root_decomposition(diagonal_lattice({-2}));
    EXPECT_EQ(highest_root_coefficients(da, 0), ivec({1}));
    auto dd = root_decomposition(rl(Family::D, 10));
    Int sum = 0;
    for (const auto& c : highest_root_coefficients(dd, 0)) sum += c;
    EXPECT_EQ(sum, 17);
    for (auto t : {DynkinType{Family::E, 6}, DynkinType{Family::E, 7}, DynkinType{Family::D, 6}, DynkinType{Family::A, 4}}) {
        auto d = root_decomposition(root_lattice(t));
        IntVec expect;
        for (long c : highest_root_formula(t)) expect.emplace_back(c);
        EXPECT_EQ(highest_root_coefficients(d, 0), expect) << t.label();
    }
}

TEST(BlownUpPlane, SimpleRootsAndComplement) {
    for (int n = 3; n <= 11; ++n) {
        auto e = build_En_lattice(n);
        IntMatrix k = IntMatrix::from_rows({e.kappa});
        EXPECT_TRUE((e.simple_roots * e.lattice.gram() * k.transpose()).is_zero());
        for (std::size_t i = 0; i < e.simple_roots.rows(); ++i) EXPECT_EQ(e.lattice.norm(e.simple_roots.row(i)), -2);
    }
    auto e8 = build_En_lattice(8);
    auto c8 = orthogonal_complement(e8.lattice, IntMatrix::from_rows({e8.kappa}));
    auto p8 = lattice_predicates(c8.lattice);
    EXPECT_TRUE(p8.is_even);
    EXPECT_EQ(p8.discriminant, 1);
    auto e6 = build_En_lattice(6);
    auto c6 = orthogonal_complement(e6.lattice, IntMatrix::from_rows({e6.kappa}));
    EXPECT_EQ(lattice_predicates(c6.lattice).discriminant, 3);
    EXPECT_THROW(build_En_lattice(12), UnsupportedError);
}

TEST(Lll, ReducesAndStaysUnimodular) {
    std::mt19937_64 rng(23);
    auto base = rl(Family::E, 8).scaled(Int(-1));
    auto l = conjugate(base, isurf::testing::random_unimodular(8, rng, 60));
    IntMatrix t = lll_reduce(l.gram());
    EXPECT_EQ(abs(determinant(t)), 1);
    IntMatrix r = t * l.gram() * t.transpose();
    for (std::size_t i = 0; i < 8; ++i) EXPECT_LE(r(i, i), 4);
}
