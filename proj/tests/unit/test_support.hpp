#pragma once

#include <functional>
#include <random>

#include "isurf/lattice.hpp"
#include "isurf/normal_form.hpp"

namespace isurf::testing {

inline IntVec ivec(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Random unimodular matrix built from elementary row operations.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 0) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    if (steps == 0) steps = static_cast<int>(3 * n);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        long f = static_cast<long>(rng() % 5) - 2;
        u.add_row(i, j, Int(f));
        if (rng() % 4 == 0) u.swap_rows(i, j);
    }
    return u;
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, long bound) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

inline Rat random_rat(std::mt19937_64& rng, long bound = 9, long maxden = 4) {
    Rat q(Int(static_cast<long>(rng() % (2 * bound + 1)) - bound), Int(static_cast<long>(rng() % maxden) + 1));
    q.canonicalize();
    return q;
}

// -y^2 + x^3 + g2 x z^4 + g3 z^6 plus random multiples of every t-divisible degree-6 monomial.
inline WeightedPolynomial random_weierstrass(std::mt19937_64& rng, const Rat& g2, const Rat& g3) {
    WeightedPolynomial p;
    p.set({0, 2, 0, 0}, Rat(-1));
    p.set({3, 0, 0, 0}, Rat(1));
    p.set({1, 0, 4, 0}, g2);
    p.set({0, 0, 6, 0}, g3);
    for (const auto& e : monomials_of_degree(6))
        if (e[3] > 0) p.set(e, random_rat(rng));
    return p;
}

inline CoordinateChange random_change(std::mt19937_64& rng) {
    return {random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng),
            random_rat(rng), random_rat(rng), random_rat(rng)};
}

}  // namespace isurf::testing
