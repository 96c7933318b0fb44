#pragma once

#include <string>
#include <vector>

#include "isurf/dynkin.hpp"
#include "isurf/lattice.hpp"

namespace isurf {

// Unimodular T (rows = new basis) with T q T^T LLL-reduced (delta = 3/4); q positive definite.
IntMatrix lll_reduce(const IntMatrix& q);

// All nonzero x with x^T q x <= bound, for positive definite q; lexicographically sorted.
std::vector<IntVec> short_vectors(const IntMatrix& q, const Int& bound);

// All vectors of norm -2 in a negative definite lattice, lexicographically sorted.
std::vector<IntVec> enumerate_roots(const IntegralLattice& l);

// x + (x.alpha) alpha, the reflection in a root of norm -2.
IntVec reflect(const IntegralLattice& l, const IntVec& x, const IntVec& alpha);

struct RootComponent {
    DynkinType type;
    IntMatrix simple_roots;        // rows, Bourbaki order
    std::vector<IntVec> roots;     // all roots of this component, sorted
    std::vector<IntVec> coefficients;  // coordinates of `roots` in simple_roots
};

struct RootDecomposition {
    IntegralLattice lattice;
    std::vector<RootComponent> components;
    std::size_t total = 0;

    std::string label() const;  // e.g. "E7+E7+D10"; "" when there are no roots
    std::size_t root_rank() const;
    IntMatrix all_simple_roots() const;  // component blocks stacked in order
    // Coordinates of x (in the Q-span of the roots) with respect to all_simple_roots().
    RatVec simple_root_coordinates(const RatVec& x) const;
};

// Simple roots are the indecomposable roots that are lexicographically positive.
RootDecomposition decompose_root_system(const IntegralLattice& l, const std::vector<IntVec>& roots);
RootDecomposition root_decomposition(const IntegralLattice& l);

// Whether the label is one of the 23 root systems of rank-24 even unimodular definite lattices.
bool is_niemeier_root_label(const RootDecomposition& d);
// "Leech" when there are no roots.
std::string niemeier_identify(const IntegralLattice& l);
std::string niemeier_identify(const RootDecomposition& d);

// Vector in the span of the roots pairing to delta_{ij} with the simple roots of
// component `comp` (j is the 1-based Bourbaki index) and to 0 with all other simple roots.
RatVec fundamental_weight(const RootDecomposition& d, std::size_t comp, int j);

// Coefficients of the highest root of a component in its simple roots.
IntVec highest_root_coefficients(const RootDecomposition& d, std::size_t comp);

// H^2 of the plane blown up in n points: diag(1, -1, ..., -1) with basis h, e_1..e_n.
struct EnLattice {
    int n = 0;
    IntegralLattice lattice;
    IntVec h;
    std::vector<IntVec> eps;
    IntVec kappa;            // 3h - sum e_i (minus the canonical class)
    IntMatrix simple_roots;  // a_i = e_{i+1} - e_i (i < n), a_n = h - e_{n-2} - e_{n-1} - e_n
};

EnLattice build_En_lattice(int n);

}  // namespace isurf
