#pragma once

#include <string>
#include <vector>

#include "isurf/matrix.hpp"

namespace isurf {

// A free Z-module with a symmetric integral bilinear form, given by its Gram matrix.
class IntegralLattice {
public:
    IntegralLattice() = default;
    explicit IntegralLattice(IntMatrix gram);

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    Int pair(const IntVec& x, const IntVec& y) const { return bilinear(gram_, x, y); }
    Int norm(const IntVec& x) const { return bilinear(gram_, x, x); }
    Rat pair(const RatVec& x, const RatVec& y) const;

    // Gram matrix of the sublattice spanned by the given rows.
    IntegralLattice restrict_to(const IntMatrix& basis) const;
    IntegralLattice scaled(const Int& f) const { return IntegralLattice(gram_.scaled(f)); }

    bool operator==(const IntegralLattice& o) const { return gram_ == o.gram_; }

private:
    IntMatrix gram_;
};

IntegralLattice orthogonal_sum(const std::vector<IntegralLattice>& parts);
IntegralLattice hyperbolic_plane();
IntegralLattice diagonal_lattice(const std::vector<long>& entries);

struct FiniteAbelianGroup {
    IntVec invariant_factors;  // each >= 2, d_i | d_{i+1}

    Int order() const;
    bool is_trivial() const { return invariant_factors.empty(); }
    std::string to_string() const;  // e.g. "Z/2 x Z/2", "0"
    static FiniteAbelianGroup from_diagonal(const IntVec& diag);  // drops 1s, rejects 0
};

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    bool operator==(const Inertia&) const = default;
};

// Signature of a symmetric rational matrix by exact congruence diagonalization.
Inertia inertia(const RatMatrix& m);
Inertia inertia(const IntMatrix& m);

struct LatticePredicates {
    bool is_even = false;
    bool is_unimodular = false;
    Int discriminant;  // |det|
    FiniteAbelianGroup discriminant_group;
};

// Requires a nondegenerate lattice.
LatticePredicates lattice_predicates(const IntegralLattice& l);

bool is_negative_definite(const IntegralLattice& l);
bool is_positive_definite(const IntegralLattice& l);

// Sublattice given by basis rows in ambient coordinates together with its Gram matrix.
struct Sublattice {
    IntMatrix basis;
    IntegralLattice lattice;
};

// Saturated basis of {x : x.s = 0 for all rows s of S}.
Sublattice orthogonal_complement(const IntegralLattice& l, const IntMatrix& s);

// (span_basis) / (isotropic), where isotropic lies in the radical of the form on span_basis.
class IsotropicQuotient {
public:
    IntegralLattice lattice;
    IntMatrix lifts;      // one ambient lift per quotient basis vector
    IntMatrix isotropic;  // rows spanning the isotropic sublattice

    // Quotient coordinates of an ambient vector of the input span.
    IntVec project(const IntVec& ambient) const;
    // Ambient vector from quotient coordinates (the chosen lift).
    IntVec lift(const IntVec& coords) const { return combine_rows(coords, lifts); }
    RatVec lift(const RatVec& coords) const { return combine_rows(coords, to_rat(lifts)); }

    void prepare();

private:
    RatMatrix full_;     // rows: isotropic then lifts
    RatMatrix solver_;   // right inverse of full_
};

IsotropicQuotient quotient_by_isotropic(const IntegralLattice& l, const IntMatrix& span_basis,
                                        const IntMatrix& isotropic);

// [L : S] for S given by full-rank basis rows in L coordinates.
Int index_of_sublattice(const IntMatrix& s);

}  // namespace isurf
