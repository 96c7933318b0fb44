#pragma once

#include "isurf/matrix.hpp"

namespace isurf {

// left * m * right is diagonal with d_1 | d_2 | ... ; left, right unimodular.
struct SmithForm {
    IntMatrix left;
    IntMatrix right;
    IntVec diagonal;  // min(rows, cols) entries, nonnegative
    std::size_t rank = 0;
};

// Pivot rule: smallest nonzero absolute value, ties broken by lowest (row, col).
SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite form: h = transform * m, echelon with positive pivots and
// entries above each pivot reduced into [0, pivot).
struct HermiteForm {
    IntMatrix h;
    IntMatrix transform;
    std::size_t rank = 0;
    IntMatrix basis() const;  // the nonzero rows of h
};

HermiteForm hermite_normal_form(const IntMatrix& m);

// Canonical (Hermite-reduced) basis of the Z-span of the given rows.
IntMatrix row_basis(const IntMatrix& rows);
// Rows x spanning {x in Z^n : m x = 0}, Hermite-reduced.
IntMatrix integer_kernel(const IntMatrix& m);
// Basis of (Q-span of rows) ∩ Z^n, Hermite-reduced.
IntMatrix saturation(const IntMatrix& rows);
bool is_saturated(const IntMatrix& rows);
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace isurf
