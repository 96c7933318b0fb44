#include "isurf/lattice.hpp"

#include "isurf/normal_forms.hpp"

namespace isurf {

IntegralLattice::IntegralLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw PreconditionError("Gram matrix is not symmetric");
}

Rat IntegralLattice::pair(const RatVec& x, const RatVec& y) const { return bilinear(to_rat(gram_), x, y); }

IntegralLattice IntegralLattice::restrict_to(const IntMatrix& basis) const {
    if (basis.cols() != rank()) throw PreconditionError("basis rows have the wrong length");
    return IntegralLattice(basis * gram_ * basis.transpose());
}

IntegralLattice orthogonal_sum(const std::vector<IntegralLattice>& parts) {
    std::vector<IntMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.gram());
    return IntegralLattice(block_diagonal(blocks));
}

IntegralLattice hyperbolic_plane() { return IntegralLattice(IntMatrix{{0, 1}, {1, 0}}); }

IntegralLattice diagonal_lattice(const std::vector<long>& entries) {
    IntVec d;
    for (long e : entries) d.emplace_back(e);
    return IntegralLattice(IntMatrix::diagonal(d));
}

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

std::string FiniteAbelianGroup::to_string() const {
    if (invariant_factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + invariant_factors[i].get_str();
    }
    return s;
}

FiniteAbelianGroup FiniteAbelianGroup::from_diagonal(const IntVec& diag) {
    FiniteAbelianGroup g;
    for (const auto& d : diag) {
        if (d == 0) throw PreconditionError("infinite cyclic factor in a finite group");
        if (abs(d) != 1) g.invariant_factors.push_back(abs(d));
    }
    return g;
}

Inertia inertia(const RatMatrix& m0) {
    if (!m0.is_symmetric()) throw PreconditionError("inertia needs a symmetric matrix");
    RatMatrix m = m0;
    std::size_t n = m.rows();
    Inertia res;
    auto congruent_add = [&](std::size_t i, std::size_t j, const Rat& f) {
        m.add_row(i, j, f);
        m.add_col(i, j, f);
    };
    std::size_t k = 0;
    while (k < n) {
        std::size_t p = k;
        while (p < n && m(p, p) == 0) ++p;
        if (p == n) {
            // No nonzero diagonal entry left; use an off-diagonal one.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            congruent_add(pi, pj, Rat(1));
            p = pi;
        }
        m.swap_rows(k, p);
        m.swap_cols(k, p);
        const Rat piv = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i)
            if (m(i, k) != 0) congruent_add(i, k, -m(i, k) / piv);
        if (piv > 0)
            ++res.positive;
        else
            ++res.negative;
        ++k;
    }
    res.zero = n - k;
    return res;
}

Inertia inertia(const IntMatrix& m) { return inertia(to_rat(m)); }

LatticePredicates lattice_predicates(const IntegralLattice& l) {
    LatticePredicates p;
    const IntMatrix& g = l.gram();
    p.is_even = true;
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (g(i, i) % 2 != 0) p.is_even = false;
    Int det = determinant(g);
    if (det == 0) throw PreconditionError("degenerate lattice");
    p.discriminant = abs(det);
    p.is_unimodular = p.discriminant == 1;
    p.discriminant_group = FiniteAbelianGroup::from_diagonal(smith_normal_form(g).diagonal);
    return p;
}

bool is_negative_definite(const IntegralLattice& l) {
    Inertia i = inertia(l.gram());
    return i.negative == l.rank();
}

bool is_positive_definite(const IntegralLattice& l) {
    Inertia i = inertia(l.gram());
    return i.positive == l.rank();
}

Sublattice orthogonal_complement(const IntegralLattice& l, const IntMatrix& s) {
    if (s.cols() != l.rank()) throw PreconditionError("sublattice rows have the wrong length");
    IntMatrix k = s.rows() == 0 ? IntMatrix::identity(l.rank()) : integer_kernel(s * l.gram());
    return {k, l.restrict_to(k)};
}

void IsotropicQuotient::prepare() {
    full_ = to_rat(vstack(isotropic, lifts));
    RatMatrix ft = full_.transpose();
    solver_ = ft * inverse(full_ * ft);
}

IntVec IsotropicQuotient::project(const IntVec& ambient) const {
    RatVec y = to_rat(ambient);
    RatVec c = combine_rows(y, solver_);
    if (combine_rows(c, full_) != y) throw PreconditionError("vector is not in the quotiented span");
    if (!is_integral(c)) throw PreconditionError("vector is not in the quotiented lattice");
    IntVec out;
    for (std::size_t i = isotropic.rows(); i < c.size(); ++i) out.push_back(c[i].get_num());
    return out;
}

IsotropicQuotient quotient_by_isotropic(const IntegralLattice& l, const IntMatrix& span_basis,
                                        const IntMatrix& isotropic) {
    const IntMatrix& g = l.gram();
    if (span_basis.cols() != l.rank() || isotropic.cols() != l.rank())
        throw PreconditionError("basis rows have the wrong length");
    if (!(isotropic * g * isotropic.transpose()).is_zero())
        throw PreconditionError("sublattice is not isotropic");
    if (!(isotropic * g * span_basis.transpose()).is_zero())
        throw PreconditionError("sublattice is not in the radical of the quotiented span");
    std::size_t m = span_basis.rows(), s = isotropic.rows();
    if (rank(span_basis) != m) throw PreconditionError("span basis is not linearly independent");

    RatMatrix vb = to_rat(span_basis);
    IntMatrix coords(s, m);
    for (std::size_t i = 0; i < s; ++i) {
        RatVec c = solve_row_combination(vb, to_rat(isotropic.row(i)));
        if (!is_integral(c)) throw PreconditionError("isotropic sublattice is not contained in the span");
        coords.set_row(i, to_int(c));
    }
    SmithForm sf = smith_normal_form(coords);
    if (sf.rank != s) throw PreconditionError("isotropic generators are linearly dependent");
    for (std::size_t i = 0; i < s; ++i)
        if (sf.diagonal[i] != 1) throw PreconditionError("isotropic sublattice is not primitive");

    IntMatrix winv = unimodular_inverse(sf.right);
    IntMatrix comp(m - s, m);
    for (std::size_t i = s; i < m; ++i) comp.set_row(i - s, winv.row(i));
    comp = row_basis(comp);

    IsotropicQuotient q;
    q.isotropic = isotropic;
    q.lifts = comp * span_basis;
    q.lattice = l.restrict_to(q.lifts);
    q.prepare();
    return q;
}

Int index_of_sublattice(const IntMatrix& s) {
    if (!s.square()) throw PreconditionError("sublattice basis must be square in lattice coordinates");
    SmithForm sf = smith_normal_form(s);
    if (sf.rank != s.rows()) throw PreconditionError("sublattice is rank-deficient");
    Int idx = 1;
    for (const auto& d : sf.diagonal) idx *= d;
    return idx;
}

}  // namespace isurf
