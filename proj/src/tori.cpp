#include "isurf/tori.hpp"

#include <algorithm>
#include <set>

#include "isurf/normal_forms.hpp"

namespace isurf {

TorusPoint::TorusPoint(RatVec coords) : c_(std::move(coords)) {
    for (auto& x : c_) {
        x.canonicalize();
        x = frac(x);
    }
}

bool TorusPoint::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

Int TorusPoint::order() const { return lcm_of_denominators(c_); }

TorusPoint TorusPoint::operator+(const TorusPoint& o) const {
    if (dim() != o.dim()) throw PreconditionError("torus dimension mismatch");
    RatVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = c_[i] + o.c_[i];
    return TorusPoint(std::move(r));
}

TorusPoint TorusPoint::operator-(const TorusPoint& o) const { return *this + (-o); }

TorusPoint TorusPoint::operator-() const {
    RatVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = -c_[i];
    return TorusPoint(std::move(r));
}

TorusPoint TorusPoint::times(const Int& n) const {
    RatVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = c_[i] * n;
    return TorusPoint(std::move(r));
}

std::string TorusPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) s += ", ";
        s += isurf::to_string(c_[i]);
    }
    return s + ")";
}

TorusPoint concat(const std::vector<TorusPoint>& parts) {
    RatVec r;
    for (const auto& p : parts) r.insert(r.end(), p.coords().begin(), p.coords().end());
    return TorusPoint(std::move(r));
}

std::vector<TorusPoint> divide(const TorusPoint& x, const Int& n) {
    if (n <= 0) throw PreconditionError("division on a torus needs a positive integer");
    std::vector<TorusPoint> out{TorusPoint::zero(x.dim())};
    for (std::size_t i = 0; i < x.dim(); ++i) {
        std::vector<TorusPoint> next;
        for (const auto& partial : out)
            for (Int k = 0; k < n; ++k) {
                RatVec c = partial.coords();
                c[i] = (x[i] + k) / Rat(n);
                next.emplace_back(std::move(c));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TorusMorphism TorusMorphism::from_rational(const RatMatrix& m) {
    try {
        return TorusMorphism(to_int(m));
    } catch (const PreconditionError&) {
        throw PreconditionError("matrix does not map Z^g into Z^g'");
    }
}

TorusPoint TorusMorphism::apply(const TorusPoint& p) const { return apply(p.coords()); }

TorusPoint TorusMorphism::apply(const RatVec& lift) const {
    if (lift.size() != source_dim()) throw PreconditionError("torus dimension mismatch");
    return TorusPoint(to_rat(m_).apply(lift));
}

Int TorusMorphism::degree() const {
    if (!m_.square()) throw PreconditionError("degree needs equal dimensions");
    Int d = determinant(m_);
    if (d == 0) throw PreconditionError("morphism is not an isogeny");
    return abs(d);
}

std::optional<TorusPoint> TorusMorphism::preimage(const TorusPoint& p) const {
    if (p.dim() != target_dim()) throw PreconditionError("torus dimension mismatch");
    SmithForm s = smith_normal_form(m_);
    RatVec w = to_rat(s.left).apply(p.coords());
    RatVec y(source_dim(), Rat(0));
    for (std::size_t i = 0; i < target_dim(); ++i) {
        if (i < s.rank)
            y[i] = frac(w[i]) / Rat(s.diagonal[i]);
        else if (w[i].get_den() != 1)
            return std::nullopt;
    }
    return TorusPoint(to_rat(s.right).apply(y));
}

TorusMorphism hstack(const std::vector<TorusMorphism>& parts) {
    if (parts.empty()) throw PreconditionError("hstack of nothing");
    std::size_t rows = parts.front().target_dim(), cols = 0;
    for (const auto& p : parts) {
        if (p.target_dim() != rows) throw PreconditionError("hstack target mismatch");
        cols += p.source_dim();
    }
    IntMatrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < p.source_dim(); ++j) m(i, off + j) = p.matrix()(i, j);
        off += p.source_dim();
    }
    return TorusMorphism(m);
}

std::vector<TorusPoint> n_torsion(const RationalTorus& t, long n) {
    if (n < 1) throw PreconditionError("torsion order must be positive");
    return divide(TorusPoint::zero(t.dim), Int(n));
}

TorusKernel kernel_points(const TorusMorphism& f) {
    SmithForm s = smith_normal_form(f.matrix());
    if (s.rank != f.source_dim()) throw PreconditionError("morphism has a positive-dimensional kernel");
    TorusKernel k;
    k.group = FiniteAbelianGroup::from_diagonal(IntVec(s.diagonal.begin(), s.diagonal.begin() + s.rank));
    RatMatrix v = to_rat(s.right);
    for (std::size_t i = 0; i < s.rank; ++i) {
        if (s.diagonal[i] == 1) continue;
        RatVec e(f.source_dim(), Rat(0));
        e[i] = Rat(1) / Rat(s.diagonal[i]);
        k.generators.emplace_back(v.apply(e));
    }
    return k;
}

std::vector<TorusPoint> generated_subgroup(const std::vector<TorusPoint>& gens) {
    if (gens.empty()) throw PreconditionError("subgroup needs at least one generator");
    std::set<TorusPoint> seen{TorusPoint::zero(gens.front().dim())};
    std::vector<TorusPoint> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<TorusPoint> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                TorusPoint q = p + g;
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

TorusQuotient quotient_torus(const RationalTorus& t, const std::vector<TorusPoint>& subgroup) {
    std::set<TorusPoint> f(subgroup.begin(), subgroup.end());
    for (const auto& p : f)
        if (p.dim() != t.dim) throw PreconditionError("subgroup point has the wrong dimension");
    if (!f.count(TorusPoint::zero(t.dim))) throw PreconditionError("subgroup does not contain 0");
    for (const auto& a : f)
        for (const auto& b : f)
            if (!f.count(a + b)) throw PreconditionError("point list is not closed under addition");

    // Lattice Z^g + lifts(F), scaled by a common denominator N.
    Int n = 1;
    for (const auto& p : f) n = lcm(n, p.order());
    IntMatrix gens(t.dim + f.size(), t.dim);
    std::size_t r = 0;
    for (std::size_t i = 0; i < t.dim; ++i, ++r) gens(r, i) = n;
    for (const auto& p : f) {
        for (std::size_t i = 0; i < t.dim; ++i) gens(r, i) = Rat(p[i] * n).get_num();
        ++r;
    }
    IntMatrix basis = row_basis(gens);  // rows b_k, lattice basis b_k / N
    RatMatrix bt = to_rat(basis).transpose().scaled(Rat(1) / Rat(n));
    TorusQuotient q;
    q.torus.dim = t.dim;
    q.projection = TorusMorphism::from_rational(inverse(bt));
    if (q.projection.degree() != Int(f.size())) throw PreconditionError("quotient degree does not match |F|");
    return q;
}

TorusMorphism isogeny_with_kernel(const TorusPoint& eta) {
    if (eta.is_zero()) throw PreconditionError("isogeny kernel generator is zero");
    return quotient_torus(RationalTorus{eta.dim()}, generated_subgroup({eta})).projection;
}

GluedJacobian glue_over_base(const std::vector<TorusMorphism>& pullbacks) {
    if (pullbacks.empty()) throw PreconditionError("gluing needs at least one curve");
    std::size_t g = pullbacks.front().source_dim();
    IntMatrix e(0, g);
    std::vector<std::size_t> dims;
    for (const auto& p : pullbacks) {
        if (p.source_dim() != g) throw PreconditionError("pullbacks from different bases");
        e = vstack(e, p.matrix());
        dims.push_back(p.target_dim());
    }
    SmithForm s = smith_normal_form(e);
    std::size_t total = e.rows();
    IntMatrix q(total - s.rank, total);
    for (std::size_t i = s.rank; i < total; ++i) q.set_row(i - s.rank, s.left.row(i));

    // Prefer coordinates in which the first markings are the standard blocks.
    std::vector<std::size_t> lead;
    for (std::size_t j = 0; j < q.rows() && j < total; ++j) lead.push_back(j);
    IntMatrix block = q.cols_subset(lead);
    if (block.square() && abs(determinant(block)) == 1) q = unimodular_inverse(block) * q;

    GluedJacobian gj;
    gj.jw.dim = q.rows();
    gj.assembly = TorusMorphism(q);
    std::size_t off = 0;
    for (std::size_t d : dims) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < d; ++j) cols.push_back(off + j);
        gj.markings.emplace_back(q.cols_subset(cols));
        off += d;
    }
    return gj;
}

std::vector<Int> marking_pair_degrees(const std::vector<TorusMorphism>& markings) {
    std::vector<Int> out;
    for (std::size_t i = 0; i < markings.size(); ++i)
        for (std::size_t j = i + 1; j < markings.size(); ++j) {
            IntMatrix m = hstack({markings[i], markings[j]}).matrix();
            out.push_back(m.square() ? abs(determinant(m)) : Int(0));
        }
    std::sort(out.begin(), out.end());
    return out;
}

GluingFixtureReport jw1_gluing_fixture(const TorusPoint& eta1, const TorusPoint& eta2) {
    if (eta1.dim() != 2 || eta2.dim() != 2) throw PreconditionError("fixture uses a 2-dimensional base");
    if (eta1.order() != 2 || eta2.order() != 2 || eta1 == eta2)
        throw PreconditionError("fixture needs two distinct points of order 2");
    auto glued = glue_over_base({isogeny_with_kernel(eta1), isogeny_with_kernel(eta2), TorusMorphism::identity(2)});
    const auto& m = glued.markings;
    GluingFixtureReport r;
    r.markings_injective = true;
    for (const auto& mk : m)
        if (!kernel_points(mk).group.is_trivial()) r.markings_injective = false;
    r.gamma_pair_determinant = determinant(hstack({m[0], m[1]}).matrix());
    r.gamma1_sigma_kernel = kernel_points(hstack({m[0], m[2]}));
    r.gamma2_sigma_kernel = kernel_points(hstack({m[1], m[2]}));
    r.pattern = marking_pair_degrees(m);
    return r;
}

}  // namespace isurf
