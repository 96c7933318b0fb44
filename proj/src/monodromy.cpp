#include "isurf/monodromy.hpp"

#include <algorithm>

#include "isurf/normal_forms.hpp"

namespace isurf {

namespace {

IntMatrix column(const IntVec& v) {
    IntMatrix c(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
    return c;
}

IntVec combo(std::initializer_list<std::pair<long, std::size_t>> terms, const IntMatrix& basis) {
    IntVec v(basis.cols(), Int(0));
    for (auto [c, i] : terms) v = add(v, scale(basis.row(i), Int(c)));
    return v;
}

}  // namespace

void finalize_frame(MonodromyFrame& f, bool require_rank4) {
    if (f.alpha.size() != f.beta.size() || f.alpha.empty()) throw PreconditionError("frame needs matching cycle pairs");
    IntMatrix cycles(0, f.ambient.rank());
    for (std::size_t i = 0; i < f.k(); ++i)
        cycles = vstack(cycles, IntMatrix::from_rows({f.alpha[i], f.beta[i]}));
    if (!(cycles * f.ambient.gram() * cycles.transpose()).is_zero())
        throw PreconditionError("vanishing cycles do not span an isotropic sublattice");
    f.w1 = saturation(cycles);
    if (require_rank4 && f.w1.rows() != 4) throw PreconditionError("W1 does not have rank 4");
    for (std::size_t i = 0; i < f.k(); ++i)
        if (!is_saturated(IntMatrix::from_rows({f.alpha[i], f.beta[i]})))
            throw PreconditionError("image of a double curve is not primitive of rank 2");
}

MonodromyFrame build_frame(const std::string& stratum) {
    MonodromyFrame f;
    f.label = stratum;
    f.ambient = orthogonal_sum(std::vector<IntegralLattice>(4, hyperbolic_plane()));
    // w_k = e_k, with dual f_k in the k-th hyperbolic plane
    IntMatrix w(4, 8);
    for (std::size_t k = 0; k < 4; ++k) {
        w(k, 2 * k) = 1;
        f.w1_dual.push_back(unit_vector(8, 2 * k + 1));
    }
    auto add_pair = [&](IntVec a, IntVec b) {
        f.alpha.push_back(std::move(a));
        f.beta.push_back(std::move(b));
    };
    if (stratum == "rat11" || stratum == "rat21" || stratum == "rat22") {
        add_pair(w.row(0), w.row(1));
        add_pair(w.row(2), w.row(3));
    } else if (stratum == "enriques") {
        add_pair(w.row(0), w.row(1));
        add_pair(w.row(2), combo({{1, 1}, {2, 3}}, w));
    } else if (stratum == "ell111") {
        add_pair(w.row(0), w.row(1));
        add_pair(w.row(2), w.row(3));
        add_pair(combo({{2, 0}, {1, 2}}, w), combo({{1, 1}, {2, 3}}, w));
    } else if (stratum == "ell211") {
        add_pair(w.row(0), w.row(1));
        add_pair(w.row(2), w.row(3));
        add_pair(combo({{2, 0}, {1, 2}}, w), combo({{1, 1}, {1, 3}}, w));
    } else {
        throw InputError("unknown stratum label: " + stratum);
    }
    finalize_frame(f);
    if (f.w1 != row_basis(w)) throw PreconditionError("frame W1 differs from the chosen basis");
    return f;
}

IntMatrix picard_lefschetz(const MonodromyFrame& f, std::size_t i) {
    if (i >= f.k()) throw PreconditionError("cycle index out of range");
    const IntMatrix& g = f.ambient.gram();
    IntMatrix a = column(f.alpha[i]), b = column(f.beta[i]);
    return a * b.transpose() * g - b * a.transpose() * g;
}

IntMatrix total_monodromy(const MonodromyFrame& f, const std::vector<long>& weights) {
    if (weights.size() != f.k()) throw PreconditionError("one weight per double curve expected");
    IntMatrix n(f.ambient.rank(), f.ambient.rank());
    for (std::size_t i = 0; i < f.k(); ++i) n = n + picard_lefschetz(f, i).scaled(Int(weights[i]));
    return n;
}

std::vector<IntVec> symbolic_action(const MonodromyFrame& f, const IntVec& x) {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < f.k(); ++i) out.push_back(picard_lefschetz(f, i).apply(x));
    return out;
}

PrimitivityCertificate primitivity_certificate(const std::vector<IntMatrix>& ops) {
    if (ops.empty()) throw PreconditionError("no operators given");
    std::size_t n = ops.front().rows() * ops.front().cols();
    IntMatrix m(n, ops.size());
    for (std::size_t j = 0; j < ops.size(); ++j) {
        if (ops[j].rows() * ops[j].cols() != n) throw PreconditionError("operators of different sizes");
        for (std::size_t r = 0; r < ops[j].rows(); ++r)
            for (std::size_t c = 0; c < ops[j].cols(); ++c) m(r * ops[j].cols() + c, j) = ops[j](r, c);
    }
    SmithForm s = smith_normal_form(m);
    PrimitivityCertificate cert;
    cert.divisors = s.diagonal;
    cert.primitive = s.rank == ops.size() &&
                     std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const Int& d) { return d == 1; });
    return cert;
}

WeightData weight_data(const IntMatrix& n) {
    if (!n.square()) throw PreconditionError("monodromy logarithm must be square");
    if (!(n * n).is_zero()) throw PreconditionError("N^2 != 0");
    WeightData w;
    IntMatrix img = row_basis(n.transpose());
    w.rank = img.rows();
    w.image = saturation(img);
    w.image_was_saturated = (w.image == img) || is_saturated(img);
    w.kernel = integer_kernel(n);
    return w;
}

std::vector<Int> pair_index_pattern(const MonodromyFrame& f) {
    RatMatrix w1 = to_rat(f.w1);
    std::vector<IntMatrix> images;
    for (std::size_t i = 0; i < f.k(); ++i) images.push_back(row_basis(picard_lefschetz(f, i).transpose()));
    std::vector<Int> out;
    for (std::size_t i = 0; i < f.k(); ++i)
        for (std::size_t j = i + 1; j < f.k(); ++j) {
            IntMatrix span = row_basis(vstack(images[i], images[j]));
            if (span.rows() != f.w1.rows()) {
                out.push_back(0);
                continue;
            }
            IntMatrix coords(span.rows(), f.w1.rows());
            for (std::size_t r = 0; r < span.rows(); ++r)
                coords.set_row(r, to_int(solve_row_combination(w1, to_rat(span.row(r)))));
            out.push_back(index_of_sublattice(coords));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string LozengeType::to_string() const { return "lozenge(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

LozengeType lozenge_type(std::size_t w0_rank, std::size_t w1_rank) {
    if (w1_rank < w0_rank || (w1_rank - w0_rank) % 2 != 0)
        throw PreconditionError("W1/W0 must have even rank");
    return LozengeType{static_cast<int>(w0_rank), static_cast<int>((w1_rank - w0_rank) / 2)};
}

bool is_skew(const IntegralLattice& l, const IntMatrix& n) {
    IntMatrix gn = l.gram() * n;
    return (gn + gn.transpose()).is_zero();
}

}  // namespace isurf
