#include "isurf/normal_forms.hpp"

#include <algorithm>

namespace isurf {

namespace {

bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

// Smallest nonzero entry in row t or column t (from index t on).
void repivot_cross(SmithForm& s, IntMatrix& d, std::size_t t) {
    std::size_t bi = t, bj = t;
    Int best = abs(d(t, t));
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d(i, t) != 0 && (best == 0 || abs(d(i, t)) < best)) {
            best = abs(d(i, t));
            bi = i;
            bj = t;
        }
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(t, j) != 0 && (best == 0 || abs(d(t, j)) < best)) {
            best = abs(d(t, j));
            bi = t;
            bj = j;
        }
    d.swap_rows(t, bi);
    s.left.swap_rows(t, bi);
    d.swap_cols(t, bj);
    s.right.swap_cols(t, bj);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm s;
    IntMatrix d = m;
    s.left = IntMatrix::identity(m.rows());
    s.right = IntMatrix::identity(m.cols());
    std::size_t n = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    for (; t < n; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        s.left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        s.right.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Int q = floor_div(d(i, t), d(t, t));
                d.add_row(i, t, -q);
                s.left.add_row(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Int q = floor_div(d(t, j), d(t, t));
                d.add_col(j, t, -q);
                s.right.add_col(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) {
                repivot_cross(s, d, t);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, 1);
                        s.left.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.left.negate_row(t);
        }
    }
    s.rank = t;
    s.diagonal.assign(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) s.diagonal[i] = d(i, i);
    return s;
}

IntMatrix HermiteForm::basis() const {
    IntMatrix b(rank, h.cols());
    for (std::size_t i = 0; i < rank; ++i) b.set_row(i, h.row(i));
    return b;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
    HermiteForm f;
    f.h = m;
    f.transform = IntMatrix::identity(m.rows());
    IntMatrix& h = f.h;
    IntMatrix& u = f.transform;
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h(i, c) == 0) continue;
            Int a = h(r, c), b = h(i, c), g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int ag = a / g, bg = b / g;
            for (IntMatrix* mat : {&h, &u}) {
                for (std::size_t j = 0; j < mat->cols(); ++j) {
                    Int x = (*mat)(r, j), y = (*mat)(i, j);
                    (*mat)(r, j) = s * x + t * y;
                    (*mat)(i, j) = -bg * x + ag * y;
                }
            }
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            h.add_row(i, r, -q);
            u.add_row(i, r, -q);
        }
        ++r;
    }
    f.rank = r;
    return f;
}

IntMatrix row_basis(const IntMatrix& rows) { return hermite_normal_form(rows).basis(); }

IntMatrix integer_kernel(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    std::size_t n = m.cols();
    IntMatrix k(n - s.rank, n);
    for (std::size_t j = s.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k(j - s.rank, i) = s.right(i, j);
    return row_basis(k);
}

IntMatrix unimodular_inverse(const IntMatrix& m) { return to_int(inverse(to_rat(m))); }

IntMatrix saturation(const IntMatrix& rows) {
    if (rows.rows() == 0) return rows;
    SmithForm s = smith_normal_form(rows);
    IntMatrix rinv = unimodular_inverse(s.right);
    IntMatrix b(s.rank, rows.cols());
    for (std::size_t i = 0; i < s.rank; ++i) b.set_row(i, rinv.row(i));
    return row_basis(b);
}

bool is_saturated(const IntMatrix& rows) {
    SmithForm s = smith_normal_form(rows);
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.diagonal[i] != 1) return false;
    return true;
}

}  // namespace isurf
