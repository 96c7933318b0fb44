#include "isurf/matrix.hpp"

#include <algorithm>

namespace isurf {

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

RatVec to_rat(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

IntMatrix to_int(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw PreconditionError("matrix entry is not integral");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

IntVec to_int(const RatVec& v) {
    IntVec r;
    r.reserve(v.size());
    for (const auto& x : v) {
        if (x.get_den() != 1) throw PreconditionError("vector entry is not integral");
        r.push_back(x.get_num());
    }
    return r;
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw PreconditionError("vstack column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) m.set_row(i, a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) m.set_row(a.rows() + i, b.row(i));
    return m;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.square()) throw PreconditionError("block_diagonal needs square blocks");
        n += b.rows();
    }
    IntMatrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw PreconditionError("dot length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw PreconditionError("dot length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int bilinear(const IntMatrix& g, const IntVec& x, const IntVec& y) {
    if (g.rows() != x.size() || g.cols() != y.size()) throw PreconditionError("bilinear shape mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Int t = 0;
        for (std::size_t j = 0; j < y.size(); ++j) t += g(i, j) * y[j];
        s += x[i] * t;
    }
    return s;
}

Rat bilinear(const RatMatrix& g, const RatVec& x, const RatVec& y) {
    if (g.rows() != x.size() || g.cols() != y.size()) throw PreconditionError("bilinear shape mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rat t = 0;
        for (std::size_t j = 0; j < y.size(); ++j) t += g(i, j) * y[j];
        s += x[i] * t;
    }
    return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw PreconditionError("add length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw PreconditionError("sub length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw PreconditionError("add length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw PreconditionError("sub length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec scale(const IntVec& a, const Int& f) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * f;
    return r;
}

IntVec neg(const IntVec& a) { return scale(a, Int(-1)); }

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVec unit_vector(std::size_t n, std::size_t i) {
    IntVec v(n, Int(0));
    v.at(i) = 1;
    return v;
}

IntVec combine_rows(const IntVec& coeffs, const IntMatrix& m) {
    if (coeffs.size() != m.rows()) throw PreconditionError("combine_rows length mismatch");
    IntVec r(m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += coeffs[i] * m(i, j);
    }
    return r;
}

RatVec combine_rows(const RatVec& coeffs, const RatMatrix& m) {
    if (coeffs.size() != m.rows()) throw PreconditionError("combine_rows length mismatch");
    RatVec r(m.cols(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += coeffs[i] * m(i, j);
    }
    return r;
}

// Fraction-free Bareiss elimination.
Int determinant(const IntMatrix& m0) {
    if (!m0.square()) throw PreconditionError("determinant of non-square matrix");
    std::size_t n = m0.rows();
    if (n == 0) return 1;
    IntMatrix m = m0;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// In-place Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        Rat inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m(i, c) != 0) m.add_row(i, r, -m(i, c));
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rat determinant(const RatMatrix& m0) {
    if (!m0.square()) throw PreconditionError("determinant of non-square matrix");
    RatMatrix m = m0;
    std::size_t n = m.rows();
    Rat d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            m.swap_rows(k, p);
            d = -d;
        }
        d *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i)
            if (m(i, k) != 0) m.add_row(i, k, -m(i, k) / m(k, k));
    }
    return d;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix w = m;
    return rref(w).size();
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.square()) throw PreconditionError("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw PreconditionError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

RatVec solve_row_combination(const RatMatrix& m, const RatVec& b) {
    // x^T M = b^T  <=>  M^T x = b
    if (b.size() != m.cols()) throw PreconditionError("solve length mismatch");
    std::size_t n = m.rows(), k = m.cols();
    RatMatrix aug(k, n + 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(j, i);
        aug(i, n) = b[i];
    }
    auto piv = rref(aug);
    RatVec x(n, Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == n) throw PreconditionError("vector is not in the row space");
        x[piv[r]] = aug(r, n);
    }
    return x;
}

Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

Int lcm_of_denominators(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, Int(x.get_den()));
    return l;
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw PreconditionError("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

Rat frac(const Rat& q) { return q - Rat(floor_rat(q)); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
    Rat q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw InputError("not a rational number: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace isurf
