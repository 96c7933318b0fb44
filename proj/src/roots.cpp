#include "isurf/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace isurf {

IntMatrix lll_reduce(const IntMatrix& q) {
    std::size_t n = q.rows();
    IntMatrix g = q;
    IntMatrix h = IntMatrix::identity(n);
    if (n < 2) return h;
    RatMatrix mu(n, n);
    RatVec b(n);
    const Rat delta(3, 4);

    auto gram_schmidt_row = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            Rat s = g(k, j);
            for (std::size_t i = 0; i < j; ++i) s -= mu(j, i) * mu(k, i) * b[i];
            mu(k, j) = s / b[j];
        }
        Rat s = g(k, k);
        for (std::size_t j = 0; j < k; ++j) s -= mu(k, j) * mu(k, j) * b[j];
        b[k] = s;
        if (b[k] <= 0) throw PreconditionError("LLL needs a positive definite form");
    };
    auto reduce = [&](std::size_t k, std::size_t l) {
        if (abs(mu(k, l)) * 2 <= 1) return;
        Int qi = round_rat(mu(k, l));
        h.add_row(k, l, -qi);
        g.add_row(k, l, -qi);
        g.add_col(k, l, -qi);
        mu(k, l) -= qi;
        for (std::size_t i = 0; i < l; ++i) mu(k, i) -= qi * mu(l, i);
    };
    auto swap = [&](std::size_t k, std::size_t kmax) {
        h.swap_rows(k, k - 1);
        g.swap_rows(k, k - 1);
        g.swap_cols(k, k - 1);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
        Rat m = mu(k, k - 1);
        Rat bn = b[k] + m * m * b[k - 1];
        mu(k, k - 1) = m * b[k - 1] / bn;
        b[k] = b[k - 1] * b[k] / bn;
        b[k - 1] = bn;
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            Rat t = mu(i, k);
            mu(i, k) = mu(i, k - 1) - m * t;
            mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
        }
    };

    b[0] = g(0, 0);
    if (b[0] <= 0) throw PreconditionError("LLL needs a positive definite form");
    std::size_t k = 1, kmax = 0;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            gram_schmidt_row(k);
        }
        reduce(k, k - 1);
        if (b[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
            swap(k, kmax);
            k = std::max<std::size_t>(1, k - 1);
            continue;
        }
        for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
        ++k;
    }
    return h;
}

namespace {

// Enumerates x with sum_k d_k (x_k + sum_{j>k} r_kj x_j)^2 <= bound, last nonzero coordinate positive.
class ShortVectorSearch {
public:
    ShortVectorSearch(const IntMatrix& q, const Int& bound) : n_(q.rows()), bound_(bound) {
        RatMatrix l(n_, n_);
        d_.assign(n_, Rat(0));
        for (std::size_t i = 0; i < n_; ++i) {
            Rat s = q(i, i);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * l(i, k) * d_[k];
            d_[i] = s;
            if (d_[i] <= 0) throw PreconditionError("short vector search needs a positive definite form");
            for (std::size_t j = i + 1; j < n_; ++j) {
                Rat t = q(j, i);
                for (std::size_t k = 0; k < i; ++k) t -= l(j, k) * l(i, k) * d_[k];
                l(j, i) = t / d_[i];
            }
        }
        r_ = RatMatrix(n_, n_);
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t j = k + 1; j < n_; ++j) r_(k, j) = l(j, k);
        x_.assign(n_, Int(0));
    }

    std::vector<IntVec> run() {
        if (n_ > 0) descend(n_ - 1, Rat(bound_), true);
        return out_;
    }

private:
    void descend(std::size_t k, const Rat& budget, bool upper_zero) {
        Rat u = 0;
        for (std::size_t j = k + 1; j < n_; ++j)
            if (x_[j] != 0) u += r_(k, j) * x_[j];
        Rat s = budget / d_[k];
        Int rad = isqrt_floor(floor_rat(s)) + 1;
        Int lo = ceil_rat(-u - rad), hi = floor_rat(-u + rad);
        if (upper_zero && lo < 0) lo = 0;
        for (Int v = lo; v <= hi; ++v) {
            Rat t = v + u;
            Rat used = d_[k] * t * t;
            if (used > budget) continue;
            x_[k] = v;
            bool zero_here = upper_zero && v == 0;
            if (k == 0) {
                if (!zero_here) out_.push_back(x_);
            } else {
                descend(k - 1, budget - used, zero_here);
            }
        }
        x_[k] = 0;
    }

    std::size_t n_;
    Int bound_;
    RatVec d_;
    RatMatrix r_;
    IntVec x_;
    std::vector<IntVec> out_;
};

}  // namespace

std::vector<IntVec> short_vectors(const IntMatrix& q, const Int& bound) {
    if (!q.is_symmetric()) throw PreconditionError("short vector search needs a symmetric form");
    std::size_t n = q.rows();
    IntMatrix t = lll_reduce(q);
    IntMatrix reduced = t * q * t.transpose();
    auto half = ShortVectorSearch(reduced, bound).run();
    IntMatrix tt = t.transpose();
    std::vector<IntVec> out;
    out.reserve(2 * half.size());
    for (const auto& y : half) {
        IntVec x = tt.apply(y);
        out.push_back(neg(x));
        out.push_back(std::move(x));
    }
    (void)n;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> enumerate_roots(const IntegralLattice& l) {
    if (l.rank() == 0) return {};
    Inertia in = inertia(l.gram());
    if (in.zero != 0) throw PreconditionError("root enumeration needs a nondegenerate lattice");
    if (in.negative != l.rank()) throw PreconditionError("root enumeration needs a negative definite lattice");
    IntMatrix q = l.gram().scaled(Int(-1));
    auto vs = short_vectors(q, Int(2));
    std::vector<IntVec> roots;
    for (auto& v : vs)
        if (bilinear(q, v, v) == 2) roots.push_back(std::move(v));
    return roots;
}

IntVec reflect(const IntegralLattice& l, const IntVec& x, const IntVec& alpha) {
    if (l.norm(alpha) != -2) throw PreconditionError("reflection vector is not a root");
    return add(x, scale(alpha, l.pair(x, alpha)));
}

namespace {

bool lex_positive(const IntVec& v) {
    for (const auto& c : v)
        if (c != 0) return c > 0;
    return false;
}

int family_rank(Family f) { return f == Family::E ? 0 : f == Family::D ? 1 : 2; }

// Orders the nodes of a connected simply-laced Dynkin graph in Bourbaki fashion.
std::pair<DynkinType, std::vector<std::size_t>> label_component(const std::vector<std::size_t>& nodes,
                                                                 const std::vector<std::vector<std::size_t>>& adj) {
    std::size_t n = nodes.size();
    std::size_t edges = 0;
    for (auto v : nodes) edges += adj[v].size();
    if (edges != 2 * (n - 1)) throw PreconditionError("Dynkin graph of simple roots is not a tree");

    // walk from `start` away from `from` along a path, collecting nodes
    auto leg = [&](std::size_t from, std::size_t start) {
        std::vector<std::size_t> path{start};
        std::size_t prev = from, cur = start;
        while (adj[cur].size() == 2) {
            std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            path.push_back(cur);
        }
        if (adj[cur].size() > 2) throw PreconditionError("Dynkin graph has two branch nodes");
        return path;
    };

    std::vector<std::size_t> branch;
    for (auto v : nodes) {
        if (adj[v].size() > 3) throw PreconditionError("Dynkin graph node of degree > 3");
        if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.size() > 1) throw PreconditionError("Dynkin graph has two branch nodes");

    if (branch.empty()) {
        if (n == 1) return {DynkinType{Family::A, 1}, nodes};
        std::size_t end = nodes.size();
        for (auto v : nodes)
            if (adj[v].size() == 1) {
                end = v;
                break;
            }
        std::vector<std::size_t> order{end};
        auto rest = leg(end, adj[end][0]);
        order.insert(order.end(), rest.begin(), rest.end());
        return {DynkinType{Family::A, static_cast<int>(n)}, order};
    }

    std::size_t c = branch.front();
    std::vector<std::vector<std::size_t>> legs;
    for (auto nb : adj[c]) legs.push_back(leg(c, nb));
    std::stable_sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::size_t l1 = legs[0].size(), l2 = legs[1].size(), l3 = legs[2].size();
    std::vector<std::size_t> order;
    if (l1 == 1 && l2 == 1) {
        // D_n: long leg reversed, branch, then the two short legs
        order.assign(legs[2].rbegin(), legs[2].rend());
        order.push_back(c);
        order.push_back(legs[0][0]);
        order.push_back(legs[1][0]);
        return {DynkinType{Family::D, static_cast<int>(n)}, order};
    }
    if (l1 == 1 && l2 == 2 && l3 >= 2 && l3 <= 4) {
        // E_n: a1 - a3 - a4(branch) - a5 ... ; a2 on the branch
        order.resize(n);
        order[0] = legs[1][1];
        order[1] = legs[0][0];
        order[2] = legs[1][0];
        order[3] = c;
        for (std::size_t i = 0; i < l3; ++i) order[4 + i] = legs[2][i];
        return {DynkinType{Family::E, static_cast<int>(n)}, order};
    }
    throw PreconditionError("Dynkin graph is not of type A, D or E");
}

}  // namespace

std::string RootDecomposition::label() const {
    std::string s;
    for (const auto& c : components) {
        if (!s.empty()) s += "+";
        s += c.type.label();
    }
    return s;
}

std::size_t RootDecomposition::root_rank() const {
    std::size_t r = 0;
    for (const auto& c : components) r += static_cast<std::size_t>(c.type.rank);
    return r;
}

IntMatrix RootDecomposition::all_simple_roots() const {
    IntMatrix s(0, lattice.rank());
    for (const auto& c : components) s = vstack(s, c.simple_roots);
    return s;
}

RatVec RootDecomposition::simple_root_coordinates(const RatVec& x) const {
    IntMatrix s = all_simple_roots();
    RatMatrix sg = to_rat(s * lattice.gram());
    RatMatrix m = to_rat(s * lattice.gram() * s.transpose());
    RatVec rhs = sg.apply(x);
    RatVec c = inverse(m).apply(rhs);
    if (combine_rows(c, to_rat(s)) != x) throw PreconditionError("vector is not in the span of the roots");
    return c;
}

RootDecomposition decompose_root_system(const IntegralLattice& l, const std::vector<IntVec>& roots_in) {
    RootDecomposition dec;
    dec.lattice = l;
    std::vector<IntVec> roots = roots_in;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    dec.total = roots.size();
    for (const auto& r : roots) {
        if (r.size() != l.rank()) throw PreconditionError("root has the wrong length");
        if (l.norm(r) != -2) throw PreconditionError("vector of norm != -2 in root list");
    }
    if (roots.empty()) return dec;

    std::set<IntVec> positive;
    for (const auto& r : roots)
        if (lex_positive(r)) positive.insert(r);
    if (positive.size() * 2 != roots.size()) throw PreconditionError("root list is not closed under negation");

    std::vector<IntVec> simple;
    for (const auto& a : positive) {
        bool decomposable = false;
        for (const auto& b : positive) {
            if (&a == &b) continue;
            IntVec d = sub(a, b);
            if (lex_positive(d) && positive.count(d)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(a);
    }

    std::size_t m = simple.size();
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Int p = l.pair(simple[i], simple[j]);
            if (p == 0) continue;
            if (p != 1) throw PreconditionError("simple roots with pairing other than 0 or 1");
            adj[i].push_back(j);
            adj[j].push_back(i);
        }

    std::vector<bool> seen(m, false);
    for (std::size_t s = 0; s < m; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> nodes;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            nodes.push_back(v);
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        auto [type, order] = label_component(nodes, adj);
        RootComponent comp;
        comp.type = type;
        comp.simple_roots = IntMatrix(order.size(), l.rank());
        for (std::size_t i = 0; i < order.size(); ++i) comp.simple_roots.set_row(i, simple[order[i]]);
        if (comp.simple_roots * l.gram() * comp.simple_roots.transpose() != cartan_matrix(type).scaled(Int(-1)))
            throw PreconditionError("simple roots do not reproduce the Cartan matrix");
        dec.components.push_back(std::move(comp));
    }
    std::sort(dec.components.begin(), dec.components.end(), [](const RootComponent& a, const RootComponent& b) {
        if (a.type.family != b.type.family) return family_rank(a.type.family) < family_rank(b.type.family);
        if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
        return a.simple_roots.row(0) < b.simple_roots.row(0);
    });

    // Assign every root to its component through its simple-root coordinates.
    IntMatrix s = dec.all_simple_roots();
    RatMatrix minv = inverse(to_rat(s * l.gram() * s.transpose()));
    IntMatrix sg = s * l.gram();
    std::vector<std::size_t> offset;
    std::size_t off = 0;
    for (const auto& c : dec.components) {
        offset.push_back(off);
        off += static_cast<std::size_t>(c.type.rank);
    }
    for (const auto& r : roots) {
        RatVec c = minv.apply(to_rat(sg.apply(r)));
        if (!is_integral(c)) throw PreconditionError("root is not an integral combination of simple roots");
        std::size_t owner = dec.components.size();
        for (std::size_t k = 0; k < dec.components.size(); ++k) {
            std::size_t rk = static_cast<std::size_t>(dec.components[k].type.rank);
            bool nz = false;
            for (std::size_t i = 0; i < rk; ++i)
                if (c[offset[k] + i] != 0) nz = true;
            if (!nz) continue;
            if (owner != dec.components.size()) throw PreconditionError("root supported on two components");
            owner = k;
        }
        if (owner == dec.components.size()) throw PreconditionError("root outside the span of the simple roots");
        auto& comp = dec.components[owner];
        IntVec coeff;
        for (std::size_t i = 0; i < static_cast<std::size_t>(comp.type.rank); ++i)
            coeff.push_back(c[offset[owner] + i].get_num());
        comp.roots.push_back(r);
        comp.coefficients.push_back(std::move(coeff));
    }
    for (const auto& c : dec.components)
        if (static_cast<long>(c.roots.size()) != c.type.root_count())
            throw PreconditionError("root count of " + c.type.label() + " does not match its type");
    return dec;
}

RootDecomposition root_decomposition(const IntegralLattice& l) { return decompose_root_system(l, enumerate_roots(l)); }

bool is_niemeier_root_label(const RootDecomposition& d) {
    if (d.components.empty() || d.root_rank() != 24) return false;
    long h = d.components.front().type.coxeter_number();
    for (const auto& c : d.components)
        if (c.type.coxeter_number() != h) return false;
    return true;
}

std::string niemeier_identify(const RootDecomposition& d) {
    const IntegralLattice& l = d.lattice;
    if (l.rank() != 24) throw PreconditionError("lattice rank is not 24");
    auto p = lattice_predicates(l);
    if (!p.is_even || !p.is_unimodular) throw PreconditionError("lattice is not even unimodular");
    if (!is_negative_definite(l)) throw PreconditionError("lattice is not negative definite");
    if (d.components.empty()) return "Leech";
    if (d.root_rank() < 24) throw PreconditionError("root system has rank < 24");
    if (!is_niemeier_root_label(d)) throw PreconditionError("root system " + d.label() + " is not a Niemeier root system");
    return d.label();
}

std::string niemeier_identify(const IntegralLattice& l) {
    if (l.rank() != 24) throw PreconditionError("lattice rank is not 24");
    return niemeier_identify(root_decomposition(l));
}

RatVec fundamental_weight(const RootDecomposition& d, std::size_t comp, int j) {
    if (comp >= d.components.size()) throw PreconditionError("component index out of range");
    if (j < 1 || j > d.components[comp].type.rank) throw PreconditionError("fundamental weight index out of range");
    IntMatrix s = d.all_simple_roots();
    std::size_t pos = static_cast<std::size_t>(j - 1);
    for (std::size_t k = 0; k < comp; ++k) pos += static_cast<std::size_t>(d.components[k].type.rank);
    RatMatrix m = to_rat(s * d.lattice.gram() * s.transpose());
    RatVec e(s.rows(), Rat(0));
    e[pos] = 1;
    RatVec c = inverse(m).apply(e);
    return combine_rows(c, to_rat(s));
}

IntVec highest_root_coefficients(const RootDecomposition& d, std::size_t comp) {
    if (comp >= d.components.size()) throw PreconditionError("component index out of range");
    const auto& c = d.components[comp];
    IntVec best;
    Int best_height;
    for (const auto& co : c.coefficients) {
        Int h = 0;
        for (const auto& x : co) h += x;
        if (best.empty() || h > best_height) {
            best = co;
            best_height = h;
        }
    }
    return best;
}

EnLattice build_En_lattice(int n) {
    if (n < 3 || n > 11) throw UnsupportedError("E_n lattice supported for 3 <= n <= 11");
    EnLattice e;
    e.n = n;
    std::vector<long> d(n + 1, -1);
    d[0] = 1;
    e.lattice = diagonal_lattice(d);
    std::size_t dim = static_cast<std::size_t>(n) + 1;
    e.h = unit_vector(dim, 0);
    for (int i = 1; i <= n; ++i) e.eps.push_back(unit_vector(dim, i));
    e.kappa = scale(e.h, Int(3));
    for (const auto& x : e.eps) e.kappa = sub(e.kappa, x);
    e.simple_roots = IntMatrix(n, dim);
    for (int i = 0; i + 1 < n; ++i) e.simple_roots.set_row(i, sub(e.eps[i + 1], e.eps[i]));
    IntVec last = e.h;
    for (int i = n - 3; i < n; ++i) last = sub(last, e.eps[i]);
    e.simple_roots.set_row(n - 1, last);
    return e;
}

}  // namespace isurf
