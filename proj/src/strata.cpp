#include "isurf/strata.hpp"

#include <algorithm>
#include <random>

#include "isurf/dynkin.hpp"
#include "isurf/normal_forms.hpp"

namespace isurf {

namespace {

using Coeffs = std::map<std::string, long>;

Coeffs& run(Coeffs& c, const std::string& prefix, int from, int to, long value) {
    for (int i = from; i <= to; ++i) c[prefix + std::to_string(i)] += value;
    return c;
}

std::vector<std::string> numbered(const std::string& prefix, int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// Plane blown up in n points; extra names (with square -1) appended after e_n.
ComponentSurface blown_up_plane(const std::string& name, int n, const std::vector<std::string>& extra) {
    ComponentSurface s;
    s.name = name;
    s.basis_names = {"h"};
    for (const auto& e : numbered("e", 1, n)) s.basis_names.push_back(e);
    for (const auto& e : extra) s.basis_names.push_back(e);
    std::vector<long> d(s.basis_names.size(), -1);
    d[0] = 1;
    s.lattice = diagonal_lattice(d);
    Coeffs k{{"h", -3}};
    for (std::size_t i = 1; i < s.basis_names.size(); ++i) k[s.basis_names[i]] = 1;
    s.canonical_class = s.vec(k);
    return s;
}

// Elliptic ruled surface with sigma^2 = 1, sigma.f = 1, f^2 = 0, blown up in n points.
ComponentSurface elliptic_ruled(const std::string& name, int n) {
    ComponentSurface s;
    s.name = name;
    s.basis_names = {"s", "f"};
    for (const auto& e : numbered("e", 1, n)) s.basis_names.push_back(e);
    std::size_t r = s.basis_names.size();
    IntMatrix g(r, r);
    g(0, 0) = 1;
    g(0, 1) = g(1, 0) = 1;
    for (std::size_t i = 2; i < r; ++i) g(i, i) = -1;
    s.lattice = IntegralLattice(g);
    Coeffs k{{"s", -2}, {"f", 1}};
    run(k, "e", 1, n, 1);
    s.canonical_class = s.vec(k);
    return s;
}

// U + E8 + <-1>, the numerical lattice of the blown-up Enriques surface.
ComponentSurface enriques_surface(const std::string& name) {
    ComponentSurface s;
    s.name = name;
    s.basis_names = {"f1", "f2"};
    for (const auto& a : numbered("a", 1, 8)) s.basis_names.push_back(a);
    s.basis_names.push_back("e");
    s.lattice = orthogonal_sum({hyperbolic_plane(), root_lattice(DynkinType{Family::E, 8}), diagonal_lattice({-1})});
    s.canonical_class = s.vec({{"e", 1}});
    return s;
}

bool is_rational_label(const std::string& l) { return l == "rat11" || l == "rat21" || l == "rat22"; }

void require_rank(const StratumModel& m, std::size_t b, const IntVec& v) {
    std::size_t r = b == 0 ? m.y.lattice.rank() : m.z.at(b - 1).lattice.rank();
    if (v.size() != r) throw PreconditionError("class has the wrong length for its component");
}

// Integer c with v = c w, if any.
std::optional<Int> integer_multiple(const IntVec& v, const IntVec& w) {
    std::size_t p = 0;
    while (p < w.size() && w[p] == 0) ++p;
    if (p == w.size()) return is_zero(v) ? std::optional<Int>(0) : std::nullopt;
    if (v[p] % w[p] != 0) return std::nullopt;
    Int c = v[p] / w[p];
    if (scale(w, c) != v) return std::nullopt;
    return c;
}

std::mt19937_64::result_type draw(std::mt19937_64& rng, std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

// Random rational in [0, 1) with denominator between 5 and 64.
Rat random_point_coordinate(std::mt19937_64& rng) {
    auto den = 5 + draw(rng, 60);
    auto num = draw(rng, den);
    return Rat(Int(static_cast<unsigned long>(num))) / Rat(Int(static_cast<unsigned long>(den)));
}

// Row x with x . v_j = t_j (mod 1) for the constraint columns v_j; free coordinates random.
RatVec solve_mod_one(const IntMatrix& constraints, const RatVec& targets, std::mt19937_64& rng) {
    // constraints: rows v_j. Solve A x = t with A = constraints.
    SmithForm s = smith_normal_form(constraints);
    RatVec w = to_rat(s.left).apply(targets);
    std::size_t n = constraints.cols();
    RatVec y(n, Rat(0));
    for (std::size_t i = 0; i < constraints.rows(); ++i) {
        if (i < s.rank)
            y[i] = frac(w[i]) / Rat(s.diagonal[i]);
        else if (w[i].get_den() != 1)
            throw PreconditionError("inconsistent restriction constraints");
    }
    for (std::size_t i = s.rank; i < n; ++i) y[i] = random_point_coordinate(rng);
    RatVec x = to_rat(s.right).apply(y);
    for (auto& c : x) c = frac(c);
    return x;
}

}  // namespace

const std::vector<std::string>& stratum_labels() {
    static const std::vector<std::string> labels{"rat11", "rat21", "rat22", "enriques", "ell211", "ell111"};
    return labels;
}

bool is_stratum_label(const std::string& s) {
    const auto& l = stratum_labels();
    return std::find(l.begin(), l.end(), s) != l.end();
}

IntVec ComponentSurface::vec(const std::map<std::string, long>& coeffs) const {
    IntVec v(basis_names.size(), Int(0));
    for (const auto& [name, c] : coeffs) {
        auto it = std::find(basis_names.begin(), basis_names.end(), name);
        if (it == basis_names.end()) throw InputError("unknown basis element " + name + " on " + this->name);
        v[static_cast<std::size_t>(it - basis_names.begin())] += c;
    }
    return v;
}

std::string ComponentSurface::format(const IntVec& v) const {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Int a = abs(v[i]);
        if (s.empty())
            s += v[i] < 0 ? "-" : "";
        else
            s += v[i] < 0 ? " - " : " + ";
        if (a != 1) s += a.get_str();
        s += basis_names[i];
    }
    return s.empty() ? "0" : s;
}

IntVec StratumModel::embed_y(const IntVec& v) const {
    require_rank(*this, 0, v);
    IntVec out(ambient.rank(), Int(0));
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

IntVec StratumModel::embed_z(std::size_t i, const IntVec& v) const {
    require_rank(*this, i + 1, v);
    IntVec out(ambient.rank(), Int(0));
    std::copy(v.begin(), v.end(), out.begin() + static_cast<long>(offsets[i + 1]));
    return out;
}

IntVec StratumModel::block(const IntVec& x, std::size_t b) const {
    if (x.size() != ambient.rank()) throw PreconditionError("ambient vector has the wrong length");
    std::size_t end = b + 1 < offsets.size() ? offsets[b + 1] : ambient.rank();
    return IntVec(x.begin() + static_cast<long>(offsets.at(b)), x.begin() + static_cast<long>(end));
}

ComponentSurface del_pezzo(const std::string& name, long m, std::size_t curve_index) {
    if (m < 1 || m > 8) throw UnsupportedError("del Pezzo degree must lie in 1..8");
    int n = static_cast<int>(9 - m);
    ComponentSurface s = blown_up_plane(name, n, {});
    s.double_curves[curve_index] = neg(s.canonical_class);
    return s;
}

CurveClassSolve solve_rat22_curve_class() {
    // gamma = a h - (e1..e10) + b e11: 3a + b = 10 and a^2 - 10 - b^2 = 2.
    for (long a = 0; a <= 10; ++a) {
        long b = 10 - 3 * a;
        if (a * a - 10 - b * b != 2) continue;
        ComponentSurface p = blown_up_plane("P2(11)", 11, {});
        CurveClassSolve r;
        r.a = a;
        r.b = b;
        Coeffs c{{"h", a}, {"e11", b}};
        r.gamma = p.vec(run(c, "e", 1, 10, -1));
        return r;
    }
    throw PreconditionError("no integral curve class found");
}

StratumModel build_stratum_model(const std::string& label) {
    StratumModel m;
    m.label = label;
    std::vector<long> deg;
    Coeffs l;
    if (label == "rat11") {
        m.y = blown_up_plane("Y", 10, {});
        Coeffs d1{{"h", 6}, {"e10", -1}}, d2{{"h", 6}, {"e9", -1}, {"e10", -2}};
        m.y.double_curves[0] = m.y.vec(run(d1, "e", 1, 9, -2));
        m.y.double_curves[1] = m.y.vec(run(d2, "e", 1, 8, -2));
        l = {{"h", 9}, {"e9", -2}, {"e10", -2}};
        run(l, "e", 1, 8, -3);
        deg = {1, 1};
    } else if (label == "rat21") {
        m.y = blown_up_plane("Y", 9, {"p1", "p2"});
        Coeffs d1{{"h", 6}, {"p1", -1}, {"p2", -1}}, d2{{"h", 3}, {"p1", -1}, {"p2", -1}};
        m.y.double_curves[0] = m.y.vec(run(d1, "e", 1, 9, -2));
        m.y.double_curves[1] = m.y.vec(run(d2, "e", 1, 8, -1));
        l = {{"h", 6}, {"e9", -1}, {"p1", -1}, {"p2", -1}};
        run(l, "e", 1, 8, -2);
        deg = {2, 1};
    } else if (label == "rat22") {
        m.y = blown_up_plane("Y", 11, {"C"});
        CurveClassSolve g = solve_rat22_curve_class();
        IntVec gamma = g.gamma;
        gamma.push_back(0);
        m.y.double_curves[0] = sub(gamma, m.y.vec({{"C", 2}}));  // 4h - e1..e10 - 2e11 - 2C
        Coeffs d2{{"h", 3}};
        m.y.double_curves[1] = m.y.vec(run(d2, "e", 1, 11, -1));
        l = {{"h", 4}, {"e11", -2}, {"C", -1}};
        run(l, "e", 1, 10, -1);
        deg = {2, 2};
    } else if (label == "enriques") {
        m.y = enriques_surface("Y");
        m.y.double_curves[0] = m.y.vec({{"f1", 1}, {"e", -1}});
        m.y.double_curves[1] = m.y.vec({{"f2", 1}, {"e", -1}});
        l = {{"f1", 1}, {"f2", 1}, {"e", -1}};
        deg = {1, 1};
    } else if (label == "ell111") {
        m.y = elliptic_ruled("Y", 2);
        m.y.double_curves[0] = m.y.vec({{"s", 2}, {"f", -1}, {"e1", -1}});
        m.y.double_curves[1] = m.y.vec({{"s", 2}, {"f", -1}, {"e2", -1}});
        m.y.double_curves[2] = m.y.vec({{"s", 1}, {"e1", -1}, {"e2", -1}});
        l = {{"s", 3}, {"f", -1}, {"e1", -1}, {"e2", -1}};
        deg = {1, 1, 1};
    } else if (label == "ell211") {
        m.y = elliptic_ruled("Y", 3);
        m.y.double_curves[0] = m.y.vec({{"s", 2}, {"f", -1}, {"e2", -1}, {"e3", -1}});
        m.y.double_curves[1] = m.y.vec({{"s", 1}, {"e1", -1}, {"e2", -1}});
        m.y.double_curves[2] = m.y.vec({{"s", 1}, {"e1", -1}, {"e3", -1}});
        l = {{"s", 2}, {"e1", -1}, {"e2", -1}, {"e3", -1}};
        deg = {2, 1, 1};
    } else {
        throw InputError("unknown stratum label: " + label);
    }
    m.l_class = m.y.vec(l);
    m.degrees = deg;
    for (std::size_t i = 0; i < deg.size(); ++i)
        m.z.push_back(del_pezzo("Z" + std::to_string(i + 1), deg[i], i));

    std::vector<IntegralLattice> parts{m.y.lattice};
    m.offsets = {0};
    std::size_t off = m.y.lattice.rank();
    for (const auto& z : m.z) {
        parts.push_back(z.lattice);
        m.offsets.push_back(off);
        off += z.lattice.rank();
    }
    m.ambient = orthogonal_sum(parts);
    for (std::size_t i = 0; i < m.k(); ++i)
        m.xi.push_back(sub(m.embed_y(m.y.double_curves.at(i)), m.embed_z(i, m.z[i].double_curves.at(i))));
    m.l_ambient = m.embed_y(m.l_class);
    return m;
}

std::vector<ModelCheck> model_invariants(const StratumModel& m) {
    std::vector<ModelCheck> out;
    auto check = [&](std::string name, bool ok, std::string detail = "") {
        out.push_back({std::move(name), ok, std::move(detail)});
    };
    const auto& y = m.y.lattice;
    IntVec ksum = m.y.canonical_class;
    for (std::size_t i = 0; i < m.k(); ++i) {
        std::string s = std::to_string(i + 1);
        const IntVec& d = m.y.double_curves.at(i);
        const IntVec& dz = m.z[i].double_curves.at(i);
        Int dy2 = y.norm(d), dz2 = m.z[i].lattice.norm(dz);
        check("D" + s + "^2 on Y = -m" + s, dy2 == -m.degrees[i], dy2.get_str());
        check("D" + s + "^2 on Z" + s + " = m" + s, dz2 == m.degrees[i], dz2.get_str());
        check("adjunction on Y for D" + s, y.pair(m.y.canonical_class, d) + dy2 == 0);
        check("adjunction on Z" + s + " for D" + s, m.z[i].lattice.pair(m.z[i].canonical_class, dz) + dz2 == 0);
        for (std::size_t j = i + 1; j < m.k(); ++j)
            check("D" + s + ".D" + std::to_string(j + 1) + " = 0", y.pair(d, m.y.double_curves.at(j)) == 0);
        check("L.D" + s + " = 0", y.pair(m.l_class, d) == 0);
        ksum = add(ksum, d);
    }
    check("L = K + sum D", ksum == m.l_class, m.y.format(m.l_class));
    check("L^2 = 1", y.norm(m.l_class) == 1);

    IntMatrix x = IntMatrix::from_rows(m.xi);
    IntMatrix xl = vstack(x, IntMatrix::from_rows({m.l_ambient}));
    IntMatrix gram = xl * m.ambient.gram() * xl.transpose();
    IntVec diag(m.k() + 1, Int(0));
    diag.back() = 1;
    check("Gram(xi, L) = diag(0, ..., 0, 1)", gram == IntMatrix::diagonal(diag));
    check("span of xi is primitive", is_saturated(x));
    std::size_t r = m.ambient.rank() - (2 * m.k() + 1);
    check("ambient rank - (2k + 1) = 24", r == 24, std::to_string(r));
    return out;
}

LambdaData compute_lambda(const StratumModel& m) {
    for (const auto& c : model_invariants(m))
        if (!c.pass) throw PreconditionError("model invariant failed: " + c.name);
    LambdaData d;
    IntMatrix s = vstack(IntMatrix::from_rows(m.xi), IntMatrix::from_rows({m.l_ambient}));
    d.perp = orthogonal_complement(m.ambient, s);
    d.quotient = quotient_by_isotropic(m.ambient, d.perp.basis, IntMatrix::from_rows(m.xi));
    const IntegralLattice& lam = d.quotient.lattice;
    d.predicates = lattice_predicates(lam);
    d.signature = inertia(lam.gram());
    if (lam.rank() != 24 || !d.predicates.is_even || !d.predicates.is_unimodular || d.signature.negative != 24)
        throw PreconditionError("Lambda is not an even unimodular negative definite lattice of rank 24");
    d.roots = root_decomposition(lam);
    IntMatrix simple = d.roots.all_simple_roots();
    if (simple.rows() == lam.rank()) {
        SmithForm sf = smith_normal_form(simple);
        d.root_quotient = FiniteAbelianGroup::from_diagonal(sf.diagonal);
        d.root_index = d.root_quotient.order();
    } else {
        d.root_index = 0;  // infinite
    }
    return d;
}

std::optional<std::size_t> supporting_block(const StratumModel& m, const IntVec& x) {
    for (std::size_t b = 0; b <= m.k(); ++b) {
        IntVec v = x;
        bool ok = true;
        // Clear every Z-block except Z_{b-1} with multiples of xi.
        for (std::size_t j = 0; j < m.k() && ok; ++j) {
            if (b == j + 1) continue;
            auto c = integer_multiple(m.block(v, j + 1), m.z[j].double_curves.at(j));
            if (!c) {
                ok = false;
                break;
            }
            v = add(v, scale(m.xi[j], *c));
        }
        if (!ok) continue;
        if (b == 0) return b;
        auto c = integer_multiple(m.block(v, 0), m.y.double_curves.at(b - 1));
        if (c) return b;
    }
    return std::nullopt;
}

IntVec normalize_modulo_xi(const StratumModel& m, const IntVec& x) {
    auto b = supporting_block(m, x);
    if (!b) return x;
    IntVec v = x;
    for (std::size_t j = 0; j < m.k(); ++j) {
        if (*b == j + 1) continue;
        v = add(v, scale(m.xi[j], *integer_multiple(m.block(v, j + 1), m.z[j].double_curves.at(j))));
    }
    if (*b > 0) v = sub(v, scale(m.xi[*b - 1], *integer_multiple(m.block(v, 0), m.y.double_curves.at(*b - 1))));
    return v;
}

std::vector<TorusPoint> default_jacobian_parameters(const std::string& label) {
    auto pt = [](std::initializer_list<Rat> c) { return TorusPoint(RatVec(c)); };
    Rat h(1, 2);
    if (label == "enriques") return {pt({h, 0, h, 0})};
    if (label == "ell111") return {pt({h, 0}), pt({0, h})};
    if (label == "ell211") return {pt({h, 0})};
    if (is_rational_label(label)) return {};
    throw InputError("unknown stratum label: " + label);
}

JacobianModel compute_JW1(const StratumModel& m, const std::vector<TorusPoint>& params) {
    JacobianModel j;
    j.parameters = params;
    auto check_two_torsion = [](const TorusPoint& p, std::size_t dim) {
        if (p.dim() != dim || p.order() != 2) throw PreconditionError("isogeny kernel must be a point of order 2");
    };
    if (is_rational_label(m.label)) {
        if (!params.empty()) throw PreconditionError("rational strata take no Jacobian parameters");
        j.jw.dim = 4;
        j.assembly = TorusMorphism::identity(4);
        IntMatrix a = IntMatrix::identity(4);
        j.markings = {TorusMorphism(a.cols_subset({0, 1})), TorusMorphism(a.cols_subset({2, 3}))};
    } else if (m.label == "enriques") {
        if (params.size() != 1) throw PreconditionError("Enriques stratum needs one torsion point");
        const TorusPoint& eta = params[0];
        check_two_torsion(eta, 4);
        if ((eta[0] == 0 && eta[1] == 0) || (eta[2] == 0 && eta[3] == 0))
            throw PreconditionError("Enriques torsion point must be nonzero on both curves");
        TorusQuotient q = quotient_torus(RationalTorus{4}, generated_subgroup({eta}));
        j.jw = q.torus;
        j.assembly = q.projection;
        const IntMatrix& p = q.projection.matrix();
        j.markings = {TorusMorphism(p.cols_subset({0, 1})), TorusMorphism(p.cols_subset({2, 3}))};
    } else {
        std::vector<TorusMorphism> pullbacks;
        if (m.label == "ell111") {
            if (params.size() != 2) throw PreconditionError("ell111 needs two isogeny kernels");
            check_two_torsion(params[0], 2);
            check_two_torsion(params[1], 2);
            if (params[0] == params[1]) throw PreconditionError("the two isogeny kernels must differ");
            pullbacks = {isogeny_with_kernel(params[0]), isogeny_with_kernel(params[1]), TorusMorphism::identity(2)};
        } else {
            if (params.size() != 1) throw PreconditionError("ell211 needs one isogeny kernel");
            check_two_torsion(params[0], 2);
            pullbacks = {isogeny_with_kernel(params[0]), TorusMorphism::identity(2), TorusMorphism::identity(2)};
        }
        GluedJacobian g = glue_over_base(pullbacks);
        j.jw = g.jw;
        j.assembly = g.assembly;
        j.markings = g.markings;
    }
    return j;
}

RestrictionData generate_restriction_data(const StratumModel& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RestrictionData r;
    for (std::size_t i = 0; i < m.k(); ++i) {
        const auto& z = m.z[i];
        RatMatrix rz(2, z.lattice.rank());
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < rz.cols(); ++b) rz(a, b) = random_point_coordinate(rng);
        RatVec target = rz.apply(to_rat(z.double_curves.at(i)));

        // Rows: D_j (j != i), L, D_i with targets 0, 0, -r_Z(D'_i).
        std::vector<IntVec> rows;
        for (std::size_t j = 0; j < m.k(); ++j)
            if (j != i) rows.push_back(m.y.double_curves.at(j));
        rows.push_back(m.l_class);
        rows.push_back(m.y.double_curves.at(i));
        IntMatrix c = IntMatrix::from_rows(rows);
        RatMatrix ry(2, m.y.lattice.rank());
        for (std::size_t a = 0; a < 2; ++a) {
            RatVec t(rows.size(), Rat(0));
            t.back() = -target[a];
            ry.set_row(a, solve_mod_one(c, t, rng));
        }
        r.from_y.push_back(ry);
        r.from_z.push_back(rz);
    }
    return r;
}

RestrictionData shift_origins(const StratumModel& m, const RestrictionData& r, const std::vector<TorusPoint>& c) {
    if (c.size() != m.k()) throw PreconditionError("one origin shift per double curve");
    RestrictionData out = r;
    for (std::size_t i = 0; i < m.k(); ++i) {
        IntVec dy = m.y.lattice.gram().apply(m.y.double_curves.at(i));
        IntVec dz = m.z[i].lattice.gram().apply(m.z[i].double_curves.at(i));
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < dy.size(); ++b) out.from_y[i](a, b) = frac(out.from_y[i](a, b) + c[i][a] * dy[b]);
            for (std::size_t b = 0; b < dz.size(); ++b) out.from_z[i](a, b) = frac(out.from_z[i](a, b) + c[i][a] * dz[b]);
        }
    }
    return out;
}

std::vector<TorusPoint> psi_on_curves(const StratumModel& m, const RestrictionData& r, const IntVec& x) {
    if (r.from_y.size() != m.k() || r.from_z.size() != m.k())
        throw PreconditionError("restriction data does not match the model");
    IntVec u = m.block(x, 0);
    std::vector<TorusPoint> out;
    for (std::size_t i = 0; i < m.k(); ++i) {
        IntVec v = m.block(x, i + 1);
        if (m.y.lattice.pair(u, m.y.double_curves.at(i)) != m.z[i].lattice.pair(v, m.z[i].double_curves.at(i)))
            throw PreconditionError("degree mismatch on D" + std::to_string(i + 1));
        RatVec p = r.from_z[i].apply(to_rat(v));
        RatVec q = r.from_y[i].apply(to_rat(u));
        out.emplace_back(sub(p, q));
    }
    return out;
}

TorusPoint psi_ambient(const StratumModel& m, const RestrictionData& r, const JacobianModel& j, const IntVec& x) {
    return j.assembly.apply(concat(psi_on_curves(m, r, x)));
}

TorusPoint ExtensionMap::operator()(const IntVec& coords) const {
    if (coords.size() != basis_values.size()) throw PreconditionError("Lambda vector has the wrong length");
    if (basis_values.empty()) throw PreconditionError("empty extension map");
    TorusPoint acc = TorusPoint::zero(basis_values.front().dim());
    for (std::size_t i = 0; i < coords.size(); ++i) acc = acc + basis_values[i].times(coords[i]);
    return acc;
}

ExtensionMap extension_map(const StratumModel& m, const LambdaData& lam, const RestrictionData& r,
                           const JacobianModel& j) {
    ExtensionMap e;
    for (std::size_t b = 0; b < lam.quotient.lifts.rows(); ++b)
        e.basis_values.push_back(psi_ambient(m, r, j, lam.quotient.lifts.row(b)));
    return e;
}

std::vector<PsiBlock> psi_block_table(const ExtensionMap& psi, const RootDecomposition& roots,
                                      const JacobianModel& j) {
    std::optional<IntMatrix> split;
    IntMatrix all = hstack(j.markings).matrix();
    if (all.square() && abs(determinant(all)) == 1) split = unimodular_inverse(all);

    std::vector<PsiBlock> out;
    for (const auto& c : roots.components) {
        PsiBlock b;
        b.label = c.type.label();
        for (std::size_t s = 0; s < c.simple_roots.rows(); ++s) b.simple_root_values.push_back(psi(c.simple_roots.row(s)));
        for (const auto& mk : j.markings) {
            bool in = std::all_of(b.simple_root_values.begin(), b.simple_root_values.end(),
                                  [&](const TorusPoint& p) { return mk.contains_in_image(p); });
            b.in_marking.push_back(in);
        }
        if (split) {
            std::vector<bool> zero(j.markings.size(), true);
            for (const auto& p : b.simple_root_values) {
                TorusPoint parts = TorusMorphism(*split).apply(p);
                std::size_t off = 0;
                for (std::size_t f = 0; f < j.markings.size(); ++f) {
                    for (std::size_t t = 0; t < j.markings[f].source_dim(); ++t)
                        if (parts[off + t] != 0) zero[f] = false;
                    off += j.markings[f].source_dim();
                }
            }
            b.factor_zero = zero;
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::size_t single_factor_count(const std::vector<PsiBlock>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks)
        if (std::any_of(b.in_marking.begin(), b.in_marking.end(), [](bool x) { return x; })) ++n;
    return n;
}

Beta11 construct_beta11(const StratumModel& m, const LambdaData& lam) {
    if (m.label != "rat22") throw PreconditionError("beta_11 is defined for the (2,2) stratum");
    const RootDecomposition& d = lam.roots;
    if (d.label() != "E7+E7+D10") throw PreconditionError("root system is not E7+E7+D10");
    Beta11 b;
    std::vector<std::size_t> e7;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        if (d.components[c].type.family == Family::D) b.d10 = c;
        else e7.push_back(c);
    }
    // The first E7 is the one coming from Z_1.
    auto block_of = [&](std::size_t c) {
        return supporting_block(m, lam.quotient.lift(d.components[c].simple_roots.row(0)));
    };
    if (block_of(e7[0]) == std::optional<std::size_t>(1)) {
        b.first_e7 = e7[0];
        b.second_e7 = e7[1];
    } else if (block_of(e7[1]) == std::optional<std::size_t>(1)) {
        b.first_e7 = e7[1];
        b.second_e7 = e7[0];
    } else {
        throw PreconditionError("no E7 summand supported on Z1");
    }

    RatVec w7 = fundamental_weight(d, b.first_e7, 7);
    for (int spin : {9, 10}) {
        RatVec w = add(fundamental_weight(d, b.d10, spin), w7);
        if (!is_integral(w)) continue;
        b.coords = to_int(w);
        b.used_outer = spin == 10;
        b.weight_norms = lam.lattice().pair(fundamental_weight(d, b.d10, spin), fundamental_weight(d, b.d10, spin)) +
                         lam.lattice().pair(w7, w7);
        break;
    }
    if (b.coords.empty()) throw PreconditionError("no integral weight combination; labeling is inconsistent");
    b.norm = lam.lattice().norm(b.coords);
    RatVec c = d.simple_root_coordinates(to_rat(b.coords));
    b.order = lcm_of_denominators(c);
    return b;
}

CompletedRoots completed_E8_roots(const StratumModel& m) {
    CompletedRoots out;
    EnLattice dp2 = build_En_lattice(7);
    auto z1_chain = [&](const IntVec& eps_y) {
        // beta = eps + eps', with eps' = e1 on Z1, followed by the E7 simple roots of Z1.
        std::vector<IntVec> chain{add(m.embed_y(eps_y), m.embed_z(0, dp2.eps[0]))};
        for (std::size_t i = 0; i < dp2.simple_roots.rows(); ++i) chain.push_back(m.embed_z(0, dp2.simple_roots.row(i)));
        return chain;
    };
    if (m.label == "rat21") {
        Coeffs eps{{"h", -3}, {"e9", 1}, {"p1", 1}};
        out.chains.push_back(z1_chain(m.y.vec(run(eps, "e", 1, 8, 1))));
        std::vector<IntVec> third;
        for (int i = 1; i <= 7; ++i)
            third.push_back(m.embed_y(m.y.vec({{"e" + std::to_string(i + 1), 1}, {"e" + std::to_string(i), -1}})));
        third.push_back(m.embed_y(m.y.vec({{"h", 1}, {"e1", -1}, {"e2", -1}, {"e3", -1}})));
        out.chains.push_back(third);
        out.extra.push_back(m.embed_y(m.y.vec({{"p1", 1}, {"p2", -1}})));
    } else if (m.label == "ell211") {
        out.chains.push_back(z1_chain(m.y.vec({{"s", -1}, {"f", 1}})));
    } else {
        throw PreconditionError("completed E8 roots are defined for rat21 and ell211");
    }
    return out;
}

}  // namespace isurf
