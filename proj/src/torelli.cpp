#include "isurf/torelli.hpp"

#include <algorithm>
#include <set>

#include "isurf/monodromy.hpp"
#include "isurf/normal_forms.hpp"

namespace isurf {

namespace {

void require_config(const AnticanonicalConfig& c) {
    if (c.n() < 3) throw PreconditionError("configuration needs at least 3 points");
    for (const auto& p : c.points)
        if (p.dim() != c.points.front().dim()) throw PreconditionError("points lie on different tori");
}

void exceptional_search(std::size_t i, std::size_t n, const Int& s, const Int& q, IntVec& x,
                        std::vector<IntVec>& out) {
    if (i == n + 1) {
        if (s == 0 && q == 0) out.push_back(x);
        return;
    }
    Int rest = Int(static_cast<unsigned long>(n + 1 - i));
    if (s * s > rest * q) return;  // Cauchy-Schwarz on the remaining coordinates
    Int b = isqrt_floor(q);
    for (Int v = -b; v <= b; ++v) {
        x[i] = v;
        exceptional_search(i + 1, n, s - v, q - v * v, x, out);
    }
    x[i] = 0;
}

std::string join_pattern(const std::vector<Int>& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
    return s + "}";
}

}  // namespace

AnticanonicalConfig AnticanonicalConfig::translated(const TorusPoint& t) const {
    AnticanonicalConfig c;
    for (const auto& p : points) c.points.push_back(p + t);
    return c;
}

PeriodAssignment period_map(const AnticanonicalConfig& c) {
    require_config(c);
    std::size_t n = c.n();
    PeriodAssignment out;
    for (std::size_t i = 0; i + 1 < n; ++i) out.values.push_back(c.points[i + 1] - c.points[i]);
    out.values.push_back(-(c.points[n - 3] + c.points[n - 2] + c.points[n - 1]));
    return out;
}

ReconstructionResult e3_orbit(const AnticanonicalConfig& c) {
    require_config(c);
    ReconstructionResult r;
    for (const auto& t : n_torsion(RationalTorus{c.points.front().dim()}, 3)) r.orbit.push_back(c.translated(t));
    std::sort(r.orbit.begin(), r.orbit.end());
    r.canonical = r.orbit.front();
    return r;
}

ReconstructionResult reconstruct_points(const PeriodAssignment& periods, std::size_t n) {
    if (n < 3) throw PreconditionError("reconstruction needs at least 3 points");
    if (periods.values.size() != n) throw PreconditionError("expected one period per simple root");
    const auto& v = periods.values;
    std::size_t g = v.front().dim();
    std::vector<TorusPoint> c{TorusPoint::zero(g)};  // p_i = p_1 + c_i
    for (std::size_t i = 1; i < n; ++i) c.push_back(c.back() + v[i - 1]);
    TorusPoint w = -(v[n - 1] + c[n - 3] + c[n - 2] + c[n - 1]);
    ReconstructionResult r;
    for (const auto& p1 : divide(w, Int(3))) {
        AnticanonicalConfig cfg;
        for (const auto& ci : c) cfg.points.push_back(p1 + ci);
        r.orbit.push_back(std::move(cfg));
    }
    std::sort(r.orbit.begin(), r.orbit.end());
    r.canonical = r.orbit.front();
    return r;
}

std::vector<IntVec> enumerate_exceptional(int n) {
    if (n < 1) throw PreconditionError("point count must be positive");
    if (n >= 9) throw UnsupportedError("exceptional classes form an infinite set for n >= 9");
    // x = d h + sum x_i e_i with sum x_i = 1 - 3d and sum x_i^2 = d^2 + 1.
    auto feasible = [n](long d) { return (9 - n) * d * d - 6 * d + (1 - n) <= 0; };
    long lo = 0, hi = 0;
    while (feasible(lo - 1)) --lo;
    while (feasible(hi + 1)) ++hi;
    std::vector<IntVec> out;
    std::size_t nn = static_cast<std::size_t>(n);
    for (long d = lo; d <= hi; ++d) {
        IntVec x(nn + 1, Int(0));
        x[0] = d;
        exceptional_search(1, nn, Int(1 - 3 * d), Int(d * d + 1), x, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_exceptional(const EnLattice& l, const IntVec& a) {
    return l.lattice.norm(a) == -1 && l.lattice.pair(a, l.kappa) == 1;
}

bool is_effective(const EnLattice& l, const IntVec& a, const IntVec& y) {
    if (!is_exceptional(l, a)) throw PreconditionError("class is not a numerical exceptional curve");
    return l.lattice.pair(a, y) >= 0;
}

GeneratedFixture generate_fixture(const std::string& label, std::uint64_t seed) {
    GeneratedFixture f;
    f.model = build_stratum_model(label);
    f.lambda = compute_lambda(f.model);
    f.jacobian = compute_JW1(f.model, default_jacobian_parameters(label));
    f.restriction = generate_restriction_data(f.model, seed);
    f.dataset = make_dataset(f);
    f.dataset.seed = seed;
    return f;
}

BoundaryDataset make_dataset(const GeneratedFixture& f) {
    BoundaryDataset ds;
    ds.k = f.model.k();
    ds.pair_pattern = pair_index_pattern(build_frame(f.model.label));
    ds.root_label = f.lambda.roots.label();
    ds.jw_dim = f.jacobian.jw.dim;
    for (const auto& m : f.jacobian.markings) ds.markings.push_back(m.matrix());
    ExtensionMap psi = extension_map(f.model, f.lambda, f.restriction, f.jacobian);
    for (auto& b : psi_block_table(psi, f.lambda.roots, f.jacobian))
        ds.blocks.push_back({b.label, b.simple_root_values, b.in_marking, b.factor_zero});
    ds.source = f.model.label;
    return ds;
}

void validate_dataset(const BoundaryDataset& ds) {
    auto fail = [](const std::string& m) { throw InputError("inconsistent dataset: " + m); };
    if (ds.version != 1) fail("unsupported version " + std::to_string(ds.version));
    if (ds.origin_convention != "inflection") fail("unknown origin convention " + ds.origin_convention);
    if (ds.k < 1) fail("no double curves");
    if (ds.markings.size() != ds.k) fail("one marking per double curve expected");
    if (ds.pair_pattern.size() != ds.k * (ds.k - 1) / 2) fail("pair pattern has the wrong length");
    for (const auto& m : ds.markings)
        if (m.rows() != ds.jw_dim || m.cols() != 2) fail("marking has the wrong shape");
    std::vector<std::string> labels;
    std::size_t rank = 0;
    for (const auto& b : ds.blocks) {
        DynkinType t;
        try {
            t = DynkinType::parse(b.label);
        } catch (const std::exception&) {
            fail("bad summand label " + b.label);
        }
        if (b.psi.size() != static_cast<std::size_t>(t.rank)) fail("summand " + b.label + " needs one value per simple root");
        for (const auto& p : b.psi)
            if (p.dim() != ds.jw_dim) fail("psi value has the wrong dimension");
        if (b.in_marking.size() != ds.k) fail("in_marking needs one flag per double curve");
        if (b.factor_zero && b.factor_zero->size() != ds.k) fail("factor_zero needs one flag per double curve");
        labels.push_back(b.label);
        rank += static_cast<std::size_t>(t.rank);
    }
    if (rank > 24) fail("root summands exceed rank 24");
    std::vector<std::string> expected;
    for (std::size_t pos = 0; pos < ds.root_label.size();) {
        std::size_t end = ds.root_label.find('+', pos);
        if (end == std::string::npos) end = ds.root_label.size();
        expected.push_back(ds.root_label.substr(pos, end - pos));
        pos = end + 1;
    }
    std::sort(labels.begin(), labels.end());
    std::sort(expected.begin(), expected.end());
    if (labels != expected) fail("root label does not match the summands");
}

Classification classify_stratum(const BoundaryDataset& ds) {
    validate_dataset(ds);
    Classification c;
    auto step = [&](std::string name, std::string value) { c.steps.push_back({std::move(name), std::move(value)}); };
    std::vector<Int> pattern = ds.pair_pattern;
    std::sort(pattern.begin(), pattern.end());
    step("root_label", ds.root_label);
    if (ds.root_label == "E7+E7+D10") {
        c.label = "rat22";
        return c;
    }
    if (ds.root_label != "E8+E8+E8") {
        c.label = kOutsideClassified;
        return c;
    }
    step("k", std::to_string(ds.k));
    step("pair_pattern", join_pattern(pattern));
    auto is = [&](std::initializer_list<long> p) { return pattern == std::vector<Int>(p.begin(), p.end()); };
    if (ds.k == 3) {
        c.label = is({1, 2, 2}) ? "ell111" : is({1, 1, 2}) ? "ell211" : kOutsideClassified;
        return c;
    }
    if (ds.k == 2 && is({2})) {
        c.label = "enriques";
        return c;
    }
    if (ds.k == 2 && is({1})) {
        std::size_t n = 0;
        for (const auto& b : ds.blocks)
            if (std::any_of(b.in_marking.begin(), b.in_marking.end(), [](bool x) { return x; })) ++n;
        step("single_factor_summands", std::to_string(n));
        c.label = n == 2 ? "rat11" : n == 1 ? "rat21" : kOutsideClassified;
        return c;
    }
    c.label = kOutsideClassified;
    return c;
}

const std::vector<std::size_t>& e8_label_to_bourbaki() {
    static const std::vector<std::size_t> m{7, 6, 5, 4, 3, 2, 0, 1};
    return m;
}

Descriptor111 reconstruct_111(const BoundaryDataset& ds) {
    if (classify_stratum(ds).label != "ell111") throw PreconditionError("dataset is not of ell111 type");
    Descriptor111 d;
    std::vector<std::pair<std::size_t, std::size_t>> iso;
    for (std::size_t i = 0; i < ds.k; ++i)
        for (std::size_t j = i + 1; j < ds.k; ++j) {
            IntMatrix m = hstack({TorusMorphism(ds.markings[i]), TorusMorphism(ds.markings[j])}).matrix();
            if (m.square() && abs(determinant(m)) == 1) iso.emplace_back(i, j);
        }
    if (iso.size() != 1) throw InputError("expected exactly one pair of markings summing isomorphically");
    d.gamma_pair = iso.front();
    for (std::size_t i = 0; i < ds.k; ++i)
        if (i != d.gamma_pair.first && i != d.gamma_pair.second) d.base_marking = i;

    for (std::size_t f = 0; f < ds.k; ++f) {
        std::optional<std::size_t> found;
        for (std::size_t b = 0; b < ds.blocks.size(); ++b)
            if (ds.blocks[b].label == "E8" && ds.blocks[b].in_marking[f]) {
                if (found) throw InputError("two summands map into the same factor");
                found = b;
            }
        if (!found) throw InputError("no E8 summand maps into factor " + std::to_string(f));
        Component111 comp;
        comp.factor = f;
        comp.block = *found;
        TorusMorphism mk(ds.markings[f]);
        std::vector<TorusPoint> pulled;
        for (const auto& p : ds.blocks[*found].psi) pulled.push_back(*mk.preimage(p));
        for (std::size_t a : e8_label_to_bourbaki()) comp.periods.values.push_back(pulled[a]);
        comp.points = reconstruct_points(comp.periods, 8);
        d.components.push_back(std::move(comp));
    }
    return d;
}

std::vector<ReconstructionResult> fixture_orbits_111(const GeneratedFixture& f) {
    const auto& m = f.model;
    const auto& roots = f.lambda.roots;
    std::vector<ReconstructionResult> out;
    for (std::size_t i = 0; i < m.k(); ++i) {
        if (m.degrees[i] != 1) throw PreconditionError("component is not a degree-1 del Pezzo surface");
        const ComponentSurface& z = m.z[i];
        std::optional<std::size_t> comp;
        for (std::size_t c = 0; c < roots.components.size(); ++c) {
            auto b = supporting_block(m, f.lambda.quotient.lift(roots.components[c].simple_roots.row(0)));
            if (b == std::optional<std::size_t>(i + 1)) comp = c;
        }
        if (!comp) throw PreconditionError("no root summand supported on Z" + std::to_string(i + 1));
        const auto& sr = roots.components[*comp].simple_roots;
        std::vector<IntVec> alpha;
        for (std::size_t a : e8_label_to_bourbaki())
            alpha.push_back(m.block(normalize_modulo_xi(m, f.lambda.quotient.lift(sr.row(a))), i + 1));

        // e_1 . a_1 = 1, e_1 . a_j = 0 (j > 1), e_1 . kappa = 1.
        const IntVec& kappa = z.double_curves.at(i);
        std::vector<IntVec> rows = alpha;
        rows.push_back(kappa);
        RatMatrix a = to_rat(IntMatrix::from_rows(rows) * z.lattice.gram());
        RatVec rhs(rows.size(), Rat(0));
        rhs.front() = 1;
        rhs.back() = 1;
        RatVec e1 = solve_row_combination(a.transpose(), rhs);
        if (!is_integral(e1)) throw PreconditionError("simple system does not come from an exceptional basis");
        std::vector<IntVec> eps{to_int(e1)};
        for (std::size_t j = 0; j + 1 < 8; ++j) eps.push_back(add(eps.back(), alpha[j]));
        IntVec h = add(add(alpha[7], eps[5]), add(eps[6], eps[7]));

        const RatMatrix& r = f.restriction.from_z[i];
        TorusPoint rh(r.apply(to_rat(h)));
        TorusPoint c = divide(-rh, Int(3)).front();
        AnticanonicalConfig cfg;
        for (const auto& e : eps) cfg.points.push_back(TorusPoint(r.apply(to_rat(e))) + c);
        out.push_back(e3_orbit(cfg));
    }
    return out;
}

BoundaryDataset swap_factors(const BoundaryDataset& ds, std::size_t a, std::size_t b) {
    if (a >= ds.k || b >= ds.k) throw PreconditionError("factor index out of range");
    BoundaryDataset out = ds;
    std::swap(out.markings[a], out.markings[b]);
    for (auto& blk : out.blocks) {
        std::vector<bool>::swap(blk.in_marking[a], blk.in_marking[b]);
        if (blk.factor_zero) std::vector<bool>::swap((*blk.factor_zero)[a], (*blk.factor_zero)[b]);
    }
    return out;
}

}  // namespace isurf
