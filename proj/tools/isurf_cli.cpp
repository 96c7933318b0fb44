// Command-line front end: fixture generation, verification certificates, classification,
// reconstruction and normal forms. JSON on stdout, a one-line summary on stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "isurf/errors.hpp"
#include "isurf/monodromy.hpp"
#include "isurf/serialize.hpp"
#include "isurf/strata.hpp"
#include "isurf/torelli.hpp"

using namespace isurf;

namespace {

constexpr const char* kVersion = "isurf 1.0.0";

enum Exit { kOk = 0, kAssertionFailed = 1, kInputError = 2, kPrecondition = 3 };

// Values each stratum is expected to produce.
struct Expected {
    std::string root_label;
    std::size_t roots;
    long index;
    std::string root_quotient;
    std::string pair_pattern;
};

const std::map<std::string, Expected>& expected_table() {
    static const std::map<std::string, Expected> t{
        {"rat11", {"E8+E8+E8", 720, 1, "0", "1"}},
        {"rat21", {"E8+E8+E8", 720, 1, "0", "1"}},
        {"rat22", {"E7+E7+D10", 432, 4, "Z/2 x Z/2", "1"}},
        {"enriques", {"E8+E8+E8", 720, 1, "0", "2"}},
        {"ell211", {"E8+E8+E8", 720, 1, "0", "1,1,2"}},
        {"ell111", {"E8+E8+E8", 720, 1, "0", "1,2,2"}},
    };
    return t;
}

struct Assertion {
    std::string name, expected, computed;
    bool pass() const { return expected == computed; }
};

struct Certificate {
    std::vector<std::string> command;
    std::string digest_input;
    Json result = Json::object();
    std::vector<Assertion> assertions;

    template <class A, class B>
    void check(const std::string& name, const A& expected, const B& computed) {
        assertions.push_back({name, str(expected), str(computed)});
    }

    static std::string str(const std::string& s) { return s; }
    static std::string str(const char* s) { return s; }
    static std::string str(bool b) { return b ? "true" : "false"; }
    static std::string str(const Int& n) { return n.get_str(); }
    static std::string str(const Rat& q) { return to_string(q); }
    template <class T>
    static std::string str(const T& v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }

    bool all_pass() const {
        for (const auto& a : assertions)
            if (!a.pass()) return false;
        return true;
    }

    Json to_json() const {
        Json j;
        j["version"] = kVersion;
        j["format_version"] = kFormatVersion;
        j["command"] = command;
        j["input_digest"] = "fnv1a64:" + hex64(fnv1a64(digest_input));
        j["result"] = result;
        Json as = Json::array();
        for (const auto& a : assertions) {
            Json ja;
            ja["name"] = a.name;
            ja["expected"] = a.expected;
            ja["computed"] = a.computed;
            ja["pass"] = a.pass();
            as.push_back(ja);
        }
        j["assertions"] = as;
        j["pass"] = all_pass();
        return j;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << kVersion << "\ncommand:";
        for (const auto& c : command) os << ' ' << c;
        os << "\ninput digest: fnv1a64:" << hex64(fnv1a64(digest_input)) << '\n';
        for (const auto& a : assertions)
            os << (a.pass() ? "PASS " : "FAIL ") << a.name << ": expected " << a.expected << ", computed " << a.computed
               << '\n';
        os << "result: " << result.dump(2) << '\n';
        return os.str();
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const std::vector<Int>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
    return s;
}

Json points_json(const std::vector<TorusPoint>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(to_json(p));
    return a;
}

void require_stratum(const std::string& label) {
    if (!is_stratum_label(label)) throw InputError("unknown stratum '" + label + "'");
}

void lambda_assertions(Certificate& c, const std::string& label, const LambdaData& lam) {
    const Expected& e = expected_table().at(label);
    c.check("lambda.rank", std::size_t{24}, lam.lattice().rank());
    c.check("lambda.even", true, lam.predicates.is_even);
    c.check("lambda.unimodular", true, lam.predicates.is_unimodular);
    c.check("lambda.negative_definite", true, lam.signature.negative == 24 && lam.signature.positive == 0);
    c.check("roots.label", e.root_label, lam.roots.label());
    c.check("roots.count", e.roots, lam.roots.total);
    c.check("roots.index", Int(e.index), lam.root_index);
    c.check("roots.quotient", e.root_quotient, lam.root_quotient.to_string());
}

Json lambda_json(const LambdaData& lam) {
    Json j;
    j["rank"] = lam.lattice().rank();
    j["even"] = lam.predicates.is_even;
    j["unimodular"] = lam.predicates.is_unimodular;
    j["signature"] = {lam.signature.positive, lam.signature.negative, lam.signature.zero};
    j["root_label"] = lam.roots.label();
    j["root_count"] = lam.roots.total;
    j["root_index"] = to_json(lam.root_index);
    j["root_quotient"] = lam.root_quotient.to_string();
    return j;
}

Certificate cmd_verify_stratum(const std::string& label) {
    require_stratum(label);
    Certificate c;
    StratumModel m = build_stratum_model(label);
    for (const auto& chk : model_invariants(m)) c.check("model." + chk.name, true, chk.pass);
    LambdaData lam = compute_lambda(m);
    lambda_assertions(c, label, lam);
    auto pattern = pair_index_pattern(build_frame(label));
    c.check("monodromy.pair_pattern", expected_table().at(label).pair_pattern, join(pattern));
    c.result["stratum"] = label;
    c.result["k"] = m.k();
    c.result["degrees"] = m.degrees;
    c.result["lambda"] = lambda_json(lam);
    c.result["pair_pattern"] = join(pattern);
    if (label == "rat22") {
        CurveClassSolve s = solve_rat22_curve_class();
        c.check("rat22.curve_class", std::string("(4,-2)"), "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")");
        Beta11 b = construct_beta11(m, lam);
        c.check("beta11.norm", Int(-4), b.norm);
        c.check("beta11.weight_norms", Rat(-4), b.weight_norms);
        c.check("beta11.order", Int(4), b.order);
        c.result["curve_class"] = to_json(s.gamma);
        c.result["beta11"] = {{"coords", to_json(b.coords)}, {"norm", to_json(b.norm)}, {"order", to_json(b.order)}};
    }
    return c;
}

Certificate cmd_roots(const std::string& label) {
    require_stratum(label);
    Certificate c;
    LambdaData lam = compute_lambda(build_stratum_model(label));
    lambda_assertions(c, label, lam);
    Json comps = Json::array();
    for (std::size_t i = 0; i < lam.roots.components.size(); ++i) {
        const auto& comp = lam.roots.components[i];
        Json jc;
        jc["type"] = comp.type.label();
        jc["roots"] = comp.roots.size();
        jc["simple_roots"] = to_json(comp.simple_roots);
        jc["highest_root"] = to_json(highest_root_coefficients(lam.roots, i));
        comps.push_back(jc);
        c.check("roots.component" + std::to_string(i) + ".count", comp.type.root_count(),
                static_cast<long>(comp.roots.size()));
    }
    c.result["stratum"] = label;
    c.result["lambda_gram"] = to_json(lam.lattice().gram());
    c.result["components"] = comps;
    return c;
}

std::string beta_combination(const MonodromyFrame& f, const IntVec& v) {
    RatMatrix b = to_rat(IntMatrix::from_rows({f.beta[0], f.beta[1]}));
    RatVec x = solve_row_combination(b, to_rat(v));
    return "(" + to_string(x[0]) + "," + to_string(x[1]) + ")";
}

Certificate cmd_monodromy(const std::string& label) {
    require_stratum(label);
    Certificate c;
    MonodromyFrame f = build_frame(label);
    std::vector<IntMatrix> ops;
    for (std::size_t i = 0; i < f.k(); ++i) ops.push_back(picard_lefschetz(f, i));
    for (std::size_t i = 0; i < f.k(); ++i) {
        std::string n = "N" + std::to_string(i + 1);
        c.check(n + ".squared_zero", true, (ops[i] * ops[i]).is_zero());
        c.check(n + ".skew", true, is_skew(f.ambient, ops[i]));
        for (std::size_t j = 0; j < f.k(); ++j)
            if (j != i) c.check(n + ".N" + std::to_string(j + 1) + "_zero", true, (ops[i] * ops[j]).is_zero());
    }
    auto prim = primitivity_certificate(ops);
    c.check("primitivity.divisors", std::string(f.k() == 2 ? "1,1" : "1,1,1"), join(prim.divisors));
    std::vector<long> ones(f.k(), 1);
    WeightData w = weight_data(total_monodromy(f, ones));
    c.check("weight.rank_image", std::size_t{4}, w.rank);
    c.check("weight.lozenge", LozengeType{0, 2}.to_string(), lozenge_type(0, w.rank).to_string());
    auto pattern = pair_index_pattern(f);
    c.check("pair_pattern", expected_table().at(label).pair_pattern, join(pattern));
    if (label == "ell111") {
        // Coefficients of lambda_1..3 in (sum lambda_i N_i)(dual of alpha_2), in the basis beta_1, beta_2.
        auto terms = symbolic_action(f, f.w1_dual[2]);
        std::string computed;
        for (const auto& t : terms) computed += (computed.empty() ? "" : " ") + beta_combination(f, t);
        c.check("ell111.action_on_dual_alpha2", std::string("(0,0) (0,-1) (-1,-2)"), computed);
    }
    c.result["stratum"] = label;
    c.result["alpha"] = Json::array();
    c.result["beta"] = Json::array();
    for (std::size_t i = 0; i < f.k(); ++i) {
        c.result["alpha"].push_back(to_json(f.alpha[i]));
        c.result["beta"].push_back(to_json(f.beta[i]));
    }
    c.result["w1"] = to_json(f.w1);
    c.result["pair_pattern"] = join(pattern);
    c.result["primitivity_divisors"] = to_json(prim.divisors);
    return c;
}

Certificate cmd_classify(const std::string& text, const std::string& expect) {
    Certificate c;
    c.digest_input = text;
    BoundaryDataset ds = dataset_from_json(parse_json(text));
    validate_dataset(ds);
    Classification cl = classify_stratum(ds);
    c.result["label"] = cl.label;
    Json steps = Json::array();
    for (const auto& s : cl.steps) steps.push_back({{"name", s.name}, {"value", s.value}});
    c.result["steps"] = steps;
    if (!expect.empty()) c.check("classification", expect, cl.label);
    if (!ds.source.empty()) c.check("matches_source", ds.source, cl.label);
    return c;
}

Certificate cmd_reconstruct_periods(const std::string& text) {
    Certificate c;
    c.digest_input = text;
    auto [periods, n] = periods_from_json(parse_json(text));
    ReconstructionResult r = reconstruct_points(periods, n);
    c.check("orbit.size", std::size_t{9}, r.orbit.size());
    bool all = true;
    for (const auto& cfg : r.orbit) all = all && period_map(cfg).values == periods.values;
    c.check("period_map.round_trip", true, all);
    c.result["n"] = n;
    c.result["canonical"] = to_json(r.canonical);
    Json orbit = Json::array();
    for (const auto& cfg : r.orbit) orbit.push_back(to_json(cfg));
    c.result["orbit"] = orbit;
    return c;
}

Certificate cmd_reconstruct_111(const std::string& text) {
    Certificate c;
    c.digest_input = text;
    BoundaryDataset ds = dataset_from_json(parse_json(text));
    validate_dataset(ds);
    Descriptor111 d = reconstruct_111(ds);
    c.result["gamma_pair"] = {d.gamma_pair.first, d.gamma_pair.second};
    c.result["base_marking"] = d.base_marking;
    c.result["gluing"] = d.gluing;
    Json comps = Json::array();
    for (const auto& comp : d.components) {
        Json jc;
        jc["factor"] = comp.factor;
        jc["block"] = comp.block;
        jc["periods"] = points_json(comp.periods.values);
        jc["canonical_points"] = to_json(comp.points.canonical);
        jc["orbit_size"] = comp.points.orbit.size();
        comps.push_back(jc);
        c.check("component" + std::to_string(comp.factor) + ".round_trip", true,
                period_map(comp.points.canonical).values == comp.periods.values);
    }
    c.result["components"] = comps;
    if (ds.source == "ell111") {
        auto expected = fixture_orbits_111(generate_fixture("ell111", ds.seed));
        bool same = expected.size() == d.components.size();
        for (std::size_t i = 0; same && i < expected.size(); ++i)
            same = expected[i].orbit == d.components[i].points.orbit;
        c.check("matches_generator", true, same);
    }
    return c;
}

Certificate cmd_normal_form(const std::string& text) {
    Certificate c;
    c.digest_input = text;
    WeightedPolynomial p = polynomial_from_json(parse_json(text));
    Reduction r = reduce_to_standard_form(p);
    WeightedPolynomial q = apply_change(p, r.change);
    c.check("apply_change.reproduces_standard_form", true, q == r.form.polynomial());
    std::size_t residual = 0;
    for (const auto& [e, v] : q.terms()) residual += is_eliminated_monomial(e, r.form.branch);
    c.check("residual_forbidden_monomials", std::size_t{0}, residual);
    c.result["standard_form"] = to_json(r.form);
    c.result["change"] = to_json(r.change);
    Json w = Json::object();
    for (const auto& [name, wt] : cstar_weights()) w[name] = wt;
    c.result["cstar_weights"] = w;
    c.result["polynomial"] = to_json(q);
    return c;
}

Rat random_fraction(std::mt19937_64& rng, long maxden) {
    Rat q(Int(static_cast<long>(rng() % 1000)), Int(static_cast<long>(rng() % maxden) + 1));
    q.canonicalize();
    return q;
}

Json gen_fixture(const std::string& kind, const std::string& stratum, std::uint64_t seed, std::size_t n) {
    if (kind == "dataset") {
        require_stratum(stratum);
        return to_json(generate_fixture(stratum, seed).dataset);
    }
    std::mt19937_64 rng(seed);
    if (kind == "periods") {
        AnticanonicalConfig cfg;
        for (std::size_t i = 0; i < n; ++i) cfg.points.push_back(TorusPoint({random_fraction(rng, 12), random_fraction(rng, 12)}));
        return periods_to_json(period_map(cfg), n);
    }
    if (kind == "poly") {
        WeightedPolynomial p;
        p.set({0, 2, 0, 0}, Rat(-1));
        p.set({3, 0, 0, 0}, Rat(1));
        Rat g2 = Rat(static_cast<long>(rng() % 7) - 3), g3 = Rat(static_cast<long>(rng() % 7) - 3);
        if (g2 == 0 && g3 == 0) g3 = 1;
        p.set({1, 0, 4, 0}, g2);
        p.set({0, 0, 6, 0}, g3);
        for (const auto& e : monomials_of_degree(6))
            if (e[3] > 0) p.set(e, Rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1));
        return to_json(p);
    }
    throw InputError("unknown fixture kind '" + kind + "'");
}

int emit(const Certificate& c, const std::string& format, const std::string& sub) {
    if (format == "text")
        std::cout << c.to_text();
    else
        std::cout << c.to_json().dump(2) << '\n';
    std::size_t passed = 0;
    for (const auto& a : c.assertions) passed += a.pass();
    std::cerr << sub << ": " << passed << "/" << c.assertions.size() << " assertions passed";
    for (const auto& a : c.assertions)
        if (!a.pass()) std::cerr << "; FAIL " << a.name << " (expected " << a.expected << ", computed " << a.computed << ")";
    std::cerr << '\n';
    return c.all_pass() ? kOk : kAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary strata of I-surfaces: lattice, monodromy and extension-data checks"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string stratum, input, periods, poly, expect, kind = "dataset";
    std::uint64_t seed = 0;
    std::size_t n = 8;

    auto* verify = app.add_subcommand("verify-stratum", "Check the lattice and root data of a stratum model");
    verify->add_option("stratum,--stratum", stratum, "Stratum label")->required();
    auto* classify = app.add_subcommand("classify", "Classify a boundary dataset");
    classify->add_option("--input", input, "Dataset JSON file")->required();
    classify->add_option("--expect", expect, "Expected stratum label");
    auto* roots = app.add_subcommand("roots", "Root system of Lambda for a stratum");
    roots->add_option("stratum,--stratum", stratum, "Stratum label")->required();
    auto* mono = app.add_subcommand("monodromy", "Picard-Lefschetz operators of a stratum");
    mono->add_option("stratum,--stratum", stratum, "Stratum label")->required();
    auto* recon = app.add_subcommand("reconstruct", "Points from periods, or an ell111 dataset");
    auto* recon_periods = recon->add_option("--periods", periods, "Periods JSON file");
    auto* recon_input = recon->add_option("--input", input, "ell111 dataset JSON file");
    recon_periods->excludes(recon_input);
    recon->require_option(1);
    auto* nf = app.add_subcommand("normal-form", "Reduce a degree-6 equation to standard form");
    nf->add_option("--poly", poly, "Polynomial JSON file")->required();
    auto* gen = app.add_subcommand("gen-fixture", "Emit a seeded input file");
    gen->add_option("--kind", kind, "dataset, periods or poly")->check(CLI::IsMember({"dataset", "periods", "poly"}));
    gen->add_option("--stratum", stratum, "Stratum label (datasets)");
    gen->add_option("--seed", seed, "Seed");
    gen->add_option("--n", n, "Number of points (periods)")->check(CLI::Range(1, 64));

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    std::vector<std::string> echo(argv + 1, argv + argc);
    CLI::App* sub = app.get_subcommands().front();
    try {
        if (sub == gen) {
            if (kind == "dataset" && stratum.empty()) throw InputError("gen-fixture --kind dataset needs --stratum");
            std::cout << gen_fixture(kind, stratum, seed, n).dump(2) << '\n';
            std::cerr << "gen-fixture: " << kind << " seed " << seed << '\n';
            return kOk;
        }
        Certificate c;
        if (sub == verify)
            c = cmd_verify_stratum(stratum);
        else if (sub == roots)
            c = cmd_roots(stratum);
        else if (sub == mono)
            c = cmd_monodromy(stratum);
        else if (sub == classify)
            c = cmd_classify(read_file(input), expect);
        else if (sub == recon)
            c = periods.empty() ? cmd_reconstruct_111(read_file(input)) : cmd_reconstruct_periods(read_file(periods));
        else if (sub == nf)
            c = cmd_normal_form(read_file(poly));
        if (c.digest_input.empty()) {
            for (const auto& a : echo) c.digest_input += a + '\0';
        }
        c.command = echo;
        return emit(c, format, sub->get_name());
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kPrecondition;
    }
}
