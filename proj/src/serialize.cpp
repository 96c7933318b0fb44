#include "isurf/serialize.hpp"

#include <cstdio>

#include "isurf/errors.hpp"

namespace isurf {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    return a;
}

std::size_t size_from_json(const Json& j, const char* what) {
    if (!j.is_number_unsigned()) throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<bool> bools_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of booleans");
    std::vector<bool> out;
    for (const auto& b : j) {
        if (!b.is_boolean()) throw InputError("expected a boolean");
        out.push_back(b.get<bool>());
    }
    return out;
}

Json bools_to_json(const std::vector<bool>& v) {
    Json a = Json::array();
    for (bool b : v) a.push_back(b);
    return a;
}

}  // namespace

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.dump()));
    if (!j.is_string()) throw InputError("rational must be a string like \"p/q\"");
    return parse_rational(j.get<std::string>());
}

Json to_json(const Int& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.dump());
    if (j.is_string()) {
        Int n;
        const std::string s = j.get<std::string>();
        if (s.empty() || n.set_str(s, 10) != 0) throw InputError("not an integer: '" + s + "'");
        return n;
    }
    throw InputError("expected an integer");
}

Json to_json(const TorusPoint& p) {
    Json a = Json::array();
    for (const auto& c : p.coords()) a.push_back(to_json(c));
    return a;
}

TorusPoint point_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("torus point must be an array of rationals");
    RatVec v;
    for (const auto& c : j) v.push_back(rat_from_json(c));
    return TorusPoint(v);
}

Json to_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

IntMatrix int_matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::vector<IntVec> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw InputError("matrix row must be an array");
        IntVec row;
        for (const auto& x : r) row.push_back(int_from_json(x));
        rows.push_back(row);
    }
    return IntMatrix::from_rows(rows);
}

Json to_json(const BoundaryDataset& ds) {
    Json j;
    j["version"] = ds.version;
    j["origin_convention"] = ds.origin_convention;
    j["k"] = ds.k;
    Json pattern = Json::array();
    for (const auto& p : ds.pair_pattern) pattern.push_back(to_json(p));
    j["pair_pattern"] = pattern;
    j["root_label"] = ds.root_label;
    j["jw_dim"] = ds.jw_dim;
    Json markings = Json::array();
    for (const auto& m : ds.markings) markings.push_back(to_json(m));
    j["markings"] = markings;
    Json blocks = Json::array();
    for (const auto& b : ds.blocks) {
        Json jb;
        jb["label"] = b.label;
        Json psi = Json::array();
        for (const auto& p : b.psi) psi.push_back(to_json(p));
        jb["psi"] = psi;
        jb["in_marking"] = bools_to_json(b.in_marking);
        jb["factor_zero"] = b.factor_zero ? bools_to_json(*b.factor_zero) : Json(nullptr);
        blocks.push_back(jb);
    }
    j["blocks"] = blocks;
    j["source"] = ds.source;
    j["seed"] = ds.seed;
    return j;
}

BoundaryDataset dataset_from_json(const Json& j) {
    BoundaryDataset ds;
    if (!j.is_object()) throw InputError("dataset must be a JSON object");
    const Json& v = field(j, "version");
    if (!v.is_number_integer() || v.get<long>() != kFormatVersion)
        throw InputError("unsupported dataset version " + v.dump());
    const Json& oc = field(j, "origin_convention");
    if (!oc.is_string()) throw InputError("origin_convention must be a string");
    ds.origin_convention = oc.get<std::string>();
    ds.k = size_from_json(field(j, "k"), "k");
    for (const auto& p : array_field(j, "pair_pattern")) ds.pair_pattern.push_back(int_from_json(p));
    const Json& rl = field(j, "root_label");
    if (!rl.is_string()) throw InputError("root_label must be a string");
    ds.root_label = rl.get<std::string>();
    ds.jw_dim = size_from_json(field(j, "jw_dim"), "jw_dim");
    for (const auto& m : array_field(j, "markings")) ds.markings.push_back(int_matrix_from_json(m));
    for (const auto& jb : array_field(j, "blocks")) {
        DatasetBlock b;
        const Json& label = field(jb, "label");
        if (!label.is_string()) throw InputError("block label must be a string");
        b.label = label.get<std::string>();
        for (const auto& p : array_field(jb, "psi")) b.psi.push_back(point_from_json(p));
        b.in_marking = bools_from_json(field(jb, "in_marking"));
        if (jb.contains("factor_zero") && !jb.at("factor_zero").is_null())
            b.factor_zero = bools_from_json(jb.at("factor_zero"));
        ds.blocks.push_back(b);
    }
    if (j.contains("source") && j.at("source").is_string()) ds.source = j.at("source").get<std::string>();
    if (j.contains("seed") && j.at("seed").is_number_unsigned()) ds.seed = j.at("seed").get<std::uint64_t>();
    return ds;
}

Json periods_to_json(const PeriodAssignment& p, std::size_t n) {
    Json j;
    j["version"] = kFormatVersion;
    j["n"] = n;
    Json vals = Json::array();
    for (const auto& v : p.values) vals.push_back(to_json(v));
    j["periods"] = vals;
    return j;
}

std::pair<PeriodAssignment, std::size_t> periods_from_json(const Json& j) {
    const Json& v = field(j, "version");
    if (!v.is_number_integer() || v.get<long>() != kFormatVersion)
        throw InputError("unsupported periods version " + v.dump());
    std::size_t n = size_from_json(field(j, "n"), "n");
    PeriodAssignment p;
    for (const auto& x : array_field(j, "periods")) {
        p.values.push_back(point_from_json(x));
        if (p.values.back().dim() != 2) throw InputError("period values are points of R^2/Z^2");
    }
    if (p.values.size() != n) throw InputError("expected one period per simple root a_1..a_n");
    return {p, n};
}

Json to_json(const AnticanonicalConfig& c) {
    Json a = Json::array();
    for (const auto& p : c.points) a.push_back(to_json(p));
    return a;
}

Json to_json(const WeightedPolynomial& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) {
        std::string key = "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) +
                          "," + std::to_string(e[3]) + ")";
        j[key] = to_json(c);
    }
    return j;
}

WeightedPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("polynomial must be an object of monomial -> coefficient");
    WeightedPolynomial p;
    for (const auto& [key, val] : j.items()) {
        Exponent e = parse_monomial(key);
        if (p.coeff(e) != 0) throw InputError("monomial " + key + " given twice");
        p.set(e, rat_from_json(val));
    }
    return p;
}

Json to_json(const CoordinateChange& c) {
    Json j;
    j["alpha1"] = to_json(c.alpha1);
    j["alpha2"] = to_json(c.alpha2);
    j["beta1"] = to_json(c.beta1);
    j["beta2"] = to_json(c.beta2);
    j["beta3"] = to_json(c.beta3);
    j["beta4"] = to_json(c.beta4);
    j["gamma"] = to_json(c.gamma);
    return j;
}

Json to_json(const StandardForm& s) {
    Json j;
    j["branch"] = s.branch == Branch::G2 ? "g2" : "g3";
    j["g2"] = to_json(s.g2);
    j["g3"] = to_json(s.g3);
    Json coeffs;
    for (const auto& [name, v] : s.coefficients()) coeffs[name] = to_json(v);
    j["coefficients"] = coeffs;
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace isurf
