#include "isurf/normal_form.hpp"

#include <cctype>
#include <cstring>

#include "isurf/errors.hpp"

namespace isurf {

namespace {

constexpr const char* kNames = "xyzt";

Exponent ex(int x, int y, int z, int t) { return {x, y, z, t}; }

// Coefficient slots of the standard form, g2 branch; the g3 branch swaps the first one.
const std::vector<std::pair<std::string, Exponent>>& standard_slots() {
    static const std::vector<std::pair<std::string, Exponent>> s{
        {"a", ex(0, 0, 5, 1)},  {"b1", ex(1, 0, 2, 2)}, {"b2", ex(0, 0, 4, 2)},
        {"c1", ex(1, 0, 1, 3)}, {"c2", ex(0, 0, 3, 3)}, {"d1", ex(1, 0, 0, 4)},
        {"d2", ex(0, 0, 2, 4)}, {"e", ex(0, 0, 1, 5)},  {"f", ex(0, 0, 0, 6)}};
    return s;
}

Exponent slot_exponent(std::size_t i, Branch b) {
    if (i == 0 && b == Branch::G3) return ex(1, 0, 3, 1);
    return standard_slots()[i].second;
}

}  // namespace

WeightedPolynomial WeightedPolynomial::monomial(const Exponent& e, const Rat& c) {
    WeightedPolynomial p;
    p.set(e, c);
    return p;
}

WeightedPolynomial WeightedPolynomial::constant(const Rat& c) { return monomial({0, 0, 0, 0}, c); }

WeightedPolynomial WeightedPolynomial::var(int i) {
    Exponent e{0, 0, 0, 0};
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(e);
}

Rat WeightedPolynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void WeightedPolynomial::set(const Exponent& e, const Rat& c) {
    for (int v : e)
        if (v < 0) throw PreconditionError("negative exponent");
    Rat q = c;
    q.canonicalize();
    if (q == 0)
        terms_.erase(e);
    else
        terms_[e] = q;
}

bool WeightedPolynomial::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e) != degree) return false;
    return true;
}

WeightedPolynomial WeightedPolynomial::operator+(const WeightedPolynomial& o) const {
    WeightedPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

WeightedPolynomial WeightedPolynomial::operator-(const WeightedPolynomial& o) const { return *this + o.scaled(Rat(-1)); }

WeightedPolynomial WeightedPolynomial::operator*(const WeightedPolynomial& o) const {
    WeightedPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e;
            for (std::size_t i = 0; i < 4; ++i) e[i] = e1[i] + e2[i];
            r.set(e, r.coeff(e) + c1 * c2);
        }
    return r;
}

WeightedPolynomial WeightedPolynomial::scaled(const Rat& c) const {
    WeightedPolynomial r;
    for (const auto& [e, v] : terms_) r.set(e, v * c);
    return r;
}

WeightedPolynomial WeightedPolynomial::pow(int n) const {
    if (n < 0) throw PreconditionError("negative power");
    WeightedPolynomial r = constant(Rat(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

WeightedPolynomial WeightedPolynomial::substitute(const std::array<WeightedPolynomial, 4>& images) const {
    // Cache powers of each image.
    std::array<std::vector<WeightedPolynomial>, 4> powers;
    for (std::size_t v = 0; v < 4; ++v) powers[v].push_back(constant(Rat(1)));
    WeightedPolynomial r;
    for (const auto& [e, c] : terms_) {
        WeightedPolynomial m = constant(c);
        for (std::size_t v = 0; v < 4; ++v) {
            auto& pw = powers[v];
            while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * images[v]);
            m = m * pw[static_cast<std::size_t>(e[v])];
        }
        r = r + m;
    }
    return r;
}

std::string WeightedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        Rat a = abs(c);
        std::string mono = monomial_name(e);
        if (mono == "1")
            s += isurf::to_string(a);
        else
            s += (a == 1 ? "" : isurf::to_string(a) + "*") + mono;
    }
    return s;
}

int weighted_degree(const Exponent& e) {
    int d = 0;
    for (std::size_t i = 0; i < 4; ++i) d += WeightedPolynomial::kWeights[i] * e[i];
    return d;
}

std::string monomial_name(const Exponent& e) {
    std::string s;
    for (std::size_t i : {3u, 0u, 1u, 2u}) {  // t first, matching the usual way of writing these
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += kNames[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

Exponent parse_monomial(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    Exponent e{0, 0, 0, 0};
    auto bad = [&]() { return InputError("malformed monomial '" + raw + "'"); };
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw bad();
        std::size_t pos = 1;
        for (std::size_t i = 0; i < 4; ++i) {
            std::size_t end = s.find(i < 3 ? ',' : ')', pos);
            if (end == std::string::npos || end == pos) throw bad();
            std::string tok = s.substr(pos, end - pos);
            for (char ch : tok)
                if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
            e[i] = std::stoi(tok);
            pos = end + 1;
        }
        if (pos != s.size()) throw bad();
        return e;
    }
    if (s == "1") return e;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const char* p = std::strchr(kNames, s[pos]);
        if (!p || s[pos] == '\0') throw bad();
        std::size_t v = static_cast<std::size_t>(p - kNames);
        ++pos;
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
            std::size_t start = ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw bad();
            power = std::stoi(s.substr(start, pos - start));
        }
        e[v] += power;
        if (pos < s.size()) {
            if (s[pos] != '*') throw bad();
            ++pos;
            if (pos == s.size()) throw bad();
        }
    }
    return e;
}

std::vector<Exponent> monomials_of_degree(int d) {
    std::vector<Exponent> out;
    for (int x = 0; 2 * x <= d; ++x)
        for (int y = 0; 2 * x + 3 * y <= d; ++y)
            for (int z = 0; 2 * x + 3 * y + z <= d; ++z) out.push_back({x, y, z, d - 2 * x - 3 * y - z});
    return out;
}

bool CoordinateChange::is_identity() const { return *this == CoordinateChange{}; }

WeightedPolynomial apply_change(const WeightedPolynomial& p, const CoordinateChange& c) {
    if (!p.is_homogeneous(6)) throw PreconditionError("polynomial is not of weighted degree 6");
    using P = WeightedPolynomial;
    P x = P::var(0), y = P::var(1), z = P::var(2), t = P::var(3);
    P t2 = t * t, t3 = t2 * t;
    P nx = x + (t * z).scaled(c.alpha1) + t2.scaled(c.alpha2);
    P ny = y + (t * x).scaled(c.beta1) + (t * z * z).scaled(c.beta2) + (t2 * z).scaled(c.beta3) + t3.scaled(c.beta4);
    P nz = z + t.scaled(c.gamma);
    return p.substitute({nx, ny, nz, t});
}

CoordinateChange compose(const CoordinateChange& a, const CoordinateChange& b) {
    CoordinateChange r;
    r.alpha1 = a.alpha1 + b.alpha1;
    r.alpha2 = b.alpha2 + a.alpha1 * b.gamma + a.alpha2;
    r.gamma = a.gamma + b.gamma;
    r.beta1 = a.beta1 + b.beta1;
    r.beta2 = a.beta2 + b.beta2;
    r.beta3 = b.beta3 + a.beta1 * b.alpha1 + 2 * a.beta2 * b.gamma + a.beta3;
    r.beta4 = b.beta4 + a.beta1 * b.alpha2 + a.beta2 * b.gamma * b.gamma + a.beta3 * b.gamma + a.beta4;
    return r;
}

std::vector<std::pair<std::string, Rat>> StandardForm::coefficients() const {
    return {{"a", a}, {"b1", b1}, {"b2", b2}, {"c1", c1}, {"c2", c2}, {"d1", d1}, {"d2", d2}, {"e", e}, {"f", f}};
}

WeightedPolynomial StandardForm::polynomial() const {
    WeightedPolynomial p;
    p.set(ex(0, 2, 0, 0), Rat(-1));
    p.set(ex(3, 0, 0, 0), Rat(1));
    p.set(ex(1, 0, 4, 0), g2);
    p.set(ex(0, 0, 6, 0), g3);
    auto cs = coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) p.set(slot_exponent(i, branch), cs[i].second);
    return p;
}

bool is_eliminated_monomial(const Exponent& e, Branch b) {
    bool ty = e[3] >= 1 && e[1] >= 1;
    bool tx2 = e[3] >= 1 && e[0] >= 2;
    Exponent extra = b == Branch::G2 ? ex(1, 0, 3, 1) : ex(0, 0, 5, 1);
    return ty || tx2 || e == extra;
}

Reduction reduce_to_standard_form(const WeightedPolynomial& p) {
    if (!p.is_homogeneous(6)) throw PreconditionError("polynomial is not of weighted degree 6");
    // Leading form: -y^2 + x^3 + g2 x z^4 + g3 z^6 with nothing else free of t.
    for (const auto& [e, c] : p.terms()) {
        if (e[3] != 0) continue;
        if (e == ex(0, 2, 0, 0)) {
            if (c != -1) throw PreconditionError("coefficient of y^2 must be -1");
        } else if (e == ex(3, 0, 0, 0)) {
            if (c != 1) throw PreconditionError("coefficient of x^3 must be 1");
        } else if (e != ex(1, 0, 4, 0) && e != ex(0, 0, 6, 0)) {
            throw PreconditionError("unexpected t-free monomial " + monomial_name(e));
        }
    }
    if (p.coeff(ex(0, 2, 0, 0)) != -1 || p.coeff(ex(3, 0, 0, 0)) != 1)
        throw PreconditionError("equation must contain -y^2 + x^3");
    Rat g2 = p.coeff(ex(1, 0, 4, 0)), g3 = p.coeff(ex(0, 0, 6, 0));
    if (g2 == 0 && g3 == 0) throw PreconditionError("g2 = g3 = 0: no branch applies");

    // -y^2 contributes -2 b to each t y-monomial.
    CoordinateChange cb;
    cb.beta1 = p.coeff(ex(1, 1, 0, 1)) / 2;
    cb.beta2 = p.coeff(ex(0, 1, 2, 1)) / 2;
    cb.beta3 = p.coeff(ex(0, 1, 1, 2)) / 2;
    cb.beta4 = p.coeff(ex(0, 1, 0, 3)) / 2;
    WeightedPolynomial p1 = apply_change(p, cb);

    // x^3 contributes 3 a to t x^2 z and t^2 x^2.
    CoordinateChange ca;
    ca.alpha1 = -p1.coeff(ex(2, 0, 1, 1)) / 3;
    ca.alpha2 = -p1.coeff(ex(2, 0, 0, 2)) / 3;
    WeightedPolynomial p2 = apply_change(p1, ca);

    CoordinateChange cg;
    Branch branch = g2 != 0 ? Branch::G2 : Branch::G3;
    if (branch == Branch::G2)
        cg.gamma = -p2.coeff(ex(1, 0, 3, 1)) / (4 * g2);
    else
        cg.gamma = -p2.coeff(ex(0, 0, 5, 1)) / (6 * g3);
    WeightedPolynomial p3 = apply_change(p2, cg);

    Reduction r;
    r.change = compose(compose(cb, ca), cg);
    r.form.branch = branch;
    r.form.g2 = g2;
    r.form.g3 = g3;
    Rat* slots[] = {&r.form.a, &r.form.b1, &r.form.b2, &r.form.c1, &r.form.c2,
                    &r.form.d1, &r.form.d2, &r.form.e, &r.form.f};
    for (std::size_t i = 0; i < 9; ++i) *slots[i] = p3.coeff(slot_exponent(i, branch));
    if (!(r.form.polynomial() == p3)) throw PreconditionError("reduction left a forbidden monomial");
    return r;
}

std::vector<std::pair<std::string, int>> cstar_weights() {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& [name, e] : standard_slots()) out.emplace_back(name, e[3]);
    return out;
}

WeightedPolynomial rescale_t(const WeightedPolynomial& p, const Rat& s) {
    using P = WeightedPolynomial;
    return p.substitute({P::var(0), P::var(1), P::var(2), P::var(3).scaled(s)});
}

}  // namespace isurf
