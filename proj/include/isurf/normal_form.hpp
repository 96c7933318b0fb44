#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isurf/matrix.hpp"

namespace isurf {

using Exponent = std::array<int, 4>;  // powers of x, y, z, t

// Polynomial in x, y, z, t with weights (2, 3, 1, 1). Equations are stored as F = 0 with
// F = x^3 + g2 x z^4 + g3 z^6 + (t-terms) - y^2.
class WeightedPolynomial {
public:
    static constexpr std::array<int, 4> kWeights{2, 3, 1, 1};

    WeightedPolynomial() = default;
    static WeightedPolynomial monomial(const Exponent& e, const Rat& c = Rat(1));
    static WeightedPolynomial constant(const Rat& c);
    static WeightedPolynomial var(int i);  // 0 = x, 1 = y, 2 = z, 3 = t

    const std::map<Exponent, Rat>& terms() const { return terms_; }
    Rat coeff(const Exponent& e) const;
    void set(const Exponent& e, const Rat& c);
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous(int degree) const;

    WeightedPolynomial operator+(const WeightedPolynomial& o) const;
    WeightedPolynomial operator-(const WeightedPolynomial& o) const;
    WeightedPolynomial operator*(const WeightedPolynomial& o) const;
    WeightedPolynomial scaled(const Rat& c) const;
    WeightedPolynomial pow(int n) const;
    bool operator==(const WeightedPolynomial& o) const { return terms_ == o.terms_; }

    // Simultaneous substitution of the four variables.
    WeightedPolynomial substitute(const std::array<WeightedPolynomial, 4>& images) const;

    std::string to_string() const;

private:
    std::map<Exponent, Rat> terms_;  // no zero coefficients
};

int weighted_degree(const Exponent& e);
std::string monomial_name(const Exponent& e);  // "t^2*x*z^2", "1"
Exponent parse_monomial(const std::string& s);  // accepts the name form or "(a,b,c,d)"

// All exponents of weighted degree d.
std::vector<Exponent> monomials_of_degree(int d);

// x -> x + a1 t z + a2 t^2, y -> y + b1 t x + b2 t z^2 + b3 t^2 z + b4 t^3, z -> z + g t.
struct CoordinateChange {
    Rat alpha1, alpha2, beta1, beta2, beta3, beta4, gamma;

    static CoordinateChange identity() { return {}; }
    bool is_identity() const;
    bool operator==(const CoordinateChange&) const = default;
};

WeightedPolynomial apply_change(const WeightedPolynomial& p, const CoordinateChange& c);
// Single change equal to applying `first` and then `second`.
CoordinateChange compose(const CoordinateChange& first, const CoordinateChange& second);

enum class Branch { G2, G3 };

struct StandardForm {
    Branch branch = Branch::G2;
    Rat g2, g3;
    // a is the t x z^3 coefficient on the g3 branch and the t z^5 coefficient on the g2 branch.
    Rat a, b1, b2, c1, c2, d1, d2, e, f;

    std::vector<std::pair<std::string, Rat>> coefficients() const;  // a, b1, ..., f
    WeightedPolynomial polynomial() const;
};

struct Reduction {
    StandardForm form;
    CoordinateChange change;
};

// Monomials that a standard form of the given branch may not contain.
bool is_eliminated_monomial(const Exponent& e, Branch b);
Reduction reduce_to_standard_form(const WeightedPolynomial& p);

// Weights of the C*-action on (a, b1, b2, c1, c2, d1, d2, e, f).
std::vector<std::pair<std::string, int>> cstar_weights();

// p(x, y, z, s t).
WeightedPolynomial rescale_t(const WeightedPolynomial& p, const Rat& s);

}  // namespace isurf
