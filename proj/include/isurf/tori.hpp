#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "isurf/lattice.hpp"

namespace isurf {

// Point of R^g / Z^g with rational coordinates reduced into [0, 1).
class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(RatVec coords);
    static TorusPoint zero(std::size_t g) { return TorusPoint(RatVec(g, Rat(0))); }

    std::size_t dim() const { return c_.size(); }
    const RatVec& coords() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    bool is_zero() const;
    Int order() const;  // lcm of denominators

    TorusPoint operator+(const TorusPoint& o) const;
    TorusPoint operator-(const TorusPoint& o) const;
    TorusPoint operator-() const;
    TorusPoint times(const Int& n) const;
    bool operator==(const TorusPoint& o) const { return c_ == o.c_; }
    bool operator!=(const TorusPoint& o) const { return c_ != o.c_; }
    bool operator<(const TorusPoint& o) const { return c_ < o.c_; }
    std::string to_string() const;

private:
    RatVec c_;
};

inline std::ostream& operator<<(std::ostream& os, const TorusPoint& p) { return os << p.to_string(); }

TorusPoint concat(const std::vector<TorusPoint>& parts);
// All y with n y = x, lexicographically sorted (so the least comes first).
std::vector<TorusPoint> divide(const TorusPoint& x, const Int& n);

struct RationalTorus {
    std::size_t dim = 0;
};

// Homomorphism R^g/Z^g -> R^g'/Z^g' induced by an integer g' x g matrix.
class TorusMorphism {
public:
    TorusMorphism() = default;
    explicit TorusMorphism(IntMatrix m) : m_(std::move(m)) {}
    static TorusMorphism from_rational(const RatMatrix& m);  // checks M Z^g in Z^g'
    static TorusMorphism identity(std::size_t g) { return TorusMorphism(IntMatrix::identity(g)); }

    const IntMatrix& matrix() const { return m_; }
    std::size_t source_dim() const { return m_.cols(); }
    std::size_t target_dim() const { return m_.rows(); }

    TorusPoint apply(const TorusPoint& p) const;
    TorusPoint apply(const RatVec& lift) const;
    TorusMorphism compose(const TorusMorphism& inner) const { return TorusMorphism(m_ * inner.m_); }
    // Number of preimages of a point for a surjective map between equal dimensions.
    Int degree() const;
    // Some preimage of p (the one with the least lift in the Smith coordinates), if any.
    std::optional<TorusPoint> preimage(const TorusPoint& p) const;
    bool contains_in_image(const TorusPoint& p) const { return preimage(p).has_value(); }

private:
    IntMatrix m_;
};

// Morphism on direct sums: (x_1, ..., x_k) -> sum M_i x_i.
TorusMorphism hstack(const std::vector<TorusMorphism>& parts);

std::vector<TorusPoint> n_torsion(const RationalTorus& t, long n);

struct TorusKernel {
    FiniteAbelianGroup group;
    std::vector<TorusPoint> generators;  // one per invariant factor
};

// Kernel of a morphism with finite kernel; throws when the kernel is positive-dimensional.
TorusKernel kernel_points(const TorusMorphism& f);

// All elements of the subgroup generated by the given points.
std::vector<TorusPoint> generated_subgroup(const std::vector<TorusPoint>& gens);

struct TorusQuotient {
    RationalTorus torus;
    TorusMorphism projection;
};

// T / F for a finite subgroup F given by all its elements.
TorusQuotient quotient_torus(const RationalTorus& t, const std::vector<TorusPoint>& subgroup);

// Isogeny of 2-dimensional tori whose kernel is generated by eta.
TorusMorphism isogeny_with_kernel(const TorusPoint& eta);

// Jacobian of a double-curve configuration glued over a common base curve B:
// JW = (JD_1 + ... + JD_k) / JB, where JB -> JD_i are the given pullbacks.
struct GluedJacobian {
    RationalTorus jw;
    TorusMorphism assembly;                // (JD_1 + ... + JD_k) -> JW
    std::vector<TorusMorphism> markings;   // JD_i -> JW
};

GluedJacobian glue_over_base(const std::vector<TorusMorphism>& pullbacks);
// Pairwise degrees of JD_i + JD_j -> JW (0 when not of finite degree), sorted ascending.
std::vector<Int> marking_pair_degrees(const std::vector<TorusMorphism>& markings);

// Elliptic-ruled check with two isogenous bisections Gamma_1, Gamma_2 over a section sigma ~ B.
struct GluingFixtureReport {
    bool markings_injective = false;
    Int gamma_pair_determinant;
    TorusKernel gamma1_sigma_kernel;
    TorusKernel gamma2_sigma_kernel;
    std::vector<Int> pattern;
};

GluingFixtureReport jw1_gluing_fixture(const TorusPoint& eta1, const TorusPoint& eta2);

}  // namespace isurf
