#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isurf/lattice.hpp"
#include "isurf/roots.hpp"
#include "isurf/tori.hpp"

namespace isurf {

const std::vector<std::string>& stratum_labels();
bool is_stratum_label(const std::string& s);

struct ComponentSurface {
    std::string name;
    IntegralLattice lattice;
    std::vector<std::string> basis_names;
    IntVec canonical_class;
    std::map<std::size_t, IntVec> double_curves;  // double-curve index -> class on this component

    IntVec vec(const std::map<std::string, long>& coeffs) const;
    std::string format(const IntVec& v) const;
};

// The normalization Y~ of the main component, one del Pezzo Z_i per double curve D_i,
// and the glued lattice H^2(Y~) + H^2(Z_1) + ... + H^2(Z_k).
struct StratumModel {
    std::string label;
    ComponentSurface y;
    std::vector<ComponentSurface> z;
    IntVec l_class;              // [L] on Y~
    std::vector<long> degrees;   // m_i = D_i^2 on Z_i

    IntegralLattice ambient;
    std::vector<std::size_t> offsets;  // start of each block: Y~, Z_1, ..., Z_k
    std::vector<IntVec> xi;            // ([D_i] on Y~, -[D_i] on Z_i)
    IntVec l_ambient;

    std::size_t k() const { return z.size(); }
    IntVec embed_y(const IntVec& v) const;
    IntVec embed_z(std::size_t i, const IntVec& v) const;
    IntVec block(const IntVec& ambient_vec, std::size_t b) const;  // b = 0 for Y~, 1 + i for Z_i
};

// Plane blown up in 9 - m points, with the anticanonical curve class as double curve.
ComponentSurface del_pezzo(const std::string& name, long m, std::size_t curve_index);

struct CurveClassSolve {
    long a = 0;
    long b = 0;
    IntVec gamma;  // a h - (e_1 + ... + e_10) + b e_11 on the plane blown up in 11 points
};

// Integer (a, b) with gamma . (3h - sum e_i) = 0 and gamma^2 = 2.
CurveClassSolve solve_rat22_curve_class();

StratumModel build_stratum_model(const std::string& label);

struct ModelCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<ModelCheck> model_invariants(const StratumModel& m);

struct LambdaData {
    Sublattice perp;           // {xi, L}^perp in the glued lattice
    IsotropicQuotient quotient;
    LatticePredicates predicates;
    Inertia signature;
    RootDecomposition roots;
    Int root_index;                    // [Lambda : Lambda_R]
    FiniteAbelianGroup root_quotient;  // Lambda / Lambda_R

    const IntegralLattice& lattice() const { return quotient.lattice; }
};

LambdaData compute_lambda(const StratumModel& m);

// Subtracts the multiple of the xi's that clears the Y~ block when possible.
IntVec normalize_modulo_xi(const StratumModel& m, const IntVec& ambient_vec);
// Whether the class is supported on a single block modulo the xi's (0 = Y~, 1 + i = Z_i).
std::optional<std::size_t> supporting_block(const StratumModel& m, const IntVec& ambient_vec);

// Intermediate Jacobian J(W1) with the images of the double-curve Jacobians JD_i.
struct JacobianModel {
    RationalTorus jw;
    TorusMorphism assembly;  // JD_1 + ... + JD_k -> JW1
    std::vector<TorusMorphism> markings;
    std::vector<TorusPoint> parameters;  // isogeny kernels / Enriques torsion point
};

// parameters: enriques -> one point of JD_1 + JD_2 of order 2, nonzero in both factors;
// ell111 -> eta_1, eta_2 (kernels of JB -> JGamma_i); ell211 -> eta; rational -> none.
JacobianModel compute_JW1(const StratumModel& m, const std::vector<TorusPoint>& parameters);
std::vector<TorusPoint> default_jacobian_parameters(const std::string& label);

// Restriction homomorphisms to the double curves: columns are the images of basis vectors.
struct RestrictionData {
    std::vector<RatMatrix> from_y;  // H^2(Y~) -> JD_i
    std::vector<RatMatrix> from_z;  // H^2(Z_i) -> JD_i
};

// Seeded generic data satisfying psi(xi_i) = 0 and psi(L) = 0.
RestrictionData generate_restriction_data(const StratumModel& m, std::uint64_t seed);
// Translates the origin of every D_i by the given points (classes of degree d move by d c_i).
RestrictionData shift_origins(const StratumModel& m, const RestrictionData& r, const std::vector<TorusPoint>& c);

// psi_i(lambda) = point(v_i on D_i) - point(u on D_i) for a lift lambda = (u, v_1, ..., v_k).
std::vector<TorusPoint> psi_on_curves(const StratumModel& m, const RestrictionData& r, const IntVec& ambient_vec);
TorusPoint psi_ambient(const StratumModel& m, const RestrictionData& r, const JacobianModel& j, const IntVec& ambient_vec);

struct ExtensionMap {
    std::vector<TorusPoint> basis_values;  // psi of each Lambda basis vector, in JW1
    TorusPoint operator()(const IntVec& lambda_coords) const;
};

ExtensionMap extension_map(const StratumModel& m, const LambdaData& lam, const RestrictionData& r,
                           const JacobianModel& j);

struct PsiBlock {
    std::string label;
    std::vector<TorusPoint> simple_root_values;  // psi on the summand's simple roots (Bourbaki order)
    std::vector<bool> in_marking;                // psi(summand) lies in the image of JD_j
    std::optional<std::vector<bool>> factor_zero;  // when JW1 = (+) JD_j: component j vanishes
};

std::vector<PsiBlock> psi_block_table(const ExtensionMap& psi, const RootDecomposition& roots,
                                      const JacobianModel& j);
std::size_t single_factor_count(const std::vector<PsiBlock>& blocks);

struct Beta11 {
    IntVec coords;               // in the Lambda basis
    Int norm;
    Int order;                   // order of the class in Lambda / Lambda_R
    bool used_outer = false;     // spin node swapped
    std::size_t d10 = 0, first_e7 = 0, second_e7 = 0;  // component indices
    Rat weight_norms;            // varpi_9(D10)^2 + varpi_7(E7)^2
};

Beta11 construct_beta11(const StratumModel& m, const LambdaData& lam);

struct CompletedRoots {
    std::vector<std::vector<IntVec>> chains;  // ambient vectors, each chain spanning one E8
    std::vector<IntVec> extra;               // further roots (rat21: phi_1 - phi_2)
};

CompletedRoots completed_E8_roots(const StratumModel& m);

}  // namespace isurf
