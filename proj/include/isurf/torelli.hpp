#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isurf/strata.hpp"
#include "isurf/tori.hpp"

namespace isurf {

// Points p_1..p_n on an elliptic curve E = R^2/Z^2; the origin is an inflection point,
// so three collinear points sum to 0 and the line class h has period 0.
struct AnticanonicalConfig {
    std::vector<TorusPoint> points;

    std::size_t n() const { return points.size(); }
    AnticanonicalConfig translated(const TorusPoint& t) const;
    bool operator==(const AnticanonicalConfig& o) const { return points == o.points; }
    bool operator<(const AnticanonicalConfig& o) const { return points < o.points; }
};

// Values on the simple roots a_1..a_n of kappa^perp (kappa itself maps to 0).
struct PeriodAssignment {
    std::vector<TorusPoint> values;
};

PeriodAssignment period_map(const AnticanonicalConfig& c);

struct ReconstructionResult {
    std::vector<AnticanonicalConfig> orbit;  // sorted; 9 members related by E[3]
    AnticanonicalConfig canonical;           // least member
};

ReconstructionResult reconstruct_points(const PeriodAssignment& periods, std::size_t n);
// E[3]-orbit of a configuration, in the same canonical order.
ReconstructionResult e3_orbit(const AnticanonicalConfig& c);

// Classes a h - sum m_i e_i with square -1 and K-degree -1 on the plane blown up in n <= 8 points.
std::vector<IntVec> enumerate_exceptional(int n);
bool is_exceptional(const EnLattice& l, const IntVec& a);
// a . y >= 0 for a numerical exceptional class a and a nef class y.
bool is_effective(const EnLattice& l, const IntVec& a, const IntVec& y);

struct DatasetBlock {
    std::string label;                        // e.g. "E8"
    std::vector<TorusPoint> psi;              // on the simple roots, Bourbaki order, JW1 coordinates
    std::vector<bool> in_marking;             // psi of the summand lies in the image of JD_j
    std::optional<std::vector<bool>> factor_zero;
};

// Boundary data handed to the classifier: nilpotent-orbit invariants plus the extension data.
struct BoundaryDataset {
    int version = 1;
    std::string origin_convention = "inflection";
    std::size_t k = 0;
    std::vector<Int> pair_pattern;     // index of Im N_i + Im N_j in W1, sorted
    std::string root_label;            // R(Lambda)
    std::size_t jw_dim = 0;
    std::vector<IntMatrix> markings;   // JD_j -> JW1
    std::vector<DatasetBlock> blocks;
    std::string source;                // generator label; ignored by the classifier
    std::uint64_t seed = 0;
};

struct GeneratedFixture {
    StratumModel model;
    LambdaData lambda;
    JacobianModel jacobian;
    RestrictionData restriction;
    BoundaryDataset dataset;
};

GeneratedFixture generate_fixture(const std::string& label, std::uint64_t seed);
BoundaryDataset make_dataset(const GeneratedFixture& f);

// Structural checks; throws InputError on inconsistent data.
void validate_dataset(const BoundaryDataset& ds);

struct DecisionStep {
    std::string name;
    std::string value;
};

struct Classification {
    std::string label;  // one of the six strata, or "outside"
    std::vector<DecisionStep> steps;
    bool classified() const { return label != "outside"; }
};

inline const std::string kOutsideClassified = "outside";

Classification classify_stratum(const BoundaryDataset& ds);

struct Component111 {
    std::size_t factor = 0;          // marking index
    std::size_t block = 0;           // root summand index in the dataset
    PeriodAssignment periods;        // a_1..a_8 of the del Pezzo lattice
    ReconstructionResult points;
};

struct Descriptor111 {
    std::pair<std::size_t, std::size_t> gamma_pair;  // markings summing isomorphically onto JW1
    std::size_t base_marking = 0;                    // the section, isomorphic to JB
    std::vector<Component111> components;            // ordered by factor
    std::string gluing = "canonical";
};

Descriptor111 reconstruct_111(const BoundaryDataset& ds);

// Chain labels a_1..a_8 (a_8 attached to a_5) in terms of Bourbaki node indices (0-based).
const std::vector<std::size_t>& e8_label_to_bourbaki();

// E[3]-orbits predicted by the generator's restriction maps for each Z_i, in the simple
// system found by the root decomposition; used to check reconstruct_111.
std::vector<ReconstructionResult> fixture_orbits_111(const GeneratedFixture& f);

// Exchanges the roles of two double curves in a dataset.
BoundaryDataset swap_factors(const BoundaryDataset& ds, std::size_t a, std::size_t b);

}  // namespace isurf
