#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isurf/lattice.hpp"

namespace isurf {

enum class Family { A, D, E };

// Simply-laced irreducible type; node indices follow Bourbaki (1-based in labels, 0-based in code).
struct DynkinType {
    Family family = Family::A;
    int rank = 1;

    std::string label() const;  // "A1", "D10", "E8"
    static DynkinType parse(const std::string& s);
    bool valid() const;
    bool operator==(const DynkinType&) const = default;

    std::vector<std::pair<int, int>> edges() const;
    long root_count() const;
    long coxeter_number() const;
};

IntMatrix cartan_matrix(const DynkinType& t);
// Negative definite lattice with Gram = -Cartan, so simple roots have norm -2.
IntegralLattice root_lattice(const DynkinType& t);
// Coefficients of the highest root in the simple roots, Bourbaki order.
std::vector<long> highest_root_formula(const DynkinType& t);

}  // namespace isurf
