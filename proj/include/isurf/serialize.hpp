#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "isurf/normal_form.hpp"
#include "isurf/torelli.hpp"

namespace isurf {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Rat& q);  // "p/q" or "p"
Rat rat_from_json(const Json& j);
Json to_json(const Int& n);  // number when it fits in 64 bits, decimal string otherwise
Int int_from_json(const Json& j);

Json to_json(const TorusPoint& p);
TorusPoint point_from_json(const Json& j);
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
Json to_json(const IntVec& v);

Json to_json(const BoundaryDataset& ds);
BoundaryDataset dataset_from_json(const Json& j);

// {"version": 1, "n": n, "periods": [[x, y], ...]} with values on a_1..a_n.
Json periods_to_json(const PeriodAssignment& p, std::size_t n);
std::pair<PeriodAssignment, std::size_t> periods_from_json(const Json& j);

Json to_json(const AnticanonicalConfig& c);

// {"(ex,ey,ez,et)": "p/q", ...}
Json to_json(const WeightedPolynomial& p);
WeightedPolynomial polynomial_from_json(const Json& j);

Json to_json(const CoordinateChange& c);
Json to_json(const StandardForm& s);

// Parses text as JSON, raising InputError on syntax errors.
Json parse_json(const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace isurf
