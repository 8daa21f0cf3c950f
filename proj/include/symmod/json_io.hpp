#pragma once

#include <json.hpp>

#include "symmod/geometry.hpp"
#include "symmod/hilbmod.hpp"
#include "symmod/kernels.hpp"
#include "symmod/permgroup.hpp"
#include "symmod/sparsepoly.hpp"

namespace symmod {

using Json = nlohmann::ordered_json;

Json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j);

Json chartable_to_json(const CharacterTable& t);
std::string chartable_to_csv(const CharacterTable& t);

template <class S>
Json irrep_to_json(const IrrepTable<S>& t);

Json kernel_to_json(const KernelSeries& k);

Json report_to_json(const CheckReport& r);
std::string report_to_csv(const CheckReport& r);

Json orth_to_json(const OrthReport& r);
Json artin_to_json(const ArtinCheckResult& r);
Json witness_to_json(const InequivalenceWitness& w);
Json crosscheck_to_json(const PermanentCrosscheck& c);
Json curvature_to_json(const CurvatureComparison& c);

// Parses a JSON list of points; coordinates are "p/q" strings (real) or
// ["re","im"] pairs of rational strings.
std::vector<std::vector<std::complex<double>>> parse_points(const Json& j, int n);

} // namespace symmod
