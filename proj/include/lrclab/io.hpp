#ifndef LRCLAB_IO_HPP
#define LRCLAB_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lrclab/bounds.hpp"
#include "lrclab/distance.hpp"
#include "lrclab/evalcode.hpp"
#include "lrclab/structure.hpp"
#include "lrclab/tower.hpp"

namespace lrclab {

using json = nlohmann::json;

inline constexpr const char* kSchemaPrefix = "# lrclab-schema: ";

json field_json(const Field& field);
FieldPtr field_from_json(const json& j);

json places_json(const PlaceList& list);
std::string places_csv(const PlaceList& list);

std::string split_graph_dot(const SplitGraph& graph);

/// Generator matrix file: schema line, header line with n, k_nominal, m and
/// modulus, then one row of hex symbols per box monomial.
void write_genmatrix(std::ostream& os, const EvalCode& code);
std::string genmatrix_csv(const EvalCode& code);

json distance_report_json(const DistanceReport& report);
json proposition_json(const PropositionResult& result);

json code_params_json(const EvalCode& code);

std::string scatter_csv(const std::vector<ScatterRow>& rows);

}  // namespace lrclab

#endif
