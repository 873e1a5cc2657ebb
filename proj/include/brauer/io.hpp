#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "brauer/collections.hpp"
#include "brauer/report.hpp"

namespace brauer {

using Json = nlohmann::ordered_json;

/// Reads a tree document: {"vertices": [...], "edges": [{"id", "ends"}],
/// "rotations": {"v": [edge ids]}}.  Throws InputError on any defect.
PlaneTree parse_tree(std::string_view text);
PlaneTree read_tree_file(const std::string& path);
Json tree_to_json(const PlaneTree& g);

Json collections_to_json(const CollectionSet& set);
Json counts_to_json(EdgeId e, const std::map<int, std::size_t>& counts);
std::string counts_table(EdgeId e, const std::map<int, std::size_t>& counts);

Json report_to_json(const Report& r);
std::string report_table(const Report& r);

/// Arrow ids of a radical basis path, in order.
ArrowPath basis_arrows(const BrauerAlgebra& alg, std::size_t index);
Json complex_to_json(const BrauerAlgebra& alg, const TwoTermComplex& t);

std::string quiver_dot(const PlaneTree& g, const Quiver& q);
Json relations_to_json(const PlaneTree& g, const Quiver& q);

}  // namespace brauer
