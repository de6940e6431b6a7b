#pragma once

// JSON and text formats for scalars, partitions, symmetric functions and
// evaluation points.

#include <string>

#include "json.hpp"
#include "wreath/evalpoly.hpp"

namespace wreath {

using Json = nlohmann::ordered_json;

Json to_json(const BiPoly& p);
Json to_json(const Scalar& s);
Json to_json(const Partition& p);
Json to_json(const MultiPartition& m);
Json to_json(const std::vector<int>& v);
Json to_json(const SymFunc& f);
Json to_json(const VarAssignment& x);

BiPoly bipoly_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);
Partition partition_from_json(const Json& j);
MultiPartition multipartition_from_json(const Json& j);
std::vector<int> ints_from_json(const Json& j);
SymFunc symfunc_from_json(const Json& j);
/// {"r": 2, "x": [["1/2"], ["3/5", "q"]]}
VarAssignment assignment_from_json(const Json& j);

/// Textual forms, e.g. "[4,3,2,2]", "[[1],[],[2]]", "[1,-1,0]".
Partition parse_partition(const std::string& s);
MultiPartition parse_multipartition(const std::string& s);
std::vector<int> parse_ints(const std::string& s);

/// Rational expressions in q and t: integers, "p/q", q, t, + - * / ^ and parentheses.
Scalar parse_scalar(const std::string& s);

}  // namespace wreath
