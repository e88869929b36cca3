#pragma once

#include <json.hpp>

#include "affs/affine_weyl.hpp"
#include "affs/laurent.hpp"
#include "affs/partitions.hpp"

namespace affs {

using json = nlohmann::json;

/// {"n": n, "entries": [cell, ...]} in row-major order; a cell is a list of
/// [exp, num, den] triples, the empty list being zero. num and den are JSON
/// integers when they fit in 64 bits and decimal strings otherwise.
json matrix_to_json(const LaurentMatrix& m);
/// Throws InvalidInput on malformed input.
LaurentMatrix matrix_from_json(const json& j);

json window_to_json(const AffinePermutation& w);
AffinePermutation window_from_json(const json& j);

json root_to_json(const RootIdx& r);
RootIdx root_from_json(const json& j);

json partition_to_json(const Partition& p);
json composition_to_json(const Composition& c);

}  // namespace affs
