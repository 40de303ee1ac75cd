#pragma once

#include <string>

#include "json.hpp"

#include "burnside/monoid.hpp"
#include "burnside/mset.hpp"

namespace burnside {

using Json = nlohmann::ordered_json;

// Accepts {"size","identity","cayley","labels"?}, a generator description
// ({"type":"transformations","degree",...} or {"type":"matrices","field",
// "dim",...} where "field" is a prime power or "Z"), or a catalog name
// string.
MonoidPtr parse_monoid(const Json& j, const ClosureOptions& opts = {});

// {"monoid": <as above>, "points": k, "action": [[index-or-null,...]],
//  "labels"?}; the parsed action is validated.
PartialMSet parse_mset(const Json& j, const ClosureOptions& opts = {});

Json emit_monoid(const FiniteMonoid& m);
Json emit_mset(const PartialMSet& x);

// Reads and parses a JSON file, wrapping failures in InputError.
Json load_json_file(const std::string& path);

}  // namespace burnside
