#pragma once

#include <string>

#include "treeprof/bounds.hpp"
#include "treeprof/search.hpp"
#include "treeprof/subtrees.hpp"

namespace treeprof {

// JSON wire formats. All numbers that can grow are decimal strings; no
// floats appear anywhere. Serialization is byte-deterministic: emit, parse,
// re-emit is the identity on bytes.

// {"k": int, "entries": [{"code": str, "num": str, "den": str}, ...]}
std::string profile_to_json(const ProfileVector& p);
ProfileVector profile_from_json(const std::string& text);  // throws on bad schema

// {"s": code, "n": int, "max": {"num","den"}, "argmax": [codes]}
std::string search_result_to_json(const SearchResult& r);
SearchResult search_result_from_json(const std::string& text);

// One JSON object per report line:
// {"name": str, "context": {...}, "claimed": {"num","den"},
//  "observed": {"num","den"}, "holds": bool}
std::string bound_report_to_json(const BoundReport& r);

}  // namespace treeprof
