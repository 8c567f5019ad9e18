#include "treeprof/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace treeprof {

namespace {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& value) {
  return Json{{"num", decimal(value.get_num())},
              {"den", decimal(value.get_den())}};
}

[[noreturn]] void bad_schema(const std::string& what) {
  throw std::runtime_error("bad JSON schema: " + what);
}

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::runtime_error("malformed JSON");
  return doc;
}

void require_keys(const Json& obj, std::initializer_list<const char*> keys,
                  const char* where) {
  if (!obj.is_object()) bad_schema(std::string(where) + " must be an object");
  if (obj.size() != keys.size()) {
    bad_schema(std::string(where) + " must hold exactly its schema keys");
  }
  for (const char* key : keys) {
    if (!obj.contains(key)) {
      bad_schema(std::string(where) + " missing key '" + key + "'");
    }
  }
}

int get_int(const Json& obj, const char* key) {
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) bad_schema(std::string(key) + " must be an integer");
  return v.get<int>();
}

std::string get_string(const Json& obj, const char* key) {
  const Json& v = obj.at(key);
  if (!v.is_string()) bad_schema(std::string(key) + " must be a string");
  return v.get<std::string>();
}

Rational rational_from_json(const Json& obj, const char* where) {
  require_keys(obj, {"num", "den"}, where);
  try {
    return make_rational(Integer(get_string(obj, "num")),
                         Integer(get_string(obj, "den")));
  } catch (const std::invalid_argument& e) {
    bad_schema(std::string(where) + ": " + e.what());
  }
}

}  // namespace

std::string profile_to_json(const ProfileVector& p) {
  Json doc;
  doc["k"] = p.k;
  Json entries = Json::array();
  for (const auto& [code, value] : p.entries) {
    entries.push_back(Json{{"code", code},
                           {"num", decimal(value.get_num())},
                           {"den", decimal(value.get_den())}});
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

ProfileVector profile_from_json(const std::string& text) {
  const Json doc = parse_document(text);
  require_keys(doc, {"k", "entries"}, "profile");
  ProfileVector p;
  p.k = get_int(doc, "k");
  if (p.k < 1) bad_schema("k must be positive");
  const Json& entries = doc.at("entries");
  if (!entries.is_array()) bad_schema("entries must be an array");
  for (const Json& entry : entries) {
    require_keys(entry, {"code", "num", "den"}, "profile entry");
    p.entries.emplace_back(get_string(entry, "code"),
                           rational_from_json(
                               Json{{"num", entry.at("num")},
                                    {"den", entry.at("den")}},
                               "profile entry"));
  }
  return p;
}

std::string search_result_to_json(const SearchResult& r) {
  Json doc;
  doc["s"] = r.s_code;
  doc["n"] = r.n;
  doc["max"] = rational_to_json(r.max_density);
  doc["argmax"] = r.argmax_hosts;
  return doc.dump();
}

SearchResult search_result_from_json(const std::string& text) {
  const Json doc = parse_document(text);
  require_keys(doc, {"s", "n", "max", "argmax"}, "search result");
  SearchResult r;
  r.s_code = get_string(doc, "s");
  r.n = get_int(doc, "n");
  r.max_density = rational_from_json(doc.at("max"), "max");
  const Json& argmax = doc.at("argmax");
  if (!argmax.is_array()) bad_schema("argmax must be an array");
  for (const Json& host : argmax) {
    if (!host.is_string()) bad_schema("argmax entries must be strings");
    r.argmax_hosts.push_back(host.get<std::string>());
  }
  return r;
}

std::string bound_report_to_json(const BoundReport& r) {
  Json doc;
  doc["name"] = r.name;
  Json context = Json::object();
  for (const auto& [key, value] : r.context) context[key] = value;
  doc["context"] = std::move(context);
  doc["claimed"] = rational_to_json(r.claimed);
  doc["observed"] = rational_to_json(r.observed);
  doc["holds"] = r.holds;
  return doc.dump();
}

}  // namespace treeprof
