#include "lienil/algebra_io.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <tuple>

namespace lienil {

using nlohmann::json;

std::string algebra_to_json(const StructureAlgebra& alg) {
  json j;
  j["dim"] = alg.dim();
  if (alg.field().is_rational())
    j["field"] = {{"kind", "Q"}};
  else
    j["field"] = {{"kind", "Fp"}, {"p", alg.field().characteristic()}};
  json table = json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t jj = 0; jj < alg.dim(); ++jj)
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        Scalar c = alg.entry(i, jj, k);
        if (c.is_zero()) continue;
        table.push_back({{"i", i + 1}, {"j", jj + 1}, {"k", k + 1},
                         {"c", c.str()}});
      }
  j["table"] = std::move(table);
  return j.dump(2) + "\n";
}

namespace {

std::size_t get_index(const json& entry, const char* key, std::size_t dim) {
  if (!entry.contains(key) || !entry[key].is_number_integer())
    throw precondition_error(std::string("table entry: missing or ") +
                             "non-integer index '" + key + "'");
  long long v = entry[key].get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim)
    throw precondition_error(std::string("table entry: index '") + key +
                             "' = " + std::to_string(v) +
                             " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v) - 1;
}

}  // namespace

StructureAlgebra algebra_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw precondition_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw precondition_error("top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() ||
      j["dim"].get<long long>() < 1)
    throw precondition_error("'dim' must be a positive integer");
  std::size_t dim = j["dim"].get<std::size_t>();

  if (!j.contains("field") || !j["field"].is_object() ||
      !j["field"].contains("kind") || !j["field"]["kind"].is_string())
    throw precondition_error("'field' must be {\"kind\": \"Q\"|\"Fp\", ...}");
  std::string kind = j["field"]["kind"].get<std::string>();
  FieldTag tag = FieldTag::rationals();
  if (kind == "Q") {
    // nothing more to read
  } else if (kind == "Fp") {
    if (!j["field"].contains("p") || !j["field"]["p"].is_number_integer() ||
        j["field"]["p"].get<long long>() < 2)
      throw precondition_error("field kind Fp requires an integer 'p' >= 2");
    tag = FieldTag::prime(j["field"]["p"].get<std::uint64_t>());
  } else {
    throw precondition_error("unknown field kind '" + kind +
                             "' (expected \"Q\" or \"Fp\")");
  }

  StructureAlgebra alg(dim, tag);
  if (!j.contains("table")) return alg;  // all-zero product
  if (!j["table"].is_array())
    throw precondition_error("'table' must be an array");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& entry : j["table"]) {
    if (!entry.is_object())
      throw precondition_error("table entries must be objects");
    std::size_t i = get_index(entry, "i", dim);
    std::size_t jj = get_index(entry, "j", dim);
    std::size_t k = get_index(entry, "k", dim);
    if (!seen.insert({i, jj, k}).second)
      throw precondition_error(
          "duplicate table entry at (i,j,k) = (" + std::to_string(i + 1) +
          "," + std::to_string(jj + 1) + "," + std::to_string(k + 1) + ")");
    if (!entry.contains("c"))
      throw precondition_error("table entry: missing coefficient 'c'");
    Scalar c = Scalar::zero(tag);
    if (entry["c"].is_string()) {
      c = Scalar::parse(entry["c"].get<std::string>(), tag);
    } else if (entry["c"].is_number_integer()) {
      c = Scalar::of_int(entry["c"].get<long long>(), tag);
    } else {
      throw precondition_error(
          "table entry: coefficient 'c' must be a string or an integer");
    }
    alg.set_entry(i, jj, k, c);
  }
  return alg;
}

}  // namespace lienil
