#include "search/certificate.hpp"

#include "formula/errors.hpp"

#include <limits>

namespace thrcnf {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::S: return "S";
    case Quantity::SPlus: return "S_plus";
    case Quantity::Turan: return "Turan";
    case Quantity::Cover: return "Cover";
    case Quantity::FUpper: return "F_upper";
    case Quantity::FLower: return "F_lower";
    case Quantity::MaxMis: return "MaxMIS";
  }
  return "?";
}

std::string to_string(BoundType b) {
  switch (b) {
    case BoundType::Exact: return "exact";
    case BoundType::Lower: return "lower";
    case BoundType::Upper: return "upper";
  }
  return "?";
}

long long Certificate::param(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  throw InputError("certificate has no parameter " + name);
}

Json bigint_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

namespace {

Json witness_json(const Witness& w) {
  if (const auto* f = std::get_if<Formula>(&w)) {
    Json clauses = Json::array();
    for (const auto& c : f->clauses()) {
      Json lits = Json::array();
      for (Literal l : c.literals()) lits.push_back(l.code);
      clauses.push_back(lits);
    }
    return {{"kind", "formula"}, {"n", f->num_vars()}, {"k", f->width()}, {"clauses", clauses}};
  }
  if (const auto* s = std::get_if<SetSystem>(&w)) {
    Json sets = Json::array();
    for (const auto& b : s->sets) sets.push_back(b.elements());
    return {{"kind", "set_system"}, {"n", s->n}, {"sets", sets}};
  }
  if (const auto* g = std::get_if<ConflictGraph>(&w)) {
    Json edges = Json::array();
    for (unsigned a = 0; a < g->n; ++a)
      for (unsigned b = a + 1; b < g->n; ++b)
        if (g->has_edge(a, b)) edges.push_back({a + 1, b + 1});
    return {{"kind", "graph"}, {"n", g->n}, {"edges", edges}};
  }
  return nullptr;
}

}  // namespace

Json certificate_to_json(const Certificate& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  Json j = {
      {"schema", 1},
      {"quantity", to_string(c.quantity)},
      {"params", params},
      {"value", bigint_json(c.value)},
      {"bound_type", to_string(c.bound_type)},
      {"witness_file", c.witness_file ? Json(*c.witness_file) : Json(nullptr)},
      {"verified", c.verified},
      {"elapsed_ms", c.elapsed_ms},
      {"nodes_explored", c.nodes_explored},
  };
  if (c.quantity == Quantity::SPlus) j["s_gap"] = c.s_gap;
  if (!c.witness_file && !std::holds_alternative<std::monostate>(c.witness)) j["witness"] = witness_json(c.witness);
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

}  // namespace thrcnf
