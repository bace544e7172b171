#include "tropigraph/json_io.hpp"

#include <string>

#include "tropigraph/error.hpp"
#include "tropigraph/graph.hpp"

namespace tropigraph {

namespace {

void check_schema(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (auto it = j.find("schema"); it != j.end()) {
    if (!it->is_string() || it->get<std::string>() != kSchema) {
      throw ParseError("unsupported schema " + it->dump());
    }
  }
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

Json bounds_json(const DimensionBounds& b) {
  return Json{{"lower", b.lower}, {"upper", b.upper}};
}

Json entry_json(const ConjectureEntry& e) {
  const char* relation = e.rho_min_plus < e.rho_max_plus   ? "<"
                         : e.rho_min_plus == e.rho_max_plus ? "="
                                                            : ">";
  return Json{{"graph6", e.graph6},
              {"n", e.n},
              {"rho_min_plus", e.rho_min_plus},
              {"rho_max_plus", e.rho_max_plus},
              {"relation", relation}};
}

}  // namespace

Json to_json(const TropicalValue& value) { return value.to_string(); }

Json to_json(const TropicalVector& vec) {
  Json out = Json::array();
  for (const auto& x : vec) out.push_back(to_json(x));
  return out;
}

Json to_json(const Representation& rep) {
  Json vectors = Json::object();
  for (int v = 0; v < rep.order(); ++v) vectors[std::to_string(v)] = to_json(rep.vectors[v]);
  return Json{{"schema", kSchema},
              {"algebra", std::string(algebra_name(rep.algebra))},
              {"t", format_rational(rep.threshold)},
              {"dim", rep.dim()},
              {"vectors", std::move(vectors)}};
}

Json to_json(const CoverSolution& cover) {
  Json parts = Json::array();
  for (const auto& part : cover.parts) {
    Json edges = Json::array();
    for (const Edge& e : part) edges.push_back(Json::array({e.u, e.v}));
    parts.push_back(std::move(edges));
  }
  return Json{{"schema", kSchema},
              {"mode", cover.mode == CoverMode::Union ? "union" : "intersection"},
              {"parts", std::move(parts)}};
}

Json to_json(const VerificationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(Json{{"u", v.u},
                              {"v", v.v},
                              {"dot", v.dot.to_string()},
                              {"expected", v.expected_edge ? "edge" : "non-edge"}});
  }
  return Json{{"schema", kSchema},
              {"valid", report.valid},
              {"violations", std::move(violations)}};
}

Json to_json(const DimensionResult& result) {
  const bool exact = result.method == DimensionMethod::Exact;
  auto value = [&](int v, const DimensionBounds& b) -> Json {
    if (exact || b.lower == b.upper) return v;
    return nullptr;
  };
  Json witnesses = Json::object();
  if (result.min_plus_witness) witnesses["min_plus"] = to_json(*result.min_plus_witness);
  if (result.max_plus_witness) witnesses["max_plus"] = to_json(*result.max_plus_witness);
  return Json{{"rho_min_plus", value(result.rho_min_plus, result.min_plus_bounds)},
              {"rho_max_plus", value(result.rho_max_plus, result.max_plus_bounds)},
              {"method", exact ? "exact" : "bounds"},
              {"bounds",
               Json{{"min_plus", bounds_json(result.min_plus_bounds)},
                    {"max_plus", bounds_json(result.max_plus_bounds)}}},
              {"witnesses", std::move(witnesses)},
              {"schema", kSchema}};
}

Json to_json(const ConjectureReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(entry_json(e));
  Json counter = Json::array();
  for (const auto& e : report.counterexamples) counter.push_back(entry_json(e));
  Json strict = Json::array();
  for (const auto& e : report.strict) strict.push_back(entry_json(e));
  return Json{{"schema", kSchema},
              {"n_max", report.n_max},
              {"classes", report.entries.size()},
              {"status", report.counterexamples.empty() ? "no counterexample found"
                                                        : "counterexample found"},
              {"counterexamples", std::move(counter)},
              {"strict", std::move(strict)},
              {"entries", std::move(entries)}};
}

TropicalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be a JSON array");
  std::vector<TropicalValue> entries;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("vector entries must be strings");
    entries.push_back(TropicalValue::parse(x.get<std::string>()));
  }
  if (entries.empty()) throw ParseError("empty vector");
  return TropicalVector(std::move(entries));
}

Representation representation_from_json(const Json& j) {
  check_schema(j);
  Representation rep;
  const Json& alg = field(j, "algebra");
  const Json& t = field(j, "t");
  const Json& vectors = field(j, "vectors");
  if (!alg.is_string() || !t.is_string() || !vectors.is_object()) {
    throw ParseError("malformed representation");
  }
  rep.algebra = parse_algebra(alg.get<std::string>());
  rep.threshold = parse_rational(t.get<std::string>());
  const auto n = vectors.size();
  for (std::size_t v = 0; v < n; ++v) {
    auto it = vectors.find(std::to_string(v));
    if (it == vectors.end()) {
      throw ParseError("vectors must be keyed 0..n-1, missing " + std::to_string(v));
    }
    rep.vectors.push_back(vector_from_json(*it));
  }
  if (auto d = j.find("dim"); d != j.end()) {
    if (!d->is_number_integer() || (n > 0 && d->get<int>() != rep.dim())) {
      throw ParseError("dim does not match vector lengths");
    }
  }
  try {
    rep.validate();
  } catch (const InvalidRepresentation& e) {
    throw ParseError(e.what());
  }
  return rep;
}

CoverSolution cover_from_json(const Json& j) {
  check_schema(j);
  CoverSolution cover;
  const Json& mode = field(j, "mode");
  if (mode == "union") {
    cover.mode = CoverMode::Union;
  } else if (mode == "intersection") {
    cover.mode = CoverMode::Intersection;
  } else {
    throw ParseError("mode must be union or intersection");
  }
  const Json& parts = field(j, "parts");
  if (!parts.is_array()) throw ParseError("parts must be an array");
  for (const auto& part : parts) {
    if (!part.is_array()) throw ParseError("part must be an array of edges");
    std::vector<Edge> edges;
    for (const auto& e : part) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("edge must be [u, v]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    cover.parts.push_back(std::move(edges));
  }
  return cover;
}

}  // namespace tropigraph
