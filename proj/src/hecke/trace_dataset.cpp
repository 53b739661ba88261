#include <fstream>
#include <sstream>

#include "charkit/errors.hpp"
#include "charkit/hecke.hpp"
#include "json.hpp"

namespace charkit {

namespace {

using nlohmann::json;

void require(bool cond, const std::string& what) {
  if (!cond) throw SchemaError(what);
}

LaurentPoly parse_terms(const json& j, const std::string& label) {
  require(j.is_object(), "trace for " + label + " must be an object of exponent -> coefficient");
  std::map<int, std::string> terms;
  for (const auto& [k, v] : j.items()) {
    require(v.is_string(), "coefficient strings expected in trace for " + label);
    int e = 0;
    try {
      size_t used = 0;
      e = std::stoi(k, &used);
      require(used == k.size(), "bad exponent '" + k + "' in trace for " + label);
    } catch (const std::logic_error&) {
      throw SchemaError("bad exponent '" + k + "' in trace for " + label);
    }
    terms.emplace(e, v.get<std::string>());
  }
  try {
    return LaurentPoly::from_term_strings(terms);
  } catch (const ParseError& e) {
    throw SchemaError(std::string("trace for ") + label + ": " + e.what());
  }
}

const LaurentPoly& trace_of(const CoxeterTraceDataset& ds, const std::string& label) {
  auto it = ds.traces.find(label);
  if (it == ds.traces.end()) throw ConsistencyError("missing trace for " + label);
  return it->second;
}

}  // namespace

CoxeterTraceDataset parse_coxeter_traces(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  require(j.is_object(), "top level must be an object");
  require(j.contains("type") && j["type"].is_string(), "missing string field 'type'");
  require(j.contains("coxeter_word") && j["coxeter_word"].is_array(), "missing array field 'coxeter_word'");
  require(j.contains("traces") && j["traces"].is_object(), "missing object field 'traces'");
  CoxeterTraceDataset ds;
  ds.type = j["type"].get<std::string>();
  for (const auto& x : j["coxeter_word"]) {
    require(x.is_number_integer(), "coxeter_word entries must be integers");
    ds.coxeter_word.push_back(x.get<int>());
  }
  for (const auto& [label, t] : j["traces"].items()) ds.traces.emplace(label, parse_terms(t, label));
  auto int_map = [&](const char* key, std::map<std::string, long>& out) {
    if (!j.contains(key)) return;
    require(j[key].is_object(), std::string("'") + key + "' must be an object");
    for (const auto& [label, v] : j[key].items()) {
      require(v.is_number_integer(), std::string("integer values expected in '") + key + "'");
      out.emplace(label, v.get<long>());
    }
  };
  int_map("character_values", ds.character_values);
  int_map("degrees", ds.degrees);
  if (j.contains("provenance")) {
    require(j["provenance"].is_string(), "'provenance' must be a string");
    ds.provenance = j["provenance"].get<std::string>();
  }
  require(ds.type == "E7", "only E7 trace datasets are supported");
  require(ds.coxeter_word == std::vector<int>({1, 2, 3, 4, 5, 6, 7}), "coxeter_word must be [1,2,3,4,5,6,7]");
  require(!ds.character_values.empty(), "missing 'character_values' cross-check data");
  return ds;
}

void check_coxeter_traces(const CoxeterTraceDataset& ds) {
  if (ds.traces.size() != 60) throw ConsistencyError("expected 60 irreducible characters, found " + std::to_string(ds.traces.size()));
  for (const auto& [label, tr] : ds.traces) {
    auto it = ds.character_values.find(label);
    if (it == ds.character_values.end()) throw ConsistencyError("v -> 1 cross-check: no ordinary value for " + label);
    if (tr.at_one() != CycNum(it->second))
      throw ConsistencyError("v -> 1 cross-check fails for " + label + ": " + tr.at_one().str() + " vs " +
                             std::to_string(it->second));
  }
  if (ds.character_values.size() != ds.traces.size())
    throw ConsistencyError("v -> 1 cross-check: label sets differ");
  // second orthogonality: the Coxeter element has centralizer of order h = 18
  long norm = 0;
  for (const auto& [label, x] : ds.character_values) norm += x * x;
  if (norm != 18) throw ConsistencyError("column norm at the Coxeter class is " + std::to_string(norm) + ", expected 18");
  if (!ds.degrees.empty()) {
    long long total = 0;
    for (const auto& [label, d] : ds.degrees) total += static_cast<long long>(d) * d;
    if (total != 2903040) throw ConsistencyError("sum of squared degrees is " + std::to_string(total));
  }
  if (trace_of(ds, "phi_1_0") != LaurentPoly::v(14)) throw ConsistencyError("trivial character trace must be q^7");
  if (trace_of(ds, "phi_1_63") != LaurentPoly(-1)) throw ConsistencyError("sign character trace must be -1");
  const LaurentPoly combo = trace_of(ds, "phi_56_3") - trace_of(ds, "phi_35_4") - trace_of(ds, "phi_21_6");
  if (combo != 2 * LaurentPoly::q(5))
    throw ConsistencyError("combination phi_56_3 - phi_35_4 - phi_21_6 must equal 2q^5, got " + combo.str());
  const LaurentPoly diff = trace_of(ds, "phi_512_11") - trace_of(ds, "phi_512_12");
  if (diff != 2 * LaurentPoly::v(7))
    throw ConsistencyError("difference phi_512_11 - phi_512_12 must equal 2v^7, got " + diff.str());
}

CoxeterTraceDataset load_coxeter_traces(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  CoxeterTraceDataset ds = parse_coxeter_traces(ss.str());
  check_coxeter_traces(ds);
  return ds;
}

}  // namespace charkit
