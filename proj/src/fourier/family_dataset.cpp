#include <fstream>
#include <set>
#include <sstream>

#include "charkit/fourier.hpp"
#include "json.hpp"

namespace charkit {

namespace {

using nlohmann::json;

void require(bool cond, const std::string& what) {
  if (!cond) throw SchemaError(what);
}

// Stand-ins for unknown class-function values: distinct monomials keep the
// coefficients of the transform readable off the result.
const LaurentPoly a_val = LaurentPoly::v(1);
const LaurentPoly b_val = LaurentPoly::v(2);

void check_lambda(const Family& fam, const FamilyMember& m, bool twisted) {
  const FourierMatrix& f = fourier_matrix(fam.group_name);
  const MSetData& d = *f.data;
  const int g = d.classes().reps[m.mpair.class_index];
  const CharTable& t = d.centralizer_table(m.mpair.class_index);
  CycNum expected = d.centralizer_value(m.mpair.class_index, m.mpair.char_index, g) / t.degree(m.mpair.char_index);
  if (twisted && m.mpair.class_index != 0) expected *= CycNum::root_of_unity(4, 1);
  if (m.lambda != expected)
    throw ConsistencyError("lambda of " + m.label + " is " + m.lambda.str() + ", expected " + expected.str());
}

void check_f0(const FamilyDataset& ds) {
  const Family& f0 = ds.family_of("phi_512_11");
  const std::set<std::string> want{"phi_512_11", "phi_512_12", "E7[z4]", "E7[-z4]"};
  std::set<std::string> have;
  for (const auto& m : f0.members) have.insert(m.label);
  if (have != want) throw ConsistencyError("family of phi_512_11 must be {phi_512_11, phi_512_12, E7[z4], E7[-z4]}");
  const FamilyMember& x1 = f0.member("E7[z4]");
  const FamilyMember& x2 = f0.member("E7[-z4]");
  if (x1.delta != -1 || x2.delta != -1) throw ConsistencyError("Delta of both cuspidal members must be -1");
  if (x1.kind != "cuspidal" || x2.kind != "cuspidal") throw ConsistencyError("E7[+-z4] must be cuspidal members");
  if (x1.lambda != CycNum::root_of_unity(4, 1) || x2.lambda != -CycNum::root_of_unity(4, 1))
    throw ConsistencyError("lambda of E7[z4], E7[-z4] must be z4, -z4");
  // Only R_{x1}, R_{x2} are nonzero at a regular unipotent element.
  AlmostValues r;
  for (const auto& m : f0.members) r[m.mpair] = LaurentPoly();
  r[x1.mpair] = a_val;
  r[x2.mpair] = b_val;
  UnipotentValues rho = almost_transform(f0, r);
  const LaurentPoly half_sum = (a_val + b_val) * CycNum(Rational(1, 2));
  const LaurentPoly half_diff = (a_val - b_val) * CycNum(Rational(1, 2));
  if (rho.at("phi_512_11") != half_sum || rho.at("phi_512_12") != -half_sum)
    throw PinningError("rho_{512,11} must be (R_x1 + R_x2)/2 and rho_{512,12} its negative; swap the 512 mpairs");
  if (rho.at("E7[z4]") != -half_diff || rho.at("E7[-z4]") != half_diff)
    throw PinningError("E7[z4] must be -(R_x1 - R_x2)/2 and E7[-z4] its negative");
}

void check_f_x0(const FamilyDataset& ds) {
  const Family& fam = ds.family_of("phi_56_3");
  const FamilyMember* x0 = nullptr;
  for (const auto& m : fam.members)
    if (m.kind != "principal") {
      if (x0) throw ConsistencyError("family of phi_56_3 must have one non-principal member");
      x0 = &m;
    }
  if (!x0) throw ConsistencyError("family of phi_56_3 has no non-principal member");
  AlmostValues r;
  for (const auto& m : fam.members) r[m.mpair] = LaurentPoly();
  r[x0->mpair] = a_val;
  UnipotentValues rho = almost_transform(fam, r);
  const LaurentPoly half = a_val * CycNum(Rational(1, 2));
  if (rho.at("phi_56_3") != half || rho.at("phi_35_4") != -half || rho.at("phi_21_6") != -half)
    throw PinningError("family of phi_56_3: expected rho_56 = -rho_35 = -rho_21 = R_x0/2");
}

}  // namespace

FamilyDataset parse_family_dataset(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  require(j.is_object(), "top level must be an object");
  require(j.contains("type") && j["type"].is_string(), "missing string field 'type'");
  require(j.contains("families") && j["families"].is_array(), "missing array field 'families'");
  FamilyDataset ds;
  ds.type = j["type"].get<std::string>();
  if (j.contains("provenance")) {
    require(j["provenance"].is_string(), "'provenance' must be a string");
    ds.provenance = j["provenance"].get<std::string>();
  }
  for (const auto& jf : j["families"]) {
    require(jf.is_object(), "family entries must be objects");
    require(jf.contains("id") && jf["id"].is_string(), "family without string 'id'");
    require(jf.contains("group") && jf["group"].is_string(), "family without string 'group'");
    require(jf.contains("members") && jf["members"].is_array(), "family without 'members' array");
    Family fam;
    fam.id = jf["id"].get<std::string>();
    fam.group_name = jf["group"].get<std::string>();
    for (const auto& jm : jf["members"]) {
      const std::string where = "member of family " + fam.id;
      require(jm.is_object(), where + " must be an object");
      require(jm.contains("kind") && jm["kind"].is_string(), where + ": missing 'kind'");
      require(jm.contains("label") && jm["label"].is_string(), where + ": missing 'label'");
      require(jm.contains("mpair") && jm["mpair"].is_array() && jm["mpair"].size() == 2, where + ": 'mpair' must be [class, char]");
      require(jm["mpair"][0].is_number_integer() && jm["mpair"][1].is_number_integer(), where + ": integer mpair expected");
      require(jm.contains("delta") && jm["delta"].is_number_integer(), where + ": missing integer 'delta'");
      require(jm.contains("lambda") && jm["lambda"].is_string(), where + ": missing string 'lambda'");
      FamilyMember m;
      m.kind = jm["kind"].get<std::string>();
      m.label = jm["label"].get<std::string>();
      m.mpair = MPair{jm["mpair"][0].get<int>(), jm["mpair"][1].get<int>(), true};
      m.delta = jm["delta"].get<int>();
      require(m.kind == "principal" || m.kind == "cuspidal" || m.kind == "series", where + ": unknown kind " + m.kind);
      require(m.delta == 1 || m.delta == -1, where + ": delta must be +-1");
      try {
        m.lambda = CycNum::parse(jm["lambda"].get<std::string>());
      } catch (const ParseError& e) {
        throw SchemaError(where + ": " + e.what());
      }
      fam.members.push_back(std::move(m));
    }
    ds.families.push_back(std::move(fam));
  }
  return ds;
}

void check_family_dataset(const FamilyDataset& ds) {
  if (ds.type != "E7") throw SchemaError("only E7 family datasets are supported");
  std::set<std::string> labels;
  size_t total_pairs = 0;
  long long degree_squares = 0;
  size_t principal = 0;
  const Family* f0 = nullptr;
  for (const auto& fam : ds.families) {
    const FourierMatrix* f = nullptr;
    try {
      f = &fourier_matrix(fam.group_name);
    } catch (const ParseError&) {
      throw SchemaError("family " + fam.id + ": unknown group " + fam.group_name);
    }
    total_pairs += f->mpairs.size();
    if (fam.members.size() != f->mpairs.size())
      throw ConsistencyError("family " + fam.id + " has " + std::to_string(fam.members.size()) + " members but |M(G)| = " +
                             std::to_string(f->mpairs.size()));
    std::set<MPair> seen;
    for (const auto& m : fam.members) {
      if (!f->data->contains(m.mpair)) throw SchemaError("family " + fam.id + ": mpair " + m.mpair.str() + " not in M(G)");
      if (!seen.insert(m.mpair).second) throw ConsistencyError("family " + fam.id + ": repeated mpair " + m.mpair.str());
      if (!labels.insert(m.label).second) throw ConsistencyError("label " + m.label + " appears twice");
      if (m.kind == "principal") {
        const long d = principal_degree(m.label);
        degree_squares += static_cast<long long>(d) * d;
        ++principal;
      }
      if (m.label == "phi_512_11") f0 = &fam;
    }
  }
  if (principal != 60) throw ConsistencyError("expected 60 principal labels, found " + std::to_string(principal));
  if (degree_squares != 2903040)
    throw ConsistencyError("sum of squared principal degrees is " + std::to_string(degree_squares) + ", expected 2903040");
  if (total_pairs != 76) throw ConsistencyError("sum of |M(G_F)| is " + std::to_string(total_pairs) + ", expected 76");
  for (const auto& fam : ds.families)
    for (const auto& m : fam.members) check_lambda(fam, m, &fam == f0);
  check_f0(ds);
  check_f_x0(ds);
}

FamilyDataset load_family_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  FamilyDataset ds = parse_family_dataset(ss.str());
  check_family_dataset(ds);
  return ds;
}

}  // namespace charkit
