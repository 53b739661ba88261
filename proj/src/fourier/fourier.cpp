#include "charkit/fourier.hpp"

#include <mutex>

namespace charkit {

std::string MPair::str() const { return "[" + std::to_string(class_index) + "," + std::to_string(char_index) + "]"; }

MSetData::MSetData(FiniteGroup g) : g_(std::move(g)), cd_(conjugacy_data(g_)) {
  for (size_t c = 0; c < cd_.classes.size(); ++c) {
    FiniteGroup cent = g_.subgroup(cd_.centralizers[c]);
    ConjugacyData ccd = conjugacy_data(cent);
    CharTable tab = character_table(cent, ccd);
    for (size_t chi = 0; chi < tab.table.size(); ++chi)
      pairs_.push_back(MPair{static_cast<int>(c), static_cast<int>(chi), true});
    cents_.push_back(std::move(cent));
    cent_cd_.push_back(std::move(ccd));
    cent_tables_.push_back(std::move(tab));
  }
}

bool MSetData::contains(const MPair& x) const {
  return x.class_index >= 0 && x.class_index < static_cast<int>(cent_tables_.size()) && x.char_index >= 0 &&
         x.char_index < static_cast<int>(cent_tables_[x.class_index].table.size());
}

CycNum MSetData::centralizer_value(int c, int chi, int h) const {
  const int local = cents_[c].index_of(g_.element(h));
  if (local < 0) throw IndexOutOfRange("element is not in the centralizer");
  return cent_tables_[c].table[chi][cent_cd_[c].class_of[local]];
}

CycNum MSetData::pairing(const MPair& x, const MPair& y) const {
  if (!contains(x) || !contains(y)) throw IndexOutOfRange("pair outside M(G): " + x.str() + " / " + y.str());
  const int g = cd_.reps[x.class_index];
  const int h = cd_.reps[y.class_index];
  const int g_inv = g_.inv(g);
  CycNum sum;
  for (int x_el = 0; x_el < static_cast<int>(g_.order()); ++x_el) {
    const int xi = g_.inv(x_el);
    const int conj_h = g_.mul(g_.mul(x_el, h), xi);
    if (g_.mul(g, conj_h) != g_.mul(conj_h, g)) continue;
    const int conj_g = g_.mul(g_.mul(xi, g_inv), x_el);
    sum += centralizer_value(y.class_index, y.char_index, conj_g) *
           centralizer_value(x.class_index, x.char_index, conj_h);
  }
  const long cg = static_cast<long>(cd_.centralizers[x.class_index].size());
  const long ch = static_cast<long>(cd_.centralizers[y.class_index].size());
  return sum / CycNum(cg * ch);
}

std::vector<MPair> m_set(const FiniteGroup& g) { return MSetData(g).pairs(); }

CycNum pairing(const FiniteGroup& g, const MPair& x, const MPair& y) { return MSetData(g).pairing(x, y); }

bool FourierMatrix::is_hermitian() const {
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = 0; j < entries.size(); ++j)
      if (entries[i][j] != entries[j][i].conj()) return false;
  return true;
}

bool FourierMatrix::is_involution() const {
  const size_t n = entries.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      CycNum s;
      for (size_t k = 0; k < n; ++k) s += entries[i][k] * entries[k][j];
      if (s != CycNum(i == j ? 1 : 0)) return false;
    }
  return true;
}

FourierMatrix fourier_matrix(const FiniteGroup& g) {
  FourierMatrix f;
  auto data = std::make_shared<MSetData>(g);
  f.mpairs = data->pairs();
  for (const MPair& x : f.mpairs) {
    std::vector<CycNum> row;
    for (const MPair& y : f.mpairs) row.push_back(data->pairing(x, y));
    f.entries.push_back(std::move(row));
  }
  f.data = std::move(data);
  if (!f.is_hermitian()) throw InvariantViolation("Fourier matrix is not hermitian");
  if (!f.is_involution()) throw InvariantViolation("Fourier matrix does not square to the identity");
  return f;
}

const FourierMatrix& fourier_matrix(const std::string& group_name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<FourierMatrix>> cache;
  const std::string name = group_name == "1" ? "Z1" : group_name;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::make_unique<FourierMatrix>(fourier_matrix(parse_group(name)))).first;
  return *it->second;
}

const FamilyMember& Family::member(const std::string& label) const {
  for (const auto& m : members)
    if (m.label == label) return m;
  throw KeyMismatch("family " + id + " has no member " + label);
}

const FamilyMember& Family::member_at(const MPair& x) const {
  for (const auto& m : members)
    if (m.mpair == x) return m;
  throw KeyMismatch("family " + id + " has no member at " + x.str());
}

bool Family::has_member(const std::string& label) const {
  for (const auto& m : members)
    if (m.label == label) return true;
  return false;
}

const Family& FamilyDataset::family_of(const std::string& label) const {
  for (const auto& f : families)
    if (f.has_member(label)) return f;
  throw KeyMismatch("no family contains " + label);
}

namespace {

size_t pair_position(const FourierMatrix& f, const MPair& x, const std::string& fam) {
  for (size_t i = 0; i < f.mpairs.size(); ++i)
    if (f.mpairs[i] == x) return i;
  throw KeyMismatch("mpair " + x.str() + " is not in M(G) for family " + fam);
}

}  // namespace

AlmostValues almost_transform(const Family& fam, const UnipotentValues& rho) {
  const FourierMatrix& f = fourier_matrix(fam.group_name);
  if (rho.size() != fam.members.size()) throw KeyMismatch("values do not match the members of family " + fam.id);
  AlmostValues out;
  for (const MPair& x : f.mpairs) out[x] = LaurentPoly();
  for (const auto& m : fam.members) {
    auto it = rho.find(m.label);
    if (it == rho.end()) throw KeyMismatch("missing value for " + m.label);
    const size_t i = pair_position(f, m.mpair, fam.id);
    for (size_t j = 0; j < f.mpairs.size(); ++j)
      out[f.mpairs[j]] += f.entries[i][j] * CycNum(m.delta) * it->second;
  }
  return out;
}

UnipotentValues almost_transform(const Family& fam, const AlmostValues& r) {
  const FourierMatrix& f = fourier_matrix(fam.group_name);
  if (r.size() != f.mpairs.size()) throw KeyMismatch("values do not match M(G) for family " + fam.id);
  for (const MPair& x : f.mpairs)
    if (!r.count(x)) throw KeyMismatch("missing value for mpair " + x.str());
  UnipotentValues out;
  for (const auto& m : fam.members) {
    const size_t i = pair_position(f, m.mpair, fam.id);
    LaurentPoly acc;
    for (size_t j = 0; j < f.mpairs.size(); ++j) acc += f.entries[i][j].conj() * r.at(f.mpairs[j]);
    out[m.label] = CycNum(m.delta) * acc;
  }
  return out;
}

long principal_degree(const std::string& label) {
  const auto a = label.find('_');
  const auto b = label.rfind('_');
  if (label.rfind("phi_", 0) != 0 || a == b) throw ParseError("not a principal label: " + label);
  try {
    size_t used = 0;
    const std::string d = label.substr(a + 1, b - a - 1);
    const long deg = std::stol(d, &used);
    if (used != d.size() || deg <= 0) throw ParseError("bad degree in " + label);
    return deg;
  } catch (const std::logic_error&) {
    throw ParseError("bad degree in " + label);
  }
}

}  // namespace charkit
