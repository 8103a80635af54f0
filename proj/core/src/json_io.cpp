#include "semiring_lab/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace semiring_lab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("invalid JSON");
  return j;
}

std::vector<int> int_row(const ordered_json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("expected an integer table entry");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> int_table(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rows");
  std::vector<int> flat;
  std::size_t width = 0;
  for (const auto& row : j) {
    auto r = int_row(row);
    if (flat.empty()) width = r.size();
    else if (r.size() != width) throw InputError(std::string(what) + " rows have unequal length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  if (j.size() != width && !(j.empty() && width == 0))
    throw InputError(std::string(what) + " must be square");
  return flat;
}

std::vector<std::string> string_list(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError(std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

const ordered_json& field(const ordered_json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

ordered_json table_json(const std::vector<int>& flat, int rows, int cols) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < cols; ++j) row.push_back(flat[i * cols + j]);
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json partition_json(const Partition& p) {
  ordered_json classes = ordered_json::array();
  for (const auto& blk : p.blocks()) classes.push_back(blk);
  return ordered_json{{"classes", std::move(classes)}};
}

FiniteSemiring semiring_from(const ordered_json& j) {
  if (!j.is_object()) throw InputError("semiring JSON must be an object");
  FiniteSemiring s;
  s.name = j.contains("name") ? field(j, "name").get<std::string>() : "unnamed";
  s.labels = string_list(field(j, "elements"), "elements");
  s.n = static_cast<int>(s.labels.size());
  const auto& z = field(j, "zero");
  if (!z.is_number_integer()) throw InputError("zero must be an integer index");
  s.zero = z.get<int>();
  s.add_table = int_table(field(j, "add"), "add");
  s.mul_table = int_table(field(j, "mul"), "mul");
  if (static_cast<int>(s.add_table.size()) != s.n * s.n ||
      static_cast<int>(s.mul_table.size()) != s.n * s.n)
    throw InputError("table dimensions do not match the element count");
  return validate_semiring(std::move(s));
}

ordered_json semiring_json(const FiniteSemiring& s) {
  return ordered_json{{"name", s.name},
                      {"elements", s.labels},
                      {"zero", s.zero},
                      {"add", table_json(s.add_table, s.n, s.n)},
                      {"mul", table_json(s.mul_table, s.n, s.n)}};
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

FiniteSemiring semiring_from_json(const std::string& text) { return semiring_from(parse(text)); }

FiniteSemiring load_semiring(const std::string& path) {
  return semiring_from_json(read_file(path));
}

std::string semiring_to_json(const FiniteSemiring& s, bool pretty) {
  return dump(semiring_json(s), pretty);
}

FiniteGroup group_from_json(const std::string& text) {
  ordered_json j = parse(text);
  FiniteGroup g;
  g.name = j.contains("name") ? field(j, "name").get<std::string>() : "G";
  g.labels = string_list(field(j, "elements"), "elements");
  g.n = static_cast<int>(g.labels.size());
  const auto& id = field(j, "identity");
  if (!id.is_number_integer()) throw InputError("identity must be an integer index");
  g.identity = id.get<int>();
  g.op_table = int_table(field(j, "op"), "op");
  if (static_cast<int>(g.op_table.size()) != g.n * g.n)
    throw InputError("group table dimensions do not match the element count");
  return validate_group(std::move(g));
}

FiniteGroup load_group(const std::string& path) { return group_from_json(read_file(path)); }

std::string group_to_json(const FiniteGroup& g, bool pretty) {
  return dump(ordered_json{{"elements", g.labels},
                           {"identity", g.identity},
                           {"op", table_json(g.op_table, g.n, g.n)}},
              pretty);
}

std::pair<FiniteSemiring, FiniteSemimodule> semimodule_from_json(const std::string& text,
                                                                 const std::string& base_dir) {
  ordered_json j = parse(text);
  const auto& sr = field(j, "semiring");
  FiniteSemiring s;
  if (sr.is_string()) {
    std::filesystem::path p = sr.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    s = load_semiring(p.string());
  } else {
    s = semiring_from(sr);
  }
  FiniteSemimodule mod;
  mod.labels = string_list(field(j, "elements"), "elements");
  mod.m = static_cast<int>(mod.labels.size());
  mod.n = s.n;
  const auto& z = field(j, "zero");
  if (!z.is_number_integer()) throw InputError("zero must be an integer index");
  mod.zero = z.get<int>();
  mod.add_table = int_table(field(j, "add"), "add");
  const auto& act = field(j, "action");
  if (!act.is_array()) throw InputError("action must be an array of rows");
  for (const auto& row : act) {
    auto r = int_row(row);
    if (static_cast<int>(r.size()) != s.n) throw InputError("action rows must have |S| entries");
    mod.action_table.insert(mod.action_table.end(), r.begin(), r.end());
  }
  if (static_cast<int>(act.size()) != mod.m)
    throw InputError("action must have one row per module element");
  mod = validate_semimodule(s, std::move(mod));
  return {std::move(s), std::move(mod)};
}

std::pair<FiniteSemiring, FiniteSemimodule> load_semimodule(const std::string& path) {
  return semimodule_from_json(read_file(path),
                              std::filesystem::path(path).parent_path().string());
}

std::string semimodule_to_json(const FiniteSemiring& s, const FiniteSemimodule& mod,
                               bool pretty) {
  std::vector<std::string> labels = mod.labels;
  if (labels.empty())
    for (int i = 0; i < mod.m; ++i) labels.push_back("m" + std::to_string(i));
  return dump(ordered_json{{"semiring", semiring_json(s)},
                           {"elements", labels},
                           {"zero", mod.zero},
                           {"add", table_json(mod.add_table, mod.m, mod.m)},
                           {"action", table_json(mod.action_table, mod.m, mod.n)}},
              pretty);
}

std::string partition_to_json(const Partition& p, bool pretty) {
  return dump(partition_json(p), pretty);
}

Partition partition_from_json(const std::string& text, int n) {
  ordered_json j = parse(text);
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : field(j, "classes")) blocks.push_back(int_row(blk));
  return Partition::from_blocks(n, blocks);
}

std::string ideal_to_json(const RightIdeal& i, bool pretty) {
  return dump(ordered_json{{"members", i.members}}, pretty);
}

std::string violations_to_json(const std::vector<AxiomViolation>& v, bool pretty) {
  ordered_json list = ordered_json::array();
  for (const auto& viol : v)
    list.push_back(ordered_json{
        {"law", viol.law}, {"witness", viol.witness}, {"detail", viol.detail}});
  return dump(ordered_json{{"valid", v.empty()}, {"violations", std::move(list)}}, pretty);
}

std::string radical_report_to_json(const FiniteSemiring& s, const RadicalReport& r,
                                   bool pretty) {
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(partition_json(w));
  return dump(ordered_json{{"semiring", s.name},
                           {"kind", to_string(r.kind)},
                           {"radical", partition_json(r.radical)},
                           {"via_rc", partition_json(r.via_rc)},
                           {"via_residual", partition_json(r.via_residual)},
                           {"via_annihilators", partition_json(r.via_annihilators)},
                           {"rc_witnesses", std::move(witnesses)},
                           {"agreement", r.agreement},
                           {"semisimple", r.semisimple}},
              pretty);
}

std::string decomposition_to_json(const FiniteSemiring& s, const SubdirectDecomposition& d,
                                  bool pretty) {
  ordered_json j;
  j["semiring"] = s.name;
  j["decomposed"] = d.decomposed;
  if (d.radical_certificate) j["radical"] = partition_json(*d.radical_certificate);
  ordered_json factors = ordered_json::array();
  for (const auto& f : d.factors)
    factors.push_back(ordered_json{{"congruence", partition_json(f.congruence)},
                                   {"quotient", semiring_json(f.quotient)}});
  j["factors"] = std::move(factors);
  j["embedding"] = d.embedding;
  j["injective"] = d.injective;
  j["projections_surjective"] = d.projections_surjective;
  return dump(j, pretty);
}

std::string representation_to_json(const FiniteSemiring& s, const Representation& r,
                                   bool pretty) {
  ordered_json psi_maps = ordered_json::array();
  for (int a = 0; a < s.n; ++a)
    psi_maps.push_back(ordered_json{{"element", s.label(a)},
                                    {"endomorphism", r.psi[a]},
                                    {"map", r.end_d.maps[r.psi[a]]}});
  return dump(ordered_json{{"semiring", s.name},
                           {"witness_congruence", partition_json(r.witness_congruence)},
                           {"module_size", r.module_over_s.m},
                           {"division_semiring", semiring_json(r.division_semiring)},
                           {"end_d_size", r.end_d.semiring.n},
                           {"psi", std::move(psi_maps)},
                           {"t_members", r.t_members},
                           {"injective", r.injective},
                           {"one_fold_transitive", r.one_fold_transitive}},
              pretty);
}

}  // namespace semiring_lab
