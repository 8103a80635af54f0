#include "semiring_lab/corpus.hpp"

#include <filesystem>
#include <set>
#include <sstream>

#include <json.hpp>

#include "semiring_lab/json_io.hpp"

namespace semiring_lab {

namespace {

bool looks_like_path(const std::string& tok) {
  return tok.find(".json") != std::string::npos || tok.find('/') != std::string::npos;
}

std::vector<std::string> split_tokens(const std::string& spec) {
  std::vector<std::string> toks;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) toks.push_back(tok);
  return toks;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string(what) + ": expected an integer, got '" + tok + "'");
  }
}

FiniteGroup parse_group_token(const std::string& tok) {
  if (looks_like_path(tok)) return load_group(tok);
  if (tok.size() > 1 && (tok[0] == 'z' || tok[0] == 'Z'))
    return cyclic_group(parse_int(tok.substr(1), "group order"));
  throw InputError("unknown group spec '" + tok + "' (use zN or a group file)");
}

// Recursive descent over the ':'-separated token stream.
FiniteSemiring parse_spec(const std::vector<std::string>& toks, std::size_t& pos) {
  if (pos >= toks.size()) throw InputError("generator spec ended unexpectedly");
  const std::string head = toks[pos++];
  auto next = [&]() -> const std::string& {
    if (pos >= toks.size()) throw InputError("generator '" + head + "' is missing an argument");
    return toks[pos++];
  };
  if (head == "boolean") return make_boolean();
  if (head == "zmod") return make_zmod(parse_int(next(), "zmod"));
  if (head == "chain") return make_chain(parse_int(next(), "chain"));
  if (head == "zero-mul") return make_zero_mul(parse_int(next(), "zero-mul"));
  if (head == "matrix-b") return make_matrix_b(parse_int(next(), "matrix-b"));
  if (head == "group-semiring-b") return make_group_semiring_b(parse_group_token(next()));
  if (head == "opposite") return make_opposite(parse_spec(toks, pos));
  if (head == "product") {
    FiniteSemiring a = parse_spec(toks, pos);
    FiniteSemiring b = parse_spec(toks, pos);
    return make_product(a, b);
  }
  if (looks_like_path(head)) return load_semiring(head);
  throw InputError("unknown generator '" + head + "'");
}

}  // namespace

FiniteSemiring generate_from_spec(const std::string& spec) {
  auto toks = split_tokens(spec);
  std::size_t pos = 0;
  FiniteSemiring s = parse_spec(toks, pos);
  if (pos != toks.size()) throw InputError("trailing tokens in generator spec '" + spec + "'");
  return s;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<std::pair<std::string, std::string>> base = {
      {"B", "boolean"},
  };
  for (int n = 2; n <= 12; ++n)
    base.emplace_back("Z" + std::to_string(n), "zmod:" + std::to_string(n));
  for (int n = 2; n <= 4; ++n)
    base.emplace_back("chain" + std::to_string(n), "chain:" + std::to_string(n));
  for (int n = 2; n <= 3; ++n)
    base.emplace_back("zeromul" + std::to_string(n), "zero-mul:" + std::to_string(n));
  base.emplace_back("BZ2", "group-semiring-b:z2");
  base.emplace_back("MatB2", "matrix-b:2");

  std::vector<CorpusEntry> corpus;
  for (const auto& [name, spec] : base) {
    CorpusEntry e{name, spec, generate_from_spec(spec)};
    corpus.push_back(std::move(e));
  }

  // opposites of the non-commutative entries only; the rest coincide with
  // themselves table-for-table
  std::size_t base_count = corpus.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    const FiniteSemiring& s = corpus[i].semiring;
    bool commutative = true;
    for (int a = 0; a < s.n && commutative; ++a)
      for (int b = a + 1; b < s.n; ++b)
        if (s.mul(a, b) != s.mul(b, a)) {
          commutative = false;
          break;
        }
    if (!commutative)
      corpus.push_back({corpus[i].name + "^op", "opposite:" + corpus[i].spec,
                        make_opposite(s)});
  }

  // pairwise products of the base entries, up to 16 elements
  for (std::size_t i = 0; i < base_count; ++i)
    for (std::size_t j = i; j < base_count; ++j) {
      const auto& r = corpus[i];
      const auto& s = corpus[j];
      if (r.semiring.n * s.semiring.n > 16) continue;
      corpus.push_back({r.name + "x" + s.name, "product:" + r.spec + ":" + s.spec,
                        make_product(r.semiring, s.semiring)});
    }
  return corpus;
}

std::vector<CorpusEntry> load_manifest(const std::string& path) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw InputError("invalid manifest JSON in '" + path + "'");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw InputError("manifest must contain an 'entries' array");
  std::filesystem::path dir = std::filesystem::path(path).parent_path();

  std::vector<CorpusEntry> corpus;
  std::set<std::string> names;
  for (const auto& entry : j["entries"]) {
    if (!entry.is_object()) throw InputError("manifest entries must be objects");
    CorpusEntry e;
    if (entry.contains("generator")) {
      e.spec = entry["generator"].get<std::string>();
      e.semiring = generate_from_spec(e.spec);
    } else if (entry.contains("path")) {
      std::filesystem::path p = entry["path"].get<std::string>();
      if (p.is_relative()) p = dir / p;
      e.spec = p.string();
      e.semiring = load_semiring(p.string());
    } else {
      throw InputError("manifest entry needs a 'generator' or 'path' field");
    }
    e.name = entry.contains("name") ? entry["name"].get<std::string>() : e.semiring.name;
    if (!names.insert(e.name).second)
      throw InputError("duplicate corpus entry name '" + e.name + "'");
    corpus.push_back(std::move(e));
  }
  return corpus;
}

}  // namespace semiring_lab
