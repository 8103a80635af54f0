// Generator-spec parsing and the default verification corpus.
//
// Spec grammar (':'-separated tokens, parsed by recursive descent):
//   boolean | zmod:N | chain:N | zero-mul:N | matrix-b:K
//   group-semiring-b:(zN | <group file>.json)
//   product:<spec>:<spec> | opposite:<spec>
//   <path>.json   (a semiring file)

#pragma once

#include <string>
#include <vector>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

struct CorpusEntry {
  std::string name;
  std::string spec;  // generator spec or file path, as written
  FiniteSemiring semiring;
};

FiniteSemiring generate_from_spec(const std::string& spec);

// The in-repo corpus: the Boolean semifield, Z_2..Z_12, chains of length
// 2..4, zero-multiplication chains of 2..3, the group semiring B[Z_2], the
// 2x2 Boolean matrix semiring with its opposite, and all pairwise products
// of the base entries with at most 16 elements.
std::vector<CorpusEntry> default_corpus();

// Manifest file: {"entries": [{"name": str, "generator": spec} |
//                             {"name": str, "path": file}, ...]}
// Every entry is loaded and validated; relative paths resolve against the
// manifest's directory.
std::vector<CorpusEntry> load_manifest(const std::string& path);

}  // namespace semiring_lab
