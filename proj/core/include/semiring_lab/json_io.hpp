// JSON file formats and report serialization. All writers emit canonically
// ordered keys and canonically sorted mathematical content, so identical
// inputs give byte-identical output.
//
// Semiring file:   {"name": str, "elements": [str...], "zero": int,
//                   "add": [[int...]...], "mul": [[int...]...]}
// Group file:      {"elements": [str...], "identity": int, "op": [[int...]...]}
// Semimodule file: {"semiring": <object or path str>, "elements": [str...],
//                   "zero": int, "add": [[...]], "action": [[m rows x n cols]]}
// Congruence:      {"classes": [[int...]...]} sorted by least member
// Ideal:           {"members": [int...]} ascending

#pragma once

#include <string>
#include <vector>

#include "semiring_lab/partition.hpp"
#include "semiring_lab/radical.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"
#include "semiring_lab/structure.hpp"

namespace semiring_lab {

FiniteSemiring semiring_from_json(const std::string& text);
FiniteSemiring load_semiring(const std::string& path);
std::string semiring_to_json(const FiniteSemiring& s, bool pretty = false);

FiniteGroup group_from_json(const std::string& text);
FiniteGroup load_group(const std::string& path);
std::string group_to_json(const FiniteGroup& g, bool pretty = false);

// The "semiring" member may inline the object or name a file; relative paths
// resolve against the semimodule file's directory.
std::pair<FiniteSemiring, FiniteSemimodule> semimodule_from_json(const std::string& text,
                                                                 const std::string& base_dir = "");
std::pair<FiniteSemiring, FiniteSemimodule> load_semimodule(const std::string& path);
std::string semimodule_to_json(const FiniteSemiring& s, const FiniteSemimodule& mod,
                               bool pretty = false);

std::string partition_to_json(const Partition& p, bool pretty = false);
Partition partition_from_json(const std::string& text, int n);
std::string ideal_to_json(const RightIdeal& i, bool pretty = false);

std::string violations_to_json(const std::vector<AxiomViolation>& v, bool pretty = false);
std::string radical_report_to_json(const FiniteSemiring& s, const RadicalReport& r,
                                   bool pretty = false);
std::string decomposition_to_json(const FiniteSemiring& s, const SubdirectDecomposition& d,
                                  bool pretty = false);
std::string representation_to_json(const FiniteSemiring& s, const Representation& r,
                                   bool pretty = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace semiring_lab
