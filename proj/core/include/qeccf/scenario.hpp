#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qeccf/errbasis.hpp"
#include "qeccf/fourier.hpp"
#include "qeccf/repn.hpp"

namespace qeccf {

// One [section] of a scenario file. Keys:
//   group             pauli:<n> | file:<path>
//   subgroup          centralizer | stabilizer | generated | whole
//   stabilizer        comma-separated Pauli strings (centralizer, stabilizer)
//   generators        comma-separated element specs (generated)
//   slots             comma-separated constituent ordinals
//   values            comma-separated value labels, in enumeration order
//   basis.diag        element spec, or one per slot, for adapt_basis
//   basis.offdiag     same
//   seed              commutant sampling seed
//   golden            golden CSV path
//   table_convention  true | false
// Relative paths resolve against the scenario file's directory.
struct Scenario {
  std::string name;
  std::filesystem::path dir;
  std::string group = "pauli:5";
  std::string subgroup = "centralizer";
  std::vector<std::string> stabilizer;
  std::vector<std::string> generators;
  std::vector<int> slots;
  std::vector<std::string> values;
  std::vector<std::string> basis_diag;
  std::vector<std::string> basis_offdiag;
  std::uint64_t seed = kDefaultSeed;
  std::string golden;
  bool table_convention = false;

  std::filesystem::path resolve(const std::string& p) const;
};

inline const std::vector<std::string>& default_values() {
  static const std::vector<std::string> v{"O2", "PZ-", "PX-", "PX+", "PY+", "PY-", "PZ+", "I2"};
  return v;
}

std::vector<Scenario> parse_scenarios(std::string_view text, const std::filesystem::path& dir = {});
std::vector<Scenario> load_scenarios(const std::filesystem::path& path);
// First section when `section` is empty.
Scenario load_scenario(const std::filesystem::path& path, std::string_view section = {});

// Rewrites `key = value` inside one section of a scenario file, appending the
// key when absent. Other lines are preserved byte for byte.
void set_scenario_key(const std::filesystem::path& path, std::string_view section, std::string_view key,
                      std::string_view value);

// Value labels: O<n>, I<n>, and for n = 2 the projectors PX±, PY±, PZ±
// (Y Hermitian).
CMat value_matrix(std::string_view label, int n = 2);

struct Prepared {
  NiceErrorBasis e;
  IndexList sub;
  ConstituentSet cs;
};

// Builds the error group, the subgroup and its decomposition, then applies
// basis.diag / basis.offdiag to every slot.
Prepared prepare(const Scenario& s);

TransformAssignment make_assignment(const Prepared& p, const std::vector<int>& slots,
                                    const std::vector<std::string>& labels);

std::vector<std::string> split_list(std::string_view text, char sep = ',');

}  // namespace qeccf
