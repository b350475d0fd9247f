#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qeccf/matgroup.hpp"
#include "qeccf/pauli.hpp"

namespace qeccf {

enum class PhaseConvention {
  kReal,     // phases ±1, order 2·4^n (default)
  kComplex,  // phases ±1, ±i, order 4·4^n
};

// An error group E together with its index-group bookkeeping and weight
// function.
struct NiceErrorBasis {
  int qdim = 0;      // one-qudit dimension d
  int nfactors = 0;  // tensor factors n (1 for loaded bases)
  std::shared_ptr<const FinMatGroup> group;
  IndexList center;
  IndexList basis_reps;        // one representative per index-group coset, identity first
  std::vector<int> weights;    // per element of `group`
  std::vector<PauliElem> pauli;  // symbolic labels; empty for loaded bases
  std::string source;

  bool is_pauli() const { return !pauli.empty(); }
  std::size_t natural_dim() const { return group->dim(); }
  int weight(int idx) const;

  // Element lookup. Pauli groups accept Pauli strings ("-XZZXI"); loaded
  // bases accept "b<k>" for the k-th block of the file, "e<k>" for a raw
  // group index, an optional power suffix "^m" (m may be negative), products
  // joined by '*', and a leading '-' for multiplication by -I. Returns the element
  // index or throws Error(kDomain) if the element is not in the group.
  int parse_element(std::string_view spec) const;
  int find(const PauliElem& p) const;
  std::string label(int idx) const;
};

NiceErrorBasis pauli_group(int n, PhaseConvention convention = PhaseConvention::kReal);

// Loads a basis file (see README for the format), validates the nice error
// basis axioms and closes the group. Axiom failures throw Error(kAxiom) with
// the axiom named in the message.
NiceErrorBasis load_error_basis(const std::filesystem::path& path);

// Same validation on in-memory matrices; `source` is recorded verbatim.
NiceErrorBasis make_error_basis(const std::vector<CMat>& reps, std::string source);

void save_error_basis(const std::filesystem::path& path, const std::vector<CMat>& reps,
                      const std::string& comment = {});

struct StabilizerSpec {
  int n = 0;
  std::vector<PauliElem> generators;

  static StabilizerSpec parse(std::string_view text);  // one generator per line
  static StabilizerSpec load(const std::filesystem::path& path);
  static StabilizerSpec from_strings(const std::vector<std::string>& gens);

  // Throws when generators anticommute, are not Hermitian, or generate -I.
  void validate() const;
  // n minus the GF(2) rank of the generators' symplectic vectors.
  int logical_qubits() const;
  // All 2^r products of the generators.
  std::vector<PauliElem> group_elements() const;
};

// Π (I + g)/2 over the generators.
CMat stabilizer_projector(const StabilizerSpec& spec);

using BinMat = std::vector<std::vector<uint8_t>>;

// Z-type generators from rows of h1, X-type from rows of h2. Throws
// Error(kDomain, "CSS orthogonality violated") if h1·h2ᵀ ≠ 0 mod 2.
StabilizerSpec css_stabilizer_spec(const BinMat& h1, const BinMat& h2);

int weight(const NiceErrorBasis& e, int idx);

// Unsigned (phase 0) Pauli strings of exactly the given weight, in a fixed
// order: support subsets ascending, then letters X < Y < Z per position.
std::vector<PauliElem> pauli_strings_of_weight(int n, int w);

}  // namespace qeccf
