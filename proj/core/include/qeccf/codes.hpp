#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qeccf/errbasis.hpp"
#include "qeccf/fourier.hpp"
#include "qeccf/repn.hpp"

namespace qeccf {

struct Detection {
  bool detectable = false;
  cd lambda = 0;
};

// Literal test: M = PgP, λ = tr(M)/dim, detectable iff ‖M − λP‖_max <= eq_tol.
Detection is_detectable(const CMat& p, const CMat& g, const Tol& tol = {});

// Same verdict as is_detectable, computed through an orthonormal code basis B.
// Elements whose compressed residual B†gB − λI is far from zero are rejected
// without forming PgP; everything else gets the literal max-norm test.
class Detector {
 public:
  explicit Detector(const CMat& p, const Tol& tol = {});

  long dim() const { return k_; }
  const CMat& basis() const { return b_; }
  Detection check(const CMat& g) const;
  Detection check(const PauliElem& g) const;

 private:
  Detection finish(const CMat& gb) const;

  CMat b_;
  Tol tol_;
  long k_ = 0;
};

struct WeightCount {
  int detected = 0;
  int total = 0;
};

struct CodeAnalysis {
  CMat projector;
  long dim_code = 0;
  IndexList detectable;
  std::map<int, WeightCount> wt_detect;
  std::optional<int> min_distance;  // empty: "n/a"
  bool is_clifford_of_S = false;
  bool in_A_of_S = false;
  std::optional<bool> table_convention;
  TransformAssignment assignment;

  std::string distance_label() const;
};

// Tests every element of E. Pauli groups get tensor weights and a distance;
// loaded bases report the distance as n/a.
CodeAnalysis detectable_set(const CMat& p, const NiceErrorBasis& e, const Tol& tol = {}, int threads = 1);

// Least weight of an undetectable n-qubit Pauli string, or n+1. Works on
// unsigned strings, so it never builds the Pauli group.
int pauli_min_distance(const CMat& p, int n, const Tol& tol = {});

struct KnillLaflamme {
  bool correctable = false;
  CMat alpha;
};

KnillLaflamme knill_laflamme_check(const CMat& p, const std::vector<CMat>& errors, const Tol& tol = {});

// Fills is_clifford_of_S and in_A_of_S from analysis.assignment and t. With
// table_convention set, also fills analysis.table_convention.
void classify(CodeAnalysis& analysis, const ConstituentSet& cs, const GroupAlgebraElem& t,
              bool table_convention = false, const Tol& tol = {});

// True iff all nonzero values are identities and the projector equals the
// isotypic projector of the subgroup of S acting by scalars on the code, that
// subgroup being normal in E.
bool is_clifford_table_convention(const TransformAssignment& assign, const CMat& projector,
                                  const ConstituentSet& cs, const Tol& tol = {});

struct TranslateSumSpec {
  int base_constituent = 0;
  IndexList translators;              // identity first
  std::vector<int> constituents;      // constituent carrying χ^h for each translator
  std::vector<IndexList> quasikernels;
  CMat projector;                     // Σ_h P_{χ^h}
};

// χ^h(s) = χ(h s h^-1). Throws Error(kDomain) when two translates coincide.
TranslateSumSpec make_translate_sum(const ConstituentSet& cs, int base, const IndexList& translators,
                                    const Tol& tol = {});

enum class TranslateCase { kInAllQuasikernels = 1, kOutsideS = 2, kInSOnly = 3 };

struct TranslatePrediction {
  TranslateCase which = TranslateCase::kInSOnly;
  bool predicted_detectable = false;
};

TranslatePrediction translate_sum_analyze(const TranslateSumSpec& spec, const ConstituentSet& cs, int g);

}  // namespace qeccf
