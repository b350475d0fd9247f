#include <gtest/gtest.h>

#include <qeccf/codes.hpp>
#include <qeccf/error.hpp>
#include <qeccf/scenario.hpp>

#include <random>

#include "oracles.hpp"

using namespace qeccf;

namespace {

Prepared five_qubit_centralizer() {
  Scenario s;
  s.group = "pauli:5";
  s.subgroup = "centralizer";
  s.stabilizer = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  return prepare(s);
}

Prepared d8_subgroup() {
  Scenario s;
  s.group = "file:" + oracle::data("bases/d8_translates.basis");
  s.subgroup = "generated";
  s.generators = {"b1", "b3", "b22", "b40"};
  return prepare(s);
}

// Random independent commuting Hermitian Pauli generators; independence of
// the symplectic vectors keeps -I out of the generated group.
StabilizerSpec random_stabilizer(int n, int r, std::mt19937_64& rng) {
  static const char* letters = "IXYZ";
  StabilizerSpec spec;
  spec.n = n;
  int guard = 0;
  while (static_cast<int>(spec.generators.size()) < r) {
    if (++guard > 10000) throw std::runtime_error("generator search stalled");
    std::string s = (rng() % 2) ? "-" : "";
    for (int q = 0; q < n; ++q) s += letters[rng() % 4];
    const PauliElem g = PauliElem::parse(s);
    if (g.is_scalar()) continue;
    bool ok = true;
    for (const auto& h : spec.generators) ok = ok && g.commutes_with(h);
    if (!ok) continue;
    StabilizerSpec trial = spec;
    trial.generators.push_back(g);
    if (trial.logical_qubits() != n - static_cast<int>(trial.generators.size())) continue;
    spec = trial;
  }
  return spec;
}

}  // namespace

TEST(Detection, LiteralFastAndOracleAgreeOnFiveQubitCodes) {
  const auto p = five_qubit_centralizer();
  std::mt19937_64 rng(17);
  std::vector<CMat> projectors = {stabilizer_projector(StabilizerSpec::load(oracle::data("codes/five_qubit.stab")))};
  for (int k = 0; k < 3; ++k) {
    TransformAssignment a;
    a.values[static_cast<int>(rng() % 16)] = value_matrix(k == 0 ? "I2" : (k == 1 ? "PX+" : "PY-"));
    a.values[static_cast<int>(rng() % 16)] = value_matrix("PZ-");
    projectors.push_back(invert(a, p.cs).projector);
  }
  const auto& g = *p.e.group;
  for (const CMat& proj : projectors) {
    const Detector det(proj);
    for (std::size_t i = 0; i < g.order(); ++i) {
      const CMat& u = g.element(static_cast<int>(i));
      const bool ref = oracle::detectable(proj, u);
      ASSERT_EQ(is_detectable(proj, u).detectable, ref) << p.e.label(static_cast<int>(i));
      ASSERT_EQ(det.check(u).detectable, ref) << p.e.label(static_cast<int>(i));
      ASSERT_EQ(det.check(p.e.pauli[i]).detectable, ref) << p.e.label(static_cast<int>(i));
    }
  }
}

TEST(Detection, RandomProjectorsSmallPauliGroup) {
  const auto e = pauli_group(3);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const CMat proj = oracle::random_projector(8, 1 + rng() % 7, rng);
    const Detector det(proj);
    for (std::size_t i = 0; i < e.group->order(); ++i) {
      const CMat& u = e.group->element(static_cast<int>(i));
      const bool ref = oracle::detectable(proj, u);
      EXPECT_EQ(is_detectable(proj, u).detectable, ref);
      EXPECT_EQ(det.check(u).detectable, ref);
    }
  }
}

TEST(Detection, LambdaOfDetectableElement) {
  const CMat p = stabilizer_projector(StabilizerSpec::from_strings({"ZZ"}));
  const auto d = is_detectable(p, oracle::pauli_kron("-ZZ"));
  EXPECT_TRUE(d.detectable);
  EXPECT_NEAR(std::abs(d.lambda + 1.0), 0.0, 1e-12);
  EXPECT_FALSE(is_detectable(p, oracle::pauli_kron("XX")).detectable);
  EXPECT_TRUE(is_detectable(p, oracle::pauli_kron("XI")).detectable);  // PgP = 0
}

TEST(Distance, FiveQubitCode) {
  const auto e = pauli_group(5);
  const CMat p = stabilizer_projector(StabilizerSpec::load(oracle::data("codes/five_qubit.stab")));
  const auto a = detectable_set(p, e, {}, 2);
  EXPECT_EQ(a.dim_code, 2);
  ASSERT_TRUE(a.min_distance.has_value());
  EXPECT_EQ(*a.min_distance, 3);
  // undetectable = centralizer (128) minus the signed stabilizer group (32)
  EXPECT_EQ(a.detectable.size(), 2048u - 96u);
  EXPECT_EQ(a.wt_detect.at(1).detected, a.wt_detect.at(1).total);
  EXPECT_EQ(a.wt_detect.at(1).total, 2 * 15);
  EXPECT_EQ(pauli_min_distance(p, 5), 3);
}

TEST(Distance, ShorAndSteane) {
  const CMat shor = stabilizer_projector(StabilizerSpec::load(oracle::data("codes/shor.stab")));
  EXPECT_NEAR(cxla::trace(shor).real(), 2.0, 1e-8);
  EXPECT_EQ(pauli_min_distance(shor, 9), 3);
  const CMat steane = stabilizer_projector(StabilizerSpec::load(oracle::data("codes/steane.stab")));
  EXPECT_EQ(pauli_min_distance(steane, 7), 3);
}

TEST(Distance, NoUndetectableElementGivesNPlusOne) {
  // a 1-dim code detects everything
  const CMat p = stabilizer_projector(StabilizerSpec::from_strings({"ZI", "IZ"}));
  EXPECT_EQ(pauli_min_distance(p, 2), 3);
}

TEST(KnillLaflamme, FiveQubitCorrectsSingleErrors) {
  const CMat p = stabilizer_projector(StabilizerSpec::load(oracle::data("codes/five_qubit.stab")));
  std::vector<CMat> errors = {CMat::Identity(32, 32)};
  for (const auto& w : pauli_strings_of_weight(5, 1)) errors.push_back(w.matrix());
  const auto kl = knill_laflamme_check(p, errors);
  EXPECT_TRUE(kl.correctable);
  EXPECT_EQ(kl.alpha.rows(), 16);
  EXPECT_TRUE(cxla::is_hermitian(kl.alpha));
  for (const auto& w : pauli_strings_of_weight(5, 2)) errors.push_back(w.matrix());
  EXPECT_FALSE(knill_laflamme_check(p, errors).correctable);
}

TEST(StabilizerDimension, RandomCommutingSets) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int r = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const auto spec = random_stabilizer(n, r, rng);
    EXPECT_NO_THROW(spec.validate());
    const double expected = std::ldexp(1.0, n - r);
    EXPECT_NEAR(cxla::trace(stabilizer_projector(spec)).real(), expected, 1e-8);
    // averaging over the group elements gives the same projector
    const std::size_t d = std::size_t{1} << n;
    CMat avg = CMat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    const auto elems = spec.group_elements();
    for (const auto& g : elems) avg += g.matrix();
    avg /= static_cast<double>(elems.size());
    EXPECT_LT(cxla::max_diff(avg, stabilizer_projector(spec)), 1e-10);
  }
}

TEST(Classify, CliffordAndAbelianFlags) {
  const auto p = five_qubit_centralizer();
  TransformAssignment clifford;
  clifford.values[3] = value_matrix("I2");
  auto inv = invert(clifford, p.cs);
  auto a = detectable_set(inv.projector, p.e);
  a.assignment = clifford;
  classify(a, p.cs, inv.t);
  EXPECT_TRUE(a.is_clifford_of_S);

  TransformAssignment rank1;
  rank1.values[3] = value_matrix("PZ+");
  inv = invert(rank1, p.cs);
  a = detectable_set(inv.projector, p.e);
  a.assignment = rank1;
  classify(a, p.cs, inv.t, true);
  EXPECT_FALSE(a.is_clifford_of_S);
  ASSERT_TRUE(a.table_convention.has_value());
}

TEST(TranslateSum, D8ConfigurationMatchesBruteForce) {
  const auto p = d8_subgroup();
  const auto& g = *p.cs.group;
  // constituent whose isotypic projector is diag(e0 + e4)
  int base = -1;
  for (std::size_t i = 0; i < p.cs.constituents.size(); ++i) {
    const CMat& iso = p.cs.constituents[i].isotypic_projector;
    if (std::abs(iso(0, 0) - 1.0) < 1e-9 && std::abs(iso(4, 4) - 1.0) < 1e-9) base = static_cast<int>(i);
  }
  ASSERT_GE(base, 0);
  const auto spec = make_translate_sum(p.cs, base, {0, p.e.parse_element("b6")});
  ASSERT_EQ(spec.constituents.size(), 2u);
  std::size_t detectable = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const bool brute = oracle::detectable(spec.projector, g.element(static_cast<int>(x)));
    detectable += brute;
    EXPECT_EQ(translate_sum_analyze(spec, p.cs, static_cast<int>(x)).predicted_detectable, brute)
        << p.e.label(static_cast<int>(x));
  }
  EXPECT_EQ(detectable, 68u);
  const auto e1 = translate_sum_analyze(spec, p.cs, p.e.parse_element("b1"));
  const auto e2 = translate_sum_analyze(spec, p.cs, p.e.parse_element("b2"));
  const auto e3 = translate_sum_analyze(spec, p.cs, p.e.parse_element("b3"));
  EXPECT_EQ(e1.which, TranslateCase::kInAllQuasikernels);
  EXPECT_EQ(e2.which, TranslateCase::kOutsideS);
  EXPECT_EQ(e3.which, TranslateCase::kInSOnly);
  EXPECT_TRUE(e1.predicted_detectable);
  EXPECT_TRUE(e2.predicted_detectable);
  EXPECT_FALSE(e3.predicted_detectable);
}

TEST(TranslateSum, CoincidingTranslatesRejected) {
  const auto p = d8_subgroup();
  // an element of S fixes every character
  EXPECT_THROW(make_translate_sum(p.cs, 0, {0, p.sub[1]}), Error);
  EXPECT_THROW(make_translate_sum(p.cs, 0, {p.sub[1]}), Error);
}
