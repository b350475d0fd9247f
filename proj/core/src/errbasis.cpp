#include "qeccf/errbasis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qeccf/error.hpp"

namespace qeccf {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Accepts "re+imj", "re-imj", "re", "imj".
cd parse_complex(const std::string& tok) {
  try {
    if (tok.empty()) throw std::invalid_argument("empty");
    if (tok.back() != 'j') return cd(std::stod(tok), 0.0);
    const std::string body = tok.substr(0, tok.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      const std::string im = (body.empty() || body == "+") ? "1" : (body == "-" ? "-1" : body);
      return cd(0.0, std::stod(im));
    }
    std::string im = body.substr(split);
    if (im == "+" || im == "-") im += "1";
    return cd(std::stod(body.substr(0, split)), std::stod(im));
  } catch (const std::exception&) {
    throw Error(Error::Kind::kParse, "invalid complex entry '" + tok + "'");
  }
}

std::string format_complex(cd z) {
  auto clean = [](double v) { return std::abs(v) < 5e-16 ? 0.0 : v; };
  std::ostringstream os;
  os << std::setprecision(15) << clean(z.real());
  const double im = clean(z.imag());
  os << (im < 0 || std::signbit(im) ? "-" : "+") << std::abs(im) << "j";
  return os.str();
}

}  // namespace

int NiceErrorBasis::weight(int idx) const {
  if (idx < 0 || static_cast<std::size_t>(idx) >= weights.size()) {
    throw Error(Error::Kind::kDomain, "weight: element index out of range");
  }
  return weights[static_cast<std::size_t>(idx)];
}

int weight(const NiceErrorBasis& e, int idx) { return e.weight(idx); }

int NiceErrorBasis::find(const PauliElem& p) const {
  if (!is_pauli()) throw Error(Error::Kind::kDomain, "find(PauliElem): basis is not a Pauli group");
  if (p.n != nfactors) throw Error(Error::Kind::kDimension, "Pauli string length mismatch");
  const int shift = group->order() == (std::size_t{2} << (2 * nfactors)) ? 1 : 2;
  int k;
  if (shift == 1) {
    if (p.phase & 1) return -1;  // not in the real group
    k = p.phase / 2;
  } else {
    k = p.phase;
  }
  return static_cast<int>((((p.a << nfactors) | p.b) << shift) | static_cast<uint32_t>(k));
}

int NiceErrorBasis::parse_element(std::string_view spec_in) const {
  const std::string spec = trim(spec_in);
  if (spec.empty()) throw Error(Error::Kind::kParse, "empty element spec");
  if (is_pauli()) {
    const int idx = find(PauliElem::parse(spec));
    if (idx < 0) throw Error(Error::Kind::kDomain, "element '" + spec + "' is not in the group");
    return idx;
  }
  std::string_view body = spec;
  bool negate = false;
  if (body.front() == '-') {
    negate = true;
    body.remove_prefix(1);
  }
  int acc = 0;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t stop = std::min(body.find('*', start), body.size());
    std::string tok = trim(body.substr(start, stop - start));
    int power = 1;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      try {
        power = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw Error(Error::Kind::kParse, "invalid exponent in '" + tok + "'");
      }
      tok = trim(tok.substr(0, caret));
    }
    if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 'e')) {
      throw Error(Error::Kind::kParse, "invalid element token '" + tok + "' in '" + spec + "'");
    }
    int k = 0;
    try {
      k = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw Error(Error::Kind::kParse, "invalid element token '" + tok + "'");
    }
    int idx;
    if (tok[0] == 'b') {
      if (k < 0 || static_cast<std::size_t>(k) >= basis_reps.size())
        throw Error(Error::Kind::kDomain, "basis block index out of range in '" + spec + "'");
      idx = basis_reps[static_cast<std::size_t>(k)];
    } else {
      if (k < 0 || static_cast<std::size_t>(k) >= group->order())
        throw Error(Error::Kind::kDomain, "element index out of range in '" + spec + "'");
      idx = k;
    }
    if (power < 0) {
      idx = group->inv(idx);
      power = -power;
    }
    for (int p = 0; p < power; ++p) acc = group->mul(acc, idx);
    start = stop + 1;
  }
  if (negate) {
    const int minus = group->find(-CMat::Identity(group->dim(), group->dim()));
    if (minus < 0) throw Error(Error::Kind::kDomain, "-I is not in the group");
    acc = group->mul(minus, acc);
  }
  return acc;
}

std::string NiceErrorBasis::label(int idx) const {
  if (is_pauli()) return pauli.at(static_cast<std::size_t>(idx)).to_string();
  const CMat& g = group->element(idx);
  const double d = static_cast<double>(group->dim());
  for (std::size_t k = 0; k < basis_reps.size(); ++k) {
    const CMat& rep = group->element(basis_reps[k]);
    const cd c = (rep.adjoint() * g).trace() / d;
    if (std::abs(std::abs(c) - 1.0) < 1e-7) {
      std::ostringstream os;
      if (std::abs(c - cd(1, 0)) < 1e-7) {
        os << "b" << k;
      } else if (std::abs(c + cd(1, 0)) < 1e-7) {
        os << "-b" << k;
      } else {
        os << "(" << format_complex(c) << ")*b" << k;
      }
      return os.str();
    }
  }
  return "e" + std::to_string(idx);
}

NiceErrorBasis pauli_group(int n, PhaseConvention convention) {
  if (n < 1 || n > 5) throw Error(Error::Kind::kDomain, "pauli_group: n must lie in [1, 5]");
  const int shift = convention == PhaseConvention::kReal ? 1 : 2;
  const std::size_t nstr = std::size_t{1} << (2 * n);
  const std::size_t order = nstr << shift;

  NiceErrorBasis e;
  e.qdim = 2;
  e.nfactors = n;
  e.source = "pauli(" + std::to_string(n) + (shift == 2 ? ",complex)" : ")");
  e.pauli.resize(order);
  std::vector<CMat> elems(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    const uint32_t k = static_cast<uint32_t>(idx & ((1u << shift) - 1));
    const uint32_t ab = static_cast<uint32_t>(idx >> shift);
    PauliElem p{n, ab >> n, ab & ((1u << n) - 1), shift == 1 ? static_cast<int>(2 * k) : static_cast<int>(k)};
    elems[idx] = p.matrix();
    e.pauli[idx] = p;
  }
  std::vector<int32_t> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const PauliElem prod = e.pauli[x] * e.pauli[y];
      const uint32_t k = shift == 1 ? static_cast<uint32_t>(prod.phase / 2) : static_cast<uint32_t>(prod.phase);
      table[x * order + y] = static_cast<int32_t>((((prod.a << n) | prod.b) << shift) | k);
    }
  e.group = std::make_shared<const FinMatGroup>(FinMatGroup::from_table(std::move(elems), std::move(table)));
  e.center = e.group->center();
  e.weights.resize(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    e.weights[idx] = e.pauli[idx].weight();
    if ((idx & ((1u << shift) - 1)) == 0) e.basis_reps.push_back(static_cast<int>(idx));
  }
  return e;
}

NiceErrorBasis make_error_basis(const std::vector<CMat>& reps, std::string source) {
  if (reps.empty()) throw Error(Error::Kind::kAxiom, "error basis is empty");
  const Eigen::Index d = reps.front().rows();
  if (static_cast<std::size_t>(d * d) != reps.size()) {
    throw Error(Error::Kind::kAxiom, "basis size axiom violated: expected d^2 matrices");
  }
  const Tol tol;
  for (const CMat& m : reps) {
    if (m.rows() != d || m.cols() != d) throw Error(Error::Kind::kAxiom, "matrix shape mismatch");
    if (!cxla::all_finite(m)) throw Error(Error::Kind::kAxiom, "non-finite entry");
    if (!cxla::is_unitary(m, Tol{1e-7, 1e-7})) throw Error(Error::Kind::kAxiom, "unitarity axiom violated");
  }
  if (cxla::max_diff(reps.front(), CMat::Identity(d, d)) > 1e-7) {
    throw Error(Error::Kind::kAxiom, "identity axiom violated: first matrix must be the identity");
  }
  for (std::size_t i = 1; i < reps.size(); ++i) {
    if (std::abs(reps[i].trace()) > 1e-7) {
      throw Error(Error::Kind::kAxiom,
                  "traceless axiom violated by matrix " + std::to_string(i));
    }
  }
  const double dd = static_cast<double>(d);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (std::abs((reps[i].adjoint() * reps[j]).trace()) > 1e-7) {
        throw Error(Error::Kind::kAxiom, "trace-orthogonality axiom violated by matrices " +
                                             std::to_string(i) + " and " + std::to_string(j));
      }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const CMat prod = reps[i] * reps[j];
      bool found = false;
      for (const CMat& k : reps) {
        if (std::abs(std::abs((k.adjoint() * prod).trace()) - dd) < 1e-7) {
          found = true;
          break;
        }
      }
      if (!found) {
        throw Error(Error::Kind::kAxiom, "closure-up-to-phase axiom violated by product " +
                                             std::to_string(i) + "*" + std::to_string(j));
      }
    }

  NiceErrorBasis e;
  e.qdim = static_cast<int>(d);
  e.nfactors = 1;
  e.source = std::move(source);
  try {
    e.group = std::make_shared<const FinMatGroup>(
        FinMatGroup::close(reps, 16 * reps.size(), tol));
  } catch (const Error& err) {
    if (err.kind() == Error::Kind::kClosure) {
      throw Error(Error::Kind::kAxiom, std::string("phase group cap exceeded: ") + err.what());
    }
    throw;
  }
  e.center = e.group->center();
  if (e.group->order() != e.center.size() * reps.size()) {
    throw Error(Error::Kind::kAxiom, "index group order axiom violated: |E|/|Z(E)| != d^2");
  }
  for (const CMat& m : reps) {
    const int idx = e.group->find(m);
    if (idx < 0) throw Error(Error::Kind::kClosure, "basis matrix not found after closure");
    e.basis_reps.push_back(idx);
  }
  std::vector<char> central(e.group->order());
  for (int c : e.center) central[c] = 1;
  e.weights.resize(e.group->order());
  for (std::size_t i = 0; i < e.weights.size(); ++i) e.weights[i] = central[i] ? 0 : 1;
  return e;
}

NiceErrorBasis load_error_basis(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::kIo, "cannot open error basis file " + path.string());
  int d = 0;
  std::vector<cd> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::istringstream ls(t);
    std::string tok;
    ls >> tok;
    if (tok == "d") {
      if (!(ls >> d) || d < 1) throw Error(Error::Kind::kParse, "bad 'd' header at line " + std::to_string(lineno));
      continue;
    }
    if (tok == "m") continue;  // conductor: documentation only
    if (d == 0) throw Error(Error::Kind::kParse, "matrix data before 'd' header");
    int count = 0;
    do {
      entries.push_back(parse_complex(tok));
      ++count;
    } while (ls >> tok);
    if (count != d) {
      throw Error(Error::Kind::kParse, "line " + std::to_string(lineno) + ": expected " +
                                           std::to_string(d) + " entries, got " + std::to_string(count));
    }
  }
  if (d == 0) throw Error(Error::Kind::kParse, "missing 'd' header in " + path.string());
  const std::size_t per = static_cast<std::size_t>(d) * d;
  if (entries.size() != per * per) {
    throw Error(Error::Kind::kAxiom, "basis size axiom violated: expected " + std::to_string(per) +
                                         " blocks of " + std::to_string(d) + "x" + std::to_string(d));
  }
  std::vector<CMat> reps;
  for (std::size_t k = 0; k < per; ++k) {
    reps.push_back(cxla::from_rows(d, d, std::vector<cd>(entries.begin() + k * per, entries.begin() + (k + 1) * per)));
  }
  return make_error_basis(reps, path.string());
}

void save_error_basis(const std::filesystem::path& path, const std::vector<CMat>& reps,
                      const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error(Error::Kind::kIo, "cannot write " + path.string());
  if (!comment.empty()) {
    std::istringstream cs(comment);
    for (std::string l; std::getline(cs, l);) out << "# " << l << "\n";
  }
  const Eigen::Index d = reps.empty() ? 0 : reps.front().rows();
  out << "d " << d << "\n";
  for (std::size_t k = 0; k < reps.size(); ++k) {
    out << "# block " << k << "\n";
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) out << (c ? " " : "") << format_complex(reps[k](r, c));
      out << "\n";
    }
  }
}

StabilizerSpec StabilizerSpec::parse(std::string_view text) {
  StabilizerSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    PauliElem p = PauliElem::parse(t);
    if (spec.n == 0) spec.n = p.n;
    if (p.n != spec.n) throw Error(Error::Kind::kParse, "generators have different lengths");
    spec.generators.push_back(p);
  }
  return spec;
}

StabilizerSpec StabilizerSpec::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::kIo, "cannot open stabilizer file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

StabilizerSpec StabilizerSpec::from_strings(const std::vector<std::string>& gens) {
  std::string text;
  for (const auto& g : gens) text += g + "\n";
  return parse(text);
}

int StabilizerSpec::logical_qubits() const {
  // GF(2) row reduction on the 2n-bit symplectic vectors.
  std::vector<uint64_t> rows;
  for (const PauliElem& g : generators) rows.push_back((uint64_t{g.a} << n) | g.b);
  int rank = 0;
  for (int bit = 2 * n - 1; bit >= 0; --bit) {
    const uint64_t mask = uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](uint64_t r) { return r & mask; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
    ++rank;
  }
  return n - rank;
}

std::vector<PauliElem> StabilizerSpec::group_elements() const {
  if (generators.size() > 20) throw Error(Error::Kind::kDomain, "too many generators to enumerate");
  std::vector<PauliElem> out{PauliElem::identity(n)};
  for (const PauliElem& g : generators) {
    const std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * g);
  }
  return out;
}

void StabilizerSpec::validate() const {
  if (n < 1) throw Error(Error::Kind::kDomain, "stabilizer spec has no qubits");
  for (const PauliElem& g : generators) {
    if (g.n != n) throw Error(Error::Kind::kDimension, "generator length mismatch");
    if (!g.is_hermitian()) throw Error(Error::Kind::kDomain, "generator " + g.to_string() + " is not Hermitian");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!generators[i].commutes_with(generators[j])) {
        throw Error(Error::Kind::kDomain, "generators " + generators[i].to_string() + " and " +
                                              generators[j].to_string() + " anticommute");
      }
  for (const PauliElem& s : group_elements())
    if (s.is_scalar() && s.phase != 0) {
      throw Error(Error::Kind::kDomain, "generated group contains a nontrivial multiple of identity");
    }
}

CMat stabilizer_projector(const StabilizerSpec& spec) {
  spec.validate();
  const std::size_t dim = std::size_t{1} << spec.n;
  CMat p = CMat::Identity(dim, dim);
  for (const PauliElem& g : spec.generators) p = 0.5 * (p + g.apply_left(p));
  return p;
}

StabilizerSpec css_stabilizer_spec(const BinMat& h1, const BinMat& h2) {
  int n = -1;
  for (const BinMat* h : {&h1, &h2})
    for (const auto& row : *h) {
      if (n < 0) n = static_cast<int>(row.size());
      if (static_cast<int>(row.size()) != n) throw Error(Error::Kind::kDimension, "parity-check rows differ in length");
    }
  if (n <= 0) throw Error(Error::Kind::kDomain, "css_stabilizer_spec: empty parity-check matrices");
  for (const auto& r1 : h1)
    for (const auto& r2 : h2) {
      int dot = 0;
      for (int i = 0; i < n; ++i) dot ^= (r1[i] & r2[i] & 1);
      if (dot) throw Error(Error::Kind::kDomain, "CSS orthogonality violated");
    }
  auto bits = [n](const std::vector<uint8_t>& row) {
    uint32_t v = 0;
    for (int i = 0; i < n; ++i)
      if (row[i] & 1) v |= 1u << (n - 1 - i);
    return v;
  };
  StabilizerSpec spec;
  spec.n = n;
  for (const auto& r : h1) spec.generators.push_back(PauliElem{n, 0, bits(r), 0});
  for (const auto& r : h2) spec.generators.push_back(PauliElem{n, bits(r), 0, 0});
  return spec;
}

std::vector<PauliElem> pauli_strings_of_weight(int n, int w) {
  std::vector<PauliElem> out;
  if (w < 0 || w > n) return out;
  // Enumerate supports as n-bit masks with popcount w, ascending.
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != w) continue;
    std::vector<uint32_t> bits;
    for (int q = 0; q < n; ++q)
      if (mask & (1u << (n - 1 - q))) bits.push_back(1u << (n - 1 - q));
    const std::size_t combos = static_cast<std::size_t>(std::pow(3, w));
    for (std::size_t c = 0; c < combos; ++c) {
      PauliElem p{n, 0, 0, 0};
      std::size_t rem = c;
      for (int i = w - 1; i >= 0; --i) {
        const int letter = static_cast<int>(rem % 3);  // 0:X 1:Y(=XZ) 2:Z
        rem /= 3;
        if (letter != 2) p.a |= bits[static_cast<std::size_t>(i)];
        if (letter != 0) p.b |= bits[static_cast<std::size_t>(i)];
      }
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace qeccf
