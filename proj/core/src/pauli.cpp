#include "qeccf/pauli.hpp"

#include <bit>
#include <sstream>

#include "qeccf/error.hpp"

namespace qeccf {

namespace {

const cd kIPow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};

int mod4(int x) { return ((x % 4) + 4) % 4; }

void check_n(int n) {
  if (n < 1 || n > PauliElem::kMaxQubits) {
    throw Error(Error::Kind::kDomain, "Pauli string length out of range: " + std::to_string(n));
  }
}

}  // namespace

PauliElem PauliElem::identity(int n) {
  check_n(n);
  return PauliElem{n, 0, 0, 0};
}

PauliElem PauliElem::single(int n, int qubit, char letter) {
  check_n(n);
  if (qubit < 0 || qubit >= n) throw Error(Error::Kind::kDomain, "qubit index out of range");
  std::string s(static_cast<std::size_t>(n), 'I');
  s[static_cast<std::size_t>(qubit)] = letter;
  return parse(s);
}

PauliElem PauliElem::parse(std::string_view text) {
  int phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const std::string_view body = text.substr(pos);
  check_n(static_cast<int>(body.size()));
  PauliElem p{static_cast<int>(body.size()), 0, 0, 0};
  for (std::size_t q = 0; q < body.size(); ++q) {
    const uint32_t bit = 1u << (body.size() - 1 - q);
    switch (body[q]) {
      case 'I':
        break;
      case 'X':
        p.a |= bit;
        break;
      case 'Z':
        p.b |= bit;
        break;
      case 'Y':  // Y = i X Z
        p.a |= bit;
        p.b |= bit;
        phase += 1;
        break;
      default:
        throw Error(Error::Kind::kParse, "invalid Pauli letter in '" + std::string(text) + "'");
    }
  }
  p.phase = mod4(phase);
  return p;
}

std::string PauliElem::to_string() const {
  // Rewrite i^phase X(a)Z(b) in terms of Hermitian letters: each Y absorbs i.
  const int ys = std::popcount(a & b);
  const int ph = mod4(phase - ys);
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[ph];
  for (int q = 0; q < n; ++q) {
    const uint32_t bit = 1u << (n - 1 - q);
    const bool x = a & bit, z = b & bit;
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

int PauliElem::weight() const { return std::popcount(a | b); }

int PauliElem::symplectic(const PauliElem& o) const {
  return (std::popcount(a & o.b) + std::popcount(o.a & b)) & 1;
}

bool PauliElem::commutes_with(const PauliElem& o) const { return symplectic(o) == 0; }

bool PauliElem::is_hermitian() const {
  // (i^l X(a)Z(b))^dagger = i^-l (-1)^{a.b} X(a)Z(b)
  return ((phase - std::popcount(a & b)) & 1) == 0;
}

PauliElem PauliElem::operator*(const PauliElem& r) const {
  if (n != r.n) throw Error(Error::Kind::kDimension, "Pauli product: qubit count mismatch");
  // X(a)Z(b) X(a')Z(b') = (-1)^{b.a'} X(a+a') Z(b+b')
  const int sign = std::popcount(b & r.a) & 1;
  return PauliElem{n, a ^ r.a, b ^ r.b, mod4(phase + r.phase + 2 * sign)};
}

CMat PauliElem::matrix() const {
  const std::size_t dim = std::size_t{1} << n;
  CMat m = CMat::Zero(dim, dim);
  // Column x: Z(b)|x> = (-1)^{b.x}|x>, then X(a) sends it to |x ^ a>.
  for (std::size_t x = 0; x < dim; ++x) {
    const int s = std::popcount(b & static_cast<uint32_t>(x)) & 1;
    m(static_cast<Eigen::Index>(x ^ a), static_cast<Eigen::Index>(x)) = kIPow[mod4(phase + 2 * s)];
  }
  return m;
}

CMat PauliElem::apply_left(const CMat& m) const {
  const std::size_t dim = std::size_t{1} << n;
  if (static_cast<std::size_t>(m.rows()) != dim) {
    throw Error(Error::Kind::kDimension, "Pauli apply_left: dimension mismatch");
  }
  CMat out(m.rows(), m.cols());
  for (std::size_t x = 0; x < dim; ++x) {
    const int s = std::popcount(b & static_cast<uint32_t>(x)) & 1;
    out.row(static_cast<Eigen::Index>(x ^ a)) = kIPow[mod4(phase + 2 * s)] * m.row(static_cast<Eigen::Index>(x));
  }
  return out;
}

CMat PauliElem::apply_right(const CMat& m) const {
  const std::size_t dim = std::size_t{1} << n;
  if (static_cast<std::size_t>(m.cols()) != dim) {
    throw Error(Error::Kind::kDimension, "Pauli apply_right: dimension mismatch");
  }
  // (m P)(:, x) = sum_y m(:, y) P(y, x) = m(:, x ^ a) * coeff(x)
  CMat out(m.rows(), m.cols());
  for (std::size_t x = 0; x < dim; ++x) {
    const int s = std::popcount(b & static_cast<uint32_t>(x)) & 1;
    out.col(static_cast<Eigen::Index>(x)) = kIPow[mod4(phase + 2 * s)] * m.col(static_cast<Eigen::Index>(x ^ a));
  }
  return out;
}

}  // namespace qeccf
