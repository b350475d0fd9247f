#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qeccf/cxla.hpp"

namespace qeccf {

// i^phase · X(a) · Z(b) on n qubits, with qubit 1 the leftmost tensor factor
// (most significant bit of the computational-basis index).
//
// String form uses the Hermitian Pauli letters I, X, Y, Z with Y = iXZ and an
// optional prefix among "+", "-", "i", "-i", "+i". The real Pauli group
// contains exactly the elements with even phase.
struct PauliElem {
  int n = 0;
  uint32_t a = 0;  // X-part, bit (n-1-q) for qubit q (0-based from the left)
  uint32_t b = 0;  // Z-part
  int phase = 0;   // exponent of i, mod 4

  static constexpr int kMaxQubits = 12;

  static PauliElem identity(int n);
  static PauliElem parse(std::string_view text);
  static PauliElem single(int n, int qubit, char letter);

  std::string to_string() const;

  int weight() const;
  bool commutes_with(const PauliElem& other) const;
  // Symplectic form ab' + a'b mod 2.
  int symplectic(const PauliElem& other) const;

  bool is_hermitian() const;
  bool is_scalar() const { return a == 0 && b == 0; }

  PauliElem operator*(const PauliElem& rhs) const;
  bool operator==(const PauliElem&) const = default;

  // Dense 2^n x 2^n matrix.
  CMat matrix() const;

  // this * m and m * this without forming the dense operator.
  CMat apply_left(const CMat& m) const;
  CMat apply_right(const CMat& m) const;
};

}  // namespace qeccf
