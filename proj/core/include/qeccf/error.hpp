#pragma once

#include <stdexcept>
#include <string>

namespace qeccf {

// Single exception type for contract violations across the library. The
// message names the failed condition; callers that need to branch on the
// kind of failure use `kind()`.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    kDimension,
    kDomain,
    kNotHermitian,
    kNotProjector,
    kAxiom,
    kClosure,
    kNotNormal,
    kDecomposition,
    kParse,
    kIo,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace qeccf
