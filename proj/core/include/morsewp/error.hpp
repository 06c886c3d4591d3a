#pragma once

#include <stdexcept>
#include <string>

namespace morsewp {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (e.g. lnΓ at z <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller violated a precondition: mismatched lengths, non-coprime fraction,
// non-normalized state, ...
class ContractError : public Error {
 public:
  using Error::Error;
};

// Molecule parameters admit no bound state (lambda <= 1/2).
class NoBoundStateError : public Error {
 public:
  using Error::Error;
};

// Vibrational level index outside 0..n_max.
class LevelError : public Error {
 public:
  using Error::Error;
};

// A sampled state has not decayed at the edges of its grid.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double left_ratio, double right_ratio)
      : Error(what), left_ratio_(left_ratio), right_ratio_(right_ratio) {}

  // |psi| at the boundary relative to max |psi|.
  double left_ratio() const noexcept { return left_ratio_; }
  double right_ratio() const noexcept { return right_ratio_; }

 private:
  double left_ratio_;
  double right_ratio_;
};

// A computed quantity fell outside its numerical tolerance.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

}  // namespace morsewp
