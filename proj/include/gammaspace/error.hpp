#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaspace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two morphisms whose source and target do not line up.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// A power-set assignment with overlapping images.
class DisjointnessError : public Error {
 public:
  using Error::Error;
};

/// Malformed structural input (out-of-range entries, wrong table shape...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation needs data beyond the truncation that was supplied.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, std::size_t required)
      : Error(what), required_(required) {}
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

/// Refusal to allocate more than the configured simplex budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t requested, std::size_t budget)
      : Error(what), requested_(requested), budget_(budget) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

/// A Cayley or action table violating an algebraic axiom. `witness` holds
/// the element indices exhibiting the failure.
class AlgebraError : public Error {
 public:
  AlgebraError(std::string axiom, std::vector<std::size_t> witness)
      : Error(describe(axiom, witness)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const std::string& axiom, const std::vector<std::size_t>& w) {
    std::string s = "axiom violated: " + axiom + " (witness";
    for (auto x : w) s += " " + std::to_string(x);
    return s + ")";
  }

  std::string axiom_;
  std::vector<std::size_t> witness_;
};

/// Extraction of an algebra from a presheaf that is not strict.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// A structure map that should be an isomorphism but is not.
class StructureMapError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammaspace
