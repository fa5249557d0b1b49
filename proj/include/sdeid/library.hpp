#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdeid/error.hpp"

namespace sdeid {

/// One basis function of a regression library. Monomials carry their degree
/// so evaluation and the first two derivatives are analytic.
struct BasisTerm {
  std::string name;
  int degree = 0;

  double eval(double x, int order = 0) const;

  static BasisTerm monomial(int degree);
};

/// Ordered, uniquely named basis functions with analytic derivatives.
class FunctionLibrary {
 public:
  FunctionLibrary() = default;
  FunctionLibrary(std::string name, std::vector<BasisTerm> terms);

  /// {1, x, ..., x^max_degree}
  static FunctionLibrary monomials(int max_degree, std::string name = "poly");

  const std::string& name() const { return name_; }
  std::size_t size() const { return terms_.size(); }
  const BasisTerm& term(std::size_t i) const { return terms_[i]; }
  const std::vector<BasisTerm>& terms() const { return terms_; }

  std::vector<std::string> term_names() const;

  /// Rebuild a library from serialized term names ("1", "x", "x^2", ...).
  static FunctionLibrary from_names(const std::vector<std::string>& names,
                                    std::string name = "poly");

 private:
  std::string name_;
  std::vector<BasisTerm> terms_;
};

/// A function library paired with a (typically sparse) coefficient vector.
class SparseModel {
 public:
  SparseModel() = default;
  SparseModel(FunctionLibrary library, std::vector<double> coefficients);

  const FunctionLibrary& library() const { return library_; }
  const std::vector<double>& coefficients() const { return coefficients_; }

  /// Indices of exactly nonzero coefficients.
  std::vector<std::size_t> support() const;
  bool empty() const;

  double eval(double x) const { return derivative(x, 0); }

  /// Exact evaluation of the model or its first/second derivative.
  /// order > 2 -> unsupported_model.
  double derivative(double x, int order) const;

  std::string to_json() const;
  static SparseModel from_json(const std::string& text);

  /// Human-readable form, e.g. "0.5*x + 0.1*x^2".
  std::string format() const;

 private:
  FunctionLibrary library_;
  std::vector<double> coefficients_;
};

}  // namespace sdeid
