#include "sdeid/library.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sdeid {

namespace {

double int_pow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

double BasisTerm::eval(double x, int order) const {
  if (order < 0 || order > 2)
    throw Error(ErrorCode::unsupported_model,
                "derivative order " + std::to_string(order) +
                    " unsupported (0, 1 or 2)");
  int d = degree;
  double factor = 1.0;
  for (int k = 0; k < order; ++k) {
    if (d == 0) return 0.0;
    factor *= d;
    --d;
  }
  return factor * int_pow(x, d);
}

BasisTerm BasisTerm::monomial(int degree) {
  if (degree < 0)
    throw Error(ErrorCode::invalid_argument, "monomial degree must be >= 0");
  std::string name;
  if (degree == 0)
    name = "1";
  else if (degree == 1)
    name = "x";
  else
    name = "x^" + std::to_string(degree);
  return BasisTerm{name, degree};
}

FunctionLibrary::FunctionLibrary(std::string name, std::vector<BasisTerm> terms)
    : name_(std::move(name)), terms_(std::move(terms)) {
  std::set<std::string> seen;
  for (const auto& t : terms_)
    if (!seen.insert(t.name).second)
      throw Error(ErrorCode::invalid_argument,
                  "duplicate library term name '" + t.name + "'");
}

FunctionLibrary FunctionLibrary::monomials(int max_degree, std::string name) {
  std::vector<BasisTerm> terms;
  terms.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) terms.push_back(BasisTerm::monomial(d));
  return FunctionLibrary(std::move(name), std::move(terms));
}

std::vector<std::string> FunctionLibrary::term_names() const {
  std::vector<std::string> names;
  names.reserve(terms_.size());
  for (const auto& t : terms_) names.push_back(t.name);
  return names;
}

FunctionLibrary FunctionLibrary::from_names(
    const std::vector<std::string>& names, std::string name) {
  std::vector<BasisTerm> terms;
  terms.reserve(names.size());
  for (const auto& n : names) {
    if (n == "1") {
      terms.push_back(BasisTerm::monomial(0));
    } else if (n == "x") {
      terms.push_back(BasisTerm::monomial(1));
    } else if (n.rfind("x^", 0) == 0) {
      terms.push_back(BasisTerm::monomial(std::stoi(n.substr(2))));
    } else {
      throw Error(ErrorCode::unsupported_model,
                  "unknown library term '" + n + "'");
    }
  }
  return FunctionLibrary(std::move(name), std::move(terms));
}

SparseModel::SparseModel(FunctionLibrary library,
                         std::vector<double> coefficients)
    : library_(std::move(library)), coefficients_(std::move(coefficients)) {
  if (library_.size() != coefficients_.size())
    throw Error(ErrorCode::invalid_argument,
                "coefficient count does not match library size");
}

std::vector<std::size_t> SparseModel::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    if (coefficients_[i] != 0.0) s.push_back(i);
  return s;
}

bool SparseModel::empty() const { return support().empty(); }

double SparseModel::derivative(double x, int order) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0.0) continue;
    sum += coefficients_[i] * library_.term(i).eval(x, order);
  }
  return sum;
}

std::string SparseModel::to_json() const {
  nlohmann::json j;
  j["library"] = library_.term_names();
  j["coefficients"] = coefficients_;
  j["support"] = support();
  return j.dump(2);
}

SparseModel SparseModel::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto lib = FunctionLibrary::from_names(
      j.at("library").get<std::vector<std::string>>());
  return SparseModel(std::move(lib),
                     j.at("coefficients").get<std::vector<double>>());
}

std::string SparseModel::format() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    double c = coefficients_[i];
    if (c == 0.0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    double mag = std::abs(c);
    out << mag;
    if (library_.term(i).degree > 0) out << "*" << library_.term(i).name;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::simulation_blowup: return "simulation-blowup";
    case ErrorCode::insufficient_resolution: return "insufficient-resolution";
    case ErrorCode::degenerate_diffusion: return "degenerate-diffusion";
    case ErrorCode::singular_diffusion: return "singular-diffusion";
    case ErrorCode::rank_deficiency: return "rank-deficiency";
    case ErrorCode::unsupported_model: return "unsupported-model";
    case ErrorCode::convergence_failure: return "convergence-failure";
    case ErrorCode::empty_model: return "empty-model";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::config_error: return "config-error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace sdeid
