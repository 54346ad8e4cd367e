#include "darkstate/json_io.hpp"

#include <stdexcept>

namespace darkstate {

using nlohmann::json;

int parse_twice_label(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty label string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return 2 * v;
    }
    size_t used = 0;
    int num = std::stoi(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("bad numerator");
    const std::string den = s.substr(slash + 1);
    if (den != "2") throw std::invalid_argument("denominator must be 2");
    return num;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad label string: '" + s + "'");
  }
}

std::string format_twice_label(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

json state_to_json(const StateVector& psi, double drop_below) {
  json terms = json::array();
  for (Index idx = 0; idx < psi.dim(); ++idx) {
    Complex amp = psi[idx];
    if (std::abs(amp) <= drop_below) continue;
    BasisState b = label_of(psi.d(), psi.n(), idx);
    json labels = json::array();
    for (int s = 0; s < b.n(); ++s) labels.push_back(format_twice_label(b.twice_label(s)));
    terms.push_back({{"labels", labels}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  return {{"d", psi.d()}, {"n", psi.n()}, {"terms", terms}};
}

StateVector state_from_json(const json& j, bool normalize) {
  const int d = j.at("d").get<int>();
  const int n = j.at("n").get<int>();
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<int> twice;
    for (const auto& lab : t.at("labels"))
      twice.push_back(parse_twice_label(lab.get<std::string>()));
    if (static_cast<int>(twice.size()) != n)
      throw std::invalid_argument("state_from_json: label count != n");
    terms.emplace_back(BasisState(d, std::move(twice)),
                       Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return state_from_terms(d, n, terms, normalize);
}

json density_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (Index i = 0; i < rho.entries().rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < rho.entries().cols(); ++k)
      row.push_back({{"re", rho.entries()(i, k).real()},
                     {"im", rho.entries()(i, k).imag()}});
    rows.push_back(row);
  }
  return {{"d", rho.d()}, {"n", rho.n()}, {"matrix", rows}};
}

DensityMatrix density_from_json(const json& j) {
  const int d = j.at("d").get<int>();
  const int n = j.at("n").get<int>();
  const Index dim = product_dim(d, n);
  const auto& rows = j.at("matrix");
  if (static_cast<Index>(rows.size()) != dim)
    throw std::invalid_argument("density_from_json: row count != d^n");
  ComplexMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    const auto& row = rows[i];
    if (static_cast<Index>(row.size()) != dim)
      throw std::invalid_argument("density_from_json: column count != d^n");
    for (Index k = 0; k < dim; ++k)
      m(i, k) = Complex(row[k].at("re").get<double>(), row[k].at("im").get<double>());
  }
  return DensityMatrix(d, n, std::move(m));
}

}  // namespace darkstate
