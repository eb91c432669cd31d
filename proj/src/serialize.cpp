#include "offdiag/serialize.hpp"

#include <cmath>
#include <string>

namespace offdiag {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") ||
      !j.contains("im"))
    throw ConfigInvalid("matrix: expected object with dim, re, im");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw ConfigInvalid("matrix.dim: positive integer expected");
  const Eigen::Index n = j["dim"].get<Eigen::Index>();
  for (const char* key : {"re", "im"}) {
    const json& rows = j[key];
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
      throw ConfigInvalid(std::string("matrix.") + key +
                          ": expected " + std::to_string(n) + " rows");
    for (const json& row : rows)
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        throw ConfigInvalid(std::string("matrix.") + key +
                            ": expected square row-major layout");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!j["re"][i][k].is_number() || !j["im"][i][k].is_number())
        throw ConfigInvalid("matrix entries must be numbers");
      m(i, k) = Complex(j["re"][i][k].get<double>(),
                        j["im"][i][k].get<double>());
    }
  return m;
}

json density_to_json(const DensityOperator& rho) {
  return matrix_to_json(rho.matrix());
}

DensityOperator density_from_json(const json& j) {
  return make_density(matrix_from_json(j));
}

json phase_to_json(const PhaseResult& result) {
  json out{{"re", result.raw_trace.real()},
           {"im", result.raw_trace.imag()},
           {"abs", std::abs(result.raw_trace)},
           {"status", result.determinate ? "determinate" : "indeterminate"}};
  if (result.determinate)
    out["arg"] = result.argument;
  else
    out["arg"] = nullptr;
  return out;
}

}  // namespace offdiag
