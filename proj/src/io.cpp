// Copyright 2026 The entrosep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entrosep/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace entrosep {

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(where + ": complex entries must be [re, im] number pairs");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw InputError(where + ": non-finite complex entry");
  }
  return Complex(re, im);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": matrix must be a row array");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    throw InputError(where + ": matrix rows must be arrays");
  }
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw InputError(where + ": ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(i, c) = complex_from_json(j[i][c], where);
    }
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
  return arr;
}

Vector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": vector must be an array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i], where);
  return v;
}

json param_value_to_json(double value) {
  if (std::isinf(value)) return json(value > 0 ? "inf" : "-inf");
  return json(value);
}

json params_to_json(const std::vector<std::pair<std::string, double>>& params) {
  json out = json::object();
  for (const auto& [key, value] : params) out[key] = param_value_to_json(value);
  return out;
}

std::string param_lookup(const std::vector<std::pair<std::string, double>>& params,
                         const std::string& key) {
  for (const auto& [k, v] : params) {
    if (k == key) return format_double(v);
  }
  return "";
}

}  // namespace

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

json state_to_json(const DensityMatrix& rho) {
  json out;
  if (rho.subsystem_dims()) {
    out["dims"] = json::array({rho.subsystem_dims()->first, rho.subsystem_dims()->second});
  } else {
    out["dims"] = json::array({rho.dim(), 1});
  }
  out["matrix"] = matrix_to_json(rho.matrix());
  return out;
}

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    throw InputError("state: expected {\"dims\": [dA, dB], \"matrix\": [...]}");
  }
  const json& dims = j["dims"];
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_unsigned() ||
      !dims[1].is_number_unsigned()) {
    throw InputError("state: dims must be two positive integers");
  }
  const std::size_t da = dims[0].get<std::size_t>();
  const std::size_t db = dims[1].get<std::size_t>();
  if (da == 0 || db == 0) throw InputError("state: dims must be positive");
  Matrix m = matrix_from_json(j["matrix"], "state");
  if (static_cast<std::size_t>(m.rows()) != da * db ||
      static_cast<std::size_t>(m.cols()) != da * db) {
    throw InputError("state: matrix must be (dA*dB) x (dA*dB)");
  }
  return DensityMatrix::make_bipartite(std::move(m), da, db);
}

RawPovm raw_povm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim")) {
    throw InputError("povm: expected an object with \"dim\"");
  }
  RawPovm raw;
  if (!j["dim"].is_number_unsigned()) throw InputError("povm: dim must be a positive integer");
  raw.dim = j["dim"].get<std::size_t>();
  if (raw.dim == 0) throw InputError("povm: dim must be positive");
  if (j.contains("vectors")) {
    raw.rank_one = true;
    for (const json& vj : j["vectors"]) {
      Vector v = vector_from_json(vj, "povm vector");
      if (static_cast<std::size_t>(v.size()) != raw.dim) {
        throw InputError("povm: vector length must equal dim");
      }
      raw.vectors.push_back(std::move(v));
    }
    if (raw.vectors.empty()) throw InputError("povm: empty vector list");
  } else if (j.contains("elements")) {
    raw.rank_one = false;
    for (const json& mj : j["elements"]) {
      Matrix m = matrix_from_json(mj, "povm element");
      if (static_cast<std::size_t>(m.rows()) != raw.dim ||
          static_cast<std::size_t>(m.cols()) != raw.dim) {
        throw InputError("povm: elements must be dim x dim");
      }
      raw.elements.push_back(std::move(m));
    }
    if (raw.elements.empty()) throw InputError("povm: empty element list");
  } else {
    throw InputError("povm: expected \"vectors\" or \"elements\"");
  }
  return raw;
}

LocalMeasurement povm_from_json(const json& j) {
  RawPovm raw = raw_povm_from_json(j);
  if (raw.rank_one) return RankOnePovm::make(raw.dim, std::move(raw.vectors));
  return GeneralPovm::make(raw.dim, std::move(raw.elements));
}

json povm_to_json(const LocalMeasurement& m) {
  json out;
  out["dim"] = local_dim(m);
  if (const RankOnePovm* p = as_rank_one(m)) {
    json vectors = json::array();
    for (const Vector& v : p->vectors()) vectors.push_back(vector_to_json(v));
    out["vectors"] = std::move(vectors);
  } else {
    json elements = json::array();
    for (const Matrix& e : std::get<GeneralPovm>(m).elements()) {
      elements.push_back(matrix_to_json(e));
    }
    out["elements"] = std::move(elements);
  }
  return out;
}

json setup_to_json(const MeasurementSetup& setup) {
  json out;
  json a = json::array();
  for (const LocalMeasurement& m : setup.side_a) a.push_back(povm_to_json(m));
  json b = json::array();
  for (const LocalMeasurement& m : setup.side_b) b.push_back(povm_to_json(m));
  out["a"] = std::move(a);
  out["b"] = std::move(b);
  if (!setup.pairings.empty()) out["pairing"] = setup.pairings;
  return out;
}

MeasurementSetup setup_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_array() ||
      !j["b"].is_array()) {
    throw InputError("measurement setup: expected {\"a\": [povm...], \"b\": [povm...]}");
  }
  MeasurementSetup setup;
  for (const json& pj : j["a"]) setup.side_a.push_back(povm_from_json(pj));
  for (const json& pj : j["b"]) setup.side_b.push_back(povm_from_json(pj));
  if (setup.side_a.size() != setup.side_b.size()) {
    throw InputError("measurement setup: sides must list the same number of measurements");
  }
  if (setup.side_a.empty()) throw InputError("measurement setup: empty");
  if (j.contains("pairing")) {
    const json& pairing = j["pairing"];
    if (!pairing.is_array()) throw InputError("measurement setup: pairing must be an array");
    for (const json& pt : pairing) {
      std::vector<std::size_t> perm;
      for (const json& idx : pt) {
        if (!idx.is_number_unsigned()) {
          throw InputError("measurement setup: pairing entries must be indices");
        }
        perm.push_back(idx.get<std::size_t>());
      }
      setup.pairings.push_back(std::move(perm));
    }
    if (setup.pairings.size() != setup.side_a.size()) {
      throw InputError("measurement setup: one pairing per measurement expected");
    }
  }
  return setup;
}

json report_to_json(const CriterionReport& report) {
  json out;
  out["criterion_id"] = report.criterion_id;
  out["params"] = params_to_json(report.params);
  out["observed"] = report.observed;
  out["bound"] = report.bound;
  out["margin"] = report.margin;
  out["violated"] = report.violated;
  out["side"] = std::string(1, report.side);
  return out;
}

std::string reports_csv_header() {
  return "criterion_id,alpha,beta,k,kappa,a,theta,side,observed,bound,margin,violated";
}

std::string report_to_csv_row(const CriterionReport& report) {
  std::ostringstream row;
  row << report.criterion_id;
  for (const char* key : {"alpha", "beta", "k", "kappa", "a", "theta"}) {
    row << ',' << param_lookup(report.params, key);
  }
  row << ',' << report.side << ',' << format_double(report.observed) << ','
      << format_double(report.bound) << ',' << format_double(report.margin) << ','
      << (report.violated ? "true" : "false");
  return row.str();
}

json profile_to_json(const SValueProfile& profile) {
  json out;
  out["s"] = profile.s;
  out["d_star"] = profile.d_star;
  out["w"] = profile.w;
  out["w_prime"] = profile.w_prime;
  out["degenerate"] = profile.degenerate;
  return out;
}

json threshold_to_json(const ThresholdResult& result) {
  json out;
  out["family"] = result.family;
  out["criterion_id"] = result.criterion_id;
  out["params"] = params_to_json(result.params);
  if (result.c_star) {
    out["c_star"] = *result.c_star;
    out["bracket"] = json::array({result.bracket.first, result.bracket.second});
  } else {
    out["c_star"] = nullptr;
  }
  out["iterations"] = result.iterations;
  return out;
}

std::string threshold_csv_header() {
  return "family,criterion_id,alpha,beta,k,kappa,a,theta,c_star,bracket_lo,bracket_hi,"
         "iterations";
}

std::string threshold_to_csv_row(const ThresholdResult& result) {
  std::ostringstream row;
  row << result.family << ',' << result.criterion_id;
  for (const char* key : {"alpha", "beta", "k", "kappa", "a", "theta"}) {
    row << ',' << param_lookup(result.params, key);
  }
  if (result.c_star) {
    row << ',' << format_double(*result.c_star) << ',' << format_double(result.bracket.first)
        << ',' << format_double(result.bracket.second);
  } else {
    row << ",none,,";
  }
  row << ',' << result.iterations;
  return row.str();
}

std::string curve_to_csv(const std::vector<std::pair<double, double>>& curve) {
  std::ostringstream out;
  out << "c,margin\n";
  for (const auto& [c, margin] : curve) {
    out << format_double(c) << ',' << format_double(margin) << '\n';
  }
  return out.str();
}

}  // namespace entrosep
