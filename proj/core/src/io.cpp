// Copyright 2026 The imaginarity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "imag/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace imag {

namespace {

using nlohmann::json;

constexpr double kParseTol = 1e-8;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("file", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("json", "input is not valid JSON");
  return j;
}

cplx parse_entry(const json& cell) {
  if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
    throw ValidationError("data_shape", "matrix entries must be [re, im] number pairs");
  }
  return cplx(cell[0].get<double>(), cell[1].get<double>());
}

json entry_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

}  // namespace

DensityMatrix StateFile::as_density() const {
  if (pure.has_value()) return DensityMatrix::from_pure(*pure);
  return *density;
}

std::size_t StateFile::dim() const {
  return pure.has_value() ? pure->dim() : density->dim();
}

StateFile parse_state_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ValidationError("json", "state file must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1) {
    throw ValidationError("dim", "\"dim\" must be a positive integer");
  }
  const auto d = j["dim"].get<std::size_t>();
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ValidationError("kind", "\"kind\" must be \"pure\" or \"density\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("data") || !j["data"].is_array()) {
    throw ValidationError("data_shape", "\"data\" must be an array");
  }
  const json& data = j["data"];

  StateFile out;
  out.kind = kind;
  if (kind == "pure") {
    if (data.size() != d) {
      throw ValidationError("data_shape", "pure data must hold dim entries");
    }
    std::vector<cplx> amp;
    amp.reserve(d);
    for (const json& cell : data) amp.push_back(parse_entry(cell));
    out.pure = PureState(std::move(amp), kParseTol);  // throws "unit_norm"
  } else if (kind == "density") {
    if (data.size() != d) {
      throw ValidationError("data_shape", "density data must hold dim rows");
    }
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!data[i].is_array() || data[i].size() != d) {
        throw ValidationError("data_shape", "density rows must hold dim entries");
      }
      for (std::size_t k = 0; k < d; ++k) m(i, k) = parse_entry(data[i][k]);
    }
    out.density = DensityMatrix::validated(m, kParseTol);
  } else {
    throw ValidationError("kind", "\"kind\" must be \"pure\" or \"density\"");
  }
  return out;
}

StateFile load_state(const std::string& path) { return parse_state_json(read_file(path)); }

RealKrausChannel parse_channel_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw ValidationError("kraus", "channel file must hold a nonempty \"kraus\" array");
  }
  std::vector<RealMatrix> ops;
  for (const json& mat : j["kraus"]) {
    if (!mat.is_array() || mat.empty() || !mat[0].is_array() || mat[0].empty()) {
      throw ValidationError("data_shape", "Kraus operators must be arrays of rows");
    }
    const std::size_t rows = mat.size();
    const std::size_t cols = mat[0].size();
    RealMatrix k(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!mat[i].is_array() || mat[i].size() != cols) {
        throw ValidationError("data_shape", "Kraus rows must have equal length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (!mat[i][c].is_number()) {
          throw ValidationError("real_entries", "Kraus entries must be real numbers");
        }
        k(i, c) = mat[i][c].get<double>();
      }
    }
    ops.push_back(std::move(k));
  }
  return RealKrausChannel(std::move(ops));  // throws "completeness" / shape errors
}

RealKrausChannel load_channel(const std::string& path) {
  return parse_channel_json(read_file(path));
}

std::string state_to_json(const PureState& psi) {
  json j;
  j["dim"] = psi.dim();
  j["kind"] = "pure";
  json data = json::array();
  for (std::size_t i = 0; i < psi.dim(); ++i) data.push_back(entry_to_json(psi[i]));
  j["data"] = std::move(data);
  return j.dump(2) + "\n";
}

std::string state_to_json(const DensityMatrix& rho) {
  json j;
  j["dim"] = rho.dim();
  j["kind"] = "density";
  json data = json::array();
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < rho.dim(); ++k) row.push_back(entry_to_json(rho(i, k)));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j.dump(2) + "\n";
}

std::string channel_to_json(const RealKrausChannel& channel) {
  json j;
  json ops = json::array();
  for (const RealMatrix& k : channel.kraus()) {
    json mat = json::array();
    for (std::size_t i = 0; i < k.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < k.cols(); ++c) row.push_back(k(i, c));
      mat.push_back(std::move(row));
    }
    ops.push_back(std::move(mat));
  }
  j["kraus"] = std::move(ops);
  return j.dump(2) + "\n";
}

bool FileReport::all_ok() const {
  if (!parsed) return false;
  for (const InvariantCheck& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

FileReport validate_file_text(const std::string& text) {
  FileReport report;
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    report.parse_error = "input is not a JSON object";
    return report;
  }

  if (j.contains("kraus")) {
    report.kind = "channel";
    std::vector<ComplexMatrix> ops;
    bool shape_ok = j["kraus"].is_array() && !j["kraus"].empty();
    if (shape_ok) {
      for (const json& mat : j["kraus"]) {
        if (!mat.is_array() || mat.empty() || !mat[0].is_array() || mat[0].empty()) {
          shape_ok = false;
          break;
        }
        const std::size_t rows = mat.size();
        const std::size_t cols = mat[0].size();
        ComplexMatrix k(rows, cols);
        for (std::size_t i = 0; i < rows && shape_ok; ++i) {
          if (!mat[i].is_array() || mat[i].size() != cols) {
            shape_ok = false;
            break;
          }
          for (std::size_t c = 0; c < cols; ++c) {
            const json& cell = mat[i][c];
            if (cell.is_number()) {
              k(i, c) = cell.get<double>();
            } else if (cell.is_array() && cell.size() == 2 && cell[0].is_number() &&
                       cell[1].is_number()) {
              // Not the documented channel format, but diagnosable: complex
              // entries show up as a realness violation, not a parse failure.
              k(i, c) = cplx(cell[0].get<double>(), cell[1].get<double>());
            } else {
              shape_ok = false;
              break;
            }
          }
        }
        if (!shape_ok) break;
        ops.push_back(std::move(k));
      }
    }
    if (!shape_ok) {
      report.parse_error = "malformed \"kraus\" array";
      return report;
    }
    report.parsed = true;
    const ChannelValidation v = validate_channel(ops);
    report.checks.push_back({"shape", v.violation != "shape", 0.0});
    report.checks.push_back({"real_entries", v.max_imag_entry <= 1e-12, v.max_imag_entry});
    report.checks.push_back(
        {"completeness", v.completeness_residual <= 1e-9, v.completeness_residual});
    return report;
  }

  // State file. Reproduce the strict parser's structural checks, then grade
  // each invariant instead of throwing on the first.
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1 ||
      !j.contains("kind") || !j["kind"].is_string() || !j.contains("data") ||
      !j["data"].is_array()) {
    report.parse_error = "state file needs integer \"dim\", string \"kind\", array \"data\"";
    return report;
  }
  const auto d = j["dim"].get<std::size_t>();
  const std::string kind = j["kind"].get<std::string>();
  const json& data = j["data"];

  if (kind == "pure") {
    report.kind = "pure";
    if (data.size() != d) {
      report.parse_error = "pure data must hold dim entries";
      return report;
    }
    double norm2 = 0.0;
    for (const json& cell : data) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
        report.parse_error = "entries must be [re, im] pairs";
        return report;
      }
      norm2 += std::norm(cplx(cell[0].get<double>(), cell[1].get<double>()));
    }
    report.parsed = true;
    const double residual = std::abs(norm2 - 1.0);
    report.checks.push_back({"unit_norm", residual <= kParseTol, residual});
    return report;
  }

  if (kind != "density") {
    report.parse_error = "\"kind\" must be \"pure\" or \"density\"";
    return report;
  }
  report.kind = "density";
  if (data.size() != d) {
    report.parse_error = "density data must hold dim rows";
    return report;
  }
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!data[i].is_array() || data[i].size() != d) {
      report.parse_error = "density rows must hold dim entries";
      return report;
    }
    for (std::size_t k = 0; k < d; ++k) {
      const json& cell = data[i][k];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
        report.parse_error = "entries must be [re, im] pairs";
        return report;
      }
      m(i, k) = cplx(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  report.parsed = true;

  const double herm = (m - m.adjoint()).max_abs();
  report.checks.push_back({"hermitian", herm <= kParseTol, herm});
  const double trace_res = std::abs(m.trace() - cplx(1.0));
  report.checks.push_back({"trace_one", trace_res <= kParseTol, trace_res});
  if (herm <= kParseTol) {
    const Spectrum spec = eig_hermitian(m.hermitized());
    const double min_eig = spec.eigenvalues.front();
    report.checks.push_back({"positive_semidefinite", min_eig >= -1e-9,
                             min_eig < 0.0 ? -min_eig : 0.0});
  } else {
    report.checks.push_back({"positive_semidefinite", false, 0.0});
  }
  return report;
}

FileReport validate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    FileReport report;
    report.parse_error = "cannot open " + path;
    return report;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return validate_file_text(buf.str());
}

}  // namespace imag
