// Copyright 2026 The blochsep authors
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

#include "blochsep/io.hpp"

#include <cmath>
#include <cstring>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace blochsep {

namespace {

std::vector<int> parse_dims(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("state document: dims must be a non-empty array");
  }
  std::vector<int> dims;
  for (const auto& entry : j) {
    if (!entry.is_number_integer() || entry.get<int>() < 2) {
      throw std::invalid_argument(
          "state document: every local dimension must be an integer >= 2");
    }
    dims.push_back(entry.get<int>());
  }
  return dims;
}

Complex parse_complex(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument(
        "state document: complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json dump_complex(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

class DigestAccumulator {
 public:
  void add_bytes(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      hash_ ^= bytes[i];
      hash_ *= 1099511628211ull;
    }
  }
  void add_double(double v) { add_bytes(&v, sizeof(v)); }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 1469598103934665603ull;
};

}  // namespace

StateDocument StateDocument::from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("state document: top level must be an object");
  }
  StateDocument doc;
  const int present = static_cast<int>(j.contains("matrix")) +
                      static_cast<int>(j.contains("pure")) +
                      static_cast<int>(j.contains("family"));
  if (present != 1) {
    throw std::invalid_argument(
        "state document: exactly one of matrix, pure or family is required");
  }

  if (j.contains("family")) {
    const auto& fam = j.at("family");
    if (!fam.is_object() || !fam.contains("name")) {
      throw std::invalid_argument(
          "state document: family must be an object with a name");
    }
    const std::string name = fam.at("name").get<std::string>();
    if (!is_family_name(name)) {
      throw std::invalid_argument("state document: unknown family '" + name +
                                  "'");
    }
    const double p = fam.value("p", 1.0);
    doc.family = {name, p};
    doc.dims = std::vector<int>(family_party_count(name), 2);
    if (j.contains("dims") && parse_dims(j.at("dims")) != doc.dims) {
      throw std::invalid_argument(
          "state document: dims disagree with the named family");
    }
    return doc;
  }

  if (!j.contains("dims")) {
    throw std::invalid_argument("state document: dims are required");
  }
  doc.dims = parse_dims(j.at("dims"));
  const long dim = total_dimension(doc.dims);

  if (j.contains("pure")) {
    const auto& arr = j.at("pure");
    if (!arr.is_array() || static_cast<long>(arr.size()) != dim) {
      std::ostringstream oss;
      oss << "state document: pure amplitude vector must have " << dim
          << " entries";
      throw std::invalid_argument(oss.str());
    }
    ComplexVector v(dim);
    for (long i = 0; i < dim; ++i) v(i) = parse_complex(arr[i]);
    doc.pure = std::move(v);
    return doc;
  }

  const auto& arr = j.at("matrix");
  if (!arr.is_array() || static_cast<long>(arr.size()) != dim * dim) {
    std::ostringstream oss;
    oss << "state document: matrix must have " << dim * dim
        << " row-major entries";
    throw std::invalid_argument(oss.str());
  }
  ComplexMatrix m(dim, dim);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      m(r, c) = parse_complex(arr[r * dim + c]);
    }
  }
  doc.matrix = std::move(m);
  return doc;
}

nlohmann::json StateDocument::to_json() const {
  nlohmann::json j;
  j["dims"] = dims;
  if (family) {
    j["family"] = {{"name", family->first}, {"p", family->second}};
  } else if (pure) {
    nlohmann::json arr = nlohmann::json::array();
    for (long i = 0; i < pure->size(); ++i) {
      arr.push_back(dump_complex((*pure)(i)));
    }
    j["pure"] = std::move(arr);
  } else if (matrix) {
    nlohmann::json arr = nlohmann::json::array();
    for (long r = 0; r < matrix->rows(); ++r) {
      for (long c = 0; c < matrix->cols(); ++c) {
        arr.push_back(dump_complex((*matrix)(r, c)));
      }
    }
    j["matrix"] = std::move(arr);
  }
  return j;
}

StateDocument StateDocument::dense(const DensityMatrix& rho) {
  StateDocument doc;
  doc.dims = rho.dims;
  doc.matrix = rho.matrix;
  return doc;
}

DensityMatrix StateDocument::realize(double validity_tol,
                                     std::vector<std::string>* warnings) const {
  if (family) {
    const auto& [name, p] = *family;
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(
          "state document: family weight p must lie in [0,1]");
    }
    return family_state(name, p);
  }
  if (pure) {
    const double norm = pure->norm();
    const double deviation = std::abs(norm - 1.0);
    if (deviation >= 1e-6) {
      std::ostringstream oss;
      oss << "state document: pure amplitude vector norm deviates from 1 by "
          << deviation << " (limit 1e-6)";
      throw std::invalid_argument(oss.str());
    }
    ComplexVector v = *pure;
    if (deviation > 1e-12) {
      v /= norm;
      if (warnings) {
        std::ostringstream oss;
        oss << "renormalized pure amplitudes (|norm - 1| = " << deviation
            << ")";
        warnings->push_back(oss.str());
      }
    }
    DensityMatrix rho;
    rho.dims = dims;
    rho.matrix = v * v.adjoint();
    return rho;
  }

  DensityMatrix rho;
  rho.dims = dims;
  rho.matrix = *matrix;
  const ValidityReport validity =
      validate_density(rho.matrix, rho.dims, validity_tol);
  if (!validity.ok) {
    throw std::invalid_argument("invalid density matrix (" +
                                to_string(validity.defect) +
                                "): " + validity.message);
  }
  return rho;
}

std::uint64_t state_digest(const DensityMatrix& rho) {
  DigestAccumulator acc;
  for (int d : rho.dims) {
    const std::int64_t wide = d;
    acc.add_bytes(&wide, sizeof(wide));
  }
  for (long r = 0; r < rho.matrix.rows(); ++r) {
    for (long c = 0; c < rho.matrix.cols(); ++c) {
      acc.add_double(rho.matrix(r, c).real());
      acc.add_double(rho.matrix(r, c).imag());
    }
  }
  return acc.value();
}

ReportDocument ReportDocument::build(const DensityMatrix& rho,
                                     const AnalysisReport& analysis,
                                     std::vector<std::string> warnings) {
  ReportDocument doc;
  std::ostringstream oss;
  oss << std::hex << std::setfill('0') << std::setw(16) << state_digest(rho);
  doc.digest = oss.str();
  doc.dims = rho.dims;
  doc.tolerance = analysis.tolerance;
  doc.warnings = std::move(warnings);
  doc.analysis = analysis;
  return doc;
}

nlohmann::json ReportDocument::to_json() const {
  nlohmann::json j;
  j["digest"] = digest;
  j["dims"] = dims;
  j["tolerance"] = tolerance;
  j["warnings"] = warnings;
  j["skipped"] = analysis.skipped;
  nlohmann::json partitions = nlohmann::json::array();
  for (const auto& verdict : analysis.partitions) {
    nlohmann::json p;
    p["partition"] = verdict.partition.to_string();
    p["certified"] = verdict.certified;
    p["max_margin"] = verdict.max_margin;
    p["strongest"] = {{"criterion", to_string(verdict.strongest_id)},
                      {"labeling", verdict.strongest_labeling.to_string()}};
    nlohmann::json criteria = nlohmann::json::array();
    for (const auto& report : verdict.reports) {
      criteria.push_back({{"criterion", to_string(report.id)},
                          {"labeling", report.labeling.to_string()},
                          {"lhs", report.lhs},
                          {"bound", report.bound},
                          {"margin", report.margin},
                          {"violated", report.violated}});
    }
    p["criteria"] = std::move(criteria);
    partitions.push_back(std::move(p));
  }
  j["partitions"] = std::move(partitions);
  return j;
}

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << "state: dims (";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out << (i ? "," : "") << dims[i];
  }
  out << "), digest " << digest << "\n";
  out << "tolerance: " << tolerance << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  for (const auto& s : analysis.skipped) out << "note: " << s << "\n";

  out << "\n" << std::left << std::setw(14) << "partition" << std::setw(11)
      << "entangled" << std::setw(24) << "strongest criterion"
      << "max margin\n";
  for (const auto& verdict : analysis.partitions) {
    std::ostringstream strongest;
    strongest << to_string(verdict.strongest_id) << "["
              << verdict.strongest_labeling.to_string() << "]";
    out << std::left << std::setw(14) << verdict.partition.to_string()
        << std::setw(11) << (verdict.certified ? "YES" : "no")
        << std::setw(24) << strongest.str() << std::showpos
        << std::setprecision(6) << verdict.max_margin << std::noshowpos
        << std::setprecision(6) << "\n";
  }

  out << "\ncriterion detail:\n";
  for (const auto& verdict : analysis.partitions) {
    out << "  " << verdict.partition.to_string() << ":\n";
    for (const auto& report : verdict.reports) {
      out << "    " << std::left << std::setw(5) << to_string(report.id)
          << std::setw(22) << report.labeling.to_string()
          << " lhs=" << std::setw(12) << report.lhs
          << " bound=" << std::setw(12) << report.bound
          << " margin=" << std::showpos << report.margin << std::noshowpos
          << (report.violated ? "  VIOLATED" : "") << "\n";
    }
  }
  return out.str();
}

}  // namespace blochsep
