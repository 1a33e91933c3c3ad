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

#include "blochsep/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "blochsep/errors.hpp"

namespace blochsep {

namespace {

const char* role_letter(CriterionId id, std::size_t slot) {
  static const char* kFGHE[] = {"f", "g", "h", "e"};
  (void)id;
  return kFGHE[slot];
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Block index of every party under a partition.
std::vector<int> block_of(const PartitionSpec& partition, int n) {
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    for (int p : partition.blocks[b]) owner[p] = static_cast<int>(b);
  }
  return owner;
}

// Orders a pair of parties into (g, h) roles: h carries the larger
// dimension; ties go to the lower party index first.
std::pair<int, int> order_pair_by_dim(int p, int q,
                                      const std::vector<int>& dims) {
  if (dims[p] < dims[q]) return {p, q};
  if (dims[q] < dims[p]) return {q, p};
  return {std::min(p, q), std::max(p, q)};
}

// All block-size multisets reachable from `sizes` by merging blocks,
// including `sizes` itself, excluding the single-block multiset.
std::vector<std::vector<int>> coarsened_multisets(std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{sizes};
  while (!queue.empty()) {
    std::vector<int> cur = queue.back();
    queue.pop_back();
    if (cur.size() < 2 || !seen.insert(cur).second) continue;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> merged;
        merged.reserve(cur.size() - 1);
        for (std::size_t k = 0; k < cur.size(); ++k) {
          if (k != i && k != j) merged.push_back(cur[k]);
        }
        merged.push_back(cur[i] + cur[j]);
        std::sort(merged.begin(), merged.end(), std::greater<int>());
        queue.push_back(std::move(merged));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string to_string(CriterionId id) {
  switch (id) {
    case CriterionId::B1: return "B1";
    case CriterionId::F1: return "F1";
    case CriterionId::B2: return "B2";
    case CriterionId::B3: return "B3";
    case CriterionId::F2: return "F2";
    case CriterionId::KSEP: return "KSEP";
  }
  return "?";
}

std::optional<CriterionId> parse_criterion(const std::string& name) {
  if (name == "B1") return CriterionId::B1;
  if (name == "F1") return CriterionId::F1;
  if (name == "B2") return CriterionId::B2;
  if (name == "B3") return CriterionId::B3;
  if (name == "F2") return CriterionId::F2;
  if (name == "KSEP") return CriterionId::KSEP;
  return std::nullopt;
}

std::string RoleLabeling::to_string() const {
  std::ostringstream oss;
  if (id == CriterionId::KSEP) {
    oss << "sizes=";
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
      oss << (i ? "+" : "") << block_sizes[i];
    }
    return oss.str();
  }
  for (std::size_t i = 0; i < roles.size(); ++i) {
    oss << (i ? "," : "") << role_letter(id, i) << "=" << (roles[i] + 1);
  }
  return oss.str();
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

double one_body_bound(int d) {
  if (d < 2) throw std::domain_error("one_body_bound: d must be >= 2");
  return 2.0 * (d - 1) / d;
}

double pure_two_body_bound(int d1, int d2) {
  if (d1 < 2 || d1 > d2) {
    throw std::domain_error("pure_two_body_bound: need 2 <= d1 <= d2");
  }
  const double dd = static_cast<double>(d2) * d2;
  return 4.0 * (dd - 1.0) / dd;
}

double pure_three_body_bound(int d1, int d2, int d3) {
  if (d1 < 2 || d1 > d2 || d2 > d3) {
    throw std::domain_error("pure_three_body_bound: need 2 <= d1 <= d2 <= d3");
  }
  const double num = static_cast<double>(d1) * d2 + static_cast<double>(d1) * d3 +
                     static_cast<double>(d2) * d3 - d1 - d2;
  const double den = static_cast<double>(d1) * d2 * d3 * d3;
  return 8.0 * (1.0 - num / den);
}

double pure_four_body_bound(int d1, int d2, int d3, int d4) {
  if (d1 < 2 || d1 > d2 || d2 > d3 || d3 > d4) {
    throw std::domain_error(
        "pure_four_body_bound: need 2 <= d1 <= d2 <= d3 <= d4");
  }
  const double num = static_cast<double>(d2) * d3 * d4 +
                     static_cast<double>(d1) * d3 * d4 +
                     static_cast<double>(d1) * d2 * d4 +
                     static_cast<double>(d1) * d2 * d3 - d1 - d2 - d3 + d4;
  const double den = 2.0 * d1 * d2 * d3 * static_cast<double>(d4) * d4;
  return 16.0 * (1.0 - num / den);
}

double pure_n_body_bound(int n, int d) {
  if (d < 2) throw std::domain_error("pure_n_body_bound: d must be >= 2");
  if (n < 2) throw std::domain_error("pure_n_body_bound: n must be >= 2");
  if (n == 2) return pure_two_body_bound(d, d);
  const double ratio = std::pow(2.0 / d, n);
  const double dn = std::pow(static_cast<double>(d), n);
  const double dn2 = std::pow(static_cast<double>(d), n - 2);
  return ratio * ((n - 2) * dn - n * dn2 + 2.0) / (n - 2);
}

double w_factor(int j, int d) {
  if (j < 1) throw std::domain_error("w_factor: j must be >= 1");
  if (j == 1) return one_body_bound(d);
  if (j == 2) return pure_two_body_bound(d, d);
  return pure_n_body_bound(j, d);
}

double k_sep_bound(const std::vector<int>& block_sizes, int d) {
  if (block_sizes.empty()) {
    throw std::domain_error("k_sep_bound: empty block-size list");
  }
  double bound = 1.0;
  for (int j : block_sizes) bound *= w_factor(j, d);
  return bound;
}

// ---------------------------------------------------------------------------
// Labeling enumeration
// ---------------------------------------------------------------------------

std::vector<RoleLabeling> admissible_labelings(CriterionId id,
                                               const PartitionSpec& partition,
                                               const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  partition.validate(n);
  const std::vector<int> owner = block_of(partition, n);
  std::vector<RoleLabeling> out;

  switch (id) {
    case CriterionId::B1: {
      if (n != 3 && n != 4) break;
      for (int f = 0; f < n; ++f) {
        for (int p = 0; p < n; ++p) {
          for (int q = p + 1; q < n; ++q) {
            if (p == f || q == f) continue;
            if (owner[f] == owner[p] || owner[f] == owner[q]) continue;
            const auto [g, h] = order_pair_by_dim(p, q, dims);
            out.push_back({id, {f, g, h}, {}});
          }
        }
      }
      break;
    }
    case CriterionId::F1: {
      if (n != 3 && n != 4) break;
      for (int f = 0; f < n; ++f) {
        for (int g = 0; g < n; ++g) {
          for (int h = 0; h < n; ++h) {
            if (f == g || f == h || g == h) continue;
            if (owner[f] == owner[g] || owner[f] == owner[h] ||
                owner[g] == owner[h]) {
              continue;
            }
            out.push_back({id, {f, g, h}, {}});
          }
        }
      }
      break;
    }
    case CriterionId::B2: {
      if (n != 4) break;
      for (int f = 0; f < n; ++f) {
        for (int g = f + 1; g < n; ++g) {  // transpose gives the same norm
          if (owner[f] == owner[g]) continue;
          out.push_back({id, {f, g}, {}});
        }
      }
      break;
    }
    case CriterionId::B3: {
      if (n != 4) break;
      // The three pair-vs-pair splits; rows take the pair holding party 0.
      static const int kPairings[3][4] = {
          {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
      for (const auto& pairing : kPairings) {
        const int a = pairing[0], b = pairing[1];
        const int c = pairing[2], d = pairing[3];
        std::set<int> left{owner[a], owner[b]};
        if (left.count(owner[c]) || left.count(owner[d])) continue;
        const auto [f, g] = order_pair_by_dim(a, b, dims);
        const auto [h, e] = order_pair_by_dim(c, d, dims);
        out.push_back({id, {f, g, h, e}, {}});
      }
      break;
    }
    case CriterionId::F2: {
      if (n != 4) break;
      if (partition.blocks.size() != 4) break;
      for (int f = 0; f < n; ++f) {
        for (int e = 0; e < n; ++e) {
          if (e == f) continue;
          std::vector<int> rest;
          for (int p = 0; p < n; ++p) {
            if (p != f && p != e) rest.push_back(p);
          }
          // Swapping g and h only permutes columns; keep g < h.
          out.push_back({id, {f, rest[0], rest[1], e}, {}});
        }
      }
      break;
    }
    case CriterionId::KSEP: {
      if (partition.blocks.size() < 2) break;
      const bool equal_dims =
          std::all_of(dims.begin(), dims.end(),
                      [&](int d) { return d == dims.front(); });
      if (!equal_dims) break;
      for (auto& sizes : coarsened_multisets(partition.block_sizes())) {
        out.push_back({id, {}, sizes});
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// S-matrix assembly
// ---------------------------------------------------------------------------

namespace {

// 1 x N vectorization of the tensor on `subset` (ascending party order).
RealMatrix vec_row(const TensorSet& ts, const std::vector<int>& subset) {
  const std::vector<int> s = sorted(subset);
  return matricize(ts.at(s), {}, s);
}

// Rows indexed by party f, columns by `cols` in ascending party order.
RealMatrix body_block(const TensorSet& ts, int f,
                      const std::vector<int>& cols) {
  std::vector<int> all = cols;
  all.push_back(f);
  return matricize(ts.at(sorted(all)), {f}, sorted(cols));
}

}  // namespace

SMatrix build_s_matrix(const TensorSet& ts, const RoleLabeling& labeling) {
  const std::vector<int>& dims = ts.dims;
  auto K = [&](int p) { return dims[p] * dims[p] - 1; };

  SMatrix result;
  result.labeling = labeling;

  switch (labeling.id) {
    case CriterionId::B1: {
      const int f = labeling.roles[0], g = labeling.roles[1],
                h = labeling.roles[2];
      const long kf = K(f), kg = K(g), kh = K(h);
      RealMatrix s = RealMatrix::Zero(1 + kf, 1 + kg + kh + kg * kh);
      s(0, 0) = 1.0;
      s.block(0, 1, 1, kg) = vec_row(ts, {g});
      s.block(0, 1 + kg, 1, kh) = vec_row(ts, {h});
      s.block(0, 1 + kg + kh, 1, kg * kh) = vec_row(ts, {g, h});
      s.block(1, 0, kf, 1) = matricize(ts.at({f}), {f}, {});
      s.block(1, 1, kf, kg) = body_block(ts, f, {g});
      s.block(1, 1 + kg, kf, kh) = body_block(ts, f, {h});
      s.block(1, 1 + kg + kh, kf, kg * kh) = body_block(ts, f, {g, h});
      result.matrix = std::move(s);
      break;
    }
    case CriterionId::F1: {
      const int f = labeling.roles[0], g = labeling.roles[1],
                h = labeling.roles[2];
      const long kf = K(f), kg = K(g), kh = K(h);
      RealMatrix s = RealMatrix::Zero(1 + kf, kh + kg * kh);
      s.block(0, 0, 1, kh) = vec_row(ts, {h});
      s.block(0, kh, 1, kg * kh) = vec_row(ts, {g, h});
      s.block(1, 0, kf, kh) = body_block(ts, f, {h});
      s.block(1, kh, kf, kg * kh) = body_block(ts, f, {g, h});
      result.matrix = std::move(s);
      break;
    }
    case CriterionId::B2: {
      const int f = labeling.roles[0], g = labeling.roles[1];
      const long kf = K(f), kg = K(g);
      RealMatrix s = RealMatrix::Zero(1 + kf, 1 + kg);
      s(0, 0) = 1.0;
      s.block(0, 1, 1, kg) = vec_row(ts, {g});
      s.block(1, 0, kf, 1) = matricize(ts.at({f}), {f}, {});
      s.block(1, 1, kf, kg) = body_block(ts, f, {g});
      result.matrix = std::move(s);
      break;
    }
    case CriterionId::B3: {
      const std::vector<int> rows =
          sorted({labeling.roles[0], labeling.roles[1]});
      const std::vector<int> cols =
          sorted({labeling.roles[2], labeling.roles[3]});
      const long kr = static_cast<long>(K(rows[0])) * K(rows[1]);
      const long kc = static_cast<long>(K(cols[0])) * K(cols[1]);
      RealMatrix s = RealMatrix::Zero(1 + kr, 1 + kc);
      s(0, 0) = 1.0;
      s.block(0, 1, 1, kc) = vec_row(ts, cols);
      s.block(1, 0, kr, 1) = matricize(ts.at(rows), rows, {});
      std::vector<int> all = rows;
      all.insert(all.end(), cols.begin(), cols.end());
      s.block(1, 1, kr, kc) = matricize(ts.at(sorted(all)), rows, cols);
      result.matrix = std::move(s);
      break;
    }
    case CriterionId::F2: {
      const int f = labeling.roles[0], g = labeling.roles[1],
                h = labeling.roles[2], e = labeling.roles[3];
      const long kf = K(f), kg = K(g), kh = K(h), ke = K(e);
      const long widths[4] = {ke, kh * ke, kg * ke, kg * kh * ke};
      const std::vector<std::vector<int>> col_subsets = {
          {e}, {h, e}, {g, e}, {g, h, e}};
      RealMatrix s = RealMatrix::Zero(1 + kf,
                                      widths[0] + widths[1] + widths[2] +
                                          widths[3]);
      long offset = 0;
      for (int b = 0; b < 4; ++b) {
        s.block(0, offset, 1, widths[b]) = vec_row(ts, col_subsets[b]);
        s.block(1, offset, kf, widths[b]) = body_block(ts, f, col_subsets[b]);
        offset += widths[b];
      }
      result.matrix = std::move(s);
      break;
    }
    case CriterionId::KSEP:
      throw std::invalid_argument(
          "build_s_matrix: the tensor-norm criterion has no matrix form");
  }
  return result;
}

double bound_for(const RoleLabeling& labeling, const std::vector<int>& dims) {
  auto d = [&](std::size_t slot) {
    return static_cast<double>(dims[labeling.roles[slot]]);
  };
  switch (labeling.id) {
    case CriterionId::B1: {
      const double df = d(0), dg = d(1), dh = d(2);
      return std::sqrt((3 * df - 2) *
                       (9 * dg * dh * dh - 2 * dh * dh - 2 * dg * dh - 4 * dg) /
                       (df * dg * dh * dh));
    }
    case CriterionId::F1: {
      const double df = d(0), dg = d(1), dh = d(2);
      return 2 * (dh - 1) / dh *
             std::sqrt((3 * df - 2) * (3 * dg - 2) / (df * dg));
    }
    case CriterionId::B2: {
      const double df = d(0), dg = d(1);
      return std::sqrt((3 * df - 2) * (3 * dg - 2) / (df * dg));
    }
    case CriterionId::B3: {
      const double dg = d(1), de = d(3);
      return std::sqrt((5 * dg * dg - 4) * (5 * de * de - 4)) / (dg * de);
    }
    case CriterionId::F2: {
      const double df = d(0), dg = d(1), dh = d(2), de = d(3);
      return 2 * (de - 1) / de *
             std::sqrt((3 * df - 2) * (3 * dg - 2) * (3 * dh - 2) /
                       (df * dg * dh));
    }
    case CriterionId::KSEP: {
      for (int dd : dims) {
        if (dd != dims.front()) {
          throw UnsupportedConfigError(
              "tensor-norm criterion requires equal local dimensions");
        }
      }
      return k_sep_bound(labeling.block_sizes, dims.front());
    }
  }
  throw std::logic_error("bound_for: unknown criterion");
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

using ValueMemo = std::map<RoleLabeling, std::pair<double, double>>;

std::pair<double, double> labeling_value(const TensorSet& ts,
                                         const RoleLabeling& labeling,
                                         ValueMemo* memo) {
  if (memo) {
    auto it = memo->find(labeling);
    if (it != memo->end()) return it->second;
  }
  double lhs;
  if (labeling.id == CriterionId::KSEP) {
    std::vector<int> full(ts.dims.size());
    for (std::size_t i = 0; i < full.size(); ++i) full[i] = static_cast<int>(i);
    lhs = tensor_norm_sq(ts.at(full));
  } else {
    lhs = trace_norm(build_s_matrix(ts, labeling).matrix);
  }
  const double bound = bound_for(labeling, ts.dims);
  const std::pair<double, double> value{lhs, bound};
  if (memo) memo->emplace(labeling, value);
  return value;
}

std::vector<CriterionReport> evaluate_with(const TensorSet& ts,
                                           const PartitionSpec& partition,
                                           double tol, ValueMemo* memo) {
  static const CriterionId kAll[] = {CriterionId::B1, CriterionId::F1,
                                     CriterionId::B2, CriterionId::B3,
                                     CriterionId::F2, CriterionId::KSEP};
  std::vector<CriterionReport> reports;
  for (CriterionId id : kAll) {
    for (const auto& labeling : admissible_labelings(id, partition, ts.dims)) {
      const auto [lhs, bound] = labeling_value(ts, labeling, memo);
      CriterionReport report;
      report.partition = partition;
      report.id = id;
      report.labeling = labeling;
      report.lhs = lhs;
      report.bound = bound;
      report.margin = lhs - bound;
      report.violated = report.margin > tol;
      reports.push_back(std::move(report));
    }
  }
  std::sort(reports.begin(), reports.end(),
            [](const CriterionReport& a, const CriterionReport& b) {
              return a.labeling < b.labeling;
            });
  return reports;
}

std::string unsupported_message(const std::vector<int>& dims) {
  std::ostringstream oss;
  oss << "no applicable criteria for dims (";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    oss << (i ? "," : "") << dims[i];
  }
  oss << "): trace-norm matrix criteria cover 3- and 4-party systems; "
         "tensor-norm criteria require equal local dimensions";
  return oss.str();
}

PartitionVerdict make_verdict(const PartitionSpec& partition,
                              std::vector<CriterionReport> reports) {
  PartitionVerdict verdict;
  verdict.partition = partition;
  verdict.reports = std::move(reports);
  bool first = true;
  for (const auto& report : verdict.reports) {
    if (report.violated) verdict.certified = true;
    if (first || report.margin > verdict.max_margin) {
      verdict.max_margin = report.margin;
      verdict.strongest_id = report.id;
      verdict.strongest_labeling = report.labeling;
      first = false;
    }
  }
  return verdict;
}

// Representative partitions, one per block-size multiset (contiguous
// blocks, sizes ascending).
std::vector<PartitionSpec> multiset_representatives(int n) {
  std::vector<std::vector<int>> partitions;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      if (current.size() >= 2) partitions.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);

  std::vector<PartitionSpec> out;
  for (auto sizes : partitions) {
    std::sort(sizes.begin(), sizes.end());
    PartitionSpec spec;
    int next = 0;
    for (int size : sizes) {
      std::vector<int> block;
      for (int i = 0; i < size; ++i) block.push_back(next++);
      spec.blocks.push_back(std::move(block));
    }
    out.push_back(std::move(spec));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.blocks.size() != b.blocks.size()) {
      return a.blocks.size() < b.blocks.size();
    }
    return a.to_string() < b.to_string();
  });
  return out;
}

}  // namespace

std::vector<CriterionReport> evaluate(const DensityMatrix& rho,
                                      const PartitionSpec& partition,
                                      double tol) {
  partition.validate(rho.parties());
  const TensorSet ts = all_tensors(rho);
  auto reports = evaluate_with(ts, partition.canonical(), tol, nullptr);
  if (reports.empty()) {
    throw UnsupportedConfigError(unsupported_message(rho.dims));
  }
  return reports;
}

AnalysisReport analyze(const DensityMatrix& rho, double tol) {
  const int n = rho.parties();
  const std::vector<int>& dims = rho.dims;
  const bool equal_dims = std::all_of(
      dims.begin(), dims.end(), [&](int d) { return d == dims.front(); });
  const bool matrix_criteria = (n == 3 || n == 4);

  AnalysisReport report;
  report.dims = dims;
  report.tolerance = tol;
  if (!matrix_criteria) {
    std::ostringstream oss;
    oss << "trace-norm matrix criteria cover 3- and 4-party systems only; "
           "skipped for n="
        << n;
    report.skipped.push_back(oss.str());
  }
  if (!equal_dims) {
    report.skipped.push_back(
        "tensor-norm (KSEP) criteria require equal local dimensions; skipped");
  }
  if (!matrix_criteria && !equal_dims) {
    throw UnsupportedConfigError(unsupported_message(dims));
  }
  if (n < 2) {
    throw UnsupportedConfigError("analysis requires at least 2 parties");
  }

  const TensorSet ts = all_tensors(rho);
  ValueMemo memo;
  const std::vector<PartitionSpec> partitions =
      matrix_criteria ? PartitionSpec::enumerate(n)
                      : multiset_representatives(n);
  for (const auto& partition : partitions) {
    report.partitions.push_back(
        make_verdict(partition, evaluate_with(ts, partition, tol, &memo)));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Threshold scanning
// ---------------------------------------------------------------------------

ScanOutcome threshold_scan(
    const std::function<std::pair<double, double>(double)>& lhs_bound_at,
    double lo, double hi, int steps, double xtol) {
  if (!(lo < hi)) {
    throw std::invalid_argument("threshold_scan: need lo < hi");
  }
  if (steps < 1) {
    throw std::invalid_argument("threshold_scan: need at least one step");
  }
  ScanOutcome outcome;
  outcome.samples.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + (hi - lo) * i / steps;
    const auto [lhs, bound] = lhs_bound_at(x);
    outcome.samples.push_back({x, lhs, bound});
  }
  const double margin_lo = outcome.samples.front().margin();
  const double margin_hi = outcome.samples.back().margin();
  const bool lo_violated = margin_lo > 0.0;
  const bool hi_violated = margin_hi > 0.0;
  if (lo_violated == hi_violated) {
    outcome.status = lo_violated ? ScanStatus::AlwaysViolated
                                 : ScanStatus::NeverViolated;
    return outcome;
  }
  double a = lo, b = hi;
  bool a_violated = lo_violated;
  while (b - a > xtol) {
    const double mid = (a + b) / 2.0;
    const auto [lhs, bound] = lhs_bound_at(mid);
    const bool mid_violated = (lhs - bound) > 0.0;
    if (mid_violated == a_violated) {
      a = mid;
    } else {
      b = mid;
    }
  }
  outcome.status = ScanStatus::RootFound;
  outcome.threshold = (a + b) / 2.0;
  return outcome;
}

std::pair<double, double> criterion_value(const DensityMatrix& rho,
                                          CriterionId id,
                                          const PartitionSpec& partition) {
  const auto labelings =
      admissible_labelings(id, partition.canonical(), rho.dims);
  if (labelings.empty()) {
    std::ostringstream oss;
    oss << "criterion " << to_string(id) << " is not admissible for partition "
        << partition.to_string();
    throw UnsupportedConfigError(oss.str());
  }
  const TensorSet ts = all_tensors(rho);
  std::pair<double, double> best{0.0, 0.0};
  bool first = true;
  for (const auto& labeling : labelings) {
    const auto value = labeling_value(ts, labeling, nullptr);
    if (first || value.first - value.second > best.first - best.second) {
      best = value;
      first = false;
    }
  }
  return best;
}

ScanOutcome scan_family(const std::string& family, CriterionId id,
                        const PartitionSpec& partition, double lo, double hi,
                        int steps, double xtol) {
  return threshold_scan(
      [&](double x) {
        return criterion_value(family_sweep_state(family, x), id, partition);
      },
      lo, hi, steps, xtol);
}

}  // namespace blochsep
