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

#include "blochsep/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blochsep/errors.hpp"
#include "blochsep/io.hpp"
#include "blochsep/reference_forms.hpp"

namespace blochsep {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream oss;
    oss << std::cin.rdbuf();
    return oss.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  file << content;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

int cmd_gen(const std::string& family, double p, const std::string& output,
            std::ostream& out) {
  const StateDocument doc = StateDocument::dense(family_state(family, p));
  write_output(output, doc.to_json().dump(2) + "\n", out);
  return 0;
}

int cmd_analyze(const std::string& input, const std::string& output,
                double tolerance, const std::string& format,
                std::ostream& out) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(read_input(input));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed document: ") +
                                e.what());
  }
  std::vector<std::string> warnings;
  const StateDocument doc = StateDocument::from_json(parsed);
  const DensityMatrix rho = doc.realize(tolerance, &warnings);
  const AnalysisReport analysis = analyze(rho, tolerance);
  const ReportDocument report =
      ReportDocument::build(rho, analysis, std::move(warnings));
  if (format == "structured") {
    write_output(output, report.to_json().dump(2) + "\n", out);
  } else {
    write_output(output, report.to_text(), out);
  }
  return 0;
}

int cmd_scan(const std::string& family, const std::string& criterion_name,
             std::string partition_text, int steps, double lo, double hi,
             const std::string& output, std::ostream& out) {
  const auto criterion = parse_criterion(criterion_name);
  if (!criterion) {
    throw std::invalid_argument("unknown criterion: " + criterion_name);
  }
  const int n = family_party_count(family);
  if (partition_text.empty()) {
    for (const auto& form : reference_forms()) {
      if (form.family == family && form.criterion == *criterion) {
        partition_text = form.partition;
        break;
      }
    }
    if (partition_text.empty()) {
      throw std::invalid_argument(
          "no default partition for this family/criterion; pass --partition");
    }
  }
  const PartitionSpec partition = PartitionSpec::parse(partition_text, n);

  const ScanOutcome outcome =
      scan_family(family, *criterion, partition, lo, hi, steps);

  std::ostringstream csv;
  csv << "x,lhs,bound,margin\n";
  for (const auto& point : outcome.samples) {
    csv << format_double(point.x) << ',' << format_double(point.lhs) << ','
        << format_double(point.bound) << ',' << format_double(point.margin())
        << "\n";
  }
  switch (outcome.status) {
    case ScanStatus::RootFound:
      csv << "# threshold," << format_double(outcome.threshold) << "\n";
      break;
    case ScanStatus::NeverViolated:
      csv << "# threshold,none,criterion never violated on bracket\n";
      break;
    case ScanStatus::AlwaysViolated:
      csv << "# threshold,none,criterion always violated on bracket\n";
      break;
  }
  if (const ReferenceForm* form = find_reference_form(
          family, *criterion, partition.to_string())) {
    const double ref = reference_threshold(*form);
    if (std::isnan(ref)) {
      csv << "# reference_threshold,none\n";
    } else {
      csv << "# reference_threshold," << format_double(ref) << "\n";
    }
  }
  write_output(output, csv.str(), out);
  return 0;
}

int cmd_validate(const std::string& dims_text, const std::string& partition_text,
                 int samples, std::uint64_t seed, double tolerance,
                 std::ostream& out) {
  std::vector<int> dims;
  {
    std::istringstream iss(dims_text);
    std::string token;
    while (std::getline(iss, token, ',')) {
      const int d = std::stoi(token);
      if (d < 2) {
        throw std::invalid_argument("every local dimension must be >= 2");
      }
      dims.push_back(d);
    }
    if (dims.empty()) {
      throw std::invalid_argument("empty dimension list");
    }
  }
  const PartitionSpec partition =
      PartitionSpec::parse(partition_text, static_cast<int>(dims.size()));

  int violations = 0;
  double worst_margin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const int terms = 1 + (i % 4);
    const DensityMatrix rho =
        random_separable(dims, partition, terms, seed + i);
    for (const auto& report : evaluate(rho, partition, tolerance)) {
      worst_margin = std::max(worst_margin, report.margin);
      if (report.violated) ++violations;
    }
  }
  out << "samples=" << samples << " partition=" << partition.to_string()
      << " violations=" << violations << " worst_margin=";
  if (samples == 0) {
    out << "n/a";
  } else {
    out << format_double(worst_margin);
  }
  out << "\n";
  return violations > 0 ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Decides which separability hypotheses of a multipartite density "
      "matrix are falsified by Bloch correlation-tensor criteria"};
  app.require_subcommand(1);

  // gen
  std::string gen_family;
  double gen_p = 1.0;
  std::string gen_output = "-";
  auto* gen = app.add_subcommand("gen", "Write a named family state");
  gen->add_option("--family", gen_family, "Family name")
      ->required()
      ->check(CLI::IsMember(family_names()));
  gen->add_option("--p", gen_p, "Pure-state weight in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--output,-o", gen_output, "Output path or -");

  // analyze
  std::string an_input = "-";
  std::string an_output = "-";
  double an_tolerance = kDefaultViolationTol;
  std::string an_format = "text";
  auto* an = app.add_subcommand("analyze",
                                "Evaluate all criteria over all partitions");
  an->add_option("--input,-i", an_input, "State document path or -");
  an->add_option("--output,-o", an_output, "Output path or -");
  an->add_option("--tolerance", an_tolerance, "Violation tolerance");
  an->add_option("--format", an_format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  // scan
  std::string sc_family, sc_criterion, sc_partition;
  int sc_steps = 40;
  double sc_lo = 0.0, sc_hi = 1.0;
  std::string sc_output = "-";
  auto* sc = app.add_subcommand(
      "scan", "Sweep a family parameter and bisect the detection threshold");
  sc->add_option("--family", sc_family, "Family name")
      ->required()
      ->check(CLI::IsMember(family_names()));
  sc->add_option("--criterion", sc_criterion, "B1|F1|B2|B3|F2|KSEP")
      ->required();
  sc->add_option("--partition", sc_partition, "Partition, e.g. 1|23");
  sc->add_option("--steps", sc_steps, "Sample count minus one")
      ->check(CLI::PositiveNumber);
  sc->add_option("--lo", sc_lo, "Bracket lower end");
  sc->add_option("--hi", sc_hi, "Bracket upper end");
  sc->add_option("--output,-o", sc_output, "Output path or -");

  // validate
  std::string va_dims, va_partition;
  int va_samples = 500;
  std::uint64_t va_seed = 1;
  double va_tolerance = kDefaultViolationTol;
  auto* va = app.add_subcommand(
      "validate",
      "Monte-Carlo soundness check: separable samples must not violate");
  va->add_option("--dims", va_dims, "Local dimensions, e.g. 2,2,2")
      ->required();
  va->add_option("--partition", va_partition, "Partition, e.g. 1|23")
      ->required();
  va->add_option("--samples", va_samples, "Sample count")
      ->check(CLI::NonNegativeNumber);
  va->add_option("--seed", va_seed, "Base seed; sample i uses seed+i");
  va->add_option("--tolerance", va_tolerance, "Violation tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream oss;
    const int code = app.exit(e, oss, oss);
    (code == 0 ? out : err) << oss.str();
    return code;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_family, gen_p, gen_output, out);
    if (an->parsed()) {
      return cmd_analyze(an_input, an_output, an_tolerance, an_format, out);
    }
    if (sc->parsed()) {
      return cmd_scan(sc_family, sc_criterion, sc_partition, sc_steps, sc_lo,
                      sc_hi, sc_output, out);
    }
    if (va->parsed()) {
      return cmd_validate(va_dims, va_partition, va_samples, va_seed,
                          va_tolerance, out);
    }
  } catch (const UnsupportedConfigError& e) {
    err << "error: unsupported configuration: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    err << "error: resource limit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace blochsep
