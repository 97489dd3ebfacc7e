// Copyright 2026 The gaussbell Authors
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

#include "gaussbell/cli.hpp"

#include <fstream>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaussbell/detection.hpp"
#include "gaussbell/document.hpp"
#include "gaussbell/error.hpp"
#include "gaussbell/gaussian.hpp"
#include "gaussbell/oracle.hpp"
#include "json.hpp"

namespace gaussbell::cli {
namespace {

// Raised for inconsistent flags and unreadable files; maps to kUsageError.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string number(double x) { return nlohmann::json(x).dump(); }

io::CmDocument load(const std::string& path, const Streams& io) {
  if (path == "-") {
    return io::read_document(io.in);
  }
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open input file " + path);
  }
  return io::read_document(file);
}

void store(const std::string& path, const std::string& text,
           const Streams& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) {
    throw UsageError("cannot write output file " + path);
  }
}

int cmd_validate(const std::string& input, const Streams& io) {
  const io::CmDocument doc = load(input, io);
  const ValidationReport report = validate(doc.matrix);
  io.out << std::setprecision(6) << std::scientific
         << "n_modes: " << doc.n_modes << "\n"
         << "symmetry_defect: " << report.symmetry_defect << "\n"
         << "min_uncertainty_eigenvalue: " << report.min_uncertainty_eigenvalue
         << "\n"
         << "bona_fide: " << (report.bona_fide ? "yes" : "no") << "\n";
  return report.bona_fide ? kSuccess : kDomainFailure;
}

struct DetectOptions {
  std::string input;
  std::string output = "-";
  std::string kind;
  std::optional<double> transmissivity;
  double eta = 1.0;
  std::optional<double> eta_prime;
  std::string trace;
  std::vector<std::size_t> corrupt_entry;
};

const std::map<std::string, DetectionKind>& kind_names() {
  static const std::map<std::string, DetectionKind> names = {
      {"homodyne-q", DetectionKind::HomodyneQ},
      {"homodyne-p", DetectionKind::HomodyneP},
      {"bell", DetectionKind::BellLike},
      {"standard-bell", DetectionKind::StandardBell},
      {"heterodyne", DetectionKind::Heterodyne},
  };
  return names;
}

DetectionSpec make_spec(const DetectOptions& opts) {
  const DetectionKind kind = kind_names().at(opts.kind);
  const bool homodyne_kind =
      kind == DetectionKind::HomodyneQ || kind == DetectionKind::HomodyneP;
  if (opts.transmissivity && kind != DetectionKind::BellLike) {
    throw UsageError("--transmissivity only applies to --kind bell");
  }
  if (opts.eta_prime && homodyne_kind) {
    throw UsageError("--eta-prime does not apply to homodyne detection");
  }
  const Efficiency eta(opts.eta);
  const Efficiency eta_prime(opts.eta_prime.value_or(1.0));
  switch (kind) {
    case DetectionKind::HomodyneQ:
      return DetectionSpec::homodyne(Quadrature::Q, eta);
    case DetectionKind::HomodyneP:
      return DetectionSpec::homodyne(Quadrature::P, eta);
    case DetectionKind::BellLike:
      return DetectionSpec::bell_like(
          Transmissivity(opts.transmissivity.value_or(0.5)), eta, eta_prime);
    case DetectionKind::StandardBell:
      return DetectionSpec::standard_bell(eta, eta_prime);
    case DetectionKind::Heterodyne:
      return DetectionSpec::heterodyne(eta, eta_prime);
  }
  throw UsageError("unknown detection kind " + opts.kind);
}

oracle::StepwiseResult run_oracle(const CovarianceMatrix& v,
                                  const DetectionSpec& spec) {
  switch (spec.kind()) {
    case DetectionKind::HomodyneQ:
      return oracle::homodyne_stepwise(v, Quadrature::Q, spec.eta());
    case DetectionKind::HomodyneP:
      return oracle::homodyne_stepwise(v, Quadrature::P, spec.eta());
    case DetectionKind::BellLike:
      return oracle::bell_like_stepwise(v, *spec.transmissivity(), spec.eta(),
                                        spec.eta_prime());
    case DetectionKind::StandardBell:
      return oracle::bell_like_stepwise(v, Transmissivity(0.5), spec.eta(),
                                        spec.eta_prime());
    case DetectionKind::Heterodyne:
      return oracle::bell_like_stepwise(direct_sum(v, vacuum(1)),
                                        Transmissivity(0.5), spec.eta(),
                                        spec.eta_prime());
  }
  throw UsageError("unknown detection kind");
}

int cmd_detect(const DetectOptions& opts, const Streams& io) {
  if (!opts.corrupt_entry.empty() && opts.trace.empty()) {
    throw UsageError("--corrupt-entry requires --trace");
  }
  const DetectionSpec spec = make_spec(opts);
  const io::CmDocument doc = load(opts.input, io);
  const CovarianceMatrix input = doc.cm();
  if (!validate(input).bona_fide) {
    io.err << "warning: input is not a bona fide covariance matrix\n";
  }

  const CovarianceMatrix result = detect(input, spec);

  if (!opts.trace.empty()) {
    Mat checked = result.matrix();
    if (!opts.corrupt_entry.empty()) {
      const auto i = static_cast<Eigen::Index>(opts.corrupt_entry[0]);
      const auto j = static_cast<Eigen::Index>(opts.corrupt_entry[1]);
      if (i >= checked.rows() || j >= checked.cols()) {
        throw UsageError("--corrupt-entry index out of range");
      }
      checked(i, j) += 1e-3 * (1.0 + std::abs(checked(i, j)));
    }
    const oracle::StepwiseResult reference = run_oracle(input, spec);
    const double deviation =
        max_relative_deviation(checked, reference.output.matrix());
    store(opts.trace, io::trace_to_text(reference.trace, result, deviation),
          io);
    if (!(deviation <= kTraceTolerance)) {
      io.err << "error: closed-form result disagrees with the stepwise oracle "
                "(max relative deviation "
             << deviation << " > " << kTraceTolerance << ")\n";
      return kDomainFailure;
    }
  }

  std::map<std::string, std::string> meta = {
      {"detection", std::string(to_string(spec.kind()))},
      {"eta", number(spec.eta().value())},
  };
  if (spec.measured_modes() == 2 || spec.kind() == DetectionKind::Heterodyne) {
    meta.emplace("eta_prime", number(spec.eta_prime().value()));
  }
  if (spec.transmissivity()) {
    meta.emplace("transmissivity", number(spec.transmissivity()->value()));
  }
  store(opts.output, io::to_text(io::CmDocument::from(result, std::move(meta))),
        io);
  return kSuccess;
}

int cmd_gen(const CovarianceMatrix& cm,
            std::map<std::string, std::string> meta, const std::string& output,
            const Streams& io) {
  store(output, io::to_text(io::CmDocument::from(cm, std::move(meta))), io);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  const Streams io{in, out, err};

  CLI::App app{
      "Covariance matrices of Gaussian states under homodyne, heterodyne and "
      "Bell-like detection",
      "gaussbell"};
  app.require_subcommand(1);

  std::string validate_input;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check the uncertainty principle");
  validate_cmd->add_option("input", validate_input, "Document path or -")
      ->required();

  DetectOptions detect_opts;
  CLI::App* detect_cmd =
      app.add_subcommand("detect", "Apply a detection to the last mode(s)");
  detect_cmd->add_option("input", detect_opts.input, "Document path or -")
      ->required();
  detect_cmd->add_option("-o,--output", detect_opts.output,
                         "Output document path or - (default)");
  detect_cmd->add_option("--kind", detect_opts.kind, "Measurement")
      ->required()
      ->check(CLI::IsMember(
          {"homodyne-q", "homodyne-p", "bell", "standard-bell", "heterodyne"}));
  detect_cmd->add_option("--transmissivity,-T", detect_opts.transmissivity,
                         "Beam-splitter transmissivity for bell (default 0.5)");
  detect_cmd->add_option("--eta", detect_opts.eta,
                         "Efficiency of the q detector (default 1)");
  detect_cmd->add_option("--eta-prime", detect_opts.eta_prime,
                         "Efficiency of the p detector (default 1)");
  detect_cmd->add_option("--trace", detect_opts.trace,
                         "Write the stepwise oracle trace here and require "
                         "agreement with the closed form");
  detect_cmd
      ->add_option("--corrupt-entry", detect_opts.corrupt_entry,
                   "Perturb entry (I, J) before the oracle comparison")
      ->expected(2)
      ->group("");

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a covariance matrix");
  gen_cmd->require_subcommand(1);
  std::string gen_output = "-";
  std::size_t vacuum_modes = 0;
  double epr_mu = 1.0;
  std::size_t random_modes = 0;
  std::uint64_t random_seed = 0;
  CLI::App* gen_vacuum = gen_cmd->add_subcommand("vacuum", "n-mode vacuum");
  gen_vacuum->add_option("n", vacuum_modes, "Number of modes")->required();
  CLI::App* gen_epr = gen_cmd->add_subcommand("epr", "Two-mode EPR state");
  gen_epr->add_option("mu", epr_mu, "Variance parameter mu >= 1")->required();
  CLI::App* gen_random =
      gen_cmd->add_subcommand("random", "Random bona fide state");
  gen_random->add_option("n", random_modes, "Number of modes")->required();
  gen_random->add_option("seed", random_seed, "RNG seed")->required();
  for (CLI::App* sub : {gen_vacuum, gen_epr, gen_random}) {
    sub->add_option("-o,--output", gen_output,
                    "Output document path or - (default)");
  }

  std::vector<std::string> argv_storage{"gaussbell"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (validate_cmd->parsed()) {
      return cmd_validate(validate_input, io);
    }
    if (detect_cmd->parsed()) {
      return cmd_detect(detect_opts, io);
    }
    try {
      if (gen_vacuum->parsed()) {
        return cmd_gen(vacuum(vacuum_modes),
                       {{"source", "vacuum"},
                        {"n_modes", std::to_string(vacuum_modes)}},
                       gen_output, io);
      }
      if (gen_epr->parsed()) {
        return cmd_gen(epr_cm(epr_mu),
                       {{"source", "epr"}, {"mu", number(epr_mu)}}, gen_output,
                       io);
      }
      if (gen_random->parsed()) {
        return cmd_gen(random_cm(random_modes, random_seed),
                       {{"source", "random"},
                        {"n_modes", std::to_string(random_modes)},
                        {"seed", std::to_string(random_seed)}},
                       gen_output, io);
      }
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const MalformedCovariance& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  err << "error: no command given\n";
  return kUsageError;
}

}  // namespace gaussbell::cli
