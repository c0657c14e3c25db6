#pragma once

// Command-line front end. run() takes explicit streams so tests can drive
// it in-process; main.cpp only forwards argv and the standard streams.
//
// Exit codes: 0 success, 1 domain failure (e.g. not special orthogonal),
// 2 parse or usage failure.

#include <soq/soq.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace soq::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageFailure = 2;

namespace detail {

/// Input stream for a path flag; empty or "-" means the supplied stream.
class Input {
 public:
  Input(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw error(errc::parse_error, "cannot open " + path);
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw error(errc::parse_error, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

inline int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::zero_denominator:
    case errc::malformed_chain:
    case errc::invalid_config:
    case errc::dimension_mismatch:
      return kUsageFailure;
    default:
      return kDomainFailure;
  }
}

inline std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::string tok;
  std::istringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw error(errc::invalid_config, "bad dimension '" + tok + "'");
    }
    if (pos != tok.size() || v < 2) throw error(errc::invalid_config, "dimensions must be integers >= 2, got '" + tok + "'");
    dims.push_back(static_cast<std::size_t>(v));
  }
  if (dims.empty()) throw error(errc::invalid_config, "no dimensions given");
  return dims;
}

}  // namespace detail

struct GenerateOptions {
  std::size_t dim = 3;
  std::size_t count = 1;
  std::uint64_t bound = 10;
  std::uint64_t seed = 0;
  std::string inf_weight = "0";
  std::string format = "json";
  std::string config;
  std::string output;
};

inline int cmd_generate(const GenerateOptions& opt, const CLI::App& sub, std::ostream& out) {
  GenConfig cfg;
  if (!opt.config.empty()) {
    std::ifstream f(opt.config);
    if (!f) throw error(errc::parse_error, "cannot open " + opt.config);
    auto docs = io::read_json_documents(f);
    if (docs.size() != 1) throw error(errc::parse_error, "config file must hold one JSON object");
    cfg = io::config_from_json(docs.front(), cfg);
  }
  // Explicit flags override the config file.
  if (opt.config.empty() || sub.count("--dim")) cfg.dim = opt.dim;
  if (opt.config.empty() || sub.count("--bound")) cfg.bound = opt.bound;
  if (opt.config.empty() || sub.count("--seed")) cfg.seed = opt.seed;
  if (opt.config.empty() || sub.count("--inf-weight")) cfg.inf_weight = Rational::parse_decimal(opt.inf_weight);
  cfg.validate();

  detail::Output sink(opt.output, out);
  for (std::size_t i = 0; i < opt.count; ++i) {
    Rng rng = item_stream(cfg, i);
    const Matrix m = random_rotation(cfg, rng);
    if (opt.format == "json") {
      sink.get() << io::matrix_to_json(m).dump() << '\n';
    } else if (opt.format == "text") {
      if (i) sink.get() << '\n';
      sink.get() << io::to_text(m);
    } else {
      if (i) sink.get() << '\n';
      sink.get() << io::to_latex(m);
    }
  }
  return kSuccess;
}

inline int cmd_decompose(const std::string& input, const std::string& output, std::istream& in, std::ostream& out,
                         std::ostream& err) {
  detail::Input source(input, in);
  const auto matrices = io::read_matrices(source.get());
  detail::Output sink(output, out);
  std::size_t index = 0;
  for (const auto& m : matrices) {
    try {
      sink.get() << io::chain_to_json(decompose(m)).dump() << '\n';
    } catch (const error& e) {
      if (e.code() != errc::not_special_orthogonal) throw;
      err << "matrix " << index + 1 << ": not special orthogonal\n";
      return kDomainFailure;
    }
    ++index;
  }
  return kSuccess;
}

inline int cmd_compose(const std::string& params, const std::string& output, std::istream& in, std::ostream& out) {
  detail::Input source(params, in);
  const auto docs = io::read_json_documents(source.get());
  if (docs.empty()) throw error(errc::parse_error, "empty input");
  std::vector<FactorChain> chains;
  chains.reserve(docs.size());
  for (const auto& doc : docs) chains.push_back(io::chain_from_json(doc));
  detail::Output sink(output, out);
  for (const auto& chain : chains) sink.get() << io::matrix_to_json(compose(chain)).dump() << '\n';
  return kSuccess;
}

/// Machine-readable reports (JSON lines) go to out, the human-readable
/// form to err.
inline int cmd_verify(const std::string& input, std::istream& in, std::ostream& out, std::ostream& err) {
  detail::Input source(input, in);
  const auto matrices = io::read_matrices(source.get());
  bool all_special = true;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const Matrix& m = matrices[i];
    if (!m.is_square()) {
      err << "matrix " << i + 1 << ": not square (" << m.rows() << "x" << m.cols() << ")\n";
      out << io::ordered_json{{"n", m.rows()}, {"m", m.cols()}, {"special_orthogonal", false}}.dump() << '\n';
      all_special = false;
      continue;
    }
    const VerifyReport r = verify_report(m);
    if (matrices.size() > 1) err << "matrix " << i + 1 << ":\n";
    err << io::report_to_text(r);
    out << io::report_to_json(r).dump() << '\n';
    all_special = all_special && r.special;
  }
  return all_special ? kSuccess : kDomainFailure;
}

struct BenchOptions {
  std::string dims = "2,3,4,5,6,7,8";
  std::uint64_t bound = 10;
  std::size_t samples = 10;
  std::uint64_t seed = 0;
};

/// CSV: dim,method,samples,mean_time_us,max_entry_bits,equal. Both
/// methods compose the same seeded chains; "equal" reports whether they
/// produced identical matrices for every sample.
inline int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const auto dims = detail::parse_dims(opt.dims);
  out << "dim,method,samples,mean_time_us,max_entry_bits,equal\n";
  for (const std::size_t dim : dims) {
    GenConfig cfg;
    cfg.dim = dim;
    cfg.bound = opt.bound;
    cfg.seed = opt.seed;
    double closed_us = 0;
    double cayley_us = 0;
    std::size_t closed_bits = 0;
    std::size_t cayley_bits = 0;
    bool equal = true;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      Rng rng = item_stream(cfg, i);
      const FactorChain chain = sample_chain(cfg, rng);
      auto t0 = clock::now();
      const Matrix a = compose(chain);
      auto t1 = clock::now();
      const Matrix b = compose_via_cayley(chain);
      auto t2 = clock::now();
      closed_us += std::chrono::duration<double, std::micro>(t1 - t0).count();
      cayley_us += std::chrono::duration<double, std::micro>(t2 - t1).count();
      closed_bits = std::max(closed_bits, a.max_entry_bits());
      cayley_bits = std::max(cayley_bits, b.max_entry_bits());
      equal = equal && a == b;
    }
    const double k = static_cast<double>(opt.samples);
    const char* eq = equal ? "true" : "false";
    out << dim << ",closed-form," << opt.samples << ',' << closed_us / k << ',' << closed_bits << ',' << eq << '\n';
    out << dim << ",cayley-fraction," << opt.samples << ',' << cayley_us / k << ',' << cayley_bits << ',' << eq << '\n';
  }
  return kSuccess;
}

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generation, factorization and verification of rational rotation matrices", "soq"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "emit seeded random matrices in SO(n, Q)");
  generate->add_option("--dim", gen.dim, "matrix size n")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  generate->add_option("--count", gen.count, "number of matrices")->check(CLI::PositiveNumber);
  generate->add_option("--bound", gen.bound, "max |numerator| and max denominator of parameters");
  generate->add_option("--seed", gen.seed, "64-bit seed; matrix i uses seed + i");
  generate->add_option("--inf-weight", gen.inf_weight, "probability of an infinity level, \"p/q\" or decimal");
  generate->add_option("--format", gen.format, "json | text | latex")
      ->check(CLI::IsMember({"json", "text", "latex"}));
  generate->add_option("--config", gen.config, "JSON config with fields dim, bound, inf_weight, seed");
  generate->add_option("--output", gen.output, "output path (default stdout)");

  std::string dec_input, dec_output;
  auto* decomp = app.add_subcommand("decompose", "factor matrices into parameter chains");
  decomp->add_option("--input", dec_input, "matrix file (default stdin)");
  decomp->add_option("--output", dec_output, "output path (default stdout)");

  std::string comp_params, comp_output;
  auto* comp = app.add_subcommand("compose", "build matrices from parameter chains");
  comp->add_option("--params", comp_params, "chain file (default stdin)");
  comp->add_option("--output", comp_output, "output path (default stdout)");

  std::string ver_input;
  auto* verify = app.add_subcommand("verify", "check O*O^T = I and det O = 1 exactly");
  verify->add_option("--input", ver_input, "matrix file (default stdin)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "compare closed-form and Cayley composition");
  bench->add_option("--dims", bench_opt.dims, "comma-separated sizes, each >= 2");
  bench->add_option("--bound", bench_opt.bound, "parameter bound");
  bench->add_option("--samples", bench_opt.samples, "chains per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opt.seed, "64-bit seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageFailure;
  }

  try {
    if (*generate) return cmd_generate(gen, *generate, out);
    if (*decomp) return cmd_decompose(dec_input, dec_output, in, out, err);
    if (*comp) return cmd_compose(comp_params, comp_output, in, out);
    if (*verify) return cmd_verify(ver_input, in, out, err);
    if (*bench) return cmd_bench(bench_opt, out);
  } catch (const error& e) {
    err << e.what() << '\n';
    return detail::exit_code_for(e);
  }
  return kUsageFailure;
}

}  // namespace soq::cli
