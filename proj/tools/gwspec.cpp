// Command-line front end: spectra, classification, enumeration and the
// verification suites for generalized wheels aK_m joined with C_n.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "gwspec/graph.hpp"
#include "gwspec/integrality.hpp"
#include "gwspec/oracle.hpp"
#include "gwspec/records.hpp"
#include "gwspec/spectra.hpp"
#include "gwspec/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

using namespace gwspec;

IntMatrix matrix_for(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return adjacency_matrix(g);
    case MatrixKind::distance: return distance_matrix(g);
    case MatrixKind::dl: return dl_matrix(g);
    case MatrixKind::dq: return dq_matrix(g);
  }
  throw invalid_parameter("unknown matrix kind");
}

Spectrum exact_for(const WheelParams& p, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return gw_adjacency_spectrum(p);
    case MatrixKind::distance: return gw_distance_spectrum(p);
    case MatrixKind::dl: return gw_dl_spectrum(p);
    case MatrixKind::dq: return gw_dq_spectrum(p);
  }
  throw invalid_parameter("unknown matrix kind");
}

struct WheelArgs {
  std::int64_t a = 1;
  std::int64_t m = 1;
  std::int64_t n = 3;
};

void add_wheel_options(CLI::App* cmd, WheelArgs& args) {
  cmd->add_option("--a", args.a, "number of K_m copies (>= 1)")->required();
  cmd->add_option("--m", args.m, "clique size (>= 1)")->required();
  cmd->add_option("--n", args.n, "cycle length (>= 3)")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distance spectra and integrality of generalized wheel graphs"};
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
  };

  WheelArgs spectrum_args;
  std::string matrix = "dq";
  std::string mode = "exact";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "print the spectrum of a matrix of GW(a,m,n)");
  add_wheel_options(spectrum_cmd, spectrum_args);
  spectrum_cmd->add_option("--matrix", matrix, "adj | dist | dl | dq")
      ->check(CLI::IsMember({"adj", "dist", "dl", "dq"}))
      ->capture_default_str();
  spectrum_cmd->add_option("--mode", mode, "exact | numeric | both")
      ->check(CLI::IsMember({"exact", "numeric", "both"}))
      ->capture_default_str();
  add_format(spectrum_cmd);

  WheelArgs classify_args;
  std::string which = "both";
  auto* classify_cmd = app.add_subcommand("classify", "D^Q / D^L integrality verdict with witness");
  add_wheel_options(classify_cmd, classify_args);
  classify_cmd->add_option("--which", which, "dq | dl | both")
      ->check(CLI::IsMember({"dq", "dl", "both"}))
      ->capture_default_str();
  add_format(classify_cmd);

  std::string enum_which = "dq";
  std::string method = "scan";
  std::int64_t a_max = 11;
  std::int64_t m_max = 35;
  std::vector<std::int64_t> n_values{3, 4, 6};
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list integral triples on a grid");
  enumerate_cmd->add_option("--which", enum_which, "dq | dl")->check(CLI::IsMember({"dq", "dl"}))->capture_default_str();
  enumerate_cmd->add_option("--a-max", a_max, "largest a")->capture_default_str();
  enumerate_cmd->add_option("--m-max", m_max, "largest m")->capture_default_str();
  enumerate_cmd->add_option("--n-values", n_values, "comma-separated cycle lengths")->delimiter(',');
  enumerate_cmd->add_option("--method", method, "scan | alpha")
      ->check(CLI::IsMember({"scan", "alpha"}))
      ->capture_default_str();
  add_format(enumerate_cmd);

  VerifyOptions verify_options;
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite (exit 2 on failure)");
  verify_cmd->add_option("--suite", suite, "join-dq | join-dl | gw-dq | gw-dl | classification | alpha-equiv | parity | bounds")
      ->required();
  verify_cmd->add_option("--max-order", verify_options.max_order, "largest graph order for matrix suites")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_options.seed, "random seed")->capture_default_str();
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto out_format = parse_output_format(format);
    if (spectrum_cmd->parsed()) {
      const auto p = WheelParams::make(spectrum_args.a, spectrum_args.m, spectrum_args.n);
      const auto kind = parse_matrix_kind(matrix);
      const auto spectrum_mode = parse_spectrum_mode(mode);
      SpectrumRecord record{p, kind, std::nullopt, std::nullopt, std::nullopt};
      if (spectrum_mode != SpectrumMode::numeric) record.exact = exact_for(p, kind);
      if (spectrum_mode != SpectrumMode::exact) {
        const auto numeric = eigenvalues_symmetric(matrix_for(generalized_wheel(p), kind));
        record.numeric = numeric.values;
        if (record.exact) record.max_deviation = compare_spectra(*record.exact, numeric, kOracleTolerance).max_deviation;
      }
      std::cout << render(record, out_format);
    } else if (classify_cmd->parsed()) {
      const auto p = WheelParams::make(classify_args.a, classify_args.m, classify_args.n);
      std::cout << render(ClassificationRecord{which, classify(p)}, out_format);
    } else if (enumerate_cmd->parsed()) {
      std::cout << render(enumerate_integral(enum_which, method, a_max, m_max, n_values), out_format);
    } else if (verify_cmd->parsed()) {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite: " << suite << '\n';
        return kExitUsage;
      }
      const auto record = run_suite(suite, verify_options);
      std::cout << render(record, out_format);
      return record.passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const invalid_parameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Anything else (solver failure, overflow) is reported as a usage-level
    // error so the exit code stays within {0, 1, 2}.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
