#include <CLI11.hpp>
#include <fstream>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "cfmtc/checks.hpp"
#include "cfmtc/config.hpp"
#include "cfmtc/harness.hpp"
#include "cfmtc/kernels.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stod(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

void write_metadata(const cfmtc::RunConfig& config, const cfmtc::SweepSpec& spec,
                    const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  out << "cfmtc " << kVersion << "\n"
      << "axis: " << spec.axis << "\n"
      << "trials per point: " << spec.trials << "\n"
      << "seed: " << config.seed << "\n"
      << "pathloss: gain = (d_ref/max(d,d_ref))^exponent, d_ref = "
      << config.pathloss.d_ref_m << " m, exponent hop1 = " << config.pathloss.exponent
      << ", exponent hop2 = " << config.pathloss.exponent_hop2
      << ", nodes uniform in a " << config.pathloss.extent_m << " m square\n"
      << "tdma accounting: delay at the effective rate B*log2(1+snr)/K, "
         "transmission energy for own-slot airtime only\n"
      << "second-hop q: enters the normalized SINR via rho*q and the energy "
         "bill in watts\n";
}

int run_table(const cfmtc::RunConfig& config, const cfmtc::SweepSpec& spec,
              const std::string& out_dir, const std::string& stem) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const cfmtc::ResultTable table = cfmtc::run_sweep(config, spec);

  const std::string csv = (fs::path(out_dir) / (stem + ".csv")).string();
  cfmtc::emit_csv(table, csv);
  cfmtc::emit_plot_script(table, csv, (fs::path(out_dir) / (stem + ".gp")).string());
  write_metadata(config, spec, (fs::path(out_dir) / (stem + ".meta.txt")).string());

  std::size_t failed = 0;
  for (const cfmtc::TrialResult& r : table.rows) failed += r.failed ? 1 : 0;
  std::printf("wrote %s (%zu rows, %zu failed) and aggregates\n", csv.c_str(),
              table.rows.size(), failed);
  for (const cfmtc::AggregateRow& a : table.aggregates) {
    std::printf("  %s=%-12g %-12s omega %.6g +- %.3g  (n=%zu)\n", table.axis.c_str(),
                a.axis_value, cfmtc::to_string(a.policy).c_str(), a.omega_mean,
                a.omega_ci95, a.trials);
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cell-free massive MIMO multi-tier offloading simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", axis, values_text;

  auto* simulate = app.add_subcommand("simulate", "run the configured scenario once");
  simulate->add_option("--config", config_path, "scenario config file")->required();
  simulate->add_option("--out", out_dir, "output directory");

  auto* sweep = app.add_subcommand("sweep", "sweep one parameter axis");
  sweep->add_option("--config", config_path, "scenario config file")->required();
  sweep->add_option("--axis", axis, "sweep axis: l_bits|mu|K|M")->required();
  sweep->add_option("--values", values_text, "comma-separated axis values")->required();
  sweep->add_option("--out", out_dir, "output directory");

  auto* verify = app.add_subcommand("verify", "run the oracle suites");
  verify->add_option("--config", config_path, "scenario config file")->required();

  app.add_subcommand("version", "print version");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("version")) {
      std::printf("cfmtc %s (kernels: %s)\n", kVersion,
                  cfmtc::kernels::level_name(cfmtc::kernels::active_level()));
      return 0;
    }

    const cfmtc::RunConfig config = cfmtc::load_config(config_path);

    if (app.got_subcommand("simulate")) {
      cfmtc::SweepSpec spec;
      spec.trials = config.trials;
      spec.seed = config.seed;
      return run_table(config, spec, out_dir, "results");
    }

    if (app.got_subcommand("sweep")) {
      cfmtc::SweepSpec spec;
      spec.axis = axis;
      spec.values = parse_values(values_text);
      spec.trials = config.trials;
      spec.seed = config.seed;
      return run_table(config, spec, out_dir, "sweep_" + axis);
    }

    // verify
    int failures = 0;
    for (const cfmtc::CheckResult& r : cfmtc::run_verification(config.seed)) {
      std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  r.detail.c_str());
      failures += r.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
