#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "bpl/errors.hpp"
#include "commands.hpp"
#include "rows.hpp"
#include "svg.hpp"

namespace {

std::string svg_path_for(const std::string& csv_path) {
  if (csv_path.size() >= 4 && csv_path.substr(csv_path.size() - 4) == ".csv")
    return csv_path.substr(0, csv_path.size() - 4) + ".svg";
  return csv_path + ".svg";
}

}  // namespace

int main(int argc, char** argv) {
  using bpl::cli::Options;

  CLI::App app{
      "bpl: deterministic experiment runner for parameterized-circuit "
      "cost-landscape studies"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "flat key=value configuration file; command-line flags win");
  app.allow_config_extras(false);

  Options opts;
  app.add_option("--n", opts.n_range,
                 "system-size grid: A, A:B, A:B:S (inclusive), or a,b,c");
  app.add_option("--L", opts.L_range, "depth grid, same syntax as --n");
  app.add_option("--xi", opts.xi_list,
                 "block counts for xi-separable (default 1,2,4,8)");
  app.add_option("--samples", opts.samples, "Monte Carlo samples per grid point");
  app.add_option("--seed", opts.seed, "base RNG seed (default 7)");
  app.add_option("--gamma", opts.gamma, "oracle/driver strength");
  app.add_option("--delta", opts.delta, "depolarization weight");
  app.add_option("--alpha", opts.alpha,
                 "grover-sweep rotation angle (default 2*pi/n)");
  app.add_option("--L-max", opts.l_max,
                 "grover-sweep depth cap (default ceil(4*2^(n/2)))");
  app.add_option("--points", opts.points,
                 "fig3-right quadrature nodes (default 4096)");
  app.add_option("--family", opts.family,
                 "cost family name for cost/variance, row filter for fit");
  app.add_option("--input", opts.input, "input CSV for fit");
  app.add_option("--target", opts.target,
                 "fit row filter (required when the input mixes targets)");
  app.add_option("--model", opts.model, "fit model: powerL, expN, expGeneric");
  app.add_option("--per", opts.per,
                 "fit grouping: n (fit vs L per n), L (fit vs n per L), none");
  app.add_option("--min-L", opts.min_L,
                 "fit: smallest L used (powerL data filter; per-L summary floor)");
  app.add_option("--min-n", opts.min_n,
                 "fit: smallest n used (expN data filter; per-n summary floor)");
  app.add_option("--out", opts.out, "output CSV path (default <command>.csv)");
  app.add_option("--format", opts.format, "csv or csv+svg (default csv)");

  const char* command_names[] = {"cost",      "variance",     "fig2",
                                 "fig3-left", "fig3-right",   "grover-sweep",
                                 "qaoa-ring", "fit",          "xi-separable"};
  const char* command_help[] = {
      "Monte Carlo mean cost over a (family, n, L) grid",
      "Monte Carlo variance of the cost derivative over a grid",
      "derivative-variance traces (pure and two depolarized) vs n",
      "second moment of the slow-oracle coefficient derivative over (n, L)",
      "second moment of the exact-oracle cost derivative over (n, L)",
      "exact-oracle cost sweep over depth with argmin/min summaries",
      "best shared-angle ring cost for each (n, L)",
      "scaling-law fits of a result CSV",
      "Haar-sampled block-family gradient variance vs closed forms"};
  for (int i = 0; i < 9; ++i) {
    auto* sub = app.add_subcommand(command_names[i], command_help[i]);
    sub->fallthrough();  // options after the command bind to the main app
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "bpl: %s\n", e.what());
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const std::string out_path = opts.out.empty() ? command + ".csv" : opts.out;
  if (opts.format != "csv" && opts.format != "csv+svg") {
    std::fprintf(stderr, "bpl: --format must be csv or csv+svg\n");
    return 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = bpl::cli::run_command(command, opts);
    bpl::cli::sort_rows(result.rows);
    bpl::cli::write_csv(out_path, result.rows);
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - t0;
    bpl::cli::write_meta(out_path, command, wall.count());
    if (opts.format == "csv+svg" && result.plot.has_value())
      bpl::cli::svg::write_line_plot(svg_path_for(out_path), result.plot->spec,
                                     result.plot->series);
  } catch (const bpl::ConfigError& e) {
    std::fprintf(stderr, "bpl: %s\n", e.what());
    return 2;
  } catch (const bpl::IoError& e) {
    std::fprintf(stderr, "bpl: %s\n", e.what());
    return 3;
  } catch (const bpl::Error& e) {
    // Library-level validation that slipped past the upfront checks is still
    // a configuration problem from the user's point of view.
    std::fprintf(stderr, "bpl: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "bpl: internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
