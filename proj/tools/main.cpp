#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "report.hpp"

using weakforms::cli::RunConfig;
using weakforms::cli::UsageError;

namespace {

void add_common(CLI::App &sub, RunConfig &cfg, std::string &k_range, std::string &format) {
  sub.add_option("--p", cfg.p, "prime level p > 3")->required();
  sub.add_option("--k", cfg.k, "even weight");
  sub.add_option("--k-range", k_range, "inclusive even weight range lo:hi");
  sub.add_option("--format", format, "json, csv or pretty")->capture_default_str();
  sub.add_option("--out", cfg.out, "write the report to this file");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations with weakly holomorphic modular forms of prime level"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string k_range;
  std::string format = "json";
  std::string window;

  auto *dims = app.add_subcommand("dims", "genus, lambda_p and dimensions of M_k(p), S_k(p)");
  add_common(*dims, cfg, k_range, format);

  auto *gaps = app.add_subcommand("gaps", "gap sets of the echelon bases of M_k(p) and S_k(p)");
  add_common(*gaps, cfg, k_range, format);

  auto *basis = app.add_subcommand("basis", "canonical basis of M#_k(p) or S#_k(p)");
  add_common(*basis, cfg, k_range, format);
  basis->add_option("--space", cfg.space, "M or S")->capture_default_str();
  basis->add_option("--mmax", cfg.mmax, "largest pole order (default 10)");
  basis->add_option("--prec", cfg.prec, "precision cap, may only raise the default 20");

  auto *duality = app.add_subcommand("duality", "check a_k(m,n) = -b_{2-k}(n,m) on an index box");
  add_common(*duality, cfg, k_range, format);
  duality->add_option("--box", cfg.box, "box side length")->capture_default_str();

  auto *genfun = app.add_subcommand("genfun", "check the genus-one generating-function identities");
  add_common(*genfun, cfg, k_range, format);
  genfun->add_option("--window", window, "spans J,I past the first element (default 15,15)");
  genfun->add_option("--variant", cfg.variant, "f, g or both")->capture_default_str();

  auto *trace = app.add_subcommand("trace", "traces of Hecke operators on S_k(p)");
  add_common(*trace, cfg, k_range, format);
  trace->add_option("--count", cfg.count, "number of traces")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = weakforms::cli::parse_format(format);
    if (!k_range.empty()) {
      cfg.k_range = weakforms::cli::parse_k_range(k_range);
    }
    if (!window.empty()) {
      cfg.window = weakforms::cli::parse_window(window);
    }
    const auto doc = weakforms::cli::run(cfg);
    const std::string text = weakforms::cli::render(doc, cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.out);
      if (!f) {
        std::cerr << "cannot write " << cfg.out << "\n";
        return 2;
      }
      f << text;
    }
    return doc.at("pass").get<bool>() ? 0 : 1;
  } catch (const UsageError &e) {
    const auto subs = app.get_subcommands();
    std::cerr << "usage error: " << e.what() << "\n\n" << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }
}
