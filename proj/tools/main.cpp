#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bergman/errors.hpp"
#include "bergman/io.hpp"
#include "cli_core.hpp"

namespace {

struct Options {
  std::string domain = "disk";
  std::string alpha = "0";
  int dim = 64;
  int samples = 4096;
  std::string out;
  std::string format;
  bool fd = false;
  double tol = 1e-7;
  int grid = 400;
  std::string polygon;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--domain", o.domain, "builtin domain (disk|example1) or coefficient file");
  cmd->add_option("--alpha", o.alpha, "weight parameter, single value a or grid a:b:s");
  cmd->add_option("--dim", o.dim, "compression dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", o.samples, "boundary sample count");
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  cmd->add_flag("--fd", o.fd, "run the finite-difference cross-check");
  cmd->add_option("--tol", o.tol, "iteration stop tolerance");
  cmd->add_option("--grid", o.grid, "finite-difference resolution, h = diameter/N")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--polygon", o.polygon, "polygon vertex file (dirichlet only)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel operator norms and geometric bounds on weighted Bergman spaces"};
  app.require_subcommand(1);
  Options o;
  CLI::App* c_bound = app.add_subcommand("bound", "bound chain for one domain across weights");
  CLI::App* c_rigidity = app.add_subcommand("rigidity", "torsional rigidity and its ratio bound");
  CLI::App* c_example1 = app.add_subcommand("example1", "regression of the worked cardioid-like domain");
  CLI::App* c_sweep = app.add_subcommand("sweep", "bound chain over a weight grid, CSV-first");
  CLI::App* c_dirichlet = app.add_subcommand("dirichlet", "finite-difference torsion solve");
  CLI::App* c_verify = app.add_subcommand("verify", "run the full property battery");
  for (CLI::App* c : {c_bound, c_rigidity, c_example1, c_sweep, c_dirichlet, c_verify})
    add_common(c, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::ofstream file;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file) throw std::invalid_argument("cannot open output file: " + o.out);
    }
    std::ostream& os = o.out.empty() ? std::cout : file;

    using namespace bergman;
    using namespace bergman::cli;
    if (app.got_subcommand(c_example1)) return run_example1(os);
    if (app.got_subcommand(c_verify)) return run_verify(os, o.fd, o.dim, o.grid, o.tol);

    const std::vector<double> alphas = parse_alpha_grid(o.alpha);
    if (app.got_subcommand(c_bound)) {
      const DomainSpec d = resolve_domain(o.domain, o.samples);
      return run_bound(os, d, alphas, o.dim, o.samples,
                       o.format.empty() ? Format::table : parse_format(o.format));
    }
    if (app.got_subcommand(c_sweep)) {
      const DomainSpec d = resolve_domain(o.domain, o.samples);
      return run_sweep(os, d, alphas, o.dim, o.samples,
                       o.format.empty() ? Format::csv : parse_format(o.format));
    }
    if (app.got_subcommand(c_rigidity)) {
      const DomainSpec d = resolve_domain(o.domain, o.samples);
      return run_rigidity(os, d, alphas, o.fd, o.grid, o.tol,
                          o.format.empty() ? Format::table : parse_format(o.format));
    }
    // dirichlet
    const Format fmt = o.format.empty() ? Format::table : parse_format(o.format);
    if (!o.polygon.empty()) {
      const std::vector<Complex> poly = read_polygon_file(o.polygon);
      return run_dirichlet(os, nullptr, &poly, o.grid, o.tol, fmt);
    }
    const DomainSpec d = resolve_domain(o.domain, o.samples);
    return run_dirichlet(os, &d, nullptr, o.grid, o.tol, fmt);
  } catch (const bergman::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
