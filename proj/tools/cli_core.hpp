#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bergman/bounds.hpp"
#include "bergman/conformal.hpp"

namespace bergman::cli {

enum class Format { table, csv, json };
Format parse_format(const std::string& name);

/// "a" -> {a};  "a:b:s" -> inclusive grid a, a+s, ..., b.  A grid whose stop
/// precedes its start is empty, not an error; a nonpositive step is.
std::vector<double> parse_alpha_grid(const std::string& spec);

struct DomainSpec {
  std::string id;
  ConformalDomain domain;
};

/// "disk" and "example1" are built in; anything else is read as a
/// coefficient file.  Constructing the domain runs the map sanity checks.
DomainSpec resolve_domain(const std::string& name_or_path, int samples = 4096);

/// Shortest-width exact decimal round trip for doubles.
std::string fmt17(double x);

std::string csv_header();
std::string csv_row(const BoundReport& r);

int run_bound(std::ostream& os, const DomainSpec& d, const std::vector<double>& alphas,
              int dim, int samples, Format format);
int run_rigidity(std::ostream& os, const DomainSpec& d, const std::vector<double>& alphas,
                 bool fd, int grid, double tol, Format format);
int run_example1(std::ostream& os);
int run_sweep(std::ostream& os, const DomainSpec& d, const std::vector<double>& alphas,
              int dim, int samples, Format format);
int run_dirichlet(std::ostream& os, const DomainSpec* d, const std::vector<Complex>* polygon,
                  int grid, double tol, Format format);
int run_verify(std::ostream& os, bool fd, int dim, int grid, double tol);

}  // namespace bergman::cli
