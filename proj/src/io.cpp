#include "bergman/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bergman {

namespace {

std::vector<Complex> read_pairs(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string(what) + ": cannot open " + path);
  std::vector<Complex> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double re = 0.0, im = 0.0;
    if (ss >> re) {
      std::string extra;
      if (!(ss >> im) || (ss >> extra))
        throw std::invalid_argument(std::string(what) + ": line " + std::to_string(lineno) +
                                    " of " + path + " must hold exactly two numbers");
      out.emplace_back(re, im);
    } else if (line.find_first_not_of(" \t\r\n\f\v") != std::string::npos) {
      throw std::invalid_argument(std::string(what) + ": malformed line " +
                                  std::to_string(lineno) + " of " + path);
    }
  }
  return out;
}

}  // namespace

PowerSeries read_coefficient_file(const std::string& path) {
  std::vector<Complex> c = read_pairs(path, "read_coefficient_file");
  if (c.empty())
    throw std::invalid_argument("read_coefficient_file: no coefficients in " + path);
  return PowerSeries(std::move(c));
}

std::vector<Complex> read_polygon_file(const std::string& path) {
  std::vector<Complex> v = read_pairs(path, "read_polygon_file");
  if (v.size() < 3)
    throw std::invalid_argument("read_polygon_file: need at least three vertices in " + path);
  return v;
}

}  // namespace bergman
