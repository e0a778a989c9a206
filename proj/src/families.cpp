#include "rnls/families.hpp"

#include <cmath>
#include <stdexcept>

namespace rnls {

namespace {

// C-infinity bump, value 1 at y = 0, support |y| < 1.
double mollifier(double y) {
  double y2 = y * y;
  if (y2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - y2));
}

}  // namespace

std::string DataFamily::name() const {
  switch (kind) {
    case Kind::Gaussian: return "gaussian";
    case Kind::Bump: return "bump";
    case Kind::Chirp: return "chirp" + std::to_string(static_cast<int>(frequency));
    case Kind::Annulus: return "annulus";
  }
  return "?";
}

Complex DataFamily::base_value(double r) const {
  switch (kind) {
    case Kind::Gaussian: {
      double x = r / width;
      return std::exp(-0.5 * x * x);
    }
    case Kind::Bump:
      return mollifier(r / 2.0);
    case Kind::Chirp:
      return std::polar(mollifier(r / 2.0), frequency * r);
    case Kind::Annulus:
      return mollifier(2.0 * r - 3.0);
  }
  return 0.0;
}

RadialProfile DataFamily::sample(const std::shared_ptr<const RadialGrid>& grid, double mu) const {
  if (!(mu > 0)) throw std::invalid_argument("dilation must be positive");
  RadialProfile out(grid);
  for (Eigen::Index j = 0; j < grid->size(); ++j) out.values(j) = base_value(grid->r(j) / mu);
  return out;
}

DataFamily parse_family(const std::string& name) {
  if (name == "gaussian") return {DataFamily::Kind::Gaussian, 1.0, 0.0};
  if (name == "bump") return {DataFamily::Kind::Bump, 1.0, 0.0};
  if (name == "annulus") return {DataFamily::Kind::Annulus, 1.0, 0.0};
  if (name.rfind("chirp", 0) == 0) {
    double k = name.size() > 5 ? std::stod(name.substr(5)) : 4.0;
    return {DataFamily::Kind::Chirp, 1.0, k};
  }
  throw std::invalid_argument("unknown data family '" + name + "'");
}

std::vector<DataFamily> standard_families() {
  return {
      {DataFamily::Kind::Gaussian, 1.0, 0.0},
      {DataFamily::Kind::Bump, 1.0, 0.0},
      {DataFamily::Kind::Chirp, 1.0, 4.0},
      {DataFamily::Kind::Chirp, 1.0, 16.0},
      {DataFamily::Kind::Annulus, 1.0, 0.0},
  };
}

std::vector<double> standard_dilations() {
  std::vector<double> mus;
  for (int k = -4; k <= 4; ++k) mus.push_back(std::pow(4.0, 0.25 * k));
  return mus;
}

}  // namespace rnls
