#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace logpot {

// Uniform midpoint grid on [lo, hi]: cell i covers
// [lo + i*spacing, lo + (i+1)*spacing], node(i) is the cell centre.
struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
  double spacing = 0.0;

  double node(std::size_t i) const {
    return lo + (static_cast<double>(i) + 0.5) * spacing;
  }
  double cell_left(std::size_t i) const {
    return lo + static_cast<double>(i) * spacing;
  }
  double cell_right(std::size_t i) const {
    return lo + static_cast<double>(i + 1) * spacing;
  }
  std::vector<double> nodes() const;

  bool operator==(const Grid&) const = default;
};

Grid make_grid(double lo, double hi, std::size_t n);

// Index range [first, last) of the central `fraction` of cells; transforms
// are trusted only there (truncation pollutes the grid edges).
std::pair<std::size_t, std::size_t> interior_window(const Grid& g,
                                                    double fraction = 0.8);

// A real-valued function tabulated on the nodes of a grid.
struct Samples {
  Grid grid;
  std::vector<double> values;

  Samples() = default;
  Samples(Grid g, std::vector<double> v);
};

Samples zero_samples(const Grid& g);

// Trapezoid rule over the node polyline.
double integrate(const Samples& f);

// Nonnegative density per cell (units 1/length) with unit total mass.
struct DiscreteMeasure {
  Grid grid;
  std::vector<double> weights;

  double total_mass() const;
};

// Scales nonnegative weights so that sum(w_i) * spacing == 1.
DiscreteMeasure normalize(std::vector<double> weights, const Grid& g);

// CSV serialization: header "x,value", one row per node, 17 significant
// digits.
void write_values_csv(const std::string& path, const Grid& g,
                      const std::vector<double>& values);
void write_csv(const std::string& path, const Samples& s);
void write_csv(const std::string& path, const DiscreteMeasure& mu);
Samples read_samples_csv(const std::string& path);

}  // namespace logpot
