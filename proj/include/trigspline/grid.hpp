#pragma once

#include <functional>
#include <vector>

#include "trigspline/errors.hpp"

namespace trigspline {

// Uniform N-point grid on [0, 2pi), N = 2n+1 odd.
//
// Variant 0 places node j at 2*pi*(j-1)/N (first node at 0); variant 1 at
// pi*(2j-1)/N (shifted by half a step). The two grids interleave and share
// the spacing 2*pi/N. Nodes are stored explicitly so that every consumer
// sees bit-identical node values.
class UniformGrid {
 public:
  UniformGrid(int n_nodes, int variant);

  int size() const { return n_; }
  int variant() const { return variant_; }
  // n in N = 2n+1: the number of resolvable harmonics.
  int harmonics() const { return (n_ - 1) / 2; }
  double node(int j) const { return nodes_[static_cast<size_t>(j)]; }  // 0-based
  const std::vector<double>& nodes() const { return nodes_; }

  friend bool operator==(const UniformGrid& a, const UniformGrid& b) {
    return a.n_ == b.n_ && a.variant_ == b.variant_;
  }

 private:
  int n_;
  int variant_;
  std::vector<double> nodes_;
};

UniformGrid build_grid(int n_nodes, int variant);

// Function values bound to a grid. Values must be finite and match the
// grid size; both are checked at construction.
struct SampleSet {
  SampleSet(UniformGrid g, std::vector<double> v);

  UniformGrid grid;
  std::vector<double> values;
};

// Samples f at the grid nodes. A non-finite value raises a sampling error
// naming the offending node.
SampleSet sample_function(const UniformGrid& grid, const std::function<double(double)>& f);

}  // namespace trigspline
