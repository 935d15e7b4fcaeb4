#include "trigspline/grid.hpp"

#include <cmath>
#include <string>

#include "detail/sum_util.hpp"

namespace trigspline {

UniformGrid::UniformGrid(int n_nodes, int variant) : n_(n_nodes), variant_(variant) {
  if (variant != 0 && variant != 1)
    fail(errc::invalid_argument, "grid variant must be 0 or 1, got " + std::to_string(variant));
  if (n_nodes < 3 || n_nodes % 2 == 0)
    fail(errc::invalid_grid,
         "grid size must be odd and at least 3, got " + std::to_string(n_nodes));
  nodes_.resize(static_cast<size_t>(n_nodes));
  for (int j = 0; j < n_nodes; ++j) {
    // Keep these exact expressions in sync with the quadrature nodes in
    // oracle.cpp; Bessel-vs-rectangle equality is bit-for-bit.
    nodes_[static_cast<size_t>(j)] = variant == 0
                                         ? (detail::kTwoPi * j) / n_nodes
                                         : (detail::kPi * (2 * j + 1)) / n_nodes;
  }
}

UniformGrid build_grid(int n_nodes, int variant) { return UniformGrid(n_nodes, variant); }

SampleSet::SampleSet(UniformGrid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.size())
    fail(errc::incompatible, "expected " + std::to_string(grid.size()) + " values, got " +
                                 std::to_string(values.size()));
  for (size_t j = 0; j < values.size(); ++j) {
    if (!std::isfinite(values[j]))
      fail(errc::invalid_argument, "sample value at index " + std::to_string(j) + " is not finite");
  }
}

SampleSet sample_function(const UniformGrid& grid, const std::function<double(double)>& f) {
  std::vector<double> values(static_cast<size_t>(grid.size()));
  for (int j = 0; j < grid.size(); ++j) {
    double v = f(grid.node(j));
    if (!std::isfinite(v))
      fail(errc::sampling_error,
           "function value at node x = " + std::to_string(grid.node(j)) + " (index " +
               std::to_string(j) + ") is not finite");
    values[static_cast<size_t>(j)] = v;
  }
  return SampleSet(grid, std::move(values));
}

}  // namespace trigspline
