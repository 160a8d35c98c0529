#pragma once

#include "qwalk/types.hpp"

#include <span>
#include <vector>

namespace qwalk {

inline constexpr double kClusterTol = 1e-9;

/// Union-find over indices 0..n-1 with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);
  std::size_t find(std::size_t i);
  void unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Groups points of the complex plane lying near the unit circle: two values
/// closer than tol share a cluster, and clusters are closed under chaining.
/// Returns a label per value; labels are 0..K-1 in order of first appearance.
std::vector<int> cluster_labels(std::span<const Complex> values, double tol = kClusterTol);

struct EigenCluster {
  Complex value;  // member mean
  int multiplicity = 0;
};

/// Clusters ordered by label.
std::vector<EigenCluster> summarize_clusters(std::span<const Complex> values,
                                             std::span<const int> labels);

/// Sorted by multiplicity descending, then by argument in (-pi, pi].
void sort_by_multiplicity(std::vector<EigenCluster>& clusters);

}  // namespace qwalk
