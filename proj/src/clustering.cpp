#include "qwalk/clustering.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace qwalk {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t i) {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

void DisjointSet::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
}

std::vector<int> cluster_labels(std::span<const Complex> values, double tol) {
  const std::size_t n = values.size();
  std::vector<int> labels(n, 0);
  if (n == 0) return labels;

  // Points within tol of each other are adjacent in argument order (up to the
  // branch cut), so merging neighbours gives the same partition as comparing
  // all pairs.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::arg(values[a]) < std::arg(values[b]);
  });

  DisjointSet sets(n);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(values[order[i]] - values[order[i - 1]]) < tol) sets.unite(order[i], order[i - 1]);
  }
  // Across the branch cut the closest pair is the first and last in order.
  if (n > 1 && std::abs(values[order.front()] - values[order.back()]) < tol) {
    sets.unite(order.front(), order.back());
  }

  std::unordered_map<std::size_t, int> root_label;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [it, inserted] = root_label.try_emplace(sets.find(i), static_cast<int>(root_label.size()));
    labels[i] = it->second;
  }
  return labels;
}

std::vector<EigenCluster> summarize_clusters(std::span<const Complex> values,
                                             std::span<const int> labels) {
  int count = 0;
  for (int l : labels) count = std::max(count, l + 1);
  std::vector<EigenCluster> out(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto& c = out[static_cast<std::size_t>(labels[i])];
    c.value += values[i];
    ++c.multiplicity;
  }
  for (auto& c : out) c.value /= static_cast<double>(c.multiplicity);
  return out;
}

void sort_by_multiplicity(std::vector<EigenCluster>& clusters) {
  std::stable_sort(clusters.begin(), clusters.end(), [](const EigenCluster& a, const EigenCluster& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return std::arg(a.value) < std::arg(b.value);
  });
}

}  // namespace qwalk
