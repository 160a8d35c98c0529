#include "doctest.h"

#include "qwalk/clustering.hpp"

#include <cmath>

using namespace qwalk;

TEST_CASE("disjoint set") {
  DisjointSet d(5);
  d.unite(0, 3);
  d.unite(3, 4);
  CHECK(d.find(0) == d.find(4));
  CHECK(d.find(1) != d.find(0));
  CHECK(d.find(2) != d.find(1));
}

TEST_CASE("labels in first-appearance order") {
  const std::vector<Complex> v = {Complex(1, 0), Complex(-1, 0), Complex(1, 1e-12),
                                  Complex(0, 1), Complex(-1, -1e-11)};
  const auto labels = cluster_labels(v);
  CHECK(labels == std::vector<int>{0, 1, 0, 2, 1});
  const auto clusters = summarize_clusters(v, labels);
  REQUIRE(clusters.size() == 3);
  CHECK(clusters[0].multiplicity == 2);
  CHECK(clusters[1].multiplicity == 2);
  CHECK(clusters[2].multiplicity == 1);
  CHECK(std::abs(clusters[1].value + 1.0) < 1e-11);
}

TEST_CASE("clusters across the branch cut at -1") {
  // arg just below +pi and just above -pi: adjacent on the circle.
  const std::vector<Complex> v = {std::polar(1.0, kPi - 1e-12), std::polar(1.0, -kPi + 1e-12),
                                  Complex(0, -1)};
  const auto labels = cluster_labels(v);
  CHECK(labels[0] == labels[1]);
  CHECK(labels[2] != labels[0]);
}

TEST_CASE("chaining and separation") {
  // Each neighbour within tol, ends 2.5 tol apart: one cluster.
  const double tol = 1e-9;
  const std::vector<Complex> chain = {std::polar(1.0, 0.5), std::polar(1.0, 0.5 + 0.8 * tol),
                                      std::polar(1.0, 0.5 + 1.6 * tol),
                                      std::polar(1.0, 0.5 + 2.4 * tol)};
  const auto a = cluster_labels(chain, tol);
  CHECK(a == std::vector<int>{0, 0, 0, 0});
  const std::vector<Complex> apart = {std::polar(1.0, 0.5), std::polar(1.0, 0.5 + 1e-6)};
  CHECK(cluster_labels(apart, tol) == std::vector<int>{0, 1});
}

TEST_CASE("sort by multiplicity") {
  std::vector<EigenCluster> c = {{Complex(0, 1), 1}, {Complex(1, 0), 4}, {Complex(-1, 0), 4}};
  sort_by_multiplicity(c);
  CHECK(c[0].multiplicity == 4);
  CHECK(c[2].multiplicity == 1);
  CHECK(c[0].value == Complex(1, 0));  // arg 0 before arg pi
}
