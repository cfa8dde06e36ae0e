#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "nek/common.hpp"
#include "nek/partitions.hpp"

using nek::Box;
using nek::MultiPartition;
using nek::Partition;

namespace {

// Partition numbers from the generating-function convolution prod 1/(1-x^k).
std::vector<long> partition_numbers(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  return p;
}

// All r-tuples of partitions of size <= n, filtered to total size n.
std::set<MultiPartition> brute_tuples(int r, int n) {
  std::vector<Partition> pool;
  for (int k = 0; k <= n; ++k)
    for (const auto& Y : nek::enumerate_partitions(k)) pool.push_back(Y);
  std::set<MultiPartition> out;
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    MultiPartition V;
    for (auto i : idx) V.components.push_back(pool[i]);
    if (V.total_size() == n) out.insert(V);
    int d = 0;
    while (d < r && ++idx[d] == pool.size()) idx[d++] = 0;
    if (d == r) break;
  }
  return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("enumerate_partitions") {
  CHECK(nek::enumerate_partitions(0).size() == 1);
  CHECK(nek::enumerate_partitions(0)[0].empty());
  const auto three = nek::enumerate_partitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Partition{3});
  CHECK(three[1] == Partition{2, 1});
  CHECK(three[2] == Partition{1, 1, 1});
  const auto p = partition_numbers(12);
  for (int n = 0; n <= 12; ++n) {
    const auto list = nek::enumerate_partitions(n);
    CHECK(static_cast<long>(list.size()) == p[n]);
    for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i] < list[i - 1]);
  }
  CHECK(nek::enumerate_partitions(10).size() == 42);
}

TEST_CASE("enumerate_tuples") {
  const auto r1 = nek::enumerate_tuples(1, 2);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].components[0] == Partition{2});
  CHECK(r1[1].components[0] == Partition{1, 1});

  const auto r2 = nek::enumerate_tuples(2, 2);
  REQUIRE(r2.size() == 5);
  CHECK(r2[0] == MultiPartition{{Partition{2}, Partition{}}});
  CHECK(r2[1] == MultiPartition{{Partition{1, 1}, Partition{}}});
  CHECK(r2[2] == MultiPartition{{Partition{1}, Partition{1}}});
  CHECK(r2[3] == MultiPartition{{Partition{}, Partition{2}}});
  CHECK(r2[4] == MultiPartition{{Partition{}, Partition{1, 1}}});

  const auto p = partition_numbers(5);
  long conv = 0;
  for (int k = 0; k <= 5; ++k) conv += p[k] * p[5 - k];
  CHECK(static_cast<long>(nek::enumerate_tuples(2, 5).size()) == conv);

  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= (r == 3 ? 5 : 8); ++n) {
      const auto list = nek::enumerate_tuples(r, n);
      const std::set<MultiPartition> unique(list.begin(), list.end());
      CHECK(unique.size() == list.size());
      CHECK(unique == brute_tuples(r, n));
    }
  }
  CHECK_THROWS_AS(nek::enumerate_tuples(0, 1), nek::Error);
}

TEST_CASE("arm and leg") {
  const Partition Y{5, 3, 2};
  CHECK(nek::arm(Y, {1, 2}) == 3);
  CHECK(nek::arm(Y, {3, 2}) == 0);
  CHECK(nek::arm(Y, {4, 1}) == -1);
  CHECK(nek::leg(Y, {1, 2}) == 2);
  CHECK(nek::leg(Y, {1, 5}) == 0);
  CHECK(nek::leg(Partition{}, {1, 1}) == -1);
}

TEST_CASE("transpose") {
  CHECK(Partition{5, 3, 2}.transpose() == Partition{3, 3, 2, 1, 1});
  CHECK(Partition{}.transpose() == Partition{});
  CHECK(Partition{1, 1, 1}.transpose() == Partition{3});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& Y : nek::enumerate_partitions(n)) {
      const Partition T = Y.transpose();
      CHECK(T.transpose() == Y);
      CHECK(T.size() == Y.size());
      for (int x = 1; x <= Y.length() + 1; ++x)
        for (int y = 1; y <= Y.row(1) + 1; ++y) CHECK(nek::arm(Y, {x, y}) == nek::leg(T, {y, x}));
    }
  }
}

TEST_CASE("hook") {
  CHECK(nek::hook(Partition{1}, {1, 1}) == 1);
  CHECK(nek::hook(Partition{2, 1}, {1, 1}) == 3);
  CHECK_THROWS_AS(nek::hook(Partition{2, 1}, {2, 2}), nek::Error);

  // Hook product of (5,3,2) counted box by box from the diagram picture.
  long direct = 1;
  const Partition Y{5, 3, 2};
  for (const Box s : Y.boxes()) {
    int right = 0;
    while (Y.contains({s.x, s.y + right + 1})) ++right;
    int below = 0;
    while (Y.contains({s.x + below + 1, s.y})) ++below;
    direct *= right + below + 1;
  }
  long product = 1;
  for (const Box s : Y.boxes()) product *= nek::hook(Y, s);
  CHECK(product == direct);
  CHECK(product == 8064);

  // Sum of squared standard-tableau counts equals n!, tableaux counted by
  // removing corners recursively.
  std::map<std::vector<int>, long> tableaux;
  std::function<long(const Partition&)> count = [&](const Partition& P) -> long {
    if (P.size() <= 1) return 1;
    std::vector<int> key(P.parts().begin(), P.parts().end());
    if (auto it = tableaux.find(key); it != tableaux.end()) return it->second;
    long total = 0;
    for (int x = 1; x <= P.length(); ++x) {
      if (P.row(x) > P.row(x + 1)) {
        std::vector<int> parts = key;
        if (--parts[x - 1] == 0) parts.pop_back();
        total += count(Partition(parts));
      }
    }
    return tableaux[key] = total;
  };
  for (int n = 1; n <= 6; ++n) {
    long sum = 0;
    for (const auto& P : nek::enumerate_partitions(n)) {
      long hooks = 1;
      for (const Box s : P.boxes()) hooks *= nek::hook(P, s);
      CHECK(factorial(n) / hooks == count(P));
      sum += count(P) * count(P);
      for (const Box s : P.boxes()) {
        CHECK(nek::arm(P, s) >= 0);
        CHECK(nek::leg(P, s) >= 0);
      }
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("remove_last_box") {
  auto r = nek::remove_last_box(MultiPartition{{Partition{2, 1}}});
  CHECK(r.rest == MultiPartition{{Partition{2}}});
  CHECK(r.box == Box{2, 1});
  CHECK(r.component == 0);

  r = nek::remove_last_box(MultiPartition{{Partition{1}, Partition{1}}});
  CHECK(r.rest == MultiPartition{{Partition{1}, Partition{}}});
  CHECK(r.box == Box{1, 1});
  CHECK(r.component == 1);

  r = nek::remove_last_box(MultiPartition{{Partition{3, 3}}});
  CHECK(r.rest == MultiPartition{{Partition{3, 2}}});
  CHECK(r.box == Box{2, 3});

  r = nek::remove_last_box(MultiPartition{{Partition{2}, Partition{}}});
  CHECK(r.component == 0);

  CHECK_THROWS_AS(nek::remove_last_box(MultiPartition{{Partition{}, Partition{}}}), nek::Error);

  for (int n = 1; n <= 6; ++n) {
    for (const auto& V : nek::enumerate_tuples(2, n)) {
      const auto removed = nek::remove_last_box(V);
      CHECK(removed.rest.total_size() == n - 1);
      CHECK(nek::add_box(removed.rest, removed.component, removed.box) == V);
    }
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), nek::Error);
  CHECK_THROWS_AS(Partition({2, 0}), nek::Error);
}
