#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace nek {

/// A box (x, y) in English convention: x is the row, y the column, both
/// 1-based. Boxes outside a diagram are allowed as arguments to arm/leg.
struct Box {
  int x = 1;
  int y = 1;

  auto operator<=>(const Box&) const = default;
};

/// Young diagram stored as its weakly decreasing row lengths.
class Partition {
 public:
  Partition() = default;
  /// Throws Error(InvalidArgument) unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Y(x), zero for rows past the end.
  int row(int x) const;
  /// Y^T(y), zero for columns past the first row.
  int column(int y) const;

  bool contains(Box s) const { return s.x >= 1 && s.y >= 1 && s.y <= row(s.x); }

  Partition transpose() const;

  /// Boxes in row-major order.
  std::vector<Box> boxes() const;

  std::string to_string() const;

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

int arm(const Partition& Y, Box s);
int leg(const Partition& Y, Box s);
/// arm + leg + 1; throws Error(BoxOutsideDiagram) for boxes not in Y.
int hook(const Partition& Y, Box s);

/// r-tuple of partitions.
struct MultiPartition {
  std::vector<Partition> components;

  int rank() const { return static_cast<int>(components.size()); }
  int total_size() const;
  MultiPartition transpose() const;
  std::string to_string() const;

  auto operator<=>(const MultiPartition&) const = default;
};

/// All partitions of n, lexicographically descending: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int n);

/// All r-tuples of total size n. The first component runs over sizes n..0,
/// each block in the order of enumerate_partitions, recursively.
std::vector<MultiPartition> enumerate_tuples(int r, int n);

struct RemovedBox {
  MultiPartition rest;
  Box box;
  int component = 0;  // 0-based index of the component that lost the box
};

/// Removes box (l, Y(l)) from the last nonempty component.
/// Throws Error(EmptyTuple) when every component is empty.
RemovedBox remove_last_box(const MultiPartition& V);

/// Inverse of remove_last_box.
MultiPartition add_box(const MultiPartition& V, int component, Box box);

}  // namespace nek
