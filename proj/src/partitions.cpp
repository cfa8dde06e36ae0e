#include "nek/partitions.hpp"

#include <numeric>
#include <sstream>

#include "nek/common.hpp"

namespace nek {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::InvalidArgument,
                  "partition parts must be positive and weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row(int x) const {
  return (x >= 1 && x <= length()) ? parts_[x - 1] : 0;
}

int Partition::column(int y) const {
  if (y < 1) return 0;
  int count = 0;
  for (int p : parts_) {
    if (p < y) break;
    ++count;
  }
  return count;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  const int width = parts_.empty() ? 0 : parts_.front();
  t.reserve(width);
  for (int y = 1; y <= width; ++y) t.push_back(column(y));
  return Partition(std::move(t));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int x = 1; x <= length(); ++x)
    for (int y = 1; y <= parts_[x - 1]; ++y) out.push_back({x, y});
  return out;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

int arm(const Partition& Y, Box s) { return Y.row(s.x) - s.y; }

int leg(const Partition& Y, Box s) { return Y.column(s.y) - s.x; }

int hook(const Partition& Y, Box s) {
  if (!Y.contains(s)) {
    throw Error(ErrorKind::BoxOutsideDiagram,
                "box (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                    ") is not in " + Y.to_string());
  }
  return arm(Y, s) + leg(Y, s) + 1;
}

int MultiPartition::total_size() const {
  int n = 0;
  for (const auto& Y : components) n += Y.size();
  return n;
}

MultiPartition MultiPartition::transpose() const {
  MultiPartition out;
  out.components.reserve(components.size());
  for (const auto& Y : components) out.components.push_back(Y.transpose());
  return out;
}

std::string MultiPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += ",";
    s += components[i].to_string();
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

void tuples_rec(int r, int n, const std::vector<std::vector<Partition>>& table,
                std::vector<Partition>& prefix, std::vector<MultiPartition>& out) {
  if (static_cast<int>(prefix.size()) == r - 1) {
    for (const auto& Y : table[n]) {
      prefix.push_back(Y);
      out.push_back(MultiPartition{prefix});
      prefix.pop_back();
    }
    return;
  }
  for (int k = n; k >= 0; --k) {
    for (const auto& Y : table[k]) {
      prefix.push_back(Y);
      tuples_rec(r, n - k, table, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<MultiPartition> enumerate_tuples(int r, int n) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  std::vector<std::vector<Partition>> table;
  table.reserve(n + 1);
  for (int k = 0; k <= n; ++k) table.push_back(enumerate_partitions(k));
  std::vector<MultiPartition> out;
  std::vector<Partition> prefix;
  tuples_rec(r, n, table, prefix, out);
  return out;
}

RemovedBox remove_last_box(const MultiPartition& V) {
  for (int c = V.rank() - 1; c >= 0; --c) {
    const Partition& Y = V.components[c];
    if (Y.empty()) continue;
    const int l = Y.length();
    const Box box{l, Y.row(l)};
    std::vector<int> parts(Y.parts().begin(), Y.parts().end());
    if (--parts.back() == 0) parts.pop_back();
    RemovedBox out{V, box, c};
    out.rest.components[c] = Partition(std::move(parts));
    return out;
  }
  throw Error(ErrorKind::EmptyTuple, "cannot remove a box: all components are empty");
}

MultiPartition add_box(const MultiPartition& V, int component, Box box) {
  if (component < 0 || component >= V.rank())
    throw Error(ErrorKind::InvalidArgument, "component index out of range");
  const Partition& Y = V.components[component];
  std::vector<int> parts(Y.parts().begin(), Y.parts().end());
  if (box.x == Y.length() + 1 && box.y == 1) {
    parts.push_back(1);
  } else if (box.x >= 1 && box.x <= Y.length() && box.y == Y.row(box.x) + 1) {
    ++parts[box.x - 1];
  } else {
    throw Error(ErrorKind::InvalidArgument, "box is not addable");
  }
  MultiPartition out = V;
  out.components[component] = Partition(std::move(parts));  // validates shape
  return out;
}

}  // namespace nek
