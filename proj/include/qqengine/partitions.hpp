#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qq {

struct Cell {
  int row = 0;
  int col = 0;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  // parts[k], or 0 past the end
  int part(int k) const;

  bool hasCell(const Cell& c) const;
  std::vector<Cell> cells() const;

  std::string str() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

using PartitionTuple = std::vector<Partition>;

Partition conjugate(const Partition& l);
int arm(const Partition& l, const Cell& c);
int leg(const Partition& l, const Cell& c);
int normSq(const Partition& l);
int kappa(const Partition& l);
bool contains(const Partition& mu, const Partition& lam);

// partitions of n, descending lexicographic
std::vector<Partition> enumerate(int n);
// partitions of every size 0..maxSize, grouped by size
std::vector<Partition> enumerateUpTo(int maxSize);
// r-tuples of total size n
std::vector<PartitionTuple> tuples(int r, int n);
int tupleSize(const PartitionTuple& t);

}  // namespace qq
