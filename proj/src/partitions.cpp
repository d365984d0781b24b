#include "qqengine/partitions.hpp"

#include <stdexcept>

namespace qq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int k) const { return k < length() ? parts_[k] : 0; }

bool Partition::hasCell(const Cell& c) const {
  return c.row >= 0 && c.col >= 0 && c.row < length() && c.col < parts_[c.row];
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back({i, j});
  return out;
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + "]";
}

Partition conjugate(const Partition& l) {
  std::vector<int> out;
  if (l.empty()) return {};
  for (int j = 0; j < l.part(0); ++j) {
    int c = 0;
    while (c < l.length() && l.part(c) > j) ++c;
    out.push_back(c);
  }
  return Partition(out);
}

int arm(const Partition& l, const Cell& c) {
  if (!l.hasCell(c)) throw std::invalid_argument("cell not in partition");
  return l.part(c.row) - (c.col + 1);
}

int leg(const Partition& l, const Cell& c) {
  if (!l.hasCell(c)) throw std::invalid_argument("cell not in partition");
  return conjugate(l).part(c.col) - (c.row + 1);
}

int normSq(const Partition& l) {
  int s = 0;
  for (int p : l.parts()) s += p * p;
  return s;
}

int kappa(const Partition& l) { return normSq(l) - normSq(conjugate(l)); }

bool contains(const Partition& mu, const Partition& lam) {
  if (mu.length() > lam.length()) return false;
  for (int k = 0; k < mu.length(); ++k)
    if (mu.part(k) > lam.part(k)) return false;
  return true;
}

namespace {
void gen(int n, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, maxPart); k >= 1; --k) {
    cur.push_back(k);
    gen(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  return out;
}

std::vector<Partition> enumerateUpTo(int maxSize) {
  std::vector<Partition> out;
  for (int n = 0; n <= maxSize; ++n) {
    auto ps = enumerate(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<PartitionTuple> tuples(int r, int n) {
  if (r < 1) throw std::invalid_argument("tuples: rank must be positive");
  if (n < 0) throw std::invalid_argument("tuples: negative size");
  std::vector<PartitionTuple> out;
  if (r == 1) {
    for (auto& p : enumerate(n)) out.push_back({p});
    return out;
  }
  for (int k = n; k >= 0; --k)
    for (auto& head : enumerate(k))
      for (auto& rest : tuples(r - 1, n - k)) {
        PartitionTuple t{head};
        t.insert(t.end(), rest.begin(), rest.end());
        out.push_back(std::move(t));
      }
  return out;
}

int tupleSize(const PartitionTuple& t) {
  int s = 0;
  for (auto& p : t) s += p.size();
  return s;
}

}  // namespace qq
