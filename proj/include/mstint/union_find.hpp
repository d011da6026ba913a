#ifndef MSTINT_UNION_FIND_HPP
#define MSTINT_UNION_FIND_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace mstint {

/// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false if x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    --sets_;
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }
  std::size_t set_count() const { return sets_; }
  std::size_t size() const { return parent_.size(); }

  /// Dense labels 0..k-1, numbered in order of each set's smallest element.
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> root_label(parent_.size(), npos);
    std::vector<std::size_t> out(parent_.size());
    std::size_t next = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      const std::size_t r = find(v);
      if (root_label[r] == npos) root_label[r] = next++;
      out[v] = root_label[r];
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

}  // namespace mstint

#endif  // MSTINT_UNION_FIND_HPP
