#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace refrig::detail {

// Union-find that also tracks the Z/2Z potential of each element relative to its
// root, so that merging along a gain detects odd (rho-nontrivial) cycles.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), size_(n, 1), odd_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    std::uint8_t p = 0;
    std::uint32_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // path compression with parity fix-up
    std::uint8_t acc = p;
    while (parent_[x] != r) {
      const std::uint32_t next = parent_[x];
      const std::uint8_t px = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return r;
  }

  std::uint8_t parity(std::uint32_t x) {
    find(x);
    return parent_[x] == x ? 0 : parity_[x];
  }

  // Returns true if the edge joined two components.
  bool unite(std::uint32_t a, std::uint32_t b, std::uint8_t gain) {
    const std::uint32_t ra = find(a), rb = find(b);
    const std::uint8_t pa = parity(a), pb = parity(b);
    if (ra == rb) {
      if ((pa ^ pb) != gain) odd_[ra] = 1;
      return false;
    }
    std::uint32_t big = ra, small = rb;
    if (size_[big] < size_[small]) std::swap(big, small);
    parent_[small] = big;
    parity_[small] = pa ^ pb ^ gain;
    size_[big] += size_[small];
    odd_[big] |= odd_[small];
    return true;
  }

  bool nontrivial(std::uint32_t x) { return odd_[find(x)] != 0; }
  std::uint32_t component_size(std::uint32_t x) { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint8_t> odd_;
};

}  // namespace refrig::detail
