#pragma once

// Exact maximum class-A size of a two-level UEP code for tiny n, by
// branch and bound. Used as a ground-truth oracle for the bounds.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "uep/count.hpp"
#include "uep/error.hpp"
#include "uep/params.hpp"
#include "uep/space.hpp"

namespace uep {

struct ExhaustiveLimits {
  unsigned max_n = 14;
  std::size_t max_B = 8;
};

namespace detail {

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(unsigned n, std::size_t B, unsigned dA, unsigned dB)
      : n_(n), size_(std::size_t{1} << n), blocks_(std::max<std::size_t>(1, size_ / 64)), B_(B), dA_(dA), dB_(dB) {
    // near_[x] = points at distance < d from x (x included); far sets are complements.
    nearA_.assign(size_ * blocks_, 0);
    nearB_.assign(size_ * blocks_, 0);
    const auto offA = weight_offsets(n, dA - 1);
    const auto offB = weight_offsets(n, dB - 1);
    for (std::size_t x = 0; x < size_; ++x) {
      for (Point o : offA) set_bit(&nearA_[x * blocks_], static_cast<Point>(x) ^ o);
      for (Point o : offB) set_bit(&nearB_[x * blocks_], static_cast<Point>(x) ^ o);
    }
  }

  std::size_t run() {
    Bits all(blocks_, 0);
    for (std::size_t x = 0; x < size_; ++x) set_bit(all.data(), static_cast<Point>(x));
    best_ = 0;
    // Translation invariance: some group contains 0 and, ordering groups by
    // their smallest word, it comes first.
    place_group(all, 0, 0, /*first=*/true);
    return best_;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  static void set_bit(std::uint64_t* b, Point p) { b[p >> 6] |= std::uint64_t{1} << (p & 63); }
  static bool test_bit(const std::uint64_t* b, Point p) { return (b[p >> 6] >> (p & 63)) & 1U; }
  static void clear_bit(std::uint64_t* b, Point p) { b[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }

  std::size_t popcount(const Bits& b) const {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Points >= from.
  void keep_from(Bits& b, std::size_t from) const {
    const std::size_t blk = from >> 6;
    for (std::size_t i = 0; i < blk && i < blocks_; ++i) b[i] = 0;
    if (blk < blocks_) b[blk] &= ~std::uint64_t{0} << (from & 63);
  }

  std::size_t next(const Bits& b, std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t blk = from >> 6;
    std::uint64_t w = b[blk] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return std::min(size_, (blk << 6) + static_cast<std::size_t>(std::countr_zero(w)));
      if (++blk == blocks_) return size_;
      w = b[blk];
    }
  }

  // Clique cover of the "closer than dA" graph: an upper bound on how many
  // points of R are pairwise >= dA apart, hence on the groups R can host.
  std::size_t group_bound(const Bits& R) const {
    const std::size_t by_size = popcount(R) / B_;
    Bits uncolored = R;
    Bits q(blocks_);
    std::size_t colors = 0;
    for (std::size_t v = next(uncolored, 0); v < size_; v = next(uncolored, 0)) {
      if (++colors > by_size) return by_size;
      q = uncolored;
      for (std::size_t u = v; u < size_; u = next(q, u + 1)) {
        clear_bit(uncolored.data(), static_cast<Point>(u));
        const std::uint64_t* near = &nearA_[u * blocks_];
        for (std::size_t i = 0; i < blocks_; ++i) q[i] &= near[i];
      }
    }
    return std::min(colors, by_size);
  }

  // R: points still admissible for groups whose smallest word is >= the
  // current candidate. k: groups placed so far.
  void place_group(const Bits& R, std::size_t k, std::size_t from, bool first) {
    if (k > best_) best_ = k;
    if (k + group_bound(R) <= best_) return;
    Bits tail = R;
    keep_from(tail, from);
    for (std::size_t w = next(tail, from); w < size_; w = next(tail, w + 1)) {
      if (k + group_bound(tail) <= best_) return;
      clear_bit(tail.data(), static_cast<Point>(w));  // later groups start above w
      Bits cand = tail;
      const std::uint64_t* nearB = &nearB_[w * blocks_];
      for (std::size_t i = 0; i < blocks_; ++i) cand[i] &= ~nearB[i];
      std::vector<Point> group{static_cast<Point>(w)};
      complete_group(tail, cand, group, k, first);
      if (first) return;
    }
  }

  // Adds members (ascending) until the group has B words pairwise >= dB.
  void complete_group(const Bits& tail, const Bits& cand, std::vector<Point>& group, std::size_t k, bool first) {
    if (group.size() == B_) {
      Bits R = tail;
      for (Point g : group) {
        const std::uint64_t* near = &nearA_[g * blocks_];
        for (std::size_t i = 0; i < blocks_; ++i) R[i] &= ~near[i];
      }
      place_group(R, k + 1, group.front() + 1, false);
      return;
    }
    if (first && group.size() == 1) {
      // Coordinate permutations fix 0: the lightest other word of the first
      // group may be taken as 0...01...1, which is then its second-smallest word.
      for (unsigned wt = dB_; wt <= n_; ++wt) {
        const Point x = (Point{1} << wt) - 1;
        if (!test_bit(cand.data(), x)) continue;
        extend(tail, cand, group, x, k, first);
      }
      return;
    }
    const std::size_t start = group.size() == 1 ? group.front() + 1 : group.back() + 1;
    for (std::size_t y = next(cand, start); y < size_; y = next(cand, y + 1))
      extend(tail, cand, group, static_cast<Point>(y), k, first);
  }

  void extend(const Bits& tail, const Bits& cand, std::vector<Point>& group, Point y, std::size_t k, bool first) {
    Bits narrowed = cand;
    const std::uint64_t* near = &nearB_[y * blocks_];
    for (std::size_t i = 0; i < blocks_; ++i) narrowed[i] &= ~near[i];
    group.push_back(y);
    complete_group(tail, narrowed, group, k, first);
    group.pop_back();
  }

  unsigned n_;
  std::size_t size_;
  std::size_t blocks_;
  std::size_t B_;
  unsigned dA_;
  unsigned dB_;
  std::vector<std::uint64_t> nearA_;
  std::vector<std::uint64_t> nearB_;
  std::size_t best_ = 0;
};

}  // namespace detail

/// Largest A for which an (n, A, B, dA, dB)-UEP code exists.
inline Count exhaustive_optimum(const TwoLevelParams& p, ExhaustiveLimits limits = {}) {
  p.validate();
  if (p.n > limits.max_n || p.n > 20) fail(ErrorKind::kCapExceeded, "exhaustive_optimum: n over cap");
  if (p.B > Count(limits.max_B) || p.B > Count(std::size_t{1} << p.n))
    fail(ErrorKind::kCapExceeded, "exhaustive_optimum: B over cap");
  const auto B = p.B.convert_to<std::size_t>();
  const unsigned dA = std::min(p.dA, p.n + 1);
  const unsigned dB = std::min(p.dB, p.n + 1);
  return Count(detail::ExhaustiveSearch(p.n, B, dA, dB).run());
}

}  // namespace uep
