#pragma once

// Explicit enumeration of F_2^n for small n. Points are integer indices
// whose high bit is coordinate 0 (see Word::from_index).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

#include "uep/error.hpp"
#include "uep/word.hpp"

namespace uep {

using Point = std::uint32_t;

/// Largest n the explicit constructions accept unless told otherwise.
inline constexpr unsigned kDefaultEnumerationCap = 24;

inline void check_enumerable(unsigned n, unsigned cap) {
  if (n == 0 || n > cap || n > 30)
    fail(ErrorKind::kCapExceeded, "n = " + std::to_string(n) + " outside explicit-enumeration cap " +
                                      std::to_string(cap));
}

inline unsigned point_distance(Point a, Point b) { return static_cast<unsigned>(std::popcount(a ^ b)); }

inline Word to_word(unsigned n, Point p) { return Word::from_index(n, p); }

inline Point to_point(const Word& w) { return static_cast<Point>(w.to_index()); }

/// All offsets of weight <= r (weight exactly r when `exact`), by weight then value.
inline std::vector<Point> weight_offsets(unsigned n, unsigned r, bool exact = false) {
  std::vector<Point> out;
  const unsigned top = r < n ? r : n;
  for (unsigned w = exact ? top : 0; w <= top; ++w) {
    if (exact && w != r) break;
    if (w == 0) {
      out.push_back(0);
      continue;
    }
    // Gosper's hack over n-bit masks of weight w.
    Point x = (Point{1} << w) - 1;
    const Point limit = Point{1} << n;
    while (x < limit) {
      out.push_back(x);
      const Point c = x & (~x + 1);
      const Point rr = x + c;
      x = (((rr ^ x) >> 2) / c) | rr;
    }
  }
  return out;
}

/// Subset of F_2^n as a bitmap.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(unsigned n, bool full = false)
      : n_(n), bits_(((std::size_t{1} << n) + 63) / 64, full ? ~std::uint64_t{0} : 0) {
    if (full) trim();
  }

  unsigned dimension() const { return n_; }
  std::size_t universe() const { return std::size_t{1} << n_; }

  bool contains(Point p) const { return (bits_[p >> 6] >> (p & 63)) & 1U; }
  void insert(Point p) { bits_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  void erase(Point p) { bits_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : bits_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }

  bool empty() const {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }

  /// Smallest member >= from, or universe() if none.
  std::size_t next(std::size_t from) const {
    if (from >= universe()) return universe();
    std::size_t block = from >> 6;
    std::uint64_t word = bits_[block] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word) return std::min(universe(), (block << 6) + static_cast<std::size_t>(std::countr_zero(word)));
      if (++block == bits_.size()) return universe();
      word = bits_[block];
    }
  }

  std::vector<Point> members() const {
    std::vector<Point> out;
    for (std::size_t p = next(0); p < universe(); p = next(p + 1)) out.push_back(static_cast<Point>(p));
    return out;
  }

  /// Remove every point of `offsets` translated by `center`.
  void erase_translate(Point center, const std::vector<Point>& offsets) {
    for (Point o : offsets) erase(center ^ o);
  }

  void insert_translate(Point center, const std::vector<Point>& offsets) {
    for (Point o : offsets) insert(center ^ o);
  }

  PointSet& operator&=(const PointSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  PointSet& operator|=(const PointSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  PointSet& subtract(const PointSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  bool intersects(const PointSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  void trim() {
    if (universe() < 64) bits_[0] &= (std::uint64_t{1} << universe()) - 1;
  }

  unsigned n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Breadth-first reachability by unit steps inside the set.
inline bool is_connected(const PointSet& set) {
  const std::size_t start = set.next(0);
  if (start >= set.universe()) return true;
  PointSet seen(set.dimension());
  std::deque<Point> queue{static_cast<Point>(start)};
  seen.insert(static_cast<Point>(start));
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Point p = queue.front();
    queue.pop_front();
    for (unsigned b = 0; b < set.dimension(); ++b) {
      const Point q = p ^ (Point{1} << b);
      if (set.contains(q) && !seen.contains(q)) {
        seen.insert(q);
        queue.push_back(q);
        ++reached;
      }
    }
  }
  return reached == set.count();
}

/// Points within distance r of the set (the set dilated by r).
inline PointSet dilate(const PointSet& set, unsigned r) {
  PointSet out = set;
  std::vector<Point> layer = set.members();
  for (unsigned step = 0; step < r && !layer.empty(); ++step) {
    std::vector<Point> nxt;
    for (Point p : layer)
      for (unsigned b = 0; b < set.dimension(); ++b) {
        const Point q = p ^ (Point{1} << b);
        if (!out.contains(q)) {
          out.insert(q);
          nxt.push_back(q);
        }
      }
    layer.swap(nxt);
  }
  return out;
}

}  // namespace uep
