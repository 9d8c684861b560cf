#pragma once

// Explicit UEP code constructions over F_2^n for enumerable n: the greedy
// multi-level construction, chained codeword selection inside connected
// sets, chained ball packings, and two-level assembly on hosting regions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "uep/bounds.hpp"
#include "uep/code.hpp"
#include "uep/combinatorics.hpp"
#include "uep/error.hpp"
#include "uep/params.hpp"
#include "uep/space.hpp"
#include "uep/word.hpp"

namespace uep {

/// Hosting region D_i for two-level assembly.
struct Region {
  enum class Kind { kExplicitSet, kCube, kBall };

  Kind kind = Kind::kExplicitSet;
  std::vector<Word> points;  // kExplicitSet
  Word prefix;               // kCube: {prefix} x F_2^(n - |prefix|)
  Word center;               // kBall
  unsigned radius = 0;       // kBall

  static Region explicit_set(std::vector<Word> pts) {
    Region r;
    r.kind = Kind::kExplicitSet;
    r.points = std::move(pts);
    return r;
  }
  static Region cube(Word prefix) {
    Region r;
    r.kind = Kind::kCube;
    r.prefix = std::move(prefix);
    return r;
  }
  static Region ball(Word center, unsigned radius) {
    Region r;
    r.kind = Kind::kBall;
    r.center = std::move(center);
    r.radius = radius;
    return r;
  }

  PointSet materialize(unsigned n) const {
    PointSet set(n);
    switch (kind) {
      case Kind::kExplicitSet:
        for (const auto& w : points) {
          require(w.size() == n, "region point has wrong length");
          set.insert(to_point(w));
        }
        break;
      case Kind::kCube: {
        require(prefix.size() <= n, "cube prefix longer than n");
        const unsigned free = n - static_cast<unsigned>(prefix.size());
        const Point base = static_cast<Point>(prefix.to_index()) << free;
        for (Point s = 0; s < (Point{1} << free); ++s) set.insert(base | s);
        break;
      }
      case Kind::kBall:
        require(center.size() == n, "ball centre has wrong length");
        set.insert_translate(to_point(center), weight_offsets(n, radius));
        break;
    }
    return set;
  }

  /// Upper bound on |B(x, r) ∩ D| over x in D, for the selection budget.
  Count local_ball_volume(unsigned n, long r) const {
    if (kind == Kind::kCube) return ball_volume(n - static_cast<unsigned>(prefix.size()), r);
    return ball_volume(n, r);
  }
};

namespace detail {

// Greedy choice of `count` points of `avail`, pairwise >= d, smallest first.
// Chosen points' radius-(d-1) balls are removed from `avail`.
inline std::optional<std::vector<Point>> greedy_pick(PointSet& avail, std::size_t count, unsigned d) {
  const auto offsets = weight_offsets(avail.dimension(), d - 1);
  std::vector<Point> chosen;
  chosen.reserve(count);
  std::size_t cursor = 0;
  while (chosen.size() < count) {
    cursor = avail.next(cursor);
    if (cursor >= avail.universe()) return std::nullopt;
    const auto p = static_cast<Point>(cursor);
    chosen.push_back(p);
    avail.erase_translate(p, offsets);
  }
  return chosen;
}

inline std::size_t to_size(const Count& c, const char* what) {
  if (c > Count(std::size_t{1} << 40)) fail(ErrorKind::kCapExceeded, std::string(what) + " too large to enumerate");
  return c.convert_to<std::size_t>();
}

}  // namespace detail

/// Greedy multi-level construction inside `region` (default: all of F_2^n).
///
/// Level l is split into message 0 and the rest. The rest gets greedily
/// chosen codewords pairwise at distance >= d_l; their radius-(d_l - 1)
/// balls are carved out and the remaining levels are built recursively for
/// message 0 in what is left. Codewords are the smallest eligible points.
/// kBestEffort skips the budget check and reports exhaustion as infeasible.
enum class BudgetCheck { kEnforce, kBestEffort };

inline UepCode greedy_multilevel(const UepParams& p, const std::optional<PointSet>& region = std::nullopt,
                                 unsigned cap = kDefaultEnumerationCap, BudgetCheck check = BudgetCheck::kEnforce) {
  p.validate();
  check_enumerable(p.n, cap);
  PointSet space = region ? *region : PointSet(p.n, true);
  require(space.dimension() == p.n, "greedy_multilevel: region dimension differs from n");
  const Count budget = multilevel_budget(p);
  if (check == BudgetCheck::kEnforce && Count(space.count()) <= budget)
    fail(ErrorKind::kInvalidArgument, "greedy_multilevel: region size " + std::to_string(space.count()) +
                                          " does not exceed budget " + budget.str());

  UepCode code;
  code.n = p.n;
  for (const auto& a : p.sizes) code.shape.push_back(detail::to_size(a, "level size"));
  const std::size_t total = shape_total(code.shape);
  require(total <= space.universe(), "greedy_multilevel: more messages than words");
  code.book.assign(total, Word(p.n));
  code.profile.assign(p.distances.begin(), p.distances.end());

  const std::size_t m = code.shape.size();
  // tail[l] = prod_{j > l} A_j
  std::vector<std::size_t> tail(m + 1, 1);
  for (std::size_t l = m; l-- > 0;) tail[l] = tail[l + 1] * code.shape[l];

  const auto exhausted = [check] {
    if (check == BudgetCheck::kBestEffort) fail(ErrorKind::kInfeasible, "greedy_multilevel: region exhausted");
    fail(ErrorKind::kInternal, "greedy_multilevel: region exhausted despite budget");
  };

  // Builds levels l..m-1 for the messages whose index prefix is `base`.
  std::function<void(std::size_t, std::size_t, PointSet&)> build = [&](std::size_t l, std::size_t base,
                                                                      PointSet& avail) {
    const std::size_t rest = (code.shape[l] - 1) * tail[l + 1];
    const unsigned d = p.distances[l];
    if (rest > 0) {
      PointSet work = avail;
      auto picked = detail::greedy_pick(work, rest, d);
      if (!picked) exhausted();
      // Messages with a_l = 1..A_l-1, in index order.
      for (std::size_t k = 0; k < rest; ++k) code.book[base + tail[l + 1] + k] = to_word(p.n, (*picked)[k]);
      const auto carve = weight_offsets(p.n, d - 1);
      for (Point c : *picked) avail.erase_translate(c, carve);
    }
    if (l + 1 < m) {
      build(l + 1, base, avail);
    } else {
      auto last = detail::greedy_pick(avail, 1, d);
      if (!last) exhausted();
      code.book[base] = to_word(p.n, last->front());
    }
  };
  build(0, 0, space);
  if (code.size() >= 2) code.profile = verify_profile(code);
  return code;
}

/// Picks B points of the connected set D pairwise at distance >= dB such that
/// every point after the first is at distance exactly dB from an earlier one.
///
/// With W the union of radius-(dB - 1) balls around the chosen points, the
/// next point is the smallest point of D \ W at minimal path distance (inside
/// D) from W ∩ D. That distance is always 1, which forces distance exactly dB
/// to some chosen point.
///
/// `local_volume` bounds |B(x, dB - 1) ∩ D|; it defaults to V(n, dB - 1).
inline std::vector<Point> connected_set_select(const PointSet& D, std::size_t B, unsigned dB,
                                               std::optional<Count> local_volume = std::nullopt) {
  const unsigned n = D.dimension();
  require(B >= 1 && dB >= 1, "connected_set_select: need B >= 1 and dB >= 1");
  if (D.empty()) fail(ErrorKind::kInvalidArgument, "connected_set_select: empty region");
  if (!is_connected(D)) fail(ErrorKind::kInvalidArgument, "connected_set_select: region is not connected");
  const Count vol = local_volume ? *local_volume : ball_volume(n, static_cast<long>(dB) - 1);
  if (Count(D.count()) <= Count(B - 1) * vol)
    fail(ErrorKind::kInvalidArgument, "connected_set_select: region too small for B codewords");

  const auto offsets = weight_offsets(n, dB - 1);
  PointSet covered(n);
  std::vector<Point> covered_in_d;
  auto take = [&](Point c, std::vector<Point>& out) {
    out.push_back(c);
    for (Point o : offsets) {
      const Point q = c ^ o;
      if (!covered.contains(q)) {
        covered.insert(q);
        if (D.contains(q)) covered_in_d.push_back(q);
      }
    }
  };

  std::vector<Point> chosen;
  take(static_cast<Point>(D.next(0)), chosen);
  while (chosen.size() < B) {
    // First breadth-first layer out of W ∩ D that leaves W, staying in D.
    std::optional<Point> best;
    for (Point y : covered_in_d)
      for (unsigned b = 0; b < n; ++b) {
        const Point x = y ^ (Point{1} << b);
        if (D.contains(x) && !covered.contains(x) && (!best || x < *best)) best = x;
      }
    if (!best) fail(ErrorKind::kInternal, "connected_set_select: no uncovered point adjacent to the cover");
    const bool chained = std::any_of(chosen.begin(), chosen.end(),
                                     [&](Point c) { return point_distance(c, *best) == dB; });
    if (!chained) fail(ErrorKind::kInternal, "connected_set_select: chain distance not exact");
    take(*best, chosen);
  }
  return chosen;
}

/// Greedy chained packing: centres pairwise >= 2r + 1 apart, each after the
/// first at distance exactly 2r + 1 from an earlier one. Starts at 0 and
/// always extends with the smallest admissible frontier point. Returns at
/// most `target` centres; fewer when the frontier runs dry.
inline std::vector<Point> chained_ball_packing(unsigned n, unsigned r, std::size_t target,
                                               unsigned cap = kDefaultEnumerationCap) {
  check_enumerable(n, cap);
  std::vector<Point> centres;
  if (target == 0) return centres;
  const auto block = weight_offsets(n, 2 * r);
  const auto shell = weight_offsets(n, 2 * r + 1, true);
  PointSet blocked(n);
  std::priority_queue<Point, std::vector<Point>, std::greater<>> frontier;

  auto place = [&](Point c) {
    centres.push_back(c);
    blocked.insert_translate(c, block);
    for (Point o : shell)
      if (!blocked.contains(c ^ o)) frontier.push(c ^ o);
  };
  place(0);
  while (centres.size() < target && !frontier.empty()) {
    const Point next = frontier.top();
    frontier.pop();
    if (!blocked.contains(next)) place(next);
  }
  return centres;
}

inline std::vector<Word> to_words(unsigned n, const std::vector<Point>& pts) {
  std::vector<Word> out;
  out.reserve(pts.size());
  for (Point p : pts) out.push_back(to_word(n, p));
  return out;
}

/// Greedy (lexicographic) code of length n and minimum distance d, taken as
/// large as the greedy allows.
inline std::vector<Point> lexicode(unsigned n, unsigned d, unsigned cap = kDefaultEnumerationCap) {
  check_enumerable(n, cap);
  PointSet avail(n, true);
  const auto offsets = weight_offsets(n, d - 1);
  std::vector<Point> out;
  for (std::size_t p = avail.next(0); p < avail.universe(); p = avail.next(p + 1)) {
    out.push_back(static_cast<Point>(p));
    avail.erase_translate(static_cast<Point>(p), offsets);
  }
  return out;
}

/// Cube regions {c} x F_2^nB for c in the length-(n - nB) lexicode at distance dA.
inline std::vector<Region> cube_regions(unsigned n, unsigned nB, unsigned dA, unsigned cap = kDefaultEnumerationCap) {
  require(nB <= n, "cube_regions: nB exceeds n");
  const unsigned nA = n - nB;
  std::vector<Region> out;
  if (nA == 0) {
    out.push_back(Region::cube(Word(0)));
    return out;
  }
  for (Point c : lexicode(nA, dA, cap)) out.push_back(Region::cube(to_word(nA, c)));
  return out;
}

/// Radius-rV balls concentric with a chained packing of radius-rS balls.
inline std::vector<Region> ball_regions(const TwoLevelParams& p, std::size_t target,
                                        unsigned cap = kDefaultEnumerationCap) {
  const PackingPlan plan = packing_plan(p);
  std::vector<Region> out;
  for (Point c : chained_ball_packing(p.n, plan.rS, target, cap))
    out.push_back(Region::ball(to_word(p.n, c), plan.rV));
  return out;
}

/// Two-level assembly: region i hosts class-A message i with B chained
/// class-B codewords; the complement of their radius-(dA - 1) balls is then
/// filled greedily, one class-A message (B codewords) at a time, until no
/// further group fits.
inline UepCode assemble_two_level(const TwoLevelParams& p, const std::vector<Region>& regions,
                                  unsigned cap = kDefaultEnumerationCap) {
  p.validate();
  check_enumerable(p.n, cap);
  const std::size_t B = detail::to_size(p.B, "B");
  require(B <= (std::size_t{1} << p.n), "assemble_two_level: B exceeds 2^n");

  std::vector<PointSet> sets;
  sets.reserve(regions.size());
  for (const auto& r : regions) sets.push_back(r.materialize(p.n));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const PointSet near = dilate(sets[i], p.dA - 1);
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (near.intersects(sets[j]))
        fail(ErrorKind::kInvalidArgument, "assemble_two_level: regions " + std::to_string(i) + " and " +
                                              std::to_string(j) + " closer than dA");
  }

  std::vector<std::vector<Point>> groups;
  for (std::size_t i = 0; i < sets.size(); ++i)
    groups.push_back(connected_set_select(sets[i], B, p.dB,
                                          regions[i].local_ball_volume(p.n, static_cast<long>(p.dB) - 1)));

  PointSet avail(p.n, true);
  const auto carve = weight_offsets(p.n, p.dA - 1);
  for (const auto& g : groups)
    for (Point c : g) avail.erase_translate(c, carve);

  while (true) {
    PointSet work = avail;
    auto g = detail::greedy_pick(work, B, p.dB);
    if (!g) break;
    for (Point c : *g) avail.erase_translate(c, carve);
    groups.push_back(std::move(*g));
  }

  UepCode code;
  code.n = p.n;
  code.shape = {groups.size(), B};
  code.profile = {p.dA, p.dB};
  for (const auto& g : groups)
    for (Point c : g) code.book.push_back(to_word(p.n, c));
  if (code.size() >= 2) code.profile = verify_profile(code);
  return code;
}

}  // namespace uep
