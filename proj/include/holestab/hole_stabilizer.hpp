#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "holestab/moves.hpp"
#include "holestab/perm_group.hpp"

namespace holestab {

/// The group of evaluations of closed walks at `hole`, acting on all n points
/// with the hole fixed.
struct HoleStabilizer {
  Point hole = 0;
  PermGroup group;
  /// Closed walk behind each generator, parallel to group.generators().
  std::vector<std::vector<Point>> generator_words;
  /// Every pair of points is collinear, so the generators are the words [hole, a, b, hole].
  bool pairwise_collinear = false;

  /// Points other than the hole.
  std::vector<Point> domain() const { return complement_domain(group.degree(), std::span(&hole, 1)); }
};

/// Generators are the lassos of a breadth-first spanning tree of the
/// collinearity graph rooted at the hole: walk the tree to u, cross the
/// non-tree edge {u, v}, walk the tree back. They generate every closed walk
/// because backtracking along an edge evaluates to the identity. When all
/// pairs are collinear the tree is a star and the lassos are [hole, a, b, hole].
inline HoleStabilizer hole_stabilizer(const MoveTable& moves, Point hole) {
  const Hypergraph& h = moves.hypergraph();
  h.check_point(hole);
  const std::size_t n = h.n();

  std::vector<int> parent(n, -1);
  parent[hole] = hole;
  std::vector<Point> queue{hole};
  std::vector<std::vector<Point>> neighbours(n);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Point x = queue[i];
    neighbours[x] = collinear_points(h, x);
    for (Point y : neighbours[x])
      if (parent[y] < 0) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  auto path_from_hole = [&](Point x) {
    std::vector<Point> path{x};
    while (path.back() != hole) path.push_back(Point(parent[path.back()]));
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::vector<Permutation> gens;
  std::vector<std::vector<Point>> words;
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  std::vector<Point> reached = queue;
  std::sort(reached.begin(), reached.end());
  for (Point u : reached)
    for (Point v : neighbours[u]) {
      if (v <= u || parent[v] == u || parent[u] == v) continue;
      std::vector<Point> word = path_from_hole(u);
      std::vector<Point> back = path_from_hole(v);
      word.insert(word.end(), back.rbegin(), back.rend());
      Permutation g = evaluate(moves, word);
      if (g.is_identity() || !seen.emplace(g, gens.size()).second) continue;
      gens.push_back(std::move(g));
      words.push_back(std::move(word));
    }

  return {hole, PermGroup(n, std::move(gens)), std::move(words), all_pairs_collinear(h)};
}

struct PuzzleSet {
  std::vector<Permutation> elements;             // sorted
  std::vector<std::pair<Point, Point>> witness;  // per element: a walk from .first to .second evaluates to it
  bool truncated = false;
  /// Whether the elements form a group; unset when truncated.
  std::optional<bool> is_group;
  Order generated_order = 0;  // order of the group generated by all elementary moves
};

inline constexpr std::size_t kDefaultPuzzleCap = 20'000'000;

/// Every evaluation of a move sequence, as the union over start a and end b of
/// the cosets (walk a -> hole) * stabilizer * (walk hole -> b).
inline PuzzleSet puzzle_set(const MoveTable& moves, const HoleStabilizer& stab, std::size_t cap = kDefaultPuzzleCap) {
  const Hypergraph& h = moves.hypergraph();
  if (!collinearity_connected(h)) throw Error("puzzle sets need a connected collinearity graph");
  const Order order = stab.group.order();
  if (order > cap) throw Error("puzzle set cap is smaller than one coset");
  const std::size_t n = h.n();

  std::vector<Permutation> stabilizer_elements;
  stabilizer_elements.reserve(static_cast<std::size_t>(order));
  stab.group.chain().for_each_element([&](const Permutation& p) {
    stabilizer_elements.push_back(p);
    return true;
  });

  std::vector<Permutation> to_hole(n), from_hole(n);
  for (std::size_t a = 0; a < n; ++a) {
    to_hole[a] = evaluate(moves, *shortest_walk(h, Point(a), stab.hole));
    from_hole[a] = inverse(to_hole[a]);
  }

  PuzzleSet result;
  std::unordered_map<Permutation, std::pair<Point, Point>, PermutationHash> found;
  for (std::size_t a = 0; a < n && !result.truncated; ++a)
    for (std::size_t b = 0; b < n && !result.truncated; ++b)
      for (const auto& g : stabilizer_elements) {
        Permutation p = to_hole[a] * g * from_hole[b];
        if (found.size() == cap && !found.contains(p)) {
          result.truncated = true;
          break;
        }
        found.emplace(std::move(p), std::pair(Point(a), Point(b)));
      }

  std::vector<std::pair<Permutation, std::pair<Point, Point>>> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto& [p, w] : sorted) {
    result.elements.push_back(std::move(p));
    result.witness.push_back(w);
  }

  std::vector<Permutation> all_moves;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (const Permutation* m = moves.find(Point(x), Point(y))) all_moves.push_back(*m);
  result.generated_order = StabilizerChain(n, all_moves).order();
  if (!result.truncated) result.is_group = result.generated_order == result.elements.size();
  return result;
}

struct Strictness {
  bool testable = false;      // some pair x, y has the hole outside its closure
  bool non_member = false;    // some such [x, y] lies outside the hole stabilizer
  std::optional<std::pair<Point, Point>> witness;
  std::size_t qualifying_pairs = 0;
};

/// Looks for a move [x, y] that fixes the hole (the hole is off every line
/// through x and y) but is not in the hole stabilizer. Such a move would have
/// to lie in the stabilizer if the puzzle set were exactly n cosets of it.
/// The verdict is only the membership result; it says nothing when the
/// pair set is empty.
inline Strictness puzzle_strictness(const MoveTable& moves, const HoleStabilizer& stab) {
  const Hypergraph& h = moves.hypergraph();
  Strictness out;
  for (std::size_t x = 0; x < h.n(); ++x)
    for (std::size_t y = x + 1; y < h.n(); ++y) {
      if (x == stab.hole || y == stab.hole) continue;
      const Permutation* m = moves.find(Point(x), Point(y));
      if (!m || closure(h, Point(x), Point(y)).contains(stab.hole)) continue;
      ++out.qualifying_pairs;
      out.testable = true;
      if (!out.non_member && !stab.group.contains(*m)) {
        out.non_member = true;
        out.witness = std::pair(Point(x), Point(y));
      }
    }
  return out;
}

}  // namespace holestab
