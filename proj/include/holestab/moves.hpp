#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holestab/hypergraph.hpp"
#include "holestab/permutation.hpp"

namespace holestab {

class NotCollinearError : public Error {
 public:
  NotCollinearError(Point x, Point y, std::size_t index)
      : Error("points " + std::to_string(x) + " and " + std::to_string(y) + " at index " + std::to_string(index) +
              " are not collinear"),
        index_(index) {}

  /// Index of the first point of the offending consecutive pair.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Elementary move [x, y]: the transposition (x y) followed by one
/// transposition (u v) for every line {x, y, u, v}.
inline Permutation elementary_move(const Hypergraph& h, Point x, Point y) {
  h.check_point(x);
  h.check_point(y);
  if (!h.pliable()) throw Error("elementary moves need a pliable hypergraph");
  if (x == y) return Permutation::identity(h.n());
  auto through = h.lines_through(x, y);
  if (through.empty()) throw NotCollinearError(x, y, 0);
  Permutation move = Permutation::transposition(h.n(), x, y);
  for (auto li : through) {
    Point other[2];
    int k = 0;
    for (Point p : h.lines()[li])
      if (p != x && p != y) other[k++] = p;
    move.then_swap(other[0], other[1]);
  }
  return move;
}

/// Every elementary move of a pliable hypergraph, computed once.
class MoveTable {
 public:
  explicit MoveTable(Hypergraph design) : h_(std::move(design)), moves_(h_.n() * h_.n()) {
    const Hypergraph& h = h_;
    if (!h.pliable()) throw Error("elementary moves need a pliable hypergraph");
    for (std::size_t x = 0; x < h.n(); ++x)
      for (std::size_t y = 0; y < h.n(); ++y)
        if (x == y || !h.lines_through(Point(x), Point(y)).empty())
          moves_[x * h.n() + y] = elementary_move(h, Point(x), Point(y));
  }

  const Hypergraph& hypergraph() const noexcept { return h_; }
  std::size_t n() const noexcept { return h_.n(); }

  const Permutation* find(Point x, Point y) const {
    const auto& m = moves_[std::size_t(x) * n() + y];
    return m ? &*m : nullptr;
  }

  const Permutation& move(Point x, Point y) const {
    h_.check_point(x);
    h_.check_point(y);
    const Permutation* m = find(x, y);
    if (!m) throw NotCollinearError(x, y, 0);
    return *m;
  }

 private:
  Hypergraph h_;
  std::vector<std::optional<Permutation>> moves_;
};

/// A walk [a0, ..., ak] of pairwise-collinear consecutive points with its
/// evaluation [a0,a1][a1,a2]...[a(k-1),ak].
struct MoveSequence {
  std::vector<Point> points;
  Permutation evaluation;

  Point start() const { return points.front(); }
  Point end() const { return points.back(); }
  bool closed() const { return points.front() == points.back(); }
};

/// Evaluates a walk; fewer than two points give the identity.
inline Permutation evaluate(const MoveTable& moves, std::span<const Point> points) {
  Permutation result = Permutation::identity(moves.n());
  for (Point p : points) moves.hypergraph().check_point(p);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Permutation* m = moves.find(points[i - 1], points[i]);
    if (!m) throw NotCollinearError(points[i - 1], points[i], i - 1);
    result = result * *m;
  }
  return result;
}

inline MoveSequence move_sequence(const MoveTable& moves, std::vector<Point> points) {
  if (points.empty()) throw Error("a move sequence needs at least one point");
  Permutation evaluation = evaluate(moves, points);
  return {std::move(points), std::move(evaluation)};
}

inline MoveSequence reversed(const MoveTable& moves, const MoveSequence& f) {
  std::vector<Point> pts(f.points.rbegin(), f.points.rend());
  return move_sequence(moves, std::move(pts));
}

/// Shortest walk from x to y in the collinearity graph, or nothing when y is
/// unreachable. Ties resolve to the smallest neighbour first.
inline std::optional<std::vector<Point>> shortest_walk(const Hypergraph& h, Point x, Point y) {
  h.check_point(x);
  h.check_point(y);
  std::vector<int> parent(h.n(), -1);
  parent[x] = x;
  std::vector<Point> queue{x};
  for (std::size_t i = 0; i < queue.size() && parent[y] < 0; ++i)
    for (Point z : collinear_points(h, queue[i]))
      if (parent[z] < 0) {
        parent[z] = queue[i];
        queue.push_back(z);
      }
  if (parent[y] < 0) return std::nullopt;
  std::vector<Point> walk{y};
  while (walk.back() != x) walk.push_back(Point(parent[walk.back()]));
  std::reverse(walk.begin(), walk.end());
  return walk;
}

/// A move sequence from x to y along a shortest collinearity path; conjugating
/// the hole stabilizer at x by its evaluation gives the one at y.
inline MoveSequence transport(const MoveTable& moves, Point x, Point y) {
  auto walk = shortest_walk(moves.hypergraph(), x, y);
  if (!walk) throw Error("no collinearity path from " + std::to_string(x) + " to " + std::to_string(y));
  return move_sequence(moves, std::move(*walk));
}

}  // namespace holestab
