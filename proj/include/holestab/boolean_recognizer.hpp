#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "holestab/hole_stabilizer.hpp"
#include "holestab/hypergraph.hpp"

namespace holestab {

struct BooleanRecognition {
  bool accepted = false;
  unsigned k = 0;      // n = 2^k when accepted
  std::string reason;  // why the hypergraph was rejected
};

/// Tries to read the points as a binary vector space with the hole as zero:
/// a * hole = a, a * a = hole, and a * b = c when {a, b, c, hole} is a line.
/// Accepts iff * is a well-defined elementary abelian 2-group and the lines
/// are exactly the 4-sets with product hole.
inline BooleanRecognition boolean_recognizer(const Hypergraph& h, Point hole) {
  h.check_point(hole);
  BooleanRecognition r;
  auto reject = [&](std::string why) {
    r.reason = std::move(why);
    return r;
  };
  if (!h.simple() || !h.pliable()) return reject("hypergraph is not simple and pliable");
  const std::size_t n = h.n();
  std::vector<Point> star(n * n);
  auto op = [&](std::size_t a, std::size_t b) -> Point& { return star[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a) {
    op(a, hole) = op(hole, a) = Point(a);
    op(a, a) = hole;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || a == hole || b == hole) continue;
      std::size_t with_hole = 0;
      Point c = 0;
      for (auto li : h.lines_through(Point(a), Point(b))) {
        const Line& l = h.lines()[li];
        if (std::find(l.begin(), l.end(), hole) == l.end()) continue;
        ++with_hole;
        for (Point p : l)
          if (p != a && p != b && p != hole) c = p;
      }
      if (with_hole != 1)
        return reject("product of " + std::to_string(a) + " and " + std::to_string(b) + " is undefined (" +
                      std::to_string(with_hole) + " lines through them and the hole)");
      op(a, b) = c;
    }

  for (std::size_t a = 0; a < n; ++a) {
    if (op(a, a) != hole) return reject("element " + std::to_string(a) + " is not self-inverse");
    for (std::size_t b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a)) return reject("product is not commutative");
      for (std::size_t c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          return reject("product is not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(c) + ")");
    }
  }
  if (!std::has_single_bit(n)) return reject("point count is not a power of two");

  for (const Line& l : h.lines())
    if (op(op(op(l[0], l[1]), l[2]), l[3]) != hole) return reject("a line does not multiply to the hole");
  const std::size_t zero_sum_sets = n >= 4 ? n * (n - 1) * (n - 2) / 24 : 0;
  if (h.lines().size() != zero_sum_sets) return reject("some 4-set with product hole is not a line");

  r.accepted = true;
  r.k = static_cast<unsigned>(std::countr_zero(n));
  return r;
}

struct TheoremBVerdict {
  bool all_trivial = false;  // every hole stabilizer is trivial
  bool boolean = false;      // the recognizer accepts
  std::string reason;
  bool equivalent() const { return all_trivial == boolean; }
};

/// Computes both sides of the characterisation of trivial hole stabilizers.
inline TheoremBVerdict theorem_b_check(const MoveTable& moves) {
  const Hypergraph& h = moves.hypergraph();
  TheoremBVerdict v;
  v.all_trivial = true;
  for (std::size_t x = 0; x < h.n() && v.all_trivial; ++x)
    v.all_trivial = hole_stabilizer(moves, Point(x)).group.is_trivial();
  auto rec = boolean_recognizer(h, 0);
  v.boolean = rec.accepted;
  v.reason = rec.reason;
  return v;
}

}  // namespace holestab
