#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "holestab/hypergraph.hpp"
#include "holestab/perm_group.hpp"

namespace holestab {

/// Points are the integer encodings of vectors in a k-dimensional binary
/// space; lines are the 4-subsets whose XOR vanishes.
inline Hypergraph boolean_system(unsigned k) {
  if (k < 2 || k > 8) throw Error("boolean_system needs 2 <= k <= 8");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Line> lines;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::size_t d = a ^ b ^ c;
        if (d > c) lines.push_back({Point(a), Point(b), Point(c), Point(d)});
      }
  return validate(std::move(lines), n);
}

/// Points x_i = 2i and y_i = 2i+1 for each vertex i of K_m; one line
/// {x_i, y_i, x_j, y_j} per edge ij.
inline Hypergraph complete_graph_design(unsigned m) {
  if (m < 3) throw Error("complete_graph_design needs m >= 3");
  std::vector<Line> lines;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = i + 1; j < m; ++j)
      lines.push_back({Point(2 * i), Point(2 * i + 1), Point(2 * j), Point(2 * j + 1)});
  return validate(std::move(lines), 2 * std::size_t{m});
}

/// Projective plane of order 3. Points are the normalized homogeneous
/// coordinate triples over GF(3) (first nonzero entry 1) in lexicographic
/// order; the line with normal vector u holds every point v with u.v = 0.
inline Hypergraph projective_plane_13() {
  std::vector<std::array<int, 3>> points;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        std::array<int, 3> v{x, y, z};
        auto first = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
        if (first != v.end() && *first == 1) points.push_back(v);
      }
  std::vector<Line> lines;
  for (const auto& normal : points) {
    std::vector<Point> on;
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto& v = points[p];
      if ((normal[0] * v[0] + normal[1] * v[1] + normal[2] * v[2]) % 3 == 0) on.push_back(Point(p));
    }
    lines.push_back({on.at(0), on.at(1), on.at(2), on.at(3)});
  }
  return validate(std::move(lines), points.size());
}

/// Complements of the Fano lines, with point i standing for the nonzero
/// binary vector i+1 and Fano lines {a, b, a XOR b}.
inline Hypergraph fano_complement_7() {
  std::vector<Line> lines;
  for (unsigned a = 1; a < 8; ++a)
    for (unsigned b = a + 1; b < 8; ++b) {
      const unsigned c = a ^ b;
      if (c <= b) continue;
      std::vector<Point> rest;
      for (unsigned v = 1; v < 8; ++v)
        if (v != a && v != b && v != c) rest.push_back(Point(v - 1));
      lines.push_back({rest[0], rest[1], rest[2], rest[3]});
    }
  return validate(std::move(lines), 7);
}

namespace detail {

// GF(4) = {0, 1, w, w+1} encoded 0..3; addition is XOR, w^2 = w + 1.
inline unsigned gf4_mul(unsigned a, unsigned b) {
  static constexpr unsigned table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return table[a][b];
}

}  // namespace detail

/// Affine plane of order 4: point (x, y) over GF(4) has label 4x + y; the
/// lines are y = mx + b and x = c.
inline Hypergraph affine_plane_16() {
  std::vector<Line> lines;
  for (unsigned m = 0; m < 4; ++m)
    for (unsigned b = 0; b < 4; ++b) {
      Line l{};
      for (unsigned x = 0; x < 4; ++x) l[x] = Point(4 * x + (detail::gf4_mul(m, x) ^ b));
      lines.push_back(l);
    }
  for (unsigned c = 0; c < 4; ++c) lines.push_back({Point(4 * c), Point(4 * c + 1), Point(4 * c + 2), Point(4 * c + 3)});
  return validate(std::move(lines), 16);
}

namespace detail {

struct Search10 {
  static constexpr std::size_t n = 10;
  static constexpr std::size_t target = 15;
  std::vector<Line> candidates;
  std::vector<std::size_t> chosen;
  std::array<std::array<int, n>, n> pair_count{};

  static int common(const Line& a, const Line& b) {
    int c = 0;
    for (Point p : a) c += std::find(b.begin(), b.end(), p) != b.end();
    return c;
  }

  bool fits(const Line& l) const {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (pair_count[l[i]][l[j]] >= 2) return false;
    for (std::size_t c : chosen)
      if (common(candidates[c], l) > 2) return false;
    return true;
  }

  void apply(const Line& l, int delta) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pair_count[l[i]][l[j]] += delta;
  }

  bool is_chosen(const Line& l) const {
    for (std::size_t c : chosen)
      if (candidates[c] == l) return true;
    return false;
  }

  // Two lines sharing a pair force the line on their other four points.
  bool forced_lines_possible(bool complete) const {
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        const Line& a = candidates[chosen[i]];
        const Line& b = candidates[chosen[j]];
        if (common(a, b) != 2) continue;
        Line forced{};
        int k = 0;
        for (Point p : a)
          if (std::find(b.begin(), b.end(), p) == b.end()) forced[k++] = p;
        for (Point p : b)
          if (std::find(a.begin(), a.end(), p) == a.end()) forced[k++] = p;
        std::sort(forced.begin(), forced.end());
        if (is_chosen(forced)) continue;
        if (complete || !fits(forced)) return false;
      }
    return true;
  }

  bool run() {
    if (!forced_lines_possible(chosen.size() == target)) return false;
    if (chosen.size() == target) return true;
    // Branch on the lexicographically first pair still short of two lines.
    std::size_t a = n, b = n;
    for (std::size_t x = 0; x < n && a == n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (pair_count[x][y] < 2) {
          a = x;
          b = y;
          break;
        }
    if (a == n) return false;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Line& l = candidates[c];
      if (std::find(l.begin(), l.end(), a) == l.end() || std::find(l.begin(), l.end(), b) == l.end()) continue;
      if (!fits(l)) continue;
      chosen.push_back(c);
      apply(l, +1);
      if (run()) return true;
      apply(l, -1);
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Backtracking search for the supersimple 2-(10,4,2) design in which lines
/// {p,q,r,s} and {r,s,t,u} always force the line {p,q,t,u}. Each step covers
/// the lexicographically first deficient pair, trying candidate lines in
/// lexicographic order, so the first solution is always the same one.
inline Hypergraph search_10_4_2() {
  detail::Search10 s;
  for (Point a = 0; a < 10; ++a)
    for (Point b = a + 1; b < 10; ++b)
      for (Point c = b + 1; c < 10; ++c)
        for (Point d = c + 1; d < 10; ++d) s.candidates.push_back({a, b, c, d});
  if (!s.run()) throw Error("no supersimple 2-(10,4,2) design found");
  std::vector<Line> lines;
  for (std::size_t c : s.chosen) lines.push_back(s.candidates[c]);
  return validate(std::move(lines), 10);
}

struct OrbitDesign {
  Hypergraph design;
  bool not_a_2_design = false;  // the orbit is not pair-uniform, lambda unset
};

/// Lines are the orbit of `base_block` under the group generated by `generators`.
inline OrbitDesign orbit_design(std::span<const Permutation> generators, std::size_t degree, Line base_block) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  std::sort(base_block.begin(), base_block.end());
  if (base_block[3] >= degree || std::adjacent_find(base_block.begin(), base_block.end()) != base_block.end())
    throw Error("base block must hold 4 distinct points in range");
  std::set<Line> seen{base_block};
  std::vector<Line> queue{base_block};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : generators) {
      Line image{g[queue[i][0]], g[queue[i][1]], g[queue[i][2]], g[queue[i][3]]};
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) queue.push_back(image);
    }
  OrbitDesign out{validate(std::move(queue), degree)};
  out.not_a_2_design = !out.design.lambda().has_value();
  return out;
}

/// Cyclic shift i -> i+1 mod n.
inline Permutation cyclic_shift(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = Point((i + 1) % n);
  return Permutation::from_images(std::move(images));
}

struct GalleryEntry {
  std::string id;        // accepted by gallery_design()
  std::string name;
  std::string provenance;
};

inline std::vector<GalleryEntry> gallery_entries() {
  return {
      {"boolean:<k>", "Boolean quadruple system of order 2^k (2 <= k <= 8)",
       "3-(2^k,4,1) Steiner quadruple system and 2-(2^k,4,2^(k-1)-1) design; trivial hole stabilizers"},
      {"complete:<m>", "complete-graph hypergraph on 2m points (m >= 3)",
       "one line {x_i,y_i,x_j,y_j} per edge of K_m; pliable, not a 2-design"},
      {"p3", "2-(13,4,1) projective plane of order 3", "unique supersimple 2-(13,4,1) design; hole stabilizer M12"},
      {"7-4-2", "2-(7,4,2) complements of the Fano lines",
       "unique 2-(7,4,2) design; self-dual incidence structure; hole stabilizer S6"},
      {"16-4-1", "2-(16,4,1) affine plane of order 4", "unique supersimple 2-(16,4,1) design; hole stabilizer A15"},
      {"10-4-2", "2-(10,4,2) design found by backtracking",
       "unique supersimple 2-(10,4,2) design; hole stabilizer S3 wr S2, puzzle set S6"},
      {"13-4-1-cyclic", "2-(13,4,1) orbit design of {0,1,3,9} under Z13",
       "perfect difference set mod 13; isomorphic to p3"},
  };
}

/// Resolves a gallery id such as "p3", "boolean:3" or "complete:4".
inline Hypergraph gallery_design(const std::string& id) {
  auto colon = id.find(':');
  const std::string head = id.substr(0, colon);
  auto param = [&]() -> unsigned {
    if (colon == std::string::npos) throw Error("gallery id '" + id + "' needs a parameter");
    try {
      return static_cast<unsigned>(std::stoul(id.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error("bad gallery parameter in '" + id + "'");
    }
  };
  if (head == "boolean") return boolean_system(param());
  if (head == "complete") return complete_graph_design(param());
  if (colon != std::string::npos) throw Error("gallery id '" + id + "' takes no parameter");
  if (head == "p3" || head == "13-4-1") return projective_plane_13();
  if (head == "7-4-2" || head == "fano") return fano_complement_7();
  if (head == "16-4-1" || head == "affine16") return affine_plane_16();
  if (head == "10-4-2") return search_10_4_2();
  if (head == "13-4-1-cyclic") {
    const Permutation shift = cyclic_shift(13);
    return orbit_design(std::span(&shift, 1), 13, {0, 1, 3, 9}).design;
  }
  throw Error("unknown gallery id '" + id + "'");
}

}  // namespace holestab
