#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "holestab/error.hpp"
#include "holestab/permutation.hpp"

namespace holestab {

using Line = std::array<Point, 4>;

/// A 4-hypergraph on points {0..n-1} with a multiset of lines, validated on
/// construction. Lines are stored sorted and the line list is sorted, so
/// repeated lines are adjacent.
class Hypergraph {
 public:
  Hypergraph() = default;

  std::size_t n() const noexcept { return n_; }
  const std::vector<Line>& lines() const noexcept { return lines_; }

  bool simple() const noexcept { return simple_; }
  bool pliable() const noexcept { return pliable_; }
  bool supersimple() const noexcept { return simple_ && pliable_; }
  /// Every 3-subset lies in exactly one line.
  bool three_design() const noexcept { return three_design_; }
  /// Set iff every 2-subset lies in the same positive number of lines.
  std::optional<std::size_t> lambda() const noexcept { return lambda_; }
  /// Lines through each point, when that count is the same for all points.
  std::optional<std::size_t> replication() const noexcept { return replication_; }

  /// Indices of the lines (in stored order) that contain both x and y; x != y.
  std::span<const std::uint32_t> lines_through(Point x, Point y) const {
    return pair_lines_[static_cast<std::size_t>(x) * n_ + y];
  }

  bool collinear(Point x, Point y) const {
    check_point(x);
    check_point(y);
    return x == y || !lines_through(x, y).empty();
  }

  void check_point(std::size_t x) const {
    if (x >= n_) throw Error("point " + std::to_string(x) + " out of range");
  }

  friend Hypergraph validate(std::vector<Line> raw_lines, std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<Line> lines_;
  std::vector<std::vector<std::uint32_t>> pair_lines_;
  bool simple_ = true;
  bool pliable_ = true;
  bool three_design_ = false;
  std::optional<std::size_t> lambda_;
  std::optional<std::size_t> replication_;
};

/// Builds a hypergraph and computes every validity flag.
inline Hypergraph validate(std::vector<Line> raw_lines, std::size_t n) {
  if (n == 0 || n > kMaxDegree) throw Error("point count out of range");
  for (std::size_t i = 0; i < raw_lines.size(); ++i) {
    Line& line = raw_lines[i];
    std::sort(line.begin(), line.end());
    if (line[3] >= n) throw Error("line " + std::to_string(i) + " has a point out of range");
    if (std::adjacent_find(line.begin(), line.end()) != line.end())
      throw Error("line " + std::to_string(i) + " repeats a point");
  }
  std::sort(raw_lines.begin(), raw_lines.end());

  Hypergraph h;
  h.n_ = n;
  h.lines_ = std::move(raw_lines);
  const auto& lines = h.lines_;

  h.simple_ = std::adjacent_find(lines.begin(), lines.end()) == lines.end();

  h.pair_lines_.assign(n * n, {});
  std::vector<std::size_t> point_degree(n, 0);
  for (std::uint32_t li = 0; li < lines.size(); ++li) {
    const Line& l = lines[li];
    for (int i = 0; i < 4; ++i) {
      ++point_degree[l[i]];
      for (int j = 0; j < 4; ++j)
        if (i != j) h.pair_lines_[static_cast<std::size_t>(l[i]) * n + l[j]].push_back(li);
    }
  }

  // Pliable: all lines through a common triple are the same point set.
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::size_t>> triples;  // first line, count
  const std::uint64_t nn = n;
  for (std::uint32_t li = 0; li < lines.size(); ++li) {
    const Line& l = lines[li];
    for (int skip = 0; skip < 4; ++skip) {
      std::array<Point, 3> t{};
      for (int i = 0, k = 0; i < 4; ++i)
        if (i != skip) t[k++] = l[i];
      const std::uint64_t key = (t[0] * nn + t[1]) * nn + t[2];
      auto [it, fresh] = triples.try_emplace(key, li, 0);
      ++it->second.second;
      if (!fresh && lines[it->second.first] != l) h.pliable_ = false;
    }
  }

  const std::uint64_t all_triples = n >= 3 ? nn * (nn - 1) * (nn - 2) / 6 : 0;
  h.three_design_ = n >= 3 && triples.size() == all_triples &&
                    std::all_of(triples.begin(), triples.end(), [](const auto& kv) { return kv.second.second == 1; });

  if (n >= 2) {
    const std::size_t first = h.pair_lines_[1].size();
    bool uniform = first > 0;
    for (std::size_t x = 0; x < n && uniform; ++x)
      for (std::size_t y = x + 1; y < n && uniform; ++y) uniform = h.pair_lines_[x * n + y].size() == first;
    if (uniform) h.lambda_ = first;
  }
  if (std::adjacent_find(point_degree.begin(), point_degree.end(), std::not_equal_to<>()) == point_degree.end())
    h.replication_ = point_degree.front();
  return h;
}

inline Hypergraph validate(const Hypergraph& h) { return validate(h.lines(), h.n()); }

inline bool collinear(const Hypergraph& h, Point x, Point y) { return h.collinear(x, y); }

/// {a, b} together with every point on a line through both.
struct PairClosure {
  Point a = 0;
  Point b = 0;
  std::vector<Point> members;  // sorted

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Point x) const { return std::binary_search(members.begin(), members.end(), x); }
};

inline PairClosure closure(const Hypergraph& h, Point a, Point b) {
  h.check_point(a);
  h.check_point(b);
  if (a == b) throw Error("closure needs two distinct points");
  PairClosure c{a, b, {a, b}};
  for (auto li : h.lines_through(a, b))
    for (Point p : h.lines()[li]) c.members.push_back(p);
  std::sort(c.members.begin(), c.members.end());
  c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
  return c;
}

/// Neighbours of x in the collinearity graph (excluding x itself), ascending.
inline std::vector<Point> collinear_points(const Hypergraph& h, Point x) {
  std::vector<Point> out;
  for (std::size_t y = 0; y < h.n(); ++y)
    if (y != x && !h.lines_through(x, static_cast<Point>(y)).empty()) out.push_back(static_cast<Point>(y));
  return out;
}

inline bool all_pairs_collinear(const Hypergraph& h) {
  for (std::size_t x = 0; x < h.n(); ++x)
    for (std::size_t y = x + 1; y < h.n(); ++y)
      if (h.lines_through(static_cast<Point>(x), static_cast<Point>(y)).empty()) return false;
  return true;
}

inline bool collinearity_connected(const Hypergraph& h) {
  std::vector<bool> seen(h.n(), false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (Point y : collinear_points(h, x))
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == h.n();
}

/// |lines| x n 0/1 matrix; rows follow the stored line order.
inline std::vector<std::vector<std::uint8_t>> incidence_matrix(const Hypergraph& h) {
  std::vector<std::vector<std::uint8_t>> m(h.lines().size(), std::vector<std::uint8_t>(h.n(), 0));
  for (std::size_t i = 0; i < h.lines().size(); ++i)
    for (Point p : h.lines()[i]) m[i][p] = 1;
  return m;
}

// Design file: first non-comment line is n, then one line of four 0-based
// points per row; '#' starts a comment.

inline Hypergraph read_design(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Line> lines;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || v < 0) throw ParseError("not a non-negative integer: '" + token + "'", line_no);
      values.push_back(v);
    }
    if (values.empty()) continue;
    if (!n) {
      if (values.size() != 1) throw ParseError("expected the point count on its own line", line_no);
      if (values[0] == 0 || values[0] > static_cast<long long>(kMaxDegree))
        throw ParseError("point count out of range", line_no);
      n = static_cast<std::size_t>(values[0]);
      continue;
    }
    if (values.size() != 4) throw ParseError("a line needs exactly 4 points", line_no);
    Line l{};
    for (int i = 0; i < 4; ++i) {
      if (values[i] >= static_cast<long long>(*n)) throw ParseError("point out of range", line_no);
      l[i] = static_cast<Point>(values[i]);
    }
    std::array<Point, 4> sorted = l;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("a line repeats a point", line_no);
    lines.push_back(l);
  }
  if (!n) throw ParseError("missing point count");
  return validate(std::move(lines), *n);
}

inline void write_design(std::ostream& out, const Hypergraph& h) {
  out << h.n() << '\n';
  for (const auto& l : h.lines()) out << l[0] << ' ' << l[1] << ' ' << l[2] << ' ' << l[3] << '\n';
}

}  // namespace holestab
