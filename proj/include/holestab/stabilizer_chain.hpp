#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "holestab/permutation.hpp"

namespace holestab {

/// Group orders overflow 64 bits quickly; keep them exact.
using Order = boost::multiprecision::cpp_int;

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm.
///
/// Level i stores the orbit of base point b_i under the pointwise stabilizer
/// of b_0..b_{i-1}, one coset representative per orbit point, and the strong
/// generators that fix b_0..b_{i-1}. New levels take the smallest point moved
/// by the residue that created them; callers may fix a base prefix up front.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Point> orbit;
    std::vector<Permutation> reps;      // reps[k] maps base to orbit[k]
    std::vector<Permutation> inv_reps;
    std::vector<int> slot;              // slot[p] = index of p in orbit, or -1
    std::vector<Permutation> generators;
    std::vector<std::size_t> checked;   // generators already processed per orbit position
  };

  struct SiftResult {
    std::size_t level;    // level where sifting stopped (== depth when it ran through)
    Permutation residue;
  };

  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {})
      : degree_(degree) {
    for (Point b : base_prefix) {
      if (b >= degree) throw Error("base point out of range");
      for (const auto& level : levels_)
        if (level.base == b) throw Error("repeated base point");
      push_level(b);
    }
    for (const auto& g : generators) {
      if (g.degree() != degree) throw Error("generator degree mismatch");
      auto [level, residue] = sift(g, 0);
      if (!residue.is_identity()) insert(level, std::move(residue));
    }
    complete();
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& level : levels_) b.push_back(level.base);
    return b;
  }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& level : levels_) sizes.push_back(level.orbit.size());
    return sizes;
  }

  Order order() const {
    Order result = 1;
    for (const auto& level : levels_) result *= level.orbit.size();
    return result;
  }

  /// Strong generators, i.e. the generator list of level 0 (it contains every deeper one).
  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> all;
    for (const auto& level : levels_)
      for (const auto& g : level.generators)
        if (std::find(all.begin(), all.end(), g) == all.end()) all.push_back(g);
    return all;
  }

  SiftResult sift(Permutation g, std::size_t from = 0) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& level = levels_[i];
      int s = level.slot[g[level.base]];
      if (s < 0) return {i, std::move(g)};
      g = g * level.inv_reps[s];
    }
    return {levels_.size(), std::move(g)};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return sift(g).residue.is_identity();
  }

  /// Visits every group element exactly once; stops early when `visit` returns false.
  template <typename Visitor>
  bool for_each_element(Visitor&& visit) const {
    if (levels_.empty()) return visit(Permutation::identity(degree_));
    return walk(levels_.size(), Permutation::identity(degree_), visit);
  }

 private:
  template <typename Visitor>
  bool walk(std::size_t depth, const Permutation& prefix, Visitor& visit) const {
    // Element = u_{L-1} * ... * u_1 * u_0, built from the deepest level outwards.
    const Level& level = levels_[depth - 1];
    for (const auto& rep : level.reps) {
      Permutation next = prefix * rep;
      if (depth == 1) {
        if (!visit(next)) return false;
      } else if (!walk(depth - 1, next, visit)) {
        return false;
      }
    }
    return true;
  }

  void push_level(Point base) {
    Level level;
    level.base = base;
    level.slot.assign(degree_, -1);
    level.slot[base] = 0;
    level.orbit.push_back(base);
    level.reps.push_back(Permutation::identity(degree_));
    level.inv_reps.push_back(Permutation::identity(degree_));
    level.checked.push_back(0);
    levels_.push_back(std::move(level));
  }

  void insert(std::size_t at, Permutation g) {
    if (at == levels_.size()) push_level(support(g).front());
    for (std::size_t i = 0; i <= at; ++i) {
      levels_[i].generators.push_back(g);
      close_orbit(levels_[i]);
    }
  }

  // Sifting must see complete orbits, so new generators extend them at once.
  // Schreier generators are still tested later through the checked counters.
  void close_orbit(Level& level) {
    for (std::size_t k = 0; k < level.orbit.size(); ++k)
      for (const auto& s : level.generators) {
        const Point image = s[level.orbit[k]];
        if (level.slot[image] >= 0) continue;
        Permutation rep = level.reps[k] * s;
        level.slot[image] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(image);
        level.inv_reps.push_back(inverse(rep));
        level.reps.push_back(std::move(rep));
        level.checked.push_back(0);
      }
  }

  void complete() {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < levels_.size(); ++i) {
        for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
          while (levels_[i].checked[k] < levels_[i].generators.size()) {
            Level& level = levels_[i];
            const Permutation s = level.generators[level.checked[k]++];
            const Point image = s[level.orbit[k]];
            if (level.slot[image] < 0) {
              Permutation rep = level.reps[k] * s;
              level.slot[image] = static_cast<int>(level.orbit.size());
              level.orbit.push_back(image);
              level.inv_reps.push_back(inverse(rep));
              level.reps.push_back(std::move(rep));
              level.checked.push_back(0);
              continue;
            }
            Permutation schreier = level.reps[k] * s * level.inv_reps[level.slot[image]];
            if (schreier.is_identity()) continue;
            auto [stop, residue] = sift(std::move(schreier), i + 1);
            if (!residue.is_identity()) {
              insert(stop, std::move(residue));
              changed = true;
            }
          }
        }
      }
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace holestab
