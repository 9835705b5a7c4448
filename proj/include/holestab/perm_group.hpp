#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holestab/permutation.hpp"
#include "holestab/stabilizer_chain.hpp"

namespace holestab {

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and shared between copies.
class PermGroup {
 public:
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {})
      : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
    if (degree == 0) throw Error("permutation group needs a positive degree");
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw Error("generator degree mismatch");
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabilizerChain& chain() const {
    std::call_once(lazy_->once, [this] { lazy_->chain.emplace(degree_, generators_); });
    return *lazy_->chain;
  }

  Order order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool is_trivial() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_identity(); });
  }

 private:
  struct Lazy {
    std::once_flag once;
    std::optional<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;
};

inline StabilizerChain build_chain(const PermGroup& g) { return StabilizerChain(g.degree(), g.generators()); }

/// Orbit of x under the generators, in discovery order.
inline std::vector<Point> orbit(std::span<const Permutation> gens, std::size_t degree, Point x) {
  std::vector<bool> seen(degree, false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Point y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

inline std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (std::size_t x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(g.generators(), g.degree(), static_cast<Point>(x));
    std::sort(o.begin(), o.end());
    for (Point y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

/// All points of a group's degree except those listed.
inline std::vector<Point> complement_domain(std::size_t degree, std::span<const Point> excluded) {
  std::vector<Point> domain;
  for (std::size_t x = 0; x < degree; ++x)
    if (std::find(excluded.begin(), excluded.end(), x) == excluded.end()) domain.push_back(static_cast<Point>(x));
  return domain;
}

inline bool is_transitive(const PermGroup& g, std::span<const Point> domain) {
  if (domain.empty()) return true;
  auto o = orbit(g.generators(), g.degree(), domain.front());
  if (o.size() != domain.size()) return false;
  std::sort(o.begin(), o.end());
  std::vector<Point> d(domain.begin(), domain.end());
  std::sort(d.begin(), d.end());
  return o == d;
}

/// A partition of the acted-on domain into blocks of equal size, each block
/// sorted and the blocks ordered by their smallest point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Finest block system whose block contains both a and b (union-find closure).
inline BlockSystem minimal_block_containing(const PermGroup& g, std::span<const Point> domain, Point a, Point b) {
  std::vector<Point> parent(g.degree());
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Point, Point>> queue;
  auto unite = [&](Point x, Point y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    queue.emplace_back(x, y);
  };
  unite(a, b);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [x, y] = queue[i];
    for (const auto& s : g.generators()) unite(s[x], s[y]);
  }
  std::vector<std::vector<Point>> by_root(g.degree());
  for (Point x : domain) by_root[find(x)].push_back(x);
  BlockSystem sys;
  for (auto& block : by_root)
    if (!block.empty()) sys.blocks.push_back(std::move(block));
  std::sort(sys.blocks.begin(), sys.blocks.end());
  return sys;
}

/// Distinct non-trivial minimal block systems, one per seed pair {d0, x}.
/// Empty result means the action on `domain` is primitive.
inline std::vector<BlockSystem> minimal_block_systems(const PermGroup& g, std::span<const Point> domain) {
  if (!is_transitive(g, domain)) throw Error("block systems need a transitive action");
  std::vector<BlockSystem> found;
  if (domain.size() < 3) return found;
  Point first = *std::min_element(domain.begin(), domain.end());
  for (Point x : domain) {
    if (x == first) continue;
    BlockSystem sys = minimal_block_containing(g, domain, first, x);
    if (sys.blocks.size() == 1) continue;
    if (std::find(found.begin(), found.end(), sys) == found.end()) found.push_back(std::move(sys));
  }
  return found;
}

inline bool is_primitive(const PermGroup& g, std::span<const Point> domain) {
  return is_transitive(g, domain) && minimal_block_systems(g, domain).empty();
}

/// Largest t such that the stabilizer of the first i domain points is
/// transitive on the remaining ones for every i < t.
inline std::size_t max_transitivity(const PermGroup& g, std::span<const Point> domain) {
  std::vector<Point> base(domain.begin(), domain.end());
  std::sort(base.begin(), base.end());
  StabilizerChain chain(g.degree(), g.generators(), base);
  std::size_t t = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& level = chain.levels()[i];
    if (level.orbit.size() != base.size() - i) break;
    ++t;
  }
  return t;
}

struct MinimalDegree {
  enum class Kind { exact, bounds, trivial_group } kind = Kind::trivial_group;
  std::size_t value = 0;  // exact value, or the lower bound
  std::size_t upper = 0;  // upper bound (== value when exact)
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Least support size over non-identity elements; exact when the group order
/// is at most `enumeration_cap`, otherwise bounded by 2 and the smallest
/// generator support.
inline MinimalDegree minimal_degree(const PermGroup& g, std::size_t enumeration_cap = kDefaultEnumerationCap) {
  MinimalDegree result;
  const Order order = g.order();
  if (order == 1) return result;
  if (order <= enumeration_cap) {
    std::size_t best = g.degree() + 1;
    g.chain().for_each_element([&](const Permutation& p) {
      std::size_t s = support_size(p);
      if (s && s < best) best = s;
      return best > 2;
    });
    result.kind = MinimalDegree::Kind::exact;
    result.value = result.upper = best;
    return result;
  }
  std::size_t upper = g.degree();
  for (const auto& s : g.generators())
    if (!s.is_identity()) upper = std::min(upper, support_size(s));
  result.kind = MinimalDegree::Kind::bounds;
  result.value = 2;
  result.upper = upper;
  return result;
}

inline Order factorial(std::size_t n) {
  Order f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct AltSymFlags {
  bool contains_alternating = false;
  bool is_symmetric = false;
  bool is_alternating = false;
};

/// Order comparison against d!/2 and d! for a group acting on d points.
inline AltSymFlags alternating_or_symmetric(const PermGroup& g, std::size_t d) {
  AltSymFlags flags;
  const Order order = g.order();
  const Order full = factorial(d);
  flags.is_symmetric = order == full;
  flags.is_alternating = d >= 2 && order * 2 == full;
  flags.contains_alternating = flags.is_symmetric || flags.is_alternating;
  return flags;
}

/// Evidence collected about a group acting on a given domain; the isomorphism
/// label comes from a fixed lookup table and is evidence, not proof.
struct GroupProfile {
  std::size_t domain_size = 0;
  Order order = 1;
  bool transitive = false;
  bool primitive = false;
  std::size_t block_systems = 0;
  std::size_t max_transitivity = 0;
  std::size_t even_generators = 0;
  std::size_t odd_generators = 0;
  MinimalDegree minimal_degree;
  AltSymFlags alt_sym;
  std::string label;  // empty when nothing in the table matches
};

namespace detail {

struct LabelEntry {
  std::size_t degree;
  unsigned long long order;
  bool primitive;
  std::size_t transitivity;
  const char* name;
};

// Keyed on (degree, order, primitivity, transitivity).
inline constexpr LabelEntry kLabelTable[] = {
    {12, 95040, true, 5, "M12"},
    {11, 7920, true, 4, "M11"},
    {9, 72, true, 1, "S3 wr S2"},
    {10, 720, true, 2, "S6"},
    {15, 720, true, 1, "S6"},
    {27, 51840, true, 1, "PSp4(3):2"},
    {35, 40320, true, 1, "S8"},
};

}  // namespace detail

inline std::string evidence_label(std::size_t degree, const Order& order, bool primitive, std::size_t transitivity) {
  if (order == 1) return "trivial";
  if (degree >= 2 && order == factorial(degree)) return "S" + std::to_string(degree);
  if (degree >= 3 && order * 2 == factorial(degree)) return "A" + std::to_string(degree);
  for (const auto& e : detail::kLabelTable)
    if (e.degree == degree && order == e.order && e.primitive == primitive && e.transitivity == transitivity)
      return e.name;
  return {};
}

inline GroupProfile profile(const PermGroup& g, std::span<const Point> domain,
                            std::size_t enumeration_cap = kDefaultEnumerationCap) {
  GroupProfile p;
  p.domain_size = domain.size();
  p.order = g.order();
  p.transitive = is_transitive(g, domain);
  if (p.transitive) {
    p.block_systems = minimal_block_systems(g, domain).size();
    p.primitive = p.block_systems == 0;
  }
  p.max_transitivity = max_transitivity(g, domain);
  for (const auto& s : g.generators()) (parity(s) == Parity::even ? p.even_generators : p.odd_generators)++;
  p.minimal_degree = minimal_degree(g, enumeration_cap);
  p.alt_sym = alternating_or_symmetric(g, domain.size());
  if (p.minimal_degree.kind == MinimalDegree::Kind::bounds && p.alt_sym.contains_alternating) {
    // The full alternating or symmetric group on the domain has 3-cycles or transpositions.
    p.minimal_degree.kind = MinimalDegree::Kind::exact;
    p.minimal_degree.value = p.minimal_degree.upper = p.alt_sym.is_symmetric ? 2 : 3;
  }
  p.label = evidence_label(domain.size(), p.order, p.primitive, p.max_transitivity);
  return p;
}

}  // namespace holestab
