#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "holestab/hole_stabilizer.hpp"
#include "holestab/moves.hpp"

namespace holestab {

// Bounded audits of the partial-group structure on move sequences. The
// elements under test ("letters") are all walks with at most
// `letter_points` points; words are sequences of letters. A word is in the
// domain when consecutive letters share their end and start points; the
// product concatenates walks and inversion reverses them. Letters are point
// sequences, not evaluations: distinct walks with equal evaluations are
// distinct elements.

struct AuditOptions {
  std::size_t max_word_len = 4;
  std::size_t letter_points = 3;
  /// Enumerate every word when there are at most this many, otherwise sample.
  std::size_t full_limit = 100'000;
  std::size_t samples = 20'000;
  std::uint64_t seed = 0;
};

struct Violation {
  std::string rule;
  std::string witness;
};

struct AuditReport {
  std::string kind;
  std::size_t letters = 0;
  std::size_t words_total = 0;    // words in the enumeration space
  std::size_t words_checked = 0;
  bool sampled = false;
  std::size_t violation_count = 0;  // violations beyond the recorded ones are only counted
  std::vector<Violation> violations;
  /// Objectivity only: non-composable words whose stabilizer chain matches
  /// when objects are compared as bare subgroups rather than per hole.
  std::size_t unpointed_chain_matches = 0;

  bool ok() const { return violation_count == 0; }

  void add(std::string rule, std::string witness) {
    ++violation_count;
    if (violations.size() < 64) violations.push_back({std::move(rule), std::move(witness)});
  }
};

struct Letter {
  std::vector<Point> points;
  Permutation evaluation;
  std::size_t reverse = 0;  // index of the reversed letter
  Point start() const { return points.front(); }
  Point end() const { return points.back(); }
};

/// All walks with 1..max_points points (consecutive points collinear, repeats allowed), in
/// lexicographic order of their point lists.
inline std::vector<Letter> audit_letters(const MoveTable& moves, std::size_t max_points) {
  const Hypergraph& h = moves.hypergraph();
  std::vector<Letter> out;
  std::function<void(std::vector<Point>&)> grow = [&](std::vector<Point>& walk) {
    out.push_back({walk, evaluate(moves, walk), 0});
    if (walk.size() == max_points) return;
    for (std::size_t y = 0; y < h.n(); ++y)
      if (moves.find(walk.back(), Point(y))) {
        walk.push_back(Point(y));
        grow(walk);
        walk.pop_back();
      }
  };
  for (std::size_t x = 0; x < h.n(); ++x) {
    std::vector<Point> walk{Point(x)};
    grow(walk);
  }
  std::map<std::vector<Point>, std::size_t> index;
  for (std::size_t i = 0; i < out.size(); ++i) index.emplace(out[i].points, i);
  for (auto& l : out) {
    auto it = index.find(std::vector<Point>(l.points.rbegin(), l.points.rend()));
    l.reverse = it == index.end() ? out.size() : it->second;
  }
  return out;
}

namespace detail {

inline std::string describe_word(const std::vector<Letter>& letters, const std::vector<std::size_t>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    s += i ? " | [" : "[";
    for (std::size_t j = 0; j < letters[word[i]].points.size(); ++j)
      s += (j ? " " : "") + std::to_string(letters[word[i]].points[j]);
    s += "]";
  }
  return s;
}

/// Calls visit(word) for every word (or a sample of them) of length 1..max_len.
/// `next(letter)` lists the letters allowed after `letter`; `first` the allowed first letters.
template <typename Next, typename Visit>
void for_each_word(const std::vector<std::size_t>& first, Next next, const AuditOptions& opt, AuditReport& report,
                   Visit visit) {
  // Count words exactly (saturating) to decide between enumeration and sampling.
  std::size_t total = 0;
  {
    // count[m][letter] = words of length m starting with letter; computed backwards.
    const std::size_t n_letters = next.size();
    std::vector<double> count(n_letters, 1.0);
    double sum = 0;
    for (std::size_t f : first) sum += count[f];
    for (std::size_t m = 2; m <= opt.max_word_len; ++m) {
      std::vector<double> deeper(n_letters, 0.0);
      for (std::size_t f = 0; f < n_letters; ++f)
        for (std::size_t g : next[f]) deeper[f] += count[g];
      count.swap(deeper);
      for (std::size_t f : first) sum += count[f];
    }
    total = sum > 1e18 ? std::size_t(-1) : static_cast<std::size_t>(sum);
  }
  report.words_total = total;
  std::vector<std::size_t> word;
  if (total <= opt.full_limit) {
    std::function<void()> extend = [&] {
      visit(word);
      ++report.words_checked;
      if (word.size() == opt.max_word_len) return;
      for (std::size_t g : next[word.back()]) {
        word.push_back(g);
        extend();
        word.pop_back();
      }
    };
    for (std::size_t f : first) {
      word.assign(1, f);
      extend();
    }
    return;
  }
  report.sampled = true;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, opt.max_word_len)(rng);
    word.assign(1, first[std::uniform_int_distribution<std::size_t>(0, first.size() - 1)(rng)]);
    while (word.size() < len && !next[word.back()].empty()) {
      const auto& options = next[word.back()];
      word.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    visit(word);
    ++report.words_checked;
  }
}

inline void append_walk(std::vector<Point>& into, const std::vector<Point>& walk) {
  into.insert(into.end(), walk.begin() + (into.empty() ? 0 : 1), walk.end());
}

}  // namespace detail

/// Checks the partial-group axioms on bounded composable words: subword
/// closure of the domain, the product map being the identity on letters and
/// compatible with bracketing, evaluation of the product agreeing with the
/// product of evaluations, and the inversion laws.
inline AuditReport partial_group_audit(const MoveTable& moves, const AuditOptions& opt = {}) {
  const std::size_t n = moves.n();
  AuditReport report;
  report.kind = "partial_group";
  const std::vector<Letter> letters = audit_letters(moves, opt.letter_points);
  report.letters = letters.size();

  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[i];
    if (l.reverse == letters.size()) {
      report.add("inversion_bijective", detail::describe_word(letters, {i}));
      continue;
    }
    if (letters[l.reverse].reverse != i) report.add("inversion_involutory", detail::describe_word(letters, {i}));
    if (letters[l.reverse].evaluation != inverse(l.evaluation))
      report.add("reversal_is_inverse", detail::describe_word(letters, {i}));
  }

  std::vector<std::vector<std::size_t>> starting(n);
  for (std::size_t i = 0; i < letters.size(); ++i) starting[letters[i].start()].push_back(i);
  std::vector<std::vector<std::size_t>> next(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) next[i] = starting[letters[i].end()];
  std::vector<std::size_t> first(letters.size());
  std::iota(first.begin(), first.end(), std::size_t{0});

  auto walks_composable = [](const std::vector<const std::vector<Point>*>& walks) {
    for (std::size_t i = 1; i < walks.size(); ++i)
      if (walks[i - 1]->back() != walks[i]->front()) return false;
    return true;
  };
  auto product = [](const std::vector<const std::vector<Point>*>& walks) {
    std::vector<Point> out;
    for (const auto* w : walks) detail::append_walk(out, *w);
    return out;
  };

  const Permutation identity = Permutation::identity(n);
  std::vector<const std::vector<Point>*> walks, reshaped;
  detail::for_each_word(first, next, opt, report, [&](const std::vector<std::size_t>& word) {
    const std::size_t m = word.size();
    walks.clear();
    for (std::size_t f : word) walks.push_back(&letters[f].points);
    if (!walks_composable(walks)) {
      report.add("domain_membership", detail::describe_word(letters, word));
      return;
    }
    const std::vector<Point> full = product(walks);

    // (a) every split into u o v has u and v in the domain.
    for (std::size_t k = 1; k < m; ++k) {
      std::vector<const std::vector<Point>*> u(walks.begin(), walks.begin() + k), v(walks.begin() + k, walks.end());
      if (!walks_composable(u) || !walks_composable(v)) report.add("subword_closure", detail::describe_word(letters, word));
    }
    // (b) Pi is the identity on letters and Pi(u o v o w) = Pi(u o Pi(v) o w).
    if (m == 1 && full != letters[word[0]].points) report.add("product_on_letters", detail::describe_word(letters, word));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j <= m; ++j) {
        std::vector<const std::vector<Point>*> inner(walks.begin() + i, walks.begin() + j);
        const std::vector<Point> collapsed = product(inner);
        reshaped.assign(walks.begin(), walks.begin() + i);
        reshaped.push_back(&collapsed);
        reshaped.insert(reshaped.end(), walks.begin() + j, walks.end());
        if (!walks_composable(reshaped) || product(reshaped) != full)
          report.add("product_associativity", detail::describe_word(letters, word));
      }
    // Evaluating the product equals multiplying the evaluations.
    Permutation by_letters = identity;
    for (std::size_t f : word) by_letters = by_letters * letters[f].evaluation;
    const Permutation by_walk = evaluate(moves, full);
    if (by_walk != by_letters) report.add("evaluation_homomorphism", detail::describe_word(letters, word));
    // (c)(ii) u^-1 o u is in the domain and multiplies to the empty product.
    std::vector<const std::vector<Point>*> inv_then_u;
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv_then_u.push_back(&letters[letters[*it].reverse].points);
    inv_then_u.insert(inv_then_u.end(), walks.begin(), walks.end());
    if (!walks_composable(inv_then_u) || evaluate(moves, product(inv_then_u)) != identity)
      report.add("inverse_cancellation", detail::describe_word(letters, word));
  });
  return report;
}

/// Checks objectivity with objects the hole stabilizers Delta_x, each taken
/// together with its hole x:
///  (O1) a word is composable iff the chain Delta_{start(f_i)}^{f_i} =
///       Delta_{start(f_{i+1})} holds with holes carried along;
///  (O2) if Delta_x^f lies in some Delta_z then both have the same order,
///       so every intermediate subgroup is Delta_z itself.
inline AuditReport objectivity_audit(const MoveTable& moves, const AuditOptions& opt = {}) {
  const Hypergraph& h = moves.hypergraph();
  if (!collinearity_connected(h)) throw Error("objectivity audit needs a connected collinearity graph");
  const std::size_t n = h.n();
  AuditReport report;
  report.kind = "objectivity";

  std::vector<HoleStabilizer> delta;
  std::vector<Order> orders;
  for (std::size_t x = 0; x < n; ++x) {
    delta.push_back(hole_stabilizer(moves, Point(x)));
    orders.push_back(delta.back().group.order());
  }

  const std::vector<Letter> letters = audit_letters(moves, opt.letter_points);
  report.letters = letters.size();

  // contained[f][z]: Delta_start(f)^f <= Delta_z; equal[f][z]: and same order.
  std::vector<std::vector<bool>> contained(letters.size()), equal(letters.size());
  std::map<std::pair<Point, Permutation>, std::pair<std::vector<bool>, std::vector<bool>>> cache;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& f = letters[i];
    auto [it, fresh] = cache.try_emplace({f.start(), f.evaluation});
    if (fresh) {
      auto& [inside, same] = it->second;
      inside.assign(n, true);
      same.assign(n, false);
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& g : delta[f.start()].group.generators())
          if (!delta[z].group.contains(conjugate(g, f.evaluation))) {
            inside[z] = false;
            break;
          }
        same[z] = inside[z] && orders[z] == orders[f.start()];
      }
    }
    contained[i] = it->second.first;
    equal[i] = it->second.second;

    // (O2) and the transport identity Delta_x^f = Delta_y.
    if (!equal[i][f.end()]) report.add("conjugate_is_end_stabilizer", detail::describe_word(letters, {i}));
    for (std::size_t z = 0; z < n; ++z)
      if (contained[i][z] && orders[z] != orders[f.start()])
        report.add("O2_order", detail::describe_word(letters, {i}) + " into hole " + std::to_string(z));
    // Delta_x lies in D(f): f^-1 o g o f is composable for every generator word g.
    for (const auto& g : delta[f.start()].generator_words)
      if (g.front() != f.start() || g.back() != f.start())
        report.add("O2_conjugation_defined", detail::describe_word(letters, {i}));
  }

  std::vector<std::size_t> all(letters.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> next(letters.size(), all);
  detail::for_each_word(all, next, opt, report, [&](const std::vector<std::size_t>& word) {
    bool composable = true, chain = true, unpointed = true;
    for (std::size_t i = 1; i < word.size(); ++i) {
      const Letter& f = letters[word[i - 1]];
      const Point next_start = letters[word[i]].start();
      composable = composable && f.end() == next_start;
      chain = chain && f.evaluation[f.start()] == next_start && equal[word[i - 1]][next_start];
      unpointed = unpointed && equal[word[i - 1]][next_start];
    }
    if (composable != chain) report.add("O1", detail::describe_word(letters, word));
    if (unpointed && !composable) ++report.unpointed_chain_matches;
  });
  return report;
}

}  // namespace holestab
