#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holestab/hypergraph.hpp"
#include "holestab/stabilizer_chain.hpp"

namespace holestab {

/// Codeword of length at most 64; bit i is coordinate i.
using Word = std::uint64_t;

inline constexpr std::size_t kMaxCodeLength = 64;

/// Binary linear code held as a reduced row echelon basis. Pivots are the
/// lowest set bit of each row, rows are sorted by pivot, and every pivot
/// column is zero in the other rows.
class LinearCode {
 public:
  explicit LinearCode(std::size_t length, std::vector<Word> rows = {}) : n_(length) {
    if (n_ > kMaxCodeLength) throw Error("code length above 64 is not supported");
    const Word mask = n_ == 64 ? ~Word{0} : (Word{1} << n_) - 1;
    for (Word r : rows)
      if (r & ~mask) throw Error("row has bits beyond the code length");
    reduce(std::move(rows));
  }

  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Word>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces w against the basis; the result is zero iff w is a codeword.
  Word residue(Word w) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (w >> pivots_[i] & 1) w ^= rows_[i];
    return w;
  }
  bool contains(Word w) const { return residue(w) == 0; }

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  void reduce(std::vector<Word> rows) {
    for (std::size_t col = 0; col < n_; ++col) {
      const Word bit = Word{1} << col;
      auto it = std::find_if(rows.begin(), rows.end(), [&](Word r) { return r & bit; });
      if (it == rows.end()) continue;
      const Word pivot_row = *it;
      rows.erase(it);
      for (Word& r : rows)
        if (r & bit) r ^= pivot_row;
      for (Word& r : rows_)
        if (r & bit) r ^= pivot_row;
      rows_.push_back(pivot_row);
      pivots_.push_back(col);
    }
  }

  std::size_t n_;
  std::vector<Word> rows_;
  std::vector<std::size_t> pivots_;
};

/// Row space over the two-element field of the line-by-point incidence matrix.
inline LinearCode code_from_design(const Hypergraph& h) {
  if (h.n() > kMaxCodeLength) throw Error("code length above 64 is not supported");
  std::vector<Word> rows;
  for (const Line& l : h.lines()) {
    Word r = 0;
    for (Point p : l) r |= Word{1} << p;
    rows.push_back(r);
  }
  return LinearCode(h.n(), std::move(rows));
}

inline LinearCode full_space(std::size_t n) {
  std::vector<Word> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(Word{1} << i);
  return LinearCode(n, std::move(rows));
}

/// Orthogonal complement: one vector per non-pivot column f, namely e_f plus
/// the pivots of the rows that have a 1 in column f.
inline LinearCode dual(const LinearCode& c) {
  const auto& rows = c.basis();
  const auto& piv = c.pivots();
  std::vector<Word> out;
  for (std::size_t f = 0; f < c.length(); ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    Word v = Word{1} << f;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] >> f & 1) v |= Word{1} << piv[i];
    out.push_back(v);
  }
  return LinearCode(c.length(), std::move(out));
}

/// Removes coordinate i, shifting the higher coordinates down.
inline Word delete_coordinate(Word w, std::size_t i) {
  const Word low = w & ((Word{1} << i) - 1);
  const Word high = i + 1 < 64 ? (w >> (i + 1)) << i : 0;
  return low | high;
}

inline LinearCode puncture(const LinearCode& c, std::size_t i) {
  if (i >= c.length()) throw Error("coordinate " + std::to_string(i) + " out of range");
  std::vector<Word> rows;
  for (Word r : c.basis()) rows.push_back(delete_coordinate(r, i));
  return LinearCode(c.length() - 1, std::move(rows));
}

/// Codewords that vanish at coordinate i, still of the full length.
inline LinearCode zero_at(const LinearCode& c, std::size_t i) {
  if (i >= c.length()) throw Error("coordinate " + std::to_string(i) + " out of range");
  std::vector<Word> rows = c.basis();
  auto it = std::find_if(rows.begin(), rows.end(), [&](Word r) { return r >> i & 1; });
  if (it != rows.end()) {
    const Word r0 = *it;
    rows.erase(it);
    for (Word& r : rows)
      if (r >> i & 1) r ^= r0;
  }
  return LinearCode(c.length(), std::move(rows));
}

inline LinearCode shorten(const LinearCode& c, std::size_t i) { return puncture(zero_at(c, i), i); }

/// Counts of codewords by weight, indexed 0..n.
using WeightDistribution = std::vector<Order>;

inline constexpr std::size_t kDefaultDirectCap = std::size_t{1} << 22;
inline constexpr std::size_t kDefaultSyndromeCap = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultRegularityWork = std::size_t{1} << 26;

namespace detail {

inline bool fits_cap(std::size_t exponent, std::size_t cap) {
  return exponent < 63 && (std::size_t{1} << exponent) <= cap;
}

}  // namespace detail

/// Walks all 2^k codewords in Gray-code order.
inline WeightDistribution weight_distribution_direct(const LinearCode& c) {
  if (c.dimension() >= 40) throw Error("too many codewords to enumerate");
  std::vector<std::uint64_t> counts(c.length() + 1, 0);
  Word w = 0;
  const std::uint64_t total = std::uint64_t{1} << c.dimension();
  ++counts[0];
  for (std::uint64_t step = 1; step < total; ++step) {
    w ^= c.basis()[std::countr_zero(step)];
    ++counts[std::popcount(w)];
  }
  return WeightDistribution(counts.begin(), counts.end());
}

inline Order binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Order r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Weight distribution of a length-n code of dimension k from the
/// distribution of its dual, via Krawtchouk polynomials.
inline WeightDistribution macwilliams(const WeightDistribution& dual_weights, std::size_t n, std::size_t k) {
  if (dual_weights.size() != n + 1) throw Error("distribution length does not match code length");
  const Order dual_size = Order(1) << (n - k);
  WeightDistribution out(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    Order sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (dual_weights[i] == 0) continue;
      Order kraw = 0;
      for (std::size_t s = 0; s <= j; ++s) {
        Order term = binomial(i, s) * binomial(n - i, j - s);
        kraw += s % 2 ? Order(-term) : term;
      }
      sum += dual_weights[i] * kraw;
    }
    if (sum % dual_size != 0) throw Error("MacWilliams transform gave a non-integer count");
    out[j] = sum / dual_size;
  }
  return out;
}

inline WeightDistribution weight_distribution(const LinearCode& c, std::size_t direct_cap = kDefaultDirectCap) {
  const std::size_t k = c.dimension(), n = c.length();
  if (detail::fits_cap(k, direct_cap)) return weight_distribution_direct(c);
  if (detail::fits_cap(n - k, direct_cap)) return macwilliams(weight_distribution_direct(dual(c)), n, k);
  throw Error("neither the code nor its dual is small enough to enumerate");
}

inline std::size_t min_distance(const LinearCode& c, std::size_t direct_cap = kDefaultDirectCap) {
  if (c.dimension() == 0) throw Error("the zero code has no minimum distance");
  const auto w = weight_distribution(c, direct_cap);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] != 0) return i;
  throw Error("nonzero code without nonzero codewords");
}

/// Syndrome of every unit vector with respect to the dual basis as parity checks.
inline std::vector<Word> column_syndromes(const LinearCode& c) {
  const LinearCode h = dual(c);
  if (h.dimension() > 63) throw Error("syndrome space too large");
  std::vector<Word> cols(c.length(), 0);
  for (std::size_t j = 0; j < h.dimension(); ++j)
    for (std::size_t i = 0; i < c.length(); ++i)
      if (h.basis()[j] >> i & 1) cols[i] |= Word{1} << j;
  return cols;
}

inline Word syndrome(const std::vector<Word>& columns, Word v) {
  Word s = 0;
  for (; v; v &= v - 1) s ^= columns[std::countr_zero(v)];
  return s;
}

struct CosetLeaders {
  std::vector<std::uint8_t> weight;  // least weight per syndrome
  std::vector<Word> leader;          // a vector of that weight per syndrome
};

/// Breadth-first search over the 2^(n-k) syndromes, adding one unit vector per step.
inline CosetLeaders coset_leaders(const LinearCode& c, std::size_t syndrome_cap = kDefaultSyndromeCap) {
  const std::size_t r = c.length() - c.dimension();
  if (!detail::fits_cap(r, syndrome_cap)) throw Error("syndrome space exceeds the cap");
  const auto cols = column_syndromes(c);
  const std::size_t cosets = std::size_t{1} << r;
  CosetLeaders out{std::vector<std::uint8_t>(cosets, 0xff), std::vector<Word>(cosets, 0)};
  out.weight[0] = 0;
  std::vector<Word> frontier{0};
  for (std::uint8_t depth = 1; !frontier.empty(); ++depth) {
    std::vector<Word> next;
    for (Word s : frontier)
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const Word t = s ^ cols[i];
        if (out.weight[t] != 0xff) continue;
        out.weight[t] = depth;
        out.leader[t] = out.leader[s] | Word{1} << i;
        next.push_back(t);
      }
    frontier.swap(next);
  }
  return out;
}

inline std::size_t covering_radius(const LinearCode& c, std::size_t syndrome_cap = kDefaultSyndromeCap) {
  const auto leaders = coset_leaders(c, syndrome_cap);
  return *std::max_element(leaders.weight.begin(), leaders.weight.end());
}

inline std::size_t external_distance(const LinearCode& c, std::size_t direct_cap = kDefaultDirectCap) {
  const auto w = weight_distribution(dual(c), direct_cap);
  return static_cast<std::size_t>(std::count_if(w.begin() + 1, w.end(), [](const Order& x) { return x != 0; }));
}

enum class Verdict { yes, no, not_attempted };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::not_attempted: return "not_attempted";
  }
  return "?";
}

struct RegularityCheck {
  Verdict verdict = Verdict::not_attempted;
  /// Two coset leaders of equal weight whose cosets have different weight distributions.
  std::optional<std::pair<Word, Word>> witness;
  std::string reason;
};

/// Computes the weight distribution of every coset by running through all 2^n
/// vectors, then compares cosets with the same minimum weight.
inline RegularityCheck completely_regular_verify(const LinearCode& c, std::size_t syndrome_cap = kDefaultSyndromeCap,
                                                 std::size_t work_cap = kDefaultRegularityWork) {
  RegularityCheck out;
  const std::size_t n = c.length(), r = n - c.dimension();
  if (!detail::fits_cap(r, syndrome_cap) || !detail::fits_cap(n, work_cap)) {
    out.reason = "coset or vector count above the cap";
    return out;
  }
  const auto cols = column_syndromes(c);
  const std::size_t cosets = std::size_t{1} << r;
  std::vector<std::uint64_t> dist(cosets * (n + 1), 0);
  Word v = 0, s = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  ++dist[0];
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = std::countr_zero(step);
    v ^= Word{1} << bit;
    s ^= cols[bit];
    ++dist[s * (n + 1) + std::popcount(v)];
  }
  const auto leaders = coset_leaders(c, syndrome_cap);
  std::vector<std::optional<std::size_t>> first_with_weight(n + 1);
  for (std::size_t syn = 0; syn < cosets; ++syn) {
    auto& ref = first_with_weight[leaders.weight[syn]];
    if (!ref) {
      ref = syn;
      continue;
    }
    if (!std::equal(dist.begin() + syn * (n + 1), dist.begin() + (syn + 1) * (n + 1), dist.begin() + *ref * (n + 1))) {
      out.verdict = Verdict::no;
      out.witness = std::pair(leaders.leader[*ref], leaders.leader[syn]);
      out.reason = "cosets with equal minimum weight " + std::to_string(leaders.weight[syn]) +
                   " have different weight distributions";
      return out;
    }
  }
  out.verdict = Verdict::yes;
  return out;
}

struct RegularityFlags {
  bool all_even_weights = false;
  bool uniformly_packed_wide = false;    // covering radius equals external distance
  bool cr_sufficient_condition = false;  // even weights and d = 2t - 2
};

struct CodeReport {
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d;  // unset for the zero code
  std::size_t rho = 0, t = 0;
  WeightDistribution weights, dual_weights;
  RegularityFlags flags;
  RegularityCheck complete_regularity;
};

struct CodeCaps {
  std::size_t direct = kDefaultDirectCap;
  std::size_t syndromes = kDefaultSyndromeCap;
  std::size_t regularity_work = kDefaultRegularityWork;
};

inline RegularityFlags regularity_flags(const CodeReport& r) {
  RegularityFlags f;
  f.all_even_weights = true;
  for (std::size_t i = 1; i < r.weights.size(); i += 2) f.all_even_weights = f.all_even_weights && r.weights[i] == 0;
  f.uniformly_packed_wide = r.rho == r.t;
  f.cr_sufficient_condition = f.all_even_weights && r.d && *r.d + 2 == 2 * r.t;
  return f;
}

inline CodeReport code_report(const LinearCode& c, const CodeCaps& caps = {}) {
  CodeReport r;
  r.n = c.length();
  r.k = c.dimension();
  r.weights = weight_distribution(c, caps.direct);
  r.dual_weights = weight_distribution(dual(c), caps.direct);
  for (std::size_t i = 1; i < r.weights.size() && !r.d; ++i)
    if (r.weights[i] != 0) r.d = i;
  r.rho = covering_radius(c, caps.syndromes);
  r.t = static_cast<std::size_t>(
      std::count_if(r.dual_weights.begin() + 1, r.dual_weights.end(), [](const Order& x) { return x != 0; }));
  r.flags = regularity_flags(r);
  r.complete_regularity = completely_regular_verify(c, caps.syndromes, caps.regularity_work);
  return r;
}

/// The code of a design together with its punctured and shortened codes.
struct DesignCodes {
  std::size_t coordinate = 0;
  std::optional<std::size_t> lambda;
  CodeReport code, punctured, shortened;
};

inline DesignCodes design_codes(const Hypergraph& h, std::size_t coordinate = 0, const CodeCaps& caps = {}) {
  const LinearCode c = code_from_design(h);
  DesignCodes out;
  out.coordinate = coordinate;
  out.lambda = h.lambda();
  out.code = code_report(c, caps);
  out.punctured = code_report(puncture(c, coordinate), caps);
  out.shortened = code_report(shorten(c, coordinate), caps);
  return out;
}

/// Columns n, lambda, k, rho, t, rho*, t*, rho_s, t_s.
struct CodeTableRow {
  std::size_t n, lambda, k, rho, t, rho_star, t_star, rho_s, t_s;
  friend bool operator==(const CodeTableRow&, const CodeTableRow&) = default;
};

inline CodeTableRow table_row(const DesignCodes& dc) {
  return {dc.code.n,       dc.lambda.value_or(0), dc.code.k,       dc.code.rho,    dc.code.t,
          dc.punctured.rho, dc.punctured.t,       dc.shortened.rho, dc.shortened.t};
}

/// Published parameters for codes of 2-(n,4,lambda) designs whose hole
/// stabilizer is primitive without containing the alternating group.
inline constexpr CodeTableRow kPublishedCodeRows[] = {
    {10, 2, 5, 3, 3, 2, 2, 3, 5},
    {16, 3, 10, 4, 4, 3, 3, 4, 7},
    {28, 5, 21, 3, 3, 2, 2, 3, 5},
    {36, 9, 29, 3, 3, 2, 2, 3, 5},
};

inline std::optional<CodeTableRow> published_code_row(std::size_t n, std::size_t lambda) {
  for (const auto& row : kPublishedCodeRows)
    if (row.n == n && row.lambda == lambda) return row;
  return std::nullopt;
}

}  // namespace holestab
