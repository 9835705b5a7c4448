#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "holestab/error.hpp"

namespace holestab {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = std::numeric_limits<Point>::max();

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// A bijection of {0, ..., n-1} stored as its image list.
///
/// Products act left to right: the image of i under compose(p, q) is
/// q[p[i]], so a word of moves is evaluated in the order it is written.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Validates that `images` is a bijection.
  static Permutation from_images(std::vector<Point> images) {
    check_bijection(images);
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Product of disjoint or overlapping cycles, applied left to right.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles) {
    Permutation result = identity(degree);
    for (const auto& cycle : cycles) {
      Permutation c = identity(degree);
      std::vector<Point> pts(cycle);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] >= degree) throw Error("cycle point out of range");
        c.images_[pts[i]] = pts[(i + 1) % pts.size()];
      }
      check_bijection(c.images_);
      result = result * c;
    }
    return result;
  }

  static Permutation transposition(std::size_t degree, Point a, Point b) {
    Permutation p = identity(degree);
    std::swap(p.images_[a], p.images_[b]);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// In-place right multiplication by a transposition: afterwards a and b's images are swapped.
  void then_swap(Point a, Point b) {
    for (auto& img : images_) {
      if (img == a)
        img = b;
      else if (img == b)
        img = a;
    }
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error("permutation degree mismatch");
    Permutation r;
    r.images_.resize(p.degree());
    for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  static void check_bijection(std::span<const Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point img : images) {
      if (img >= images.size() || seen[img]) throw Error("image list is not a bijection");
      seen[img] = true;
    }
  }

  std::vector<Point> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

inline Permutation inverse(const Permutation& p) {
  std::vector<Point> inv(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) inv[p[i]] = static_cast<Point>(i);
  return Permutation::from_images(std::move(inv));
}

/// Points moved by p, ascending.
inline std::vector<Point> support(const Permutation& p) {
  std::vector<Point> moved;
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p[i] != i) moved.push_back(static_cast<Point>(i));
  return moved;
}

inline std::size_t support_size(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) count += p[i] != i;
  return count;
}

/// Cycle lengths of p, including fixed points as 1-cycles.
inline std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

inline Parity parity(const Permutation& p) {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_type(p)) transpositions += len - 1;
  return transpositions % 2 ? Parity::odd : Parity::even;
}

/// g^-1 x g.
inline Permutation conjugate(const Permutation& x, const Permutation& g) { return inverse(g) * x * g; }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Text form: whitespace-separated 0-based image list on one line.

inline std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

/// Cycle notation with 0-based points, e.g. "(0 1)(4 5)(3 6)"; "()" for the identity.
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_cycle_string(p); }

inline Permutation parse_permutation(std::string_view text, std::size_t line_no = 0) {
  std::istringstream in{std::string(text)};
  std::vector<Point> images;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      throw ParseError("not a point: '" + token + "'", line_no);
    }
    if (used != token.size() || value >= kMaxDegree) throw ParseError("not a point: '" + token + "'", line_no);
    images.push_back(static_cast<Point>(value));
  }
  if (images.empty()) throw ParseError("empty permutation", line_no);
  try {
    return Permutation::from_images(std::move(images));
  } catch (const Error& e) {
    throw ParseError(e.what(), line_no);
  }
}

/// Generator file: one permutation per line; '#' starts a comment; blank lines ignored.
inline std::vector<Permutation> read_generators(std::istream& in) {
  std::vector<Permutation> gens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(parse_permutation(line, line_no));
    if (gens.back().degree() != gens.front().degree())
      throw ParseError("generator degree differs from the first generator", line_no);
  }
  return gens;
}

inline void write_generators(std::ostream& out, std::span<const Permutation> gens) {
  for (const auto& g : gens) out << to_string(g) << '\n';
}

}  // namespace holestab

template <>
struct std::hash<holestab::Permutation> : holestab::PermutationHash {};
