#include <gtest/gtest.h>

#include <set>

#include "holestab/boolean_recognizer.hpp"
#include "holestab/gallery.hpp"
#include "holestab/hole_stabilizer.hpp"
#include "holestab/moves.hpp"
#include "oracles.hpp"

using namespace holestab;

namespace {

std::set<Permutation> elements(const PermGroup& g) {
  std::set<Permutation> out;
  g.chain().for_each_element([&](const Permutation& p) {
    out.insert(p);
    return true;
  });
  return out;
}

std::vector<Permutation> translations(unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<Permutation> out;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = Point(i ^ v);
    out.push_back(Permutation::from_images(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Gallery, BooleanSystems) {
  const Hypergraph b2 = boolean_system(2);
  ASSERT_EQ(b2.lines().size(), 1u);
  EXPECT_EQ(b2.lines()[0], (Line{0, 1, 2, 3}));
  const Hypergraph b3 = boolean_system(3);
  EXPECT_EQ(b3.n(), 8u);
  EXPECT_EQ(b3.lines().size(), 14u);
  EXPECT_EQ(b3.lambda(), 3u);
  EXPECT_EQ(boolean_system(4).lambda(), 7u);
  const Hypergraph b4 = boolean_system(4);
  for (const Line& l : b4.lines()) EXPECT_EQ(l[0] ^ l[1] ^ l[2] ^ l[3], 0);
}

TEST(Gallery, CompleteGraphDesigns) {
  const Hypergraph k3 = complete_graph_design(3);
  EXPECT_EQ(k3.n(), 6u);
  EXPECT_EQ(k3.lines().size(), 3u);
  EXPECT_FALSE(k3.lambda().has_value());
  EXPECT_TRUE(k3.pliable());
  const Hypergraph k4 = complete_graph_design(4);
  EXPECT_EQ(k4.n(), 8u);
  EXPECT_EQ(k4.lines().size(), 6u);
  const auto counts = oracle::pair_counts(k4);
  std::multiset<std::size_t> seen;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b) seen.insert(counts[a * 8 + b]);
  EXPECT_EQ(seen.count(3), 4u);  // the four pairs {x_i, y_i}
  EXPECT_EQ(seen.count(1), 24u);
}

TEST(Gallery, SmallDesigns) {
  const Hypergraph p3 = projective_plane_13();
  EXPECT_EQ(p3.lines().size(), 13u);
  EXPECT_EQ(p3.lambda(), 1u);
  EXPECT_TRUE(p3.supersimple());
  EXPECT_EQ(fano_complement_7().lambda(), 2u);
  const Hypergraph a16 = affine_plane_16();
  EXPECT_EQ(a16.lines().size(), 20u);
  EXPECT_EQ(a16.replication(), 5u);
  EXPECT_TRUE(a16.supersimple());
}

TEST(Gallery, TenPointSearchSatisfiesForcedLines) {
  const Hypergraph h = search_10_4_2();
  ASSERT_EQ(h.lines().size(), 15u);
  EXPECT_EQ(h.lambda(), 2u);
  EXPECT_TRUE(h.supersimple());
  const std::set<Line> lines(h.lines().begin(), h.lines().end());
  for (const Line& a : h.lines())
    for (const Line& b : h.lines()) {
      std::vector<Point> shared, rest;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
      ASSERT_LE(shared.size(), a == b ? 4u : 2u);
      if (shared.size() != 2) continue;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(rest));
      ASSERT_EQ(rest.size(), 4u);
      EXPECT_TRUE(lines.count(Line{rest[0], rest[1], rest[2], rest[3]}));
    }
  EXPECT_EQ(search_10_4_2().lines(), h.lines());
}

TEST(Gallery, OrbitDesigns) {
  const Permutation shift = cyclic_shift(13);
  const auto z13 = orbit_design(std::span(&shift, 1), 13, {0, 1, 3, 9});
  EXPECT_FALSE(z13.not_a_2_design);
  EXPECT_EQ(z13.design.lines().size(), 13u);
  EXPECT_EQ(z13.design.lambda(), 1u);
  const auto counts = oracle::pair_counts(z13.design);
  for (std::size_t a = 0; a < 13; ++a)
    for (std::size_t b = 0; b < 13; ++b) {
      if (a != b) { ASSERT_EQ(counts[a * 13 + b], 1u); }
    }

  const Permutation id = Permutation::identity(8);
  const auto single = orbit_design(std::span(&id, 1), 8, {0, 1, 2, 3});
  EXPECT_EQ(single.design.lines().size(), 1u);
  EXPECT_TRUE(single.not_a_2_design);

  const std::vector<Permutation> s4{Permutation::from_cycles(8, {{0, 1}}), Permutation::from_cycles(8, {{0, 1, 2, 3}})};
  const auto pairs = orbit_design(s4, 8, {0, 1, 4, 5});
  EXPECT_EQ(PermGroup(8, s4).order() % pairs.design.lines().size(), 0);
  EXPECT_EQ(pairs.design.lines().size(), 6u);
}

TEST(Gallery, ResolvesIdentifiers) {
  EXPECT_EQ(gallery_design("boolean:3").lines(), boolean_system(3).lines());
  EXPECT_EQ(gallery_design("13-4-1-cyclic").lines().size(), 13u);
  EXPECT_THROW(gallery_design("nope"), Error);
  EXPECT_THROW(gallery_design("boolean"), Error);
  EXPECT_THROW(gallery_design("p3:2"), Error);
  EXPECT_FALSE(gallery_entries().empty());
}

TEST(Moves, Examples) {
  const Hypergraph fano = fano_complement_7();
  EXPECT_EQ(elementary_move(fano, 0, 1), Permutation::from_cycles(7, {{0, 1}, {4, 5}, {3, 6}}));
  EXPECT_EQ(elementary_move(boolean_system(2), 0, 1), Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(elementary_move(fano, 2, 2).is_identity());
  EXPECT_EQ(elementary_move(fano, 0, 1), oracle::move(fano, 0, 1));
  EXPECT_THROW(elementary_move(validate({{0, 1, 2, 3}, {0, 1, 2, 4}}, 5), 0, 1), Error);
}

TEST(Moves, SequencesAndErrors) {
  const MoveTable fano(fano_complement_7());
  EXPECT_TRUE(move_sequence(fano, {3}).evaluation.is_identity());
  EXPECT_TRUE(move_sequence(fano, {0, 1, 0}).evaluation.is_identity());
  EXPECT_THROW(move_sequence(fano, {}), Error);
  const auto f = move_sequence(fano, {0, 1, 2, 5});
  EXPECT_EQ(reversed(fano, f).evaluation, inverse(f.evaluation));

  const MoveTable sparse(validate({{0, 1, 2, 3}, {3, 4, 5, 6}}, 7));
  try {
    move_sequence(sparse, {0, 3, 4, 0});
    FAIL() << "expected a collinearity error";
  } catch (const NotCollinearError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
  EXPECT_THROW(sparse.move(0, 6), NotCollinearError);
}

TEST(Moves, TransportAlongShortestWalk) {
  const MoveTable k3(complete_graph_design(3));
  // Lines of complete:3 are {x_i, y_i, x_j, y_j}; points 0 and 2 share one.
  const auto walk = transport(k3, 0, 2);
  EXPECT_EQ(walk.points.size(), 2u);
  const auto from = hole_stabilizer(k3, 0);
  std::vector<Permutation> moved;
  for (const auto& g : from.group.generators()) {
    moved.push_back(conjugate(g, walk.evaluation));
    EXPECT_EQ(moved.back()[2], 2);
  }
  EXPECT_EQ(PermGroup(6, moved).order(), from.group.order());
  EXPECT_TRUE(transport(k3, 4, 4).evaluation.is_identity());
  EXPECT_THROW(transport(MoveTable(validate({{0, 1, 2, 3}}, 6)), 0, 5), Error);
}

TEST(HoleStabilizer, GalleryOrders) {
  const MoveTable p3(projective_plane_13());
  const auto m12 = hole_stabilizer(p3, 0);
  EXPECT_EQ(m12.group.order(), 95040);
  EXPECT_TRUE(m12.pairwise_collinear);
  const auto dom = m12.domain();
  EXPECT_EQ(dom.size(), 12u);
  EXPECT_TRUE(is_primitive(m12.group, dom));
  EXPECT_EQ(max_transitivity(m12.group, dom), 5u);
  const auto f = alternating_or_symmetric(m12.group, 12);
  EXPECT_FALSE(f.is_alternating);
  EXPECT_FALSE(f.is_symmetric);

  const MoveTable fano(fano_complement_7());
  for (Point hole = 0; hole < 7; ++hole) {
    const auto s6 = hole_stabilizer(fano, hole);
    EXPECT_EQ(s6.group.order(), 720);
    EXPECT_TRUE(alternating_or_symmetric(s6.group, 6).is_symmetric);
  }
  for (unsigned k = 2; k <= 5; ++k) {
    const MoveTable b(boolean_system(k));
    EXPECT_TRUE(hole_stabilizer(b, 1).group.is_trivial());
  }
  const MoveTable b3(boolean_system(3));
  EXPECT_FALSE(is_transitive(hole_stabilizer(b3, 0).group, hole_stabilizer(b3, 0).domain()));
}

TEST(HoleStabilizer, GeneratorsAreClosedWalks) {
  // Three lines chained into a triangle: 1 and 4 are not collinear.
  const MoveTable k4(validate({{0, 1, 2, 3}, {3, 4, 5, 6}, {6, 7, 8, 0}}, 9));
  const auto s = hole_stabilizer(k4, 2);
  EXPECT_FALSE(s.pairwise_collinear);
  EXPECT_FALSE(s.group.is_trivial());
  ASSERT_EQ(s.generator_words.size(), s.group.generators().size());
  for (std::size_t i = 0; i < s.generator_words.size(); ++i) {
    const auto& w = s.generator_words[i];
    EXPECT_EQ(w.front(), 2);
    EXPECT_EQ(w.back(), 2);
    EXPECT_EQ(evaluate(k4, w), s.group.generators()[i]);
  }
}

TEST(HoleStabilizerOracle, ChainMatchesClosedWalkSearch) {
  for (const Hypergraph& h : {boolean_system(2), boolean_system(3), fano_complement_7(), complete_graph_design(3)}) {
    const MoveTable moves(h);
    const auto s = hole_stabilizer(moves, 0);
    const auto walks = oracle::closed_walk_evaluations(h, 0, 8);
    const auto walk_group = oracle::closure(std::vector<Permutation>(walks.begin(), walks.end()), h.n());
    EXPECT_EQ(elements(s.group), walk_group);
    // Short closed walks alone already produce every element here.
    for (const auto& p : walks) EXPECT_TRUE(s.group.contains(p));
  }
}

TEST(PuzzleSet, BooleanSystemsGiveTranslations) {
  for (unsigned k = 2; k <= 4; ++k) {
    const MoveTable moves(boolean_system(k));
    const auto set = puzzle_set(moves, hole_stabilizer(moves, 0));
    EXPECT_EQ(set.elements.size(), std::size_t{1} << k);
    EXPECT_EQ(set.elements, translations(k));
    EXPECT_EQ(set.is_group, true);
  }
}

TEST(PuzzleSet, TenPointDesignGivesAPrimitiveGroup) {
  const MoveTable moves(search_10_4_2());
  const auto stab = hole_stabilizer(moves, 0);
  EXPECT_EQ(stab.group.order(), 72);
  EXPECT_TRUE(is_primitive(stab.group, stab.domain()));
  const auto set = puzzle_set(moves, stab);
  ASSERT_EQ(set.elements.size(), 720u);
  EXPECT_EQ(set.is_group, true);
  const std::set<Permutation> members(set.elements.begin(), set.elements.end());
  for (std::size_t i = 0; i < set.elements.size(); i += 7)
    for (std::size_t j = 0; j < set.elements.size(); j += 11)
      ASSERT_TRUE(members.count(set.elements[i] * set.elements[j]));
  const PermGroup g(10, set.elements);
  EXPECT_EQ(g.order(), 720);
  const auto all = complement_domain(10, {});
  EXPECT_TRUE(is_primitive(g, all));
  EXPECT_EQ(evidence_label(10, g.order(), true, max_transitivity(g, all)), "S6");
}

TEST(PuzzleSet, InvariantsOnSmallDesigns) {
  for (const char* id : {"complete:3", "complete:4", "7-4-2", "boolean:3"}) {
    SCOPED_TRACE(id);
    const MoveTable moves(gallery_design(id));
    const auto stab = hole_stabilizer(moves, 0);
    const auto set = puzzle_set(moves, stab);
    ASSERT_FALSE(set.truncated);
    EXPECT_GE(set.elements.size(), moves.n() * static_cast<std::size_t>(stab.group.order()));
    const std::set<Permutation> members(set.elements.begin(), set.elements.end());
    for (const auto& p : set.elements) ASSERT_TRUE(members.count(inverse(p)));
    for (std::size_t i = 0; i < set.elements.size(); i += 97) {
      const auto [a, b] = set.witness[i];
      const auto walk_a = *shortest_walk(moves.hypergraph(), a, 0);
      const auto walk_b = *shortest_walk(moves.hypergraph(), 0, b);
      const Permutation inner = inverse(evaluate(moves, walk_a)) * set.elements[i] * inverse(evaluate(moves, walk_b));
      ASSERT_TRUE(stab.group.contains(inner));
    }
  }
  const MoveTable moves(fano_complement_7());
  EXPECT_THROW(puzzle_set(moves, hole_stabilizer(moves, 0), 10), Error);
  const auto truncated = puzzle_set(moves, hole_stabilizer(moves, 0), 1000);
  EXPECT_TRUE(truncated.truncated);
  EXPECT_FALSE(truncated.is_group.has_value());
}

TEST(Strictness, Verdicts) {
  const MoveTable p3(projective_plane_13());
  const auto m12 = hole_stabilizer(p3, 0);
  const auto s = puzzle_strictness(p3, m12);
  EXPECT_TRUE(s.testable);
  EXPECT_TRUE(s.non_member);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_EQ(support_size(p3.move(s.witness->first, s.witness->second)), 4u);
  EXPECT_EQ(minimal_degree(m12.group).value, 8u);

  for (unsigned k = 2; k <= 3; ++k) {
    const MoveTable b(boolean_system(k));
    const auto verdict = puzzle_strictness(b, hole_stabilizer(b, 0));
    EXPECT_FALSE(verdict.testable);
    EXPECT_EQ(verdict.qualifying_pairs, 0u);
  }
  const MoveTable fano(fano_complement_7());
  const auto s6 = hole_stabilizer(fano, 0);
  const auto f = puzzle_strictness(fano, s6);
  EXPECT_TRUE(f.testable);
  const auto group = oracle::closure(s6.group.generators(), 7);
  bool outside = false;
  for (Point x = 1; x < 7; ++x)
    for (Point y = x + 1; y < 7; ++y)
      if (!closure(fano.hypergraph(), x, y).contains(0)) outside = outside || !group.count(oracle::move(fano.hypergraph(), x, y));
  EXPECT_EQ(f.non_member, outside);
}

TEST(BooleanRecognizer, Verdicts) {
  for (Point hole = 0; hole < 8; ++hole) {
    const auto r = boolean_recognizer(boolean_system(3), hole);
    EXPECT_TRUE(r.accepted);
    EXPECT_EQ(r.k, 3u);
  }
  EXPECT_FALSE(boolean_recognizer(projective_plane_13(), 0).accepted);
  const auto fano = boolean_recognizer(fano_complement_7(), 0);
  EXPECT_FALSE(fano.accepted);
  // Pliable designs put each triple on at most one line, so the product fails by having none.
  EXPECT_NE(fano.reason.find("(0 lines"), std::string::npos) << fano.reason;
  EXPECT_FALSE(boolean_recognizer(complete_graph_design(3), 0).accepted);
}

TEST(BooleanRecognizer, TrivialStabilizersCharacteriseBooleanSystems) {
  for (unsigned k = 2; k <= 5; ++k) {
    const auto v = theorem_b_check(MoveTable(boolean_system(k)));
    EXPECT_TRUE(v.all_trivial);
    EXPECT_TRUE(v.boolean);
  }
  for (const char* id : {"7-4-2", "complete:3", "complete:4", "10-4-2", "p3"}) {
    const auto v = theorem_b_check(MoveTable(gallery_design(id)));
    EXPECT_FALSE(v.all_trivial) << id;
    EXPECT_FALSE(v.boolean) << id;
    EXPECT_TRUE(v.equivalent());
  }
}
