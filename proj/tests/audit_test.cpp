#include <gtest/gtest.h>

#include "holestab/audit.hpp"
#include "holestab/gallery.hpp"

using namespace holestab;

namespace {

std::string first_rules(const AuditReport& r) {
  std::string s;
  for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) s += r.violations[i].rule + " " + r.violations[i].witness + "\n";
  return s;
}

}  // namespace

TEST(AuditLetters, WalksUpToTheGivenLength) {
  const MoveTable b2(boolean_system(2));
  // Every pair is collinear in the 4-point system: 4 + 16 + 64 walks.
  const auto letters = audit_letters(b2, 3);
  ASSERT_EQ(letters.size(), 84u);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[i];
    EXPECT_EQ(letters[l.reverse].points, std::vector<Point>(l.points.rbegin(), l.points.rend()));
    EXPECT_EQ(l.evaluation, evaluate(b2, l.points));
    if (i) { EXPECT_LT(letters[i - 1].points, l.points); }
  }
  const MoveTable sparse(validate({{0, 1, 2, 3}, {3, 4, 5, 6}}, 7));
  for (const Letter& l : audit_letters(sparse, 2)) EXPECT_TRUE(l.points.size() == 1 || collinear(sparse.hypergraph(), l.start(), l.end()));
}

TEST(PartialGroupAudit, GalleryDesignsPass) {
  AuditOptions opt;
  opt.max_word_len = 2;
  for (const char* id : {"boolean:2", "boolean:3", "7-4-2", "complete:3", "complete:4", "10-4-2", "p3"}) {
    const MoveTable moves(gallery_design(id));
    const auto r = partial_group_audit(moves, opt);
    EXPECT_TRUE(r.ok()) << id << "\n" << first_rules(r);
    EXPECT_GT(r.words_checked, 0u);
  }
}

TEST(PartialGroupAudit, EnumeratesOrSamplesByLimit) {
  const MoveTable moves(boolean_system(2));
  AuditOptions opt;
  opt.max_word_len = 3;
  const auto full = partial_group_audit(moves, opt);
  EXPECT_FALSE(full.sampled);
  EXPECT_EQ(full.words_checked, full.words_total);
  // Composable words: each letter is followed by the letters starting at its end (84 / 4 = 21 of them).
  EXPECT_EQ(full.words_total, 84u + 84u * 21 + 84u * 21 * 21);

  opt.full_limit = 1000;
  opt.samples = 500;
  opt.seed = 9;
  const auto sampled = partial_group_audit(moves, opt);
  EXPECT_TRUE(sampled.sampled);
  EXPECT_EQ(sampled.words_checked, 500u);
  EXPECT_TRUE(sampled.ok());
  const auto again = partial_group_audit(moves, opt);
  EXPECT_EQ(again.words_checked, sampled.words_checked);
}

TEST(ObjectivityAudit, ProjectivePlaneShortWords) {
  const MoveTable moves(projective_plane_13());
  AuditOptions opt;
  opt.max_word_len = 2;
  opt.letter_points = 2;
  const auto r = objectivity_audit(moves, opt);
  EXPECT_FALSE(r.sampled);
  EXPECT_TRUE(r.ok()) << first_rules(r);

  opt.letter_points = 3;
  opt.full_limit = 10'000;
  opt.samples = 3'000;
  const auto sampled = objectivity_audit(moves, opt);
  EXPECT_TRUE(sampled.sampled);
  EXPECT_TRUE(sampled.ok()) << first_rules(sampled);
}

TEST(ObjectivityAudit, MismatchedEndpointsAreNotComposable) {
  // Trivial hole stabilizers make every unpointed chain match, so only the
  // holes tell composable words from the rest.
  for (unsigned k = 2; k <= 3; ++k) {
    const MoveTable moves(boolean_system(k));
    AuditOptions opt;
    opt.max_word_len = 2;
    opt.letter_points = 2;
    const auto r = objectivity_audit(moves, opt);
    EXPECT_TRUE(r.ok()) << first_rules(r);
    const std::size_t letters = r.letters;
    const std::size_t n = moves.n();
    // Pairs of letters whose endpoints differ are the non-composable words.
    EXPECT_EQ(r.unpointed_chain_matches, letters * letters - letters * (letters / n));
  }
  const MoveTable fano(fano_complement_7());
  AuditOptions opt;
  opt.max_word_len = 2;
  opt.letter_points = 2;
  const auto r = objectivity_audit(fano, opt);
  EXPECT_TRUE(r.ok()) << first_rules(r);
  EXPECT_THROW(objectivity_audit(MoveTable(validate({{0, 1, 2, 3}}, 6)), opt), Error);
}
