#include <gtest/gtest.h>

#include <set>

#include "orbits/clan.hpp"
#include "orbits/moves.hpp"
#include "orbits/order.hpp"
#include "orbits/param.hpp"
#include "orbits/poset.hpp"
#include "orbits/rank.hpp"
#include "orbits/verify.hpp"

using namespace orbits;

namespace {

std::set<std::string> targets(const std::string& text, const Family& f, bool graph_only = false) {
  std::set<std::string> out;
  for (const auto& s : successors(parse_param(text, f), f)) {
    if (!graph_only || s.graph) out.insert(param_text(s.target));
  }
  return out;
}

// Labels as printed may not be in first-occurrence order.
std::string canon(const std::string& text) { return print_clan(parse_clan(text)); }

std::set<std::string> single_moves(const std::string& text, int id) {
  std::set<std::string> out;
  for (const auto& [m, c] : wyser_moves(parse_clan(text))) {
    if (m.id == id) out.insert(print_clan(c));
  }
  return out;
}

}  // namespace

TEST(WyserMoves, SingleRewrites) {
  EXPECT_TRUE(single_moves("1122", 8).count("1+-1"));
  EXPECT_TRUE(single_moves("1122", 9).count("1-+1"));
  EXPECT_TRUE(single_moves("1122", 7).count("1212"));
  EXPECT_TRUE(single_moves("1212", 10).count("1221"));
  EXPECT_TRUE(single_moves("+-", 1).count("11"));
  EXPECT_TRUE(single_moves("-+", 2).count("11"));
  EXPECT_TRUE(single_moves("+11", 5).count("1+1"));
  EXPECT_TRUE(single_moves("-11", 6).count("1-1"));
  EXPECT_TRUE(single_moves("11+", 3).count("1+1"));
  EXPECT_TRUE(single_moves("11-", 4).count("1-1"));
  for (const auto& [m, c] : wyser_moves(parse_clan("1+-1-"))) {
    EXPECT_EQ(c.p(), 2);
    EXPECT_EQ(c.q(), 3);
  }
}

TEST(WyserMoves, SupplementaryOnSymmetricBlocks) {
  std::set<std::string> got;
  for (const auto& [m, c] : supplementary_moves(parse_clan("+11-"))) got.insert(print_clan(c));
  EXPECT_TRUE(got.count("1212"));
  got.clear();
  for (const auto& [m, c] : supplementary_moves(parse_clan("+-+-"))) got.insert(print_clan(c));
  EXPECT_TRUE(got.count("1212"));
}

TEST(FamilyMoves, AiiiSuccessors) {
  auto s = targets("1122", Family::aiii(2, 2));
  EXPECT_TRUE(s.count("1+-1"));
  EXPECT_TRUE(s.count("1-+1"));
  EXPECT_TRUE(s.count("1212"));
  auto g = targets("1122", Family::aiii(2, 2), true);
  EXPECT_FALSE(g.count("1+-1"));
  EXPECT_FALSE(g.count("1-+1"));
  EXPECT_TRUE(g.count("1212"));
}

TEST(FamilyMoves, MirroredExamples) {
  EXPECT_TRUE(targets("1-+12+-2", Family::cii(2, 2)).count(canon("13312442")));
  EXPECT_TRUE(targets("+-1122-+", Family::cii(2, 2)).count("+-1212-+"));
  EXPECT_TRUE(targets("11223344", Family::cii(2, 2)).count("12123434"));
  EXPECT_TRUE(targets("1+-1", Family::ci(2)).count("1221"));
  EXPECT_TRUE(targets("1-+1", Family::ci(2)).count("1221"));
  EXPECT_TRUE(targets("+11-", Family::ci(2)).count("1212"));
  // Two steps: move 5 with its mirror, then move 1 in both blocks.
  EXPECT_TRUE(leq_family(parse_clan("+11-+22-"), parse_clan("12123434"), Family::ci(4)));
  // 1122 has an odd left half, so the validator keeps it out of DIII.
  EXPECT_FALSE(is_valid(Param(parse_clan("1122")), Family::diii(2)));
  EXPECT_EQ(targets("++--", Family::diii(2)), std::set<std::string>{"1212"});
}

TEST(FamilyMoves, GraphMoveTypes) {
  EXPECT_FALSE(is_graph_move(8, Family::aiii(2, 2)));
  EXPECT_FALSE(is_graph_move(10, Family::aiii(2, 2)));
  EXPECT_TRUE(is_graph_move(7, Family::cii(2, 2)));
  EXPECT_TRUE(is_graph_move(kS1, Family::ci(2)));
  EXPECT_EQ(move_name(kS1 + 1), "S2");
}

TEST(FamilyMoves, SuccessorsRaiseRankAndStayInFamily) {
  for (const Family& f : {Family::ci(3), Family::cii(2, 1), Family::bdi(3, 3), Family::diii(3)}) {
    for (const auto& x : enumerate(f)) {
      for (const auto& s : successors(x, f)) {
        EXPECT_TRUE(is_valid(s.target, f));
        EXPECT_GT(rank(s.target, f), rank(x, f));
      }
    }
  }
}

TEST(FamilyMoves, ClosureEqualsCountingOrder) {
  for (const Family& f : {Family::aiii(2, 2), Family::aiii(3, 3), Family::ci(2), Family::ci(3),
                          Family::cii(2, 2), Family::bdi(4, 4), Family::bdi(4, 3), Family::diii(4)}) {
    OrbitPoset poset(f);
    EXPECT_EQ(order_from_moves(f, poset.vertices()), poset.relation()) << f.name();
  }
}

TEST(FamilyMoves, SingletonFamily) {
  Family f = Family::aiii(1, 0);
  OrbitPoset poset(f);
  auto rel = order_from_moves(f, poset.vertices());
  ASSERT_EQ(rel.size(), 1u);
  EXPECT_TRUE(rel[0][0]);
}

TEST(FamilyMoves, WordText) {
  for (const auto& s : successors(parse_param("1-+12+-2", Family::cii(2, 2)), Family::cii(2, 2))) {
    if (param_text(s.target) == canon("13312442")) {
      EXPECT_FALSE(s.word.steps.empty());
      EXPECT_FALSE(s.word.text().empty());
    }
  }
}
