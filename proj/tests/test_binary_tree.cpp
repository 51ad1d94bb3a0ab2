#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "bv/binary_tree.hpp"
#include "bv/error.hpp"

using bv::BinaryTree;
using bv::BinaryWord;

namespace {

std::vector<std::string> strs(const std::vector<BinaryWord>& v) {
  std::vector<std::string> out;
  for (const auto& w : v) out.push_back(w.bits());
  return out;
}

BinaryTree random_tree(std::mt19937& rng, std::size_t carets) {
  BinaryTree t;
  for (std::size_t c = 0; c < carets; ++c) {
    t = t.split_leaf(std::uniform_int_distribution<std::size_t>(0, t.leaves() - 1)(rng));
  }
  return t;
}

// All trees with exactly c carets, built from scratch.
std::vector<BinaryTree> all_trees(std::size_t c) {
  if (c == 0) return {BinaryTree()};
  std::vector<BinaryTree> out;
  for (std::size_t l = 0; l < c; ++l) {
    for (const auto& a : all_trees(l)) {
      for (const auto& b : all_trees(c - 1 - l)) out.push_back(BinaryTree::caret(a, b));
    }
  }
  return out;
}

// Branch set of the smallest common refinement via prefix closures.
std::vector<std::string> refinement_oracle(const BinaryTree& a, const BinaryTree& b) {
  std::set<std::string> nodes;
  for (const auto* t : {&a, &b}) {
    for (const auto& br : t->branches()) {
      for (std::size_t k = 0; k <= br.size(); ++k) nodes.insert(br.bits().substr(0, k));
    }
  }
  std::vector<std::string> leaves;
  for (const auto& n : nodes) {
    if (!nodes.count(n + "0")) leaves.push_back(n);
  }
  return leaves;  // std::set order is lexicographic with '0' < '1'
}

}  // namespace

TEST_CASE("all_right trees") {
  CHECK(BinaryTree::all_right(0) == BinaryTree());
  CHECK(strs(BinaryTree::all_right(1).branches()) == std::vector<std::string>{"0", "1"});
  CHECK(strs(BinaryTree::all_right(3).branches()) == std::vector<std::string>{"0", "10", "110", "111"});
  for (std::size_t n = 1; n < 9; ++n) {
    auto t = BinaryTree::all_right(n);
    CHECK(t.carets() == n);
    CHECK(t.ell0() == 1);
    CHECK(t.ell1() == n);
  }
}

TEST_CASE("branches and ell") {
  CHECK(strs(BinaryTree().branches()) == std::vector<std::string>{""});
  auto x0plus = BinaryTree::parse("00,01,1");
  CHECK(strs(x0plus.branches()) == std::vector<std::string>{"00", "01", "1"});
  auto x0minus = BinaryTree::parse("0,10,11");
  CHECK(x0minus.ell0() == 1);
  CHECK(x0minus.ell1() == 2);
  CHECK(BinaryTree().ell0() == 0);
  CHECK(BinaryTree().ell1() == 0);
  CHECK(x0plus.leaf_index(BinaryWord("01")) == 1u);
  CHECK_FALSE(x0plus.leaf_index(BinaryWord("0")));
  CHECK_FALSE(x0plus.leaf_index(BinaryWord("010")));
  CHECK(x0plus.has_interior(BinaryWord("0")));
  CHECK_FALSE(x0plus.has_interior(BinaryWord("1")));
}

TEST_CASE("parse round trip and errors") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto t = random_tree(rng, it % 15);
    CHECK(BinaryTree::parse(t.str()) == t);
    CHECK(BinaryTree::from_branches(t.branches()) == t);
    CHECK(t.branches().size() == t.carets() + 1);
    auto br = strs(t.branches());
    CHECK(std::is_sorted(br.begin(), br.end()));
  }
  CHECK(BinaryTree::parse("e") == BinaryTree());
  CHECK_THROWS_AS(BinaryTree::parse("0,1,10"), bv::ParseError);
  CHECK_THROWS_AS(BinaryTree::parse("0,12"), bv::ParseError);
  CHECK_THROWS_AS(BinaryTree::parse("00,1"), bv::ParseError);
  try {
    BinaryTree::parse("0, 1x");
  } catch (const bv::ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("minimal tree containing a branch") {
  CHECK(BinaryTree::minimal_containing(BinaryWord("0")).carets() == 1);
  CHECK(strs(BinaryTree::minimal_containing(BinaryWord("10")).branches()) ==
        std::vector<std::string>{"0", "10", "11"});
  CHECK(BinaryTree::minimal_containing(BinaryWord("111")) == BinaryTree::all_right(3));
  CHECK_THROWS(BinaryTree::minimal_containing(BinaryWord()));
  // brute force: the unique tree of least caret count with u as a branch
  for (std::string u : {"0", "1", "01", "10", "011", "101", "0000", "0110", "1011"}) {
    BinaryWord w(u);
    std::vector<BinaryTree> best;
    for (std::size_t c = 0; c <= u.size() && best.empty(); ++c) {
      for (const auto& t : all_trees(c)) {
        if (t.has_branch(w)) best.push_back(t);
      }
    }
    REQUIRE(best.size() == 1);
    CHECK(best[0] == BinaryTree::minimal_containing(w));
    CHECK(best[0].carets() == u.size());
  }
}

TEST_CASE("attach_at") {
  auto caret = BinaryTree::all_right(1);
  CHECK(caret.attach_at(BinaryWord("1"), BinaryTree()) == caret);
  CHECK(strs(caret.attach_at(BinaryWord("0"), caret).branches()) == std::vector<std::string>{"00", "01", "1"});
  auto x0p = BinaryTree::parse("00,01,1");
  CHECK(caret.attach_at(BinaryWord("0"), x0p).str() == "000,001,01,1");
  CHECK_THROWS(caret.attach_at(BinaryWord("00"), caret));
  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    auto t = random_tree(rng, 1 + it % 8);
    auto s = random_tree(rng, it % 5);
    auto br = t.branches();
    auto u = br[static_cast<std::size_t>(it) % br.size()];
    auto r = t.attach_at(u, s);
    CHECK(r.carets() == t.carets() + s.carets());
    CHECK(t.is_rooted_subtree_of(r));
  }
}

TEST_CASE("common refinement") {
  std::mt19937 rng(11);
  auto caret = BinaryTree::all_right(1);
  auto x0p = BinaryTree::parse("00,01,1");
  CHECK(common_refinement(caret, x0p) == x0p);
  CHECK(common_refinement(BinaryTree(), x0p) == x0p);
  for (int it = 0; it < 300; ++it) {
    auto a = random_tree(rng, static_cast<std::size_t>(it) % 13);
    auto b = random_tree(rng, static_cast<std::size_t>(it * 7) % 13);
    auto c = random_tree(rng, static_cast<std::size_t>(it * 3) % 13);
    auto ab = common_refinement(a, b);
    CHECK(strs(ab.branches()) == refinement_oracle(a, b));
    CHECK(ab == common_refinement(b, a));
    CHECK(common_refinement(a, a) == a);
    CHECK(common_refinement(ab, c) == common_refinement(a, common_refinement(b, c)));
    CHECK(a.is_rooted_subtree_of(ab));
    auto subs = a.subtrees_below_leaves(ab);
    CHECK(a.graft(subs) == ab);
  }
}

TEST_CASE("caret pairs, split and collapse") {
  auto t = BinaryTree::parse("00,01,10,110,111");
  auto p = t.caret_pairs();
  CHECK(p == std::vector<bool>{true, false, false, true});
  CHECK(t.collapse_pair(0).str() == "0,10,110,111");
  CHECK(t.collapse_pair(3).str() == "00,01,10,11");
  CHECK_THROWS(t.collapse_pair(1));
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    auto s = random_tree(rng, static_cast<std::size_t>(it) % 10);
    std::size_t leaf = static_cast<std::size_t>(it) % s.leaves();
    auto split = s.split_leaf(leaf);
    CHECK(split.caret_pairs()[leaf]);
    CHECK(split.collapse_pair(leaf) == s);
  }
}
