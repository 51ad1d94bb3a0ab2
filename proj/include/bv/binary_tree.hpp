#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bv {

// Finite word over {0,1}; a branch address (0 = left, 1 = right).
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string_view bits);

  static BinaryWord repeat(char bit, std::size_t n);

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  char operator[](std::size_t i) const { return bits_[i]; }

  bool is_prefix_of(const BinaryWord& other) const;
  bool is_strict_prefix_of(const BinaryWord& other) const;

  BinaryWord child(char bit) const;
  BinaryWord operator+(const BinaryWord& other) const;

  // "e" for the empty word.
  std::string str() const;

  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::string bits_;
};

// Rooted binary tree, stored as its preorder code: 1 = caret, 0 = leaf.
// The code determines the tree uniquely, so equality is code equality.
class BinaryTree {
 public:
  BinaryTree() : code_{0} {}

  static BinaryTree caret(const BinaryTree& left, const BinaryTree& right);
  static BinaryTree all_right(std::size_t n);
  static BinaryTree from_preorder(std::vector<std::uint8_t> code);
  // Branches must form a maximal prefix-free set; order is irrelevant.
  static BinaryTree from_branches(std::vector<BinaryWord> branches);
  static BinaryTree minimal_containing(const BinaryWord& u);
  // Comma-separated branch list, "e" (or empty) for the single leaf.
  static BinaryTree parse(std::string_view text);

  std::size_t carets() const { return code_.size() / 2; }
  std::size_t leaves() const { return carets() + 1; }
  const std::vector<std::uint8_t>& preorder() const { return code_; }

  std::vector<BinaryWord> branches() const;
  std::size_t ell0() const;
  std::size_t ell1() const;
  std::optional<std::size_t> leaf_index(const BinaryWord& u) const;
  bool has_branch(const BinaryWord& u) const { return leaf_index(u).has_value(); }
  // True iff u is a proper prefix of some branch (an interior vertex).
  bool has_interior(const BinaryWord& u) const;

  BinaryTree attach_at(const BinaryWord& u, const BinaryTree& s) const;
  BinaryTree split_leaf(std::size_t leaf) const;
  // Replace leaf i by subtrees[i]; subtrees.size() must equal leaves().
  BinaryTree graft(const std::vector<BinaryTree>& subtrees) const;
  // For a refinement `finer` of *this: the subtree of `finer` hanging below
  // each leaf of *this.  Throws if *this is not a rooted subtree of `finer`.
  std::vector<BinaryTree> subtrees_below_leaves(const BinaryTree& finer) const;
  bool is_rooted_subtree_of(const BinaryTree& other) const;

  // pairs[i] is true iff leaves i and i+1 hang from one caret.
  std::vector<bool> caret_pairs() const;
  BinaryTree collapse_pair(std::size_t leaf) const;

  std::string str() const;

  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

 private:
  explicit BinaryTree(std::vector<std::uint8_t> code, bool) : code_(std::move(code)) {}
  std::size_t subtree_end(std::size_t pos) const;
  std::size_t leaf_position(std::size_t leaf) const;

  std::vector<std::uint8_t> code_;
};

BinaryTree common_refinement(const BinaryTree& a, const BinaryTree& b);

}  // namespace bv
