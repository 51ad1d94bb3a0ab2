#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bv/binary_tree.hpp"
#include "bv/braid.hpp"

namespace bv {

struct BranchPair {
  BinaryWord u;  // branch of the domain tree
  BinaryWord v;  // branch of the range tree joined to u by a strand
  friend bool operator==(const BranchPair&, const BranchPair&) = default;
};

// Tree-braid-tree diagram (T+, br, T-).  Strand j starts at leaf j of T+
// (bottom) and ends at leaf perm(j) of T- (top).
class Diagram {
 public:
  Diagram() : braid_(1) {}
  Diagram(BinaryTree plus, Braid braid, BinaryTree minus);

  // "tplus=<branches> | braid=<n: letters> | tminus=<branches>"
  static Diagram parse(std::string_view text);
  std::string str() const;

  const BinaryTree& plus() const { return plus_; }
  const BinaryTree& minus() const { return minus_; }
  const Braid& braid() const { return braid_; }
  bool known_reduced() const { return reduced_; }

  // Branch pairs of this representative (no reduction).
  std::vector<BranchPair> branch_pairs() const;

  // Elementary expansion: caret on a range (resp. domain) leaf, strand split,
  // caret on the leaf at the other end.
  Diagram split_range_leaf(std::size_t t) const;
  Diagram split_domain_leaf(std::size_t s) const;
  // Expand to a refinement of the range (domain) tree in one cabling pass.
  Diagram expand_range(const BinaryTree& finer) const;
  Diagram expand_domain(const BinaryTree& finer) const;

  // Structural equality of representatives; use bv::equal for group equality.
  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.plus_ == b.plus_ && a.minus_ == b.minus_ && a.braid_ == b.braid_;
  }

 private:
  friend Diagram reduce(const Diagram&);
  friend Diagram reduce_at(const Diagram&, std::size_t);
  friend Diagram invert(const Diagram&);

  BinaryTree plus_, minus_;
  Braid braid_;
  bool reduced_ = false;
};

// Leaf pairs (i, i+1) of T+ that can be reduced right now.
std::vector<std::size_t> reducible_pairs(const Diagram& d);
Diagram reduce_at(const Diagram& d, std::size_t i);
Diagram reduce(const Diagram& d);

Diagram multiply(const Diagram& a, const Diagram& b);
// Same product built from elementary expansions only; reference for tests.
Diagram multiply_by_elementary_splits(const Diagram& a, const Diagram& b);
Diagram invert(const Diagram& d);
bool equal(const Diagram& a, const Diagram& b);

std::vector<BranchPair> branches(const Diagram& d);
std::size_t n_carets(const Diagram& d);
std::size_t ell0(const Diagram& d);
std::size_t ell1(const Diagram& d);
std::string canonical_key(const Diagram& d);
bool is_in_F(const Diagram& d);

}  // namespace bv
