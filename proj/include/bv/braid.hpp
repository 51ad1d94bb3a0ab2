#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bv {

// perm[j] = top position of the strand that starts at bottom position j.
using Permutation = std::vector<std::uint32_t>;

// Crossing convention: letter +i (1 <= i <= n-1) crosses the strands at
// positions i-1 and i with the strand at position i-1 passing OVER.
// Braids are read bottom to top and composed left to right: ab is a, then b.
class BraidWord {
 public:
  explicit BraidWord(std::size_t strands = 1, std::vector<int> letters = {});

  // "n: i1 -i2 ..."
  static BraidWord parse(std::string_view text);

  std::size_t strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::string str() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::size_t strands_;
  std::vector<int> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& b);
BraidWord single_crossing(std::size_t strands, std::size_t i, int sign);
std::size_t crossing_count(const BraidWord& b);
Permutation underlying_permutation(const BraidWord& b);
// New strand is inserted at bottom position i+1, parallel to strand i.
BraidWord split_strand(const BraidWord& b, std::size_t i);
BraidWord remove_strand(const BraidWord& b, std::size_t i);
bool is_parallel_pair(const BraidWord& b, std::size_t i);

// Permutation braids (simple elements of the positive monoid).
namespace garside {

Permutation identity(std::size_t n);
Permutation delta(std::size_t n);
bool is_identity(const Permutation& a);
bool is_delta(const Permutation& a);
Permutation inverse(const Permutation& a);
// Simple braid a followed by b, when the product is known to be simple.
Permutation then(const Permutation& a, const Permutation& b);
// a * right_complement(a) = Delta.
Permutation right_complement(const Permutation& a);
// Conjugation by Delta.
Permutation flip(const Permutation& a);
// Greatest common left divisor, O(n log n) merge sort.
Permutation left_meet(const Permutation& a, const Permutation& b);
// Same meet through transitive closure of non-inversions; O(n^3), for tests.
Permutation left_meet_reference(const Permutation& a, const Permutation& b);
// Every crossing at the top of a is also a crossing at the bottom of b.
bool left_weighted(const Permutation& a, const Permutation& b);
std::size_t crossings(const Permutation& a);
// Positive word of a simple braid (bubble sort order).
std::vector<int> positive_letters(const Permutation& a);

}  // namespace garside

// An element of B_n held in left normal form Delta^p A_1 ... A_k.
class Braid {
 public:
  explicit Braid(std::size_t strands = 1) : n_(strands) {}
  static Braid from_word(const BraidWord& w);
  static Braid crossing(std::size_t strands, std::size_t i, int sign);

  std::size_t strands() const { return n_; }
  long infimum() const { return inf_; }
  const std::vector<Permutation>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  Permutation permutation() const;
  // Canonical word: Delta^p A_1..A_k for p >= 0, fraction form N^-1 P otherwise.
  BraidWord word() const;
  std::size_t crossing_count() const;

  Braid operator*(const Braid& other) const;
  Braid inverse() const;

  // Replace the strand at bottom position j by multiplicity[j] parallel copies.
  Braid cable(const std::vector<std::size_t>& multiplicity) const;
  Braid split_strand(std::size_t i) const;
  Braid remove_strand(std::size_t i) const;
  bool is_parallel_pair(std::size_t i) const;

  void append_key(std::string& out) const;

  friend bool operator==(const Braid&, const Braid&) = default;

 private:
  friend class NormalFormBuilder;

  std::size_t n_;
  long inf_ = 0;
  std::vector<Permutation> factors_;
};

inline Braid normal_form(const BraidWord& w) { return Braid::from_word(w); }

}  // namespace bv
