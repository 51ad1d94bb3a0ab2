#pragma once

// Shared generators of random test inputs.

#include <random>
#include <string>

#include "bv/generators.hpp"

namespace testing_support {

inline bv::BinaryTree random_tree(std::mt19937& rng, std::size_t carets) {
  bv::BinaryTree t;
  for (std::size_t c = 0; c < carets; ++c) {
    t = t.split_leaf(std::uniform_int_distribution<std::size_t>(0, t.leaves() - 1)(rng));
  }
  return t;
}

inline bv::BraidWord random_braid_word(std::mt19937& rng, std::size_t strands, std::size_t len) {
  std::vector<int> l;
  if (strands < 2) return bv::BraidWord(strands);
  std::uniform_int_distribution<int> letter(1, static_cast<int>(strands) - 1);
  for (std::size_t k = 0; k < len; ++k) l.push_back(rng() % 2 ? letter(rng) : -letter(rng));
  return bv::BraidWord(strands, l);
}

// Unreduced random diagram; braid_len = 0 gives an element of V with trivial braid.
inline bv::Diagram random_diagram(std::mt19937& rng, std::size_t carets, std::size_t braid_len) {
  auto plus = random_tree(rng, carets), minus = random_tree(rng, carets);
  auto w = random_braid_word(rng, carets + 1, braid_len);
  return bv::Diagram(plus, bv::Braid::from_word(w), minus);
}

// Random word over {x0, x1, s1, t1} and inverses.
inline bv::GenWord random_gen_word(std::mt19937& rng, std::size_t len) {
  static const bv::Family fams[] = {bv::Family::x, bv::Family::x, bv::Family::sigma, bv::Family::tau};
  static const std::size_t idx[] = {0, 1, 1, 1};
  std::vector<bv::GenLetter> out;
  for (std::size_t k = 0; k < len; ++k) {
    int g = static_cast<int>(rng() % 4);
    out.push_back({fams[g], idx[g], rng() % 2 ? 1 : -1});
  }
  return bv::GenWord(std::move(out));
}

// The branch map of a diagram applied to a long binary string.
inline std::string apply_branch_map(const bv::Diagram& d, const std::string& z) {
  for (const auto& bp : d.branch_pairs()) {
    if (z.compare(0, bp.u.size(), bp.u.bits()) == 0) return bp.v.bits() + z.substr(bp.u.size());
  }
  return "?";
}

}  // namespace testing_support
