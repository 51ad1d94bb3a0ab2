#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "bv/braid.hpp"
#include "bv/error.hpp"

using namespace bv;

namespace {

// Artin action of B_n on the free group F_n: an independent, faithful
// equality test.  Generators are 1..n, inverses negative.
using FreeWord = std::vector<int>;

void push_reduced(FreeWord& w, int g) {
  if (!w.empty() && w.back() == -g) {
    w.pop_back();
  } else {
    w.push_back(g);
  }
}

std::vector<FreeWord> artin_images(const BraidWord& b) {
  const int n = static_cast<int>(b.strands());
  std::vector<FreeWord> img(static_cast<std::size_t>(n) + 1);
  for (int g = 1; g <= n; ++g) img[static_cast<std::size_t>(g)] = {g};
  for (int l : b.letters()) {
    int i = std::abs(l);
    // images of x_i, x_{i+1} under the letter automorphism
    FreeWord psi_i, psi_j;
    if (l > 0) {
      psi_i = {i, i + 1, -i};
      psi_j = {i};
    } else {
      psi_i = {i + 1};
      psi_j = {-(i + 1), i, i + 1};
    }
    auto subst = [&img](const FreeWord& w) {
      FreeWord out;
      for (int g : w) {
        const FreeWord& s = img[static_cast<std::size_t>(std::abs(g))];
        if (g > 0) {
          for (int x : s) push_reduced(out, x);
        } else {
          for (auto it = s.rbegin(); it != s.rend(); ++it) push_reduced(out, -*it);
        }
      }
      return out;
    };
    FreeWord ni = subst(psi_i), nj = subst(psi_j);
    img[static_cast<std::size_t>(i)] = std::move(ni);
    img[static_cast<std::size_t>(i) + 1] = std::move(nj);
  }
  return img;
}

BraidWord random_word(std::mt19937& rng, std::size_t n, std::size_t len) {
  std::vector<int> l;
  std::uniform_int_distribution<int> letter(1, static_cast<int>(n) - 1);
  for (std::size_t k = 0; k < len; ++k) l.push_back(rng() % 2 ? letter(rng) : -letter(rng));
  return BraidWord(n, l);
}

bool is_normal(const Braid& b) {
  const auto& f = b.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (garside::is_identity(f[i]) || garside::is_delta(f[i])) return false;
    if (i + 1 < f.size() && !garside::left_weighted(f[i], f[i + 1])) return false;
  }
  return true;
}

std::vector<Permutation> all_perms(std::size_t n) {
  Permutation p = garside::identity(n);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("word text form") {
  auto w = BraidWord::parse("3: 1 -2 1");
  CHECK(w.strands() == 3);
  CHECK(w.letters() == std::vector<int>{1, -2, 1});
  CHECK(BraidWord::parse(w.str()) == w);
  CHECK(BraidWord::parse("4:").letters().empty());
  CHECK_THROWS_AS(BraidWord::parse("3: 1 3"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("3 1"), ParseError);
  try {
    BraidWord::parse("3: 1 x");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(BraidWord(2, {2}), std::out_of_range);
}

TEST_CASE("compose, invert, crossing count") {
  auto a = BraidWord::parse("3: 1 2");
  CHECK(invert(a) == BraidWord::parse("3: -2 -1"));
  CHECK(compose(a, BraidWord(3)) == a);
  CHECK(normal_form(compose(a, invert(a))).is_identity());
  CHECK_THROWS(compose(a, BraidWord(4)));
  CHECK(crossing_count(BraidWord(3)) == 0);
  CHECK(crossing_count(BraidWord::parse("3: 1 2 1")) == 3);
  CHECK(normal_form(BraidWord::parse("3: 1 -1 2")).crossing_count() == 1);
  CHECK(normal_form(BraidWord::parse("3: 1 -1 2")).word() == BraidWord::parse("3: 2"));
  CHECK(single_crossing(4, 2, -1) == BraidWord::parse("4: -2"));
}

TEST_CASE("underlying permutation") {
  CHECK(underlying_permutation(BraidWord(4)) == garside::identity(4));
  CHECK(underlying_permutation(BraidWord::parse("4: -2")) == Permutation{0, 2, 1, 3});
  // (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0, 2 -> 1
  CHECK(underlying_permutation(BraidWord::parse("3: 1 2")) == Permutation{2, 0, 1});
  std::mt19937 rng(1);
  for (int it = 0; it < 200; ++it) {
    auto w = random_word(rng, 2 + it % 6, static_cast<std::size_t>(it % 15));
    CHECK(normal_form(w).permutation() == underlying_permutation(w));
  }
}

TEST_CASE("weak-order meet: merge sort agrees with transitive closure") {
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u}) {
    auto ps = all_perms(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        REQUIRE(garside::left_meet(a, b) == garside::left_meet_reference(a, b));
      }
    }
  }
  std::mt19937 rng(2);
  for (int it = 0; it < 3000; ++it) {
    std::size_t n = 6 + static_cast<std::size_t>(it % 7);
    Permutation a = garside::identity(n), b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    REQUIRE(garside::left_meet(a, b) == garside::left_meet_reference(a, b));
  }
}

TEST_CASE("meet is the greatest common prefix (S_4, via inversion sets)") {
  // c <= a in the prefix order iff every pair crossing in c crosses in a
  auto crosses = [](const Permutation& p, std::size_t j, std::size_t k) { return p[j] > p[k]; };
  auto below = [&](const Permutation& c, const Permutation& a) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        if (crosses(c, j, k) && !crosses(a, j, k)) return false;
      }
    }
    return true;
  };
  auto ps = all_perms(4);
  for (const auto& a : ps) {
    for (const auto& b : ps) {
      auto m = garside::left_meet(a, b);
      CHECK(below(m, a));
      CHECK(below(m, b));
      for (const auto& c : ps) {
        if (below(c, a) && below(c, b)) CHECK(below(c, m));
      }
    }
  }
}

TEST_CASE("normal form decides equality like the Artin action") {
  CHECK(normal_form(BraidWord(3)).is_identity());
  CHECK(normal_form(BraidWord::parse("3: 1 2 1")) == normal_form(BraidWord::parse("3: 2 1 2")));
  CHECK(normal_form(BraidWord::parse("3: 1 -1")).is_identity());
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int i = 1; i < static_cast<int>(n); ++i) {
      for (int j = 1; j < static_cast<int>(n); ++j) {
        if (std::abs(i - j) >= 2) {
          CHECK(normal_form(BraidWord(n, {i, j})) == normal_form(BraidWord(n, {j, i})));
        }
        if (j == i + 1) {
          CHECK(normal_form(BraidWord(n, {i, j, i})) == normal_form(BraidWord(n, {j, i, j})));
        }
      }
    }
  }
  std::mt19937 rng(4);
  int equal_pairs = 0;
  for (int it = 0; it < 3000; ++it) {
    std::size_t n = 2 + static_cast<std::size_t>(it % 4);
    auto u = random_word(rng, n, static_cast<std::size_t>(rng() % 7));
    auto v = random_word(rng, n, static_cast<std::size_t>(rng() % 7));
    auto bu = normal_form(u), bv = normal_form(v);
    REQUIRE(is_normal(bu));
    bool same = bu == bv;
    equal_pairs += same;
    REQUIRE(same == (artin_images(u) == artin_images(v)));
  }
  CHECK(equal_pairs > 10);
}

TEST_CASE("normal form arithmetic") {
  std::mt19937 rng(9);
  for (int it = 0; it < 400; ++it) {
    std::size_t n = 2 + static_cast<std::size_t>(it % 7);
    auto u = random_word(rng, n, static_cast<std::size_t>(it % 19));
    auto v = random_word(rng, n, static_cast<std::size_t>(it % 13));
    auto bu = normal_form(u), bv = normal_form(v);
    auto prod = bu * bv;
    CHECK(is_normal(prod));
    CHECK(prod == normal_form(compose(u, v)));
    CHECK(bu.inverse() == normal_form(invert(u)));
    CHECK((bu * bu.inverse()).is_identity());
    // idempotence through the canonical word
    CHECK(normal_form(bu.word()) == bu);
    CHECK(bu.word().letters().size() == bu.crossing_count());
  }
}

TEST_CASE("split and remove strands on words") {
  CHECK(split_strand(BraidWord(1), 0) == BraidWord(2));
  CHECK(remove_strand(BraidWord(2), 0) == BraidWord(1));
  // strand 1 of s1 s2 is involved only in the first crossing
  CHECK(remove_strand(BraidWord::parse("3: 1 2"), 1) == BraidWord::parse("2: 1"));
  auto s = split_strand(BraidWord::parse("2: 1"), 0);
  CHECK(s == BraidWord::parse("3: 2 1"));
  CHECK(is_parallel_pair(s, 0));
  CHECK_FALSE(is_parallel_pair(s, 1));
  CHECK(is_parallel_pair(BraidWord(4), 2));
  CHECK_FALSE(is_parallel_pair(BraidWord::parse("3: 2"), 1));
  CHECK_FALSE(is_parallel_pair(BraidWord::parse("3: 2 2"), 1));  // pure but the pair twists
  CHECK_THROWS(split_strand(BraidWord(3), 3));

  std::mt19937 rng(13);
  for (int it = 0; it < 300; ++it) {
    std::size_t n = 1 + static_cast<std::size_t>(it % 6);
    auto w = n == 1 ? BraidWord(1) : random_word(rng, n, static_cast<std::size_t>(it % 21));
    std::size_t i = rng() % n;
    auto sp = split_strand(w, i);
    CHECK(sp.strands() == n + 1);
    CHECK(normal_form(remove_strand(sp, i + 1)) == normal_form(w));
    CHECK(normal_form(remove_strand(sp, i)) == normal_form(w));
    CHECK(is_parallel_pair(sp, i));
    auto p = underlying_permutation(sp);
    CHECK(p[i + 1] == p[i] + 1);
  }
}

TEST_CASE("factor-level cabling agrees with word-level splitting") {
  std::mt19937 rng(17);
  for (int it = 0; it < 300; ++it) {
    std::size_t n = 2 + static_cast<std::size_t>(it % 6);
    auto w = random_word(rng, n, static_cast<std::size_t>(it % 17));
    auto b = normal_form(w);
    std::size_t i = rng() % n;
    CHECK(b.split_strand(i) == normal_form(split_strand(w, i)));
    CHECK(b.remove_strand(i) == normal_form(remove_strand(w, i)));
    std::size_t j = rng() % (n - 1);
    CHECK(b.is_parallel_pair(j) == is_parallel_pair(w, j));
    // a multi-cable equals repeated splits, right to left
    std::vector<std::size_t> m(n);
    for (auto& x : m) x = 1 + rng() % 3;
    auto ref = w;
    for (std::size_t k = n; k-- > 0;) {
      for (std::size_t c = 1; c < m[k]; ++c) ref = split_strand(ref, k);
    }
    CHECK(b.cable(m) == normal_form(ref));
  }
}
