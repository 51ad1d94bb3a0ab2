#include <doctest.h>

#include "bv/divergence.hpp"
#include "bv/error.hpp"
#include "support.hpp"

using namespace bv;
using namespace testing_support;

namespace {

Diagram ev(const char* w) { return eval(GenWord::parse(w)); }

DivergenceConfig scaled() { return {Rational(1, 3), 25, 8, PathMode::test_scale}; }

bool all_pass(const VerifyReport& r) {
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::fail) {
      MESSAGE(c.name << ": " << c.detail);
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rationals and configs") {
  CHECK(Rational::parse("2/6") == Rational(1, 3));
  CHECK(Rational::parse("4").str() == "4");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), ParseError);
  CHECK_NOTHROW(DivergenceConfig::test_scale().validate());
  CHECK_NOTHROW(DivergenceConfig::paper().validate());
  DivergenceConfig bad = DivergenceConfig::paper();
  bad.Q = 100;
  CHECK_THROWS(bad.validate());
  CHECK(scaled().delta() == Rational(1, 750));
}

TEST_CASE("subpath 1") {
  auto g = ev("x0 x0");
  CHECK(n_carets(g) == 3);
  auto w1 = subpath1(g);
  CHECK(w1.str() == "x0 x0 x1^-1 x0^-1");
  // w1 is the copy of x0 below the branch 0
  CHECK(equal(eval(w1), subscript_copy(x_gen(0), BinaryWord("0"))));
  auto g1 = multiply(g, eval(w1));
  CHECK(n_carets(g1) == n_carets(g) + 2);
  CHECK_FALSE(reduce(g1).minus().has_branch(BinaryWord("0")));
  CHECK(subpath1(ev("x0^-1 x1^-1 x0^-1")).empty());
  CHECK_THROWS(subpath1(x_gen(0)));
}

TEST_CASE("subpath 2") {
  auto g1 = x_gen(1);
  REQUIRE(n_carets(g1) == 3);
  auto w2 = subpath2(g1, DivergenceConfig::test_scale());
  CHECK(w2.str() == "x0^-1 x0^-1 x0^-1 x0^-1 x1 x0 x0 x0 x0");
  CHECK(equal(eval(w2), x_gen(5)));
}

TEST_CASE("the braid of h and its word") {
  CHECK(br_h_word(3, 0).empty());
  CHECK(br_h_word(3, 3).str() == "x0^-1 s1^-1 t1 x0 s1 x1");
  for (std::size_t n = 1; n <= 9; ++n) {
    const BinaryTree tn = BinaryTree::all_right(n);
    for (std::size_t k = 0; k <= n; ++k) {
      Braid b = br_h_braid(n, k);
      // strand k moves to the front, the others shift right by one
      auto perm = b.permutation();
      for (std::size_t j = 0; j <= n; ++j) CHECK(perm[j] == (j == k ? 0 : j < k ? j + 1 : j));
      CHECK(b.crossing_count() == k);
      auto w = br_h_word(n, k);
      CHECK(w.over_finite_alphabet());
      CHECK(w.size() <= 2 * n);
      CHECK(equal(eval(w), Diagram(tn, b, tn)));
    }
  }
  CHECK_THROWS(br_h_word(3, 4));
}

TEST_CASE("subpath 3") {
  std::mt19937 rng(61);
  const auto cfg = scaled();
  int tried = 0;
  while (tried < 25) {
    auto g = eval(random_gen_word(rng, 2 + rng() % 7));
    if (n_carets(g) < 3) continue;
    ++tried;
    auto g1 = multiply(g, eval(subpath1(g)));
    auto g2 = multiply(g1, eval(subpath2(g1, cfg)));
    auto w3 = subpath3(g1);
    const std::size_t n1 = n_carets(g1);
    CHECK(w3.size() <= 14 * n1);
    CHECK(equal(eval(w3), subpath3_element(g1)));
    // g1 h sends the leftmost leaf straight across
    auto g1h = multiply(g1, subpath3_element(g1));
    CHECK(reduce(g1h).braid().permutation()[0] == 0);
    auto g3 = multiply(g2, eval(w3));
    const std::size_t l = ell0(g3);
    CHECK(l <= n1 + 1);
    CHECK(static_cast<long>(n_carets(g3)) >= (cfg.M - 1) * static_cast<long>(n1) + cfg.M + 3);
    const auto br = branches(g3);
    CHECK(br.front().u == BinaryWord::repeat('0', l));
    CHECK(br.front().v == BinaryWord::repeat('0', l));
  }
}

TEST_CASE("terminal and patch words") {
  CHECK(v_word(1, 1).str() == "x0 x1^-1");
  for (long Q : {1, 2, 8}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      auto p = p_word(k, Q);
      CHECK(p.size() <= static_cast<std::size_t>(2 * Q) * (k + 1));
      CHECK(equal(multiply(eval(v_word(k, Q)), eval(p)), eval(v_word(k + 1, Q))));
      // the positive part of v(k) p' always starts with x0^i, i >= Qk
      Diagram d = eval(v_word(k, Q));
      for (std::size_t i = 0; i <= p.size(); ++i) {
        if (i) d = multiply(d, letter_diagram(p.letters()[i - 1]));
        auto pos = normal_form_F(d).first;
        std::size_t head = 0;
        while (head < pos.size() && pos.letters()[head] == GenLetter{Family::x, 0, 1}) ++head;
        CHECK(head >= static_cast<std::size_t>(Q) * k);
        CHECK(n_carets(d) >= static_cast<std::size_t>(Q) * k + 1);
      }
    }
  }
}

TEST_CASE("end-to-end paths") {
  auto c = build_path(GenWord::parse("x0 x0"), {Rational(1), 1, 8, PathMode::test_scale}, {.k = 2});
  CHECK(equal(eval(c.g_word + c.path()), eval(v_word(2, 8))));
  CHECK(c.path().size() <= 2 * (c.w1.size() + c.w2.size() + c.w3.size()) + 3 * 8 * 2);
  CHECK(all_pass(verify_certificate(c)));

  std::mt19937 rng(67);
  for (int it = 0; it < 20; ++it) {
    auto w = random_gen_word(rng, 1 + rng() % 8);
    if (n_carets(eval(w)) == 0) continue;
    auto cert = build_path(w, scaled());
    CHECK(equal(eval(w + cert.path()), eval(cert.terminal)));
    auto rep = verify_certificate(cert);
    CHECK(all_pass(rep));
    CHECK(rep.find("terminal")->status == CheckStatus::pass);
    CHECK(rep.find("segment_bound")->status != CheckStatus::skipped);
  }
}

TEST_CASE("escape through x1") {
  for (int kase = 1; kase <= 3; ++kase) {
    auto c = build_path(GenWord::parse("t1"), scaled(), {.k = 3, .escape_case = kase});
    CHECK(c.escape.str() == "x1");
    CHECK(c.escape_case == kase);
    CHECK(c.inner_k == static_cast<std::size_t>(1 + kase));
    CHECK(n_carets(ev("t1 x1")) >= 3);
    CHECK(all_pass(verify_certificate(c)));
  }
  // case chosen from oracle lengths: |t1| = 1 and |t1 x1| = 2
  auto c = build_path(GenWord::parse("t1"), scaled(), {.oracle_radius = 2});
  CHECK(c.k == 1);
  CHECK(c.escape_case == 3);
  CHECK(c.prefix_log[0].oracle_len == 1u);
  CHECK(c.prefix_log[1].oracle_len == 2u);
}

TEST_CASE("build errors") {
  CHECK_THROWS(build_path(GenWord::parse("x0 x0^-1"), scaled()));
  // Q k too small for the left spine of g3
  CHECK_THROWS(build_path(GenWord::parse("x0 x0"), {Rational(1), 1, 1, PathMode::test_scale}, {.k = 1}));
  CHECK_THROWS(build_path(GenWord::parse("t1"), scaled(), {.k = 1, .escape_case = 1}));
}

TEST_CASE("certificate text and negative controls") {
  auto c = build_path(GenWord::parse("s1 x0 x1"), scaled());
  auto text = certificate_text(c);
  auto back = parse_certificate(text);
  CHECK(certificate_text(back) == text);
  CHECK(back.path() == c.path());
  CHECK(back.prefix_log == c.prefix_log);

  // one more x0 in w4
  auto bad = c;
  bad.w4 = GenWord::x(0) + bad.w4;
  auto rep = verify_certificate(bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.find("terminal")->status == CheckStatus::fail);

  auto log = c;
  log.prefix_log[5].carets += 1;
  CHECK(verify_certificate(log).find("prefix_log")->status == CheckStatus::fail);

  try {
    parse_certificate("[path]\ng=x0 y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 12);
  }
  CHECK_THROWS_AS(parse_certificate("[path]\ng=x0\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("[nope]\n"), ParseError);
}

TEST_CASE("avoidance against the BFS ball") {
  // delta k = 10/10 = 1: no prefix may have length <= 1
  DivergenceConfig cfg{Rational(1), 1, 2, PathMode::test_scale};
  auto c = build_path(GenWord::parse("x0 x0 x1"), cfg, {.k = 10});
  auto rep = verify_certificate(c);
  CHECK(rep.find("avoidance")->status == CheckStatus::pass);
  CHECK(all_pass(rep));
  auto tiny = verify_certificate(c, {.oracle_budget = 3});
  CHECK(tiny.find("avoidance")->status == CheckStatus::skipped);
}
