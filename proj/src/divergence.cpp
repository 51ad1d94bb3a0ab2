#include "bv/divergence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bv/error.hpp"
#include "bv/oracle.hpp"

namespace bv {

Rational::Rational(long n, long d) : num(n), den(d) {
  if (d <= 0 || n < 0) throw std::invalid_argument("rational: need n >= 0 and d > 0");
  const long g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

Rational Rational::parse(std::string_view text) {
  auto number = [&](std::string_view s, std::size_t offset) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
      throw ParseError("rational: bad number '" + std::string(s) + "'", offset);
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(number(text, 0));
  const long n = number(text.substr(0, slash), 0), d = number(text.substr(slash + 1), slash + 1);
  if (d == 0) throw ParseError("rational: zero denominator", slash + 1);
  return Rational(n, d);
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

void DivergenceConfig::validate() const {
  if (C1.num == 0 || C1.num > C1.den) throw std::invalid_argument("config: C1 must lie in (0, 1]");
  if (M < 1 || Q < 1) throw std::invalid_argument("config: M and Q must be positive");
  if (mode == PathMode::paper) {
    if (M * C1.num < 100 * C1.den) throw std::invalid_argument("config: paper mode needs M >= 100/C1");
    if (Q * C1.num * C1.num < 12 * M * C1.den * C1.den) {
      throw std::invalid_argument("config: paper mode needs Q >= 12M/C1^2");
    }
  }
}

Rational DivergenceConfig::delta() const { return Rational(C1.num, 10 * M * C1.den); }

std::string to_string(PathMode m) { return m == PathMode::paper ? "paper" : "test-scale"; }

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

const BinaryWord kZero("0");

void require_three_carets(const Diagram& g, const char* who) {
  if (n_carets(g) < 3) throw std::invalid_argument(std::string(who) + ": needs N(g) >= 3");
}

GenWord letter(Family f, int sign = 1) { return GenWord({GenLetter{f, 1, sign}}); }

}  // namespace

GenWord subpath1(const Diagram& g) {
  require_three_carets(g, "subpath1");
  if (!reduce(g).minus().has_branch(kZero)) return {};
  return GenWord::x(0, 2) + GenWord::x(1, -1) + GenWord::x(0, -1);
}

GenWord subpath2(const Diagram& g1, const DivergenceConfig& cfg) {
  const long e = cfg.M * static_cast<long>(n_carets(g1) + 1);
  return GenWord::x(0, -e) + GenWord::x(1) + GenWord::x(0, e);
}

Braid br_h_braid(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("br_h: k out of range");
  std::vector<int> letters;
  for (std::size_t i = k; i >= 1; --i) letters.push_back(static_cast<int>(i));
  return Braid::from_word(BraidWord(n + 1, letters));
}

// sigma_k ... sigma_1 telescopes to x0^-(k-1) s1 x1^(k-1) for k < n; the
// last crossing of T_n is a tau letter, giving x0^-(n-2) s1^-1 t1 x0 s1 x1^(n-2).
GenWord br_h_word(std::size_t n, std::size_t k) {
  if (n < 1 || k > n) throw std::invalid_argument("br_h_word: need n >= 1 and 0 <= k <= n");
  if (k == 0) return {};
  if (k < n) {
    const long e = static_cast<long>(k) - 1;
    return GenWord::x(0, -e) + letter(Family::sigma) + GenWord::x(1, e);
  }
  if (n == 1) return letter(Family::tau);
  const long e = static_cast<long>(n) - 2;
  return GenWord::x(0, -e) + letter(Family::sigma, -1) + letter(Family::tau) + GenWord::x(0) +
         letter(Family::sigma) + GenWord::x(1, e);
}

std::size_t subpath3_index(const Diagram& g1) { return reduce(g1).braid().permutation().at(0); }

Diagram subpath3_element(const Diagram& g1) {
  require_three_carets(g1, "subpath3");
  Diagram r = reduce(g1);
  const std::size_t n = r.plus().carets();
  return Diagram(r.minus(), br_h_braid(n, subpath3_index(r)), r.plus());
}

GenWord subpath3(const Diagram& g1) {
  require_three_carets(g1, "subpath3");
  Diagram r = reduce(g1);
  const std::size_t n = r.plus().carets();
  const BinaryTree tn = BinaryTree::all_right(n);
  GenWord p = f_word(Diagram(r.minus(), Braid(n + 1), tn));
  GenWord q = f_word(Diagram(tn, Braid(n + 1), r.plus()));
  return free_reduce(p + br_h_word(n, subpath3_index(r)) + q);
}

GenWord v_word(std::size_t k, long Q) {
  const long e = Q * static_cast<long>(k);
  return GenWord::x(0, e) + GenWord::x(1, -1) + GenWord::x(0, -e + 1);
}

GenWord subpath5(const GenWord& g_word, const GenWord& w1, const GenWord& w2, const GenWord& w3) {
  return (g_word + w1 + w2 + w3).inverse();
}

GenWord p_word(std::size_t k, long Q) {
  const long e = Q * static_cast<long>(k);
  return GenWord::x(0, e - 1) + GenWord::x(1) + GenWord::x(0, Q) + GenWord::x(1, -1) +
         GenWord::x(0, -(e + Q) + 1);
}

// ---------------------------------------------------------------------------

namespace {

struct Segments {
  GenWord w1, w2, w3;
  Diagram g1, g2, g3;
};

Segments first_three(const Diagram& start, const DivergenceConfig& cfg) {
  Segments s;
  s.w1 = subpath1(start);
  s.g1 = eval_from(start, s.w1);
  s.w2 = subpath2(s.g1, cfg);
  s.g2 = eval_from(s.g1, s.w2);
  s.w3 = subpath3(s.g1);
  s.g3 = eval_from(s.g2, s.w3);
  return s;
}

}  // namespace

PathCertificate build_path(const GenWord& g_word, const DivergenceConfig& cfg, const BuildOptions& opt) {
  cfg.validate();
  const Diagram g = eval(g_word);
  if (n_carets(g) == 0) throw std::invalid_argument("build_path: g is the identity");

  std::optional<oracle::Ball> ball;
  if (opt.oracle_radius > 0) ball = oracle::ball(opt.oracle_radius, opt.oracle_budget);
  auto known_length = [&](const Diagram& d) -> std::optional<std::size_t> {
    if (!ball) return std::nullopt;
    if (const auto* e = ball->find(d)) return e->length;
    return std::nullopt;
  };

  PathCertificate c;
  c.cfg = cfg;
  c.g_word = g_word;
  const auto len_g = known_length(g);
  c.k = opt.k ? *opt.k : (len_g ? *len_g : g_word.size());
  if (c.k == 0) throw std::invalid_argument("build_path: k must be positive");
  c.inner_k = c.k;

  Diagram start = g;
  if (n_carets(g) <= 2) {
    c.escape = GenWord::x(1);
    start = multiply(g, x_gen(1));
    int kase = 2;
    if (opt.escape_case) {
      kase = *opt.escape_case;
    } else if (auto len_gx = known_length(start); len_g && len_gx) {
      kase = static_cast<int>(*len_gx) - static_cast<int>(*len_g) + 2;
    }
    if (kase < 1 || kase > 3) throw std::invalid_argument("build_path: escape case must be 1, 2 or 3");
    c.escape_case = kase;
    if (kase == 1) {
      if (c.k < 2) throw std::invalid_argument("build_path: escape case 1 needs k >= 2");
      c.inner_k = c.k - 1;
      c.patch = p_word(c.k - 1, cfg.Q);
    } else if (kase == 3) {
      c.inner_k = c.k + 1;
      c.patch = p_word(c.k, cfg.Q).inverse();
    }
  }

  Segments s = first_three(start, cfg);
  const long l0 = static_cast<long>(ell0(s.g3));
  if (l0 - 1 >= cfg.Q * static_cast<long>(c.inner_k) - 2) {
    throw std::invalid_argument("build_path: l0(g3) - 1 < Qk - 2 fails; raise Q or k");
  }
  c.w1 = s.w1;
  c.w2 = s.w2;
  c.w3 = s.w3;
  c.w4 = v_word(c.inner_k, cfg.Q);
  c.w5 = subpath5(c.start_word(), c.w1, c.w2, c.w3);
  c.terminal = v_word(c.k, cfg.Q);

  const GenWord w = c.path();
  Diagram d = g;
  c.prefix_log.reserve(w.size() + 1);
  for (std::size_t i = 0;; ++i) {
    c.prefix_log.push_back({i, n_carets(d), known_length(d)});
    if (i == w.size()) break;
    d = multiply(d, letter_diagram(w.letters()[i]));
  }
  return c;
}

// ---------------------------------------------------------------------------

void write_certificate(const PathCertificate& c, std::ostream& out) {
  out << "# bv path certificate v1\n";
  out << "[config]\n";
  out << "mode=" << to_string(c.cfg.mode) << "\n";
  out << "C1=" << c.cfg.C1.str() << "\n";
  out << "M=" << c.cfg.M << "\n";
  out << "Q=" << c.cfg.Q << "\n";
  out << "[path]\n";
  out << "g=" << c.g_word.compact_str() << "\n";
  out << "k=" << c.k << "\n";
  out << "escape=" << c.escape.compact_str() << "\n";
  out << "case=" << c.escape_case << "\n";
  out << "inner_k=" << c.inner_k << "\n";
  out << "w1=" << c.w1.compact_str() << "\n";
  out << "w2=" << c.w2.compact_str() << "\n";
  out << "w3=" << c.w3.compact_str() << "\n";
  out << "w4=" << c.w4.compact_str() << "\n";
  out << "w5=" << c.w5.compact_str() << "\n";
  out << "patch=" << c.patch.compact_str() << "\n";
  out << "terminal=" << c.terminal.compact_str() << "\n";
  out << "[prefix_log]\n";
  out << "prefix_len,carets,oracle_len\n";
  for (const auto& r : c.prefix_log) {
    out << r.prefix_len << ',' << r.carets << ',';
    if (r.oracle_len) out << *r.oracle_len;
    out << '\n';
  }
}

std::string certificate_text(const PathCertificate& cert) {
  std::ostringstream os;
  write_certificate(cert, os);
  return os.str();
}

PathCertificate parse_certificate(std::string_view text) {
  PathCertificate c;
  std::string section;
  bool header_seen = false;
  std::vector<std::string> seen;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t at = pos;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("certificate: unterminated section header", at);
      section = std::string(line.substr(1, line.size() - 2));
      if (section != "config" && section != "path" && section != "prefix_log") {
        throw ParseError("certificate: unknown section '" + section + "'", at + 1);
      }
      continue;
    }
    if (section == "prefix_log") {
      if (!header_seen) {
        if (line != "prefix_len,carets,oracle_len") throw ParseError("certificate: bad prefix_log header", at);
        header_seen = true;
        continue;
      }
      PrefixRecord r{};
      std::size_t field = 0, begin = 0;
      std::string_view parts[3];
      for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
          if (field == 3) throw ParseError("certificate: too many prefix_log columns", at + i);
          parts[field++] = line.substr(begin, i - begin);
          begin = i + 1;
        }
      }
      if (field != 3) throw ParseError("certificate: prefix_log needs 3 columns", at);
      auto num = [&](std::string_view s, std::size_t off) {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
          throw ParseError("certificate: bad number '" + std::string(s) + "'", off);
        }
        return v;
      };
      r.prefix_len = num(parts[0], at);
      r.carets = num(parts[1], at + parts[0].size() + 1);
      if (!parts[2].empty()) r.oracle_len = num(parts[2], at + parts[0].size() + parts[1].size() + 2);
      c.prefix_log.push_back(r);
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || section.empty()) throw ParseError("certificate: expected key=value", at);
    const std::string key(line.substr(0, eq));
    const std::string_view value = line.substr(eq + 1);
    const std::size_t vpos = at + eq + 1;
    auto word = [&]() {
      try {
        return GenWord::parse(value);
      } catch (const ParseError& e) {
        throw ParseError("certificate: " + key + ": " + e.what(), vpos + e.position());
      }
    };
    auto integer = [&]() {
      long v = 0;
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || p != value.data() + value.size() || value.empty()) {
        throw ParseError("certificate: bad integer for " + key, vpos);
      }
      return v;
    };
    auto count = [&]() {
      long v = integer();
      if (v < 0) throw ParseError("certificate: negative value for " + key, vpos);
      return static_cast<std::size_t>(v);
    };
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ParseError("certificate: duplicate key " + key, at);
    }
    seen.push_back(key);
    if (section == "config") {
      if (key == "mode") {
        if (value == "paper") c.cfg.mode = PathMode::paper;
        else if (value == "test-scale") c.cfg.mode = PathMode::test_scale;
        else throw ParseError("certificate: unknown mode", vpos);
      } else if (key == "C1") {
        try {
          c.cfg.C1 = Rational::parse(value);
        } catch (const std::invalid_argument& e) {
          throw ParseError(std::string("certificate: C1: ") + e.what(), vpos);
        }
      } else if (key == "M") {
        c.cfg.M = integer();
      } else if (key == "Q") {
        c.cfg.Q = integer();
      } else {
        throw ParseError("certificate: unknown config key " + key, at);
      }
      continue;
    }
    if (key == "g") c.g_word = word();
    else if (key == "k") c.k = count();
    else if (key == "escape") c.escape = word();
    else if (key == "case") c.escape_case = static_cast<int>(integer());
    else if (key == "inner_k") c.inner_k = count();
    else if (key == "w1") c.w1 = word();
    else if (key == "w2") c.w2 = word();
    else if (key == "w3") c.w3 = word();
    else if (key == "w4") c.w4 = word();
    else if (key == "w5") c.w5 = word();
    else if (key == "patch") c.patch = word();
    else if (key == "terminal") c.terminal = word();
    else throw ParseError("certificate: unknown path key " + key, at);
  }
  for (const char* required : {"g", "k", "inner_k", "w1", "w2", "w3", "w4", "w5", "terminal"}) {
    if (std::find(seen.begin(), seen.end(), required) == seen.end()) {
      throw ParseError(std::string("certificate: missing key ") + required, text.size());
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class Checker {
 public:
  explicit Checker(VerifyReport& r) : rep_(r) {}
  // Starts a named check; every failed expectation is collected.
  void begin(std::string name) {
    flush();
    name_ = std::move(name);
    failures_.clear();
    skip_.clear();
    open_ = true;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) ++nfail_;
  }
  void skip(std::string why) { skip_ = std::move(why); }
  void flush() {
    if (!open_) return;
    if (!skip_.empty()) {
      rep_.checks.push_back({name_, CheckStatus::skipped, skip_});
    } else if (nfail_ == 0) {
      rep_.checks.push_back({name_, CheckStatus::pass, ""});
    } else {
      std::string d;
      for (const auto& f : failures_) d += (d.empty() ? "" : "; ") + f;
      if (nfail_ > failures_.size()) d += "; ... (" + std::to_string(nfail_) + " violations)";
      rep_.checks.push_back({name_, CheckStatus::fail, d});
    }
    nfail_ = 0;
    open_ = false;
  }

 private:
  VerifyReport& rep_;
  std::string name_, skip_;
  std::vector<std::string> failures_;
  std::size_t nfail_ = 0;
  bool open_ = false;
};

std::string num(std::size_t v) { return std::to_string(v); }

}  // namespace

VerifyReport verify_certificate(const PathCertificate& c, const VerifyOptions& opt) {
  VerifyReport rep;
  Checker ck(rep);
  const auto& cfg = c.cfg;
  const long Q = cfg.Q;

  ck.begin("config");
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    ck.expect(false, e.what());
    ck.flush();
    return rep;
  }

  // Walk the whole path once, keeping caret counts and the segment endpoints.
  const Diagram g = eval(c.g_word);
  const GenWord w = c.path();
  const std::size_t e0 = c.escape.size();
  const std::size_t b1 = e0 + c.w1.size(), b2 = b1 + c.w2.size(), b3 = b2 + c.w3.size();
  const std::size_t b4 = b3 + c.w4.size(), b5 = b4 + c.w5.size();
  std::vector<std::size_t> carets(w.size() + 1);
  std::vector<Diagram> at_boundary;
  const std::size_t boundaries[] = {0, e0, b1, b2, b3, b4, b5, w.size()};
  std::optional<oracle::Ball> ball;
  const Rational delta = c.escape.empty()
                             ? cfg.delta()
                             : std::min(Rational(cfg.delta().num, 2 * cfg.delta().den),
                                        Rational(cfg.C1.num * Q, 2 * cfg.C1.den),
                                        [](const Rational& a, const Rational& b) { return a.value() < b.value(); });
  const std::size_t radius = static_cast<std::size_t>((delta.num * static_cast<long>(c.k)) / delta.den);
  if (radius > 0) {
    ball = oracle::ball(radius, opt.oracle_budget);
    if (!ball->complete()) ball.reset();
  }
  std::vector<std::size_t> in_ball;
  {
    Diagram d = g;
    std::size_t next_boundary = 0;
    for (std::size_t i = 0;; ++i) {
      carets[i] = n_carets(d);
      while (next_boundary < 8 && boundaries[next_boundary] == i) {
        at_boundary.push_back(d);
        ++next_boundary;
      }
      if (carets[i] == 0 || (ball && ball->find(d))) in_ball.push_back(i);
      if (i == w.size()) break;
      d = multiply(d, letter_diagram(w.letters()[i]));
    }
  }
  const Diagram& start = at_boundary[1];
  const Diagram &g1 = at_boundary[2], &g3 = at_boundary[4];
  const Diagram& end = at_boundary[7];
  const std::size_t N = carets[e0], N1 = carets[b1];
  const bool inner_ok = N >= 3;

  ck.begin("terminal");
  ck.expect(equal(end, eval(c.terminal)), "g * path != terminal");
  ck.expect(c.terminal == v_word(c.k, Q), "terminal is not v(k)");

  ck.begin("segments");
  ck.expect(c.k >= 1 && c.inner_k >= 1, "k and inner_k must be positive");
  ck.expect(c.w4 == v_word(c.inner_k, Q), "w4 != v(inner_k)");
  const bool needs_escape = carets[0] <= 2;
  ck.expect(needs_escape == (c.escape == GenWord::x(1)), "escape must be x1 exactly when N(g) <= 2");
  if (c.escape.empty()) {
    ck.expect(c.escape_case == 0 && c.inner_k == c.k && c.patch.empty(), "no escape, so no patch");
  } else if (c.escape_case == 1) {
    ck.expect(c.k >= 2 && c.inner_k + 1 == c.k && c.patch == p_word(c.k - 1, Q), "case 1 patch mismatch");
  } else if (c.escape_case == 2) {
    ck.expect(c.inner_k == c.k && c.patch.empty(), "case 2 has no patch");
  } else if (c.escape_case == 3) {
    ck.expect(c.inner_k == c.k + 1 && c.patch == p_word(c.k, Q).inverse(), "case 3 patch mismatch");
  } else {
    ck.expect(false, "unknown escape case");
  }
  if (inner_ok) {
    ck.expect(c.w1 == subpath1(start), "w1 differs from the construction");
    ck.expect(c.w2 == subpath2(g1, cfg), "w2 differs from the construction");
    ck.expect(c.w3 == subpath3(g1), "w3 differs from the construction");
  }

  ck.begin("prefix_log");
  ck.expect(c.prefix_log.size() == carets.size(), "prefix_log has " + num(c.prefix_log.size()) + " rows, expected " +
                                                      num(carets.size()));
  for (std::size_t i = 0; i < std::min(c.prefix_log.size(), carets.size()); ++i) {
    ck.expect(c.prefix_log[i].prefix_len == i && c.prefix_log[i].carets == carets[i],
              "row " + num(i) + " disagrees with recomputed N = " + num(carets[i]));
  }

  ck.begin("subpath1");
  if (!inner_ok) {
    ck.expect(false, "N(g x escape) = " + num(N) + " < 3");
  } else {
    ck.expect(!reduce(g1).minus().has_branch(BinaryWord("0")), "0 is a branch of T-(g1)");
    ck.expect(N <= N1 && N1 <= N + 2, "N(g1) outside [N(g), N(g)+2]");
    for (std::size_t i = e0; i <= b1; ++i) ck.expect(carets[i] >= N, "N(g w') < N(g) at prefix " + num(i));
  }

  ck.begin("subpath2");
  if (inner_ok) {
    const std::size_t N2 = carets[b2];
    const std::size_t m = static_cast<std::size_t>(cfg.M) * (N1 + 1) + 1;
    ck.expect(equal(eval(c.w2), x_gen(m)), "w2 != x_m");
    ck.expect(N2 >= static_cast<std::size_t>(cfg.M) * N1, "N(g2) < M N(g1)");
    ck.expect(N2 + ell1(g1) == N1 + m + 2, "N(g2) != N(g1) + m - l1 + 2");
    for (std::size_t i = b1; i <= b2; ++i) ck.expect(carets[i] >= N1, "N(g1 w') < N(g1) at prefix " + num(i));
  } else {
    ck.skip("needs N >= 3");
  }

  ck.begin("subpath3");
  if (inner_ok) {
    const std::size_t N3 = carets[b3];
    ck.expect(c.w3.size() <= 14 * N1, "||w3|| > 14 N(g1)");
    ck.expect(equal(eval(c.w3), subpath3_element(g1)), "w3 != h");
    ck.expect(static_cast<long>(N3) >= (cfg.M - 1) * static_cast<long>(N1) + cfg.M + 3,
              "N(g3) < (M-1)N(g1)+M+3");
    const std::size_t l = ell0(g3);
    ck.expect(l <= N1 + 1, "l0(g3) > N(g1)+1");
    const BinaryWord zl = BinaryWord::repeat('0', l);
    bool found = false;
    for (const auto& bp : branches(g3)) found = found || (bp.u == zl && bp.v == zl);
    ck.expect(found, "0^l -> 0^l is not a branch of g3");
  } else {
    ck.skip("needs N >= 3");
  }

  ck.begin("validity");
  if (inner_ok) {
    ck.expect(static_cast<long>(ell0(g3)) - 1 < Q * static_cast<long>(c.inner_k) - 2, "l0(g3) - 1 >= Qk - 2");
  } else {
    ck.skip("needs N >= 3");
  }

  ck.begin("subpath4");
  if (inner_ok) {
    const double N3 = static_cast<double>(carets[b3]);
    for (std::size_t i = b3; i <= b4; ++i) {
      const double bound = N3 + 0.5 * static_cast<double>(i - b3) - 2.0 * static_cast<double>(N1) - 1.0;
      ck.expect(static_cast<double>(carets[i]) >= bound, "caret bound fails at prefix " + num(i));
    }
  } else {
    ck.skip("needs N >= 3");
  }

  ck.begin("commutation");
  {
    const Diagram v = eval(c.w4);
    ck.expect(equal(multiply(g3, v), multiply(v, g3)), "g3 w4 != w4 g3");
  }

  ck.begin("subpath5");
  ck.expect(equal(eval(c.start_word() + c.w1 + c.w2 + c.w3 + c.w5), Diagram()), "w5 is not the inverse of g3");

  const std::size_t w123 = c.w1.size() + c.w2.size() + c.w3.size();
  const std::size_t start_len = c.start_word().size();
  const long qk = Q * static_cast<long>(c.inner_k);

  // With ||w3|| <= 14 N(g1) and N >= 3 the estimate closes once M >= 25.
  ck.begin("segment_bound");
  if (!inner_ok || cfg.M < 25) {
    ck.skip("needs N >= 3 and M >= 25");
  } else {
    ck.expect(static_cast<long>(w123) <= 5 * cfg.M * static_cast<long>(N),
              "||w1w2w3|| = " + num(w123) + " > 5MN(g) = " + std::to_string(5 * cfg.M * static_cast<long>(N)));
  }

  ck.begin("length_accounting");
  if (static_cast<long>(start_len) + 1 > qk) {
    ck.skip("start word longer than Qk - 1");
  } else {
    ck.expect(static_cast<long>(c.inner().size()) <= 2 * static_cast<long>(w123) + 3 * qk,
              "||w1..w5|| > 2||w1w2w3|| + 3Qk");
  }

  ck.begin("total_bound");
  {
    // D = 10M/C1 + 3Q; with escape the bound is (2D + 4Q + 1) k.
    const bool c1_ok = static_cast<long>(N) * cfg.C1.num <= static_cast<long>(c.inner_k) * cfg.C1.den;
    if (!inner_ok || cfg.M < 25 || !c1_ok || static_cast<long>(start_len) + 1 > qk) {
      ck.skip("needs M >= 25, C1 N(g) <= k and ||g|| < Qk");
    } else {
      const Rational D(10 * cfg.M * cfg.C1.den + 3 * Q * cfg.C1.num, cfg.C1.num);
      const Rational bound = c.escape.empty() ? D : Rational(2 * D.num + (4 * Q + 1) * D.den, D.den);
      ck.expect(static_cast<long>(w.size()) * bound.den <= bound.num * static_cast<long>(c.k),
                "||w|| = " + num(w.size()) + " exceeds " + bound.str() + " * k");
    }
  }

  ck.begin("patch");
  if (c.patch.empty()) {
    ck.expect(c.inner_k == c.k, "no patch but inner_k != k");
  } else {
    ck.expect(equal(multiply(eval(c.w4), eval(c.patch)), eval(c.terminal)), "v(inner_k) patch != v(k)");
    const std::size_t floor_n = static_cast<std::size_t>(Q) * std::min(c.k, c.inner_k) + 1;
    for (std::size_t i = b5; i <= w.size(); ++i) {
      ck.expect(carets[i] >= floor_n, "N < Q min(k, inner_k) + 1 at prefix " + num(i));
    }
  }

  ck.begin("avoidance");
  if (radius > 0 && !ball) {
    ck.skip("ball of radius " + num(radius) + " exceeds the oracle budget");
  } else {
    for (std::size_t i : in_ball) ck.expect(false, "prefix " + num(i) + " lies in the ball of radius " + num(radius));
  }
  ck.flush();
  return rep;
}

}  // namespace bv
