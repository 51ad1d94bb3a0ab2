#pragma once

// The path w = w1 w2 w3 w4 w5 from g to v(k) that stays far from the
// identity, plus its certificate and verifier.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bv/generators.hpp"

namespace bv {

// Nonnegative fraction, always in lowest terms.
struct Rational {
  long num = 0;
  long den = 1;

  Rational() = default;
  Rational(long n, long d = 1);
  // "3", "1/3"
  static Rational parse(std::string_view text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class PathMode { test_scale, paper };

struct DivergenceConfig {
  Rational C1{1};
  long M = 1;
  long Q = 8;
  PathMode mode = PathMode::test_scale;

  static DivergenceConfig test_scale() { return {}; }
  // M >= 100/C1 and Q >= 12M/C1^2 at C1 = 1.
  static DivergenceConfig paper() { return {Rational(1), 100, 1200, PathMode::paper}; }

  // Throws std::invalid_argument if the constants violate the mode's constraints.
  void validate() const;
  // delta = C1 / (10M)
  Rational delta() const;
};

std::string to_string(PathMode m);

// Subpath words.  g, g1 are elements with N >= 3.
GenWord subpath1(const Diagram& g);
GenWord subpath2(const Diagram& g1, const DivergenceConfig& cfg);
// Positive braid sigma_k ... sigma_1 on n+1 strands: the strand at bottom
// position k ends at top position 0.
Braid br_h_braid(std::size_t n, std::size_t k);
GenWord br_h_word(std::size_t n, std::size_t k);
// k = top position of the strand leaving bottom leaf 0 of g1.
std::size_t subpath3_index(const Diagram& g1);
// h = (T-(g1), br_h, T+(g1)), not reduced.
Diagram subpath3_element(const Diagram& g1);
GenWord subpath3(const Diagram& g1);
GenWord v_word(std::size_t k, long Q);
inline GenWord subpath4(std::size_t k, long Q) { return v_word(k, Q); }
GenWord subpath5(const GenWord& g_word, const GenWord& w1, const GenWord& w2, const GenWord& w3);
// Path from v(k) to v(k+1).
GenWord p_word(std::size_t k, long Q);

struct PrefixRecord {
  std::size_t prefix_len;
  std::size_t carets;
  std::optional<std::size_t> oracle_len;
  friend bool operator==(const PrefixRecord&, const PrefixRecord&) = default;
};

// The full path is escape + w1 w2 w3 w4 w5 + patch.  escape is x1 when
// N(g) <= 2 and empty otherwise; w1..w5 then start from g x1.
struct PathCertificate {
  DivergenceConfig cfg;
  GenWord g_word;
  std::size_t k = 0;        // terminal is v(k)
  GenWord escape;
  int escape_case = 0;      // 0 without escape, else 1, 2 or 3 (|g x1| = k-1, k, k+1)
  std::size_t inner_k = 0;  // w4 = v(inner_k)
  GenWord w1, w2, w3, w4, w5;
  GenWord patch;            // v(inner_k) -> v(k)
  GenWord terminal;
  std::vector<PrefixRecord> prefix_log;  // prefixes of path(), lengths 0..size

  GenWord start_word() const { return g_word + escape; }
  GenWord inner() const { return w1 + w2 + w3 + w4 + w5; }
  GenWord path() const { return escape + inner() + patch; }
};

struct BuildOptions {
  std::optional<std::size_t> k;
  // Forces the escape case; otherwise it comes from oracle lengths, or 2.
  std::optional<int> escape_case;
  // Radius for oracle lengths of g, g x1 and the prefix log; 0 disables.
  std::size_t oracle_radius = 0;
  std::size_t oracle_budget = 200000;
};

PathCertificate build_path(const GenWord& g_word, const DivergenceConfig& cfg, const BuildOptions& opt = {});

void write_certificate(const PathCertificate& cert, std::ostream& out);
std::string certificate_text(const PathCertificate& cert);
// Throws ParseError with a character offset.
PathCertificate parse_certificate(std::string_view text);

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* find(std::string_view name) const;
};

struct VerifyOptions {
  // Node budget for the avoidance ball; the check is skipped beyond it.
  std::size_t oracle_budget = 20000;
};

VerifyReport verify_certificate(const PathCertificate& cert, const VerifyOptions& opt = {});

std::string to_string(CheckStatus s);

}  // namespace bv
