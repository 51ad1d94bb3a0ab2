#include "bv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bv/divergence.hpp"
#include "bv/error.hpp"
#include "bv/oracle.hpp"

namespace bv::cli {

namespace {

// Thrown by subcommands to leave with a given exit code.
struct Exit {
  int code;
};

void print_located(std::ostream& err, const std::string& input, const ParseError& e) {
  err << "error: " << e.what() << "\n";
  if (input.find('\n') == std::string::npos && e.position() <= input.size()) {
    err << "  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
  }
}

GenWord word_arg(const std::string& text, std::ostream& err) {
  try {
    return GenWord::parse(text);
  } catch (const ParseError& e) {
    print_located(err, text, e);
    throw Exit{2};
  }
}

Diagram diagram_arg(const std::string& text, std::ostream& err) {
  try {
    return Diagram::parse(text);
  } catch (const ParseError& e) {
    print_located(err, text, e);
    throw Exit{2};
  }
}

std::string branch_list(const Diagram& d) {
  std::string s;
  for (const auto& bp : branches(d)) {
    if (!s.empty()) s += ' ';
    s += bp.u.str() + "->" + bp.v.str();
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braided Thompson group BV: words, tree-braid-tree diagrams and divergence paths", "bvtool"};
  app.require_subcommand(1);

  std::string w1, w2, text, path_file, out_file;
  std::size_t index = 0, radius = 0, x = 0, pairs = 0, budget = 200000;
  std::string family, delta = "1/3";

  auto* eval_cmd = app.add_subcommand("eval", "reduced diagram of a word");
  eval_cmd->add_option("WORD", w1, "word over x_i, s_i, t_i")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a diagram given in text form");
  reduce_cmd->add_option("DIAGRAM", text, "\"tplus=... | braid=n: ... | tminus=...\"")->required();

  auto* mul_cmd = app.add_subcommand("mul", "product of two words (first W1, then W2)");
  mul_cmd->add_option("W1", w1)->required();
  mul_cmd->add_option("W2", w2)->required();

  auto* eq_cmd = app.add_subcommand("eq", "decide equality; exit 1 when not equal");
  eq_cmd->add_option("W1", w1, "word or diagram")->required();
  eq_cmd->add_option("W2", w2, "word or diagram")->required();

  auto* info_cmd = app.add_subcommand("info", "carets, branch lengths, branches");
  info_cmd->add_option("WORD", w1)->required();

  auto* gen_cmd = app.add_subcommand("gen", "diagram of a generator and its word over x0, x1, s1, t1");
  gen_cmd->add_option("FAMILY", family)->required()->check(CLI::IsMember({"x", "s", "t"}));
  gen_cmd->add_option("INDEX", index)->required();

  auto* path_cmd = app.add_subcommand("path", "divergence paths");
  path_cmd->require_subcommand(1);
  auto* build_cmd = path_cmd->add_subcommand("build", "build a path certificate for g");
  long M = 1, Q = 8;
  std::string C1 = "1";
  std::size_t k = 0, oracle_radius = 0;
  int escape_case = 0;
  bool paper = false;
  build_cmd->add_option("WORD", w1)->required();
  build_cmd->add_option("--M", M, "Subpath 2 constant")->capture_default_str();
  build_cmd->add_option("--Q", Q, "Subpath 4 constant")->capture_default_str();
  build_cmd->add_option("--C1", C1, "caret/length constant, a fraction")->capture_default_str();
  build_cmd->add_option("--k", k, "length parameter (default: oracle length, else word length)");
  build_cmd->add_option("--case", escape_case, "escape case 1, 2 or 3 when N(g) <= 2")->check(CLI::Range(1, 3));
  build_cmd->add_option("--oracle-radius", oracle_radius, "BFS radius for lengths")->capture_default_str();
  build_cmd->add_flag("--paper", paper, "paper constants: C1=1, M=100, Q=1200");
  build_cmd->add_option("--out", out_file, "write the certificate here instead of stdout");
  auto* verify_cmd = path_cmd->add_subcommand("verify", "re-check a certificate");
  verify_cmd->add_option("FILE", path_file)->required();
  verify_cmd->add_option("--budget", budget, "node budget for the avoidance ball")->capture_default_str();

  auto* ball_cmd = app.add_subcommand("ball", "BFS ball as CSV: key,length,witness");
  ball_cmd->add_option("R", radius)->required();
  ball_cmd->add_option("--budget", budget)->capture_default_str();

  auto* len_cmd = app.add_subcommand("len", "word length by BFS");
  len_cmd->add_option("WORD", w1)->required();
  len_cmd->add_option("--max-r", radius, "search radius")->required();

  auto* spot_cmd = app.add_subcommand("spotcheck", "avoiding paths between points at distance X");
  spot_cmd->add_option("X", x)->required();
  spot_cmd->add_option("--delta", delta, "fraction")->capture_default_str();
  spot_cmd->add_option("--pairs", pairs, "sample size, 0 = all pairs")->capture_default_str();
  spot_cmd->add_option("--budget", budget)->capture_default_str();

  auto* table_cmd = app.add_subcommand("carets", "max carets and crossings per length over a ball");
  table_cmd->add_option("R", radius)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  // Accepts either a word or a diagram literal.
  auto element = [&](const std::string& s) {
    return s.find("tplus=") != std::string::npos ? reduce(diagram_arg(s, err)) : eval(word_arg(s, err));
  };

  try {
    if (*eval_cmd) {
      out << eval(word_arg(w1, err)).str() << "\n";
    } else if (*reduce_cmd) {
      out << reduce(diagram_arg(text, err)).str() << "\n";
    } else if (*mul_cmd) {
      out << multiply(eval(word_arg(w1, err)), eval(word_arg(w2, err))).str() << "\n";
    } else if (*eq_cmd) {
      const bool same = equal(element(w1), element(w2));
      out << (same ? "equal" : "not equal") << "\n";
      return same ? 0 : 1;
    } else if (*info_cmd) {
      const Diagram d = eval(word_arg(w1, err));
      out << "N=" << n_carets(d) << "\n";
      out << "ell0=" << ell0(d) << "\n";
      out << "ell1=" << ell1(d) << "\n";
      out << "branches=" << branch_list(d) << "\n";
      out << "in_F=" << (is_in_F(d) ? "yes" : "no") << "\n";
      out << "crossings=" << d.braid().crossing_count() << "\n";
      out << "diagram=" << d.str() << "\n";
      out << "key=" << canonical_key(d) << "\n";
    } else if (*gen_cmd) {
      const Family f = family == "x" ? Family::x : family == "s" ? Family::sigma : Family::tau;
      if (f != Family::x && index == 0) {
        err << "error: s and t generators are indexed from 1\n";
        return 2;
      }
      const GenLetter l{f, index, 1};
      out << letter_diagram(l).str() << "\n";
      out << "word=" << rewrite_to_finite(l).str() << "\n";
    } else if (*build_cmd) {
      DivergenceConfig cfg = paper ? DivergenceConfig::paper() : DivergenceConfig::test_scale();
      if (!paper) {
        try {
          cfg.C1 = Rational::parse(C1);
        } catch (const ParseError& e) {
          print_located(err, C1, e);
          return 2;
        }
        cfg.M = M;
        cfg.Q = Q;
      }
      BuildOptions opt;
      if (k) opt.k = k;
      if (escape_case) opt.escape_case = escape_case;
      opt.oracle_radius = oracle_radius;
      const PathCertificate cert = build_path(word_arg(w1, err), cfg, opt);
      if (out_file.empty()) {
        write_certificate(cert, out);
      } else {
        std::ofstream f(out_file);
        if (!f) {
          err << "error: cannot write " << out_file << "\n";
          return 2;
        }
        write_certificate(cert, f);
        out << "k=" << cert.k << " length=" << cert.path().size() << " written to " << out_file << "\n";
      }
    } else if (*verify_cmd) {
      std::ifstream f(path_file);
      if (!f) {
        err << "error: cannot read " << path_file << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << f.rdbuf();
      PathCertificate cert;
      try {
        cert = parse_certificate(buf.str());
      } catch (const ParseError& e) {
        err << "error: " << path_file << ": " << e.what() << "\n";
        return 2;
      }
      const VerifyReport rep = verify_certificate(cert, {budget});
      for (const auto& c : rep.checks) {
        out << std::left << std::setw(18) << c.name << to_string(c.status);
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
      }
      out << (rep.ok() ? "certificate OK" : "certificate FAILED") << "\n";
      return rep.ok() ? 0 : 1;
    } else if (*ball_cmd) {
      const oracle::Ball b = oracle::ball(radius, budget);
      oracle::write_csv(b, out);
      if (!b.complete()) {
        err << "warning: node budget reached; exact up to radius " << b.exact_radius() << "\n";
        return 1;
      }
    } else if (*len_cmd) {
      const auto len = oracle::word_length(eval(word_arg(w1, err)), radius);
      if (len) {
        out << *len << "\n";
      } else {
        out << "> " << radius << "\n";
      }
    } else if (*spot_cmd) {
      Rational d;
      try {
        d = Rational::parse(delta);
      } catch (const ParseError& e) {
        print_located(err, delta, e);
        return 2;
      }
      const auto rep = oracle::divergence_spotcheck(x, d.num, d.den, pairs, budget);
      out << "x=" << rep.x << " delta=" << d.str() << " excluded_radius=" << rep.excluded_radius << "\n";
      out << "pairs=" << rep.pairs << " connected=" << rep.connected << " max_path_length=" << rep.max_path_length
          << (rep.budget_exceeded ? " (budget exceeded)" : "") << "\n";
      return rep.all_connected() ? 0 : 1;
    } else if (*table_cmd) {
      const auto rep = oracle::caret_length_consistency(radius);
      out << "length,max_carets,max_crossings\n";
      for (const auto& r : rep.rows) out << r.length << ',' << r.max_carets << ',' << r.max_crossings << "\n";
      out << "max N/|g|=" << rep.max_caret_ratio << "\n";
      out << "max crossings^(1/3)/|g|=" << rep.max_crossing_ratio << "\n";
      out << "C1 <= " << rep.c1_upper_bound << "\n";
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace bv::cli
