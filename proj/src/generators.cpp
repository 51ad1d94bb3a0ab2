#include "bv/generators.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "bv/error.hpp"

namespace bv {

std::string GenLetter::str() const {
  static const char names[] = {'x', 's', 't'};
  std::string s(1, names[static_cast<int>(family)]);
  s += std::to_string(index);
  if (sign < 0) s += "^-1";
  return s;
}

namespace {

void check_letter(const GenLetter& l) {
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  if (l.family != Family::x && l.index < 1) {
    throw std::invalid_argument("sigma/tau generators are indexed from 1");
  }
}

}  // namespace

GenWord::GenWord(std::vector<GenLetter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) check_letter(l);
}

GenWord GenWord::parse(std::string_view text) {
  std::vector<GenLetter> out;
  std::size_t pos = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t tokens = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view tok = text.substr(start, end - start);
    pos = end;
    ++tokens;
    if (tok == "1") continue;

    Family fam;
    switch (tok[0]) {
      case 'x': fam = Family::x; break;
      case 's': fam = Family::sigma; break;
      case 't': fam = Family::tau; break;
      default: throw ParseError("word: unknown generator '" + std::string(tok) + "'", start);
    }
    std::size_t k = 1, index = 0;
    while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) {
      index = index * 10 + static_cast<std::size_t>(tok[k] - '0');
      if (index > 100000) throw ParseError("word: index too large", start + 1);
      ++k;
    }
    if (k == 1) throw ParseError("word: missing generator index in '" + std::string(tok) + "'", start + 1);
    if (fam != Family::x && index == 0) throw ParseError("word: s/t indices start at 1", start + 1);
    long exponent = 1;
    if (k < tok.size()) {
      if (tok[k] != '^') throw ParseError("word: unexpected '" + std::string(1, tok[k]) + "'", start + k);
      ++k;
      bool neg = k < tok.size() && tok[k] == '-';
      if (neg) ++k;
      if (k == tok.size()) throw ParseError("word: missing exponent", start + k);
      exponent = 0;
      for (; k < tok.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(tok[k]))) {
          throw ParseError("word: bad exponent", start + k);
        }
        exponent = exponent * 10 + (tok[k] - '0');
        if (exponent > 1000000) throw ParseError("word: exponent too large", start + k);
      }
      if (neg) exponent = -exponent;
    }
    auto p = power(fam, index, exponent);
    out.insert(out.end(), p.letters_.begin(), p.letters_.end());
  }
  (void)tokens;
  return GenWord(std::move(out));
}

GenWord GenWord::power(Family f, std::size_t index, long exponent) {
  GenLetter l{f, index, exponent < 0 ? -1 : 1};
  return GenWord(std::vector<GenLetter>(static_cast<std::size_t>(std::abs(exponent)), l));
}

bool GenWord::over_finite_alphabet() const {
  for (const auto& l : letters_) {
    if (l.family == Family::x ? l.index > 1 : l.index != 1) return false;
  }
  return true;
}

GenWord GenWord::inverse() const {
  GenWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

GenWord GenWord::operator+(const GenWord& other) const {
  GenWord w = *this;
  w += other;
  return w;
}

GenWord& GenWord::operator+=(const GenWord& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

GenWord GenWord::prefix(std::size_t len) const {
  if (len > letters_.size()) throw std::out_of_range("prefix longer than word");
  GenWord w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(len));
  return w;
}

std::string GenWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.str();
  }
  return out;
}

std::string GenWord::compact_str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += ' ';
    GenLetter l = letters_[i];
    l.sign = 1;
    out += l.str();
    const long e = static_cast<long>(j - i) * letters_[i].sign;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

GenWord free_reduce(const GenWord& w) {
  std::vector<GenLetter> out;
  for (const auto& l : w.letters()) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return GenWord(std::move(out));
}

// ---------------------------------------------------------------------------

Diagram x_gen(std::size_t i) {
  BinaryWord spine = BinaryWord::repeat('1', i);
  BinaryTree base = BinaryTree::all_right(i);
  BinaryTree plus = base.attach_at(spine, BinaryTree::parse("00,01,1"));
  BinaryTree minus = base.attach_at(spine, BinaryTree::parse("0,10,11"));
  return reduce(Diagram(plus, Braid(i + 3), minus));
}

Diagram sigma_gen(std::size_t i) {
  if (i < 1) throw std::invalid_argument("sigma_gen: index must be >= 1");
  BinaryTree t = BinaryTree::all_right(i + 1);
  return reduce(Diagram(t, Braid::crossing(i + 2, i, +1), t));
}

Diagram tau_gen(std::size_t i) {
  if (i < 1) throw std::invalid_argument("tau_gen: index must be >= 1");
  BinaryTree t = BinaryTree::all_right(i);
  return reduce(Diagram(t, Braid::crossing(i + 1, i, +1), t));
}

Diagram letter_diagram(const GenLetter& l) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::size_t, int>, Diagram> cache;
  check_letter(l);
  auto key = std::make_tuple(static_cast<int>(l.family), l.index, l.sign);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Diagram d;
  switch (l.family) {
    case Family::x: d = x_gen(l.index); break;
    case Family::sigma: d = sigma_gen(l.index); break;
    case Family::tau: d = tau_gen(l.index); break;
  }
  if (l.sign < 0) d = invert(d);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, d).first->second;
}

Diagram eval_from(const Diagram& start, const GenWord& w) {
  Diagram d = reduce(start);
  for (const auto& l : w.letters()) d = multiply(d, letter_diagram(l));
  return d;
}

Diagram eval(const GenWord& w) { return eval_from(Diagram(), w); }

// ---------------------------------------------------------------------------

GenWord rewrite_to_finite(const GenLetter& l) {
  check_letter(l);
  GenWord w;
  switch (l.family) {
    case Family::x:
      if (l.index <= 1) {
        w = GenWord::x(l.index);
      } else {
        const long e = static_cast<long>(l.index) - 1;
        w = GenWord::x(0, -e) + GenWord::x(1) + GenWord::x(0, e);
      }
      break;
    case Family::sigma:
      if (l.index == 1) {
        w = GenWord::power(Family::sigma, 1, 1);
      } else {
        const std::size_t i = l.index - 1;
        GenLetter s{Family::sigma, i, 1};
        w = rewrite_to_finite(GenLetter{Family::x, i - 1, -1}) + rewrite_to_finite(s) +
            rewrite_to_finite(GenLetter{Family::x, i, 1}) + rewrite_to_finite(s.inverse());
      }
      break;
    case Family::tau:
      if (l.index == 1) {
        w = GenWord::power(Family::tau, 1, 1);
      } else {
        const std::size_t i = l.index - 1;
        w = rewrite_to_finite(GenLetter{Family::x, i - 1, -1}) +
            rewrite_to_finite(GenLetter{Family::tau, i, 1}) +
            rewrite_to_finite(GenLetter{Family::sigma, i, -1});
      }
      break;
  }
  return l.sign < 0 ? w.inverse() : w;
}

GenWord rewrite_to_finite(const GenWord& w) {
  GenWord out;
  for (const auto& l : w.letters()) out += rewrite_to_finite(l);
  return out;
}

// ---------------------------------------------------------------------------

Diagram subscript_copy(const Diagram& h, const BinaryWord& u) {
  if (u.empty()) throw std::invalid_argument("subscript_copy: empty branch");
  Diagram r = reduce(h);
  if (!r.braid().is_identity()) throw std::invalid_argument("subscript_copy: element is not in F");
  if (r.plus().carets() == 0) throw std::invalid_argument("subscript_copy: identity element");
  BinaryTree m = BinaryTree::minimal_containing(u);
  BinaryTree plus = m.attach_at(u, r.plus()), minus = m.attach_at(u, r.minus());
  return reduce(Diagram(plus, Braid(plus.leaves()), minus));
}

// Leaf k gets exponent = length of the longest run of left edges ending at
// it whose upper vertices avoid the right spine.
GenWord positive_word(const BinaryTree& t) {
  const auto& code = t.preorder();
  struct Frame {
    bool on_spine;
    std::size_t run;
  };
  std::vector<Frame> pending{{true, 0}};  // vertices still to visit, in preorder
  std::vector<GenLetter> out;
  std::size_t leaf = 0;
  for (std::uint8_t c : code) {
    Frame f = pending.back();
    pending.pop_back();
    if (c) {
      pending.push_back({f.on_spine, 0});                        // right child
      pending.push_back({false, f.on_spine ? 0 : f.run + 1});    // left child
    } else {
      for (std::size_t r = 0; r < f.run; ++r) out.push_back({Family::x, leaf, 1});
      ++leaf;
    }
  }
  return GenWord(std::move(out));
}

std::pair<GenWord, GenWord> normal_form_F(const Diagram& d) {
  Diagram r = reduce(d);
  if (!r.braid().is_identity()) throw std::invalid_argument("normal_form_F: element is not in F");
  return {positive_word(r.plus()), positive_word(r.minus()).inverse()};
}

GenWord f_word(const Diagram& d) {
  auto [pos, neg] = normal_form_F(d);
  return free_reduce(rewrite_to_finite(pos + neg));
}

}  // namespace bv
