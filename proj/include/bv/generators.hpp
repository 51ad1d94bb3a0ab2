#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bv/diagram.hpp"

namespace bv {

enum class Family { x, sigma, tau };

struct GenLetter {
  Family family;
  std::size_t index;
  int sign;  // +1 or -1

  GenLetter inverse() const { return {family, index, -sign}; }
  std::string str() const;
  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

// Word over x_i, sigma_i (s), tau_i (t) and inverses.  ||w|| = size().
class GenWord {
 public:
  GenWord() = default;
  explicit GenWord(std::vector<GenLetter> letters);

  // "x0 x1^-1 s1 t1^-1"; "x0^3" and "x0^-2" expand to repeated letters;
  // "" or "1" is the empty word.
  static GenWord parse(std::string_view text);
  static GenWord power(Family f, std::size_t index, long exponent);
  static GenWord x(std::size_t index, long exponent = 1) { return power(Family::x, index, exponent); }

  const std::vector<GenLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool over_finite_alphabet() const;

  GenWord inverse() const;
  GenWord operator+(const GenWord& other) const;
  GenWord& operator+=(const GenWord& other);
  GenWord prefix(std::size_t len) const;

  // "1" for the empty word.
  std::string str() const;
  // Runs of one letter collapsed: "x0^5 x1^-1"; parse() reads it back.
  std::string compact_str() const;

  friend bool operator==(const GenWord&, const GenWord&) = default;

 private:
  std::vector<GenLetter> letters_;
};

GenWord free_reduce(const GenWord& w);

Diagram x_gen(std::size_t i);
Diagram sigma_gen(std::size_t i);
Diagram tau_gen(std::size_t i);
Diagram letter_diagram(const GenLetter& l);

Diagram eval(const GenWord& w);
// start * w, one letter at a time.
Diagram eval_from(const Diagram& start, const GenWord& w);

// Recursive expansion over {x0, x1, s1, t1}.
GenWord rewrite_to_finite(const GenLetter& l);
GenWord rewrite_to_finite(const GenWord& w);

// h_[u]: a copy of h (in F) below the branch u.
Diagram subscript_copy(const Diagram& h, const BinaryWord& u);
// Word with eval = (T, Id, all_right(n)), as x_{i1}^{r1} ... with i1 < i2 < ...
GenWord positive_word(const BinaryTree& t);
std::pair<GenWord, GenWord> normal_form_F(const Diagram& d);
// Word over {x0, x1} for an element of F.
GenWord f_word(const Diagram& d);

}  // namespace bv
