#include "bv/diagram.hpp"

#include <stdexcept>

#include "bv/error.hpp"

namespace bv {

Diagram::Diagram(BinaryTree plus, Braid braid, BinaryTree minus)
    : plus_(std::move(plus)), minus_(std::move(minus)), braid_(std::move(braid)) {
  if (plus_.leaves() != braid_.strands() || minus_.leaves() != braid_.strands()) {
    throw std::invalid_argument("diagram: leaf counts " + std::to_string(plus_.leaves()) + "/" +
                                std::to_string(minus_.leaves()) + " do not match " +
                                std::to_string(braid_.strands()) + " strands");
  }
}

Diagram Diagram::parse(std::string_view text) {
  std::string_view keys[3] = {"tplus", "braid", "tminus"};
  std::string_view parts[3];
  std::size_t offsets[3];
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    std::size_t bar = k < 2 ? text.find('|', start) : text.size();
    if (bar == std::string_view::npos) throw ParseError("diagram: expected '|'", text.size());
    std::string_view part = text.substr(start, bar - start);
    std::size_t off = start;
    while (!part.empty() && part.front() == ' ') {
      part.remove_prefix(1);
      ++off;
    }
    if (part.substr(0, keys[k].size()) != keys[k] || part.size() <= keys[k].size() ||
        part[keys[k].size()] != '=') {
      throw ParseError("diagram: expected '" + std::string(keys[k]) + "='", off);
    }
    parts[k] = part.substr(keys[k].size() + 1);
    offsets[k] = off + keys[k].size() + 1;
    start = bar + 1;
  }
  auto located = [&](int k, auto&& fn) {
    try {
      return fn(parts[k]);
    } catch (const ParseError& e) {
      throw ParseError(std::string("diagram ") + std::string(keys[k]), offsets[k] + e.position());
    }
  };
  BinaryTree plus = located(0, [](std::string_view s) { return BinaryTree::parse(s); });
  BraidWord w = located(1, [](std::string_view s) { return BraidWord::parse(s); });
  BinaryTree minus = located(2, [](std::string_view s) { return BinaryTree::parse(s); });
  try {
    return Diagram(std::move(plus), Braid::from_word(w), std::move(minus));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string Diagram::str() const {
  return "tplus=" + plus_.str() + " | braid=" + braid_.word().str() + " | tminus=" + minus_.str();
}

std::vector<BranchPair> Diagram::branch_pairs() const {
  auto pb = plus_.branches(), mb = minus_.branches();
  Permutation p = braid_.permutation();
  std::vector<BranchPair> out;
  out.reserve(pb.size());
  for (std::size_t j = 0; j < pb.size(); ++j) out.push_back({pb[j], mb[p[j]]});
  return out;
}

Diagram Diagram::split_range_leaf(std::size_t t) const {
  Permutation inv = garside::inverse(braid_.permutation());
  if (t >= inv.size()) throw std::out_of_range("split_range_leaf: leaf out of range");
  std::size_t s = inv[t];
  return Diagram(plus_.split_leaf(s), braid_.split_strand(s), minus_.split_leaf(t));
}

Diagram Diagram::split_domain_leaf(std::size_t s) const {
  Permutation p = braid_.permutation();
  if (s >= p.size()) throw std::out_of_range("split_domain_leaf: leaf out of range");
  return Diagram(plus_.split_leaf(s), braid_.split_strand(s), minus_.split_leaf(p[s]));
}

Diagram Diagram::expand_range(const BinaryTree& finer) const {
  if (finer == minus_) return *this;
  auto subs = minus_.subtrees_below_leaves(finer);
  Permutation p = braid_.permutation();
  std::vector<BinaryTree> at_plus(p.size());
  std::vector<std::size_t> mult(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    at_plus[s] = subs[p[s]];
    mult[s] = subs[p[s]].leaves();
  }
  return Diagram(plus_.graft(at_plus), braid_.cable(mult), finer);
}

Diagram Diagram::expand_domain(const BinaryTree& finer) const {
  if (finer == plus_) return *this;
  auto subs = plus_.subtrees_below_leaves(finer);
  Permutation p = braid_.permutation();
  std::vector<BinaryTree> at_minus(p.size());
  std::vector<std::size_t> mult(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    at_minus[p[s]] = subs[s];
    mult[s] = subs[s].leaves();
  }
  return Diagram(finer, braid_.cable(mult), minus_.graft(at_minus));
}

namespace {

bool pair_reducible(const Diagram& d, const Permutation& p, const std::vector<bool>& plus_pairs,
                    const std::vector<bool>& minus_pairs, std::size_t i) {
  return plus_pairs[i] && p[i + 1] == p[i] + 1 && minus_pairs[p[i]] &&
         (d.braid().is_identity() || d.braid().is_parallel_pair(i));
}

}  // namespace

std::vector<std::size_t> reducible_pairs(const Diagram& d) {
  Permutation p = d.braid().permutation();
  auto pp = d.plus().caret_pairs(), mp = d.minus().caret_pairs();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (pair_reducible(d, p, pp, mp, i)) out.push_back(i);
  }
  return out;
}

Diagram reduce_at(const Diagram& d, std::size_t i) {
  Permutation p = d.braid().permutation();
  if (i + 1 >= p.size() ||
      !pair_reducible(d, p, d.plus().caret_pairs(), d.minus().caret_pairs(), i)) {
    throw std::invalid_argument("reduce_at: pair " + std::to_string(i) + " is not reducible");
  }
  return Diagram(d.plus_.collapse_pair(i), d.braid_.remove_strand(i + 1), d.minus_.collapse_pair(p[i]));
}

Diagram reduce(const Diagram& d) {
  if (d.reduced_) return d;
  Diagram r = d;
  for (;;) {
    const std::size_t n = r.braid_.strands();
    if (n == 1) break;
    Permutation p = r.braid_.permutation();
    auto pp = r.plus_.caret_pairs(), mp = r.minus_.caret_pairs();
    std::size_t found = n;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (pair_reducible(r, p, pp, mp, i)) {
        found = i;
        break;
      }
    }
    if (found == n) break;
    r = Diagram(r.plus_.collapse_pair(found), r.braid_.remove_strand(found + 1),
                r.minus_.collapse_pair(p[found]));
  }
  r.reduced_ = true;
  return r;
}

Diagram multiply(const Diagram& a, const Diagram& b) {
  BinaryTree common = common_refinement(a.minus(), b.plus());
  Diagram ea = a.expand_range(common);
  Diagram eb = b.expand_domain(common);
  return reduce(Diagram(ea.plus(), ea.braid() * eb.braid(), eb.minus()));
}

Diagram multiply_by_elementary_splits(const Diagram& a, const Diagram& b) {
  BinaryTree common = common_refinement(a.minus(), b.plus());
  auto first_unrefined = [](const BinaryTree& t, const BinaryTree& finer) {
    auto subs = t.subtrees_below_leaves(finer);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i].carets()) return i;
    }
    return subs.size();
  };
  Diagram ea = a, eb = b;
  for (std::size_t t; (t = first_unrefined(ea.minus(), common)) < ea.minus().leaves();) {
    ea = ea.split_range_leaf(t);
  }
  for (std::size_t s; (s = first_unrefined(eb.plus(), common)) < eb.plus().leaves();) {
    eb = eb.split_domain_leaf(s);
  }
  return reduce(Diagram(ea.plus(), ea.braid() * eb.braid(), eb.minus()));
}

Diagram invert(const Diagram& d) {
  Diagram r(d.minus(), d.braid().inverse(), d.plus());
  r.reduced_ = d.reduced_;  // reducibility is symmetric in the two trees
  return r;
}

bool equal(const Diagram& a, const Diagram& b) { return reduce(a) == reduce(b); }

std::vector<BranchPair> branches(const Diagram& d) { return reduce(d).branch_pairs(); }

std::size_t n_carets(const Diagram& d) { return reduce(d).plus().carets(); }

std::size_t ell0(const Diagram& d) { return reduce(d).minus().ell0(); }

std::size_t ell1(const Diagram& d) { return reduce(d).minus().ell1(); }

std::string canonical_key(const Diagram& d) {
  Diagram r = reduce(d);
  std::string key;
  for (auto c : r.plus().preorder()) key += static_cast<char>('0' + c);
  key += '|';
  r.braid().append_key(key);
  key += '|';
  for (auto c : r.minus().preorder()) key += static_cast<char>('0' + c);
  return key;
}

bool is_in_F(const Diagram& d) { return reduce(d).braid().is_identity(); }

}  // namespace bv
