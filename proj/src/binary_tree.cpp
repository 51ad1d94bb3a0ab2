#include "bv/binary_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "bv/error.hpp"

namespace bv {

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != '0' && bits_[i] != '1') {
      throw ParseError("binary word: unexpected character '" + std::string(1, bits_[i]) + "'", i);
    }
  }
}

BinaryWord BinaryWord::repeat(char bit, std::size_t n) {
  return BinaryWord(std::string(n, bit));
}

bool BinaryWord::is_prefix_of(const BinaryWord& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

bool BinaryWord::is_strict_prefix_of(const BinaryWord& other) const {
  return bits_.size() < other.bits_.size() && is_prefix_of(other);
}

BinaryWord BinaryWord::child(char bit) const {
  BinaryWord w = *this;
  w.bits_.push_back(bit == '0' || bit == 0 ? '0' : '1');
  return w;
}

BinaryWord BinaryWord::operator+(const BinaryWord& other) const {
  BinaryWord w = *this;
  w.bits_ += other.bits_;
  return w;
}

std::string BinaryWord::str() const { return bits_.empty() ? "e" : bits_; }

// ---------------------------------------------------------------------------

BinaryTree BinaryTree::caret(const BinaryTree& left, const BinaryTree& right) {
  std::vector<std::uint8_t> code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back(1);
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  code.insert(code.end(), right.code_.begin(), right.code_.end());
  return BinaryTree(std::move(code), true);
}

BinaryTree BinaryTree::all_right(std::size_t n) {
  std::vector<std::uint8_t> code;
  code.reserve(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    code.push_back(1);
    code.push_back(0);
  }
  code.push_back(0);
  return BinaryTree(std::move(code), true);
}

BinaryTree BinaryTree::from_preorder(std::vector<std::uint8_t> code) {
  // valid iff the running "open slots" count hits zero exactly at the end
  std::size_t open = 1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (open == 0) throw std::invalid_argument("preorder code: trailing symbols");
    if (code[i] > 1) throw std::invalid_argument("preorder code: symbols must be 0/1");
    open = code[i] ? open + 1 : open - 1;
  }
  if (open != 0) throw std::invalid_argument("preorder code: incomplete tree");
  return BinaryTree(std::move(code), true);
}

namespace {

void build_from_sorted(const std::vector<BinaryWord>& br, std::size_t lo, std::size_t hi,
                       std::size_t depth, std::vector<std::uint8_t>& code) {
  if (hi - lo == 1 && br[lo].size() == depth) {
    code.push_back(0);
    return;
  }
  std::size_t mid = lo;
  while (mid < hi) {
    if (br[mid].size() <= depth) {
      throw std::invalid_argument("branch set is not prefix-free: " + br[mid].str());
    }
    if (br[mid][depth] == '1') break;
    ++mid;
  }
  for (std::size_t i = mid; i < hi; ++i) {
    if (br[i].size() <= depth) {
      throw std::invalid_argument("branch set is not prefix-free: " + br[i].str());
    }
  }
  if (mid == lo || mid == hi) {
    throw std::invalid_argument("branch set is not maximal below depth " + std::to_string(depth));
  }
  code.push_back(1);
  build_from_sorted(br, lo, mid, depth + 1, code);
  build_from_sorted(br, mid, hi, depth + 1, code);
}

}  // namespace

BinaryTree BinaryTree::from_branches(std::vector<BinaryWord> branches) {
  if (branches.empty()) throw std::invalid_argument("empty branch set");
  std::sort(branches.begin(), branches.end());
  if (std::adjacent_find(branches.begin(), branches.end()) != branches.end()) {
    throw std::invalid_argument("duplicate branch");
  }
  std::vector<std::uint8_t> code;
  build_from_sorted(branches, 0, branches.size(), 0, code);
  return BinaryTree(std::move(code), true);
}

BinaryTree BinaryTree::minimal_containing(const BinaryWord& u) {
  if (u.empty()) throw std::invalid_argument("minimal_containing: empty word");
  std::vector<BinaryWord> br{u};
  for (std::size_t j = 0; j < u.size(); ++j) {
    BinaryWord sib(u.bits().substr(0, j));
    br.push_back(sib.child(u[j] == '0' ? '1' : '0'));
  }
  return from_branches(std::move(br));
}

BinaryTree BinaryTree::parse(std::string_view text) {
  auto trim = [](std::string_view s, std::size_t& offset) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
      s.remove_prefix(1);
      ++offset;
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::size_t off = 0;
  std::string_view body = trim(text, off);
  if (body.empty() || body == "e") return BinaryTree();
  std::vector<BinaryWord> br;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    std::size_t tok_off = off + start;
    std::string_view tok = trim(body.substr(start, comma - start), tok_off);
    if (tok.empty()) throw ParseError("tree: empty branch", tok_off);
    try {
      br.emplace_back(tok);
    } catch (const ParseError& e) {
      throw ParseError("tree: bad branch '" + std::string(tok) + "'", tok_off + e.position());
    }
    start = comma + 1;
  }
  try {
    return from_branches(std::move(br));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("tree: ") + e.what(), off);
  }
}

std::size_t BinaryTree::subtree_end(std::size_t pos) const {
  std::size_t open = 1;
  while (open) open = code_[pos++] ? open + 1 : open - 1;
  return pos;
}

std::size_t BinaryTree::leaf_position(std::size_t leaf) const {
  std::size_t seen = 0;
  for (std::size_t p = 0; p < code_.size(); ++p) {
    if (code_[p] == 0 && seen++ == leaf) return p;
  }
  throw std::out_of_range("leaf index " + std::to_string(leaf) + " out of range");
}

std::vector<BinaryWord> BinaryTree::branches() const {
  std::vector<BinaryWord> out;
  out.reserve(leaves());
  std::string path;
  for (std::uint8_t c : code_) {
    if (c) {
      path.push_back('0');
      continue;
    }
    out.emplace_back(path);
    while (!path.empty() && path.back() == '1') path.pop_back();
    if (!path.empty()) path.back() = '1';
  }
  return out;
}

std::size_t BinaryTree::ell0() const {
  std::size_t n = 0;
  while (code_[n]) ++n;
  return n;
}

std::size_t BinaryTree::ell1() const {
  std::size_t pos = 0, n = 0;
  while (code_[pos]) {
    pos = subtree_end(pos + 1);
    ++n;
  }
  return n;
}

std::optional<std::size_t> BinaryTree::leaf_index(const BinaryWord& u) const {
  std::size_t pos = 0, leaf = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!code_[pos]) return std::nullopt;
    if (u[i] == '0') {
      ++pos;
    } else {
      std::size_t end = subtree_end(pos + 1);
      leaf += (end - pos) / 2;  // leaves in the left subtree
      pos = end;
    }
  }
  if (code_[pos]) return std::nullopt;
  return leaf;
}

bool BinaryTree::has_interior(const BinaryWord& u) const {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!code_[pos]) return false;
    pos = u[i] == '0' ? pos + 1 : subtree_end(pos + 1);
  }
  return code_[pos] == 1;
}

BinaryTree BinaryTree::attach_at(const BinaryWord& u, const BinaryTree& s) const {
  auto idx = leaf_index(u);
  if (!idx) throw std::invalid_argument("attach_at: " + u.str() + " is not a branch");
  std::size_t p = leaf_position(*idx);
  std::vector<std::uint8_t> code(code_.begin(), code_.begin() + p);
  code.insert(code.end(), s.code_.begin(), s.code_.end());
  code.insert(code.end(), code_.begin() + p + 1, code_.end());
  return BinaryTree(std::move(code), true);
}

BinaryTree BinaryTree::split_leaf(std::size_t leaf) const {
  std::size_t p = leaf_position(leaf);
  std::vector<std::uint8_t> code = code_;
  code[p] = 1;
  code.insert(code.begin() + p + 1, 2, 0);
  return BinaryTree(std::move(code), true);
}

BinaryTree BinaryTree::graft(const std::vector<BinaryTree>& subtrees) const {
  if (subtrees.size() != leaves()) throw std::invalid_argument("graft: wrong number of subtrees");
  std::size_t total = code_.size();
  for (const auto& s : subtrees) total += s.code_.size() - 1;
  std::vector<std::uint8_t> code;
  code.reserve(total);
  std::size_t leaf = 0;
  for (std::uint8_t c : code_) {
    if (c) {
      code.push_back(1);
    } else {
      const auto& s = subtrees[leaf++].code_;
      code.insert(code.end(), s.begin(), s.end());
    }
  }
  return BinaryTree(std::move(code), true);
}

std::vector<BinaryTree> BinaryTree::subtrees_below_leaves(const BinaryTree& finer) const {
  std::vector<BinaryTree> out;
  out.reserve(leaves());
  std::size_t q = 0;
  for (std::size_t p = 0; p < code_.size(); ++p) {
    if (code_[p]) {
      if (!finer.code_[q]) throw std::invalid_argument("tree is not a rooted subtree of the refinement");
      ++q;
    } else {
      std::size_t end = finer.subtree_end(q);
      out.push_back(BinaryTree(std::vector<std::uint8_t>(finer.code_.begin() + q, finer.code_.begin() + end), true));
      q = end;
    }
  }
  return out;
}

bool BinaryTree::is_rooted_subtree_of(const BinaryTree& other) const {
  std::size_t q = 0;
  for (std::size_t p = 0; p < code_.size(); ++p) {
    if (code_[p]) {
      if (!other.code_[q]) return false;
      ++q;
    } else {
      q = other.subtree_end(q);
    }
  }
  return true;
}

std::vector<bool> BinaryTree::caret_pairs() const {
  std::vector<bool> pairs(carets(), false);
  std::size_t leaf = 0;
  for (std::size_t p = 0; p < code_.size(); ++p) {
    if (code_[p]) {
      if (p + 2 < code_.size() && !code_[p + 1] && !code_[p + 2]) pairs[leaf] = true;
    } else {
      ++leaf;
    }
  }
  return pairs;
}

BinaryTree BinaryTree::collapse_pair(std::size_t leaf) const {
  std::size_t p = leaf_position(leaf);
  if (p == 0 || !code_[p - 1] || p + 1 >= code_.size() || code_[p + 1]) {
    throw std::invalid_argument("collapse_pair: leaves " + std::to_string(leaf) + "," +
                                std::to_string(leaf + 1) + " do not form a caret");
  }
  std::vector<std::uint8_t> code = code_;
  code.erase(code.begin() + p, code.begin() + p + 2);
  code[p - 1] = 0;
  return BinaryTree(std::move(code), true);
}

std::string BinaryTree::str() const {
  if (code_.size() == 1) return "e";
  std::string out;
  for (const auto& b : branches()) {
    if (!out.empty()) out.push_back(',');
    out += b.bits();
  }
  return out;
}

namespace {

// Merge two preorder codes into the code of the smallest common refinement.
void refine(const std::vector<std::uint8_t>& a, std::size_t& i, const std::vector<std::uint8_t>& b,
            std::size_t& j, std::vector<std::uint8_t>& out) {
  auto copy_subtree = [&out](const std::vector<std::uint8_t>& c, std::size_t& k) {
    std::size_t open = 1;
    while (open) {
      out.push_back(c[k]);
      open = c[k++] ? open + 1 : open - 1;
    }
  };
  if (!a[i]) {
    ++i;
    copy_subtree(b, j);
  } else if (!b[j]) {
    ++j;
    copy_subtree(a, i);
  } else {
    out.push_back(1);
    ++i;
    ++j;
    refine(a, i, b, j, out);
    refine(a, i, b, j, out);
  }
}

}  // namespace

BinaryTree common_refinement(const BinaryTree& a, const BinaryTree& b) {
  std::vector<std::uint8_t> out;
  std::size_t i = 0, j = 0;
  refine(a.preorder(), i, b.preorder(), j, out);
  return BinaryTree::from_preorder(std::move(out));
}

}  // namespace bv
