#include "bv/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "bv/error.hpp"

namespace bv {

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ == 0) throw std::invalid_argument("braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands_) {
      throw std::out_of_range("braid letter " + std::to_string(l) + " out of range for " +
                              std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::parse(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("braid: expected 'n:'", 0);
  std::size_t pos = 0;
  while (pos < colon && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t n = 0;
  std::size_t digits = 0;
  for (; pos < colon && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos, ++digits) {
    n = n * 10 + static_cast<std::size_t>(text[pos] - '0');
  }
  while (pos < colon && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (digits == 0 || pos != colon || n == 0) throw ParseError("braid: bad strand count", 0);

  std::vector<int> letters;
  pos = colon + 1;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    bool neg = false;
    if (text[pos] == '-') {
      neg = true;
      ++pos;
    }
    long v = 0;
    std::size_t d = 0;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos, ++d) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) break;
    }
    if (d == 0 || (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))) {
      throw ParseError("braid: bad letter", start);
    }
    if (v == 0 || static_cast<std::size_t>(v) >= n) throw ParseError("braid: letter out of range", start);
    letters.push_back(neg ? -static_cast<int>(v) : static_cast<int>(v));
  }
  return BraidWord(n, std::move(letters));
}

std::string BraidWord::str() const {
  std::string out = std::to_string(strands_) + ":";
  for (int l : letters_) out += " " + std::to_string(l);
  return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("compose: strand counts differ");
  std::vector<int> l = a.letters();
  l.insert(l.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(l));
}

BraidWord invert(const BraidWord& b) {
  std::vector<int> l(b.letters().rbegin(), b.letters().rend());
  for (int& x : l) x = -x;
  return BraidWord(b.strands(), std::move(l));
}

BraidWord single_crossing(std::size_t strands, std::size_t i, int sign) {
  return BraidWord(strands, {sign < 0 ? -static_cast<int>(i) : static_cast<int>(i)});
}

std::size_t crossing_count(const BraidWord& b) { return b.letters().size(); }

Permutation underlying_permutation(const BraidWord& b) {
  std::vector<std::uint32_t> at(b.strands());  // at[pos] = bottom position of strand now at pos
  std::iota(at.begin(), at.end(), 0u);
  for (int l : b.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(l));
    std::swap(at[i - 1], at[i]);
  }
  Permutation perm(b.strands());
  for (std::uint32_t pos = 0; pos < at.size(); ++pos) perm[at[pos]] = pos;
  return perm;
}

BraidWord split_strand(const BraidWord& b, std::size_t i) {
  if (i >= b.strands()) throw std::out_of_range("split_strand: position out of range");
  std::vector<int> out;
  out.reserve(b.letters().size() * 2);
  std::size_t p = i;
  for (int l : b.letters()) {
    int s = l < 0 ? -1 : 1;
    int k = std::abs(l);
    std::size_t uk = static_cast<std::size_t>(k);
    if (p + 1 == uk) {  // tracked strand on the left of the crossing
      out.push_back(s * (k + 1));
      out.push_back(s * k);
      p = uk;
    } else if (p == uk) {
      out.push_back(s * k);
      out.push_back(s * (k + 1));
      p = uk - 1;
    } else if (p + 1 < uk) {
      out.push_back(s * (k + 1));
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(b.strands() + 1, std::move(out));
}

BraidWord remove_strand(const BraidWord& b, std::size_t i) {
  if (b.strands() < 2) throw std::invalid_argument("remove_strand: needs two strands");
  if (i >= b.strands()) throw std::out_of_range("remove_strand: position out of range");
  std::vector<int> out;
  std::size_t p = i;
  for (int l : b.letters()) {
    int s = l < 0 ? -1 : 1;
    std::size_t k = static_cast<std::size_t>(std::abs(l));
    if (p + 1 == k) {
      p = k;
    } else if (p == k) {
      p = k - 1;
    } else if (p + 1 < k) {
      out.push_back(s * static_cast<int>(k - 1));
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(b.strands() - 1, std::move(out));
}

bool is_parallel_pair(const BraidWord& b, std::size_t i) {
  if (i + 1 >= b.strands()) throw std::out_of_range("is_parallel_pair: position out of range");
  Permutation p = underlying_permutation(b);
  if (p[i + 1] != p[i] + 1) return false;
  return Braid::from_word(split_strand(remove_strand(b, i + 1), i)) == Braid::from_word(b);
}

// ---------------------------------------------------------------------------

namespace garside {

Permutation identity(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation delta(std::size_t n) {
  Permutation p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = static_cast<std::uint32_t>(n - 1 - j);
  return p;
}

bool is_identity(const Permutation& a) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != j) return false;
  }
  return true;
}

bool is_delta(const Permutation& a) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] != n - 1 - j) return false;
  }
  return true;
}

Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::uint32_t j = 0; j < a.size(); ++j) r[a[j]] = j;
  return r;
}

Permutation then(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = b[a[j]];
  return r;
}

Permutation right_complement(const Permutation& a) {
  const std::size_t n = a.size();
  Permutation r(n);
  for (std::uint32_t j = 0; j < n; ++j) r[a[j]] = static_cast<std::uint32_t>(n - 1 - j);
  return r;
}

Permutation flip(const Permutation& a) {
  const std::size_t n = a.size();
  Permutation r(n);
  for (std::size_t j = 0; j < n; ++j) r[j] = static_cast<std::uint32_t>(n - 1 - a[n - 1 - j]);
  return r;
}

// Strands are sorted into their top order in the meet.  Within an interval
// of bottom positions the meet order is the meet of the restrictions, so a
// merge step only has to decide cross pairs: the right head r goes before
// the left head l iff every left strand at or after l and every right strand
// at or before r are inverted in both a and b.
Permutation left_meet(const Permutation& a, const Permutation& b) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> w(n), tmp(n), ua(n), ub(n);
  std::iota(w.begin(), w.end(), 0u);
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t mid = lo + width, hi = std::min(n, lo + 2 * width);
      ua[mid - 1] = a[w[mid - 1]];
      ub[mid - 1] = b[w[mid - 1]];
      for (std::size_t i = mid - 1; i-- > lo;) {
        ua[i] = std::min(a[w[i]], ua[i + 1]);
        ub[i] = std::min(b[w[i]], ub[i + 1]);
      }
      ua[mid] = a[w[mid]];
      ub[mid] = b[w[mid]];
      for (std::size_t j = mid + 1; j < hi; ++j) {
        ua[j] = std::max(a[w[j]], ua[j - 1]);
        ub[j] = std::max(b[w[j]], ub[j - 1]);
      }
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (ua[i] > ua[j] && ub[i] > ub[j]) {
          tmp[k++] = w[j++];
        } else {
          tmp[k++] = w[i++];
        }
      }
      while (i < mid) tmp[k++] = w[i++];
      while (j < hi) tmp[k++] = w[j++];
      std::copy(tmp.begin() + static_cast<long>(lo), tmp.begin() + static_cast<long>(hi),
                w.begin() + static_cast<long>(lo));
    }
  }
  Permutation c(n);
  for (std::uint32_t t = 0; t < n; ++t) c[w[t]] = t;
  return c;
}

Permutation left_meet_reference(const Permutation& a, const Permutation& b) {
  const std::size_t n = a.size();
  // before[j][k], j < k: strand j stays left of strand k in the meet
  std::vector<std::vector<char>> before(n, std::vector<char>(n, 0));
  for (std::size_t j = n; j-- > 0;) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (a[j] < a[k] || b[j] < b[k]) {
        before[j][k] = 1;
        for (std::size_t m = k + 1; m < n; ++m) {
          if (before[k][m]) before[j][m] = 1;
        }
      }
    }
  }
  Permutation c(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t pos = 0;
    for (std::size_t k = 0; k < j; ++k) pos += before[k][j] ? 1 : 0;
    for (std::size_t k = j + 1; k < n; ++k) pos += before[j][k] ? 0 : 1;
    c[j] = pos;
  }
  return c;
}

bool left_weighted(const Permutation& a, const Permutation& b) {
  Permutation ainv = inverse(a);
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i - 1] > b[i] && ainv[i - 1] < ainv[i]) return false;
  }
  return true;
}

std::size_t crossings(const Permutation& a) {
  // inversion count by merge sort
  std::vector<std::uint32_t> v(a.begin(), a.end()), tmp(a.size());
  std::size_t inv = 0;
  const std::size_t n = v.size();
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      std::size_t mid = lo + width, hi = std::min(n, lo + 2 * width);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          inv += mid - i;
          tmp[k++] = v[j++];
        } else {
          tmp[k++] = v[i++];
        }
      }
      while (i < mid) tmp[k++] = v[i++];
      while (j < hi) tmp[k++] = v[j++];
      std::copy(tmp.begin() + static_cast<long>(lo), tmp.begin() + static_cast<long>(hi),
                v.begin() + static_cast<long>(lo));
    }
  }
  return inv;
}

std::vector<int> positive_letters(const Permutation& a) {
  std::vector<std::uint32_t> arr(a.begin(), a.end());  // arr[pos] = top target of strand at pos
  std::vector<int> out;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t pos = 1; pos < arr.size(); ++pos) {
      if (arr[pos - 1] > arr[pos]) {
        std::swap(arr[pos - 1], arr[pos]);
        out.push_back(static_cast<int>(pos));
        swapped = true;
      }
    }
  }
  return out;
}

}  // namespace garside

// ---------------------------------------------------------------------------

using namespace garside;

namespace {

Permutation transposition(std::size_t n, std::size_t i) {
  Permutation p = identity(n);
  std::swap(p[i - 1], p[i]);
  return p;
}

// Left-weight the pair (a, b) in place; false when already left-weighted.
bool left_weight(Permutation& a, Permutation& b) {
  Permutation c = left_meet(right_complement(a), b);
  if (is_identity(c)) return false;
  Permutation cinv = inverse(c);
  a = then(a, c);
  b = then(cinv, b);
  return true;
}

// Cable a simple braid; mb = multiplicities at its bottom positions.
// Returns the cabled braid and the multiplicities at its top.
std::pair<Permutation, std::vector<std::size_t>> cable_simple(const Permutation& x,
                                                              const std::vector<std::size_t>& mb) {
  const std::size_t n = x.size();
  std::vector<std::size_t> mt(n), bottom(n), top(n);
  for (std::size_t j = 0; j < n; ++j) mt[x[j]] = mb[j];
  std::size_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    bottom[j] = total;
    total += mb[j];
  }
  for (std::size_t t = 0, acc = 0; t < n; ++t) {
    top[t] = acc;
    acc += mt[t];
  }
  Permutation r(total);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < mb[j]; ++c) r[bottom[j] + c] = static_cast<std::uint32_t>(top[x[j]] + c);
  }
  return {std::move(r), std::move(mt)};
}

Permutation remove_from_simple(const Permutation& x, std::size_t j) {
  const std::size_t n = x.size();
  const std::uint32_t tj = x[j];
  Permutation r;
  r.reserve(n - 1);
  for (std::size_t a = 0; a < n; ++a) {
    if (a == j) continue;
    r.push_back(x[a] > tj ? x[a] - 1 : x[a]);
  }
  return r;
}

}  // namespace

class NormalFormBuilder {
 public:
  NormalFormBuilder(std::size_t n, long inf) { b_.n_ = n; b_.inf_ = inf; }
  explicit NormalFormBuilder(Braid b) : b_(std::move(b)) {}

  void times_delta(long e) {
    b_.inf_ += e;
    if (e % 2 != 0) {
      for (auto& f : b_.factors_) f = flip(f);
    }
  }

  void times_simple(Permutation x) {
    if (is_identity(x)) return;
    if (is_delta(x)) {
      times_delta(1);
      return;
    }
    auto& f = b_.factors_;
    f.push_back(std::move(x));
    for (std::size_t i = f.size() - 1; i > 0; --i) {
      if (!left_weight(f[i - 1], f[i])) break;
    }
    std::size_t lead = 0;
    while (lead < f.size() && is_delta(f[lead])) ++lead;
    if (lead) {
      b_.inf_ += static_cast<long>(lead);
      f.erase(f.begin(), f.begin() + static_cast<long>(lead));
    }
    while (!f.empty() && is_identity(f.back())) f.pop_back();
  }

  // x^-1 = Delta^-1 flip(right_complement(x))
  void times_inverse_simple(const Permutation& x) {
    if (is_identity(x)) return;
    times_delta(-1);
    times_simple(flip(right_complement(x)));
  }

  Braid take() { return std::move(b_); }

 private:
  Braid b_;
};

Braid Braid::from_word(const BraidWord& w) {
  NormalFormBuilder nf(w.strands(), 0);
  for (int l : w.letters()) {
    Permutation t = transposition(w.strands(), static_cast<std::size_t>(std::abs(l)));
    if (l > 0) {
      nf.times_simple(std::move(t));
    } else {
      nf.times_inverse_simple(t);
    }
  }
  return nf.take();
}

Braid Braid::crossing(std::size_t strands, std::size_t i, int sign) {
  return from_word(single_crossing(strands, i, sign));
}

Permutation Braid::permutation() const {
  Permutation p = (inf_ % 2 != 0) ? delta(n_) : identity(n_);
  for (const auto& f : factors_) p = then(p, f);
  return p;
}

BraidWord Braid::word() const {
  std::vector<int> letters;
  auto push_positive = [&letters](const Permutation& a) {
    auto l = positive_letters(a);
    letters.insert(letters.end(), l.begin(), l.end());
  };
  auto push_negative = [&letters](const Permutation& a) {
    auto l = positive_letters(a);
    for (auto it = l.rbegin(); it != l.rend(); ++it) letters.push_back(-*it);
  };
  const Permutation d = delta(n_);
  if (inf_ >= 0) {
    for (long t = 0; t < inf_; ++t) push_positive(d);
    for (const auto& f : factors_) push_positive(f);
  } else {
    const std::size_t r = static_cast<std::size_t>(-inf_), k = factors_.size();
    for (std::size_t i = 0; i < std::min(r, k); ++i) {
      Permutation y = right_complement(factors_[i]);
      if ((r - 1 - i) % 2) y = flip(y);
      push_negative(y);
    }
    for (std::size_t i = r; i < k; ++i) push_positive(factors_[i]);
    for (std::size_t t = k; t < r; ++t) push_negative(d);
  }
  return BraidWord(n_, std::move(letters));
}

std::size_t Braid::crossing_count() const {
  const std::size_t full = n_ * (n_ - 1) / 2;
  std::size_t total = 0;
  if (inf_ >= 0) {
    total = static_cast<std::size_t>(inf_) * full;
    for (const auto& f : factors_) total += crossings(f);
  } else {
    const std::size_t r = static_cast<std::size_t>(-inf_), k = factors_.size();
    for (std::size_t i = 0; i < std::min(r, k); ++i) total += full - crossings(factors_[i]);
    for (std::size_t i = r; i < k; ++i) total += crossings(factors_[i]);
    if (k < r) total += (r - k) * full;
  }
  return total;
}

Braid Braid::operator*(const Braid& other) const {
  if (n_ != other.n_) throw std::invalid_argument("braid product: strand counts differ");
  if (other.is_identity()) return *this;
  if (is_identity()) return other;
  NormalFormBuilder nf(*this);
  nf.times_delta(other.inf_);
  for (const auto& f : other.factors_) nf.times_simple(f);
  return nf.take();
}

Braid Braid::inverse() const {
  NormalFormBuilder nf(n_, 0);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) nf.times_inverse_simple(*it);
  nf.times_delta(-inf_);
  return nf.take();
}

Braid Braid::cable(const std::vector<std::size_t>& multiplicity) const {
  if (multiplicity.size() != n_) throw std::invalid_argument("cable: multiplicity size mismatch");
  std::size_t total = 0;
  for (std::size_t m : multiplicity) {
    if (m == 0) throw std::invalid_argument("cable: zero multiplicity");
    total += m;
  }
  if (total == n_) return *this;
  if (is_identity()) return Braid(total);

  NormalFormBuilder nf(total, 0);
  std::vector<std::size_t> m = multiplicity;
  const Permutation d = delta(n_);
  for (long t = 0; t < std::abs(inf_); ++t) {
    if (inf_ > 0) {
      auto [x, top] = cable_simple(d, m);
      nf.times_simple(std::move(x));
      m = std::move(top);
    } else {
      // Delta^-1: its bottom is the top of Delta
      std::vector<std::size_t> mb(n_);
      for (std::size_t j = 0; j < n_; ++j) mb[j] = m[d[j]];
      auto [x, top] = cable_simple(d, mb);
      nf.times_inverse_simple(x);
      m = std::move(mb);
    }
  }
  for (const auto& f : factors_) {
    auto [x, top] = cable_simple(f, m);
    nf.times_simple(std::move(x));
    m = std::move(top);
  }
  return nf.take();
}

Braid Braid::split_strand(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("split_strand: position out of range");
  std::vector<std::size_t> m(n_, 1);
  m[i] = 2;
  return cable(m);
}

Braid Braid::remove_strand(std::size_t i) const {
  if (n_ < 2) throw std::invalid_argument("remove_strand: needs two strands");
  if (i >= n_) throw std::out_of_range("remove_strand: position out of range");
  NormalFormBuilder nf(n_ - 1, 0);
  std::size_t j = i;
  const Permutation d = delta(n_);
  for (long t = 0; t < std::abs(inf_); ++t) {
    if (inf_ > 0) {
      nf.times_simple(remove_from_simple(d, j));
      j = d[j];
    } else {
      j = d[j];  // Delta is an involution on positions
      nf.times_inverse_simple(remove_from_simple(d, j));
    }
  }
  for (const auto& f : factors_) {
    nf.times_simple(remove_from_simple(f, j));
    j = f[j];
  }
  return nf.take();
}

bool Braid::is_parallel_pair(std::size_t i) const {
  if (i + 1 >= n_) throw std::out_of_range("is_parallel_pair: position out of range");
  if (is_identity()) return true;
  Permutation p = permutation();
  if (p[i + 1] != p[i] + 1) return false;
  return remove_strand(i + 1).split_strand(i) == *this;
}

void Braid::append_key(std::string& out) const {
  out += std::to_string(n_);
  out += ':';
  out += std::to_string(inf_);
  for (const auto& f : factors_) {
    out += ';';
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(f[j]);
    }
  }
}

}  // namespace bv
