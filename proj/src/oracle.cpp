#include "bv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace bv::oracle {

const std::vector<GenLetter>& generating_set() {
  static const std::vector<GenLetter> gens = {
      {Family::x, 0, 1},     {Family::x, 0, -1},     {Family::x, 1, 1},     {Family::x, 1, -1},
      {Family::sigma, 1, 1}, {Family::sigma, 1, -1}, {Family::tau, 1, 1},   {Family::tau, 1, -1},
  };
  return gens;
}

const BallEntry* Ball::find(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

Ball ball(std::size_t r, std::size_t node_budget) {
  Ball b;
  b.radius_ = r;
  Diagram id;
  b.entries_.push_back({canonical_key(id), 0, GenWord(), id});
  b.index_.emplace(b.entries_.back().key, 0);
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= r; ++len) {
    const std::size_t layer_end = b.entries_.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& gen : generating_set()) {
        Diagram next = multiply(b.entries_[i].element, letter_diagram(gen));
        std::string key = canonical_key(next);
        if (b.index_.count(key)) continue;
        if (b.entries_.size() >= node_budget) {
          b.complete_ = false;
          return b;
        }
        GenWord w = b.entries_[i].witness + GenWord({gen});
        b.index_.emplace(key, b.entries_.size());
        b.entries_.push_back({std::move(key), len, std::move(w), std::move(next)});
      }
    }
    layer_begin = layer_end;
  }
  return b;
}

std::optional<std::size_t> word_length(const Diagram& d, std::size_t max_r, std::size_t node_budget) {
  const std::string key = canonical_key(d);
  if (key == canonical_key(Diagram())) return 0;
  // Grow the ball one radius at a time so short elements stay cheap.
  for (std::size_t r = 1; r <= max_r; ++r) {
    Ball b = ball(r, node_budget);
    if (const auto* e = b.find(key)) return e->length;
    if (!b.complete()) return std::nullopt;
  }
  return std::nullopt;
}

void write_csv(const Ball& b, std::ostream& out) {
  out << "key,length,witness\n";
  for (const auto& e : b.entries()) out << e.key << ',' << e.length << ',' << e.witness.str() << '\n';
}

namespace {

// Cayley graph explored lazily; neighbours are computed once per vertex.
class LazyGraph {
 public:
  std::size_t vertex(const Diagram& d) {
    std::string key = canonical_key(d);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    const std::size_t id = elems_.size();
    ids_.emplace(std::move(key), id);
    elems_.push_back(d);
    adj_.emplace_back();
    return id;
  }
  const std::vector<std::size_t>& neighbours(std::size_t v) {
    if (adj_[v].empty()) {
      std::vector<std::size_t> out;
      for (const auto& gen : generating_set()) out.push_back(vertex(multiply(elems_[v], letter_diagram(gen))));
      adj_[v] = std::move(out);
    }
    return adj_[v];
  }
  std::size_t size() const { return elems_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<Diagram> elems_;
  std::vector<std::vector<std::size_t>> adj_;
};

// Bidirectional BFS avoiding `blocked`; returns the distance or nullopt if the
// graph budget runs out first.
std::optional<std::size_t> avoiding_distance(LazyGraph& g, std::size_t a, std::size_t b,
                                             const std::function<bool(std::size_t)>& blocked,
                                             std::size_t node_budget) {
  if (blocked(a) || blocked(b)) return std::nullopt;
  if (a == b) return 0;
  std::unordered_map<std::size_t, std::size_t> da{{a, 0}}, db{{b, 0}};
  std::vector<std::size_t> fa{a}, fb{b};
  std::size_t depth_a = 0, depth_b = 0;
  while (!fa.empty() && !fb.empty()) {
    if (g.size() > node_budget) return std::nullopt;
    const bool grow_a = fa.size() <= fb.size();
    auto& frontier = grow_a ? fa : fb;
    auto& mine = grow_a ? da : db;
    auto& other = grow_a ? db : da;
    std::size_t& depth = grow_a ? depth_a : depth_b;
    ++depth;
    std::vector<std::size_t> next;
    std::optional<std::size_t> best;
    for (std::size_t v : frontier) {
      for (std::size_t u : g.neighbours(v)) {
        if (mine.count(u) || blocked(u)) continue;
        mine.emplace(u, depth);
        next.push_back(u);
        if (auto it = other.find(u); it != other.end()) {
          const std::size_t d = depth + it->second;
          if (!best || d < *best) best = d;
        }
      }
    }
    if (best) return best;
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

SpotcheckReport divergence_spotcheck(std::size_t x, long delta_num, long delta_den, std::size_t max_pairs,
                                     std::size_t node_budget) {
  if (delta_den <= 0 || delta_num < 0) throw std::invalid_argument("spotcheck: delta must be a nonnegative fraction");
  SpotcheckReport rep;
  rep.x = x;
  rep.excluded_radius = static_cast<std::size_t>((delta_num * static_cast<long>(x)) / delta_den);
  Ball b = ball(std::max(x, rep.excluded_radius), node_budget);
  if (!b.complete()) {
    rep.budget_exceeded = true;
    return rep;
  }
  std::vector<const BallEntry*> sphere;
  for (const auto& e : b.entries()) {
    if (e.length == x) sphere.push_back(&e);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sphere.size(); ++i) {
    for (std::size_t j = i + 1; j < sphere.size(); ++j) pairs.emplace_back(i, j);
  }
  if (max_pairs && pairs.size() > max_pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> sample;
    for (std::size_t s = 0; s < max_pairs; ++s) sample.push_back(pairs[s * pairs.size() / max_pairs]);
    pairs = std::move(sample);
  }

  // The excluded ball is registered first, so its vertices are exactly ids < n_blocked.
  LazyGraph g;
  for (const auto& e : b.entries()) {
    if (e.length <= rep.excluded_radius) g.vertex(e.element);
  }
  const std::size_t n_blocked = g.size();
  auto blocked = [n_blocked](std::size_t v) { return v < n_blocked; };

  for (auto [i, j] : pairs) {
    ++rep.pairs;
    const std::size_t a = g.vertex(sphere[i]->element), c = g.vertex(sphere[j]->element);
    auto d = avoiding_distance(g, a, c, blocked, node_budget);
    if (!d) {
      if (g.size() > node_budget) rep.budget_exceeded = true;
      continue;
    }
    ++rep.connected;
    rep.max_path_length = std::max(rep.max_path_length, *d);
  }
  return rep;
}

CaretLengthReport caret_length_consistency(std::size_t r, std::size_t node_budget) {
  Ball b = ball(r, node_budget);
  if (!b.complete()) throw std::runtime_error("caret_length_consistency: node budget exceeded");
  CaretLengthReport rep;
  rep.radius = r;
  rep.rows.resize(r);
  for (std::size_t len = 1; len <= r; ++len) rep.rows[len - 1] = {len, 0, 0};
  rep.c1_upper_bound = r ? 1e300 : 0;
  for (const auto& e : b.entries()) {
    if (e.length == 0) continue;
    const std::size_t n = n_carets(e.element);
    const std::size_t c = reduce(e.element).braid().crossing_count();
    auto& row = rep.rows[e.length - 1];
    row.max_carets = std::max(row.max_carets, n);
    row.max_crossings = std::max(row.max_crossings, c);
    const double len = static_cast<double>(e.length);
    const double cube = std::cbrt(static_cast<double>(c));
    rep.max_caret_ratio = std::max(rep.max_caret_ratio, static_cast<double>(n) / len);
    rep.max_crossing_ratio = std::max(rep.max_crossing_ratio, cube / len);
    const double m = std::max(static_cast<double>(n), cube);
    if (m > 0) rep.c1_upper_bound = std::min(rep.c1_upper_bound, len / m);
  }
  return rep;
}

}  // namespace bv::oracle
