#pragma once

// Brute-force word lengths over X = {x0, x1, s1, t1}^{+-1} by BFS in the
// Cayley graph, with elements deduplicated by canonical key.

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bv/generators.hpp"

namespace bv::oracle {

// x0, x0^-1, x1, x1^-1, s1, s1^-1, t1, t1^-1; BFS expands in this order.
const std::vector<GenLetter>& generating_set();

struct BallEntry {
  std::string key;
  std::size_t length;
  GenWord witness;  // a geodesic word for the element
  Diagram element;
};

class Ball {
 public:
  std::size_t radius() const { return radius_; }
  // False when the node budget stopped the search before the radius was done.
  bool complete() const { return complete_; }
  std::size_t size() const { return entries_.size(); }
  // In discovery order: by length, then by (parent, generator) order.
  const std::vector<BallEntry>& entries() const { return entries_; }

  const BallEntry* find(const std::string& key) const;
  const BallEntry* find(const Diagram& d) const { return find(canonical_key(d)); }

  // Radius of the largest ball known exactly.
  std::size_t exact_radius() const { return complete_ ? radius_ : (radius_ == 0 ? 0 : radius_ - 1); }

 private:
  friend Ball ball(std::size_t, std::size_t);
  std::size_t radius_ = 0;
  bool complete_ = true;
  std::vector<BallEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Elements of length <= r.  node_budget caps the number of stored elements.
Ball ball(std::size_t r, std::size_t node_budget = 200000);

// |d| if it is at most max_r, else nullopt.
std::optional<std::size_t> word_length(const Diagram& d, std::size_t max_r,
                                       std::size_t node_budget = 200000);

// CSV: key,length,witness
void write_csv(const Ball& b, std::ostream& out);

struct SpotcheckReport {
  std::size_t x = 0;
  std::size_t excluded_radius = 0;
  std::size_t pairs = 0;
  std::size_t connected = 0;
  std::size_t max_path_length = 0;
  bool budget_exceeded = false;
  bool all_connected() const { return !budget_exceeded && connected == pairs; }
};

// For pairs of elements at distance exactly x, shortest path between them in
// the Cayley graph with the closed ball of radius floor(delta*x) removed.
// max_pairs = 0 checks every unordered pair; otherwise an evenly spaced sample.
SpotcheckReport divergence_spotcheck(std::size_t x, long delta_num, long delta_den,
                                     std::size_t max_pairs = 0, std::size_t node_budget = 200000);

struct CaretLengthRow {
  std::size_t length;
  std::size_t max_carets;
  std::size_t max_crossings;
};

struct CaretLengthReport {
  std::size_t radius = 0;
  std::vector<CaretLengthRow> rows;  // one per length 1..radius
  double max_caret_ratio = 0;        // max N(g)/|g|
  double max_crossing_ratio = 0;     // max crossings^(1/3)/|g|
  // Largest C1 compatible with C1 * max(N, crossings^(1/3)) <= |g| on the ball.
  double c1_upper_bound = 0;
};

CaretLengthReport caret_length_consistency(std::size_t r, std::size_t node_budget = 200000);

}  // namespace bv::oracle
