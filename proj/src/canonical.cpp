#include "mengerian/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace mengerian {

namespace {

// Lexicographically minimal upper-triangle bit string over all vertex orders.
// Bits are produced column by column (graph6 order), so placing vertex p
// fixes exactly the next p bits and partial orders can be pruned as soon as
// their prefix exceeds the best complete string.
class MinimalRelabeling {
 public:
  explicit MinimalRelabeling(const Graph& g)
      : g_(g), n_(g.num_vertices()), order_(n_), best_(n_ * (n_ ? n_ - 1 : 0) / 2), cur_(best_.size()) {}

  std::vector<std::size_t> run() {
    best_order_.clear();
    below_.assign(n_ + 1, false);
    search(0, 0);
    return best_order_;
  }

 private:
  // below_[p]: the bits fixed by positions < p are already smaller than best_.
  // Reset whenever best_ changes, since the current path then equals it.
  void search(std::size_t pos, VertexSet used) {
    if (pos == n_) {
      if (best_order_.empty() || below_[pos]) {
        best_ = cur_;
        best_order_ = order_;
        std::fill(below_.begin(), below_.end(), false);
      }
      return;
    }
    std::size_t base = pos * (pos ? pos - 1 : 0) / 2;
    for (std::size_t v = 0; v < n_; ++v) {
      if (contains(used, v)) continue;
      bool now_below = below_[pos];
      bool pruned = false;
      for (std::size_t i = 0; i < pos; ++i) {
        bool bit = g_.adjacent(order_[i], v);
        cur_[base + i] = bit;
        if (!best_order_.empty() && !now_below) {
          if (bit && !best_[base + i]) {
            pruned = true;
            break;
          }
          if (!bit && best_[base + i]) now_below = true;
        }
      }
      if (pruned) continue;
      order_[pos] = v;
      below_[pos + 1] = now_below;
      search(pos + 1, used | singleton(v));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_order_;
  std::vector<bool> best_;
  std::vector<bool> cur_;
  std::vector<bool> below_;
};

}  // namespace

std::string canonical_form(const Graph& g, std::size_t max_n) {
  std::size_t n = g.num_vertices();
  if (n > max_n) {
    throw std::invalid_argument("canonical_form: n = " + std::to_string(n) + " exceeds bound " +
                                std::to_string(max_n));
  }
  auto order = MinimalRelabeling(g).run();
  std::vector<std::size_t> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
  return to_graph6(g.relabeled(perm));
}

bool are_isomorphic(const Graph& a, const Graph& b, std::size_t max_n) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a, max_n) == canonical_form(b, max_n);
}

}  // namespace mengerian
