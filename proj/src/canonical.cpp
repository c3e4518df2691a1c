#include "twinchain/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "twinchain/error.hpp"

namespace twinchain {

namespace {

enum : char { kPosetKind = 'P', kGraphKind = 'G' };

// Directed view shared by posets (out = above, in = below) and graphs
// (out = in = adjacency).
struct Digraph {
  char kind;
  std::size_t d;
  std::vector<Mask> out;
  std::vector<Mask> in;
};

using Rows = std::array<std::uint8_t, kMaxCanonicalSize>;

Digraph as_digraph(const Poset& p) {
  Digraph g{kPosetKind, p.size(), {}, p.below_masks()};
  g.out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) g.out.push_back(p.above(i));
  return g;
}

Digraph as_digraph(const Graph& gr) {
  return Digraph{kGraphKind, gr.size(), gr.adjacency(), gr.adjacency()};
}

void check_size(std::size_t d) {
  if (d > kMaxCanonicalSize) {
    throw SizeError("canonical codes are supported up to " + std::to_string(kMaxCanonicalSize) +
                    " elements, got " + std::to_string(d));
  }
}

// pos[v] is the new label of vertex v.
Rows encode(const Digraph& g, const std::vector<std::size_t>& pos) {
  Rows rows{};
  for (std::size_t v = 0; v < g.d; ++v) {
    std::uint8_t row = 0;
    for (Mask m = g.out[v]; m != 0; m &= m - 1) row |= static_cast<std::uint8_t>(1U << pos[std::countr_zero(m)]);
    rows[pos[v]] = row;
  }
  return rows;
}

CanonicalCode make_code(const Digraph& g, const Rows& rows) {
  std::string bytes;
  bytes.reserve(2 + g.d);
  bytes.push_back(g.kind);
  bytes.push_back(static_cast<char>(g.d));
  for (std::size_t i = 0; i < g.d; ++i) bytes.push_back(static_cast<char>(rows[i]));
  return CanonicalCode(std::move(bytes));
}

int count_colors(const std::vector<int>& color) {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

// Equitable refinement: a vertex's new color is its old color followed by the
// sorted colors of its out- and in-neighbours. Colors are re-ranked densely,
// so the result depends only on the colored digraph, not on vertex names.
std::vector<int> refine(const Digraph& g, std::vector<int> color) {
  int ncolors = count_colors(color);
  std::vector<std::vector<int>> sig(g.d);
  while (true) {
    for (std::size_t v = 0; v < g.d; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(color[v]);
      const std::size_t out_begin = s.size();
      for (Mask m = g.out[v]; m != 0; m &= m - 1) s.push_back(color[std::countr_zero(m)]);
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(out_begin), s.end());
      s.push_back(-1);
      const std::size_t in_begin = s.size();
      for (Mask m = g.in[v]; m != 0; m &= m - 1) s.push_back(color[std::countr_zero(m)]);
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(in_begin), s.end());
    }
    std::vector<std::vector<int>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < g.d; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == ncolors) return color;
    ncolors = next;
  }
}

// Swapping u and v is an automorphism of g.
bool are_twins(const Digraph& g, std::size_t u, std::size_t v) {
  const Mask bu = bit(u);
  const Mask bv = bit(v);
  return (g.out[u] & ~bv) == (g.out[v] & ~bu) && (g.in[u] & ~bv) == (g.in[v] & ~bu) &&
         ((g.out[u] & bv) != 0) == ((g.out[v] & bu) != 0);
}

class Search {
 public:
  explicit Search(const Digraph& g) : g_(g) {}

  Rows run() {
    visit(std::vector<int>(g_.d, 0));
    return best_;
  }

 private:
  void visit(std::vector<int> color) {
    color = refine(g_, std::move(color));
    const int ncolors = count_colors(color);
    if (static_cast<std::size_t>(ncolors) == g_.d) {
      std::vector<std::size_t> pos(g_.d);
      for (std::size_t v = 0; v < g_.d; ++v) pos[v] = static_cast<std::size_t>(color[v]);
      const Rows rows = encode(g_, pos);
      if (!found_ || rows < best_) {
        best_ = rows;
        found_ = true;
      }
      return;
    }
    // First non-singleton cell in color order.
    std::vector<int> cell_size(static_cast<std::size_t>(ncolors), 0);
    for (int c : color) ++cell_size[static_cast<std::size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] < 2) ++target;

    std::vector<std::size_t> reps;
    for (std::size_t v = 0; v < g_.d; ++v) {
      if (color[v] != target) continue;
      const bool twin = std::any_of(reps.begin(), reps.end(), [&](std::size_t u) { return are_twins(g_, u, v); });
      if (!twin) reps.push_back(v);
    }
    for (std::size_t v : reps) {
      std::vector<int> child(g_.d);
      for (std::size_t u = 0; u < g_.d; ++u) child[u] = 2 * color[u] + 1;
      child[v] = 2 * color[v];
      visit(std::move(child));
    }
  }

  const Digraph& g_;
  Rows best_{};
  bool found_ = false;
};

CanonicalCode search_code(const Digraph& g) {
  check_size(g.d);
  if (g.d == 0) return make_code(g, Rows{});
  return make_code(g, Search(g).run());
}

CanonicalCode exhaustive_code(const Digraph& g) {
  check_size(g.d);
  std::vector<std::size_t> pos(g.d);
  std::iota(pos.begin(), pos.end(), 0);
  Rows best = encode(g, pos);
  while (std::next_permutation(pos.begin(), pos.end())) best = std::min(best, encode(g, pos));
  return make_code(g, best);
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes_.size());
  for (char c : bytes_) {
    const auto b = static_cast<unsigned char>(c);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

CanonicalCode canonical_code(const Poset& p) { return search_code(as_digraph(p)); }

CanonicalCode graph_canonical_code(const Graph& g) { return search_code(as_digraph(g)); }

CanonicalCode canonical_code_exhaustive(const Poset& p) { return exhaustive_code(as_digraph(p)); }

CanonicalCode graph_canonical_code_exhaustive(const Graph& g) { return exhaustive_code(as_digraph(g)); }

std::vector<std::vector<std::size_t>> graph_automorphisms(const Graph& g) {
  const std::size_t d = g.size();
  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> image(d, 0);
  std::vector<bool> used(d, false);

  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      result.push_back(image);
      return;
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (used[j] || g.degree(i) != g.degree(j)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = g.adjacent(i, k) == g.adjacent(j, image[k]);
      if (!ok) continue;
      used[j] = true;
      image[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
  };
  extend(extend, 0);
  return result;
}

}  // namespace twinchain
