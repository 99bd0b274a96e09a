#include "lenergy/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>

namespace lenergy {

namespace {

constexpr int kNoJump = std::numeric_limits<int>::max();
constexpr std::size_t kMaxStoredAutomorphisms = 256;

using Labels = std::array<std::uint8_t, kMaxOrder>;
using Code = std::array<Row, kMaxOrder>;

struct Partition {
  Labels lab{};    // vertices listed cell by cell
  Row starts = 0;  // bit p set iff a cell begins at position p
};

int cell_end(Row starts, int begin, int n) {
  const Row later = starts & ~((Row{2} << begin) - 1);
  return later ? std::countr_zero(later) : n;
}

// Splits cell [begin, end) by the number of neighbours each member has in
// `splitter`, sub-cells ordered by increasing count. Returns true on a split.
bool split_cell(const Graph& g, Partition& p, int begin, int end, Row splitter) {
  std::array<int, kMaxOrder> key{};
  bool uniform = true;
  for (int k = begin; k < end; ++k) {
    key[k] = std::popcount(g.neighbors(p.lab[k]) & splitter);
    uniform = uniform && key[k] == key[begin];
  }
  if (uniform) return false;
  for (int k = begin + 1; k < end; ++k) {
    const int kk = key[k];
    const std::uint8_t v = p.lab[k];
    int m = k;
    for (; m > begin && key[m - 1] > kk; --m) {
      key[m] = key[m - 1];
      p.lab[m] = p.lab[m - 1];
    }
    key[m] = kk;
    p.lab[m] = v;
  }
  for (int k = begin + 1; k < end; ++k) {
    if (key[k] != key[k - 1]) p.starts |= Row{1} << k;
  }
  return true;
}

void refine(const Graph& g, int n, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int ws = 0; ws < n; ws = cell_end(p.starts, ws, n)) {
      const int we = cell_end(p.starts, ws, n);
      Row splitter = 0;
      for (int k = ws; k < we; ++k) splitter |= Row{1} << p.lab[k];
      for (int xs = 0; xs < n;) {
        const int xe = cell_end(p.starts, xs, n);
        if (xe - xs > 1 && split_cell(g, p, xs, xe, splitter)) changed = true;
        xs = xe;
      }
    }
  }
}

int first_open_cell(Row starts, int n) {
  for (int s = 0; s < n;) {
    const int e = cell_end(starts, s, n);
    if (e - s > 1) return s;
    s = e;
  }
  return -1;
}

// Column j holds the upper-triangle entries x_{0j} .. x_{j-1,j} with x_{0j}
// as the most significant bit, so comparing columns in order is comparing
// graph6 bit strings.
Code leaf_code(const Graph& g, int n, const Labels& lab) {
  Labels inv{};
  for (int i = 0; i < n; ++i) inv[lab[i]] = static_cast<std::uint8_t>(i);
  Code code{};
  for (int j = 1; j < n; ++j) {
    Row col = 0;
    for (Row nb = g.neighbors(lab[j]); nb; nb &= nb - 1) {
      const int i = inv[std::countr_zero(nb)];
      if (i < j) col |= Row{1} << (j - 1 - i);
    }
    code[j] = col;
  }
  return code;
}

int compare_codes(const Code& a, const Code& b, int n) {
  for (int j = 1; j < n; ++j) {
    if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
  }
  return 0;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition root;
    for (int v = 0; v < n_; ++v) root.lab[v] = static_cast<std::uint8_t>(v);
    root.starts = n_ > 0 ? Row{1} : Row{0};
    descend(root, 0);

    CanonicalLabeling out;
    out.position.resize(n_);
    for (int i = 0; i < n_; ++i) out.position[best_.lab[i]] = i;
    out.graph = permute(g_, out.position);
    return out;
  }

 private:
  struct Leaf {
    Code code{};
    Labels lab{};
    Labels path{};
    int depth = 0;
  };

  int descend(Partition p, int depth) {
    refine(g_, n_, p);
    const int ts = first_open_cell(p.starts, n_);
    if (ts < 0) return leaf(p, depth);
    const int te = cell_end(p.starts, ts, n_);

    // Orbits of the known automorphisms that fix the current path pointwise.
    Labels parent{};
    std::iota(parent.begin(), parent.begin() + n_, std::uint8_t{0});
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t absorbed = 0;
    Row explored = 0;

    for (int k = ts; k < te; ++k) {
      for (; absorbed < automorphisms_.size(); ++absorbed) {
        const Labels& gamma = automorphisms_[absorbed];
        bool fixes_path = true;
        for (int d = 0; d < depth && fixes_path; ++d) fixes_path = gamma[path_[d]] == path_[d];
        if (!fixes_path) continue;
        for (int v = 0; v < n_; ++v) {
          const int a = find(v);
          const int b = find(gamma[v]);
          if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
        }
      }
      const int x = p.lab[k];
      bool redundant = false;
      for (Row e = explored; e && !redundant; e &= e - 1) {
        redundant = find(std::countr_zero(e)) == find(x);
      }
      if (redundant) continue;

      Partition child = p;
      std::swap(child.lab[ts], child.lab[k]);
      child.starts |= Row{1} << (ts + 1);
      path_[depth] = static_cast<std::uint8_t>(x);
      const int jump = descend(child, depth + 1);
      explored |= Row{1} << x;
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p, int depth) {
    Code code = leaf_code(g_, n_, p.lab);
    if (!have_leaf_) {
      first_ = Leaf{code, p.lab, path_, depth};
      best_ = first_;
      have_leaf_ = true;
      return kNoJump;
    }
    if (compare_codes(code, first_.code, n_) == 0) {
      record_automorphism(first_.lab, p.lab);
      return common_prefix(first_, depth);
    }
    const int c = compare_codes(code, best_.code, n_);
    if (c < 0) {
      best_ = Leaf{code, p.lab, path_, depth};
      return kNoJump;
    }
    if (c == 0) {
      record_automorphism(best_.lab, p.lab);
      return common_prefix(best_, depth);
    }
    return kNoJump;
  }

  void record_automorphism(const Labels& from, const Labels& to) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    Labels gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(gamma);
  }

  int common_prefix(const Leaf& other, int depth) const {
    const int limit = std::min(depth, other.depth);
    int d = 0;
    while (d < limit && other.path[d] == path_[d]) ++d;
    return d;
  }

  const Graph& g_;
  int n_;
  Labels path_{};
  bool have_leaf_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Labels> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

Graph canonical_form(const Graph& g) { return canonical_labeling(g).graph; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace lenergy
