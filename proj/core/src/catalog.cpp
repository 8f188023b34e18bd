#include "quivercount/catalog.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

#include "quivercount/errors.hpp"

namespace quivercount {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

struct Neighbor {
  std::size_t vertex;
  char dir;  // '>' edge points away from the current vertex, '<' towards it, '-' undirected
};

using Adjacency = std::vector<std::vector<Neighbor>>;

struct RootedCode {
  std::string code;
  std::uint64_t aut = 1;
};

// AHU code of the subtree hanging below v. If `children_out` is given it receives,
// per vertex, the children sorted by their annotated code.
RootedCode encode(const Adjacency& adj, std::size_t v, std::size_t parent,
                  std::vector<std::vector<std::size_t>>* children_out) {
  struct Child {
    std::string key;
    std::uint64_t aut;
    std::size_t vertex;
  };
  std::vector<Child> kids;
  for (const auto& n : adj[v]) {
    if (n.vertex == parent) continue;
    auto sub = encode(adj, n.vertex, v, children_out);
    kids.push_back({std::string(1, n.dir) + sub.code, sub.aut, n.vertex});
  }
  std::sort(kids.begin(), kids.end(), [](const Child& a, const Child& b) {
    return a.key < b.key || (a.key == b.key && a.vertex < b.vertex);
  });
  RootedCode out;
  out.code = "(";
  for (std::size_t i = 0; i < kids.size();) {
    std::size_t j = i;
    while (j < kids.size() && kids[j].key == kids[i].key) ++j;
    for (std::size_t r = 1; r <= j - i; ++r) out.aut *= r;
    for (std::size_t r = i; r < j; ++r) out.aut *= kids[r].aut;
    i = j;
  }
  for (const auto& k : kids) out.code += k.key;
  out.code += ")";
  if (children_out) {
    auto& ordered = (*children_out)[v];
    ordered.clear();
    for (const auto& k : kids) ordered.push_back(k.vertex);
  }
  return out;
}

std::vector<std::size_t> tree_centers(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) leaves.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= leaves.size();
    std::vector<std::size_t> next;
    for (auto leaf : leaves) {
      for (const auto& nb : adj[leaf]) {
        if (--degree[nb.vertex] == 1) next.push_back(nb.vertex);
      }
      degree[leaf] = 0;
    }
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

Adjacency oriented_adjacency(const Quiver& q) {
  Adjacency adj(q.vertex_count());
  for (const auto& a : q.arrows()) {
    adj[a.tail].push_back({a.head, '>'});
    adj[a.head].push_back({a.tail, '<'});
  }
  return adj;
}

Adjacency undirected_adjacency(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Adjacency adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back({v, '-'});
    adj[v].push_back({u, '-'});
  }
  return adj;
}

struct CenteredCode {
  std::string code;
  std::uint64_t aut;
  std::size_t root;
};

CenteredCode centered_code(const Adjacency& adj) {
  const auto centers = tree_centers(adj);
  auto first = encode(adj, centers[0], kNoParent, nullptr);
  if (centers.size() == 1) return {first.code, first.aut, centers[0]};
  auto second = encode(adj, centers[1], kNoParent, nullptr);
  if (first.code == second.code) return {first.code, first.aut * 2, centers[0]};
  if (second.code < first.code) return {second.code, second.aut, centers[1]};
  return {first.code, first.aut, centers[0]};
}

}  // namespace

CanonicalForm canonicalize(const Quiver& q) {
  if (!q.is_tree()) throw InputError("canonical form requires an oriented tree");
  const auto adj = oriented_adjacency(q);
  const auto centered = centered_code(adj);

  std::vector<std::vector<std::size_t>> children(q.vertex_count());
  encode(adj, centered.root, kNoParent, &children);

  CanonicalForm out;
  out.code = centered.code;
  out.aut_order = centered.aut;
  std::vector<std::size_t> new_index(q.vertex_count());
  std::vector<std::size_t> parent(q.vertex_count(), kNoParent);
  std::vector<std::size_t> stack{centered.root};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    new_index[v] = out.original_vertex.size();
    out.original_vertex.push_back(v);
    const auto& kids = children[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      parent[*it] = v;
      stack.push_back(*it);
    }
  }
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i < out.original_vertex.size(); ++i) {
    const auto v = out.original_vertex[i];
    const auto p = parent[v];
    bool away = false;
    for (const auto& nb : adj[p]) {
      if (nb.vertex == v) away = nb.dir == '>';
    }
    arrows.push_back(away ? Arrow{new_index[p], i} : Arrow{i, new_index[p]});
  }
  out.relabeled = Quiver(q.vertex_count(), std::move(arrows));
  return out;
}

std::string canonical_code(const Quiver& q) { return canonicalize(q).code; }

std::uint64_t aut_order(const Quiver& q) { return canonicalize(q).aut_order; }

std::vector<std::pair<std::size_t, std::size_t>> pruefer_decode(const std::vector<std::size_t>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (auto x : seq) {
    if (x >= n) throw InputError("Pruefer entry out of range");
    ++degree[x];
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto x : seq) {
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  std::size_t u = n, v = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 1) (u == n ? u : v) = i;
  }
  edges.emplace_back(u, v);
  return edges;
}

namespace {

// Calls fn(edges) for every labeled tree on n >= 2 vertices.
template <class Fn>
void for_each_labeled_tree(unsigned n, Fn&& fn) {
  if (n == 2) {
    fn(std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    return;
  }
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    fn(pruefer_decode(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

}  // namespace

std::vector<TreeQuiverEntry> enumerate_tree_quivers(unsigned d, unsigned max_d) {
  if (d == 0) throw InputError("tree quivers need at least one vertex");
  if (d > max_d) {
    throw ResourceError("tree enumeration limited to d <= " + std::to_string(max_d) + " (requested " +
                        std::to_string(d) + ")");
  }
  std::map<std::string, TreeQuiverEntry> by_code;
  auto add = [&](const Quiver& q) {
    auto cf = canonicalize(q);
    if (by_code.count(cf.code)) return;
    TreeQuiverEntry e;
    e.canonical_code = cf.code;
    e.aut_order = cf.aut_order;
    e.quiver = std::move(cf.relabeled);
    e.winding_counts = winding_counts(e.quiver);
    by_code.emplace(e.canonical_code, std::move(e));
  };
  if (d == 1) {
    add(Quiver(1, {}));
  } else {
    std::unordered_set<std::string> shapes;
    for_each_labeled_tree(d, [&](const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
      const auto shape = centered_code(undirected_adjacency(d, edges)).code;
      if (!shapes.insert(shape).second) return;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<Arrow> arrows;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          const auto [u, v] = edges[i];
          arrows.push_back((mask >> i) & 1 ? Arrow{v, u} : Arrow{u, v});
        }
        add(Quiver(d, std::move(arrows)));
      }
    });
  }
  std::vector<TreeQuiverEntry> out;
  out.reserve(by_code.size());
  for (auto& kv : by_code) out.push_back(std::move(kv.second));
  return out;
}

ConflictGraph conflict_graph(const Quiver& q) {
  ConflictGraph h;
  h.node_count = q.arrow_count();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    for (std::size_t b = a + 1; b < q.arrow_count(); ++b) {
      const auto& x = q.arrow(a);
      const auto& y = q.arrow(b);
      if (x.tail == y.tail || x.head == y.head) h.edges.emplace_back(a, b);
    }
  }
  return h;
}

namespace {

using Masks = std::vector<std::uint32_t>;
using IntPoly = std::vector<Integer>;

IntPoly sub_poly(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

// Removes vertex v and renumbers the vertices above it.
Masks drop_vertex(const Masks& adj, std::size_t v) {
  Masks out;
  const std::uint32_t low = (std::uint32_t{1} << v) - 1;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (i == v) continue;
    const std::uint32_t m = adj[i];
    out.push_back((m & low) | ((m >> 1) & ~low));
  }
  return out;
}

IntPoly chromatic_rec(const Masks& adj, std::map<Masks, IntPoly>& memo) {
  if (auto it = memo.find(adj); it != memo.end()) return it->second;
  std::size_t u = adj.size();
  std::size_t v = adj.size();
  for (std::size_t i = 0; i < adj.size() && u == adj.size(); ++i) {
    const std::uint32_t higher = adj[i] & ~((std::uint32_t{2} << i) - 1);
    if (higher) {
      u = i;
      v = static_cast<std::size_t>(__builtin_ctz(higher));
    }
  }
  IntPoly result;
  if (u == adj.size()) {
    result.assign(adj.size() + 1, Integer(0));
    result[adj.size()] = 1;
  } else {
    Masks deleted = adj;
    deleted[u] &= ~(std::uint32_t{1} << v);
    deleted[v] &= ~(std::uint32_t{1} << u);
    Masks merged = deleted;
    merged[u] |= merged[v];
    for (std::size_t i = 0; i < merged.size(); ++i) {
      if (merged[i] & (std::uint32_t{1} << v)) {
        merged[i] = (merged[i] & ~(std::uint32_t{1} << v)) | (std::uint32_t{1} << u);
      }
    }
    merged[u] &= ~(std::uint32_t{1} << u);
    const auto contracted = drop_vertex(merged, v);
    result = sub_poly(chromatic_rec(deleted, memo), chromatic_rec(contracted, memo));
  }
  memo.emplace(adj, result);
  return result;
}

}  // namespace

PolyQ chromatic_polynomial(const ConflictGraph& h) {
  if (h.node_count > 32) throw ResourceError("conflict graph too large for bitmask representation");
  Masks adj(h.node_count, 0);
  for (const auto& [a, b] : h.edges) {
    if (a == b || a >= h.node_count || b >= h.node_count) throw InputError("bad conflict graph edge");
    adj[a] |= std::uint32_t{1} << b;
    adj[b] |= std::uint32_t{1} << a;
  }
  std::map<Masks, IntPoly> memo;
  const auto coeffs = chromatic_rec(adj, memo);
  std::vector<Rational> rc(coeffs.begin(), coeffs.end());
  return PolyQ(std::move(rc));
}

std::vector<std::uint64_t> winding_counts(const Quiver& q) {
  const auto chi = chromatic_polynomial(conflict_graph(q));
  const std::size_t arrows = q.arrow_count();
  std::vector<std::uint64_t> w;
  for (std::size_t k = 1; k <= arrows; ++k) {
    Rational total = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      const Rational term = Rational(binomial(k, j)) * chi(Rational(static_cast<unsigned long>(j)));
      total += ((k - j) % 2 == 0) ? term : Rational(-term);
    }
    if (!is_integer(total) || total < 0) throw ConsistencyError("winding count is not a nonnegative integer");
    w.push_back(Integer(total.get_num()).get_ui());
  }
  return w;
}

BinomialPolyG orbit_count_poly(const TreeQuiverEntry& entry) {
  std::map<unsigned, Rational> coeffs;
  if (entry.quiver.arrow_count() == 0) {
    coeffs[0] = 1;
    return BinomialPolyG(std::move(coeffs));
  }
  for (std::size_t k = 1; k <= entry.winding_counts.size(); ++k) {
    const auto w = entry.winding_counts[k - 1];
    if (w % entry.aut_order != 0) {
      throw ConsistencyError("W_Q(" + std::to_string(k) + ") = " + std::to_string(w) +
                             " not divisible by #Aut = " + std::to_string(entry.aut_order) + " for " +
                             entry.canonical_code);
    }
    coeffs[static_cast<unsigned>(k)] = Rational(static_cast<unsigned long>(w / entry.aut_order));
  }
  return BinomialPolyG(std::move(coeffs));
}

CayleyCheck cayley_identity_check(unsigned d, unsigned max_d) {
  CayleyCheck c;
  const Integer labeled_trees = d >= 2 ? power(Integer(d), d - 2) : Integer(1);
  c.lhs = power(Integer(2), d - 1) * labeled_trees;
  c.rhs = 0;
  const auto fact = factorial(d);
  for (const auto& e : enumerate_tree_quivers(d, max_d)) c.rhs += fact / Integer(static_cast<unsigned long>(e.aut_order));
  return c;
}

LabeledOrbitCensus labeled_orbit_census(unsigned d) {
  if (d == 0) throw InputError("census needs d >= 1");
  if (d > 7) throw ResourceError("labeled-orbit census limited to d <= 7");
  LabeledOrbitCensus census;
  if (d == 1) {
    census.labeled_count = 1;
    census.orbit_sizes.push_back(1);
    return census;
  }
  // Oriented labeled tree as an arc bitmask: bit t*d + h.
  std::vector<std::uint64_t> all;
  for_each_labeled_tree(d, [&](const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
      std::uint64_t arcs = 0;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [t, h] = edges[i];
        if ((mask >> i) & 1) std::swap(t, h);
        arcs |= std::uint64_t{1} << (t * d + h);
      }
      all.push_back(arcs);
    }
  });
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::size_t> perm(d);
  for (auto arcs : all) {
    if (seen.count(arcs)) continue;
    std::vector<std::pair<std::size_t, std::size_t>> list;
    for (std::size_t t = 0; t < d; ++t) {
      for (std::size_t h = 0; h < d; ++h) {
        if ((arcs >> (t * d + h)) & 1) list.emplace_back(t, h);
      }
    }
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    std::unordered_set<std::uint64_t> orbit;
    do {
      std::uint64_t image = 0;
      for (const auto& [t, h] : list) image |= std::uint64_t{1} << (perm[t] * d + perm[h]);
      orbit.insert(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    seen.insert(orbit.begin(), orbit.end());
    census.orbit_sizes.push_back(orbit.size());
  }
  census.labeled_count = all.size();
  return census;
}

}  // namespace quivercount
