#include "tww/orders.hpp"

#include "tww/budget.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace tww {

TreeModel TreeModel::from_parents(const std::vector<int>& parent, std::vector<Path> paths) {
  TreeModel tm;
  tm.nodes = static_cast<int>(parent.size());
  for (int v = 0; v < tm.nodes; ++v)
    if (parent[v] >= 0) tm.arcs.emplace_back(parent[v], v);
  tm.paths = std::move(paths);
  return tm;
}

bool TreeModel::rooted() const {
  if (nodes <= 0 || static_cast<int>(arcs.size()) != nodes - 1) return false;
  std::vector<int> indeg(nodes, 0);
  for (auto [a, b] : arcs) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) return false;
    ++indeg[b];
  }
  int roots = 0;
  for (int d : indeg) {
    if (d > 1) return false;
    roots += d == 0;
  }
  if (roots != 1) return false;
  // With n-1 arcs and in-degree one off the root, reachability makes it a tree.
  std::vector<std::vector<int>> out(nodes);
  for (auto [a, b] : arcs) out[a].push_back(b);
  int root = static_cast<int>(std::find(indeg.begin(), indeg.end(), 0) - indeg.begin());
  std::vector<bool> seen(nodes, false);
  std::vector<int> stack{root};
  seen[root] = true;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y : out[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return count == nodes;
}

std::vector<int> TreeModel::parents() const {
  if (!rooted()) throw Error("tree model is not rooted");
  std::vector<int> p(nodes, -1);
  for (auto [a, b] : arcs) p[b] = a;
  return p;
}

std::vector<std::vector<int>> TreeModel::path_nodes() const {
  std::vector<std::vector<int>> out_arcs(nodes);
  for (auto [a, b] : arcs) out_arcs[a].push_back(b);
  std::vector<std::vector<int>> result;
  for (const auto& p : paths) {
    if (p.high < 0 || p.high >= nodes || p.low < 0 || p.low >= nodes)
      throw Error("path '" + p.label + "' references a missing node");
    std::vector<int> from(nodes, -2);
    std::vector<int> queue{p.high};
    from[p.high] = -1;
    for (size_t i = 0; i < queue.size(); ++i)
      for (int y : out_arcs[queue[i]])
        if (from[y] == -2) {
          from[y] = queue[i];
          queue.push_back(y);
        }
    if (from[p.low] == -2) throw Error("path '" + p.label + "' is not a directed path");
    std::vector<int> nodes_on;
    for (int x = p.low; x != -1; x = from[x]) nodes_on.push_back(x);
    std::reverse(nodes_on.begin(), nodes_on.end());
    result.push_back(std::move(nodes_on));
  }
  return result;
}

void validate_tree_model(const TreeModel& tm) {
  if (tm.nodes <= 0) throw Error("tree model needs at least one node");
  if (static_cast<int>(tm.arcs.size()) != tm.nodes - 1) throw Error("tree model arcs do not form a tree");
  std::vector<int> comp(tm.nodes);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (auto [a, b] : tm.arcs) {
    if (a < 0 || b < 0 || a >= tm.nodes || b >= tm.nodes || a == b) throw Error("tree model arc out of range");
    int ra = find(a), rb = find(b);
    if (ra == rb) throw Error("tree model arcs contain a cycle");
    comp[ra] = rb;
  }
  std::set<std::string> labels;
  for (const auto& p : tm.paths)
    if (!labels.insert(p.label).second) throw Error("duplicate path label '" + p.label + "'");
  tm.path_nodes();
}

Graph tree_model_graph(const TreeModel& tm) {
  validate_tree_model(tm);
  auto nodes_of = tm.path_nodes();
  std::vector<std::string> labels;
  for (const auto& p : tm.paths) labels.push_back(p.label);
  Graph g(std::move(labels));
  std::vector<Bitset> sets;
  for (const auto& ns : nodes_of) {
    Bitset b(tm.nodes);
    for (int x : ns) b.set(x);
    sets.push_back(std::move(b));
  }
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (sets[u].intersects(sets[v])) g.add_edge(u, v);
  return g;
}

VertexOrder interval_lex_order(const IntervalModel& model) {
  const auto& iv = model.intervals;
  std::vector<int> perm(iv.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (iv[a].l != iv[b].l) return iv[a].l < iv[b].l;
    if (iv[a].r != iv[b].r) return iv[a].r < iv[b].r;
    return iv[a].label < iv[b].label;
  });
  return VertexOrder(std::move(perm));
}

std::vector<std::pair<long long, long long>> start_intervals(const IntervalModel& model,
                                                             const std::vector<std::vector<int>>& parts) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& part : parts) {
    if (part.empty()) throw Error("empty part");
    long long lo = model.intervals.at(part[0]).l, hi = lo;
    for (int v : part) {
      lo = std::min(lo, model.intervals.at(v).l);
      hi = std::max(hi, model.intervals.at(v).l);
    }
    out.emplace_back(lo, hi);
  }
  return out;
}

namespace {

struct RootedTree {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> depth;
  std::vector<int> tin, tout;
  int root = 0;

  explicit RootedTree(const TreeModel& tm) : parent(tm.parents()) {
    int n = tm.nodes;
    children.resize(n);
    for (int v = 0; v < n; ++v) {
      if (parent[v] < 0)
        root = v;
      else
        children[parent[v]].push_back(v);
    }
    depth.assign(n, 0);
    tin.assign(n, 0);
    tout.assign(n, 0);
    int clock = 0;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    tin[root] = clock++;
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      if (i < children[x].size()) {
        int c = children[x][i++];
        depth[c] = depth[x] + 1;
        tin[c] = clock++;
        stack.push_back({c, 0});
      } else {
        tout[x] = clock++;
        stack.pop_back();
      }
    }
  }

  // a is an ancestor of b (or equal).
  bool anc(int a, int b) const { return tin[a] <= tin[b] && tout[b] <= tout[a]; }

  int lca(int a, int b) const {
    while (!anc(a, b)) a = parent[a];
    return a;
  }

  // Child of a on the way down to its proper descendant b.
  int child_towards(int a, int b) const {
    while (parent[b] != a) b = parent[b];
    return b;
  }
};

}  // namespace

std::vector<MinimalityEntry> minimality_check(const TreeModel& tm) {
  RootedTree t(tm);
  auto nodes_of = tm.path_nodes();
  std::vector<Bitset> sets;
  for (const auto& ns : nodes_of) {
    Bitset b(tm.nodes);
    for (int x : ns) b.set(x);
    sets.push_back(std::move(b));
  }
  std::vector<MinimalityEntry> out;
  for (int p = 0; p < tm.nodes; ++p) {
    if (p == t.root) continue;
    MinimalityEntry e;
    e.node = p;
    for (int u = 0; u < static_cast<int>(tm.paths.size()); ++u) {
      if (!e.starts_here && tm.paths[u].high == p) e.starts_here = u;
      if (!e.leaves_parent && sets[u][t.parent[p]] && !sets[u][p]) e.leaves_parent = u;
    }
    out.push_back(e);
  }
  return out;
}

bool is_minimal(const TreeModel& tm) {
  for (const auto& e : minimality_check(tm))
    if (!e.ok()) return false;
  return true;
}

TreeModel minimize_tree_model(const TreeModel& input) {
  validate_tree_model(input);
  TreeModel tm = input;
  for (;;) {
    std::optional<int> defect;
    for (const auto& e : minimality_check(tm))
      if (!e.ok()) {
        defect = e.node;
        break;
      }
    if (!defect) return tm;
    int p = *defect;
    auto parent = tm.parents();
    int up = parent[p];
    for (auto& path : tm.paths) {
      if (path.high == p) path.high = up;
      if (path.low == p) path.low = up;
    }
    for (auto& q : parent)
      if (q == p) q = up;
    // Drop p and renumber.
    std::vector<int> remap(tm.nodes, -1);
    int next = 0;
    for (int v = 0; v < tm.nodes; ++v)
      if (v != p) remap[v] = next++;
    std::vector<int> np(next, -1);
    for (int v = 0; v < tm.nodes; ++v)
      if (v != p) np[remap[v]] = parent[v] < 0 ? -1 : remap[parent[v]];
    for (auto& path : tm.paths) {
      path.high = remap[path.high];
      path.low = remap[path.low];
    }
    tm = TreeModel::from_parents(np, tm.paths);
  }
}

RdpOrder rdp_lex_dfs(const TreeModel& tm, bool force) {
  validate_tree_model(tm);
  if (!tm.rooted()) throw Error("tree model is not rooted");
  if (!force && !is_minimal(tm)) throw Error("tree model is not minimal");
  RootedTree t(tm);
  int n = tm.nodes;
  // H[x]: highs of the paths whose low lies in the subtree of x.
  std::vector<Bitset> h(n, Bitset(n));
  for (const auto& p : tm.paths) h[p.low].set(p.high);
  std::vector<int> by_depth(n);
  std::iota(by_depth.begin(), by_depth.end(), 0);
  std::sort(by_depth.begin(), by_depth.end(), [&](int a, int b) { return t.depth[a] > t.depth[b]; });
  for (int x : by_depth)
    if (t.parent[x] >= 0) h[t.parent[x]] |= h[x];

  // 1: x goes first, -1: y goes first, 0: no minimum.
  auto compare = [&](int x, int y) {
    Bitset diff = h[x] ^ h[y];
    if (diff.none()) return 0;
    int m = -1;
    for_each_bit(diff, [&](int z) {
      if (m < 0 || t.depth[z] < t.depth[m]) m = z;
    });
    bool minimum = true;
    for_each_bit(diff, [&](int z) { minimum = minimum && t.anc(m, z); });
    if (!minimum) return 0;
    return h[x][m] ? 1 : -1;
  };

  RdpOrder res;
  res.dfs_post.assign(n, -1);
  int clock = 0;
  std::function<void(int)> dfs = [&](int x) {
    std::vector<int> rest = t.children[x];
    std::sort(rest.begin(), rest.end());
    while (!rest.empty()) {
      size_t pick = rest.size();
      for (size_t i = 0; i < rest.size() && pick == rest.size(); ++i) {
        bool beaten = false;
        for (size_t j = 0; j < rest.size() && !beaten; ++j)
          if (j != i && compare(rest[j], rest[i]) > 0) beaten = true;
        if (!beaten) pick = i;
      }
      bool decisive = pick < rest.size();
      if (!decisive) pick = 0;
      for (size_t j = 0; j < rest.size() && decisive; ++j)
        if (j != pick && compare(rest[pick], rest[j]) != 1) decisive = false;
      if (!decisive && rest.size() > 1) ++res.label_fallbacks;
      int c = rest[pick];
      rest.erase(rest.begin() + static_cast<long>(pick));
      dfs(c);
    }
    res.dfs_post[x] = clock++;
  };
  dfs(t.root);

  std::vector<int> perm(tm.paths.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& pa = tm.paths[a];
    const auto& pb = tm.paths[b];
    if (pa.low != pb.low) return res.dfs_post[pa.low] < res.dfs_post[pb.low];
    if (t.depth[pa.high] != t.depth[pb.high]) return t.depth[pa.high] < t.depth[pb.high];
    return pa.label < pb.label;
  });
  res.order = VertexOrder(std::move(perm));
  return res;
}

VertexOrder rdp_lex_dfs_order(const TreeModel& tm, bool force) { return rdp_lex_dfs(tm, force).order; }

RdpReport verify_rdp_order(const TreeModel& tm, const VertexOrder& ord, size_t limit) {
  RootedTree t(tm);
  int n = ord.size();
  if (n != static_cast<int>(tm.paths.size())) throw Error("order size does not match the model");
  std::vector<int> low(n);
  for (int p = 0; p < n; ++p) low[p] = tm.paths[ord.at(p)].low;
  RdpReport rep;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int x = t.lca(low[a], low[b]);
      bool split = x != low[a] && x != low[b];
      int side = split ? t.child_towards(x, low[a]) : -1;
      for (int c = b + 1; c < n; ++c) {
        if (split && t.anc(side, low[c])) {
          if (!limit || rep.obs1.size() < limit) rep.obs1.push_back({ord.at(a), ord.at(b), ord.at(c)});
        }
        int uw = t.lca(low[a], low[c]);
        if (!t.anc(uw, t.lca(low[b], low[c])) || !t.anc(uw, x)) {
          if (!limit || rep.obs2.size() < limit) rep.obs2.push_back({ord.at(a), ord.at(b), ord.at(c)});
        }
      }
    }
  return rep;
}

SegmentOrder segment_global_order(const SegmentScene& scene, const GridSpec& grid) {
  SegmentOrder so{gamma_splitting(scene, grid), VertexOrder{}, {}, 0, 0};
  const Splitting& h = so.splitting;
  int nv = h.graph.size();
  so.block.assign(nv, -1);
  if (nv == 0) {
    so.order = VertexOrder(std::vector<int>{});
    return so;
  }
  long long imin = 0, imax = 0, jmin = 0, jmax = 0;
  bool first = true;
  for (int v = 0; v < nv; ++v) {
    if (h.role[v] != Splitting::Role::s) continue;
    const Cell& c = h.cell[v];
    if (first) {
      imin = imax = c.i;
      jmin = jmax = c.j;
      first = false;
    }
    imin = std::min(imin, c.i);
    imax = std::max(imax, c.i);
    jmin = std::min(jmin, c.j);
    jmax = std::max(jmax, c.j);
  }
  so.columns = jmax - jmin + 1;
  so.rows = imax - imin + 1;

  struct Event {
    Rational param;
    int segment;
    int d;
    int piece;
  };
  std::map<Cell, std::vector<Event>> events;
  std::map<Cell, std::vector<int>> members;
  for (int k = 0; k < static_cast<int>(h.pieces.size()); ++k) {
    for (int s : h.pieces[k]) members[h.cell[s]].push_back(s);
    for (size_t c = 0; c < h.crossings[k].size(); ++c) {
      int d = h.crossings[k][c];
      for (int s : {h.pieces[k][c], h.pieces[k][c + 1]})
        events[h.cell[s]].push_back(Event{boundary_parameter(h.point[d], grid, h.cell[s]), k, d, s});
    }
  }
  std::vector<bool> listed(nv, false);
  std::vector<int> perm;
  for (long long i = imin; i <= imax; ++i)
    for (long long j = jmin; j <= jmax; ++j) {
      Cell cell{i, j};
      int block = static_cast<int>((i - imin) * so.columns + (j - jmin));
      auto append = [&](int v) {
        if (listed[v]) return;
        listed[v] = true;
        so.block[v] = block;
        perm.push_back(v);
      };
      auto& ev = events[cell];
      std::stable_sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
        if (a.param != b.param) return a.param < b.param;
        return a.segment < b.segment;
      });
      for (const auto& e : ev) {
        append(e.d);
        append(e.piece);
      }
      auto rest = members[cell];
      std::sort(rest.begin(), rest.end(), [&](int a, int b) { return h.origin[a] < h.origin[b]; });
      for (int s : rest) append(s);
    }
  so.order = VertexOrder(std::move(perm));
  return so;
}

std::vector<std::pair<int, int>> off_diagonal_blocks(const SegmentOrder& so) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : so.splitting.graph.edges()) {
    long long a = so.block[u], b = so.block[v];
    long long d = a > b ? a - b : b - a;
    if (d != 0 && d != 1 && d != so.columns) out.emplace_back(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
  }
  return out;
}

}  // namespace tww
