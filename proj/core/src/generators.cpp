#include "tww/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace tww {

namespace {

Rational q(long num, unsigned long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Point pt(const Rational& x, const Rational& y) { return Point{x, y}; }

// Portable draw from [lo, hi].
long draw(std::mt19937_64& rng, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

struct Encoding {
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::vector<std::pair<int, int>> edges;
};

const Rational kDelta = q(1, 5);

SegmentScene encode(const Encoding& e) {
  SegmentScene s;
  long na = std::max<long>(static_cast<long>(e.a.size()), 1);
  long nb = std::max<long>(static_cast<long>(e.b.size()), 1);
  Rational half = q(1, 2);
  for (size_t i = 0; i < e.a.size(); ++i) {
    Rational x = q(static_cast<long>(i) + 1);
    s.segments.push_back(Segment{e.a[i], pt(x, half), pt(x, q(nb) + half)});
  }
  for (size_t j = 0; j < e.b.size(); ++j) {
    Rational y = q(static_cast<long>(j) + 1);
    s.segments.push_back(Segment{e.b[j], pt(half, y), pt(q(na) + half, y)});
  }
  for (auto [i, j] : e.edges) {
    Rational x = q(i + 1), y = q(j + 1);
    std::string base = e.a[i] + ":" + e.b[j];
    s.segments.push_back(Segment{base + ":h", pt(x - kDelta, y + kDelta), pt(x + 3 * kDelta, y + kDelta)});
    s.segments.push_back(Segment{base + ":v", pt(x + kDelta, y - kDelta), pt(x + kDelta, y + 3 * kDelta)});
  }
  return s;
}

Graph encoding_graph(const Encoding& e) {
  std::vector<std::string> labels = e.a;
  labels.insert(labels.end(), e.b.begin(), e.b.end());
  for (auto [i, j] : e.edges) {
    labels.push_back(e.a[i] + ":" + e.b[j] + ":h");
    labels.push_back(e.a[i] + ":" + e.b[j] + ":v");
  }
  Graph g(labels);
  int na = static_cast<int>(e.a.size());
  int nb = static_cast<int>(e.b.size());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) g.add_edge(i, na + j);
  int next = na + nb;
  for (auto [i, j] : e.edges) {
    g.add_edge(i, next);
    g.add_edge(next, next + 1);
    g.add_edge(next + 1, na + j);
    next += 2;
  }
  return g;
}

Encoding complete_encoding(int n) {
  Encoding e;
  for (int i = 1; i <= n; ++i) {
    e.a.push_back("v" + std::to_string(i));
    e.b.push_back("h" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.edges.emplace_back(i, j);
  return e;
}

struct Sides {
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> index;  // position of each vertex within its side
};

Sides split(const Graph& g) {
  auto col = bipartition(g);
  if (!col) throw Error("graph is not bipartite");
  Sides s;
  s.index.resize(g.size());
  for (int v = 0; v < g.size(); ++v) {
    auto& side = (*col)[v] == 0 ? s.a : s.b;
    s.index[v] = static_cast<int>(side.size());
    side.push_back(v);
  }
  return s;
}

Encoding graph_encoding(const Graph& g) {
  if (g.max_degree() > 3) throw Error("graph has a vertex of degree above 3");
  Sides s = split(g);
  Encoding e;
  for (int v : s.a) e.a.push_back(g.label(v));
  for (int v : s.b) e.b.push_back(g.label(v));
  for (int v : s.a)
    for (int w : s.b)
      if (g.adjacent(v, w)) e.edges.emplace_back(s.index[v], s.index[w]);
  return e;
}

Graph from_edges(const std::vector<std::string>& labels, const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g(labels);
  for (const auto& [u, v] : edges) g.add_edge(g.index_of(u), g.index_of(v));
  return g;
}

Graph bipartite_from_pairs(int na, int nb, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::string> labels;
  for (int i = 1; i <= na; ++i) labels.push_back("a" + std::to_string(i));
  for (int j = 1; j <= nb; ++j) labels.push_back("b" + std::to_string(j));
  Graph g(labels);
  for (auto [i, j] : pairs) g.add_edge(i - 1, na + j - 1);
  return g;
}

}  // namespace

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> col(g.size(), -1);
  for (int s = 0; s < g.size(); ++s) {
    if (col[s] >= 0) continue;
    col[s] = 0;
    std::vector<int> queue{s};
    for (size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      bool bad = false;
      for_each_bit(g.neighbors(u), [&](int w) {
        if (col[w] < 0) {
          col[w] = 1 - col[u];
          queue.push_back(w);
        } else if (col[w] == col[u]) {
          bad = true;
        }
      });
      if (bad) return std::nullopt;
    }
  }
  return col;
}

SegmentScene gen_bn_segments(int n) {
  if (n < 0) throw Error("n must be non-negative");
  return encode(complete_encoding(n));
}

Graph bn_graph(int n) {
  if (n < 0) throw Error("n must be non-negative");
  return encoding_graph(complete_encoding(n));
}

SegmentScene gen_subcubic_encoding_segments(const Graph& g) { return encode(graph_encoding(g)); }

Graph subcubic_encoding_graph(const Graph& g) { return encoding_graph(graph_encoding(g)); }

TreeModel gen_pi_tree_model(const Graph& g) {
  Sides s = split(g);
  TreeModel tm;
  tm.nodes = g.size() + 1;
  for (int v : s.a) tm.arcs.emplace_back(v + 1, 0);
  for (int v : s.b) tm.arcs.emplace_back(0, v + 1);
  std::sort(tm.arcs.begin(), tm.arcs.end());
  for (int v = 0; v < g.size(); ++v) tm.paths.push_back({g.label(v), v + 1, v + 1});
  for (int a : s.a)
    for (int b : s.b)
      if (g.adjacent(a, b)) tm.paths.push_back({g.label(a) + ":" + g.label(b), a + 1, b + 1});
  return tm;
}

Graph subdivided_clique_graph(const Graph& g) {
  Sides s = split(g);
  std::vector<std::string> labels = g.labels();
  std::vector<std::pair<int, int>> ends;
  for (int a : s.a)
    for (int b : s.b)
      if (g.adjacent(a, b)) {
        labels.push_back(g.label(a) + ":" + g.label(b));
        ends.emplace_back(a, b);
      }
  Graph h(labels);
  int n = g.size();
  for (size_t i = 0; i < ends.size(); ++i) {
    int x = n + static_cast<int>(i);
    h.add_edge(ends[i].first, x);
    h.add_edge(ends[i].second, x);
    for (size_t j = i + 1; j < ends.size(); ++j) h.add_edge(x, n + static_cast<int>(j));
  }
  return h;
}

PolygonFamily gen_polygon_family(const Graph& g) {
  if (g.edge_count() == 0) throw Error("polygon family needs at least one edge");
  if (g.max_degree() > 3) throw Error("graph has a vertex of degree above 3");
  Sides s = split(g);
  const Rational height = 1;
  const Rational depth = q(1, 10);
  const Rational width = q(1, 100);
  const long gap = static_cast<long>(s.b.size()) + 1;

  std::vector<Point> pts;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> clique;
  const char* primes[] = {"", "'", "''", "'''"};
  for (size_t i = 0; i < s.a.size(); ++i) {
    int a = s.a[i];
    std::string idx = std::to_string(i + 1);
    std::vector<int> targets;
    for (int b : s.b)
      if (g.adjacent(a, b)) targets.push_back(s.index[b]);
    std::sort(targets.rbegin(), targets.rend());
    Rational x0 = q(gap * (static_cast<long>(i) + 1));
    auto add_d = [&](size_t k) {
      labels.push_back("d" + idx + primes[k]);
      pts.push_back(pt(x0 + width * static_cast<long>(k), 0));
      clique.push_back(labels.back());
    };
    add_d(0);
    for (size_t k = 0; k < targets.size(); ++k) {
      Rational mid = x0 + width * static_cast<long>(k) + width / 2;
      Rational target = q(targets[k] + 1);
      labels.push_back("p" + idx + primes[k]);
      pts.push_back(pt(mid + (mid - target) * depth / height, -depth));
      std::string p = labels.back();
      edges.emplace_back(p, "q" + std::to_string(targets[k] + 1));
      edges.emplace_back(p, "d" + idx + primes[k]);
      edges.emplace_back(p, "d" + idx + primes[k + 1]);
      add_d(k + 1);
    }
  }
  for (long j = static_cast<long>(s.b.size()); j >= 1; --j) {
    labels.push_back("q" + std::to_string(j));
    pts.push_back(pt(q(j), height));
    clique.push_back(labels.back());
  }
  for (size_t i = 0; i < clique.size(); ++i)
    for (size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);

  PolygonFamily out;
  out.polygon = SimplePolygon{pts, labels};
  out.spec = from_edges(labels, edges);
  auto vis = polygon_visibility(out.polygon);
  if (!(vis.graph == out.spec)) throw Error("polygon family: the visibility graph differs from the target graph");
  return out;
}

Terrain gen_random_terrain(int n, std::uint64_t seed, int max_height) {
  if (n < 1) throw Error("terrain needs at least one vertex");
  if (max_height <= 0) max_height = n;
  std::mt19937_64 rng(seed);
  Terrain t;
  for (int i = 0; i < n; ++i) t.vertices.push_back(pt(q(i), q(draw(rng, 0, max_height))));
  return t;
}

SimplePolygon gen_random_polygon(int n, std::uint64_t seed, int attempts) {
  if (n < 3) throw Error("polygon needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  long side = 2L * n;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::set<std::pair<long, long>> used;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      long x = draw(rng, 0, side), y = draw(rng, 0, side);
      if (used.insert({x, y}).second) pts.push_back(pt(q(x), q(y)));
    }
    // 2-opt: reverse a stretch whenever two non-adjacent edges meet.
    bool changed = true;
    int rounds = 0;
    while (changed && rounds < 50 * n * n) {
      changed = false;
      for (int i = 0; i < n && !changed; ++i)
        for (int j = i + 2; j < n && !changed; ++j) {
          if (i == 0 && j == n - 1) continue;
          if (segments_intersect(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) {
            std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
            changed = true;
            ++rounds;
          }
        }
    }
    if (changed) continue;
    bool collinear = false;
    for (int i = 0; i < n; ++i)
      if (orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) == 0) collinear = true;
    if (collinear) continue;
    SimplePolygon p{pts, {}};
    try {
      validate_polygon(p);
    } catch (const Error&) {
      continue;
    }
    return normalize_polygon(p);
  }
  throw Error("random polygon: rejection budget exceeded");
}

IntervalModel gen_random_intervals(int n, std::uint64_t seed) {
  if (n < 0) throw Error("n must be non-negative");
  std::mt19937_64 rng(seed);
  IntervalModel m;
  long span = 2L * std::max(n, 1);
  for (int i = 0; i < n; ++i) {
    long l = draw(rng, 0, span);
    long len = draw(rng, 0, std::max(1, n / 2));
    m.intervals.push_back({"i" + std::to_string(i + 1), l, l + len});
  }
  return m;
}

SegmentScene gen_random_axis_segments(int n, const Rational& ell, std::uint64_t seed) {
  if (n < 0) throw Error("n must be non-negative");
  if (ell < 1) throw Error("maximum length must be at least 1");
  std::mt19937_64 rng(seed);
  Rational eighths = ell * 8;
  long max_len = mpz_class(eighths.get_num() / eighths.get_den()).get_si();
  long side = 8L * std::max<long>(4, static_cast<long>(std::ceil(2 * std::sqrt(static_cast<double>(n)))));
  SegmentScene s;
  for (int i = 0; i < n; ++i) {
    long x = draw(rng, 0, side), y = draw(rng, 0, side);
    long len = draw(rng, 8, max_len);
    bool vertical = draw(rng, 0, 1) == 1;
    Point a = pt(q(x, 8), q(y, 8));
    Point b = vertical ? pt(q(x, 8), q(y + len, 8)) : pt(q(x + len, 8), q(y, 8));
    s.segments.push_back(Segment{"s" + std::to_string(i + 1), a, b});
  }
  return s;
}

TreeModel gen_random_tree_model(int nodes, int paths, std::uint64_t seed) {
  if (nodes < 1) throw Error("tree needs at least one node");
  std::mt19937_64 rng(seed);
  std::vector<int> parent(nodes, -1), depth(nodes, 0);
  for (int v = 1; v < nodes; ++v) {
    parent[v] = static_cast<int>(draw(rng, 0, v - 1));
    depth[v] = depth[parent[v]] + 1;
  }
  std::vector<TreeModel::Path> ps;
  for (int i = 0; i < paths; ++i) {
    int low = static_cast<int>(draw(rng, 0, nodes - 1));
    int up = static_cast<int>(draw(rng, 0, depth[low]));
    int high = low;
    for (int s = 0; s < up; ++s) high = parent[high];
    ps.push_back({"u" + std::to_string(i + 1), high, low});
  }
  return TreeModel::from_parents(parent, std::move(ps));
}

Terrain gen_convex_terrain(int n) {
  Terrain t;
  for (long i = 0; i < n; ++i) t.vertices.push_back(pt(q(i), q(i * i)));
  return t;
}

SimplePolygon gen_convex_polygon(int n) {
  if (n < 3) throw Error("polygon needs at least 3 vertices");
  SimplePolygon p;
  for (long i = 0; i < n; ++i) p.boundary.push_back(pt(q(i), q(i * i)));
  return normalize_polygon(p);
}

SimplePolygon gen_comb_polygon(int teeth) {
  if (teeth < 1) throw Error("comb needs at least one tooth");
  const long h = 4;
  long last = 2L * teeth - 1;
  SimplePolygon p;
  p.boundary.push_back(pt(0, 0));
  p.boundary.push_back(pt(q(last), 0));
  for (long i = teeth - 1; i >= 0; --i) {
    p.boundary.push_back(pt(q(2 * i + 1), q(h)));
    p.boundary.push_back(pt(q(2 * i), q(h)));
    if (i > 0) {
      p.boundary.push_back(pt(q(2 * i), q(1)));
      p.boundary.push_back(pt(q(2 * i - 1), q(1)));
    }
  }
  return normalize_polygon(p);
}

IntervalModel gen_staircase_intervals(int t) {
  if (t < 1) throw Error("t must be positive");
  long m = static_cast<long>(t) * t;
  long base = 2 * m * m + 10;
  auto peak = [&](long y) { return base + 10 * y; };
  IntervalModel model;
  for (long x = 1; x <= m; ++x)
    for (long z = 1; z <= m; ++z) {
      long l = 2 * ((x - 1) * m + z);
      std::string tag = std::to_string(x) + "_" + std::to_string(z);
      model.intervals.push_back({"r" + tag, l, peak(z) + 1});
      model.intervals.push_back({"c" + tag, l, l});
    }
  for (long y = 1; y <= m; ++y) {
    model.intervals.push_back({"k" + std::to_string(y) + "_1", peak(y), peak(y)});
    model.intervals.push_back({"k" + std::to_string(y) + "_2", peak(y) + 2, peak(y) + 2});
  }
  return minimize_representation(model);
}

Graph seven_vertex_example() {
  return from_edges({"a", "b", "c", "d", "e", "f", "g"},
                    {{"a", "b"}, {"a", "d"}, {"a", "f"}, {"b", "c"}, {"b", "d"}, {"b", "e"}, {"b", "f"},
                     {"c", "e"}, {"c", "f"}, {"d", "e"}, {"d", "g"}, {"e", "g"}, {"f", "g"}});
}

ContractionSequence seven_vertex_sequence() {
  return ContractionSequence{{{"e", "f"}, {"a", "d"}, {"b", "e.f"}, {"a.d", "g"}, {"b.e.f", "c"}, {"a.d.g", "b.c.e.f"}}};
}

Graph cubic_bipartite_example() {
  return bipartite_from_pairs(8, 8, {{1, 3}, {1, 5}, {1, 6}, {2, 1}, {2, 4}, {2, 8}, {3, 1}, {3, 7},
                                     {3, 8}, {4, 2}, {4, 3}, {4, 5}, {5, 3}, {5, 6}, {5, 7}, {6, 1},
                                     {6, 6}, {6, 8}, {7, 2}, {7, 4}, {7, 7}, {8, 2}, {8, 4}, {8, 5}});
}

Graph k33_minus_matching() {
  return bipartite_from_pairs(3, 3, {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
}

Graph subcubic_4x4_example() {
  return bipartite_from_pairs(4, 4, {{1, 1}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 2}, {4, 4}});
}

}  // namespace tww
