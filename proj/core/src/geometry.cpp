#include "tww/geometry.hpp"

#include "tww/budget.hpp"

#include <algorithm>
#include <cctype>

namespace tww {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty number");
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      Rational q(s, 10);
      q.canonicalize();
      if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
      return q;
    }
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    for (char c : whole + frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("malformed number '" + s + "'");
    mpz_class num(whole + frac, 10), den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw Error("malformed number '" + s + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(const Rational& q) { return sgn(q); }

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) { return sign(cross(a, b, c)); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d), o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

bool proper_crossing(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d), o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

std::vector<Point> segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (!segments_intersect(a, b, c, d)) return {};
  Rational denom = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
  if (denom != 0) {
    Rational s = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / denom;
    return {Point{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)}};
  }
  // Collinear overlap: the two middle points of the four endpoints.
  std::vector<Point> pts{a, b, c, d};
  std::sort(pts.begin(), pts.end());
  if (pts[1] == pts[2]) return {pts[1]};
  return {pts[1], pts[2]};
}

Graph intersection_graph(const SegmentScene& scene) {
  std::vector<std::string> labels;
  for (const auto& s : scene.segments) labels.push_back(s.id);
  Graph g(std::move(labels));
  int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = scene.segments[i];
      const auto& b = scene.segments[j];
      if (segments_intersect(a.p, a.q, b.p, b.q)) g.add_edge(i, j);
    }
  return g;
}

bool terrain_sees(const Terrain& t, int i, int j) {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  for (int k = i + 1; k < j; ++k)
    if (orientation(t.vertices[i], t.vertices[j], t.vertices[k]) > 0) return false;
  return true;
}

Visibility terrain_visibility(const Terrain& t) {
  int n = static_cast<int>(t.vertices.size());
  for (int i = 0; i + 1 < n; ++i)
    if (!(t.vertices[i].x < t.vertices[i + 1].x)) throw Error("terrain x coordinates must strictly increase");
  Graph g = Graph::numbered(n, "p");
  for (int i = 0; i < n; ++i) {
    // Walk right keeping the steepest slope seen so far.
    for (int j = i + 1; j < n; ++j)
      if (terrain_sees(t, i, j)) g.add_edge(i, j);
  }
  return {std::move(g), VertexOrder::identity(n)};
}

namespace {

Rational signed_area2(const std::vector<Point>& pts) {
  Rational a = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

// Half of the plane a direction falls in, measured from ref counter-clockwise.
int half(const Point& ref, const Point& d) {
  Rational cr = ref.x * d.y - ref.y * d.x;
  if (cr > 0) return 0;
  if (cr < 0) return 1;
  Rational dot = ref.x * d.x + ref.y * d.y;
  return dot > 0 ? 0 : 1;
}

// Counter-clockwise angle from ref to d1 is at most the angle from ref to d2.
bool ccw_angle_le(const Point& ref, const Point& d1, const Point& d2) {
  int h1 = half(ref, d1), h2 = half(ref, d2);
  if (h1 != h2) return h1 < h2;
  Rational cr = d1.x * d2.y - d1.y * d2.x;
  return cr >= 0;
}

Point sub(const Point& a, const Point& b) { return Point{a.x - b.x, a.y - b.y}; }

// Direction d from vertex k points into the closed interior angle.
bool in_interior_cone(const SimplePolygon& p, int k, const Point& d) {
  int n = static_cast<int>(p.boundary.size());
  const Point& w = p.boundary[k];
  Point to_next = sub(p.boundary[(k + 1) % n], w);
  Point to_prev = sub(p.boundary[(k + n - 1) % n], w);
  return ccw_angle_le(to_next, d, to_prev);
}

}  // namespace

void validate_polygon(const SimplePolygon& p) {
  int n = static_cast<int>(p.boundary.size());
  if (n < 3) throw Error("polygon needs at least three vertices");
  if (!p.labels.empty() && static_cast<int>(p.labels.size()) != n) throw Error("polygon label count mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.boundary[i] == p.boundary[j]) throw Error("polygon repeats a vertex");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Point &a = p.boundary[i], &b = p.boundary[(i + 1) % n];
      const Point &c = p.boundary[j], &d = p.boundary[(j + 1) % n];
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      auto common = segment_intersection(a, b, c, d);
      if (!adjacent && !common.empty()) throw Error("polygon is not simple");
      if (adjacent && common.size() > 1) throw Error("polygon has overlapping edges");
    }
  if (signed_area2(p.boundary) == 0) throw Error("polygon has zero area");
}

SimplePolygon normalize_polygon(SimplePolygon p) {
  if (p.labels.empty())
    for (size_t i = 0; i < p.boundary.size(); ++i) p.labels.push_back("v" + std::to_string(i + 1));
  validate_polygon(p);
  if (signed_area2(p.boundary) < 0) {
    std::reverse(p.boundary.begin(), p.boundary.end());
    std::reverse(p.labels.begin(), p.labels.end());
  }
  return p;
}

bool polygon_sees(const SimplePolygon& p, int i, int j) {
  int n = static_cast<int>(p.boundary.size());
  if (i == j) return false;
  if ((i + 1) % n == j || (j + 1) % n == i) return true;
  const Point& u = p.boundary[i];
  const Point& v = p.boundary[j];
  if (!in_interior_cone(p, i, sub(v, u)) || !in_interior_cone(p, j, sub(u, v))) return false;
  for (int k = 0; k < n; ++k) {
    const Point& a = p.boundary[k];
    const Point& b = p.boundary[(k + 1) % n];
    if (proper_crossing(u, v, a, b)) return false;
  }
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    const Point& w = p.boundary[k];
    if (!on_segment(w, u, v)) continue;
    if (!in_interior_cone(p, k, sub(u, w)) || !in_interior_cone(p, k, sub(v, w))) return false;
  }
  return true;
}

Visibility polygon_visibility(const SimplePolygon& input) {
  SimplePolygon p = normalize_polygon(input);
  int n = static_cast<int>(p.boundary.size());
  Graph g(p.labels);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (polygon_sees(p, i, j)) g.add_edge(i, j);
  int start = static_cast<int>(std::min_element(p.boundary.begin(), p.boundary.end()) - p.boundary.begin());
  // Labels follow the input polygon; map back if normalization reversed it.
  std::vector<int> perm;
  for (int k = 0; k < n; ++k) perm.push_back((start + k) % n);
  Graph out(input.labels.empty() ? p.labels : input.labels);
  std::vector<int> to_out(n);
  for (int i = 0; i < n; ++i) to_out[i] = out.index_of(p.labels[i]);
  for (auto [a, b] : g.edges()) out.add_edge(to_out[a], to_out[b]);
  for (auto& v : perm) v = to_out[v];
  return {std::move(out), VertexOrder(std::move(perm))};
}

std::vector<std::array<int, 4>> order_claim_violations(const Graph& g, const VertexOrder& ord, size_t limit) {
  std::vector<std::array<int, 4>> out;
  int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int c = a + 2; c < n; ++c) {
      if (!g.adjacent(ord.at(a), ord.at(c))) continue;
      for (int d = c + 1; d < n; ++d) {
        if (g.adjacent(ord.at(a), ord.at(d))) continue;
        for (int b = a + 1; b < c; ++b) {
          if (!g.adjacent(ord.at(b), ord.at(d))) continue;
          out.push_back({ord.at(a), ord.at(b), ord.at(c), ord.at(d)});
          if (limit && out.size() >= limit) return out;
        }
      }
    }
  return out;
}

std::vector<std::array<int, 6>> double_x_violations(const Graph& g, const VertexOrder& ord, size_t limit) {
  std::vector<std::array<int, 6>> out;
  int n = g.size();
  auto adj = [&](int i, int j) { return g.adjacent(ord.at(i), ord.at(j)); };
  for (int a = 1; a < n; ++a)
    for (int d = a + 3; d < n - 1; ++d) {
      if (adj(a, d)) continue;
      for (int b = a + 1; b < d; ++b) {
        if (!adj(b, d)) continue;
        for (int c = b + 1; c < d; ++c) {
          if (!adj(a, c)) continue;
          for (int bp = 0; bp < a; ++bp) {
            if (!adj(d, bp)) continue;
            for (int cp = d + 1; cp < n; ++cp) {
              if (!adj(a, cp)) continue;
              out.push_back({ord.at(bp), ord.at(a), ord.at(b), ord.at(c), ord.at(d), ord.at(cp)});
              if (limit && out.size() >= limit) return out;
            }
          }
        }
      }
    }
  return out;
}

Graph interval_graph(const IntervalModel& m) {
  std::vector<std::string> labels;
  for (const auto& e : m.intervals) {
    if (e.l > e.r) throw Error("interval '" + e.label + "' has l > r");
    labels.push_back(e.label);
  }
  Graph g(std::move(labels));
  int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::max(m.intervals[i].l, m.intervals[j].l) <= std::min(m.intervals[i].r, m.intervals[j].r))
        g.add_edge(i, j);
  return g;
}

IntervalModel minimize_representation(const IntervalModel& m) {
  Graph g = interval_graph(m);
  IntervalModel out = m;
  auto& iv = out.intervals;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < g.size(); ++u) {
      long long l = iv[u].r;
      for_each_bit(g.neighbors(u), [&](int v) { l = std::min(l, iv[v].r); });
      long long r = l;
      for_each_bit(g.neighbors(u), [&](int v) { r = std::max(r, iv[v].l); });
      r = std::max(r, l);
      if (l != iv[u].l || r != iv[u].r) {
        iv[u].l = l;
        iv[u].r = r;
        changed = true;
      }
    }
  }
  return out;
}

bool has_minimality_property(const IntervalModel& m) {
  for (const auto& u : m.intervals)
    for (const auto& w : m.intervals) {
      if (!(u.l < w.l)) continue;
      bool ok = false;
      for (const auto& v : m.intervals)
        if (u.l <= v.r && v.r < w.l) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

}  // namespace tww
