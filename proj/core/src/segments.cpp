#include "tww/budget.hpp"
#include "tww/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tww {

namespace {

mpz_class floor_q(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_q(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Position of a coordinate relative to the grid lines of one axis.
Rational grid_coord(const Rational& v, const Rational& origin, const Rational& t) { return (v - origin) / t; }

Rational residue(const Rational& v, const Rational& origin, const Rational& t) {
  Rational c = grid_coord(v, origin, t);
  return c - Rational(floor_q(c));
}

std::vector<Point> critical_points(const SegmentScene& scene) {
  std::vector<Point> pts;
  const auto& s = scene.segments;
  for (const auto& seg : s) {
    pts.push_back(seg.p);
    pts.push_back(seg.q);
  }
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      for (auto& p : segment_intersection(s[i].p, s[i].q, s[j].p, s[j].q)) pts.push_back(p);
  return pts;
}

Rational param_on(const Segment& s, const Point& p) {
  if (s.p.x != s.q.x) return (p.x - s.p.x) / (s.q.x - s.p.x);
  return (p.y - s.p.y) / (s.q.y - s.p.y);
}

Point at_param(const Segment& s, const Rational& u) {
  return Point{s.p.x + u * (s.q.x - s.p.x), s.p.y + u * (s.q.y - s.p.y)};
}

// Parameters in (0,1) where the segment meets a grid line, sorted.
std::vector<Rational> line_crossings(const Segment& s, const GridSpec& g) {
  std::vector<Rational> out;
  auto axis = [&](const Rational& a, const Rational& b, const Rational& o) {
    if (a == b) return;
    Rational lo = std::min(a, b), hi = std::max(a, b);
    mpz_class i0 = ceil_q(grid_coord(lo, o, g.t)), i1 = floor_q(grid_coord(hi, o, g.t));
    for (mpz_class i = i0; i <= i1; ++i) {
      Rational line = o + Rational(i) * g.t;
      out.push_back((line - a) / (b - a));
    }
  };
  axis(s.p.x, s.q.x, g.offset.x);
  axis(s.p.y, s.q.y, g.offset.y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<Rational> inner;
  for (auto& u : out)
    if (u > 0 && u < 1) inner.push_back(u);
  return inner;
}

bool on_grid_x(const Rational& x, const GridSpec& g) { return is_integer(grid_coord(x, g.offset.x, g.t)); }
bool on_grid_y(const Rational& y, const GridSpec& g) { return is_integer(grid_coord(y, g.offset.y, g.t)); }

bool through_grid_vertex(const Segment& s, const GridSpec& g) {
  for (auto& u : line_crossings(s, g)) {
    Point p = at_param(s, u);
    if (on_grid_x(p.x, g) && on_grid_y(p.y, g)) return true;
  }
  // Endpoints are covered by the incidence test.
  return false;
}

Cell cell_of(const Point& p, const GridSpec& g) {
  return Cell{floor_q(grid_coord(p.x, g.offset.x, g.t)).get_si(), floor_q(grid_coord(p.y, g.offset.y, g.t)).get_si()};
}

}  // namespace

bool in_general_position(const SegmentScene& scene, const GridSpec& grid) {
  if (grid.t <= 0) throw Error("grid cell size must be positive");
  for (const auto& p : critical_points(scene))
    if (on_grid_x(p.x, grid) || on_grid_y(p.y, grid)) return false;
  for (const auto& s : scene.segments)
    if (through_grid_vertex(s, grid)) return false;
  return true;
}

GridSpec general_position(const SegmentScene& scene, const GridSpec& grid) {
  if (in_general_position(scene, grid)) return grid;
  auto pts = critical_points(scene);
  std::set<Rational> rx, ry;
  for (const auto& p : pts) {
    rx.insert(residue(p.x, grid.offset.x, grid.t));
    ry.insert(residue(p.y, grid.offset.y, grid.t));
  }
  auto candidates = [&](const std::set<Rational>& bad, long long denom) {
    std::vector<Rational> out;
    for (long long i = 0; i < denom; ++i) {
      Rational r(static_cast<long>(i), static_cast<unsigned long>(denom));
      r.canonicalize();
      if (!bad.count(r)) out.push_back(r);
    }
    return out;
  };
  long long mx = 2 * static_cast<long long>(rx.size()) + 1, my = 2 * static_cast<long long>(ry.size()) + 1;
  for (long long refine = 1;; ++refine) {
    auto cx = candidates(rx, mx * refine);
    auto cy = candidates(ry, my * refine);
    for (const auto& a : cx)
      for (const auto& b : cy) {
        GridSpec g{grid.t, Point{grid.offset.x + a * grid.t, grid.offset.y + b * grid.t}};
        bool ok = true;
        for (const auto& s : scene.segments)
          if (through_grid_vertex(s, g)) {
            ok = false;
            break;
          }
        if (ok) return g;
      }
  }
}

bool hits(const SegmentScene& scene, const GridSpec& grid) {
  for (const auto& s : scene.segments) {
    auto meets = [&](const Rational& a, const Rational& b, const Rational& o) {
      Rational lo = std::min(a, b), hi = std::max(a, b);
      return ceil_q(grid_coord(lo, o, grid.t)) <= floor_q(grid_coord(hi, o, grid.t));
    };
    if (!meets(s.p.x, s.q.x, grid.offset.x) && !meets(s.p.y, s.q.y, grid.offset.y)) return false;
  }
  return true;
}

std::vector<ClippedObject> clip(const SegmentScene& scene, const GridSpec& grid, Cell cell) {
  Rational xlo = grid.offset.x + Rational(static_cast<long>(cell.i)) * grid.t, xhi = xlo + grid.t;
  Rational ylo = grid.offset.y + Rational(static_cast<long>(cell.j)) * grid.t, yhi = ylo + grid.t;
  std::vector<ClippedObject> out;
  for (size_t k = 0; k < scene.segments.size(); ++k) {
    const auto& s = scene.segments[k];
    Rational lo = 0, hi = 1;
    bool empty = false;
    auto slab = [&](const Rational& a, const Rational& b, const Rational& mn, const Rational& mx) {
      if (a == b) {
        if (a < mn || a > mx) empty = true;
        return;
      }
      Rational u0 = (mn - a) / (b - a), u1 = (mx - a) / (b - a);
      if (u0 > u1) std::swap(u0, u1);
      lo = std::max(lo, u0);
      hi = std::min(hi, u1);
    };
    slab(s.p.x, s.q.x, xlo, xhi);
    slab(s.p.y, s.q.y, ylo, yhi);
    if (empty || !(lo < hi)) continue;
    out.push_back(ClippedObject{at_param(s, lo), at_param(s, hi), static_cast<int>(k)});
  }
  return out;
}

char side_letter(CellSide s) {
  switch (s) {
    case CellSide::left: return 'L';
    case CellSide::bottom: return 'B';
    case CellSide::right: return 'R';
    case CellSide::top: return 'T';
    default: return '-';
  }
}

namespace {

struct Contact {
  Rational param;
  CellSide side = CellSide::none;
};

std::optional<Contact> contact(const Point& p, const GridSpec& g, Cell cell) {
  Rational s = g.t;
  Rational xlo = g.offset.x + Rational(static_cast<long>(cell.i)) * s, xhi = xlo + s;
  Rational ylo = g.offset.y + Rational(static_cast<long>(cell.j)) * s, yhi = ylo + s;
  if (p.x == xlo && p.y >= ylo && p.y <= yhi) return Contact{yhi - p.y, CellSide::left};
  if (p.y == ylo && p.x >= xlo && p.x <= xhi) return Contact{s + (p.x - xlo), CellSide::bottom};
  if (p.x == xhi && p.y >= ylo && p.y <= yhi) return Contact{2 * s + (p.y - ylo), CellSide::right};
  if (p.y == yhi && p.x >= xlo && p.x <= xhi) return Contact{3 * s + (xhi - p.x), CellSide::top};
  return std::nullopt;
}

}  // namespace

Rational boundary_parameter(const Point& p, const GridSpec& grid, Cell cell) {
  auto c = contact(p, grid, cell);
  if (!c) throw Error("point is not on the cell boundary");
  return c->param;
}

CircularOrder circular_order(const std::vector<ClippedObject>& clipped, const GridSpec& grid, Cell cell) {
  int n = static_cast<int>(clipped.size());
  std::vector<std::optional<Contact>> first(n);
  std::vector<CellSide> root(n, CellSide::none);
  for (int k = 0; k < n; ++k) {
    for (const auto& p : {clipped[k].p, clipped[k].q}) {
      auto c = contact(p, grid, cell);
      if (c && (!first[k] || c->param < first[k]->param)) first[k] = c;
    }
    if (first[k]) root[k] = first[k]->side;
  }
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (first[a].has_value() != first[b].has_value()) return first[a].has_value();
    if (first[a] && first[a]->param != first[b]->param) return first[a]->param < first[b]->param;
    return clipped[a].origin < clipped[b].origin;
  });
  return CircularOrder{VertexOrder(std::move(perm)), std::move(root)};
}

Splitting gamma_splitting(const SegmentScene& scene, const GridSpec& grid) {
  if (!in_general_position(scene, grid)) throw Error("grid is not in general position for the scene");
  if (!hits(scene, grid)) throw Error("grid does not hit every segment");
  Splitting h;
  int m = static_cast<int>(scene.segments.size());
  h.pieces.resize(m);
  h.crossings.resize(m);
  std::vector<std::vector<Rational>> cuts(m);
  for (int k = 0; k < m; ++k) {
    const auto& s = scene.segments[k];
    cuts[k] = line_crossings(s, grid);
    Rational prev = 0;
    for (size_t c = 0; c <= cuts[k].size(); ++c) {
      Rational next = c < cuts[k].size() ? cuts[k][c] : Rational(1);
      int v = h.graph.add_vertex(s.id + ":s" + std::to_string(c + 1));
      h.role.push_back(Splitting::Role::s);
      h.origin.push_back(k);
      h.cell.push_back(cell_of(at_param(s, (prev + next) / 2), grid));
      h.point.push_back(at_param(s, (prev + next) / 2));
      h.pieces[k].push_back(v);
      if (c < cuts[k].size()) {
        int d = h.graph.add_vertex(s.id + ":d" + std::to_string(c + 1));
        h.role.push_back(Splitting::Role::d);
        h.origin.push_back(k);
        h.cell.push_back(Cell{});
        h.point.push_back(at_param(s, next));
        h.crossings[k].push_back(d);
        h.graph.add_edge(v, d);
      }
      if (c > 0) h.graph.add_edge(h.crossings[k][c - 1], v);
      prev = next;
    }
  }
  auto piece_at = [&](int k, const Point& p) {
    Rational u = param_on(scene.segments[k], p);
    auto it = std::lower_bound(cuts[k].begin(), cuts[k].end(), u);
    return h.pieces[k][it - cuts[k].begin()];
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto& sa = scene.segments[a];
      const auto& sb = scene.segments[b];
      auto common = segment_intersection(sa.p, sa.q, sb.p, sb.q);
      if (common.size() == 1) {
        h.graph.add_edge(piece_at(a, common[0]), piece_at(b, common[0]));
      } else if (common.size() == 2) {
        // Overlap: one witness point per stretch between grid crossings.
        Rational u0 = param_on(sa, common[0]), u1 = param_on(sa, common[1]);
        if (u0 > u1) std::swap(u0, u1);
        std::vector<Rational> stops{u0};
        for (auto& c : cuts[a])
          if (c > u0 && c < u1) stops.push_back(c);
        stops.push_back(u1);
        for (size_t i = 0; i + 1 < stops.size(); ++i) {
          Point mid = at_param(sa, (stops[i] + stops[i + 1]) / 2);
          h.graph.add_edge(piece_at(a, mid), piece_at(b, mid));
        }
      }
    }
  return h;
}

Graph contract_splitting(const Splitting& h, const SegmentScene& scene) {
  std::vector<std::string> labels;
  for (const auto& s : scene.segments) labels.push_back(s.id);
  Graph g(std::move(labels));
  for (auto [u, v] : h.graph.edges())
    if (h.origin[u] != h.origin[v]) g.add_edge(h.origin[u], h.origin[v]);
  return g;
}

std::vector<RootedCrossing> rooted_crossing_violations(const SegmentScene& scene, const GridSpec& grid, size_t limit) {
  std::vector<RootedCrossing> out;
  if (scene.segments.empty()) return out;
  Cell lo = cell_of(scene.segments[0].p, grid), hi = lo;
  for (const auto& s : scene.segments)
    for (const auto& p : {s.p, s.q}) {
      Cell c = cell_of(p, grid);
      lo = Cell{std::min(lo.i, c.i), std::min(lo.j, c.j)};
      hi = Cell{std::max(hi.i, c.i), std::max(hi.j, c.j)};
    }
  for (long long i = lo.i; i <= hi.i; ++i)
    for (long long j = lo.j; j <= hi.j; ++j) {
      Cell cell{i, j};
      auto objs = clip(scene, grid, cell);
      auto circ = circular_order(objs, grid, cell);
      std::vector<int> left, bottom;
      for (int v : circ.order.perm()) {
        if (circ.root[v] == CellSide::left) left.push_back(v);
        if (circ.root[v] == CellSide::bottom) bottom.push_back(v);
      }
      auto meet = [&](int x, int y) { return segments_intersect(objs[x].p, objs[x].q, objs[y].p, objs[y].q); };
      for (size_t a = 0; a < left.size(); ++a)
        for (size_t b = a + 1; b < left.size(); ++b)
          for (size_t c = 0; c < bottom.size(); ++c)
            for (size_t d = c + 1; d < bottom.size(); ++d)
              if (meet(left[a], bottom[c]) && meet(left[b], bottom[d]) && !meet(left[b], bottom[c])) {
                out.push_back(RootedCrossing{cell, {objs[left[a]].origin, objs[left[b]].origin,
                                                    objs[bottom[c]].origin, objs[bottom[d]].origin}});
                if (limit && out.size() >= limit) return out;
              }
    }
  return out;
}

}  // namespace tww
