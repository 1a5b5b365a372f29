#include "tww/planar.hpp"

#include "tww/budget.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tww {

namespace {

int rot_index(const PlanarEmbedding& emb, int v, int u) {
  const auto& r = emb.rotation[v];
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) throw Error("rotation of " + emb.graph.label(v) + " misses " + emb.graph.label(u));
  return static_cast<int>(it - r.begin());
}

// Next dart of the face to the left of u -> v.
int turn(const PlanarEmbedding& emb, int u, int v) {
  const auto& r = emb.rotation[v];
  int i = rot_index(emb, v, u);
  return r[(i + static_cast<int>(r.size()) - 1) % static_cast<int>(r.size())];
}

}  // namespace

int face_count(const PlanarEmbedding& emb) {
  std::map<std::pair<int, int>, bool> seen;
  int faces = 0;
  for (int v = 0; v < emb.graph.size(); ++v)
    for (int u : emb.rotation[v]) {
      if (seen[{v, u}]) continue;
      ++faces;
      int a = v, b = u;
      while (!seen[{a, b}]) {
        seen[{a, b}] = true;
        int c = turn(emb, a, b);
        a = b;
        b = c;
      }
    }
  return faces;
}

void validate_embedding(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph;
  int n = g.size();
  if (static_cast<int>(emb.rotation.size()) != n) throw Error("rotation system size mismatch");
  for (int v = 0; v < n; ++v) {
    std::vector<int> r = emb.rotation[v];
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end() || r != bits_of(g.neighbors(v)))
      throw Error("rotation of " + g.label(v) + " does not list its neighbours");
  }
  // Euler's formula per component with edges.
  std::vector<int> comp(n, -1);
  int comps = 0, used = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0 || g.degree(s) == 0) continue;
    std::vector<int> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++used;
      for_each_bit(g.neighbors(x), [&](int y) {
        if (comp[y] < 0) {
          comp[y] = comps;
          stack.push_back(y);
        }
      });
    }
    ++comps;
  }
  if (used - g.edge_count() + face_count(emb) != 2 * comps) throw Error("rotation system is not planar");
  std::vector<int> owner(n, -1);
  for (size_t c = 0; c < emb.facial_cycles.size(); ++c) {
    const auto& cyc = emb.facial_cycles[c];
    int len = static_cast<int>(cyc.size());
    if (len < 3) throw Error("facial cycle needs at least three vertices");
    for (int v : cyc) {
      if (v < 0 || v >= n) throw Error("facial cycle vertex out of range");
      if (owner[v] >= 0) throw Error("facial cycles are not vertex-disjoint");
      owner[v] = static_cast<int>(c);
    }
    for (int i = 0; i < len; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % len], c2 = cyc[(i + 2) % len];
      if (!g.adjacent(a, b) || turn(emb, a, b) != c2) throw Error("facial cycle is not a counter-clockwise face");
    }
  }
}

int LayeredOrder::layers() const {
  int m = -1;
  for (int l : layer) m = std::max(m, l);
  return m + 1;
}

LayeredOrder planar_facial_order(const PlanarEmbedding& emb, int root, bool facial_vertices) {
  validate_embedding(emb);
  int n = emb.graph.size();
  if (root < 0 || root >= n) throw Error("root out of range");
  LayeredOrder lo;
  lo.graph = emb.graph;
  lo.cycles = emb.facial_cycles;
  int cycles = static_cast<int>(emb.facial_cycles.size());
  std::vector<int> cyc_of(n, -1), cyc_pos(n, -1), face_vertex(cycles, -1);
  for (int c = 0; c < cycles; ++c)
    for (size_t i = 0; i < emb.facial_cycles[c].size(); ++i) {
      cyc_of[emb.facial_cycles[c][i]] = c;
      cyc_pos[emb.facial_cycles[c][i]] = static_cast<int>(i);
    }
  if (facial_vertices)
    for (int c = 0; c < cycles; ++c) {
      std::string name = "face" + std::to_string(c + 1);
      while (lo.graph.find(name)) name += "_";
      face_vertex[c] = lo.graph.add_vertex(name);
      for (int v : emb.facial_cycles[c]) lo.graph.add_edge(face_vertex[c], v);
    }
  int total = lo.graph.size();
  enum class State { white, gray, black, reserved };
  std::vector<State> state(total, State::white);
  std::vector<int> owner(total, -1);
  lo.layer.assign(total, -1);
  lo.parent.assign(total, -1);
  lo.explored.assign(total, false);
  std::vector<int> perm;
  std::deque<int> queue;

  auto discover = [&](int u, int parent, bool explored) {
    state[u] = State::gray;
    lo.parent[u] = parent;
    lo.explored[u] = explored;
    lo.layer[u] = parent < 0 ? 0 : lo.layer[parent] + (explored ? 1 : 0);
    perm.push_back(u);
    queue.push_back(u);
  };
  auto reserve = [&](int u) {
    int c = cyc_of[u];
    if (c < 0) return;
    for (int z : emb.facial_cycles[c])
      if (z != u) {
        state[z] = State::reserved;
        owner[z] = u;
      }
    if (face_vertex[c] >= 0) {
      state[face_vertex[c]] = State::reserved;
      owner[face_vertex[c]] = u;
    }
  };
  auto succ = [&](int v) {
    const auto& cyc = emb.facial_cycles[cyc_of[v]];
    return cyc[(cyc_pos[v] + 1) % cyc.size()];
  };

  discover(root, -1, false);
  reserve(root);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v < n) {
      const auto& rot = emb.rotation[v];
      int deg = static_cast<int>(rot.size());
      int start = lo.parent[v] >= 0 && lo.parent[v] < n ? rot_index(emb, v, lo.parent[v]) : 0;
      for (int i = 0; i < deg; ++i) {
        int u = rot[(start + i) % deg];
        if (state[u] == State::white) {
          discover(u, v, true);
          reserve(u);
        } else if (state[u] == State::reserved && owner[u] == v && cyc_of[v] >= 0 && u == succ(v)) {
          const auto& cyc = emb.facial_cycles[cyc_of[v]];
          int len = static_cast<int>(cyc.size());
          for (int k = 1; k < len; ++k) {
            int z = cyc[(cyc_pos[v] + k) % len];
            int pred = cyc[(cyc_pos[v] + k - 1) % len];
            discover(z, pred, k == 1);
          }
          if (face_vertex[cyc_of[v]] >= 0) discover(face_vertex[cyc_of[v]], v, true);
        }
      }
    }
    state[v] = State::black;
  }
  if (static_cast<int>(perm.size()) != total) throw Error("graph is not connected");
  lo.order = VertexOrder(std::move(perm));
  return lo;
}

LayerReport verify_layer_lemmas(const LayeredOrder& lo, const Graph& g) {
  LayerReport rep;
  int n = lo.order.size();
  if (g.size() != n) throw Error("graph does not match the layered order");
  auto problem = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.problems.size() < 20) rep.problems.push_back(msg);
  };
  for (int p = 0; p + 1 < n; ++p)
    if (lo.layer[lo.order.at(p)] > lo.layer[lo.order.at(p + 1)])
      problem(rep.layers_sorted, "layer decreases at position " + std::to_string(p + 1));
  for (auto [u, v] : g.edges())
    if (std::abs(lo.layer[u] - lo.layer[v]) >= 3)
      problem(rep.no_long_edges, "edge " + g.label(u) + " " + g.label(v) + " spans three layers");
  for (const auto& cyc : lo.cycles) {
    auto sorted = lo.order.sorted(cyc);
    auto it = std::find(cyc.begin(), cyc.end(), sorted[0]);
    std::vector<int> rotated(it, cyc.end());
    rotated.insert(rotated.end(), cyc.begin(), it);
    if (rotated != sorted) problem(rep.cycles_ccw, "cycle at " + g.label(cyc[0]) + " is not in counter-clockwise order");
  }
  int layers = lo.layers();
  std::vector<std::vector<int>> by_layer(layers);
  for (int p = 0; p < n; ++p) by_layer[lo.layer[lo.order.at(p)]].push_back(lo.order.at(p));
  for (int k = 1; k < layers; ++k)
    for (int i = 0; i < k; ++i) {
      int last = -1;
      for (int z : by_layer[k]) {
        int a = z;
        while (lo.layer[a] > i) a = lo.parent[a];
        int pos = lo.order.position(a);
        if (pos < last) {
          problem(rep.subtree_intervals, "subtrees interleave on layer " + std::to_string(k) + " below layer " +
                                             std::to_string(i));
          break;
        }
        last = pos;
      }
    }
  return rep;
}

PlanarEmbedding grid_embedding(int rows, int cols, int stride, int ox, int oy) {
  if (rows < 1 || cols < 1) throw Error("grid needs positive dimensions");
  if (stride < 2) throw Error("face stride must be at least 2");
  PlanarEmbedding emb;
  std::vector<std::string> labels;
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) labels.push_back("v" + std::to_string(x) + "_" + std::to_string(y));
  emb.graph = Graph(std::move(labels));
  auto id = [&](int x, int y) { return y * cols + x; };
  emb.rotation.resize(rows * cols);
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) {
      auto& r = emb.rotation[id(x, y)];
      if (x + 1 < cols) r.push_back(id(x + 1, y));
      if (y + 1 < rows) r.push_back(id(x, y + 1));
      if (x > 0) r.push_back(id(x - 1, y));
      if (y > 0) r.push_back(id(x, y - 1));
      if (x + 1 < cols) emb.graph.add_edge(id(x, y), id(x + 1, y));
      if (y + 1 < rows) emb.graph.add_edge(id(x, y), id(x, y + 1));
    }
  for (int x = ox; x + 1 < cols; x += stride)
    for (int y = oy; y + 1 < rows; y += stride)
      emb.facial_cycles.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)});
  return emb;
}

}  // namespace tww
