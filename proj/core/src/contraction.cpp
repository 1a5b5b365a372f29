#include "tww/contraction.hpp"

#include <algorithm>
#include <unordered_set>

namespace tww {

Trigraph::Trigraph(const Graph& g) : g_(&g), alive_(g.size(), true), alive_count_(g.size()) {
  int n = g.size();
  for (int v = 0; v < n; ++v) {
    Bitset m(n);
    m[v] = true;
    members_.push_back(m);
    black_.push_back(g.neighbors(v));
    red_.emplace_back(n);
    names_.emplace(g.label(v), v);
  }
}

std::vector<int> Trigraph::vertices() const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(alive_.size()); ++c)
    if (alive_[c]) out.push_back(c);
  return out;
}

int Trigraph::max_red_degree() const {
  int d = 0;
  for (int c = 0; c < static_cast<int>(alive_.size()); ++c)
    if (alive_[c]) d = std::max(d, red_degree(c));
  return d;
}

int Trigraph::contract(int u, int v) {
  if (u == v) throw Error("cannot contract a class with itself");
  if (u < 0 || v < 0 || u >= static_cast<int>(alive_.size()) || v >= static_cast<int>(alive_.size()) ||
      !alive_[u] || !alive_[v])
    throw Error("contraction of a missing class");
  names_.erase(class_name(u));
  names_.erase(class_name(v));
  int w = std::min(u, v), gone = std::max(u, v);
  Bitset black = black_[u] & black_[v];
  Bitset touched = black_[u] | black_[v] | red_[u] | red_[v];
  black[u] = black[v] = false;
  touched[u] = touched[v] = false;
  Bitset red = touched - black;
  for (int z = 0; z < static_cast<int>(alive_.size()); ++z) {
    if (!alive_[z] || z == u || z == v) continue;
    black_[z][u] = black_[z][v] = false;
    red_[z][u] = red_[z][v] = false;
    black_[z][w] = black[z];
    red_[z][w] = red[z];
  }
  black_[w] = black;
  red_[w] = red;
  black_[gone].reset();
  red_[gone].reset();
  members_[w] |= members_[gone];
  members_[gone].reset();
  alive_[gone] = false;
  --alive_count_;
  names_.emplace(class_name(w), w);
  return w;
}

std::string Trigraph::class_name(int c) const {
  std::vector<std::string> labels;
  for_each_bit(members_[c], [&](int v) { labels.push_back(g_->label(v)); });
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += '.';
    out += l;
  }
  return out;
}

int Trigraph::class_of_name(const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end()) throw Error("no current class named '" + name + "'");
  return it->second;
}

std::vector<int> Trigraph::partition() const {
  std::vector<int> cls(g_->size(), -1);
  for (int c = 0; c < static_cast<int>(alive_.size()); ++c)
    if (alive_[c]) for_each_bit(members_[c], [&](int v) { cls[v] = c; });
  return cls;
}

int verify_sequence(const Graph& g, const ContractionSequence& s) {
  Trigraph t(g);
  int d = t.max_red_degree();
  for (size_t i = 0; i < s.steps.size(); ++i) {
    const auto& [a, b] = s.steps[i];
    int u, v;
    try {
      u = t.class_of_name(a);
      v = t.class_of_name(b);
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i + 1) + ": " + e.what());
    }
    if (u == v) throw Error("step " + std::to_string(i + 1) + ": merges a class with itself");
    t.contract(u, v);
    d = std::max(d, t.max_red_degree());
  }
  if (t.size() > 1)
    throw Error("sequence ends with " + std::to_string(t.size()) + " vertices instead of one");
  return d;
}

namespace {

struct ExactSearch {
  const Graph& g;
  int d = 0;
  BudgetMeter meter;
  std::unordered_set<std::string> failed;
  std::vector<std::pair<std::string, std::string>> path;

  ExactSearch(const Graph& g_, const Budget& b) : g(g_), meter(b, "exact twin-width") {}

  static std::string key(const Trigraph& t) {
    auto p = t.partition();
    return std::string(p.begin(), p.end());
  }

  bool solve(const Trigraph& t) {
    if (t.size() <= 1) return true;
    meter.tick();
    std::string k = key(t);
    if (failed.count(k)) return false;
    auto vs = t.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) {
        Trigraph next = t;
        std::string a = t.class_name(vs[i]), b = t.class_name(vs[j]);
        next.contract(vs[i], vs[j]);
        if (next.max_red_degree() > d) continue;
        path.emplace_back(a, b);
        if (solve(next)) return true;
        path.pop_back();
      }
    failed.insert(std::move(k));
    return false;
  }
};

}  // namespace

TwinWidthResult exact_twinwidth(const Graph& g, const Budget& budget, int max_vertices) {
  if (g.size() > max_vertices)
    throw Error("exact twin-width is limited to " + std::to_string(max_vertices) + " vertices");
  ExactSearch s(g, budget);
  for (int d = 0;; ++d) {
    s.d = d;
    s.failed.clear();
    s.path.clear();
    if (s.solve(Trigraph(g))) return TwinWidthResult{d, ContractionSequence{s.path}};
  }
}

TwinWidthResult dyadic_contract(const Graph& g, const VertexOrder& ord) {
  if (ord.size() != g.size()) throw Error("order does not cover the graph");
  Trigraph t(g);
  TwinWidthResult out;
  std::vector<int> level = ord.perm();
  while (level.size() > 1) {
    std::vector<int> next;
    for (size_t i = 0; i < level.size(); i += 2) {
      if (i + 1 == level.size()) {
        next.push_back(level[i]);
        continue;
      }
      out.sequence.steps.emplace_back(t.class_name(level[i]), t.class_name(level[i + 1]));
      next.push_back(t.contract(level[i], level[i + 1]));
      out.value = std::max(out.value, t.max_red_degree());
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace tww
