#include "support.hpp"
#include "tww/contraction.hpp"
#include "tww/extraction.hpp"
#include "tww/generators.hpp"
#include "tww/geometry.hpp"
#include "tww/io.hpp"
#include "tww/orders.hpp"
#include "tww/planar.hpp"
#include "tww/structures.hpp"
#include "tww/winwin.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

using namespace tww;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome seven_vertex() {
  Graph g = parse_graph(read_file(std::string(TWW_DATA_DIR) + "/seven.graph"));
  ContractionSequence s = parse_sequence(read_file(std::string(TWW_DATA_DIR) + "/seven.seq"));
  int d = verify_sequence(g, s);
  auto t0 = std::chrono::steady_clock::now();
  int tww = exact_twinwidth(g).value;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << "steps=" << s.steps.size() << " d=" << d << " tww=" << tww << " exact " << secs << "s";
  return {s.steps.size() == 6 && d == 2 && tww == 2 && secs < 60, os.str()};
}

Outcome grid_rank_oracle() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 10);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    Matrix m = testing::random_matrix(dim(rng), dim(rng), dens(rng), rng);
    if (grid_rank(m) == testing::naive_grid_rank(m)) ++agree;
  }
  return {agree == 200, std::to_string(agree) + "/200 agree"};
}

Outcome plant_and_find() {
  std::mt19937_64 rng(77);
  int found = 0, total = 0;
  for (auto s : kAllPatternKinds)
    for (int k = 2; k <= 3; ++k)
      for (int rep = 0; rep < 5; ++rep) {
        ++total;
        Matrix p = universal_pattern({k, s});
        int n = k * k;
        Matrix m = testing::random_matrix(20, 20, 0.5, rng);
        // Columns among the first ten, rows among the last ten.
        std::vector<int> idx(10);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> cols(idx.begin(), idx.begin() + n);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> rows(idx.begin(), idx.begin() + n);
        std::sort(cols.begin(), cols.end());
        std::sort(rows.begin(), rows.end());
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) m.set(10 + rows[a], cols[b], p.get(a, b));
        auto occ = find_universal_pattern(m, k, Side::above, Budget::nodes(50'000'000), {s});
        if (occ && occ->pattern.s == s && verify_occurrence(m, *occ)) ++found;
      }
  int zero_wrong = 0;
  for (int k = 1; k <= 3; ++k)
    for (auto s : kAllPatternKinds) {
      Matrix p = universal_pattern({k, s});
      bool vacuous = true;
      for (int a = 0; a < p.rows(); ++a)
        for (int b = 0; b < p.cols(); ++b) vacuous = vacuous && !p.get(a, b);
      Matrix z(20, 20);
      for (Side side : {Side::above, Side::below}) {
        bool hit = find_universal_pattern(z, k, side, Budget::nodes(50'000'000), {s}).has_value();
        if (hit != vacuous) ++zero_wrong;
      }
    }
  std::ostringstream os;
  os << found << "/" << total << " found, " << zero_wrong << " wrong on all-zero";
  return {found == 60 && total == 60 && zero_wrong == 0, os.str()};
}

Outcome order_claim() {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> size(2, 50);
  size_t bad = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto vis = terrain_visibility(gen_random_terrain(size(rng), seed));
    bad += order_claim_violations(vis.graph, vis.order).size();
  }
  Graph c4 = Graph::numbered(4);
  c4.add_edge(0, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 1);
  c4.add_edge(1, 0);
  size_t adversarial = order_claim_violations(c4, VertexOrder::identity(4)).size();
  std::ostringstream os;
  os << bad << " violations on terrains, " << adversarial << " on the adversarial order";
  return {bad == 0 && adversarial >= 1, os.str()};
}

Outcome double_x() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(3, 14);
  size_t bad = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto vis = polygon_visibility(gen_random_polygon(size(rng), seed));
    bad += double_x_violations(vis.graph, vis.order).size();
  }
  return {bad == 0, std::to_string(bad) + " violations on 50 polygons"};
}

Graph definitional_bn(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  for (int j = 1; j <= n; ++j) labels.push_back("h" + std::to_string(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::string p = "v" + std::to_string(i) + ":h" + std::to_string(j);
      labels.push_back(p + ":h");
      labels.push_back(p + ":v");
    }
  Graph g(labels);
  auto edge = [&](const std::string& a, const std::string& b) { g.add_edge(g.index_of(a), g.index_of(b)); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::string v = "v" + std::to_string(i), h = "h" + std::to_string(j), p = v + ":" + h;
      edge(v, h);
      edge(v, p + ":h");
      edge(p + ":h", p + ":v");
      edge(p + ":v", h);
    }
  return g;
}

bool same_labelled(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (int u = 0; u < a.size(); ++u) {
    auto bu = b.find(a.label(u));
    if (!bu) return false;
    for (int v = 0; v < a.size(); ++v) {
      auto bv = b.find(a.label(v));
      if (!bv || a.adjacent(u, v) != b.adjacent(*bu, *bv)) return false;
    }
  }
  return true;
}

Outcome bn_family() {
  std::ostringstream os;
  bool ok = true;
  BipPattern h4{BipPattern::Kind::half_graph, 4, 0};
  for (int n = 1; n <= 5; ++n) {
    Graph g = intersection_graph(gen_bn_segments(n));
    bool same = same_labelled(g, definitional_bn(n));
    bool no_h4 = !find_semi_induced(g, h4).has_value();
    ok = ok && same && no_h4;
    os << "n=" << n << (same ? " same" : " differs") << (no_h4 ? " noH4" : " H4") << "; ";
  }
  return {ok, os.str()};
}

Outcome interval_extraction() {
  IntervalModel model = gen_staircase_intervals(2);
  Graph g = interval_graph(model);
  auto in = interval_division_prepare(g, model, 2);
  if (!in) return {false, "prepare failed"};
  auto res = interval_transversal_extract(g, model, *in);
  bool ok = res.witness.kind.kind == BipPattern::Kind::transversal_pair && res.witness.kind.t == 2 &&
            semi_induced_check(g, res.witness.columns, res.witness.kind);
  return {ok, "T_" + std::to_string(res.witness.kind.t) + " ell=" + std::to_string(res.witness.kind.ell)};
}

Outcome planar_order() {
  int passed = 0, runs = 0;
  for (int r = 3; r <= 7; ++r)
    for (int c : {4, 7}) {
      ++runs;
      auto emb = grid_embedding(r, c, 2, r % 2, c % 2);
      auto lo = planar_facial_order(emb, (r / 2) * c + c / 2);
      if (verify_layer_lemmas(lo, emb.graph).ok()) ++passed;
    }
  return {passed == runs && runs == 10, std::to_string(passed) + "/" + std::to_string(runs) + " embeddings"};
}

Outcome segment_splitting() {
  int round_trip = 0, five = 0, hitting = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto scene = gen_random_axis_segments(14, Rational(2), seed);
    GridSpec g = general_position(scene, GridSpec{});
    if (hits(scene, g)) ++hitting;
    Splitting h = gamma_splitting(scene, g);
    if (contract_splitting(h, scene) == intersection_graph(scene)) ++round_trip;
    if (off_diagonal_blocks(segment_global_order(scene, g)).empty()) ++five;
  }
  std::ostringstream os;
  os << round_trip << "/50 round trips, " << five << "/50 five-diagonal, " << hitting << "/50 hitting";
  return {round_trip == 50 && five == 50 && hitting == 50, os.str()};
}

Outcome winwin_agreement() {
  int agree = 0, total = 0, pattern = 0;
  std::mt19937_64 rng(10);
  auto check = [&](const ClassInstance& inst, Param p, int k) {
    ++total;
    Decision d = decide(inst, p, k);
    int truth = solve(p, inst.graph).value;
    if (d.answer == Decision::Answer::inconclusive) return;
    if ((d.answer == Decision::Answer::yes) != (truth >= k)) return;
    if (d.answer == Decision::Answer::no && d.value != truth) return;
    if (d.route == "pattern") ++pattern;
    ++agree;
  };
  std::uniform_int_distribution<int> pn(3, 18), pk(1, 5), tn(2, 30), tk(1, 4);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) check(make_instance(gen_random_polygon(pn(rng), seed)), Param::alpha, pk(rng));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) check(make_instance(gen_random_terrain(tn(rng), seed)), Param::lambda, tk(rng));
  std::ostringstream os;
  os << agree << "/" << total << " agree (" << pattern << " by pattern)";
  return {agree == 200 && total == 200, os.str()};
}

Outcome rdp_order() {
  int clean = 0, minimal = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    TreeModel tm = minimize_tree_model(gen_random_tree_model(30, 20, seed));
    if (verify_rdp_order(tm, rdp_lex_dfs_order(tm)).ok()) ++clean;
    auto entries = minimality_check(tm);
    if (std::all_of(entries.begin(), entries.end(), [](const MinimalityEntry& e) { return e.ok(); })) ++minimal;
  }
  std::ostringstream os;
  os << clean << "/50 orders clean, " << minimal << "/50 with witnesses";
  return {clean == 50 && minimal == 50, os.str()};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"seven-vertex sequence and exact twin-width", seven_vertex},
      {"grid rank vs naive enumerator", grid_rank_oracle},
      {"pattern plant and find", plant_and_find},
      {"terrain order claim", order_claim},
      {"polygon double-X", double_x},
      {"B_n family", bn_family},
      {"interval transversal extraction", interval_extraction},
      {"planar layer lemmas", planar_order},
      {"segment splitting", segment_splitting},
      {"win-win agreement", winwin_agreement},
      {"rooted directed path orders", rdp_order},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
