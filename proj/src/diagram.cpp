#include "fdiag/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fdiag {

std::vector<int> diagram_template::black_positions() const {
  std::vector<int> out;
  for (int i = 0; i < (int)c.size(); ++i)
    if (c[i].color == vcolor::black) out.push_back(i);
  return out;
}

std::vector<int> diagram_template::gray_positions() const {
  std::vector<int> out;
  for (int i = 0; i < (int)c.size(); ++i)
    if (c[i].color == vcolor::gray) out.push_back(i);
  return out;
}

std::vector<int> diagram_template::white_positions() const {
  std::vector<int> out;
  for (int i = 0; i < (int)c.size(); ++i)
    if (c[i].color == vcolor::white) out.push_back(i);
  return out;
}

long long multiplicity_vector::weighted_sum_left() const {
  long long s = 0;
  for (auto& [i, n] : alpha) s += i * n;
  for (auto& [i, n] : beta) s += i * n;
  return s;
}

long long multiplicity_vector::weighted_sum_right() const {
  long long s = 0;
  for (auto& [i, n] : alpha_tilde) s += i * n;
  for (auto& [i, n] : beta_tilde) s += i * n;
  return s;
}

std::string multiplicity_vector::compact(const char* which) const {
  const std::vector<std::pair<long long, long long>>* m = nullptr;
  if (std::string(which) == "alpha") m = &alpha;
  else if (std::string(which) == "beta") m = &beta;
  else if (std::string(which) == "alpha_tilde") m = &alpha_tilde;
  else m = &beta_tilde;
  if (m->empty()) return "0";
  long long top = m->back().first;
  std::string out;
  for (long long i = 1; i <= top; ++i) {
    long long n = 0;
    for (auto& [j, c] : *m)
      if (j == i) n = c;
    out += std::to_string(n);
  }
  return out;
}

namespace {

// Shared per-vertex edge bookkeeping: (delta is +w for incoming, -w for outgoing).
struct edge_scan {
  // one entry per vertex id; ids: 0..|C|-1 the C row, then L labels, then R labels
  std::vector<long long> div;
  std::vector<int> deg;
  int n_c, n_l, n_r;

  explicit edge_scan(const floor_diagram& d)
      : div(d.t.c.size() + d.t.l_divs.size() + d.t.r_divs.size(), 0),
        deg(d.t.c.size() + d.t.l_divs.size() + d.t.r_divs.size(), 0),
        n_c((int)d.t.c.size()), n_l((int)d.t.l_divs.size()), n_r((int)d.t.r_divs.size()) {
    const auto& t = d.t;
    // L -> black
    for (int i = 0; i < n_l; ++i) {
      add(n_c + i, -d.l_weights[i]);
      add(t.l_attach[i], d.l_weights[i]);
    }
    // black -> R
    for (int i = 0; i < n_r; ++i) {
      add(n_c + n_l + i, d.r_weights[i]);
      add(t.r_attach[i], -d.r_weights[i]);
    }
    // C-white edges: direction matches the divergence sign
    auto whites = t.white_positions();
    for (int wi = 0; wi < (int)whites.size(); ++wi) {
      int wp = whites[wi];
      int bp = t.whitec_attach[wi];
      long long w = d.whitec_weights[wi];
      if (t.c[wp].div < 0) {  // white -> black
        add(wp, -w);
        add(bp, w);
      } else {  // black -> white
        add(wp, w);
        add(bp, -w);
      }
    }
    // gray edges: src black -> gray -> tgt black
    auto grays = t.gray_positions();
    for (int gi = 0; gi < (int)grays.size(); ++gi) {
      int gp = grays[gi];
      auto [src, tgt] = t.gray_edges[gi];
      add(gp, d.gray_weights[gi].first);
      add(src, -d.gray_weights[gi].first);
      add(gp, -d.gray_weights[gi].second);
      add(tgt, d.gray_weights[gi].second);
    }
  }

  void add(int v, long long delta) {
    div[v] += delta;
    deg[v] += 1;
  }
};

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

long long divergence(const floor_diagram& d, const std::string& vertex_id) {
  edge_scan scan(d);
  if (vertex_id.size() < 2) fail(errc::invalid_query, "unknown vertex id: " + vertex_id);
  char kind = vertex_id[0];
  int idx = 0;
  try {
    idx = std::stoi(vertex_id.substr(1));
  } catch (...) {
    fail(errc::invalid_query, "unknown vertex id: " + vertex_id);
  }
  if (kind == 'c' && idx >= 0 && idx < scan.n_c) return scan.div[idx];
  if (kind == 'l' && idx >= 0 && idx < scan.n_l) return scan.div[scan.n_c + idx];
  if (kind == 'r' && idx >= 0 && idx < scan.n_r) return scan.div[scan.n_c + scan.n_l + idx];
  fail(errc::invalid_query, "unknown vertex id: " + vertex_id);
}

validation_report validate(const floor_diagram& d, long long k) {
  const auto& t = d.t;
  auto bad = [](const std::string& s) { return validation_report{false, s}; };

  auto blacks = t.black_positions();
  auto grays = t.gray_positions();
  auto whites = t.white_positions();
  if (blacks.empty()) return bad("no black vertex");
  if (t.whitec_attach.size() != whites.size()) return bad("C-white attachment count mismatch");
  if (t.gray_edges.size() != grays.size()) return bad("gray edge count mismatch");
  if (d.whitec_weights.size() != whites.size() || d.gray_weights.size() != grays.size() ||
      d.l_weights.size() != t.l_divs.size() || d.r_weights.size() != t.r_divs.size() ||
      t.l_attach.size() != t.l_divs.size() || t.r_attach.size() != t.r_divs.size())
    return bad("weight/attachment arity mismatch");

  auto is_black = [&](int p) { return p >= 0 && p < (int)t.c.size() && t.c[p].color == vcolor::black; };

  // positive weights
  for (auto w : d.l_weights)
    if (w < 1) return bad("nonpositive edge weight");
  for (auto w : d.r_weights)
    if (w < 1) return bad("nonpositive edge weight");
  for (auto w : d.whitec_weights)
    if (w < 1) return bad("nonpositive edge weight");
  for (auto [wi, wo] : d.gray_weights)
    if (wi < 1 || wo < 1) return bad("nonpositive edge weight");

  // label divergences: L negative, R positive, weight = |div|
  for (std::size_t i = 0; i < t.l_divs.size(); ++i) {
    if (t.l_divs[i] >= 0) return bad("L label with nonnegative divergence");
    if (!is_black(t.l_attach[i])) return bad("L label not attached to a black vertex");
    if (d.l_weights[i] != -t.l_divs[i]) return bad("L edge weight differs from |divergence|");
  }
  for (std::size_t i = 0; i < t.r_divs.size(); ++i) {
    if (t.r_divs[i] <= 0) return bad("R label with nonpositive divergence");
    if (!is_black(t.r_attach[i])) return bad("R label not attached to a black vertex");
    if (d.r_weights[i] != t.r_divs[i]) return bad("R edge weight differs from divergence");
  }

  // C-whites: nonzero divergence, edge to a black on the correct side
  for (std::size_t wi = 0; wi < whites.size(); ++wi) {
    int wp = whites[wi];
    long long v = t.c[wp].div;
    int bp = t.whitec_attach[wi];
    if (v == 0) return bad("C-white with zero divergence");
    if (!is_black(bp)) return bad("C-white not attached to a black vertex");
    if (v < 0 && !(wp < bp)) return bad("negative C-white not strictly before its black vertex");
    if (v > 0 && !(bp < wp)) return bad("positive C-white not strictly after its black vertex");
    if (d.whitec_weights[wi] != std::llabs(v)) return bad("C-white edge weight differs from |divergence|");
  }

  // grays: one in-edge from an earlier black, one out-edge to a later black
  for (std::size_t gi = 0; gi < grays.size(); ++gi) {
    int gp = grays[gi];
    auto [src, tgt] = t.gray_edges[gi];
    if (!is_black(src) || !is_black(tgt)) return bad("gray edge endpoint is not a black vertex");
    if (!(src < gp && gp < tgt)) return bad("gray vertex not strictly between its black endpoints");
    if (d.gray_weights[gi].first != d.gray_weights[gi].second) return bad("gray divergence != 0");
  }

  // connectivity: whites are leaves, so the diagram is connected iff the
  // blacks form one component through the gray vertices
  std::vector<int> parent((int)t.c.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [src, tgt] : t.gray_edges) parent[find_root(parent, src)] = find_root(parent, tgt);
  int root = find_root(parent, blacks[0]);
  for (int b : blacks)
    if (find_root(parent, b) != root) return bad("underlying graph disconnected");

  // divergence conditions
  edge_scan scan(d);
  for (int b : blacks)
    if (scan.div[b] != k) return bad("black divergence != k");
  for (int g : grays)
    if (scan.div[g] != 0) return bad("gray divergence != 0");
  for (int g : grays)
    if (scan.deg[g] != 2) return bad("gray vertex degree != 2");
  for (int w : whites)
    if (scan.deg[w] != 1) return bad("white vertex degree != 1");

  // genus via both formulas (they agree identically in this representation,
  // but the cross-check is cheap and guards the encoding)
  long long V = (long long)t.c.size() + (long long)t.l_divs.size() + (long long)t.r_divs.size();
  long long E = 2 * (long long)grays.size() + (long long)whites.size() + (long long)t.l_divs.size() +
                (long long)t.r_divs.size();
  long long genus_ve = 1 - V + E;
  long long genus_bg = 1 - (long long)blacks.size() + (long long)grays.size();
  if (genus_ve != genus_bg) return bad("genus formulas disagree");
  if (genus_bg < 0) return bad("negative genus");

  return {};
}

Int multiplicity(const floor_diagram& d) {
  Int mu = 1;
  for (auto [wi, wo] : d.gray_weights) mu *= Int(wi) * Int(wo);
  for (auto w : d.whitec_weights) mu *= Int(w);
  return mu;
}

multiplicity_vector multiplicity_vector_of(const std::vector<long long>& x,
                                           const std::vector<long long>& y) {
  std::map<long long, long long> a, b, at, bt;
  for (auto v : x) (v < 0 ? a[-v] : at[v]) += 1;
  for (auto v : y) (v < 0 ? b[-v] : bt[v]) += 1;
  multiplicity_vector mv;
  mv.alpha.assign(a.begin(), a.end());
  mv.beta.assign(b.begin(), b.end());
  mv.alpha_tilde.assign(at.begin(), at.end());
  mv.beta_tilde.assign(bt.begin(), bt.end());
  return mv;
}

derived_data_result derived_data(const floor_diagram& d) {
  derived_data_result r;
  for (auto v : d.t.l_divs) r.x.push_back(v);
  for (auto v : d.t.r_divs) r.x.push_back(v);
  for (int p : d.t.white_positions()) r.y.push_back(d.t.c[p].div);
  r.mv = multiplicity_vector_of(r.x, r.y);
  r.a = (long long)d.t.black_positions().size();
  r.b = r.mv.weighted_sum_right();
  r.genus = 1 - r.a + (long long)d.t.gray_positions().size();
  return r;
}

json diagram_to_json(const floor_diagram& d) {
  const auto& t = d.t;
  json c = json::array();
  for (auto& v : t.c) {
    json e;
    e["color"] = v.color == vcolor::black ? "black" : (v.color == vcolor::gray ? "gray" : "white");
    if (v.color == vcolor::white) e["div"] = v.div;
    c.push_back(e);
  }
  json weights = json::object();
  for (std::size_t i = 0; i < d.l_weights.size(); ++i) weights["l" + std::to_string(i)] = d.l_weights[i];
  for (std::size_t i = 0; i < d.r_weights.size(); ++i) weights["r" + std::to_string(i)] = d.r_weights[i];
  auto whites = t.white_positions();
  auto grays = t.gray_positions();
  std::map<int, json> by_pos;  // canonical: C position ascending
  for (std::size_t i = 0; i < whites.size(); ++i)
    by_pos[whites[i]] = json{{"w" + std::to_string(whites[i]), d.whitec_weights[i]}};
  for (std::size_t i = 0; i < grays.size(); ++i) {
    json g;
    g["g" + std::to_string(grays[i]) + ".in"] = d.gray_weights[i].first;
    g["g" + std::to_string(grays[i]) + ".out"] = d.gray_weights[i].second;
    by_pos[grays[i]] = g;
  }
  for (auto& [pos, obj] : by_pos)
    for (auto& [key, val] : obj.items()) weights[key] = val;

  json gray_edges = json::array();
  for (auto [s, tt] : t.gray_edges) gray_edges.push_back(json::array({s, tt}));

  return json{{"c", c},
              {"l_attach", t.l_attach},
              {"r_attach", t.r_attach},
              {"gray_edges", gray_edges},
              {"whitec_edges", t.whitec_attach},
              {"weights", weights}};
}

floor_diagram diagram_from_json(const json& j) {
  floor_diagram d;
  for (auto& e : j.at("c")) {
    c_vertex v;
    std::string col = e.at("color");
    v.color = col == "black" ? vcolor::black : (col == "gray" ? vcolor::gray : vcolor::white);
    if (v.color == vcolor::white) v.div = e.at("div").get<long long>();
    d.t.c.push_back(v);
  }
  d.t.l_attach = j.at("l_attach").get<std::vector<int>>();
  d.t.r_attach = j.at("r_attach").get<std::vector<int>>();
  for (auto& e : j.at("gray_edges")) d.t.gray_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  d.t.whitec_attach = j.at("whitec_edges").get<std::vector<int>>();
  const json& w = j.at("weights");
  for (std::size_t i = 0; i < d.t.l_attach.size(); ++i) {
    long long lw = w.at("l" + std::to_string(i)).get<long long>();
    d.l_weights.push_back(lw);
    d.t.l_divs.push_back(-lw);
  }
  for (std::size_t i = 0; i < d.t.r_attach.size(); ++i) {
    long long rw = w.at("r" + std::to_string(i)).get<long long>();
    d.r_weights.push_back(rw);
    d.t.r_divs.push_back(rw);
  }
  for (int p : d.t.white_positions()) d.whitec_weights.push_back(w.at("w" + std::to_string(p)).get<long long>());
  for (int p : d.t.gray_positions())
    d.gray_weights.emplace_back(w.at("g" + std::to_string(p) + ".in").get<long long>(),
                                w.at("g" + std::to_string(p) + ".out").get<long long>());
  return d;
}

std::string canonical_key(const floor_diagram& d) { return diagram_to_json(d).dump(); }

}  // namespace fdiag
