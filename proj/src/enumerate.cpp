#include "fdiag/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace fdiag {

void check_query(const enumeration_query& q) {
  if (q.a < 1) fail(errc::invalid_query, "a must be positive (a = 0 is outside the integer-valued range)");
  if (q.g < 0 || q.k < 0) fail(errc::invalid_query, "g and k must be nonnegative");
  long long s = q.a * q.k;
  for (auto v : q.x) {
    if (v == 0) fail(errc::invalid_query, "zero entry in x");
    s += v;
  }
  for (auto v : q.c_divs) {
    if (v == 0) fail(errc::invalid_query, "zero entry in y");
    s += v;
  }
  if (s != 0)
    fail(errc::not_in_lattice,
         "sum(x) + sum(y) + a*k = " + std::to_string(s) + ", point is not in the lattice");
}

namespace {

// Odometer over mixed radices; visits tuples in lexicographic order.
template <typename F>
void for_each_tuple(const std::vector<int>& radix, F&& fn) {
  std::vector<int> t(radix.size(), 0);
  for (std::size_t i = 0; i < radix.size(); ++i)
    if (radix[i] <= 0) return;
  for (;;) {
    fn(t);
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < radix[i]) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (radix.empty()) return;
  }
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Enumerates every structurally valid, connected, capacity-feasible template
// (weight feasibility is not yet decided here). Canonical order: color word,
// then C-white value order, then white/L/R attachments, then gray endpoints.
void for_each_candidate(const enumeration_query& q, const std::vector<long long>* fixed_y,
                        budget_meter& meter, const std::function<void(const diagram_template&)>& fn) {
  const long long a = q.a, g = q.g, k = q.k;
  const long long n_gray = g + a - 1;
  if (n_gray < 0) return;

  std::vector<long long> l_divs, r_divs;
  for (auto v : q.x) (v < 0 ? l_divs : r_divs).push_back(v);
  const int n_l = (int)l_divs.size(), n_r = (int)r_divs.size();
  const int n2 = (int)q.c_divs.size();
  const int n_c = (int)(a + n_gray + n2);

  std::vector<char> word(n_c);
  {
    int i = 0;
    for (int j = 0; j < a; ++j) word[i++] = 'B';
    for (int j = 0; j < n_gray; ++j) word[i++] = 'G';
    for (int j = 0; j < n2; ++j) word[i++] = 'W';
  }
  std::sort(word.begin(), word.end());

  std::vector<long long> base_y = q.c_divs;
  std::sort(base_y.begin(), base_y.end());

  do {
    std::vector<int> bpos, gpos, wpos;
    for (int i = 0; i < n_c; ++i) {
      if (word[i] == 'B') bpos.push_back(i);
      else if (word[i] == 'G') gpos.push_back(i);
      else wpos.push_back(i);
    }

    // per-gray candidate endpoint pairs (black indices), and the gap a gray sits in
    std::vector<std::vector<std::pair<int, int>>> gray_pairs(gpos.size());
    std::vector<int> gray_gap(gpos.size());
    bool word_ok = true;
    for (std::size_t gi = 0; gi < gpos.size() && word_ok; ++gi) {
      int before = 0;
      while (before < a && bpos[before] < gpos[gi]) ++before;
      gray_gap[gi] = before - 1;  // gray lies between black (before-1) and black before
      if (before == 0 || before == a) { word_ok = false; break; }
      for (int s = 0; s < before; ++s)
        for (int t = before; t < a; ++t) gray_pairs[gi].emplace_back(s, t);
    }
    if (!word_ok) continue;

    std::vector<int> grays_in_gap(a > 1 ? a - 1 : 0, 0);
    for (std::size_t gi = 0; gi < gpos.size(); ++gi) grays_in_gap[gray_gap[gi]] += 1;

    // C-white value sequences: each distinct ordering once
    std::vector<std::vector<long long>> vseqs;
    if (fixed_y) {
      vseqs.push_back(*fixed_y);
    } else if (n2 == 0) {
      vseqs.push_back({});
    } else {
      std::vector<long long> vs = base_y;
      do vseqs.push_back(vs);
      while (std::next_permutation(vs.begin(), vs.end()));
    }

    for (const auto& vseq : vseqs) {
      // attachment candidates per C-white: a negative white precedes its
      // black, a positive one follows it
      std::vector<std::vector<int>> white_cand(n2);
      bool vseq_ok = true;
      for (int wi = 0; wi < n2 && vseq_ok; ++wi) {
        for (int b = 0; b < a; ++b) {
          if (vseq[wi] < 0 ? bpos[b] > wpos[wi] : bpos[b] < wpos[wi]) white_cand[wi].push_back(b);
        }
        if (white_cand[wi].empty()) vseq_ok = false;
      }
      if (!vseq_ok) continue;

      // conservation across the cut just after each black: the crossing
      // weight equals minus the sum of divergences to the left
      std::vector<long long> flow(a > 1 ? a - 1 : 0, 0);
      {
        long long left = std::accumulate(l_divs.begin(), l_divs.end(), 0LL);
        int wi = 0, bi = 0;
        for (int p = 0; p < n_c && bi < a - 1; ++p) {
          if (word[p] == 'W') left += vseq[wi++];
          else if (word[p] == 'B') {
            left += k;
            flow[bi++] = -left;
          }
        }
      }
      bool cap_ok = true;
      for (int j = 0; j < a - 1; ++j)
        if (flow[j] < grays_in_gap[j]) { cap_ok = false; break; }
      if (!cap_ok) continue;

      std::vector<int> white_radix(n2);
      for (int wi = 0; wi < n2; ++wi) white_radix[wi] = (int)white_cand[wi].size();

      for_each_tuple(white_radix, [&](const std::vector<int>& wsel_idx) {
        std::vector<int> wsel(n2);
        for (int wi = 0; wi < n2; ++wi) wsel[wi] = white_cand[wi][wsel_idx[wi]];

        std::vector<int> label_radix(n_l + n_r, a);
        for_each_tuple(label_radix, [&](const std::vector<int>& lr) {
          // refined capacity: forced white/L/R crossings consume flow units
          std::vector<long long> cap(flow);
          for (int i = 0; i < n_l; ++i)
            for (int j = 0; j < lr[i]; ++j) cap[j] -= -l_divs[i];  // L edge reaches black lr[i]
          for (int i = 0; i < n_r; ++i)
            for (int j = lr[n_l + i]; j < a - 1; ++j) cap[j] -= r_divs[i];
          for (int wi = 0; wi < n2; ++wi) {
            int bp = bpos[wsel[wi]];
            long long w = std::llabs(vseq[wi]);
            for (int j = 0; j < a - 1; ++j) {
              int cp = bpos[j];
              bool crossing = vseq[wi] < 0 ? (wpos[wi] <= cp && cp < bp) : (bp <= cp && cp < wpos[wi]);
              if (crossing) cap[j] -= w;
            }
          }
          for (int j = 0; j < a - 1; ++j)
            if (cap[j] < grays_in_gap[j]) return;

          std::vector<int> gray_radix(gpos.size());
          for (std::size_t gi = 0; gi < gpos.size(); ++gi) gray_radix[gi] = (int)gray_pairs[gi].size();
          for_each_tuple(gray_radix, [&](const std::vector<int>& gsel_idx) {
            std::vector<std::pair<int, int>> gsel(gpos.size());
            for (std::size_t gi = 0; gi < gpos.size(); ++gi) gsel[gi] = gray_pairs[gi][gsel_idx[gi]];

            // gray edge (s,t) crosses cuts s..t-1; each crossing costs >= 1
            std::vector<int> crossing(a > 1 ? a - 1 : 0, 0);
            for (auto [s, t] : gsel)
              for (int j = s; j < t; ++j) crossing[j] += 1;
            for (int j = 0; j < a - 1; ++j)
              if (crossing[j] > cap[j]) return;

            // connectivity of blacks through gray edges
            std::vector<int> parent(a);
            std::iota(parent.begin(), parent.end(), 0);
            for (auto [s, t] : gsel) parent[find_root(parent, s)] = find_root(parent, t);
            int root = find_root(parent, 0);
            for (int b = 1; b < a; ++b)
              if (find_root(parent, b) != root) return;

            diagram_template t;
            t.c.resize(n_c);
            for (int i = 0; i < n_c; ++i)
              t.c[i].color = word[i] == 'B' ? vcolor::black : (word[i] == 'G' ? vcolor::gray : vcolor::white);
            for (int wi = 0; wi < n2; ++wi) t.c[wpos[wi]].div = vseq[wi];
            t.l_divs = l_divs;
            t.r_divs = r_divs;
            for (int i = 0; i < n_l; ++i) t.l_attach.push_back(bpos[lr[i]]);
            for (int i = 0; i < n_r; ++i) t.r_attach.push_back(bpos[lr[n_l + i]]);
            for (std::size_t gi = 0; gi < gpos.size(); ++gi)
              t.gray_edges.emplace_back(bpos[gsel[gi].first], bpos[gsel[gi].second]);
            for (int wi = 0; wi < n2; ++wi) t.whitec_attach.push_back(bpos[wsel[wi]]);

            meter.count_points();  // candidate probes meter as work units
            fn(t);
          });
        });
      });
    }
  } while (std::next_permutation(word.begin(), word.end()));
}

// Gray-weight completion. Returns diagrams in canonical order (free weights
// ascending); with first_only, stops after one solution (feasibility probe).
std::vector<floor_diagram> complete_weights_impl(const diagram_template& t, long long k,
                                                 budget_meter& meter, bool first_only) {
  std::vector<floor_diagram> out;
  auto bpos = t.black_positions();
  auto gpos = t.gray_positions();
  auto wpos = t.white_positions();
  const int a = (int)bpos.size();
  const int n_gray = (int)gpos.size();

  std::vector<int> black_index(t.c.size(), -1);
  for (int i = 0; i < a; ++i) black_index[bpos[i]] = i;

  // required gray-flow divergence at each black: k minus the white/L/R net
  std::vector<long long> req(a, k);
  for (std::size_t i = 0; i < t.l_divs.size(); ++i) req[black_index[t.l_attach[i]]] -= -t.l_divs[i];
  for (std::size_t i = 0; i < t.r_divs.size(); ++i) req[black_index[t.r_attach[i]]] += t.r_divs[i];
  for (std::size_t wi = 0; wi < wpos.size(); ++wi) {
    long long v = t.c[wpos[wi]].div;
    req[black_index[t.whitec_attach[wi]]] += v;  // inbound |v| for v<0, outbound v for v>0
  }

  // cut capacities for the gray subsystem
  std::vector<long long> cap(a > 1 ? a - 1 : 0, 0);
  {
    long long left = std::accumulate(t.l_divs.begin(), t.l_divs.end(), 0LL);
    int bi = 0;
    for (int p = 0; p < (int)t.c.size() && bi < a - 1; ++p) {
      if (t.c[p].color == vcolor::white) left += t.c[p].div;
      else if (t.c[p].color == vcolor::black) {
        left += k;
        cap[bi++] = -left;
      }
    }
    for (std::size_t i = 0; i < t.l_divs.size(); ++i)
      for (int j = 0; j < a - 1 && bpos[j] < t.l_attach[i]; ++j) cap[j] -= -t.l_divs[i];
    for (std::size_t i = 0; i < t.r_divs.size(); ++i)
      for (int j = 0; j < a - 1; ++j)
        if (t.r_attach[i] <= bpos[j]) cap[j] -= t.r_divs[i];
    for (std::size_t wi = 0; wi < wpos.size(); ++wi) {
      long long v = t.c[wpos[wi]].div;
      int bp = t.whitec_attach[wi];
      for (int j = 0; j < a - 1; ++j) {
        int cp = bpos[j];
        bool crossing = v < 0 ? (wpos[wi] <= cp && cp < bp) : (bp <= cp && cp < wpos[wi]);
        if (crossing) cap[j] -= std::llabs(v);
      }
    }
  }

  // gray edges as black-index pairs
  std::vector<std::pair<int, int>> hedges(n_gray);
  for (int gi = 0; gi < n_gray; ++gi)
    hedges[gi] = {black_index[t.gray_edges[gi].first], black_index[t.gray_edges[gi].second]};

  // spanning tree over blacks (canonical: first edges that connect)
  std::vector<int> parent(a);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> tree_edges, free_edges;
  for (int gi = 0; gi < n_gray; ++gi) {
    int rs = find_root(parent, hedges[gi].first), rt = find_root(parent, hedges[gi].second);
    if (rs != rt) {
      parent[rs] = rt;
      tree_edges.push_back(gi);
    } else {
      free_edges.push_back(gi);
    }
  }
  if ((int)tree_edges.size() != a - 1) return out;  // disconnected: no weighting

  // per-cut crossing counts and per-free-edge upper bounds
  std::vector<int> crossing(a > 1 ? a - 1 : 0, 0);
  for (auto [s, tt] : hedges)
    for (int j = s; j < tt; ++j) crossing[j] += 1;
  for (int j = 0; j < a - 1; ++j)
    if (crossing[j] > cap[j]) return out;

  auto upper_bound_of = [&](int gi) {
    long long u = std::numeric_limits<long long>::max();
    for (int j = hedges[gi].first; j < hedges[gi].second; ++j)
      u = std::min(u, cap[j] - crossing[j] + 1);
    return u;
  };

  std::vector<long long> weight(n_gray, 0);

  // peeling order for the tree solve (leaf elimination), precomputed once
  std::vector<int> tdeg(a, 0);
  for (int e : tree_edges) {
    tdeg[hedges[e].first] += 1;
    tdeg[hedges[e].second] += 1;
  }
  std::vector<char> removed_vertex(a, 0), used_edge(n_gray, 0);
  std::vector<std::pair<int, int>> peel;  // (vertex, tree edge) in elimination order
  {
    std::vector<int> deg = tdeg;
    for (int round = 0; round < a - 1; ++round) {
      int leaf = -1;
      for (int v = 0; v < a; ++v)
        if (!removed_vertex[v] && deg[v] == 1) { leaf = v; break; }
      int edge = -1;
      for (int e : tree_edges)
        if (!used_edge[e] && (hedges[e].first == leaf || hedges[e].second == leaf)) { edge = e; break; }
      peel.emplace_back(leaf, edge);
      removed_vertex[leaf] = 1;
      used_edge[edge] = 1;
      deg[hedges[edge].first] -= 1;
      deg[hedges[edge].second] -= 1;
    }
  }

  std::vector<long long> res(a, 0);
  auto solve_tree = [&]() -> bool {
    for (int v = 0; v < a; ++v) res[v] = req[v];
    for (int e : free_edges) {
      res[hedges[e].second] -= weight[e];
      res[hedges[e].first] += weight[e];
    }
    for (auto [v, e] : peel) {
      long long w = hedges[e].second == v ? res[v] : -res[v];
      if (w < 1) return false;
      weight[e] = w;
      res[hedges[e].second] -= w;
      res[hedges[e].first] += w;
    }
    for (int v = 0; v < a; ++v)
      if (res[v] != 0) return false;
    return true;
  };

  auto emit = [&]() {
    floor_diagram d;
    d.t = t;
    for (auto v : t.l_divs) d.l_weights.push_back(-v);
    for (auto v : t.r_divs) d.r_weights.push_back(v);
    for (int p : wpos) d.whitec_weights.push_back(std::llabs(t.c[p].div));
    for (int gi = 0; gi < n_gray; ++gi) d.gray_weights.emplace_back(weight[gi], weight[gi]);
    out.push_back(std::move(d));
  };

  // depth-first sweep of the free directions
  std::function<bool(std::size_t)> dfs = [&](std::size_t idx) -> bool {
    if (idx == free_edges.size()) {
      meter.count_points();
      if (solve_tree()) {
        emit();
        if (first_only) return true;
      }
      return false;
    }
    int e = free_edges[idx];
    long long hi = upper_bound_of(e);
    for (long long w = 1; w <= hi; ++w) {
      weight[e] = w;
      if (dfs(idx + 1)) return true;
    }
    return false;
  };
  if (free_edges.empty()) {
    meter.count_points();
    if (solve_tree()) emit();
  } else {
    dfs(0);
  }
  return out;
}

}  // namespace

std::vector<floor_diagram> complete_weights(const diagram_template& t, const enumeration_query& q,
                                            budget_meter& meter) {
  return complete_weights_impl(t, q.k, meter, false);
}

std::vector<diagram_template> enumerate_templates(const enumeration_query& q, budget_meter& meter) {
  check_query(q);
  std::vector<diagram_template> out;
  for_each_candidate(q, nullptr, meter, [&](const diagram_template& t) {
    if (!complete_weights_impl(t, q.k, meter, true).empty()) {
      meter.count_template();
      out.push_back(t);
    }
  });
  return out;
}

namespace {

diagram_sum run_enumeration(const enumeration_query& q, const std::vector<long long>* fixed_y,
                            budget_meter& meter, const diagram_sink& sink) {
  check_query(q);
  diagram_sum sum;
  for_each_candidate(q, fixed_y, meter, [&](const diagram_template& t) {
    auto diagrams = complete_weights_impl(t, q.k, meter, false);
    if (!diagrams.empty()) meter.count_template();
    for (auto& d : diagrams) {
      Int mu = multiplicity(d);
      sum.total += mu;
      sum.count += 1;
      if (sink) sink(d, mu);
    }
  });
  return sum;
}

}  // namespace

diagram_sum enumerate_diagrams(const enumeration_query& q, budget_meter& meter, const diagram_sink& sink) {
  return run_enumeration(q, nullptr, meter, sink);
}

diagram_sum enumerate_diagrams_fixed_y(const enumeration_query& q, const std::vector<long long>& y_order,
                                       budget_meter& meter, const diagram_sink& sink) {
  if (y_order.size() != q.c_divs.size())
    fail(errc::invalid_query, "fixed y order has wrong length");
  return run_enumeration(q, &y_order, meter, sink);
}

std::vector<std::string> fast_enumerate_keys(const enumeration_query& q, budget_meter& meter) {
  std::vector<std::string> keys;
  enumerate_diagrams(q, meter, [&](const floor_diagram& d, const Int&) { keys.push_back(canonical_key(d)); });
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace fdiag
