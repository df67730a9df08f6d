#include "fdiag/flow.hpp"

#include "fdiag/parallel.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fdiag {

namespace {

// Kahn order; on failure extracts a directed cycle (walking in-edges inside
// the leftover subgraph, where every vertex keeps in-degree >= 1) and throws:
// a cycle is a recession ray, pumping flow around it never changes any
// divergence.
std::vector<int> topo_positions(const flow_problem& p) {
  int n = p.n_vertices;
  std::vector<std::vector<int>> out(n), in(n);
  std::vector<int> indeg(n, 0);
  for (const auto& [s, t] : p.edges) {
    out[s].push_back(t);
    in[t].push_back(s);
    ++indeg[t];
  }
  std::vector<int> pos(n, -1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int placed = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    pos[v] = placed++;
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (placed == n) return pos;
  int v = 0;
  while (pos[v] != -1) ++v;
  std::vector<int> seen(n, -1), walk;
  int cur = v;
  while (seen[cur] == -1) {
    seen[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    for (int w : in[cur])
      if (pos[w] == -1) {
        cur = w;
        break;
      }
  }
  std::vector<std::string> cyc;
  for (int i = static_cast<int>(walk.size()) - 1; i >= seen[cur]; --i)
    cyc.push_back(std::to_string(walk[i]));
  cyc.push_back(cyc.front());
  fail(errc::unbounded, "flow polytope is unbounded: directed cycle " + join(cyc, " -> ") +
                            " carries an arbitrarily large circulation");
}

struct forest {
  std::vector<int> parent;
  int components = 0;

  explicit forest(int n) : parent(n), components(n) {
    for (int v = 0; v < n; ++v) parent[v] = v;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    --components;
    return true;
  }
};

// Leaf-elimination schedule for the tree edges: weight-independent, computed
// once. leaf_is_tgt tells whether the eliminated vertex is the edge's target.
struct peel_step {
  int edge;
  int leaf;
  bool leaf_is_tgt;
};

std::vector<peel_step> peel_schedule(int n, const std::vector<std::pair<int, int>>& edges,
                                     const std::vector<int>& tree_edges) {
  std::vector<std::vector<int>> incident(n);
  std::vector<int> deg(n, 0);
  for (int e : tree_edges) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
    ++deg[edges[e].first];
    ++deg[edges[e].second];
  }
  std::vector<char> used(edges.size(), 0);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) queue.push_back(v);
  std::vector<peel_step> steps;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (deg[v] != 1) continue;
    int e = -1;
    for (int cand : incident[v])
      if (!used[cand]) {
        e = cand;
        break;
      }
    used[e] = 1;
    int other = edges[e].first == v ? edges[e].second : edges[e].first;
    --deg[v];
    if (--deg[other] == 1) queue.push_back(other);
    steps.push_back({e, v, edges[e].second == v});
  }
  return steps;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool certificate_ok(const std::vector<std::vector<Int>>& vectors,
                    const std::vector<Int>& phi) {
  for (const auto& v : vectors)
    if (dot(phi, v) < 1) return false;
  return true;
}

// Fraction-free (Bareiss) determinant; every division is exact.
Int det_of(std::vector<std::vector<Int>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv == -1) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Newton form through (t = 1..values.size(), values).
struct newton_fit {
  std::vector<Rat> coef;  // divided differences

  explicit newton_fit(const std::vector<Int>& values) {
    std::vector<Rat> table(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) table[i] = Rat(values[i]);
    coef = table;
    for (std::size_t level = 1; level < values.size(); ++level) {
      for (std::size_t i = values.size() - 1; i >= level; --i)
        table[i] = (table[i] - table[i - 1]) / Rat(static_cast<long long>(level));
      coef[level] = table[level];
    }
  }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = coef.size(); i-- > 0;)
      acc = coef[i] + acc * (x - Rat(static_cast<long long>(i) + 1));
    return acc;
  }
};

}  // namespace

Int eval_weight(const weight_functional& y, const std::vector<Int>& z) {
  Int prod = 1;
  for (int i : y.indices) prod *= z.at(static_cast<std::size_t>(i));
  return prod;
}

void check_flow_problem(const flow_problem& p) {
  if (p.n_vertices < 0) fail(errc::invalid_query, "negative vertex count");
  if (static_cast<int>(p.d_vec.size()) != p.n_vertices)
    fail(errc::invalid_query, "divergence vector length must equal the vertex count");
  for (const auto& [s, t] : p.edges) {
    if (s < 0 || s >= p.n_vertices || t < 0 || t >= p.n_vertices)
      fail(errc::invalid_query, "edge endpoint out of range");
    if (s == t) fail(errc::invalid_query, "self-loop edge (a loop is a circulation ray)");
  }
  Int total = 0;
  for (const Int& d : p.d_vec) total += d;
  if (total != 0) fail(errc::invalid_query, "divergences must sum to zero");
  topo_positions(p);
}

int flow_dimension(const flow_problem& p) {
  check_flow_problem(p);
  forest uf(p.n_vertices);
  for (const auto& [s, t] : p.edges) uf.unite(s, t);
  // rank of the incidence matrix is n - #components.
  return static_cast<int>(p.edges.size()) - p.n_vertices + uf.components;
}

std::vector<std::vector<Int>> lattice_points(const flow_problem& p, bool strict,
                                             budget_meter& meter) {
  check_flow_problem(p);
  int n = p.n_vertices;
  int m = static_cast<int>(p.edges.size());
  std::vector<int> pos = topo_positions(p);
  long long lo = strict ? 1 : 0;

  // Per-component divergence must vanish; then leaf peeling always closes.
  forest uf(n);
  for (const auto& [s, t] : p.edges) uf.unite(s, t);
  std::vector<Int> comp_sum(n, 0);
  for (int v = 0; v < n; ++v) comp_sum[uf.find(v)] += p.d_vec[v];
  for (int v = 0; v < n; ++v)
    if (comp_sum[v] != 0) return {};

  // Cut after topological position j carries total weight F_j = -sum of the
  // divergences left of the cut; every crossing edge takes at least lo of it.
  std::vector<Int> cut_flow(std::max(0, n - 1));
  {
    std::vector<int> vert_at(n);
    for (int v = 0; v < n; ++v) vert_at[pos[v]] = v;
    Int acc = 0;
    for (int j = 0; j + 1 < n; ++j) {
      acc += p.d_vec[vert_at[j]];
      cut_flow[j] = -acc;
    }
  }
  std::vector<long long> crossing(std::max(0, n - 1), 0);
  for (const auto& [s, t] : p.edges)
    for (int j = pos[s]; j < pos[t]; ++j) ++crossing[j];
  for (int j = 0; j + 1 < n; ++j)
    if (cut_flow[j] < lo * crossing[j]) return {};

  forest span(n);
  std::vector<int> tree_edges, free_edges;
  for (int e = 0; e < m; ++e)
    (span.unite(p.edges[e].first, p.edges[e].second) ? tree_edges : free_edges).push_back(e);
  std::vector<peel_step> peel = peel_schedule(n, p.edges, tree_edges);

  std::vector<Int> upper(m);
  for (int e = 0; e < m; ++e) {
    const auto& [s, t] = p.edges[e];
    Int hi = cut_flow[pos[s]] - lo * (crossing[pos[s]] - 1);
    for (int j = pos[s] + 1; j < pos[t]; ++j)
      hi = std::min(hi, Int(cut_flow[j] - lo * (crossing[j] - 1)));
    upper[e] = hi;
  }

  // need[v] = divergence still to be supplied at v by unassigned edges.
  std::vector<Int> need = p.d_vec;
  std::vector<Int> weight(m, 0);
  std::vector<std::vector<Int>> points;

  auto emit = [&] {
    meter.count_points();
    std::vector<Int> need_rest = need;
    std::vector<Int> full = weight;
    for (const peel_step& st : peel) {
      const auto& [s, t] = p.edges[st.edge];
      Int w = st.leaf_is_tgt ? need_rest[st.leaf] : -need_rest[st.leaf];
      if (w < lo) return;
      full[st.edge] = w;
      need_rest[t] -= w;
      need_rest[s] += w;
    }
    points.push_back(std::move(full));
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
    if (idx == free_edges.size()) {
      emit();
      return;
    }
    int e = free_edges[idx];
    const auto& [s, t] = p.edges[e];
    for (Int w = lo; w <= upper[e]; ++w) {
      weight[e] = w;
      need[t] -= w;
      need[s] += w;
      dfs(idx + 1);
      need[t] += w;
      need[s] -= w;
    }
    weight[e] = 0;
  };
  dfs(0);

  std::sort(points.begin(), points.end());
  return points;
}

vector_config make_config(std::vector<std::vector<Int>> vectors) {
  vector_config cfg;
  cfg.vectors = std::move(vectors);
  if (cfg.vectors.empty()) return cfg;
  std::size_t d = cfg.vectors.front().size();
  Int maxabs = 0;
  for (const auto& v : cfg.vectors) {
    if (v.size() != d) fail(errc::invalid_query, "configuration vectors must share a dimension");
    bool zero = true;
    for (const Int& e : v) {
      zero = zero && e == 0;
      maxabs = std::max(maxabs, Int(abs(e)));
    }
    if (zero) fail(errc::invalid_query, "zero vector makes the configuration non-pointed");
  }

  // Uniformly lex-signed vectors admit the power-weighted certificate
  // (M^(d-1), ..., M, 1): the leading nonzero term dominates the tail.
  int lex = 0;
  bool uniform = true;
  for (const auto& v : cfg.vectors) {
    int sign = 0;
    for (const Int& e : v)
      if (e != 0) {
        sign = e > 0 ? 1 : -1;
        break;
      }
    if (lex == 0) lex = sign;
    uniform = uniform && sign == lex;
  }
  if (uniform) {
    Int m = 2 * maxabs + 2;
    std::vector<Int> phi(d);
    Int pw = 1;
    for (std::size_t j = d; j-- > 0;) {
      phi[j] = lex * pw;
      pw *= m;
    }
    if (certificate_ok(cfg.vectors, phi)) {
      cfg.certificate = std::move(phi);
      return cfg;
    }
  }

  if (d <= 4) {
    for (long long r = 1; r <= 64; r *= 2) {
      std::vector<Int> phi(d, -r);
      bool done = false;
      while (!done) {
        if (certificate_ok(cfg.vectors, phi)) {
          cfg.certificate = phi;
          return cfg;
        }
        std::size_t j = d;
        for (;;) {
          if (j == 0) {
            done = true;
            break;
          }
          --j;
          if (phi[j] < r) {
            ++phi[j];
            break;
          }
          phi[j] = -r;
        }
      }
    }
  }
  fail(errc::invalid_query,
       "configuration is not pointed (no certificate with |phi|_inf <= 64 exists)");
}

vector_config config_of(const flow_problem& p) {
  check_flow_problem(p);
  std::vector<int> pos = topo_positions(p);
  vector_config cfg;
  for (const auto& [s, t] : p.edges) {
    std::vector<Int> col(p.n_vertices, 0);
    col[s] = -1;
    col[t] = 1;
    cfg.vectors.push_back(std::move(col));
  }
  cfg.certificate.assign(p.n_vertices, 0);
  for (int v = 0; v < p.n_vertices; ++v) cfg.certificate[v] = pos[v];
  return cfg;
}

Int weighted_partition_function(const vector_config& x, const weight_functional& y,
                                const std::vector<Int>& c, budget_meter& meter) {
  std::size_t m = x.vectors.size();
  std::vector<char> in_y(m, 0);
  for (int i : y.indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= m)
      fail(errc::invalid_query, "weight functional index out of range");
    in_y[static_cast<std::size_t>(i)] = 1;
  }
  bool all_zero = true;
  for (const Int& e : c) all_zero = all_zero && e == 0;
  if (m == 0) return all_zero ? Int(1) : Int(0);
  if (c.size() != x.vectors.front().size())
    fail(errc::invalid_query, "target vector dimension mismatch");

  std::vector<Int> phi_x(m);
  for (std::size_t i = 0; i < m; ++i) {
    phi_x[i] = dot(x.certificate, x.vectors[i]);
    if (phi_x[i] < 1) fail(errc::invalid_query, "invalid pointedness certificate");
  }

  Int total = 0;
  std::vector<Int> residual = c;
  std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t i, Int phi_res,
                                                       Int weight) {
    meter.count_points();
    if (i == m) {
      for (const Int& e : residual)
        if (e != 0) return;
      total += weight;
      return;
    }
    const std::vector<Int>& xi = x.vectors[i];
    Int hi = phi_res / phi_x[i];
    for (Int z = 0; z <= hi; ++z) {
      // z = 0 in Y zeroes pi_Y on the whole subtree; skip it.
      if (!(in_y[i] && z == 0)) rec(i + 1, phi_res - z * phi_x[i], in_y[i] ? weight * z : weight);
      if (z < hi)
        for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= xi[j];
    }
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] += hi * xi[j];
  };
  Int phi_c = dot(x.certificate, c);
  if (phi_c < 0) return 0;
  rec(0, phi_c, 1);
  return total;
}

Int partition_function(const vector_config& x, const std::vector<Int>& c,
                       budget_meter& meter) {
  return weighted_partition_function(x, weight_functional{}, c, meter);
}

inclusion_exclusion_result inclusion_exclusion_check(const vector_config& x,
                                                     const weight_functional& y,
                                                     const std::vector<Int>& c,
                                                     budget_meter& meter) {
  if (y.indices.size() > 16) fail(errc::invalid_query, "weight functional too large");
  inclusion_exclusion_result out;
  out.lhs = weighted_partition_function(x, y, c, meter);
  out.rhs = 0;
  std::size_t k = y.indices.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    vector_config ext = x;
    std::size_t taken = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::size_t{1} << b)) {
        ext.vectors.push_back(x.vectors[static_cast<std::size_t>(y.indices[b])]);
        ++taken;
      }
    Int term = partition_function(ext, c, meter);
    out.rhs += ((k - taken) % 2 == 0) ? term : -term;
  }
  out.ok = out.lhs == out.rhs;
  return out;
}

std::vector<ehrhart_row> weighted_ehrhart_data(const flow_problem& p,
                                               const weight_functional& y, int t_max,
                                               budget_meter& meter, int workers) {
  check_flow_problem(p);
  if (t_max < 1) fail(errc::invalid_query, "t_max must be positive");
  std::vector<ehrhart_row> rows(static_cast<std::size_t>(t_max));
  std::vector<budget_meter> meters(static_cast<std::size_t>(t_max));
  for (auto& sub : meters) sub.limit = meter.limit;
  unsigned pool = workers <= 0 ? default_workers() : static_cast<unsigned>(workers);
  parallel_for(static_cast<std::size_t>(t_max), pool, [&](std::size_t i) {
    long long t = static_cast<long long>(i) + 1;
    flow_problem dilated = p;
    for (Int& d : dilated.d_vec) d *= t;
    ehrhart_row& row = rows[i];
    row.t = t;
    row.closed = 0;
    row.interior = 0;
    for (const auto& z : lattice_points(dilated, false, meters[i])) row.closed += eval_weight(y, z);
    for (const auto& z : lattice_points(dilated, true, meters[i])) row.interior += eval_weight(y, z);
  });
  for (const auto& sub : meters) meter.count_points(sub.lattice_points);
  return rows;
}

reciprocity_report reciprocity_check(const flow_problem& p, const weight_functional& y,
                                     budget_meter& meter, int workers) {
  reciprocity_report rep;
  rep.dim = flow_dimension(p);
  rep.y_size = static_cast<int>(y.indices.size());
  int n = rep.dim + rep.y_size;
  int t_max = std::max(n + 2, 3);
  rep.table = weighted_ehrhart_data(p, y, t_max, meter, workers);
  if (lattice_points(p, false, meter).empty())
    fail(errc::invalid_query, "flow polytope is empty");

  std::vector<Int> samples;
  for (int t = 1; t <= n + 1; ++t) samples.push_back(rep.table[t - 1].closed);
  newton_fit fit(samples);

  rep.fit_is_polynomial = true;
  for (int t = n + 2; t <= t_max; ++t)
    rep.fit_is_polynomial =
        rep.fit_is_polynomial && fit.eval(Rat(t)) == Rat(rep.table[t - 1].closed);

  rep.reciprocity_ok = true;
  int sign = n % 2 == 0 ? 1 : -1;
  for (int t = 1; t <= 3; ++t)
    rep.reciprocity_ok =
        rep.reciprocity_ok && fit.eval(Rat(-t)) == Rat(sign * rep.table[t - 1].interior);
  return rep;
}

bool unimodularity_check(const vector_config& x) {
  std::size_t m = x.vectors.size();
  if (m == 0) return true;
  std::size_t d = x.vectors.front().size();
  std::size_t r = std::min(d, m);
  if (r == 0) return true;

  // Maximal minors: choose r columns (m >= d) or r rows (m < d).
  std::vector<std::size_t> pick(r);
  bool over_columns = m >= d;
  std::size_t universe = over_columns ? m : d;
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  for (;;) {
    std::vector<std::vector<Int>> minor(r, std::vector<Int>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        minor[i][j] = over_columns ? x.vectors[pick[j]][i] : x.vectors[j][pick[i]];
    Int det = det_of(std::move(minor));
    if (det < -1 || det > 1) return false;
    bool advanced = false;
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (pick[i] + (r - i) < universe) {
        ++pick[i];
        for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return true;
  }
}

template_flow flow_problem_of(const diagram_template& t, long long k) {
  template_flow out;
  int n_l = static_cast<int>(t.l_divs.size());
  int n_r = static_cast<int>(t.r_divs.size());
  int n_c = static_cast<int>(t.c.size());
  out.problem.n_vertices = n_l + n_c + n_r;
  out.problem.d_vec.assign(static_cast<std::size_t>(out.problem.n_vertices), 0);
  auto c_vert = [&](int pos) { return n_l + pos; };

  for (int i = 0; i < n_l; ++i) {
    out.problem.d_vec[static_cast<std::size_t>(i)] = t.l_divs[static_cast<std::size_t>(i)];
    out.problem.edges.emplace_back(i, c_vert(t.l_attach[static_cast<std::size_t>(i)]));
    out.edge_names.push_back("l" + std::to_string(i));
  }
  for (int i = 0; i < n_r; ++i) {
    out.problem.d_vec[static_cast<std::size_t>(n_l + n_c + i)] =
        t.r_divs[static_cast<std::size_t>(i)];
    out.problem.edges.emplace_back(c_vert(t.r_attach[static_cast<std::size_t>(i)]),
                                   n_l + n_c + i);
    out.edge_names.push_back("r" + std::to_string(i));
  }
  int widx = 0, gidx = 0;
  for (int pos = 0; pos < n_c; ++pos) {
    const c_vertex& v = t.c[static_cast<std::size_t>(pos)];
    if (v.color == vcolor::black) {
      out.problem.d_vec[static_cast<std::size_t>(c_vert(pos))] = k;
    } else if (v.color == vcolor::white) {
      out.problem.d_vec[static_cast<std::size_t>(c_vert(pos))] = v.div;
      int black = t.whitec_attach[static_cast<std::size_t>(widx++)];
      out.internal.indices.push_back(static_cast<int>(out.problem.edges.size()));
      if (v.div < 0)
        out.problem.edges.emplace_back(c_vert(pos), c_vert(black));
      else
        out.problem.edges.emplace_back(c_vert(black), c_vert(pos));
      out.edge_names.push_back("w" + std::to_string(pos));
    } else {
      const auto& [src, tgt] = t.gray_edges[static_cast<std::size_t>(gidx++)];
      out.internal.indices.push_back(static_cast<int>(out.problem.edges.size()));
      out.problem.edges.emplace_back(c_vert(src), c_vert(pos));
      out.edge_names.push_back("g" + std::to_string(pos) + ".in");
      out.internal.indices.push_back(static_cast<int>(out.problem.edges.size()));
      out.problem.edges.emplace_back(c_vert(pos), c_vert(tgt));
      out.edge_names.push_back("g" + std::to_string(pos) + ".out");
    }
  }
  return out;
}

}  // namespace fdiag
