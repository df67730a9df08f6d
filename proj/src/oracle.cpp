#include "fdiag/enumerate.hpp"

#include <algorithm>

namespace fdiag {

// Brute-force witness enumerator. Strategy: materialize every combination of
// C-order, C-white value order, attachments, gray endpoint pair and gray
// weight tuple up to the global bound, build the diagram object, and let
// validate() decide. Correctness rests on the validator alone; the only
// generation-side restrictions are the definitional direction facts that a
// gray vertex needs a black on both sides and weights are positive.
std::vector<std::string> naive_enumerate_keys(const enumeration_query& q) {
  check_query(q);
  std::vector<std::string> keys;

  const long long a = q.a, g = q.g, k = q.k;
  const long long n_gray = g + a - 1;
  if (n_gray < 0) return keys;

  std::vector<long long> l_divs, r_divs;
  for (auto v : q.x) (v < 0 ? l_divs : r_divs).push_back(v);
  const int n_l = (int)l_divs.size(), n_r = (int)r_divs.size();
  const int n2 = (int)q.c_divs.size();
  const int n_c = (int)(a + n_gray + n2);

  long long w_max = a * k;  // sum of positive divergences plus a*k
  for (auto v : q.x)
    if (v > 0) w_max += v;
  for (auto v : q.c_divs)
    if (v > 0) w_max += v;
  if (w_max < 1) w_max = 1;

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

  // odometer over mixed radices
  auto next_tuple = [](std::vector<int>& t, const std::vector<int>& radix) -> bool {
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < radix[i]) return true;
      t[i] = 0;
    }
    return false;
  };

  do {
    std::vector<int> bpos, gpos, wpos;
    for (int i = 0; i < n_c; ++i) {
      if (word[i] == 'B') bpos.push_back(i);
      else if (word[i] == 'G') gpos.push_back(i);
      else wpos.push_back(i);
    }

    // all (earlier black, later black) pairs per gray
    std::vector<std::vector<std::pair<int, int>>> pairs(gpos.size());
    bool ok = true;
    for (std::size_t gi = 0; gi < gpos.size(); ++gi) {
      for (int s : bpos)
        for (int t : bpos)
          if (s < gpos[gi] && gpos[gi] < t) pairs[gi].emplace_back(s, t);
      if (pairs[gi].empty()) { ok = false; break; }
    }
    if (!ok) continue;

    std::vector<std::vector<long long>> vseqs;
    if (n2 == 0) {
      vseqs.push_back({});
    } else {
      std::vector<long long> vs = base_y;
      do vseqs.push_back(vs);
      while (std::next_permutation(vs.begin(), vs.end()));
    }

    for (const auto& vseq : vseqs) {
      std::vector<int> attach_radix(n2 + n_l + n_r, (int)a);
      std::vector<int> attach(attach_radix.size(), 0);
      do {
        std::vector<int> gray_radix(gpos.size());
        for (std::size_t gi = 0; gi < gpos.size(); ++gi) gray_radix[gi] = (int)pairs[gi].size();
        std::vector<int> gsel(gpos.size(), 0);
        do {
          floor_diagram d;
          d.t.c.resize(n_c);
          for (int i = 0; i < n_c; ++i)
            d.t.c[i].color =
                word[i] == 'B' ? vcolor::black : (word[i] == 'G' ? vcolor::gray : vcolor::white);
          for (int wi = 0; wi < n2; ++wi) d.t.c[wpos[wi]].div = vseq[wi];
          d.t.l_divs = l_divs;
          d.t.r_divs = r_divs;
          for (int wi = 0; wi < n2; ++wi) d.t.whitec_attach.push_back(bpos[attach[wi]]);
          for (int i = 0; i < n_l; ++i) d.t.l_attach.push_back(bpos[attach[n2 + i]]);
          for (int i = 0; i < n_r; ++i) d.t.r_attach.push_back(bpos[attach[n2 + n_l + i]]);
          for (std::size_t gi = 0; gi < gpos.size(); ++gi)
            d.t.gray_edges.push_back(pairs[gi][gsel[gi]]);
          for (auto v : l_divs) d.l_weights.push_back(-v);
          for (auto v : r_divs) d.r_weights.push_back(v);
          for (int wi = 0; wi < n2; ++wi) d.whitec_weights.push_back(std::llabs(vseq[wi]));
          d.gray_weights.assign(gpos.size(), {1, 1});

          std::vector<int> wt_radix(gpos.size(), (int)w_max);
          std::vector<int> wt(gpos.size(), 0);
          do {
            for (std::size_t gi = 0; gi < gpos.size(); ++gi)
              d.gray_weights[gi] = {wt[gi] + 1, wt[gi] + 1};
            if (validate(d, k).ok) keys.push_back(canonical_key(d));
          } while (next_tuple(wt, wt_radix));
        } while (next_tuple(gsel, gray_radix));
      } while (next_tuple(attach, attach_radix));
    }
  } while (std::next_permutation(word.begin(), word.end()));

  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace fdiag
