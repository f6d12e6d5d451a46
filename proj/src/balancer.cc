// Copyright 2026 The hamlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamlab/balancer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "hamlab/connectivity.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/matchings.hpp"

namespace hamlab {
namespace {

int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool IsCyclicType(int i, int j) { return j == (i + 1) % 3; }

std::string TypeName(int i, int j) { return CellName(i, j); }

// Largest in- or out-degree inside an edge list.
int MaxSemidegree(int n, const std::vector<Edge>& edges) {
  std::vector<int> out(n, 0), in(n, 0);
  int best = 0;
  for (const Edge& e : edges) {
    best = std::max({best, ++out[e.from], ++in[e.to]});
  }
  return best;
}

// The cycle-free selection with alpha*n = d/2 on each block, trimmed to
// the requested sizes.
std::vector<std::vector<Edge>> SelectWithQuotas(
    const Digraph& g, int d, const std::vector<std::vector<Edge>>& blocks,
    const std::vector<int64_t>& sizes, uint64_t seed,
    std::vector<std::string>& notes) {
  for (size_t i = 0; i < blocks.size(); ++i) {
    int deg = MaxSemidegree(g.n(), blocks[i]);
    if (2 * deg > d) {
      throw HypothesisViolation("a bad-edge block has semidegree " +
                                std::to_string(deg) + " above d/2 = " +
                                Rational(d, 2).ToString());
    }
    if (sizes[i] < 0) {
      throw std::logic_error("negative selection size");
    }
  }
  std::vector<std::vector<Edge>> out(blocks.size());
  if (std::all_of(sizes.begin(), sizes.end(), [](int64_t s) { return s == 0; })) {
    return out;
  }
  CycleFreeResult cf =
      CycleFreePathSystems(g, blocks, Rational(d, 2 * int64_t{g.n()}), seed);
  for (const std::string& note : cf.diagnostics) notes.push_back(note);
  for (size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Edge> system = cf.systems[i];
    std::sort(system.begin(), system.end());
    if (static_cast<int64_t>(system.size()) < sizes[i]) {
      throw HypothesisViolation(
          "quota shortfall: path system of size " +
          std::to_string(system.size()) + " but " + std::to_string(sizes[i]) +
          " edges are needed");
    }
    system.resize(sizes[i]);
    out[i] = std::move(system);
  }
  return out;
}

void VerifyBalance(const Digraph& g, const Partition& p,
                   const std::vector<Edge>& q) {
  Check ps = IsPathSystem(g, q);
  if (!ps) throw std::logic_error("balancing output: " + ps.reason);
  for (const Edge& e : q) {
    if (IsGoodEdge(p, e)) {
      throw std::logic_error("balancing output contains a good edge");
    }
  }
  if (!BalanceIdentityHolds(p, q)) {
    throw std::logic_error("balancing output misses the row/column identity");
  }
}

std::vector<int64_t> Imbalances(const Partition& p) {
  std::vector<int64_t> out(p.k());
  for (int i = 0; i < p.k(); ++i) out[i] = p.RowSize(i) - p.ColSize(i);
  return out;
}

int RequireRegular(const Digraph& g, bool oriented) {
  GraphProfile prof = Profile(g);
  if (!prof.regular_degree) throw InputError("balancing needs a regular graph");
  if (oriented && !prof.oriented) {
    throw InputError("nine-partition balancing needs an oriented graph");
  }
  if (g.HasLoops()) throw InputError("balancing needs a loopless graph");
  return *prof.regular_degree;
}

// Link structure of an edge list: the other edge sharing the tail and the
// other edge sharing the head, or -1.
struct Links {
  std::vector<int> by_tail;
  std::vector<int> by_head;
};

Links BuildLinks(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> tails(n), heads(n);
  for (size_t e = 0; e < edges.size(); ++e) {
    tails[edges[e].from].push_back(static_cast<int>(e));
    heads[edges[e].to].push_back(static_cast<int>(e));
  }
  Links links{std::vector<int>(edges.size(), -1),
              std::vector<int>(edges.size(), -1)};
  auto fill = [&](const std::vector<std::vector<int>>& groups,
                  std::vector<int>& link) {
    for (const auto& group : groups) {
      if (group.size() > 2) {
        throw std::logic_error("union of typed systems has semidegree above 2");
      }
      if (group.size() == 2) {
        link[group[0]] = group[1];
        link[group[1]] = group[0];
      }
    }
  };
  fill(tails, links.by_tail);
  fill(heads, links.by_head);
  return links;
}

}  // namespace

Check CheckTyped(const Partition& p, const TypedPathSystem& s) {
  if (s.row == s.col || s.row < 0 || s.col < 0 || s.row >= p.k() ||
      s.col >= p.k()) {
    return {false, "invalid type " + TypeName(s.row, s.col)};
  }
  std::vector<int> out(p.n(), 0), in(p.n(), 0);
  for (const Edge& e : s.edges) {
    if (e.from < 0 || e.to < 0 || e.from >= p.n() || e.to >= p.n()) {
      return {false, "edge endpoint out of range"};
    }
    if (p.Row(e.from) != s.row || p.Col(e.to) != s.col) {
      return {false, "edge " + std::to_string(e.from) + "->" +
                         std::to_string(e.to) + " is not of type " +
                         TypeName(s.row, s.col)};
    }
    if (++out[e.from] > 1 || ++in[e.to] > 1) {
      return {false, "edges of type " + TypeName(s.row, s.col) +
                         " do not form a path system"};
    }
  }
  if (HasDirectedCycle(p.n(), s.edges)) {
    return {false, "edges of type " + TypeName(s.row, s.col) + " contain a cycle"};
  }
  return {true, ""};
}

ThreeSetClass ClassifyThreeSet(const std::array<std::pair<int, int>, 3>& types) {
  for (const auto& [i, j] : types) {
    if (i < 0 || i >= 3 || j < 0 || j >= 3 || i == j) {
      throw InputError("type " + std::to_string(i + 1) + std::to_string(j + 1) +
                       " is not an off-diagonal type over three indices");
    }
  }
  if (types[0] == types[1] || types[0] == types[2] || types[1] == types[2]) {
    throw InputError("three-set types must be distinct");
  }
  int cyclic = 0;
  for (const auto& [i, j] : types) cyclic += IsCyclicType(i, j);
  ThreeSetClass result;
  if (cyclic == 0 || cyclic == 3) {
    result.symmetric = true;
    return result;
  }
  bool minority_cyclic = cyclic == 1;
  for (int t = 0; t < 3; ++t) {
    if (IsCyclicType(types[t].first, types[t].second) == minority_cyclic) {
      result.special = t;
    }
  }
  return result;
}

AntiDirectedDecomposition DecomposeAntiDirected(
    const std::array<TypedPathSystem, 3>& systems, const Partition& p3) {
  if (p3.k() != 3) throw InputError("three-sets need a 9-partition");
  std::array<std::pair<int, int>, 3> types;
  for (int t = 0; t < 3; ++t) {
    Check c = CheckTyped(p3, systems[t]);
    if (!c) throw InputError(c.reason);
    types[t] = {systems[t].row, systems[t].col};
  }
  AntiDirectedDecomposition result;
  result.kind = ClassifyThreeSet(types);

  std::vector<std::pair<Edge, int>> tagged;
  for (int t = 0; t < 3; ++t) {
    for (const Edge& e : systems[t].edges) tagged.push_back({e, t});
  }
  std::sort(tagged.begin(), tagged.end());
  for (size_t i = 1; i < tagged.size(); ++i) {
    if (tagged[i].first == tagged[i - 1].first) {
      throw InputError("typed path systems share an edge");
    }
  }
  std::vector<Edge> edges;
  for (const auto& [e, t] : tagged) edges.push_back(e);
  int n = p3.n();
  int m = static_cast<int>(edges.size());
  std::vector<char> used(m, 0);
  auto append = [&](DecomposedPath& path, int e) {
    used[e] = 1;
    path.edges.push_back(edges[e]);
    path.system.push_back(tagged[e].second);
  };

  if (result.kind.symmetric) {
    std::vector<int> out_edge(n, -1), in_edge(n, -1);
    for (int e = 0; e < m; ++e) {
      if (out_edge[edges[e].from] != -1 || in_edge[edges[e].to] != -1) {
        throw std::logic_error("symmetric union has semidegree above 1");
      }
      out_edge[edges[e].from] = e;
      in_edge[edges[e].to] = e;
    }
    auto walk = [&](int start, bool cycle) {
      DecomposedPath path;
      path.cycle = cycle;
      for (int e = start; e != -1 && !used[e]; e = out_edge[edges[e].to]) {
        append(path, e);
      }
      result.paths.push_back(std::move(path));
    };
    for (int e = 0; e < m; ++e) {
      if (!used[e] && in_edge[edges[e].from] == -1) walk(e, false);
    }
    for (int e = 0; e < m; ++e) {
      if (!used[e]) walk(e, true);
    }
  } else {
    Links links = BuildLinks(n, edges);
    auto degree = [&](int e) {
      return (links.by_tail[e] != -1) + (links.by_head[e] != -1);
    };
    for (int e = 0; e < m; ++e) {
      if (used[e] || degree(e) == 2) continue;
      DecomposedPath path;
      int prev = -1, cur = e;
      while (cur != -1) {
        append(path, cur);
        int next = links.by_tail[cur] != prev ? links.by_tail[cur]
                                              : links.by_head[cur];
        if (next == prev) next = -1;
        if (next != -1 && used[next]) next = -1;
        prev = cur;
        cur = next;
      }
      result.paths.push_back(std::move(path));
    }
    if (std::find(used.begin(), used.end(), 0) != used.end()) {
      throw std::logic_error("anti-symmetric union contains an anti-directed cycle");
    }
  }
  std::sort(result.paths.begin(), result.paths.end(),
            [](const DecomposedPath& a, const DecomposedPath& b) {
              return a.edges.front() < b.edges.front();
            });
  return result;
}

Check CheckDecomposition(const AntiDirectedDecomposition& d,
                         const std::array<TypedPathSystem, 3>& systems) {
  std::map<Edge, int> owner;
  for (int t = 0; t < 3; ++t) {
    for (const Edge& e : systems[t].edges) owner[e] = t;
  }
  std::set<Edge> seen;
  for (const DecomposedPath& path : d.paths) {
    if (path.edges.empty() || path.edges.size() != path.system.size()) {
      return {false, "malformed path"};
    }
    for (size_t i = 0; i < path.edges.size(); ++i) {
      auto it = owner.find(path.edges[i]);
      if (it == owner.end()) return {false, "path uses an unknown edge"};
      if (it->second != path.system[i]) return {false, "wrong system tag"};
      if (!seen.insert(path.edges[i]).second) {
        return {false, "edge used by two paths"};
      }
    }
  }
  if (seen.size() != owner.size()) return {false, "some edge is not covered"};

  if (d.kind.symmetric) {
    for (const DecomposedPath& path : d.paths) {
      for (size_t i = 0; i + 1 < path.edges.size(); ++i) {
        if (path.edges[i].to != path.edges[i + 1].from) {
          return {false, "path is not directed"};
        }
      }
      if (path.cycle && path.edges.back().to != path.edges.front().from) {
        return {false, "cycle does not close"};
      }
    }
    return {true, ""};
  }

  if (!d.kind.special) return {false, "anti-symmetric set without special element"};
  int special = *d.kind.special;
  std::map<int, std::vector<Edge>> by_tail, by_head;
  for (const auto& [e, t] : owner) {
    by_tail[e.from].push_back(e);
    by_head[e.to].push_back(e);
  }
  // The partner of e sharing its tail (or head), if any.
  auto partner = [&](const Edge& e, bool tail) -> std::optional<Edge> {
    const auto& group = tail ? by_tail[e.from] : by_head[e.to];
    for (const Edge& f : group) {
      if (f != e) return f;
    }
    return std::nullopt;
  };
  for (const DecomposedPath& path : d.paths) {
    size_t len = path.edges.size();
    if (path.cycle) return {false, "anti-directed decomposition has a cycle"};
    if (len > 3) return {false, "anti-directed path longer than three"};
    std::vector<bool> via_tail;
    for (size_t i = 0; i + 1 < len; ++i) {
      const Edge& a = path.edges[i];
      const Edge& b = path.edges[i + 1];
      if (a.from == b.from) {
        via_tail.push_back(true);
      } else if (a.to == b.to) {
        via_tail.push_back(false);
      } else {
        return {false, "consecutive edges do not share a tail or a head"};
      }
      if (i > 0 && via_tail[i] == via_tail[i - 1]) {
        return {false, "path is not anti-directed"};
      }
    }
    // Maximality at both ends.
    if (len == 1) {
      if (partner(path.edges[0], true) || partner(path.edges[0], false)) {
        return {false, "single-edge path is not maximal"};
      }
    } else {
      if (partner(path.edges.front(), !via_tail.front()) ||
          partner(path.edges.back(), !via_tail.back())) {
        return {false, "anti-directed path is not maximal"};
      }
    }
    int specials = static_cast<int>(
        std::count(path.system.begin(), path.system.end(), special));
    if (len == 2 && specials != 1) {
      return {false, "two-edge path without exactly one special edge"};
    }
    if (len == 3) {
      std::set<int> distinct(path.system.begin(), path.system.end());
      if (distinct.size() != 3 || path.system[1] != special) {
        return {false, "three-edge path must use every system with the special one in the middle"};
      }
    }
  }
  return {true, ""};
}

std::array<int, 5> ChooseSigns(int t, const std::array<int, 5>& x) {
  if (t != 0 && t != 1) throw InputError("t must be a bit");
  for (int v : x) {
    if (v != 0 && v != 1) throw InputError("sign inputs must be bits");
  }
  if ((x[0] + x[1] + x[2]) % 2 != t || (x[0] + x[3] + x[4]) % 2 != t) {
    throw InputError("sign inputs violate the parity precondition");
  }
  for (int mask = 0; mask < 32; ++mask) {
    std::array<int, 5> m;
    for (int i = 0; i < 5; ++i) m[i] = ((mask >> (4 - i)) & 1) ? -1 : 1;
    if (m[0] * x[0] + m[1] * x[1] + m[2] * x[2] == t &&
        m[0] * x[0] + m[3] * x[3] + m[4] * x[4] == t) {
      return m;
    }
  }
  throw std::logic_error("no sign vector found");
}

std::vector<std::vector<int64_t>> TypeCounts(const Partition& p,
                                             const std::vector<Edge>& edges) {
  std::vector<std::vector<int64_t>> a(p.k(), std::vector<int64_t>(p.k(), 0));
  for (const Edge& e : edges) {
    int i = p.Row(e.from), j = p.Col(e.to);
    if (i != j) ++a[i][j];
  }
  return a;
}

bool BalanceIdentityHolds(const Partition& p, const std::vector<Edge>& edges) {
  auto a = TypeCounts(p, edges);
  std::vector<int64_t> target = Imbalances(p);
  for (int i = 0; i < p.k(); ++i) {
    int64_t net = 0;
    for (int j = 0; j < p.k(); ++j) net += a[i][j] - a[j][i];
    if (net != target[i]) return false;
  }
  return true;
}

BalanceResult BalanceNine(const Digraph& g, const Partition& p3,
                          uint64_t seed) {
  if (p3.k() != 3) throw InputError("expected a 9-partition");
  if (p3.n() != g.n()) throw InputError("partition size does not match graph");
  int d = RequireRegular(g, true);
  BalanceResult result;
  result.targets = Imbalances(p3);
  result.index_map = {0, 1, 2};
  result.edge_bound = d == 0 ? 0 : FloorDiv(2 * BadEdgeCount(g, p3), d);
  auto finish = [&]() {
    std::sort(result.q.begin(), result.q.end());
    VerifyBalance(g, p3, result.q);
    result.a = TypeCounts(p3, result.q);
    return result;
  };
  if (std::all_of(result.targets.begin(), result.targets.end(),
                  [](int64_t v) { return v == 0; })) {
    result.route = "balanced";
    return finish();
  }
  if (d == 0) throw HypothesisViolation("unbalanced partition of an empty graph");

  // Relabel (and possibly reverse) so that n_1, n_2 >= 0 and m_12 >= 0.
  // Swapping indices 1 and 2 negates m_12, so one of the two orders works
  // whenever n_1, n_2 >= 0 is reachable.
  auto cross = [](const Digraph& h, const Partition& part, int i, int j) {
    int64_t count = 0;
    for (const Edge& e : h.Edges()) {
      if (part.Row(e.from) == i && part.Col(e.to) == j) ++count;
    }
    return count;
  };
  std::vector<int> perm;
  bool transpose = false;
  bool found = false;
  for (int tr = 0; tr < 2 && !found; ++tr) {
    std::vector<int> cand = {0, 1, 2};
    do {
      int sign = tr ? -1 : 1;
      std::vector<int64_t> moved(3);
      for (int a = 0; a < 3; ++a) moved[cand[a]] = sign * result.targets[a];
      if (moved[0] < 0 || moved[1] < 0) continue;
      const Digraph& h = tr ? g.Transposed() : g;
      Partition part = (tr ? p3.Transposed() : p3).Relabeled(cand);
      if (cross(h, part, 0, 1) < cross(h, part, 1, 0)) continue;
      perm = cand;
      transpose = tr == 1;
      found = true;
      break;
    } while (std::next_permutation(cand.begin(), cand.end()));
  }
  if (!found) throw std::logic_error("no relabelling makes n_1, n_2, m_12 >= 0");
  result.index_map = perm;
  result.reversed = transpose;
  Digraph wg = transpose ? g.Transposed() : g;
  Partition wp = (transpose ? p3.Transposed() : p3).Relabeled(perm);
  std::vector<int64_t> nw = Imbalances(wp);
  int64_t n1 = nw[0], n2 = nw[1];

  std::vector<std::vector<std::vector<Edge>>> block(
      3, std::vector<std::vector<Edge>>(3));
  for (const Edge& e : wg.Edges()) {
    int i = wp.Row(e.from), j = wp.Col(e.to);
    if (i != j) block[i][j].push_back(e);
  }
  auto m = [&](int i, int j) {
    return static_cast<int64_t>(block[i][j].size()) -
           static_cast<int64_t>(block[j][i].size());
  };
  int64_t m12 = m(0, 1), m31 = m(2, 0);
  int64_t s = FloorDiv(m12, d);
  int64_t floor2x = FloorDiv(2 * m12, d);
  int64_t floor_neg2x = FloorDiv(-2 * m12, d);
  result.notes.push_back("x = " + Rational(m12, d).ToString());

  std::vector<Edge> q;
  if (m31 >= 0) {
    result.route = "symmetric";
    auto chosen = SelectWithQuotas(wg, d, {block[1][2], block[2][0], block[0][1]},
                                   {s + n2, s - n1, s}, seed, result.notes);
    for (const auto& part : chosen) q.insert(q.end(), part.begin(), part.end());
  } else {
    result.route = "anti-directed";
    // B = type 23, A = type 13 (special), C = type 12.
    auto chosen = SelectWithQuotas(
        wg, d, {block[1][2], block[0][2], block[0][1]},
        {floor2x + 2 * n2, 2 * n1 + floor_neg2x, floor2x}, seed, result.notes);
    std::array<TypedPathSystem, 3> systems = {
        TypedPathSystem{chosen[0], 1, 2}, TypedPathSystem{chosen[1], 0, 2},
        TypedPathSystem{chosen[2], 0, 1}};
    AntiDirectedDecomposition dec = DecomposeAntiDirected(systems, wp);
    Check c = CheckDecomposition(dec, systems);
    if (!c) throw std::logic_error("anti-directed decomposition: " + c.reason);
    constexpr int kB = 0, kA = 1, kC = 2;
    enum Class { kABC, kAB, kAC, kOnlyA, kOnlyB, kOnlyC };
    std::array<std::vector<const DecomposedPath*>, 6> cls;
    for (const DecomposedPath& path : dec.paths) {
      std::set<int> sys(path.system.begin(), path.system.end());
      if (path.edges.size() == 3) {
        cls[kABC].push_back(&path);
      } else if (path.edges.size() == 2) {
        cls[sys.count(kB) ? kAB : kAC].push_back(&path);
      } else {
        int t = path.system[0];
        cls[t == kA ? kOnlyA : t == kB ? kOnlyB : kOnlyC].push_back(&path);
      }
    }
    auto size = [&](int c) { return static_cast<int64_t>(cls[c].size()); };
    auto parity = [&](int c) { return static_cast<int>(size(c) % 2); };
    int t_bit = static_cast<int>(-floor2x - floor_neg2x);
    std::array<int, 5> signs = ChooseSigns(
        t_bit, {parity(kOnlyA), parity(kAB), parity(kOnlyC), parity(kAC),
                parity(kOnlyB)});
    int i_a = signs[0], i_ab = signs[1], i_c = signs[2], i_ac = signs[3],
        i_b = signs[4];
    auto edge_of = [](const DecomposedPath* path, int system) {
      for (size_t i = 0; i < path->edges.size(); ++i) {
        if (path->system[i] == system) return path->edges[i];
      }
      throw std::logic_error("path lacks an edge of the requested system");
    };
    auto take = [&](int c, int sign) { return (size(c) + sign * parity(c)) / 2; };
    int64_t abc_first = take(kABC, 1), ab_first = take(kAB, i_ab),
            ac_first = take(kAC, i_ac);
    for (int64_t i = 0; i < size(kABC); ++i) {
      if (i < abc_first) {
        q.push_back(edge_of(cls[kABC][i], kA));
      } else {
        q.push_back(edge_of(cls[kABC][i], kB));
        q.push_back(edge_of(cls[kABC][i], kC));
      }
    }
    for (int64_t i = 0; i < size(kAB); ++i) {
      q.push_back(edge_of(cls[kAB][i], i < ab_first ? kA : kB));
    }
    for (int64_t i = 0; i < size(kAC); ++i) {
      q.push_back(edge_of(cls[kAC][i], i < ac_first ? kA : kC));
    }
    std::array<std::pair<int, int>, 3> singles = {
        std::pair{kOnlyA, i_a}, std::pair{kOnlyB, i_b}, std::pair{kOnlyC, i_c}};
    for (const auto& [c, sign] : singles) {
      for (int64_t i = 0; i < take(c, sign); ++i) {
        q.push_back(cls[c][i]->edges[0]);
      }
    }
    result.notes.push_back(
        "classes ABC/AB/AC/A/B/C = " + std::to_string(size(kABC)) + "/" +
        std::to_string(size(kAB)) + "/" + std::to_string(size(kAC)) + "/" +
        std::to_string(size(kOnlyA)) + "/" + std::to_string(size(kOnlyB)) +
        "/" + std::to_string(size(kOnlyC)));
  }
  for (Edge& e : q) {
    if (transpose) std::swap(e.from, e.to);
  }
  result.q = std::move(q);
  return finish();
}

BalanceResult BalanceFour(const Digraph& g, const Partition& p2,
                          bool well_connected, uint64_t seed) {
  if (p2.k() != 2) throw InputError("expected a 4-partition");
  if (p2.n() != g.n()) throw InputError("partition size does not match graph");
  int d = RequireRegular(g, false);
  BalanceResult result;
  result.index_map = {0, 1};
  if (p2.CellSize(1, 0) > p2.CellSize(0, 1)) result.index_map = {1, 0};
  bool flipped = result.index_map[0] == 1;
  Partition wp = flipped ? p2.Relabeled(result.index_map) : p2;
  Partition final_partition = p2;
  int v12 = wp.CellSize(0, 1), v21 = wp.CellSize(1, 0);
  int64_t r = v12 - v21;
  result.edge_bound = r;

  auto crossing_pair = [&](const Partition& part) {
    if (!well_connected) {
      throw HypothesisViolation(
          "V12 and V21 are empty and the graph is not known to be strongly "
          "well-connected");
    }
    auto pair = FindNonIncidentCrossingPair(g, part.CellSet(0, 0));
    if (!pair) {
      throw HypothesisViolation(
          "no two non-incident edges cross between V11 and V22 in opposite "
          "directions, so the graph is not strongly well-connected");
    }
    result.edge_bound = 2;
    return std::vector<Edge>{pair->first, pair->second};
  };
  auto cross_block = [&]() {
    return EdgesBetween(g, wp.RowSet(0), wp.ColSet(1));
  };

  if (v12 == 0 && v21 == 0) {
    result.route = "empty";
    result.q = crossing_pair(wp);
  } else if (v21 > 0) {
    result.route = "quota";
    auto chosen = SelectWithQuotas(g, d, {cross_block()}, {r}, seed, result.notes);
    result.q = chosen[0];
  } else if (v12 >= 2) {
    result.route = "long-path";
    auto chosen =
        SelectWithQuotas(g, d, {cross_block()}, {2 * r}, seed, result.notes);
    const std::vector<Edge>& wide = chosen[0];
    std::vector<std::vector<int>> paths = PathDecomposition(wide);
    const std::vector<int>* best = nullptr;
    for (const auto& path : paths) {
      if (wp.Cell(path.front()) != 0 || wp.Cell(path.back()) != 3) continue;
      if (best == nullptr || path.size() < best->size()) best = &path;
    }
    if (best == nullptr || static_cast<int64_t>(best->size()) - 1 > r) {
      throw std::logic_error("no short V11-to-V22 path among the selected edges");
    }
    std::set<Edge> picked;
    for (size_t i = 0; i + 1 < best->size(); ++i) {
      picked.insert({(*best)[i], (*best)[i + 1]});
    }
    for (const Edge& e : wide) {
      if (static_cast<int64_t>(picked.size()) >= r) break;
      picked.insert(e);
    }
    result.q.assign(picked.begin(), picked.end());
  } else {
    int x = wp.CellMembers(0, 1).front();
    int in_11 = 0, out_22 = 0;
    for (int u : g.In(x)) in_11 += wp.Cell(u) == 0;
    for (int w : g.Out(x)) out_22 += wp.Cell(w) == 3;
    if (2 * in_11 == d && 2 * out_22 == d) {
      result.route = "single-moved";
      Partition moved = wp;
      moved.Move(x, 0, 0);
      result.q = crossing_pair(moved);
      final_partition = flipped ? moved.Relabeled(result.index_map) : moved;
      result.partition = final_partition;
      result.notes.push_back("moved vertex " + std::to_string(x) + " into V11");
    } else {
      result.route = "single";
      auto edges = EdgesBetween(g, wp.CellSet(0, 0), wp.CellSet(1, 1));
      if (edges.empty()) {
        throw HypothesisViolation("no edge from V11 to V22 for the single-vertex case");
      }
      result.q = {edges.front()};
    }
  }
  std::sort(result.q.begin(), result.q.end());
  VerifyBalance(g, final_partition, result.q);
  result.targets = Imbalances(final_partition);
  result.a = TypeCounts(final_partition, result.q);
  return result;
}

}  // namespace hamlab
