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

#include "hamlab/matchings.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hamlab/edge_coloring.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/random.hpp"

namespace hamlab {
namespace {

std::string EdgeText(const Edge& e) {
  return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

std::vector<Edge> NonLoopEdges(const Digraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.Edges()) {
    if (e.from != e.to) out.push_back(e);
  }
  return out;
}

// Kuhn's augmenting-path matching from the left side; match_right[b] holds
// the left index matched to b.
class BipartiteMatcher {
 public:
  BipartiteMatcher(const std::vector<std::vector<int>>& adj, int right_size)
      : adj_(adj), match_right_(right_size, -1) {}

  int Solve() {
    int matched = 0;
    for (size_t a = 0; a < adj_.size(); ++a) {
      visited_.assign(match_right_.size(), 0);
      if (Augment(static_cast<int>(a))) ++matched;
    }
    return matched;
  }

  const std::vector<int>& match_right() const { return match_right_; }

 private:
  bool Augment(int a) {
    for (int b : adj_[a]) {
      if (visited_[b]) continue;
      visited_[b] = 1;
      if (match_right_[b] == -1 || Augment(match_right_[b])) {
        match_right_[b] = a;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> match_right_;
  std::vector<char> visited_;
};

}  // namespace

BoundedMatchingResult BoundedMatching(const Digraph& g, const Rational& d,
                                      const Rational& theta) {
  if (!(Rational(0) < theta && theta < Rational(1))) {
    throw InputError("bounded matching needs 0 < theta < 1");
  }
  int n = g.n();
  for (int v = 0; v < n; ++v) {
    int deg = std::max(g.OutDegree(v), g.InDegree(v));
    if (d < Rational(deg)) {
      throw InputError("vertex " + std::to_string(v) +
                       " has semidegree above the bound");
    }
  }
  Rational threshold = theta * d;
  BoundedMatchingResult result{{}, VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) {
    if (threshold.TimesLeq(1, g.OutDegree(v))) result.w_plus.Insert(v);
    if (threshold.TimesLeq(1, g.InDegree(v))) result.w_minus.Insert(v);
  }
  std::vector<Edge> edges = NonLoopEdges(g);
  int64_t e_g = static_cast<int64_t>(edges.size());
  if (threshold >= Rational(1)) {
    Multigraph h{n, {}};
    std::vector<Edge> kept;
    for (const Edge& e : edges) {
      if (result.w_plus.Contains(e.from) || result.w_minus.Contains(e.to)) {
        continue;
      }
      h.edges.push_back({e.from, e.to});
      kept.push_back(e);
    }
    if (!kept.empty()) {
      EdgeColoring coloring = EdgeColorMultigraph(h);
      std::vector<int> class_size(coloring.palette, 0);
      for (int c : coloring.colors) ++class_size[c];
      int best = static_cast<int>(
          std::max_element(class_size.begin(), class_size.end()) -
          class_size.begin());
      int64_t cap = (Rational(e_g) / threshold).FloorTimes(1);
      for (size_t i = 0; i < kept.size(); ++i) {
        if (coloring.colors[i] != best) continue;
        if (static_cast<int64_t>(result.matching.size()) >= cap) break;
        result.matching.push_back(kept[i]);
      }
    }
  }
  // Otherwise every edge tail has out-degree >= 1 >= theta*d, so W+ alone
  // carries (i) and M stays empty.
  Check check = CheckBoundedMatching(g, d, theta, result);
  if (!check) throw HypothesisViolation("bounded matching: " + check.reason);
  return result;
}

Check CheckBoundedMatching(const Digraph& g, const Rational& d,
                           const Rational& theta,
                           const BoundedMatchingResult& result) {
  int n = g.n();
  Rational threshold = theta * d;
  if (result.w_plus.universe() != n || result.w_minus.universe() != n) {
    return {false, "vertex set universe mismatch"};
  }
  for (int v = 0; v < n; ++v) {
    if (result.w_plus.Contains(v) != threshold.TimesLeq(1, g.OutDegree(v)) ||
        result.w_minus.Contains(v) != threshold.TimesLeq(1, g.InDegree(v))) {
      return {false, "high-degree set wrong at vertex " + std::to_string(v)};
    }
  }
  std::vector<char> used(n, 0);
  for (const Edge& e : result.matching) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n ||
        e.from == e.to || !g.HasEdge(e.from, e.to)) {
      return {false, "edge " + EdgeText(e) + " is not a graph edge"};
    }
    if (used[e.from] || used[e.to]) {
      return {false, "edges share a vertex at " + EdgeText(e)};
    }
    used[e.from] = used[e.to] = 1;
    if (result.w_plus.Contains(e.from) || result.w_minus.Contains(e.to)) {
      return {false, "edge " + EdgeText(e) + " touches a high-degree set"};
    }
  }
  int64_t e_g = static_cast<int64_t>(NonLoopEdges(g).size());
  int64_t e_m = static_cast<int64_t>(result.matching.size());
  int64_t w = result.w_plus.Size() + result.w_minus.Size();
  // (i): (4*theta*e(M) + |W|) * d >= e(G).
  if ((Rational(4) * theta * Rational(e_m) + Rational(w)) * d < Rational(e_g)) {
    return {false, "size inequality (i) fails"};
  }
  // (iii): e(M) * theta * d <= e(G).
  if (Rational(e_g) < Rational(e_m) * threshold) {
    return {false, "matching exceeds e(G)/(theta*d)"};
  }
  return {true, ""};
}

JointMatchingResult JointMatching(const std::vector<std::vector<Edge>>& matchings,
                                  int r, uint64_t seed, int retry_cap) {
  if (r < 0) throw InputError("degree bound must be non-negative");
  int n = 0;
  for (const auto& m : matchings) {
    for (const Edge& e : m) {
      if (e.from < 0 || e.to < 0) throw InputError("negative vertex id");
      n = std::max({n, e.from + 1, e.to + 1});
    }
  }
  std::vector<Edge> uni;
  for (size_t i = 0; i < matchings.size(); ++i) {
    std::set<int> seen;
    for (const Edge& e : matchings[i]) {
      if (e.from == e.to || !seen.insert(e.from).second ||
          !seen.insert(e.to).second) {
        throw InputError("input " + std::to_string(i) + " is not a matching");
      }
      uni.push_back(e);
    }
  }
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  int m = static_cast<int>(uni.size());
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < m; ++e) {
    incident[uni[e].from].push_back(e);
    incident[uni[e].to].push_back(e);
  }
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(incident[v].size()) > r) {
      throw InputError("union has degree above r at vertex " + std::to_string(v));
    }
  }
  int k = static_cast<int>(matchings.size());
  std::vector<std::vector<int>> owners(m);  // indices i with edge in M_i
  std::vector<int64_t> need(k);
  int64_t denom = static_cast<int64_t>(r) * r + 1;
  for (int i = 0; i < k; ++i) {
    int64_t size = static_cast<int64_t>(matchings[i].size());
    need[i] = (size + denom - 1) / denom;
    for (const Edge& e : matchings[i]) {
      int idx = static_cast<int>(std::lower_bound(uni.begin(), uni.end(), e) -
                                 uni.begin());
      owners[idx].push_back(i);
    }
  }
  auto meets = [&](const std::vector<char>& chosen) {
    std::vector<int64_t> count(k, 0);
    for (int e = 0; e < m; ++e) {
      if (!chosen[e]) continue;
      for (int i : owners[e]) ++count[i];
    }
    for (int i = 0; i < k; ++i) {
      if (count[i] < need[i]) return false;
    }
    return true;
  };
  auto collect = [&](const std::vector<char>& chosen) {
    std::vector<Edge> out;
    for (int e = 0; e < m; ++e) {
      if (chosen[e]) out.push_back(uni[e]);
    }
    return out;
  };

  JointMatchingResult result;
  Rng rng(seed);
  std::vector<char> marked(m);
  for (int attempt = 1; attempt <= retry_cap; ++attempt) {
    std::fill(marked.begin(), marked.end(), 0);
    for (int v = 0; v < n; ++v) {
      if (incident[v].empty()) continue;
      int keep = incident[v][rng.Below(incident[v].size())];
      for (int e : incident[v]) {
        if (e != keep) marked[e] = 1;
      }
    }
    std::vector<char> chosen(m);
    for (int e = 0; e < m; ++e) chosen[e] = !marked[e];
    if (meets(chosen)) {
      result.matching = collect(chosen);
      result.attempts = attempt;
      return result;
    }
  }
  result.attempts = retry_cap;
  if (m > kJointMatchingExactMaxEdges) {
    throw HypothesisViolation("joint matching quotas not met after " +
                              std::to_string(retry_cap) + " rounds");
  }
  // Exact search: include/exclude each union edge in order, pruning when a
  // quota can no longer be reached.
  std::vector<std::vector<int64_t>> remaining(m + 1, std::vector<int64_t>(k, 0));
  for (int e = m - 1; e >= 0; --e) {
    remaining[e] = remaining[e + 1];
    for (int i : owners[e]) ++remaining[e][i];
  }
  std::vector<char> chosen(m, 0), used(n, 0);
  std::vector<int64_t> count(k, 0);
  std::function<bool(int)> search = [&](int e) {
    for (int i = 0; i < k; ++i) {
      if (count[i] + remaining[e][i] < need[i]) return false;
    }
    if (e == m) return true;
    const Edge& edge = uni[e];
    if (!used[edge.from] && !used[edge.to]) {
      chosen[e] = used[edge.from] = used[edge.to] = 1;
      for (int i : owners[e]) ++count[i];
      if (search(e + 1)) return true;
      for (int i : owners[e]) --count[i];
      chosen[e] = used[edge.from] = used[edge.to] = 0;
    }
    return search(e + 1);
  };
  if (!search(0)) {
    throw HypothesisViolation("no matching in the union meets every quota");
  }
  result.matching = collect(chosen);
  result.exact_fallback = true;
  return result;
}

Rational ChooseTheta(int n, int64_t edges, int k, const Rational& alpha,
                     std::vector<std::string>* diagnostics) {
  if (n <= 0 || k <= 0) return Rational(1, 2);
  int64_t kk = static_cast<int64_t>(k) * k * k + k;
  Rational upper(1, 8 * k * kk * kk);
  Rational gamma(edges, static_cast<int64_t>(n) * n);
  Rational lower = SqrtFloor(Rational(8) * gamma, 1'000'000) / alpha;
  if (diagnostics != nullptr && lower >= upper) {
    diagnostics->push_back("theta interval empty: lower " + lower.ToString() +
                           " >= upper " + upper.ToString());
  }
  Rational geometric = SqrtFloor(lower * upper, 1'000'000);
  Rational theta = std::min(upper / Rational(2), std::max(lower * Rational(2), geometric));
  if (theta <= Rational(0)) theta = upper / Rational(2);
  return theta;
}

namespace {

// Matching route: bounded matchings, a joint matching, trimming to the
// quotas and pendant edges from high-degree vertices to fresh vertices.
// Throws HypothesisViolation when a step cannot be completed.
void SelectByMatchings(const std::vector<Digraph>& parts, int n,
                       const Rational& alpha_n, uint64_t seed,
                       CycleFreeResult& result) {
  int k = static_cast<int>(parts.size());
  const Rational& theta = result.theta;
  std::vector<BoundedMatchingResult> bounded;
  std::vector<int> in_r;
  for (int i = 0; i < k; ++i) {
    bounded.push_back(BoundedMatching(parts[i], alpha_n, theta));
    if (!(Rational(4) * theta * Rational(static_cast<int64_t>(
                                    bounded[i].matching.size())) <
          Rational(1))) {
      in_r.push_back(i);
    }
  }
  std::vector<std::vector<Edge>> joint_part(k);
  if (!in_r.empty()) {
    std::vector<std::vector<Edge>> chosen;
    for (int i : in_r) chosen.push_back(bounded[i].matching);
    try {
      JointMatchingResult joint = JointMatching(chosen, k, seed);
      std::set<Edge> picked(joint.matching.begin(), joint.matching.end());
      for (int i : in_r) {
        for (const Edge& e : bounded[i].matching) {
          if (picked.count(e)) joint_part[i].push_back(e);
        }
      }
    } catch (const HypothesisViolation& err) {
      result.diagnostics.push_back(std::string("joint matching failed: ") +
                                   err.what());
    }
  }

  // Trim so that e(N_i) + |W_i+| + |W_i-| equals the quota, dropping
  // low-degree high-degree-set members first.
  std::vector<std::vector<int>> w_plus(k), w_minus(k);
  for (int i = 0; i < k; ++i) {
    int64_t have = static_cast<int64_t>(joint_part[i].size()) +
                   bounded[i].w_plus.Size() + bounded[i].w_minus.Size();
    if (have < result.quotas[i]) {
      throw HypothesisViolation("subgraph " + std::to_string(i) +
                                " cannot reach its quota");
    }
    int64_t excess = have - result.quotas[i];
    // (degree, vertex, side) with side 0 for W+ and 1 for W-.
    std::vector<std::tuple<int, int, int>> members;
    bounded[i].w_plus.ForEach(
        [&](int v) { members.emplace_back(parts[i].OutDegree(v), v, 0); });
    bounded[i].w_minus.ForEach(
        [&](int v) { members.emplace_back(parts[i].InDegree(v), v, 1); });
    std::sort(members.begin(), members.end());
    size_t drop = static_cast<size_t>(std::min<int64_t>(excess, members.size()));
    excess -= static_cast<int64_t>(drop);
    for (size_t t = drop; t < members.size(); ++t) {
      auto [deg, v, side] = members[t];
      (side == 0 ? w_plus[i] : w_minus[i]).push_back(v);
    }
    std::sort(w_plus[i].begin(), w_plus[i].end());
    std::sort(w_minus[i].begin(), w_minus[i].end());
    joint_part[i].resize(joint_part[i].size() - static_cast<size_t>(excess));
  }

  std::vector<char> in_u(n, 0);
  for (int i = 0; i < k; ++i) {
    for (const Edge& e : joint_part[i]) in_u[e.from] = in_u[e.to] = 1;
    for (int v : w_plus[i]) in_u[v] = 1;
    for (int v : w_minus[i]) in_u[v] = 1;
  }
  for (int j = 0; j < k; ++j) {
    // Left side: W+ members then W- members; right side: vertices outside U.
    std::vector<int> fresh, fresh_index(n, -1);
    for (int v = 0; v < n; ++v) {
      if (!in_u[v]) {
        fresh_index[v] = static_cast<int>(fresh.size());
        fresh.push_back(v);
      }
    }
    std::vector<std::vector<int>> adj;
    for (int a : w_plus[j]) {
      adj.emplace_back();
      for (int b : parts[j].Out(a)) {
        if (fresh_index[b] != -1) adj.back().push_back(fresh_index[b]);
      }
    }
    for (int a : w_minus[j]) {
      adj.emplace_back();
      for (int b : parts[j].In(a)) {
        if (fresh_index[b] != -1) adj.back().push_back(fresh_index[b]);
      }
    }
    BipartiteMatcher matcher(adj, static_cast<int>(fresh.size()));
    if (matcher.Solve() != static_cast<int>(adj.size())) {
      throw HypothesisViolation("subgraph " + std::to_string(j) +
                                ": high-degree vertices lack fresh neighbours");
    }
    std::vector<Edge>& q = result.systems[j];
    q = joint_part[j];
    int plus_count = static_cast<int>(w_plus[j].size());
    for (size_t b = 0; b < fresh.size(); ++b) {
      int a = matcher.match_right()[b];
      if (a == -1) continue;
      if (a < plus_count) {
        q.push_back({w_plus[j][a], fresh[b]});
      } else {
        q.push_back({fresh[b], w_minus[j][a - plus_count]});
      }
    }
    std::sort(q.begin(), q.end());
    for (const Edge& e : q) in_u[e.from] = in_u[e.to] = 1;
  }

}

// Greedy route: one pass over all (subgraph, edge) pairs in random order per
// restart. An edge joins Q_i while Q_i is short of its quota, keeps Q_i a
// path system and closes no cycle in the union.
bool SelectGreedily(const std::vector<Digraph>& parts, int n, uint64_t seed,
                    int restarts, CycleFreeResult& result) {
  int k = static_cast<int>(parts.size());
  std::vector<std::pair<int, Edge>> pool;
  for (int i = 0; i < k; ++i) {
    for (const Edge& e : parts[i].Edges()) pool.push_back({i, e});
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < restarts; ++attempt) {
    rng.Shuffle(pool);
    std::vector<std::vector<Edge>> q(k);
    std::vector<std::vector<char>> has_out(k, std::vector<char>(n, 0));
    std::vector<std::vector<char>> has_in(k, std::vector<char>(n, 0));
    std::vector<std::vector<int>> out(n);
    auto reaches = [&](int from, int target) {
      std::vector<char> seen(n, 0);
      std::vector<int> stack{from};
      seen[from] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == target) return true;
        for (int w : out[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      return false;
    };
    for (const auto& [i, e] : pool) {
      if (static_cast<int64_t>(q[i].size()) >= result.quotas[i]) continue;
      if (has_out[i][e.from] || has_in[i][e.to]) continue;
      if (reaches(e.to, e.from)) continue;
      q[i].push_back(e);
      has_out[i][e.from] = has_in[i][e.to] = 1;
      out[e.from].push_back(e.to);
    }
    bool done = true;
    for (int i = 0; i < k; ++i) {
      done = done && static_cast<int64_t>(q[i].size()) == result.quotas[i];
    }
    if (done) {
      for (auto& system : q) std::sort(system.begin(), system.end());
      result.systems = std::move(q);
      return true;
    }
  }
  return false;
}

}  // namespace

CycleFreeResult CycleFreePathSystems(const Digraph& g,
                                     const std::vector<std::vector<Edge>>& subgraphs,
                                     const Rational& alpha, uint64_t seed) {
  if (alpha <= Rational(0)) throw InputError("alpha must be positive");
  int n = g.n();
  int k = static_cast<int>(subgraphs.size());
  CycleFreeResult result;
  result.systems.assign(k, {});
  result.quotas.assign(k, 0);
  std::set<Edge> all;
  std::vector<Digraph> parts;
  int64_t total = 0;
  Rational alpha_n = alpha * Rational(n);
  for (int i = 0; i < k; ++i) {
    for (const Edge& e : subgraphs[i]) {
      if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n ||
          !g.HasEdge(e.from, e.to)) {
        throw InputError("edge " + EdgeText(e) + " is not in the graph");
      }
      if (e.from == e.to) throw InputError("subgraphs must be loopless");
      if (!all.insert(e).second) {
        throw InputError("subgraphs share edge " + EdgeText(e));
      }
    }
    parts.emplace_back(n, subgraphs[i]);
    for (int v = 0; v < n; ++v) {
      int deg = std::max(parts[i].OutDegree(v), parts[i].InDegree(v));
      if (alpha.TimesLess(n, deg)) {
        throw InputError("subgraph " + std::to_string(i) +
                         " has semidegree above alpha*n");
      }
    }
    total += parts[i].EdgeCount();
    if (n > 0) {
      result.quotas[i] = (Rational(parts[i].EdgeCount()) / alpha_n).FloorTimes(1);
    }
  }
  if (n == 0 || total == 0) {
    result.theta = ChooseTheta(n, total, k, alpha, nullptr);
    return result;
  }
  result.theta = ChooseTheta(n, total, k, alpha, &result.diagnostics);

  try {
    SelectByMatchings(parts, n, alpha_n, seed, result);
    result.method = "matchings";
  } catch (const HypothesisViolation& err) {
    result.diagnostics.push_back(std::string("matching route failed: ") + err.what());
    if (!SelectGreedily(parts, n, seed, kCycleFreeGreedyRestarts, result)) {
      throw HypothesisViolation("no cycle-free selection meets the quotas");
    }
    result.method = "greedy";
  }

  std::vector<Edge> union_edges;
  for (int i = 0; i < k; ++i) {
    Check path = IsPathSystem(g, result.systems[i]);
    if (!path || static_cast<int64_t>(result.systems[i].size()) != result.quotas[i]) {
      throw std::logic_error("cycle-free selection produced a bad system");
    }
    union_edges.insert(union_edges.end(), result.systems[i].begin(),
                       result.systems[i].end());
  }
  if (HasDirectedCycle(n, union_edges)) {
    throw std::logic_error("cycle-free selection produced a cycle");
  }
  return result;
}

}  // namespace hamlab
