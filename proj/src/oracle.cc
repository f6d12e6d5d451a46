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

#include "hamlab/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "hamlab/connectivity.hpp"
#include "hamlab/errors.hpp"

namespace hamlab {
namespace {

constexpr int64_t kQuickSearchBudget = 20'000;

// Fixed-width set over at most 256 vertices for the search hot loop.
struct Bits {
  std::array<uint64_t, 4> w{};

  void Set(int v) { w[v >> 6] |= uint64_t{1} << (v & 63); }
  void Reset(int v) { w[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  bool Test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
  bool Any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }
  int Count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
           std::popcount(w[3]);
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits& operator|=(const Bits& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits Minus(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  bool operator==(const Bits& o) const { return w == o.w; }
  template <typename F>
  void ForEach(F&& f) const {
    for (int i = 0; i < 4; ++i) {
      for (uint64_t b = w[i]; b; b &= b - 1) f(i * 64 + std::countr_zero(b));
    }
  }
};

class Search {
 public:
  Search(const Digraph& g, int64_t budget) : n_(g.n()), budget_(budget) {
    out_.resize(n_);
    in_.resize(n_);
    for (int u = 0; u < n_; ++u) {
      for (int v : g.Out(u)) {
        if (u == v) continue;
        out_[u].Set(v);
        in_[v].Set(u);
      }
    }
  }

  OracleResult Run() {
    OracleResult result;
    result.method = "branch_and_bound";
    for (int v = 1; v < n_; ++v) unvisited_.Set(v);
    path_.push_back(0);
    bool found = Extend(0);
    result.nodes = nodes_;
    if (found) {
      result.outcome = Outcome::kFound;
      result.cycle = path_;
    } else {
      result.outcome = aborted_ ? Outcome::kUnknown : Outcome::kNotHamiltonian;
    }
    return result;
  }

 private:
  // Vertices reachable from `start` inside `within` along `adj` edges.
  Bits Reach(const Bits& start, const Bits& within,
             const std::vector<Bits>& adj) const {
    Bits seen = start & within;
    Bits frontier = seen;
    while (frontier.Any()) {
      Bits next;
      frontier.ForEach([&](int v) { next |= adj[v]; });
      next = (next & within).Minus(seen);
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool Extend(int cur) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (!unvisited_.Any()) return out_[cur].Test(0);

    Bits avail_in = unvisited_;
    avail_in.Set(cur);
    Bits avail_out = unvisited_;
    avail_out.Set(0);
    if (!(in_[0] & unvisited_).Any()) return false;
    int forced = -1;
    bool dead = false;
    unvisited_.ForEach([&](int w) {
      if (dead) return;
      if (!(out_[w] & avail_out).Any()) {
        dead = true;
        return;
      }
      Bits preds = in_[w] & avail_in;
      int count = preds.Count();
      if (count == 0) {
        dead = true;
      } else if (count == 1 && preds.Test(cur)) {
        if (forced != -1) dead = true;
        forced = w;
      }
    });
    if (dead) return false;

    Bits forward = Reach(out_[cur], unvisited_, out_);
    if (!(forward == unvisited_)) return false;
    Bits backward = Reach(in_[0], unvisited_, in_);
    if (!(backward == unvisited_)) return false;

    std::vector<int> candidates;
    if (forced != -1) {
      candidates.push_back(forced);
    } else {
      (out_[cur] & unvisited_).ForEach([&](int v) { candidates.push_back(v); });
    }
    for (int next : candidates) {
      unvisited_.Reset(next);
      path_.push_back(next);
      if (Extend(next)) return true;
      path_.pop_back();
      unvisited_.Set(next);
      if (aborted_) return false;
    }
    return false;
  }

  int n_;
  int64_t budget_;
  int64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Bits> out_, in_;
  Bits unvisited_;
  std::vector<int> path_;
};

OracleResult Trivial(const Digraph& g, const char* method) {
  OracleResult r;
  r.method = method;
  if (g.n() == 0) {
    r.outcome = Outcome::kNotHamiltonian;
  } else if (g.HasEdge(0, 0)) {
    r.outcome = Outcome::kFound;
    r.cycle = {0};
  } else {
    r.outcome = Outcome::kNotHamiltonian;
  }
  return r;
}

int CountComponentsSmall(const std::vector<uint64_t>& adj, uint64_t alive) {
  int components = 0;
  while (alive) {
    uint64_t comp = alive & -alive;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t b = frontier; b; b &= b - 1) next |= adj[std::countr_zero(b)];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    alive &= ~comp;
    ++components;
  }
  return components;
}

}  // namespace

const char* OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kFound:
      return "found";
    case Outcome::kNotHamiltonian:
      return "not_hamiltonian";
    case Outcome::kUnknown:
      return "unknown";
  }
  return "unknown";
}

OracleResult HeldKarp(const Digraph& g) {
  int n = g.n();
  if (n > kHeldKarpMaxN) throw InputError("Held-Karp needs n <= 24");
  if (n <= 1) return Trivial(g, "held_karp");
  int m = n - 1;  // vertex v >= 1 is bit v-1
  std::vector<uint32_t> in(m, 0);
  uint32_t starts = 0, ends = 0;
  for (int v = 1; v < n; ++v) {
    if (g.HasEdge(0, v)) starts |= uint32_t{1} << (v - 1);
    if (g.HasEdge(v, 0)) ends |= uint32_t{1} << (v - 1);
    for (int u : g.In(v)) {
      if (u != 0 && u != v) in[v - 1] |= uint32_t{1} << (u - 1);
    }
  }
  uint32_t full = (m == 32) ? ~0u : ((uint32_t{1} << m) - 1);
  // reach[S] holds the possible last vertices of a path 0 -> ... covering S.
  std::vector<uint32_t> reach(static_cast<size_t>(full) + 1, 0);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) {
      reach[mask] = mask & starts;
      continue;
    }
    uint32_t ends_here = 0;
    for (uint32_t bits = mask; bits; bits &= bits - 1) {
      int i = std::countr_zero(bits);
      if (reach[mask ^ (uint32_t{1} << i)] & in[i]) ends_here |= uint32_t{1} << i;
    }
    reach[mask] = ends_here;
  }
  OracleResult r;
  r.method = "held_karp";
  r.nodes = static_cast<int64_t>(full) + 1;
  uint32_t closing = reach[full] & ends;
  if (closing == 0) {
    r.outcome = Outcome::kNotHamiltonian;
    return r;
  }
  std::vector<int> back;
  uint32_t mask = full;
  int cur = std::countr_zero(closing);
  back.push_back(cur + 1);
  while (std::popcount(mask) > 1) {
    uint32_t prev = mask ^ (uint32_t{1} << cur);
    int p = std::countr_zero(reach[prev] & in[cur]);
    mask = prev;
    cur = p;
    back.push_back(cur + 1);
  }
  r.outcome = Outcome::kFound;
  r.cycle.push_back(0);
  r.cycle.insert(r.cycle.end(), back.rbegin(), back.rend());
  return r;
}

OracleResult BranchAndBound(const Digraph& g, int64_t budget) {
  if (g.n() > 256) throw InputError("branch-and-bound supports n <= 256");
  if (g.n() <= 1) return Trivial(g, "branch_and_bound");
  return Search(g, budget).Run();
}

OracleResult FindHamiltonExact(const Digraph& g, int64_t budget) {
  if (g.n() <= kHeldKarpMaxN) {
    OracleResult quick = BranchAndBound(g, std::min(budget, kQuickSearchBudget));
    if (quick.outcome != Outcome::kUnknown) return quick;
    OracleResult exact = HeldKarp(g);
    exact.nodes += quick.nodes;
    return exact;
  }
  return BranchAndBound(g, budget);
}

bool CertificateHolds(const Digraph& g, const CutCertificate& c) {
  VertexSet removed(g.n());
  for (int v : c.cut) {
    if (v < 0 || v >= g.n() || removed.Contains(v)) return false;
    removed.Insert(v);
  }
  int components = WeakComponentCount(g, removed);
  int bound = std::max<int>(1, static_cast<int>(c.cut.size()));
  return components == c.components && components > bound;
}

std::optional<CutCertificate> NonHamiltonicityCertificate(
    const Digraph& g, int max_cut_size,
    const std::vector<std::vector<int>>& candidates) {
  int n = g.n();
  for (const auto& cut : candidates) {
    VertexSet removed(n);
    bool valid = true;
    for (int v : cut) {
      if (v < 0 || v >= n || removed.Contains(v)) valid = false;
      if (valid) removed.Insert(v);
    }
    if (!valid) throw InputError("invalid candidate cut");
    CutCertificate c{cut, WeakComponentCount(g, removed)};
    std::sort(c.cut.begin(), c.cut.end());
    if (CertificateHolds(g, c)) return c;
  }
  if (n <= 1) return std::nullopt;
  if (WeakComponentCount(g, VertexSet(n)) > 1) {
    return CutCertificate{{}, WeakComponentCount(g, VertexSet(n))};
  }

  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.OutDegree(v) + g.InDegree(v);
  std::vector<uint64_t> adj;
  if (n <= 64) {
    adj.assign(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v : g.Out(u)) {
        adj[u] |= uint64_t{1} << v;
        adj[v] |= uint64_t{1} << u;
      }
    }
  }
  // A cut of size s needs at least s+1 surviving vertices.
  int top = std::min(max_cut_size, (n - 1) / 2);
  for (int size = 1; size <= top; ++size) {
    std::vector<std::pair<int, std::vector<int>>> cuts;
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      int sum = 0;
      for (int v : pick) sum += degree[v];
      cuts.emplace_back(sum, pick);
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::stable_sort(cuts.begin(), cuts.end(), [](const auto& a, const auto& b) {
      return a.first < b.first;
    });
    for (const auto& [sum, cut] : cuts) {
      int components;
      if (n <= 64) {
        uint64_t alive = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
        for (int v : cut) alive &= ~(uint64_t{1} << v);
        components = CountComponentsSmall(adj, alive);
      } else {
        components = WeakComponentCount(g, VertexSet::Of(n, cut));
      }
      if (components > size) return CutCertificate{cut, components};
    }
  }
  return std::nullopt;
}

}  // namespace hamlab
