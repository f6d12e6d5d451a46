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

#include "hamlab/expander.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "hamlab/errors.hpp"
#include "hamlab/random.hpp"

namespace hamlab {
namespace {

// Smallest integer count c with c >= nu*n.
int InThreshold(const Rational& nu, int n) {
  return static_cast<int>(nu.CeilTimes(n));
}

std::optional<ExpansionWitness> ExactScan(const Digraph& g,
                                          const ExpansionParams& p,
                                          int64_t& evaluations) {
  int n = g.n();
  int threshold = InThreshold(p.nu, n);
  int slack = threshold;  // witness iff rn < |S| + ceil(nu*n)
  // Vertex i lives on bit n-1-i, so increasing complement masks visit the
  // sets of one size in lexicographic order of their members.
  std::vector<uint32_t> in_mapped(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.In(v)) in_mapped[v] |= uint32_t{1} << (n - 1 - u);
  }
  uint32_t full = n == 32 ? ~0u : ((uint32_t{1} << n) - 1);
  for (int size = WindowLow(n, p.tau); size <= WindowHigh(n, p.tau); ++size) {
    int rest = n - size;
    uint32_t comp = rest == 0 ? 0 : (uint32_t{1} << rest) - 1;
    while (true) {
      uint32_t s = full & ~comp;
      ++evaluations;
      int limit = size + slack;
      int rn = 0;
      for (int v = 0; v < n && rn < limit; ++v) {
        if (std::popcount(in_mapped[v] & s) >= threshold) ++rn;
      }
      if (rn < limit) {
        ExpansionWitness w{VertexSet(n), rn};
        for (int i = 0; i < n; ++i) {
          if ((s >> (n - 1 - i)) & 1u) w.set.Insert(i);
        }
        return w;
      }
      if (rest == 0 || comp == (full & ~((uint32_t{1} << size) - 1))) break;
      // Gosper's hack: next mask with the same popcount.
      uint32_t low = comp & -comp;
      uint32_t ripple = comp + low;
      comp = (((ripple ^ comp) >> 2) / low) | ripple;
      if (comp > full) break;
    }
  }
  return std::nullopt;
}

// Local search state: in-counts from the current set, kept incrementally.
class LocalSearch {
 public:
  LocalSearch(const Digraph& g, const ExpansionParams& p)
      : g_(g),
        n_(g.n()),
        threshold_(InThreshold(p.nu, g.n())),
        low_(WindowLow(g.n(), p.tau)),
        high_(WindowHigh(g.n(), p.tau)),
        slack_(InThreshold(p.nu, g.n())),
        in_set_(g.n(), 0),
        count_(g.n(), 0) {}

  void Load(const std::vector<int>& members) {
    std::fill(in_set_.begin(), in_set_.end(), 0);
    std::fill(count_.begin(), count_.end(), 0);
    rn_ = 0;
    size_ = 0;
    for (int v : members) Add(v);
  }

  // rn - |S| - ceil(nu*n); negative means witness.
  int Deficiency() const { return rn_ - size_ - slack_; }
  int size() const { return size_; }
  int rn() const { return rn_; }
  bool Contains(int v) const { return in_set_[v]; }

  void Add(int v) {
    in_set_[v] = 1;
    ++size_;
    for (int w : g_.Out(v)) {
      if (++count_[w] == threshold_) ++rn_;
    }
  }
  void Remove(int v) {
    in_set_[v] = 0;
    --size_;
    for (int w : g_.Out(v)) {
      if (count_[w]-- == threshold_) --rn_;
    }
  }

  // Steepest descent over add, remove and swap moves inside the window.
  void Descend(int64_t& evaluations, int64_t budget) {
    while (evaluations < budget) {
      int best = Deficiency();
      int best_out = -1, best_in = -1;
      auto consider = [&](int out, int in) {
        ++evaluations;
        if (out >= 0) Remove(out);
        if (in >= 0) Add(in);
        int d = Deficiency();
        if (d < best) {
          best = d;
          best_out = out;
          best_in = in;
        }
        if (in >= 0) Remove(in);
        if (out >= 0) Add(out);
      };
      for (int v = 0; v < n_; ++v) {
        if (!in_set_[v] && size_ + 1 <= high_) consider(-1, v);
        if (in_set_[v] && size_ - 1 >= low_) consider(v, -1);
      }
      for (int out = 0; out < n_ && evaluations < budget; ++out) {
        if (!in_set_[out]) continue;
        for (int in = 0; in < n_; ++in) {
          if (!in_set_[in]) consider(out, in);
        }
      }
      if (best_out == -1 && best_in == -1) return;
      if (best_out >= 0) Remove(best_out);
      if (best_in >= 0) Add(best_in);
      if (Deficiency() < 0) return;
    }
  }

  std::vector<int> Members() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
      if (in_set_[v]) out.push_back(v);
    }
    return out;
  }

  int low() const { return low_; }
  int high() const { return high_; }

 private:
  const Digraph& g_;
  int n_;
  int threshold_;
  int low_, high_;
  int slack_;
  std::vector<char> in_set_;
  std::vector<int> count_;
  int rn_ = 0;
  int size_ = 0;
};

std::optional<ExpansionWitness> HeuristicScan(const Digraph& g,
                                              const ExpansionParams& p,
                                              int64_t budget, uint64_t seed,
                                              int64_t& evaluations) {
  int n = g.n();
  LocalSearch search(g, p);
  int low = search.low(), high = search.high();
  auto finish = [&]() -> std::optional<ExpansionWitness> {
    ExpansionWitness w{VertexSet::Of(n, search.Members()), search.rn()};
    if (IsWitness(g, w, p)) return w;
    return std::nullopt;
  };
  // Greedy seeds: grow a tight cluster from every vertex.
  for (int start = 0; start < n && evaluations < budget; ++start) {
    std::vector<int> members{start};
    std::vector<char> chosen(n, 0);
    chosen[start] = 1;
    std::vector<int> best_members;
    int best = 0;
    search.Load(members);
    while (search.size() < high) {
      int pick = -1, pick_score = -1;
      for (int u = 0; u < n; ++u) {
        if (chosen[u]) continue;
        int score = 0;
        for (int w : g.In(u)) score += chosen[w];
        for (int w : g.Out(u)) score += chosen[w];
        if (score > pick_score) {
          pick_score = score;
          pick = u;
        }
      }
      chosen[pick] = 1;
      search.Add(pick);
      ++evaluations;
      if (search.size() >= low &&
          (best_members.empty() || search.Deficiency() < best)) {
        best = search.Deficiency();
        best_members = search.Members();
      }
    }
    if (best_members.empty()) continue;
    search.Load(best_members);
    if (search.Deficiency() >= 0) search.Descend(evaluations, budget);
    if (search.Deficiency() < 0) return finish();
  }
  Rng rng(seed);
  while (evaluations < budget) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    rng.Shuffle(order);
    int size = rng.Int(low, high);
    order.resize(size);
    search.Load(order);
    search.Descend(evaluations, budget);
    if (search.Deficiency() < 0) return finish();
  }
  return std::nullopt;
}

}  // namespace

void ValidateExpansionParams(const ExpansionParams& p) {
  if (!(Rational(0) < p.nu && p.nu < p.tau && p.tau < Rational(1))) {
    throw InputError("expansion parameters need 0 < nu < tau < 1");
  }
}

VertexSet RobustOutNeighbourhood(const Digraph& g, const VertexSet& s,
                                 const Rational& nu) {
  if (s.universe() != g.n()) throw InputError("set universe mismatch");
  VertexSet out(g.n());
  for (int v = 0; v < g.n(); ++v) {
    if (nu.TimesLeq(g.n(), g.InSet(v).CountCommon(s))) out.Insert(v);
  }
  return out;
}

int WindowLow(int n, const Rational& tau) {
  return static_cast<int>(tau.CeilTimes(n));
}

int WindowHigh(int n, const Rational& tau) {
  return static_cast<int>((Rational(1) - tau).FloorTimes(n));
}

bool IsWitness(const Digraph& g, const ExpansionWitness& w,
               const ExpansionParams& p) {
  if (w.set.universe() != g.n()) return false;
  int size = w.set.Size();
  if (size < WindowLow(g.n(), p.tau) || size > WindowHigh(g.n(), p.tau)) {
    return false;
  }
  int rn = RobustOutNeighbourhood(g, w.set, p.nu).Size();
  // rn < |S| + nu*n, i.e. nu*n > rn - |S|.
  return rn == w.rn_size && !p.nu.TimesLeq(g.n(), rn - size);
}

WitnessSearch FindWitness(const Digraph& g, const ExpansionParams& p,
                          WitnessMode mode, int64_t budget, uint64_t seed,
                          int exact_cap) {
  ValidateExpansionParams(p);
  WitnessSearch result;
  if (mode == WitnessMode::kExact) {
    if (g.n() > exact_cap || g.n() > 31) {
      throw InputError("exact witness search needs n <= " +
                       std::to_string(std::min(exact_cap, 31)));
    }
    result.witness = ExactScan(g, p, result.evaluations);
    result.exhaustive = !result.witness.has_value();
  } else {
    if (WindowLow(g.n(), p.tau) <= WindowHigh(g.n(), p.tau)) {
      result.witness = HeuristicScan(g, p, budget, seed, result.evaluations);
    }
  }
  if (result.witness && !IsWitness(g, *result.witness, p)) {
    throw HypothesisViolation("witness search returned an invalid set");
  }
  return result;
}

}  // namespace hamlab
