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

#include "hamlab/edge_coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hamlab/errors.hpp"

namespace hamlab {
namespace {

class FanColorer {
 public:
  FanColorer(const Multigraph& h, int k)
      : h_(h),
        k_(k),
        color_(h.edges.size(), -1),
        at_(h.n, std::vector<int>(k, -1)),
        fan_index_(h.n, -1) {}

  void Color(int e0) {
    x_ = h_.edges[e0].first;
    BuildFan(e0);
    // A colour missing at x and at some fan vertex finishes directly.
    for (size_t i = 0; i < fan_.size(); ++i) {
      for (int c = 0; c < k_; ++c) {
        if (Missing(fan_[i], c) && Missing(x_, c)) {
          Shift(static_cast<int>(i), c);
          return;
        }
      }
    }
    // Otherwise two fan vertices share a missing colour beta. Swapping an
    // (alpha, beta)-path frees alpha at one of them.
    int alpha = 0;
    while (!Missing(x_, alpha)) ++alpha;
    int beta = -1;
    std::vector<int> sharing;
    for (int c = 0; c < k_ && beta == -1; ++c) {
      sharing.clear();
      for (size_t i = 0; i < fan_.size(); ++i) {
        if (Missing(fan_[i], c)) sharing.push_back(static_cast<int>(i));
      }
      if (sharing.size() >= 2) beta = c;
    }
    if (beta == -1) throw std::logic_error("fan colouring: no shared colour");
    int x_end = PathEnd(x_, beta, alpha);
    int w = fan_[sharing[0]] == x_end ? sharing[1] : sharing[0];
    int u = SwapPath(fan_[w], alpha, beta);
    if (ChainValid(w, alpha)) {
      Shift(w, alpha);
    } else if (fan_index_[u] != -1 && ChainValid(fan_index_[u], alpha)) {
      Shift(fan_index_[u], alpha);
    } else {
      throw std::logic_error("fan colouring: broken chain");
    }
    ClearFan();
  }

  EdgeColoring Result() const {
    EdgeColoring out;
    std::vector<int> relabel(k_, -1);
    for (int c : color_) {
      if (relabel[c] == -1) relabel[c] = out.palette++;
      out.colors.push_back(relabel[c]);
    }
    return out;
  }

 private:
  bool Missing(int v, int c) const { return at_[v][c] == -1; }
  int Other(int e, int v) const {
    return h_.edges[e].first == v ? h_.edges[e].second : h_.edges[e].first;
  }

  void SetColor(int e, int c) {
    color_[e] = c;
    at_[h_.edges[e].first][c] = e;
    at_[h_.edges[e].second][c] = e;
  }
  void Uncolor(int e) {
    int c = color_[e];
    if (c == -1) return;
    at_[h_.edges[e].first][c] = -1;
    at_[h_.edges[e].second][c] = -1;
    color_[e] = -1;
  }

  // Fan at x: each later vertex is reached by an x-edge whose colour is
  // missing at its predecessor. Grown until no colour extends it.
  void BuildFan(int e0) {
    ClearFan();
    Append(h_.edges[e0].second, e0, -1);
    for (size_t i = 0; i < fan_.size(); ++i) {
      for (int c = 0; c < k_; ++c) {
        if (!Missing(fan_[i], c) || Missing(x_, c)) continue;
        int e = at_[x_][c];
        int z = Other(e, x_);
        if (fan_index_[z] == -1) Append(z, e, static_cast<int>(i));
      }
    }
  }

  void Append(int v, int e, int pred) {
    fan_index_[v] = static_cast<int>(fan_.size());
    fan_.push_back(v);
    fan_edge_.push_back(e);
    pred_.push_back(pred);
  }

  void ClearFan() {
    for (int v : fan_) fan_index_[v] = -1;
    fan_.clear();
    fan_edge_.clear();
    pred_.clear();
  }

  int PathEnd(int start, int first, int second) const {
    int cur = start, c = first;
    while (!Missing(cur, c)) {
      cur = Other(at_[cur][c], cur);
      c = c == first ? second : first;
    }
    return cur;
  }

  // Exchanges the two colours on the maximal path leaving `start` with
  // colour `first`; returns the far end.
  int SwapPath(int start, int first, int second) {
    std::vector<int> path;
    int cur = start, c = first;
    while (!Missing(cur, c)) {
      int e = at_[cur][c];
      path.push_back(e);
      cur = Other(e, cur);
      c = c == first ? second : first;
    }
    for (int e : path) {
      int old = color_[e];
      Uncolor(e);
      color_[e] = old == first ? second : first;
    }
    for (int e : path) SetColor(e, color_[e]);
    return cur;
  }

  bool ChainValid(int i, int c) const {
    if (!Missing(x_, c) || !Missing(fan_[i], c)) return false;
    for (int j = i; pred_[j] != -1; j = pred_[j]) {
      if (!Missing(fan_[pred_[j]], color_[fan_edge_[j]])) return false;
    }
    return true;
  }

  // Moves each colour on the chain to the predecessor's fan edge and gives
  // the last fan edge colour c. The root fan edge is the uncoloured one.
  void Shift(int i, int c) {
    std::vector<int> chain;
    for (int j = i; j != -1; j = pred_[j]) chain.push_back(j);
    std::reverse(chain.begin(), chain.end());
    std::vector<int> next(chain.size());
    for (size_t t = 0; t + 1 < chain.size(); ++t) {
      next[t] = color_[fan_edge_[chain[t + 1]]];
    }
    next.back() = c;
    for (int j : chain) Uncolor(fan_edge_[j]);
    for (size_t t = 0; t < chain.size(); ++t) {
      SetColor(fan_edge_[chain[t]], next[t]);
    }
  }

  const Multigraph& h_;
  int k_;
  std::vector<int> color_;
  std::vector<std::vector<int>> at_;  // at_[v][c]: edge of colour c at v
  int x_ = 0;
  std::vector<int> fan_, fan_edge_, pred_, fan_index_;
};

void Validate(const Multigraph& h) {
  for (const auto& [a, b] : h.edges) {
    if (a < 0 || b < 0 || a >= h.n || b >= h.n) {
      throw InputError("multigraph edge endpoint out of range");
    }
    if (a == b) throw InputError("multigraph must be loopless");
  }
}

}  // namespace

int Multigraph::MaxDegree() const {
  std::vector<int> deg(n, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int Multigraph::MaxMultiplicity() const {
  std::map<std::pair<int, int>, int> count;
  int best = 0;
  for (const auto& [a, b] : edges) {
    best = std::max(best, ++count[{std::min(a, b), std::max(a, b)}]);
  }
  return best;
}

EdgeColoring EdgeColorMultigraph(const Multigraph& h) {
  Validate(h);
  if (h.edges.empty()) return {};
  FanColorer colorer(h, h.MaxDegree() + h.MaxMultiplicity());
  for (size_t e = 0; e < h.edges.size(); ++e) {
    colorer.Color(static_cast<int>(e));
  }
  return colorer.Result();
}

bool IsProperColoring(const Multigraph& h, const std::vector<int>& colors) {
  if (colors.size() != h.edges.size()) return false;
  std::map<std::pair<int, int>, int> seen;  // (vertex, colour)
  for (size_t e = 0; e < h.edges.size(); ++e) {
    if (colors[e] < 0) return false;
    if (!seen.emplace(std::pair{h.edges[e].first, colors[e]}, 0).second ||
        !seen.emplace(std::pair{h.edges[e].second, colors[e]}, 0).second) {
      return false;
    }
  }
  return true;
}

}  // namespace hamlab
