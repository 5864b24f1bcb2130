// Copyright 2026 The Gateway Games Authors
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

#include <algorithm>
#include <bit>
#include <string>

#include "gateway/constructions.h"
#include "gateway/error.h"

namespace gateway {
namespace {

void Validate(const SetCoverInstance& inst) {
  if (inst.element_count < 2 || inst.sets.size() < 2) {
    throw GameError(ErrorCode::kParameterOutOfRange,
                    "reduction needs at least 2 elements and 2 sets");
  }
  std::vector<bool> covered(inst.element_count, false);
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    for (int x : inst.sets[i]) {
      if (x < 0 || x >= inst.element_count) {
        throw GameError(ErrorCode::kParameterOutOfRange,
                        "set " + std::to_string(i) + " names element " +
                            std::to_string(x) + " outside [0, " +
                            std::to_string(inst.element_count) + ")");
      }
      covered[x] = true;
    }
  }
  for (int x = 0; x < inst.element_count; ++x) {
    if (!covered[x]) {
      throw GameError(ErrorCode::kElementUncovered,
                      "element " + std::to_string(x) + " is in no set");
    }
  }
}

// Adds element `x` again: the copy joins every set containing x.
void DuplicateElement(SetCoverInstance& inst, int x) {
  const int copy = inst.element_count++;
  for (auto& set : inst.sets) {
    if (std::find(set.begin(), set.end(), x) != set.end()) set.push_back(copy);
  }
}

}  // namespace

bool IsCover(const SetCoverInstance& inst, const std::vector<int>& chosen) {
  std::vector<bool> covered(inst.element_count, false);
  for (int i : chosen) {
    if (i < 0 || i >= static_cast<int>(inst.sets.size())) return false;
    for (int x : inst.sets[i]) {
      if (x >= 0 && x < inst.element_count) covered[x] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

int MinimumCoverSize(const SetCoverInstance& inst) {
  const int sets = static_cast<int>(inst.sets.size());
  if (sets > 30) {
    throw GameError(ErrorCode::kStateSpaceTooLarge,
                    "minimum cover search is limited to 30 sets");
  }
  int best = -1;
  std::vector<int> chosen;
  for (std::uint32_t mask = 0; mask < (1U << sets); ++mask) {
    int size = std::popcount(mask);
    if (best >= 0 && size >= best) continue;
    chosen.clear();
    for (int i = 0; i < sets; ++i) {
      if ((mask >> i) & 1U) chosen.push_back(i);
    }
    if (IsCover(inst, chosen)) best = size;
  }
  if (best < 0) {
    throw GameError(ErrorCode::kElementUncovered, "instance has no cover");
  }
  return best;
}

ReductionArtifact ReduceSetCover(const SetCoverInstance& inst,
                                 Variant variant) {
  Validate(inst);
  ReductionArtifact art;
  art.variant = variant;
  SetCoverInstance enc = inst;
  const int n_sets = static_cast<int>(inst.sets.size());

  if (variant == Variant::kSum) {
    const int m = inst.element_count;
    if (m <= 4 || n_sets <= 4) {
      art.warnings.push_back(
          "the correctness argument assumes more than 4 elements and more "
          "than 4 sets; got m=" + std::to_string(m) +
          ", n=" + std::to_string(n_sets));
    }
    art.w = n_sets;
    art.k = m - 1;
    art.alpha = Rational(4LL * n_sets * (m - 1));
  } else {
    // Pad to exactly twice as many elements as sets.
    if (enc.element_count < 2 * n_sets) {
      const int original = enc.element_count;
      for (int i = 0; enc.element_count < 2 * n_sets; ++i) {
        DuplicateElement(enc, i % original);
      }
      art.warnings.push_back("padded elements to m=" +
                             std::to_string(enc.element_count) +
                             " by duplicating existing elements");
    } else if (enc.element_count > 2 * n_sets) {
      if (enc.element_count % 2 != 0) DuplicateElement(enc, 0);
      const std::size_t original = enc.sets.size();
      for (std::size_t i = 0; 2 * enc.sets.size() <
                              static_cast<std::size_t>(enc.element_count);
           ++i) {
        enc.sets.push_back(enc.sets[i % original]);
      }
      art.warnings.push_back("padded to m=" +
                             std::to_string(enc.element_count) + ", n=" +
                             std::to_string(enc.sets.size()) +
                             " by duplicating elements and sets");
    }
    art.w = 1;
    art.k = 3 * static_cast<int>(enc.sets.size());
    art.alpha = Rational(3);
  }
  art.encoded = enc;

  const int sets = static_cast<int>(enc.sets.size());
  const int m = enc.element_count;
  const int total = art.k + sets + m * art.w;
  art.roles.node_roles.assign(total, "");
  std::vector<Edge> edges;
  art.c = 0;
  art.roles.named["c"] = 0;
  for (int i = 0; i < art.k; ++i) {
    art.roles.node_roles[i] = i == 0 ? "c" : "clique";
    for (int j = i + 1; j < art.k; ++j) edges.emplace_back(i, j);
  }
  for (int s = 0; s < sets; ++s) {
    NodeId id = art.k + s;
    art.set_nodes.push_back(id);
    art.roles.node_roles[id] = "set:" + std::to_string(s);
    edges.emplace_back(art.c, id);
  }
  art.element_nodes.assign(m, {});
  for (int x = 0; x < m; ++x) {
    for (int j = 0; j < art.w; ++j) {
      NodeId id = art.k + sets + x * art.w + j;
      art.element_nodes[x].push_back(id);
      art.roles.node_roles[id] =
          "element:" + std::to_string(x) + ":" + std::to_string(j);
    }
  }
  for (int s = 0; s < sets; ++s) {
    for (int x : enc.sets[s]) {
      for (NodeId id : art.element_nodes[x]) {
        edges.emplace_back(art.set_nodes[s], id);
      }
    }
  }
  art.graph = Graph::Build(total, edges);
  return art;
}

std::vector<int> DecodeCover(const ReductionArtifact& artifact,
                             const StrategyProfile& s) {
  std::vector<int> chosen;
  for (std::size_t i = 0; i < artifact.set_nodes.size(); ++i) {
    if (s.Contains(artifact.set_nodes[i])) chosen.push_back(static_cast<int>(i));
  }
  return chosen;
}

}  // namespace gateway
