/* Copyright 2026 The modalhol Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MODALHOL_TESTS_SUPPORT_KRIPKE_GEN_HPP_
#define MODALHOL_TESTS_SUPPORT_KRIPKE_GEN_HPP_

// Random Kripke models that satisfy a preset's frame conditions.

#include <random>

#include "modalhol/kripke.hpp"

namespace modalhol::testing {

inline kripke::KripkeModel random_model(std::mt19937& rng, const embedding::LogicPreset& preset,
                                        const syntax::Declarations& decls, int max_worlds,
                                        int max_carrier, double edge_density = 0.35) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::bernoulli_distribution coin(edge_density);
  int worlds = pick(1, max_worlds), carrier = pick(1, max_carrier);
  kripke::KripkeModel m = kripke::KripkeModel::empty(worlds, carrier, preset.indices);
  m.actual = pick(0, worlds - 1);
  for (const auto& idx : preset.indices) {
    std::vector<kripke::WorldSet> rel(worlds, 0);
    for (int w = 0; w < worlds; ++w)
      for (int v = 0; v < worlds; ++v)
        if (coin(rng)) rel[w] |= 1ull << v;
    m.access[idx] = kripke::close_relation(rel, worlds, preset.flags());
  }
  if (preset.varying())
    for (auto& d : m.domain) d = static_cast<uint64_t>(pick(0, static_cast<int>(m.full_domain())));
  for (const auto& [name, sort] : decls.constants) {
    uint64_t n = kripke::sort_size(sort, worlds, carrier);
    m.set(name, sort, std::uniform_int_distribution<uint64_t>(0, n - 1)(rng));
  }
  return m;
}

}  // namespace modalhol::testing

#endif  // MODALHOL_TESTS_SUPPORT_KRIPKE_GEN_HPP_
