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

#ifndef MODALHOL_TESTS_SUPPORT_HOL_GEN_HPP_
#define MODALHOL_TESTS_SUPPORT_HOL_GEN_HPP_

// Random well-typed HOL terms for property tests. Small variable pool so that
// shadowing and capture situations are frequent.

#include <random>
#include <string>
#include <vector>

#include "modalhol/kernel.hpp"

namespace modalhol::testing {

using kernel::HolTerm;
using kernel::HolType;

inline kernel::Signature hol_test_signature() {
  kernel::Signature sig;
  const auto o = HolType::boolean(), i = HolType::world(), e = HolType::indiv();
  sig.declare("c", i);
  sig.declare("d", i);
  sig.declare("a", e);
  sig.declare("b", o);
  sig.declare("p", HolType::arrow(i, o));
  sig.declare("r", HolType::arrow(i, HolType::arrow(i, o)));
  sig.declare("f", HolType::arrow(e, e));
  sig.declare("q", HolType::arrow(e, HolType::arrow(i, o)));
  return sig;
}

class HolTermGen {
 public:
  explicit HolTermGen(uint32_t seed) : rng_(seed), sig_(hol_test_signature()) {}

  const kernel::Signature& signature() const { return sig_; }

  // Closed or open term of `type`; free variables drawn from `free`.
  HolTerm term(const HolType& type, int depth,
               std::vector<std::pair<std::string, HolType>> free = {}) {
    ctx_ = std::move(free);
    return gen(type, depth);
  }

  HolType small_type() {
    const auto o = HolType::boolean(), i = HolType::world(), e = HolType::indiv();
    switch (pick(5)) {
      case 0: return o;
      case 1: return i;
      case 2: return e;
      case 3: return HolType::arrow(i, o);
      default: return HolType::arrow(e, HolType::arrow(i, o));
    }
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  HolTerm leaf(const HolType& type) {
    std::vector<HolTerm> options;
    for (auto it = ctx_.rbegin(); it != ctx_.rend(); ++it) {
      bool shadowed = false;
      for (auto jt = ctx_.rbegin(); jt != it; ++jt)
        if (jt->first == it->first) shadowed = true;
      if (!shadowed && it->second == type) options.push_back(HolTerm::variable(it->first, type));
    }
    for (const auto& entry : sig_.entries())
      if (entry.type == type) options.push_back(HolTerm::constant(entry.name, type));
    if (type == HolType::boolean()) {
      options.push_back(kernel::logic::truth());
      options.push_back(kernel::logic::falsity());
    }
    if (!options.empty()) return options[pick(static_cast<int>(options.size()))];
    if (type.is_arrow()) return lambda(type, 0);
    throw std::logic_error("no leaf for type " + kernel::to_string(type));
  }

  HolTerm lambda(const HolType& type, int depth) {
    static const char* names[] = {"x", "y", "z"};
    std::string v = names[pick(3)];
    ctx_.emplace_back(v, type.domain());
    HolTerm body = gen(type.codomain(), depth - 1);
    ctx_.pop_back();
    return HolTerm::lam(v, type.domain(), body);
  }

  HolTerm gen(const HolType& type, int depth) {
    if (depth <= 0) return leaf(type);
    int choice = pick(10);
    if (choice < 2) return leaf(type);
    if (type.is_arrow() && choice < 5) return lambda(type, depth);
    if (type == HolType::boolean() && choice < 8) {
      using namespace kernel::logic;
      switch (pick(6)) {
        case 0: return neg(gen(type, depth - 1));
        case 1: return conj(gen(type, depth - 1), gen(type, depth - 1));
        case 2: return imp(gen(type, depth - 1), gen(type, depth - 1));
        case 3: {
          HolType t = small_type();
          return eq(gen(t, depth - 1), gen(t, depth - 1));
        }
        case 4: {
          HolType t = pick(2) ? HolType::world() : HolType::indiv();
          return HolTerm::app(forall_const(t), lambda(HolType::arrow(t, type), depth));
        }
        default: {
          HolType t = pick(2) ? HolType::world() : HolType::indiv();
          return HolTerm::app(exists_const(t), gen(HolType::arrow(t, type), depth - 1));
        }
      }
    }
    // Application, frequently a beta redex.
    HolType arg = small_type();
    HolType fn_type = HolType::arrow(arg, type);
    HolTerm fn = pick(2) ? lambda(fn_type, depth) : gen(fn_type, depth - 1);
    return HolTerm::app(fn, gen(arg, depth - 1));
  }

  std::mt19937 rng_;
  kernel::Signature sig_;
  std::vector<std::pair<std::string, HolType>> ctx_;
};

}  // namespace modalhol::testing

#endif  // MODALHOL_TESTS_SUPPORT_HOL_GEN_HPP_
