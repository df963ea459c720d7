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

#ifndef MODALHOL_HOLMODEL_HPP_
#define MODALHOL_HOLMODEL_HPP_

// Finite standard models of HOL.
//
// Elements are encoded as in the kripke module: a boolean is 0/1, a world or
// individual its index, and a function of type a => b the number
// sum_x f(x) * |b|^x. Two function values are equal iff they are equal
// pointwise, which makes equality at every type plain integer comparison.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modalhol/embedding.hpp"
#include "modalhol/kernel.hpp"
#include "modalhol/kripke.hpp"

namespace modalhol::holmodel {

using kernel::HolTerm;
using kernel::HolType;
using Value = uint64_t;

struct Carriers {
  int worlds = 1;
  int indiv = 1;
};

// |carrier(type)|. Throws BoundsTooLarge past 2^62 and TypeMismatch on type
// variables.
uint64_t carrier_size(const HolType& type, const Carriers& c);

struct HolModel {
  Carriers carriers;
  std::map<std::string, Value> interp;
};

using Env = std::vector<std::pair<std::string, Value>>;

// Standard semantics. Logical constants are fixed; everything else is read
// from model.interp. Throws UnboundVariable and MissingInterpretation.
Value eval_term(const HolModel& model, const HolTerm& term, const Env& env = {});
bool eval_formula(const HolModel& model, const HolTerm& term, const Env& env = {});

// Element x of the domain of f : a => b applied, |b| = codomain_size.
Value apply(Value f, Value x, uint64_t codomain_size);

// Throws MissingInterpretation if a constant of sig has no value in km.
HolModel induce_hol_model(const kripke::KripkeModel& km, const embedding::LogicPreset& preset,
                          const kernel::Signature& sig);

// Every interpretation of the constants of `sig` missing from `base`, in
// lexicographic order: the first declared constant is the most significant
// digit. Model k of the stream is available directly through at(k), so the
// stream can be split into index ranges.
class ModelStream {
 public:
  // Throws BoundsTooLarge when the stream would exceed `cap` models.
  ModelStream(const kernel::Signature& sig, HolModel base, uint64_t cap = 1u << 20);

  uint64_t size() const { return total_; }
  HolModel at(uint64_t k) const;
  bool next(HolModel& out);

 private:
  HolModel base_;
  std::vector<std::pair<std::string, uint64_t>> free_;  // name, carrier size
  uint64_t total_ = 1;
  uint64_t pos_ = 0;
};

ModelStream enumerate_hol_models(const kernel::Signature& sig, const Carriers& carriers,
                                 uint64_t cap = 1u << 20);

// `p = [0, 1]` style listing in declaration order of sig.
std::string to_string(const HolModel& model, const kernel::Signature& sig);
std::string format_value(const HolType& type, Value v, const Carriers& c);

}  // namespace modalhol::holmodel

#endif  // MODALHOL_HOLMODEL_HPP_
