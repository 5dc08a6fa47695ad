#pragma once
// Shared serialization for the frozen cardinality fixtures.

#include <string>
#include <vector>

#include <json.hpp>

#include "kradm/affine_weyl.hpp"

namespace golden {

struct Fixture {
  std::string group;
  kradm::IntVec mu;
  std::string file;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f{
      {"A1", {1}, "A1_1.json"},
      {"GL2", {1, 0}, "GL2_1_0.json"},
      {"GL3", {1, 0, 0}, "GL3_1_0_0.json"},
      {"GL4", {1, 0, 0, 0}, "GL4_1_0_0_0.json"},
  };
  return f;
}

// Element key independent of the poset code: canonical finite word + translation.
inline std::string element_key(const kradm::AffineElt& a) {
  return kradm::word_string(kradm::canonical_word(*a.group(), a.finite_part())) + "|" +
         kradm::to_string(a.translation());
}

}  // namespace golden
