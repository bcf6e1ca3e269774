#pragma once

#include "grasshadri/hn_core.hpp"

namespace grasshadri::testing {

// L_{-1} + O^3 on a genus-1 curve, r = 1.
inline SplitBundle ex1() {
  return SplitBundle({{Integer(-1), 1, false}, {Integer(0), 3, true}}, 1);
}

// L_{-1}^2 + O^2, r = 2.
inline SplitBundle ex2() {
  return SplitBundle({{Integer(-1), 2, false}, {Integer(0), 2, true}}, 1);
}

// L_1^2 + L_{-1}^2, r = 2.
inline SplitBundle ex3() {
  return SplitBundle({{Integer(1), 2, false}, {Integer(-1), 2, false}}, 1);
}

// L_{-1} + O^2 + L_0 with L_0 nontrivial of degree 0, r = 1.
inline SplitBundle ex4() {
  return SplitBundle(
      {{Integer(-1), 1, false}, {Integer(0), 2, true}, {Integer(0), 1, false}}, 1);
}

struct NamedExample {
  const char* name;
  SplitBundle bundle;
  Rank r;
};

inline std::vector<NamedExample> all_examples() {
  return {{"ex1", ex1(), 1}, {"ex2", ex2(), 2}, {"ex3", ex3(), 2}, {"ex4", ex4(), 1}};
}

}  // namespace grasshadri::testing
