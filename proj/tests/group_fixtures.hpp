#pragma once

#include <string>
#include <vector>

#include "unitlat/perm_group.hpp"

namespace fixtures {

using unitlat::PermGroup;

inline PermGroup cyclic(int n) {
  std::string c = "(";
  for (int i = 1; i <= n; ++i) c += std::to_string(i) + (i < n ? "," : ")");
  return PermGroup::from_cycles(n, {c});
}
inline PermGroup klein() { return PermGroup::from_cycles(4, {"(1,2)(3,4)", "(1,3)(2,4)"}); }
inline PermGroup s3() { return PermGroup::from_cycles(3, {"(1,2)", "(1,2,3)"}); }
inline PermGroup d4() { return PermGroup::from_cycles(4, {"(1,2,3,4)", "(1,3)"}); }
inline PermGroup q8() {
  // regular representation of the quaternion group on 8 points
  return PermGroup::from_cycles(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"});
}
inline PermGroup a4() { return PermGroup::from_cycles(4, {"(1,2,3)", "(1,2)(3,4)"}); }
inline PermGroup s4() { return PermGroup::from_cycles(4, {"(1,2)", "(1,2,3,4)"}); }
inline PermGroup symmetric(int n) {
  std::string c = "(";
  for (int i = 1; i <= n; ++i) c += std::to_string(i) + (i < n ? "," : ")");
  return PermGroup::from_cycles(n, {"(1,2)", c});
}
inline PermGroup psl32() { return PermGroup::from_cycles(7, {"(1,2,4,3,6,7,5)", "(4,5)(6,7)"}); }
inline std::vector<std::string> fano_point_stabilizer() {
  return {"(4,5)(6,7)", "(4,6)(5,7)", "(2,3)(6,7)", "(2,4)(3,5)"};
}
inline std::vector<std::string> fano_line_stabilizer() {
  return {"(4,5)(6,7)", "(4,6)(5,7)", "(2,3)(6,7)", "(1,2)(5,6)"};
}

// Left-regular representation of g on |g| points.
inline PermGroup regular(const PermGroup& g) {
  std::vector<unitlat::Perm> gens;
  for (size_t s : g.generator_indices()) {
    unitlat::Perm p(g.order());
    for (size_t x = 0; x < g.order(); ++x) p[x] = static_cast<int>(g.mul(s, x));
    gens.push_back(p);
  }
  return PermGroup::generate(static_cast<int>(g.order()), gens);
}

}  // namespace fixtures
