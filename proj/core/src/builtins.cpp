#include "hott/builtins.hpp"

#include <map>

namespace hott {

const std::vector<BuiltinInfo>& all_builtins() {
  static const std::vector<BuiltinInfo> table = {
      {"Empty", BuiltinKind::TypeConst, 0, -1},
      {"Unit", BuiltinKind::TypeConst, 0, -1},
      {"Two", BuiltinKind::TypeConst, 0, -1},
      {"S1", BuiltinKind::TypeConst, 0, -1},
      {"S2", BuiltinKind::TypeConst, 0, -1},
      {"star", BuiltinKind::Constructor, 0, -1},
      {"zero2", BuiltinKind::Constructor, 0, -1},
      {"one2", BuiltinKind::Constructor, 0, -1},
      {"base1", BuiltinKind::Constructor, 0, -1},
      {"loop1", BuiltinKind::Constructor, 0, -1},
      {"base2", BuiltinKind::Constructor, 0, -1},
      {"loop2", BuiltinKind::Constructor, 0, -1},
      // ind0 M e; no iota rule (Empty has no constructors)
      {"ind0", BuiltinKind::Eliminator, 2, 1},
      // ind1 M m u;  ind1 M m star = m
      {"ind1", BuiltinKind::Eliminator, 3, 2},
      // ind2 M a0 a1 c;  c = zero2 -> a0, c = one2 -> a1
      {"ind2", BuiltinKind::Eliminator, 4, 3},
      // recS1 X x p s;  s = base1 -> x (loop computes only propositionally)
      {"recS1", BuiltinKind::Eliminator, 4, 3},
      // recS2 X x a s;  s = base2 -> x
      {"recS2", BuiltinKind::Eliminator, 4, 3},
  };
  return table;
}

const BuiltinInfo* builtin_info(const std::string& name) {
  static const std::map<std::string, const BuiltinInfo*> index = [] {
    std::map<std::string, const BuiltinInfo*> m;
    for (const auto& b : all_builtins()) m[b.name] = &b;
    return m;
  }();
  auto it = index.find(name);
  return it == index.end() ? nullptr : it->second;
}

}  // namespace hott
