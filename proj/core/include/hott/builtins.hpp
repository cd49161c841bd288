#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hott {

enum class BuiltinKind {
  TypeConst,    // Empty, Unit, Two, S1, S2
  Constructor,  // star, zero2, one2, base1, loop1, base2, loop2
  Eliminator,   // ind0, ind1, ind2, recS1, recS2
};

struct BuiltinInfo {
  std::string name;
  BuiltinKind kind;
  // For eliminators: total argument count and the scrutinee position.
  int arity = 0;
  int scrut_pos = -1;
};

const BuiltinInfo* builtin_info(const std::string& name);
const std::vector<BuiltinInfo>& all_builtins();

}  // namespace hott
