#pragma once

#include <string>

#include "hott/signature.hpp"
#include "hott/surface.hpp"
#include "hott/translate.hpp"

namespace hott {

struct FreeTheoremResult {
  std::string name;   // the registered proof entry
  TermPtr statement;  // its type
  TermPtr proof;
};

// Derives the free theorem for the closed definition `def_name` following the
// recipe, checks the proof and registers it in the signature.
//   LoopOp(n,k):  t : (X : U0)(x : X) -> Omega^n(X,x) -> Omega^k(X,x)
//                 yields  t (ap_n f p) = ap_k f (t p)
//   ContEmbed(A): t : (X : U0) -> (A -> X) -> X
//                 yields  (i (j t)) g = t g
FreeTheoremResult derive_free_theorem(Signature& sig, WitnessTable& table,
                                      const FreeRecipe& recipe, const std::string& def_name);

}  // namespace hott
