#include "hott/free_theorems.hpp"

#include "hott/builtins.hpp"
#include "hott/errors.hpp"
#include "hott/eval.hpp"

namespace hott {

namespace {

TermPtr pt(const Signature& sig, const std::string& s) {
  ElabScope sc;
  return elaborate(sig, sc, parse_expr_string("<recipe>", s));
}

void require(const Signature& sig, std::initializer_list<std::string> names) {
  for (const auto& n : names)
    if (!sig.has(n))
      fail(TypeErrorKind::MissingWitness,
           "free-theorem recipe needs the prelude lemma '" + n + "'");
}

}  // namespace

// Assembles the derivation steps: instantiate the relational witness at the
// graph relation of f with the reflexivity base point, feed the canonical
// encode inhabitant, and decode the conclusion.
FreeTheoremResult derive_free_theorem(Signature& sig, WitnessTable& table,
                                      const FreeRecipe& recipe, const std::string& def_name) {
  const SignatureEntry entry = sig.get(def_name);
  if (!entry.body)
    fail(TypeErrorKind::TemplateMismatch,
         "free theorems are derived for definitions, and '" + def_name + "' is an axiom");

  Translator tr(sig, table);
  Ctx ctx;
  FreeTheoremResult out;

  if (recipe.kind == FreeRecipe::LoopOp) {
    const int n = recipe.n, k = recipe.k;
    if (n < 1 || n > 3 || k < 1 || k > 3)
      fail(TypeErrorKind::TemplateMismatch, "loopop is provided for dimensions 1..3");
    const std::string nn = std::to_string(n), kk = std::to_string(k);
    TermPtr tmpl =
        pt(sig, "(X : U0) (x : X) -> Omega " + nn + " X x -> Omega " + kk + " X x");
    if (!conv_terms(sig, ctx, entry.type, tmpl))
      fail(TypeErrorKind::TemplateMismatch,
           "loopop " + nn + " " + kk + " expects '" + def_name + "' at type " +
               print_term_closed(sig, tmpl) + ", got " + print_term_closed(sig, entry.type));
    require(sig, {"graph_rel", "ap" + nn + "l", "ap" + kk + "l", "loopover_encode" + nn,
                  "loopover_decode" + kk});
    std::string wname = tr.materialize(def_name);

    std::string stmt =
        "(X : U0) (X' : U0) (f : X -> X') (x : X) (p : Omega " + nn + " X x) -> "
        "Id (Omega " + kk + " X' (f x)) "
        "(" + def_name + " X' (f x) (ap" + nn + "l X X' f x p)) "
        "(ap" + kk + "l X X' f x (" + def_name + " X x p))";
    std::string proof =
        "fun X X' f x p => "
        "loopover_decode" + kk + " X X' f x "
        "(" + def_name + " X x p) "
        "(" + def_name + " X' (f x) (ap" + nn + "l X X' f x p)) "
        "(" + wname + " X X' (graph_rel X X' f) x (f x) (refl (f x)) "
        "p (ap" + nn + "l X X' f x p) (loopover_encode" + nn + " X X' f x p))";
    out.statement = pt(sig, stmt);
    out.proof = pt(sig, proof);
  } else {
    const std::string& A = recipe.base_type;
    if (!sig.has(A) && !builtin_info(A))
      fail(TypeErrorKind::TemplateMismatch, "contembed: unknown base type '" + A + "'");
    TermPtr tmpl = pt(sig, "(X : U0) -> (" + A + " -> X) -> X");
    if (!conv_terms(sig, ctx, entry.type, tmpl))
      fail(TypeErrorKind::TemplateMismatch,
           "contembed expects '" + def_name + "' at type " + print_term_closed(sig, tmpl) +
               ", got " + print_term_closed(sig, entry.type));
    require(sig, {"church_i", "church_j", "ap"});
    std::string wname = tr.materialize(def_name);

    std::string stmt =
        "(X : U0) (g : " + A + " -> X) -> "
        "Id X (church_i " + A + " (church_j " + A + " " + def_name + ") X g) "
        "(" + def_name + " X g)";
    std::string proof =
        "fun X g => " + wname + " " + A + " X (fun a xx => Id X (g a) xx) "
        "(fun a => a) g (fun a a' a_r => ap " + A + " X g a a' a_r)";
    out.statement = pt(sig, stmt);
    out.proof = pt(sig, proof);
  }

  out.name = def_name + "_free";
  while (sig.has(out.name)) out.name += "'";
  check_decl(sig, out.name, out.statement, out.proof, WitnessStatus::pending(),
             /*allow_internal=*/true);
  return out;
}

}  // namespace hott
