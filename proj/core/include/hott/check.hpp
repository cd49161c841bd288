#pragma once

#include <optional>

#include "hott/eval.hpp"
#include "hott/signature.hpp"
#include "hott/telescope.hpp"
#include "hott/term.hpp"

namespace hott {

// Bidirectional discipline: Lam, Pair, Refl and Sup are checked; everything
// else infers.

ValuePtr infer(const Signature& sig, Ctx& ctx, const TermPtr& t);
void check(const Signature& sig, Ctx& ctx, const TermPtr& t, const ValuePtr& ty);

// Least level l with ctx |- t : U_l; throws NotAType otherwise.
int check_type(const Signature& sig, Ctx& ctx, const TermPtr& t);

// Validates and appends a definition or axiom.
void check_decl(Signature& sig, const std::string& name, const TermPtr& type,
                const std::optional<TermPtr>& body, WitnessStatus witness = WitnessStatus::pending(),
                bool allow_internal = false);

// eval then eta-long readback at the inferred type.
TermPtr normalize(const Signature& sig, Ctx& ctx, const TermPtr& t);
TermPtr normalize_at(const Signature& sig, Ctx& ctx, const TermPtr& t, const ValuePtr& ty);

// Readback of a type-valued term (no level needed; types quote structurally).
TermPtr normalize_type(const Signature& sig, Ctx& ctx, const TermPtr& t);

bool conv_terms(const Signature& sig, Ctx& ctx, const TermPtr& a, const TermPtr& b);

// Type of a constant head (builtin constants have schematic types read off
// their first arguments). Used by the checker and the translator.
ValuePtr const_head_type(const Signature& sig, Ctx& ctx, const ConstT& c, const TermPtr& at);

// Pluggable term renderer for diagnostics; the surface printer installs
// itself here so kernel errors print readable syntax.
using TermShowFn = std::string (*)(const TermPtr&);
void set_term_show(TermShowFn fn);
std::string show_term(const TermPtr& t);
std::string show_value(const Signature& sig, int depth, const ValuePtr& v);

}  // namespace hott
