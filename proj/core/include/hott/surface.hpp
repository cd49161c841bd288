#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hott/errors.hpp"
#include "hott/signature.hpp"
#include "hott/term.hpp"

namespace hott {

// -- surface expressions ------------------------------------------------------

struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

struct SName {
  std::string name;
};
struct SUniv {
  int level;
};
struct SPiE {
  std::string name;  // "_" for arrows
  SExprPtr dom;
  SExprPtr cod;
};
struct SFun {
  std::vector<std::string> params;
  SExprPtr body;
};
struct SAppE {
  SExprPtr fn;
  SExprPtr arg;
};
struct SSigmaE {
  std::string name;
  SExprPtr fst;
  SExprPtr snd;
};
struct SPairE {
  SExprPtr fst;
  SExprPtr snd;
};
struct SFstE {
  SExprPtr t;
};
struct SSndE {
  SExprPtr t;
};
struct SIdE {
  SExprPtr ty, lhs, rhs;
};
struct SReflE {
  SExprPtr t;
};
struct SJE {
  SExprPtr motive;  // fun with 2 params
  SExprPtr base;    // plain term (J) or fun with 1 param (Jd)
  SExprPtr scrut;
  bool dependent_base = false;
};
struct SIWE {
  SExprPtr idx_ty, fam_a, fam_b, reindex, index;
};
struct SSupE {
  SExprPtr index, label, branch;
};
struct SIndWE {
  SExprPtr motive, step, scrut;
};
struct SOmegaE {
  int n;
  SExprPtr ty, pt;
};
struct SReflnE {
  int n;
  SExprPtr ty, pt;
};

using SExprNode = std::variant<SName, SUniv, SPiE, SFun, SAppE, SSigmaE, SPairE, SFstE, SSndE,
                               SIdE, SReflE, SJE, SIWE, SSupE, SIndWE, SOmegaE, SReflnE>;

struct SExpr {
  SExprNode node;
  SourceSpan span;
};

// -- declarations --------------------------------------------------------------

struct WitnessClause {
  bool trusted = false;  // otherwise derived
  std::string name;
};

struct DeclDef {
  std::string name;
  SExprPtr type;
  SExprPtr body;
};
struct DeclAxiom {
  std::string name;
  SExprPtr type;
  std::optional<WitnessClause> witness;
};
struct DeclCheck {
  SExprPtr expr;
  SExprPtr type;
};
struct DeclNormalize {
  SExprPtr expr;
};
struct DeclTranslate {
  std::string name;
};
struct FreeRecipe {
  enum Kind { LoopOp, ContEmbed } kind = LoopOp;
  int n = 1, k = 1;          // LoopOp
  std::string base_type;     // ContEmbed
};
struct DeclFree {
  FreeRecipe recipe;
  std::string name;
};
struct DeclImport {
  std::string module;
};

using DeclNode =
    std::variant<DeclDef, DeclAxiom, DeclCheck, DeclNormalize, DeclTranslate, DeclFree, DeclImport>;

struct SurfaceDecl {
  DeclNode node;
  SourceSpan span;
};

std::vector<SurfaceDecl> parse_file(const std::string& file_name, const std::string& text);

// Parses a single expression (used by tests and CLI flags).
SExprPtr parse_expr_string(const std::string& file_name, const std::string& text);

// -- elaboration ---------------------------------------------------------------

// Side table from elaborated nodes back to surface spans, for diagnostics.
using SpanMap = std::map<const Term*, SourceSpan>;

struct ElabScope {
  std::vector<std::string> names;
};

TermPtr elaborate(const Signature& sig, ElabScope& scope, const SExprPtr& e,
                  SpanMap* spans = nullptr);

// -- printing ------------------------------------------------------------------

// parse(print(t)) elaborates back to exactly t. `ctx_names` are the binder
// names of the ambient telescope, outermost first.
std::string print_term(const Signature& sig, const std::vector<std::string>& ctx_names,
                       const TermPtr& t);
std::string print_term_closed(const Signature& sig, const TermPtr& t);

// Stable parenthesized AST for golden tests.
std::string sexpr_term(const TermPtr& t);

// Installs print_term (with a throwaway signature) as the kernel diagnostic
// renderer.
void install_term_printer();

}  // namespace hott
