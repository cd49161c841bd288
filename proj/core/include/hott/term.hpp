#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hott {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Abstract syntax of the theory. Binders are de Bruijn; `name` fields are
// printing hints only and never affect equality.
struct Var {
  int ix;  // de Bruijn index, innermost = 0
};
struct Univ {
  int level;
};
struct Pi {
  std::string name;
  TermPtr dom;
  TermPtr cod;  // binds 1
};
struct Lam {
  std::string name;
  TermPtr body;  // binds 1
};
struct App {
  TermPtr fn;
  TermPtr arg;
};
struct Sigma {
  std::string name;
  TermPtr fst_ty;
  TermPtr snd_ty;  // binds 1
};
struct PairT {
  TermPtr fst;
  TermPtr snd;
};
struct FstT {
  TermPtr t;
};
struct SndT {
  TermPtr t;
};
struct IdT {
  TermPtr ty;
  TermPtr lhs;
  TermPtr rhs;
};
struct ReflT {
  TermPtr t;
};
// Based path induction. The motive abstracts the right endpoint and the path;
// the base case abstracts the basepoint, so the iota rule is J(M,m,refl a) =
// m[a]. The elaborator only ever produces bases that ignore their binder.
struct JT {
  TermPtr motive;  // binds 2: (y, p)
  TermPtr base;    // binds 1: (x)
  TermPtr scrut;
};
// Indexed W former W[t,A,B] applied to an index.
struct IWT {
  std::string name;  // hint for the index binder
  TermPtr idx_ty;    // I
  TermPtr fam_a;     // binds 1: (i)       A(i)
  TermPtr fam_b;     // binds 2: (i, a)    B(i, a)
  TermPtr reindex;   // binds 3: (i, a, y) t(i, a, y) : I
  TermPtr index;
};
// Constructor of an indexed W-type. The index annotation is checked against
// the expected type and drives the indW iota rule; it is ignored by
// conversion.
struct SupT {
  TermPtr index;
  TermPtr label;
  TermPtr branch;
};
struct IndWT {
  TermPtr motive;  // binds 2: (i, w)
  TermPtr step;    // binds 4: (i, a, f, g)
  TermPtr scrut;
};
// Built-in constants, axioms and defined names, with their argument spine.
struct ConstT {
  std::string name;
  std::vector<TermPtr> spine;
};

using TermNode = std::variant<Var, Univ, Pi, Lam, App, Sigma, PairT, FstT, SndT, IdT, ReflT, JT,
                              IWT, SupT, IndWT, ConstT>;

struct Term {
  TermNode node;
};

// -- constructors ------------------------------------------------------------

TermPtr t_var(int ix);
TermPtr t_univ(int level);
TermPtr t_pi(std::string name, TermPtr dom, TermPtr cod);
TermPtr t_arrow(TermPtr dom, TermPtr cod);  // non-dependent: shifts cod under the binder
TermPtr t_lam(std::string name, TermPtr body);
TermPtr t_app(TermPtr fn, TermPtr arg);
TermPtr t_app(TermPtr fn, const std::vector<TermPtr>& args);
TermPtr t_sigma(std::string name, TermPtr fst_ty, TermPtr snd_ty);
TermPtr t_pair(TermPtr fst, TermPtr snd);
TermPtr t_fst(TermPtr t);
TermPtr t_snd(TermPtr t);
TermPtr t_id(TermPtr ty, TermPtr lhs, TermPtr rhs);
TermPtr t_refl(TermPtr t);
TermPtr t_j(TermPtr motive, TermPtr base, TermPtr scrut);
TermPtr t_iw(std::string name, TermPtr idx_ty, TermPtr fam_a, TermPtr fam_b, TermPtr reindex,
             TermPtr index);
TermPtr t_sup(TermPtr index, TermPtr label, TermPtr branch);
TermPtr t_indw(TermPtr motive, TermPtr step, TermPtr scrut);
TermPtr t_const(std::string name, std::vector<TermPtr> spine = {});

// -- de Bruijn utilities -----------------------------------------------------

// Rewrites every free variable: fn(absolute index counted from the term root,
// number of binders crossed) must return the replacement term, already valid
// at that binder depth.
TermPtr map_free_vars(const TermPtr& t, const std::function<TermPtr(int ix, int depth)>& fn);

// Shift free variables with index >= cutoff by delta.
TermPtr shift(const TermPtr& t, int delta, int cutoff = 0);

// Substitute `u` for Var(ix); free variables above ix are shifted down.
TermPtr subst(const TermPtr& t, int ix, const TermPtr& u);

bool uses_var(const TermPtr& t, int ix);

// Inverse of one weakening step at `ix`; precondition: !uses_var(t, ix).
TermPtr strengthen(const TermPtr& t, int ix);

// Structural equality; ignores name hints and Sup index annotations do count
// here (this is raw syntax, used by golden and idempotence tests).
bool term_eq(const TermPtr& a, const TermPtr& b);

std::size_t term_size(const TermPtr& t);

// Raw de Bruijn rendering for kernel diagnostics; the surface printer is the
// user-facing one.
std::string show_raw(const TermPtr& t);

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace hott
