#pragma once

#include "hott/signature.hpp"
#include "hott/term.hpp"
#include "hott/value.hpp"

namespace hott {

// Normalization by evaluation. Values are weak-head-ish but closures force on
// demand; quote reads back beta-normal terms, quote_at additionally
// eta-expands at Pi and Sigma types.

ValuePtr eval(const Signature& sig, const Env& env, const TermPtr& t);

ValuePtr apply_closure(const Signature& sig, const Closure& c, const std::vector<ValuePtr>& args);
ValuePtr v_app(const Signature& sig, const ValuePtr& fn, const ValuePtr& arg);
ValuePtr v_app(const Signature& sig, ValuePtr fn, const std::vector<ValuePtr>& args);
ValuePtr v_fst(const Signature& sig, const ValuePtr& v);
ValuePtr v_snd(const Signature& sig, const ValuePtr& v);
ValuePtr v_j(const Signature& sig, const Closure& motive, const Closure& base,
             const ValuePtr& scrut);
ValuePtr v_indw(const Signature& sig, const Closure& motive, const Closure& step,
                const ValuePtr& scrut);

// Beta-normal readback, no eta expansion of neutrals.
TermPtr quote(const Signature& sig, int depth, const ValuePtr& v);

// Type-directed readback: eta-long at Pi and Sigma.
TermPtr quote_at(const Signature& sig, int depth, const ValuePtr& ty, const ValuePtr& v);

// Definitional equality: beta-iota-delta with eta for Pi and Sigma. Callers
// guarantee both values share a type.
bool conv(const Signature& sig, int depth, const ValuePtr& a, const ValuePtr& b);

ValuePtr eval_closed(const Signature& sig, const TermPtr& t);

}  // namespace hott
