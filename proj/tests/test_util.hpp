#pragma once

#include <string>

#include "hott/check.hpp"
#include "hott/surface.hpp"

namespace hott::test {

inline TermPtr term_of(const Signature& sig, const std::string& src) {
  ElabScope scope;
  return elaborate(sig, scope, parse_expr_string("<test>", src));
}

// Elaborate under named binders (for open terms).
inline TermPtr term_in(const Signature& sig, const std::vector<std::string>& names,
                     const std::string& src) {
  ElabScope scope;
  scope.names = names;
  return elaborate(sig, scope, parse_expr_string("<test>", src));
}

inline ValuePtr ev(const Signature& sig, const std::string& src) {
  return eval_closed(sig, term_of(sig, src));
}

inline bool conv0(const Signature& sig, const std::string& a, const std::string& b) {
  return conv(sig, 0, ev(sig, a), ev(sig, b));
}

inline void declare(Signature& sig, const std::string& name, const std::string& ty,
                    const std::string& body) {
  check_decl(sig, name, term_of(sig, ty), term_of(sig, body));
}

inline void declare_axiom(Signature& sig, const std::string& name, const std::string& ty) {
  check_decl(sig, name, term_of(sig, ty), std::nullopt);
}

struct PrinterInit {
  PrinterInit() { install_term_printer(); }
};
inline PrinterInit printer_init;

}  // namespace hott::test
