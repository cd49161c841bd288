#include <cctype>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "hott/builtins.hpp"
#include "hott/check.hpp"
#include "hott/surface.hpp"

namespace hott {

namespace {

bool reserved_word(const std::string& s) {
  static const std::set<std::string> kws = {"def",   "axiom", "import",  "fun",     "Sigma",
                                            "IW",    "sup",   "indW",    "J",       "Jd",
                                            "Id",    "refl",  "fst",     "snd",     "Omega",
                                            "refln", "trusted", "derived", "loopop", "contembed"};
  if (kws.count(s)) return true;
  if (s.size() >= 2 && s[0] == 'U') {
    bool digits = true;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
    if (digits) return true;
  }
  return false;
}

struct Printer {
  const Signature* sig;
  std::vector<std::string> names;
  std::set<std::string> used;

  std::string fresh(std::string hint, bool binder_used) {
    if (!binder_used) return "_";
    if (hint.empty() || hint == "_") hint = "x";
    std::string base;
    for (char c : hint)
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') base += c;
    // hints derived from anonymous binders read poorly; rename them
    while (!base.empty() && (base[0] == '_' || base[0] == '\'')) base.erase(base.begin());
    if (base.empty() || std::isdigit(static_cast<unsigned char>(base[0]))) base = "x";
    auto taken = [&](const std::string& n) {
      if (reserved_word(n) || used.count(n) || builtin_info(n)) return true;
      return sig && sig->has(n);
    };
    if (!taken(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!taken(cand)) return cand;
    }
  }

  struct Bind {
    Printer& p;
    std::string name;
    bool tracked;
    Bind(Printer& pr, const std::string& hint, bool binder_used) : p(pr) {
      name = p.fresh(hint, binder_used);
      p.names.push_back(name);
      tracked = name != "_" && !p.used.count(name);
      if (tracked) p.used.insert(name);
    }
    ~Bind() {
      p.names.pop_back();
      if (tracked) p.used.erase(name);
    }
  };

  static std::string paren(const std::string& s, bool need) {
    return need ? "(" + s + ")" : s;
  }

  // prec: 0 lowest (fun/arrow/Sigma), 1 application, 2 atom
  std::string go(const TermPtr& t, int prec) {
    return std::visit(
        overloaded{
            [&](const Var& v) -> std::string {
              std::size_t ix = static_cast<std::size_t>(v.ix);
              if (ix < names.size()) return names[names.size() - 1 - ix];
              return "#" + std::to_string(v.ix);  // open term fallback
            },
            [&](const Univ& u) -> std::string { return "U" + std::to_string(u.level); },
            [&](const Pi& p) -> std::string {
              std::string out;
              if (uses_var(p.cod, 0)) {
                std::string dom = go(p.dom, 0);
                Bind b(*this, p.name, true);
                out = "(" + b.name + " : " + dom + ") -> " + go(p.cod, 0);
              } else {
                std::string dom = go(p.dom, 1);
                Bind b(*this, p.name, false);
                out = dom + " -> " + go(p.cod, 0);
              }
              return paren(out, prec > 0);
            },
            [&](const Lam&) -> std::string {
              std::vector<std::string> params;
              TermPtr body = t;
              std::vector<std::unique_ptr<Bind>> binds;
              while (const Lam* l = std::get_if<Lam>(&body->node)) {
                binds.push_back(
                    std::make_unique<Bind>(*this, l->name, uses_var(l->body, 0)));
                params.push_back(binds.back()->name);
                body = l->body;
              }
              std::string out = "fun";
              for (const auto& pn : params) out += " " + pn;
              out += " => " + go(body, 0);
              return paren(out, prec > 0);
            },
            [&](const App& a) -> std::string {
              return paren(go(a.fn, 1) + " " + go(a.arg, 2), prec > 1);
            },
            [&](const Sigma& s) -> std::string {
              std::string fst = go(s.fst_ty, 0);
              // Sigma syntax always names its binder
              Bind b(*this, s.name, true);
              std::string out = "Sigma (" + b.name + " : " + fst + "), " + go(s.snd_ty, 0);
              return paren(out, prec > 0);
            },
            [&](const PairT& p) -> std::string {
              return "(" + go(p.fst, 0) + ", " + go(p.snd, 0) + ")";
            },
            [&](const FstT& f) -> std::string {
              return paren("fst " + go(f.t, 2), prec > 1);
            },
            [&](const SndT& s) -> std::string {
              return paren("snd " + go(s.t, 2), prec > 1);
            },
            [&](const IdT& i) -> std::string {
              return paren("Id " + go(i.ty, 2) + " " + go(i.lhs, 2) + " " + go(i.rhs, 2),
                           prec > 1);
            },
            [&](const ReflT& r) -> std::string {
              return paren("refl " + go(r.t, 2), prec > 1);
            },
            [&](const JT& j) -> std::string {
              std::string motive;
              {
                Bind by(*this, "y", uses_var(j.motive, 1));
                Bind bp(*this, "p", uses_var(j.motive, 0));
                motive = "(fun " + by.name + " " + bp.name + " => " + go(j.motive, 0) + ")";
              }
              std::string out;
              if (uses_var(j.base, 0)) {
                Bind bx(*this, "x", true);
                out = "Jd " + motive + " (fun " + bx.name + " => " + go(j.base, 0) + ")";
              } else {
                out = "J " + motive + " " + go(strengthen(j.base, 0), 2);
              }
              out += " " + go(j.scrut, 2);
              return paren(out, prec > 1);
            },
            [&](const IWT& w) -> std::string {
              std::string out = "IW " + go(w.idx_ty, 2);
              {
                Bind bi(*this, w.name, uses_var(w.fam_a, 0));
                out += " (fun " + bi.name + " => " + go(w.fam_a, 0) + ")";
              }
              {
                Bind bi(*this, w.name, uses_var(w.fam_b, 1));
                Bind ba(*this, "a", uses_var(w.fam_b, 0));
                out += " (fun " + bi.name + " " + ba.name + " => " + go(w.fam_b, 0) + ")";
              }
              {
                Bind bi(*this, w.name, uses_var(w.reindex, 2));
                Bind ba(*this, "a", uses_var(w.reindex, 1));
                Bind by(*this, "y", uses_var(w.reindex, 0));
                out += " (fun " + bi.name + " " + ba.name + " " + by.name + " => " +
                       go(w.reindex, 0) + ")";
              }
              out += " " + go(w.index, 2);
              return paren(out, prec > 1);
            },
            [&](const SupT& s) -> std::string {
              return paren("sup " + go(s.index, 2) + " " + go(s.label, 2) + " " +
                               go(s.branch, 2),
                           prec > 1);
            },
            [&](const IndWT& iw) -> std::string {
              std::string motive;
              {
                Bind bi(*this, "i", uses_var(iw.motive, 1));
                Bind bw(*this, "w", uses_var(iw.motive, 0));
                motive = "(fun " + bi.name + " " + bw.name + " => " + go(iw.motive, 0) + ")";
              }
              std::string step;
              {
                Bind bi(*this, "i", uses_var(iw.step, 3));
                Bind ba(*this, "a", uses_var(iw.step, 2));
                Bind bf(*this, "f", uses_var(iw.step, 1));
                Bind bg(*this, "g", uses_var(iw.step, 0));
                step = "(fun " + bi.name + " " + ba.name + " " + bf.name + " " + bg.name +
                       " => " + go(iw.step, 0) + ")";
              }
              return paren("indW " + motive + " " + step + " " + go(iw.scrut, 2), prec > 1);
            },
            [&](const ConstT& c) -> std::string {
              if (c.spine.empty()) return c.name;
              std::string out = c.name;
              for (const auto& a : c.spine) out += " " + go(a, 2);
              return paren(out, prec > 1);
            },
        },
        t->node);
  }
};

std::string print_with(const Signature* sig, const std::vector<std::string>& ctx_names,
                       const TermPtr& t) {
  Printer p;
  p.sig = sig;
  p.names = ctx_names;
  for (const auto& n : ctx_names)
    if (n != "_") p.used.insert(n);
  return p.go(t, 0);
}

std::string diagnostic_show(const TermPtr& t) { return print_with(nullptr, {}, t); }

}  // namespace

std::string print_term(const Signature& sig, const std::vector<std::string>& ctx_names,
                       const TermPtr& t) {
  return print_with(&sig, ctx_names, t);
}

std::string print_term_closed(const Signature& sig, const TermPtr& t) {
  return print_with(&sig, {}, t);
}

void install_term_printer() { set_term_show(&diagnostic_show); }

std::string sexpr_term(const TermPtr& t) {
  std::ostringstream o;
  std::function<void(const TermPtr&)> go = [&](const TermPtr& u) {
    std::visit(
        overloaded{
            [&](const Var& v) { o << "(var " << v.ix << ")"; },
            [&](const Univ& x) { o << "(univ " << x.level << ")"; },
            [&](const Pi& p) {
              o << "(pi ";
              go(p.dom);
              o << " ";
              go(p.cod);
              o << ")";
            },
            [&](const Lam& l) {
              o << "(lam ";
              go(l.body);
              o << ")";
            },
            [&](const App& a) {
              o << "(app ";
              go(a.fn);
              o << " ";
              go(a.arg);
              o << ")";
            },
            [&](const Sigma& s) {
              o << "(sigma ";
              go(s.fst_ty);
              o << " ";
              go(s.snd_ty);
              o << ")";
            },
            [&](const PairT& p) {
              o << "(pair ";
              go(p.fst);
              o << " ";
              go(p.snd);
              o << ")";
            },
            [&](const FstT& f) {
              o << "(fst ";
              go(f.t);
              o << ")";
            },
            [&](const SndT& s) {
              o << "(snd ";
              go(s.t);
              o << ")";
            },
            [&](const IdT& i) {
              o << "(id ";
              go(i.ty);
              o << " ";
              go(i.lhs);
              o << " ";
              go(i.rhs);
              o << ")";
            },
            [&](const ReflT& r) {
              o << "(refl ";
              go(r.t);
              o << ")";
            },
            [&](const JT& j) {
              o << "(j ";
              go(j.motive);
              o << " ";
              go(j.base);
              o << " ";
              go(j.scrut);
              o << ")";
            },
            [&](const IWT& w) {
              o << "(iw ";
              go(w.idx_ty);
              o << " ";
              go(w.fam_a);
              o << " ";
              go(w.fam_b);
              o << " ";
              go(w.reindex);
              o << " ";
              go(w.index);
              o << ")";
            },
            [&](const SupT& s) {
              o << "(sup ";
              go(s.index);
              o << " ";
              go(s.label);
              o << " ";
              go(s.branch);
              o << ")";
            },
            [&](const IndWT& iw) {
              o << "(indw ";
              go(iw.motive);
              o << " ";
              go(iw.step);
              o << " ";
              go(iw.scrut);
              o << ")";
            },
            [&](const ConstT& c) {
              o << "(const \"" << c.name << "\"";
              for (const auto& a : c.spine) {
                o << " ";
                go(a);
              }
              o << ")";
            },
        },
        u->node);
  };
  go(t);
  return o.str();
}

}  // namespace hott
