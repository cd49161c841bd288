#include <cctype>
#include <cstring>

#include "hott/surface.hpp"

namespace hott {

namespace {

enum class Tok {
  Ident,
  Nat,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Colon,
  Comma,
  Arrow,    // ->
  DArrow,   // =>
  Assign,   // :=
  Hash,     // #ident, stored in text
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

struct Lexer {
  const std::string& src;
  std::string file;
  std::size_t pos = 0;
  std::vector<Token> out;

  explicit Lexer(const std::string& s, std::string f) : src(s), file(std::move(f)) {}

  SourceSpan span(std::size_t b, std::size_t e) const { return SourceSpan{file, b, e}; }

  bool ident_char(char ch) const {
    unsigned char u = static_cast<unsigned char>(ch);
    return std::isalnum(u) || ch == '_' || ch == '\'' || u >= 0x80;
  }

  // Unicode notation aliases for the ASCII tokens; the corpus itself stays
  // ASCII.
  bool alias(const char* utf8, Tok kind, const char* text) {
    std::size_t n = std::strlen(utf8);
    if (src.compare(pos, n, utf8) != 0) return false;
    out.push_back({kind, text, span(pos, pos + n)});
    pos += n;
    return true;
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos;
        continue;
      }
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') ++pos;
        continue;
      }
      if (alias("\xe2\x86\x92", Tok::Arrow, "->") ||
          alias("\xe2\x87\x92", Tok::DArrow, "=>"))
        continue;
      std::size_t b = pos;
      unsigned char uc = static_cast<unsigned char>(c);
      if (std::isalpha(uc) || c == '_' || uc >= 0x80) {
        while (pos < src.size() && ident_char(src[pos])) ++pos;
        out.push_back({Tok::Ident, src.substr(b, pos - b), span(b, pos)});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        out.push_back({Tok::Nat, src.substr(b, pos - b), span(b, pos)});
        continue;
      }
      if (c == '#') {
        ++pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        out.push_back({Tok::Hash, src.substr(b + 1, pos - b - 1), span(b, pos)});
        continue;
      }
      auto two = [&](char a2, char b2) {
        return c == a2 && pos + 1 < src.size() && src[pos + 1] == b2;
      };
      if (two('-', '>')) {
        pos += 2;
        out.push_back({Tok::Arrow, "->", span(b, pos)});
        continue;
      }
      if (two('=', '>')) {
        pos += 2;
        out.push_back({Tok::DArrow, "=>", span(b, pos)});
        continue;
      }
      if (two(':', '=')) {
        pos += 2;
        out.push_back({Tok::Assign, ":=", span(b, pos)});
        continue;
      }
      switch (c) {
        case '(': out.push_back({Tok::LParen, "(", span(b, b + 1)}); break;
        case ')': out.push_back({Tok::RParen, ")", span(b, b + 1)}); break;
        case '[': out.push_back({Tok::LBracket, "[", span(b, b + 1)}); break;
        case ']': out.push_back({Tok::RBracket, "]", span(b, b + 1)}); break;
        case ':': out.push_back({Tok::Colon, ":", span(b, b + 1)}); break;
        case ',': out.push_back({Tok::Comma, ",", span(b, b + 1)}); break;
        default:
          throw ParseError(span(b, b + 1), "unexpected character '" + std::string(1, c) + "'");
      }
      ++pos;
    }
    out.push_back({Tok::End, "", span(src.size(), src.size())});
  }
};

bool is_keyword(const std::string& s) {
  static const char* kws[] = {"def", "axiom",  "import", "fun", "Sigma",   "IW",
                              "sup", "indW",   "J",      "Jd",  "Id",      "refl",
                              "fst", "snd",    "Omega",  "refln", "trusted", "derived",
                              "loopop", "contembed"};
  for (const char* k : kws)
    if (s == k) return true;
  return false;
}

SExprPtr mk(SExprNode n, SourceSpan sp) {
  auto e = std::make_shared<SExpr>();
  const_cast<SExpr&>(*e).node = std::move(n);
  const_cast<SExpr&>(*e).span = std::move(sp);
  return e;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t i = 0;

  const Token& peek(int k = 0) const { return toks[std::min(i + k, toks.size() - 1)]; }
  Token next() { return toks[i == toks.size() - 1 ? i : i++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(const char* s) const { return at(Tok::Ident) && peek().text == s; }

  [[noreturn]] void err(const std::string& msg, const std::string& expected = "") {
    throw ParseError(peek().span, msg + " (found '" + (peek().kind == Tok::End ? "<eof>" : peek().text) + "')",
                     expected);
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) err(std::string("expected ") + what, what);
    return next();
  }

  std::string expect_name() {
    if (!at(Tok::Ident) || is_keyword(peek().text)) err("expected a name", "identifier");
    return next().text;
  }

  int expect_nat() {
    if (!at(Tok::Nat)) err("expected a numeral", "nat");
    return std::stoi(next().text);
  }

  // U<digits> identifiers are universe literals
  static std::optional<int> univ_of(const std::string& s) {
    if (s.size() < 2 || s[0] != 'U') return std::nullopt;
    for (std::size_t j = 1; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
    return std::stoi(s.substr(1));
  }

  SExprPtr expr() {
    SourceSpan start = peek().span;
    if (at_ident("fun")) {
      next();
      std::vector<std::string> params;
      while (at(Tok::Ident) && !is_keyword(peek().text)) params.push_back(next().text);
      if (params.empty()) err("expected parameter names after 'fun'");
      expect(Tok::DArrow, "=>");
      SExprPtr body = expr();
      return mk(SFun{std::move(params), body}, start);
    }
    if (at_ident("Sigma")) {
      next();
      expect(Tok::LParen, "(");
      std::string name = expect_name();
      expect(Tok::Colon, ":");
      SExprPtr fst = expr();
      expect(Tok::RParen, ")");
      expect(Tok::Comma, ",");
      SExprPtr snd = expr();
      return mk(SSigmaE{name, fst, snd}, start);
    }
    // binder groups:  ( x y : A ) ( z : B ) -> cod
    if (at(Tok::LParen) && binder_ahead()) {
      std::vector<std::pair<std::vector<std::string>, SExprPtr>> groups;
      while (at(Tok::LParen) && binder_ahead()) {
        next();
        std::vector<std::string> names;
        while (at(Tok::Ident) && !is_keyword(peek().text)) names.push_back(next().text);
        expect(Tok::Colon, ":");
        SExprPtr dom = expr();
        expect(Tok::RParen, ")");
        groups.emplace_back(std::move(names), dom);
      }
      expect(Tok::Arrow, "->");
      SExprPtr cod = expr();
      for (auto g = groups.rbegin(); g != groups.rend(); ++g)
        for (auto n = g->first.rbegin(); n != g->first.rend(); ++n)
          cod = mk(SPiE{*n, g->second, cod}, start);
      return cod;
    }
    SExprPtr head = application();
    if (at(Tok::Arrow)) {
      next();
      SExprPtr cod = expr();
      return mk(SPiE{"_", head, cod}, start);
    }
    return head;
  }

  // lookahead: '(' ident+ ':'  means a dependent binder group
  bool binder_ahead() const {
    std::size_t j = i + 1;
    bool saw = false;
    while (j < toks.size() && toks[j].kind == Tok::Ident && !is_keyword(toks[j].text)) {
      saw = true;
      ++j;
    }
    return saw && j < toks.size() && toks[j].kind == Tok::Colon;
  }

  SExprPtr application() {
    SourceSpan start = peek().span;
    SExprPtr head = special_or_atom();
    while (atom_ahead()) {
      SExprPtr arg = atom();
      head = mk(SAppE{head, arg}, start);
    }
    return head;
  }

  bool atom_ahead() const {
    if (at(Tok::LParen)) return true;
    if (at(Tok::Ident)) return !is_keyword(peek().text) || false;
    return false;
  }

  SExprPtr special_or_atom() {
    SourceSpan start = peek().span;
    if (at(Tok::Ident) && is_keyword(peek().text)) {
      std::string kw = peek().text;
      if (kw == "Id") {
        next();
        SExprPtr a = atom(), b = atom(), c = atom();
        return mk(SIdE{a, b, c}, start);
      }
      if (kw == "refl") {
        next();
        return mk(SReflE{atom()}, start);
      }
      if (kw == "fst") {
        next();
        return mk(SFstE{atom()}, start);
      }
      if (kw == "snd") {
        next();
        return mk(SSndE{atom()}, start);
      }
      if (kw == "J" || kw == "Jd") {
        next();
        SExprPtr m = atom(), b = atom(), s = atom();
        return mk(SJE{m, b, s, kw == "Jd"}, start);
      }
      if (kw == "IW") {
        next();
        SExprPtr I = atom(), A = atom(), B = atom(), t = atom(), ix = atom();
        return mk(SIWE{I, A, B, t, ix}, start);
      }
      if (kw == "sup") {
        next();
        SExprPtr ix = atom(), a = atom(), f = atom();
        return mk(SSupE{ix, a, f}, start);
      }
      if (kw == "indW") {
        next();
        SExprPtr m = atom(), d = atom(), w = atom();
        return mk(SIndWE{m, d, w}, start);
      }
      if (kw == "Omega" || kw == "refln") {
        next();
        int n = expect_nat();
        SExprPtr A = atom(), a = atom();
        if (kw == "Omega") return mk(SOmegaE{n, A, a}, start);
        return mk(SReflnE{n, A, a}, start);
      }
      err("keyword '" + kw + "' cannot start an expression here");
    }
    return atom();
  }

  SExprPtr atom() {
    SourceSpan start = peek().span;
    if (at(Tok::LParen)) {
      next();
      SExprPtr e = expr();
      if (at(Tok::Comma)) {
        next();
        SExprPtr snd = expr();
        expect(Tok::RParen, ")");
        return mk(SPairE{e, snd}, start);
      }
      expect(Tok::RParen, ")");
      return e;
    }
    if (at(Tok::Ident)) {
      if (is_keyword(peek().text)) err("unexpected keyword '" + peek().text + "'");
      Token t = next();
      if (auto u = univ_of(t.text)) return mk(SUniv{*u}, t.span);
      return mk(SName{t.text}, t.span);
    }
    err("expected an expression", "expression");
  }

  std::vector<SurfaceDecl> file() {
    std::vector<SurfaceDecl> decls;
    while (!at(Tok::End)) {
      SourceSpan start = peek().span;
      if (at_ident("def")) {
        next();
        std::string name = expect_name();
        expect(Tok::Colon, ":");
        SExprPtr ty = expr();
        expect(Tok::Assign, ":=");
        SExprPtr body = expr();
        decls.push_back({DeclDef{name, ty, body}, start});
      } else if (at_ident("axiom")) {
        next();
        std::string name = expect_name();
        expect(Tok::Colon, ":");
        SExprPtr ty = expr();
        std::optional<WitnessClause> w;
        if (at(Tok::LBracket)) {
          next();
          bool trusted;
          if (at_ident("trusted"))
            trusted = true;
          else if (at_ident("derived"))
            trusted = false;
          else
            err("expected 'trusted' or 'derived'");
          next();
          std::string wn = expect_name();
          expect(Tok::RBracket, "]");
          w = WitnessClause{trusted, wn};
        }
        decls.push_back({DeclAxiom{name, ty, w}, start});
      } else if (at_ident("import")) {
        next();
        decls.push_back({DeclImport{expect_name()}, start});
      } else if (at(Tok::Hash)) {
        std::string cmd = next().text;
        if (cmd == "check") {
          SExprPtr e = expr();
          expect(Tok::Colon, ":");
          SExprPtr ty = expr();
          decls.push_back({DeclCheck{e, ty}, start});
        } else if (cmd == "normalize") {
          decls.push_back({DeclNormalize{expr()}, start});
        } else if (cmd == "translate") {
          decls.push_back({DeclTranslate{expect_name()}, start});
        } else if (cmd == "free") {
          FreeRecipe r;
          if (at_ident("loopop")) {
            next();
            r.kind = FreeRecipe::LoopOp;
            r.n = expect_nat();
            r.k = expect_nat();
          } else if (at_ident("contembed")) {
            next();
            r.kind = FreeRecipe::ContEmbed;
            r.base_type = expect_name();
          } else {
            err("expected 'loopop' or 'contembed'");
          }
          decls.push_back({DeclFree{r, expect_name()}, start});
        } else {
          err("unknown directive '#" + cmd + "'");
        }
      } else {
        err("expected a declaration", "def|axiom|import|#directive");
      }
    }
    return decls;
  }
};

}  // namespace

std::vector<SurfaceDecl> parse_file(const std::string& file_name, const std::string& text) {
  Lexer lex(text, file_name);
  lex.run();
  Parser p{std::move(lex.out)};
  return p.file();
}

SExprPtr parse_expr_string(const std::string& file_name, const std::string& text) {
  Lexer lex(text, file_name);
  lex.run();
  Parser p{std::move(lex.out)};
  SExprPtr e = p.expr();
  if (!p.at(Tok::End)) p.err("trailing input after expression");
  return e;
}

}  // namespace hott
