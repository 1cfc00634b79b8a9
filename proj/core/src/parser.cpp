/* Copyright 2026 The hodp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "hodp/parser.hpp"

#include <fstream>
#include <sstream>

#include "hodp/error.hpp"
#include "hodp/ordering.hpp"

namespace hodp {

namespace {

enum class Tok { Ident, Arrow, Colon, LParen, RParen, Lambda, Dot, Gt, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", lineno, col});
      i += 2;
      continue;
    }
    if (line.substr(i, 2) == "λ") {
      out.push_back({Tok::Lambda, "λ", lineno, col});
      i += 2;
      continue;
    }
    Tok single = Tok::End;
    switch (c) {
      case ':': single = Tok::Colon; break;
      case '(': single = Tok::LParen; break;
      case ')': single = Tok::RParen; break;
      case '\\': single = Tok::Lambda; break;
      case '.': single = Tok::Dot; break;
      case '>': single = Tok::Gt; break;
      default: break;
    }
    if (single != Tok::End) {
      out.push_back({single, std::string(1, c), lineno, col});
      ++i;
      continue;
    }
    if (ident_char(c) && c != '\'') {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), lineno, col});
      i = j;
      continue;
    }
    throw SyntaxError(lineno, col, std::string("unexpected character '") + c + "'");
  }
  int end_col = static_cast<int>(line.size()) + 1;
  out.push_back({Tok::End, "", lineno, end_col});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of line" : "'" + t.text + "'"; }

// Untyped term as written.
struct Ast {
  enum class Kind { Ident, App, Lam } kind;
  std::string name;
  std::optional<Type> annotation;
  std::vector<Ast> kids;
  int line = 0;
  int col = 0;
  // Filled in by inference.
  enum class Role { Unknown, Bound, Symbol, RuleVar } role = Role::Unknown;
  int type_node = -1;
};

class Cursor {
 public:
  Cursor(const std::vector<Token>& toks, const Signature& sig) : toks_(toks), sig_(sig) {}

  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool at(Tok k) const { return peek().kind == k; }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) throw SyntaxError(peek().line, peek().col, std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }

  Type type() {
    Type dom = atomic_type();
    if (at(Tok::Arrow)) {
      next();
      return Type::arrow(dom, type());
    }
    return dom;
  }

  Ast term() {
    if (at(Tok::Lambda)) return lambda();
    std::vector<Ast> parts;
    while (at(Tok::Ident) || at(Tok::LParen) || at(Tok::Lambda)) {
      if (at(Tok::Lambda)) {
        parts.push_back(lambda());
        break;
      }
      parts.push_back(atom());
    }
    if (parts.empty()) throw SyntaxError(peek().line, peek().col, "expected a term, found " + describe(peek()));
    Ast acc = std::move(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) {
      Ast app{Ast::Kind::App, "", std::nullopt, {}, acc.line, acc.col};
      app.kids.push_back(std::move(acc));
      app.kids.push_back(std::move(parts[k]));
      acc = std::move(app);
    }
    return acc;
  }

 private:
  Type atomic_type() {
    if (at(Tok::LParen)) {
      next();
      Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    const Token& id = expect(Tok::Ident, "a sort");
    if (!sig_.sorts.count(id.text)) throw SyntaxError(id.line, id.col, "undeclared sort '" + id.text + "'");
    return Type::base(id.text);
  }

  Ast atom() {
    if (at(Tok::LParen)) {
      next();
      Ast t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    const Token& id = expect(Tok::Ident, "an identifier");
    return Ast{Ast::Kind::Ident, id.text, std::nullopt, {}, id.line, id.col};
  }

  Ast lambda() {
    const Token& lam = next();
    const Token& x = expect(Tok::Ident, "a bound variable");
    std::optional<Type> annotation;
    if (at(Tok::Colon)) {
      next();
      annotation = type();
    }
    expect(Tok::Dot, "'.'");
    Ast body = term();
    Ast out{Ast::Kind::Lam, x.text, annotation, {}, lam.line, lam.col};
    out.kids.push_back(std::move(body));
    return out;
  }

  const std::vector<Token>& toks_;
  const Signature& sig_;
  std::size_t i_ = 0;
};

// Unification over simple types with metavariables.
class Inference {
 public:
  int meta() { return push({Node::Meta, "", -1, -1}); }
  int arrow(int a, int b) { return push({Node::Arrow, "", a, b}); }
  int from_type(const Type& t) {
    if (t.is_base()) return push({Node::Base, t.sort(), -1, -1});
    int a = from_type(t.domain());
    int b = from_type(t.codomain());
    return arrow(a, b);
  }

  bool unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (nodes_[a].kind == Node::Meta) return bind(a, b);
    if (nodes_[b].kind == Node::Meta) return bind(b, a);
    if (nodes_[a].kind != nodes_[b].kind) return false;
    if (nodes_[a].kind == Node::Base) return nodes_[a].sort == nodes_[b].sort;
    int a1 = nodes_[a].left, a2 = nodes_[a].right, b1 = nodes_[b].left, b2 = nodes_[b].right;
    return unify(a1, b1) && unify(a2, b2);
  }

  std::optional<Type> resolve(int i) {
    i = find(i);
    const Node& n = nodes_[i];
    if (n.kind == Node::Meta) return std::nullopt;
    if (n.kind == Node::Base) return Type::base(n.sort);
    auto a = resolve(n.left);
    auto b = resolve(n.right);
    if (!a || !b) return std::nullopt;
    return Type::arrow(*a, *b);
  }

  std::string show(int i) {
    i = find(i);
    const Node& n = nodes_[i];
    if (n.kind == Node::Meta) return "?" + std::to_string(i);
    if (n.kind == Node::Base) return n.sort;
    std::string d = show(n.left);
    if (nodes_[find(n.left)].kind == Node::Arrow) d = "(" + d + ")";
    return d + " -> " + show(n.right);
  }

 private:
  struct Node {
    enum Kind { Meta, Base, Arrow } kind;
    std::string sort;
    int left;
    int right;
    int binding = -1;
  };

  int push(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int find(int i) {
    while (nodes_[i].kind == Node::Meta && nodes_[i].binding >= 0) i = nodes_[i].binding;
    return i;
  }

  bool occurs(int m, int t) {
    t = find(t);
    if (t == m) return true;
    if (nodes_[t].kind != Node::Arrow) return false;
    int l = nodes_[t].left, r = nodes_[t].right;
    return occurs(m, l) || occurs(m, r);
  }

  bool bind(int m, int t) {
    if (occurs(m, t)) return false;
    nodes_[m].binding = t;
    return true;
  }

  std::vector<Node> nodes_;
};

// Types and builds one rule (or one standalone term).
class TermBuilder {
 public:
  TermBuilder(const Signature& sig, std::string context, const std::map<std::string, Type>& fixed)
      : sig_(sig), context_(std::move(context)) {
    for (const auto& [name, type] : fixed) vars_[name] = inf_.from_type(type);
  }

  int infer(Ast& a, const Position& p, const std::string& side) {
    switch (a.kind) {
      case Ast::Kind::Ident: {
        for (auto it = binders_.rbegin(); it != binders_.rend(); ++it) {
          if (it->first == a.name) {
            a.role = Ast::Role::Bound;
            return a.type_node = it->second;
          }
        }
        if (auto s = sig_.symbols.find(a.name); s != sig_.symbols.end()) {
          a.role = Ast::Role::Symbol;
          return a.type_node = inf_.from_type(s->second);
        }
        a.role = Ast::Role::RuleVar;
        auto [it, fresh] = vars_.try_emplace(a.name, -1);
        if (fresh) {
          it->second = inf_.meta();
          var_order_.push_back(a.name);
        }
        return a.type_node = it->second;
      }
      case Ast::Kind::App: {
        int f = infer(a.kids[0], p.child(1), side);
        int x = infer(a.kids[1], p.child(2), side);
        int r = inf_.meta();
        if (!inf_.unify(f, inf_.arrow(x, r)))
          throw TypeError(where(side, p), "cannot apply a term of type " + inf_.show(f) + " to an argument of type " +
                                              inf_.show(x));
        return a.type_node = r;
      }
      case Ast::Kind::Lam: {
        int bt = a.annotation ? inf_.from_type(*a.annotation) : inf_.meta();
        binders_.emplace_back(a.name, bt);
        int b = infer(a.kids[0], p.child(1), side);
        binders_.pop_back();
        a.type_node = bt;
        return inf_.arrow(bt, b);
      }
    }
    return -1;
  }

  void unify_sides(int lhs, int rhs) {
    if (!inf_.unify(lhs, rhs))
      throw TypeError(context_ + " @ ε", "left hand-side has type " + inf_.show(lhs) + " but right hand-side has type " +
                                             inf_.show(rhs));
  }

  void unify_with(int node, const Type& t) {
    int e = inf_.from_type(t);
    if (!inf_.unify(node, e))
      throw TypeError(context_ + " @ ε", "expected type " + t.to_string() + ", found " + inf_.show(node));
  }

  Term build(const Ast& a) {
    switch (a.kind) {
      case Ast::Kind::Ident:
        if (a.role == Ast::Role::Symbol) return Term::sym(a.name, sig_.symbols.at(a.name));
        return Term::var(a.name, resolved(a.type_node, a.role == Ast::Role::Bound ? "bound variable" : "variable", a.name));
      case Ast::Kind::App:
        return Term::app(build(a.kids[0]), build(a.kids[1]));
      case Ast::Kind::Lam:
        return Term::lam(a.name, resolved(a.type_node, "bound variable", a.name), build(a.kids[0]));
    }
    throw Error("unreachable");
  }

 private:
  std::string where(const std::string& side, const Position& p) const {
    return context_ + (side.empty() ? "" : " " + side) + " @ " + p.to_string();
  }

  Type resolved(int node, const char* what, const std::string& name) {
    auto t = inf_.resolve(node);
    if (!t) throw InferenceAmbiguity(context_ + ": type of " + what + " '" + name + "' is not determined");
    return *t;
  }

  const Signature& sig_;
  std::string context_;
  Inference inf_;
  std::map<std::string, int> vars_;
  std::vector<std::string> var_order_;
  std::vector<std::pair<std::string, int>> binders_;
};

struct PendingRule {
  std::vector<Token> tokens;
  int line;
};

Rule build_rule(const PendingRule& pending, int id, const Signature& sig) {
  Cursor cur(pending.tokens, sig);
  cur.next();  // 'rule'
  Ast lhs = cur.term();
  cur.expect(Tok::Arrow, "'->'");
  Ast rhs = cur.term();
  cur.expect(Tok::End, "end of rule");

  std::string context = "rule " + std::to_string(id);
  TermBuilder b(sig, context, {});
  int lt = b.infer(lhs, Position::root(), "lhs");
  int rt = b.infer(rhs, Position::root(), "rhs");
  b.unify_sides(lt, rt);
  Rule r{id, b.build(lhs), b.build(rhs)};
  lhs_spine(r);
  return r;
}

}  // namespace

RewriteSystem parse_system(std::string_view text) {
  RewriteSystem sys;
  Signature& sig = sys.signature;
  std::vector<PendingRule> pending;
  Precedence hints;
  std::vector<Token> hint_symbols;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    std::vector<Token> toks = lex(line, lineno);
    const Token& first = toks.front();
    if (first.kind == Tok::End) {
      // blank or comment
    } else if (first.kind == Tok::Ident && first.text == "sort") {
      if (toks.size() < 3) throw SyntaxError(first.line, toks[1].col, "expected at least one sort name");
      for (std::size_t k = 1; k + 1 < toks.size(); ++k) {
        if (toks[k].kind != Tok::Ident) throw SyntaxError(toks[k].line, toks[k].col, "expected a sort name");
        if (!sig.sorts.insert(toks[k].text).second)
          throw SyntaxError(toks[k].line, toks[k].col, "sort '" + toks[k].text + "' declared twice");
      }
    } else if (first.kind == Tok::Ident && first.text == "rule") {
      pending.push_back({std::move(toks), lineno});
    } else if (first.kind == Tok::Ident && first.text == "prec") {
      Cursor cur(toks, sig);
      cur.next();
      std::vector<Token> chain{cur.expect(Tok::Ident, "a symbol")};
      do {
        cur.expect(Tok::Gt, "'>'");
        chain.push_back(cur.expect(Tok::Ident, "a symbol"));
      } while (cur.at(Tok::Gt));
      cur.expect(Tok::End, "end of precedence");
      hint_symbols.insert(hint_symbols.end(), chain.begin(), chain.end());
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        try {
          hints.add(chain[k].text, chain[k + 1].text);
        } catch (const Error& e) {
          throw SyntaxError(chain[k].line, chain[k].col, e.what());
        }
        sys.precedence_hints.emplace_back(chain[k].text, chain[k + 1].text);
      }
    } else if (first.kind == Tok::Ident && toks.size() > 1 && toks[1].kind == Tok::Colon) {
      Cursor cur(toks, sig);
      cur.next();
      cur.next();
      Type t = cur.type();
      cur.expect(Tok::End, "end of declaration");
      if (!sig.symbols.emplace(first.text, t).second)
        throw SyntaxError(first.line, first.col, "symbol '" + first.text + "' declared twice");
    } else {
      throw SyntaxError(first.line, first.col, "expected 'sort', 'rule', 'prec' or a symbol declaration");
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  // Declarations may follow the prec line that mentions them.
  for (const Token& t : hint_symbols)
    if (!sig.symbols.count(t.text)) throw SyntaxError(t.line, t.col, "undeclared symbol '" + t.text + "' in precedence");

  int id = 0;
  for (const PendingRule& p : pending) sys.rules.push_back(build_rule(p, ++id, sig));
  sys.signature = classify_symbols(std::move(sys.signature), sys.rules);
  return sys;
}

RewriteSystem parse_system_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

Term parse_term(std::string_view text, const Signature& sig, const std::map<std::string, Type>& vars,
                const std::optional<Type>& expected) {
  std::vector<Token> toks = lex(text, 1);
  Cursor cur(toks, sig);
  Ast ast = cur.term();
  cur.expect(Tok::End, "end of term");
  TermBuilder b(sig, "term", vars);
  int t = b.infer(ast, Position::root(), "");
  if (expected) b.unify_with(t, *expected);
  return b.build(ast);
}

Type parse_type(std::string_view text, const Signature& sig) {
  std::vector<Token> toks = lex(text, 1);
  Cursor cur(toks, sig);
  Type t = cur.type();
  cur.expect(Tok::End, "end of type");
  return t;
}

}  // namespace hodp
