#include "brouwer/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "brouwer/errors.hpp"

namespace brouwer {

Formula Formula::make(Op op, std::string name, std::vector<Formula> children) {
  std::size_t conn = op == Op::Var || op == Op::Bot || op == Op::Top ? 0 : 1;
  std::size_t size = 1;
  for (const Formula& c : children) {
    conn += c.connectives();
    size += c.size();
  }
  return Formula(std::make_shared<const Node>(Node{op, std::move(name), std::move(children), conn, size}));
}

Formula Formula::var(std::string name) { return make(Op::Var, std::move(name), {}); }
Formula Formula::bot() { return make(Op::Bot, {}, {}); }
Formula Formula::top() { return make(Op::Top, {}, {}); }
Formula Formula::neg(const Formula& a) { return make(Op::Not, {}, {a}); }
Formula Formula::conj(const Formula& a, const Formula& b) { return make(Op::And, {}, {a, b}); }
Formula Formula::disj(const Formula& a, const Formula& b) { return make(Op::Or, {}, {a, b}); }
Formula Formula::imp(const Formula& a, const Formula& b) { return make(Op::Imp, {}, {a, b}); }

Formula Formula::binary(Op op, const Formula& a, const Formula& b) {
  switch (op) {
    case Op::And:
    case Op::Or:
    case Op::Imp:
      return make(op, {}, {a, b});
    default:
      throw Error("not a binary connective");
  }
}

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.op() == Op::Var) return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (int c = compare(a.node_->children[i], b.node_->children[i]); c != 0) return c;
  }
  return 0;
}

std::vector<std::string> Formula::variables() const {
  std::set<std::string> vars;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.op() == Op::Var) vars.insert(f.name());
    for (const Formula& c : f.node_->children) walk(c);
  };
  walk(*this);
  return {vars.begin(), vars.end()};
}

std::vector<Formula> Formula::subformulas() const {
  std::vector<Formula> out;
  std::set<Formula> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (seen.count(f)) return;
    for (const Formula& c : f.node_->children) walk(c);
    seen.insert(f);
    out.push_back(f);
  };
  walk(*this);
  return out;
}

bool Formula::positive() const {
  if (op() == Op::Not || op() == Op::Bot) return false;
  return std::all_of(node_->children.begin(), node_->children.end(), [](const Formula& c) { return c.positive(); });
}

bool Formula::has_constants() const {
  if (op() == Op::Bot || op() == Op::Top) return true;
  return std::any_of(node_->children.begin(), node_->children.end(),
                     [](const Formula& c) { return c.has_constants(); });
}

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Imp:
      return 1;
    case Op::Or:
      return 2;
    case Op::And:
      return 3;
    case Op::Not:
      return 4;
    default:
      return 5;
  }
}

void print(const Formula& f, Notation nt, int min_prec, std::string& out) {
  const bool uni = nt == Notation::Unicode;
  const int prec = precedence(f.op());
  const bool paren = prec < min_prec;
  if (paren) out += '(';
  switch (f.op()) {
    case Op::Var:
      out += f.name();
      break;
    case Op::Bot:
      out += uni ? "⊥" : "bot";
      break;
    case Op::Top:
      out += uni ? "⊤" : "top";
      break;
    case Op::Not:
      out += uni ? "¬" : "~";
      print(f.lhs(), nt, 4, out);
      break;
    case Op::And:
      print(f.lhs(), nt, 3, out);
      out += uni ? " ∧ " : " & ";
      print(f.rhs(), nt, 4, out);
      break;
    case Op::Or:
      print(f.lhs(), nt, 2, out);
      out += uni ? " ∨ " : " | ";
      print(f.rhs(), nt, 3, out);
      break;
    case Op::Imp:
      print(f.lhs(), nt, 2, out);
      out += uni ? " → " : " -> ";
      print(f.rhs(), nt, 1, out);
      break;
  }
  if (paren) out += ')';
}

enum class Tok { Ident, Bot, Top, Not, And, Or, Imp, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Parser {
 public:
  Parser(std::string_view s, const ParseOptions& opt) : s_(s), opt_(opt) { advance(); }

  Formula parse_all() {
    Formula f = parse_imp();
    if (cur_.kind != Tok::End) fail("unexpected '" + cur_.text + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, cur_.pos); }

  bool match_utf8(std::string_view lit) {
    if (s_.substr(i_, lit.size()) == lit) {
      i_ += lit.size();
      return true;
    }
    return false;
  }

  void advance() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r' || s_[i_] == '\n')) ++i_;
    const std::size_t start = i_;
    auto tok = [&](Tok k) { cur_ = Token{k, std::string(s_.substr(start, i_ - start)), start}; };
    if (i_ >= s_.size()) {
      cur_ = Token{Tok::End, "end of input", start};
      return;
    }
    const char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\'')) ++i_;
      const std::string_view word = s_.substr(start, i_ - start);
      tok(word == "bot" ? Tok::Bot : word == "top" ? Tok::Top : Tok::Ident);
      return;
    }
    switch (c) {
      case '~':
      case '!':
        ++i_;
        return tok(Tok::Not);
      case '&':
        ++i_;
        return tok(Tok::And);
      case '|':
        ++i_;
        return tok(Tok::Or);
      case '(':
        ++i_;
        return tok(Tok::LParen);
      case ')':
        ++i_;
        return tok(Tok::RParen);
      case '-':
        if (s_.substr(i_, 2) == "->") {
          i_ += 2;
          return tok(Tok::Imp);
        }
        break;
      default:
        break;
    }
    if (match_utf8("¬")) return tok(Tok::Not);
    if (match_utf8("∧")) return tok(Tok::And);
    if (match_utf8("∨")) return tok(Tok::Or);
    if (match_utf8("→")) return tok(Tok::Imp);
    if (match_utf8("⊥")) return tok(Tok::Bot);
    if (match_utf8("⊤")) return tok(Tok::Top);
    cur_ = Token{Tok::End, std::string(1, c), start};
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", start);
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Imp) {
      advance();
      return Formula::imp(lhs, parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (cur_.kind == Tok::Or) {
      advance();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_neg();
    while (cur_.kind == Tok::And) {
      advance();
      f = Formula::conj(f, parse_neg());
    }
    return f;
  }

  Formula parse_neg() {
    if (cur_.kind == Tok::Not) {
      advance();
      return Formula::neg(parse_neg());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::var(cur_.text);
        advance();
        return f;
      }
      case Tok::Bot:
      case Tok::Top: {
        if (opt_.paper_signature) fail("constant '" + cur_.text + "' is outside the ~ & | -> signature");
        Formula f = cur_.kind == Tok::Bot ? Formula::bot() : Formula::top();
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        Formula f = parse_imp();
        if (cur_.kind != Tok::RParen) fail("expected ')'");
        advance();
        return f;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + cur_.text + "'");
    }
  }

  std::string_view s_;
  ParseOptions opt_;
  std::size_t i_ = 0;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

std::string Formula::to_string(Notation notation) const {
  std::string out;
  print(*this, notation, 1, out);
  return out;
}

Formula parse(std::string_view text, const ParseOptions& options) { return Parser(text, options).parse_all(); }

}  // namespace brouwer
