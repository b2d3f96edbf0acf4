#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace brouwer {

enum class Op : std::uint8_t { Var, Bot, Top, Not, And, Or, Imp };

enum class Notation { Ascii, Unicode };

/// Immutable propositional formula over variables, the constants bot/top, and
/// the connectives ~, &, |, ->. Subtrees are shared between copies.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula bot();
  static Formula top();
  static Formula neg(const Formula& a);
  static Formula conj(const Formula& a, const Formula& b);
  static Formula disj(const Formula& a, const Formula& b);
  static Formula imp(const Formula& a, const Formula& b);
  static Formula binary(Op op, const Formula& a, const Formula& b);

  Op op() const { return node_->op; }
  bool is_atom() const { return op() == Op::Var; }
  /// Variable name; empty for non-variables.
  const std::string& name() const { return node_->name; }
  /// Operand of ~, or left operand of a binary connective.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }

  /// Sorted, without duplicates.
  std::vector<std::string> variables() const;
  /// Distinct subformulas, children before parents, the formula itself last.
  std::vector<Formula> subformulas() const;
  std::size_t connectives() const { return node_->connectives; }
  std::size_t size() const { return node_->size; }
  /// No negation and no bot.
  bool positive() const;
  bool has_constants() const;

  std::string to_string(Notation notation = Notation::Ascii) const;

  /// Structural total order: by size, then connective, then operands.
  friend int compare(const Formula& a, const Formula& b);
  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Formula> children;
    std::size_t connectives;
    std::size_t size;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Op op, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

struct ParseOptions {
  /// Reject bot/top (the bare signature of ~, &, |, ->).
  bool paper_signature = false;
};

/// Parses
///   imp := or ('->' imp)? ; or := and ('|' and)* ; and := neg ('&' neg)* ;
///   neg := '~' neg | atom ; atom := ident | 'bot' | 'top' | '(' imp ')'
/// with Unicode aliases. Throws SyntaxError carrying a byte offset.
Formula parse(std::string_view text, const ParseOptions& options = {});

}  // namespace brouwer
