#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "folkit/number_field.hpp"

namespace folkit {

// Expression of the script language.  Nodes are immutable once parsed and
// shared freely, so the tree uses shared pointers to const.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Number,    // nonnegative integer literal
    Name,      // let binding or the field generator
    Variable,  // x1, x2, x3, stored 0-based
    Negate,
    Add,
    Sub,
    Mul,
    Div,
    Wedge,
    Power,  // integer exponent on a single base
    Call,   // builtin: d, ip, vf, diag
  };

  Kind kind;
  Integer number;             // Number
  std::string name;           // Name, Call
  int index = 0;              // Variable
  int exponent = 0;           // Power
  std::vector<ExprPtr> args;  // operands and call arguments
};

// Command flag, either boolean (--punctual) or valued (--bound 50).
struct CommandFlag {
  std::string name;
  std::optional<long> value;
};

// One statement: a field declaration, a let binding, or a command.
struct Statement {
  enum class Kind { Field, Let, Command };

  Kind kind;
  std::string name;  // generator, binding, or command name
  ExprPtr expr;      // minimal polynomial or bound value

  // Field only: the minimal polynomial folded to ascending coefficients.
  std::vector<Rational> min_poly;

  // Command only.
  std::vector<CommandFlag> flags;
  std::vector<ExprPtr> args;
};

struct Script {
  std::vector<Statement> statements;
};

// Static description of a command: positional arity and the flags it
// accepts, in canonical print order.  Used by the parser for validation and
// by the pretty-printer for normalization.
struct CommandSpec {
  std::string name;
  int arity;
  std::vector<std::string> bool_flags;
  std::vector<std::string> value_flags;
};

const std::vector<CommandSpec>& command_table();
const CommandSpec* find_command(const std::string& name);

// Parses a script.  Throws ScriptSyntaxError with line and column for
// lexical and grammatical problems, and Error(Usage) with kinds UnboundName
// and ArityMismatch for static violations: unknown names, wrong call or
// command arity, misused flags.
Script parse_script(const std::string& source);

// Precedence-aware rendering with minimal parentheses.  Normal form: wedge
// prints as ^^, multiplication binds tight with no spaces, sums are spaced,
// flags appear in canonical order before the positional arguments.
// pretty_print(parse_script(s)) is a fixpoint of parse-then-print.
std::string expr_to_string(const Expr& e);
std::string pretty_print(const Statement& s);
std::string pretty_print(const Script& s);

}  // namespace folkit
