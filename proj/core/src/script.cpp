#include "folkit/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "folkit/errors.hpp"

namespace folkit {

namespace {

unsigned char uc(char c) { return static_cast<unsigned char>(c); }

enum class Tok {
  End,
  Number,
  Ident,
  Command,
  Flag,
  LParen,
  RParen,
  Comma,
  Semi,
  Colon,
  Equals,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Wedge,
  KwField,
  KwLet,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
  throw ScriptSyntaxError(line, col, msg);
}

[[noreturn]] void fail_static(const char* kind, const Token& at, const std::string& msg) {
  throw Error(ErrorClass::Usage, kind,
              "line " + std::to_string(at.line) + ", column " + std::to_string(at.col) + ": " + msg);
}

// Splits the source into tokens.  Hyphenated command names are recognized
// only where a statement can begin, so '-' stays subtraction inside
// expressions.  '#' comments run to the end of the line.
class Lexer {
 public:
  explicit Lexer(const std::string& src) : s_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool stmt_start = true;
    auto push = [&](Tok kind, std::string text, int line, int col) {
      out.push_back(Token{kind, std::move(text), line, col});
      stmt_start = (kind == Tok::Semi);
    };
    for (;;) {
      skip_blank();
      int line = line_, col = col_;
      if (pos_ >= s_.size()) {
        out.push_back(Token{Tok::End, "", line, col});
        return out;
      }
      char c = s_[pos_];
      if (stmt_start && std::isalpha(uc(c))) {
        size_t j = pos_;
        bool hyphen = false;
        while (j < s_.size() && (std::isalnum(uc(s_[j])) || s_[j] == '_' || s_[j] == '-')) {
          hyphen = hyphen || s_[j] == '-';
          ++j;
        }
        std::string run = s_.substr(pos_, j - pos_);
        if (run == "field" || run == "let" || find_command(run) != nullptr) {
          Tok kind = run == "field" ? Tok::KwField : run == "let" ? Tok::KwLet : Tok::Command;
          advance(run.size());
          push(kind, std::move(run), line, col);
          continue;
        }
        if (hyphen) fail_at(line, col, "unknown command '" + run + "'");
        // plain identifier at statement position: lexed normally below, the
        // parser reports the missing keyword with more context
      }
      if (std::isdigit(uc(c))) {
        size_t j = pos_;
        while (j < s_.size() && std::isdigit(uc(s_[j]))) ++j;
        std::string digits = s_.substr(pos_, j - pos_);
        advance(digits.size());
        push(Tok::Number, std::move(digits), line, col);
        continue;
      }
      if (std::isalpha(uc(c)) || c == '_') {
        size_t j = pos_;
        while (j < s_.size() && (std::isalnum(uc(s_[j])) || s_[j] == '_')) ++j;
        std::string word = s_.substr(pos_, j - pos_);
        advance(word.size());
        push(Tok::Ident, std::move(word), line, col);
        continue;
      }
      if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '-') {
        advance(2);
        size_t j = pos_;
        while (j < s_.size() && (std::isalnum(uc(s_[j])) || s_[j] == '_')) ++j;
        if (j == pos_) fail_at(line, col, "expected a flag name after --");
        std::string name = s_.substr(pos_, j - pos_);
        advance(name.size());
        push(Tok::Flag, std::move(name), line, col);
        continue;
      }
      if (c == '^' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '^') {
        advance(2);
        push(Tok::Wedge, "^^", line, col);
        continue;
      }
      // the wedge sign in UTF-8
      if (uc(c) == 0xE2 && pos_ + 2 < s_.size() && uc(s_[pos_ + 1]) == 0x88 &&
          uc(s_[pos_ + 2]) == 0xA7) {
        pos_ += 3;
        ++col_;
        push(Tok::Wedge, "^^", line, col);
        continue;
      }
      Tok kind;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case ';': kind = Tok::Semi; break;
        case ':': kind = Tok::Colon; break;
        case '=': kind = Tok::Equals; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        default:
          fail_at(line, col, std::isprint(uc(c))
                                 ? std::string("unexpected character '") + c + "'"
                                 : "unexpected byte in input");
      }
      advance(1);
      push(kind, std::string(1, c), line, col);
    }
  }

 private:
  void advance(size_t n) {
    pos_ += n;
    col_ += static_cast<int>(n);
  }

  void skip_blank() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance(1);
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
  Expr e;
  e.kind = kind;
  e.args = {std::move(lhs), std::move(rhs)};
  return make_expr(std::move(e));
}

bool is_variable_name(const std::string& word, int* index) {
  if (word.size() < 2 || word[0] != 'x' || word[1] == '0') return false;
  for (size_t i = 1; i < word.size(); ++i)
    if (!std::isdigit(uc(word[i]))) return false;
  if (word.size() > 3) return false;  // far beyond any supported index
  *index = std::stoi(word.substr(1)) - 1;
  return true;
}

bool is_builtin_function(const std::string& word) {
  return word == "d" || word == "ip" || word == "vf" || word == "diag";
}

int builtin_arity(const std::string& word) { return word == "d" ? 1 : word == "ip" ? 2 : 3; }

// Univariate polynomial over Q as ascending coefficients with no trailing
// zeros, used to fold a field declaration into create() input.
using UPoly = std::vector<Rational>;

void u_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly u_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  u_trim(r);
  return r;
}

UPoly u_neg(UPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  u_trim(r);
  return r;
}

UPoly fold_minpoly(const Expr& e, const std::string& gen, const Token& at) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number == 0 ? UPoly{} : UPoly{Rational(e.number)};
    case Expr::Kind::Name:
      if (e.name != gen)
        fail_at(at.line, at.col, "the minimal polynomial may use only the generator");
      return UPoly{Rational(0), Rational(1)};
    case Expr::Kind::Negate:
      return u_neg(fold_minpoly(*e.args[0], gen, at));
    case Expr::Kind::Add:
      return u_add(fold_minpoly(*e.args[0], gen, at), fold_minpoly(*e.args[1], gen, at));
    case Expr::Kind::Sub:
      return u_add(fold_minpoly(*e.args[0], gen, at),
                   u_neg(fold_minpoly(*e.args[1], gen, at)));
    case Expr::Kind::Mul:
      return u_mul(fold_minpoly(*e.args[0], gen, at), fold_minpoly(*e.args[1], gen, at));
    case Expr::Kind::Div: {
      UPoly den = fold_minpoly(*e.args[1], gen, at);
      if (den.size() != 1)
        fail_at(at.line, at.col, "division in a minimal polynomial needs a nonzero constant");
      UPoly num = fold_minpoly(*e.args[0], gen, at);
      for (auto& c : num) c /= den[0];
      return num;
    }
    case Expr::Kind::Power: {
      UPoly base = fold_minpoly(*e.args[0], gen, at);
      UPoly r{Rational(1)};
      for (int i = 0; i < e.exponent; ++i) r = u_mul(r, base);
      return r;
    }
    default:
      fail_at(at.line, at.col, "the minimal polynomial must be a polynomial in the generator alone");
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script run() {
    Script script;
    while (peek().kind != Tok::End) script.statements.push_back(statement(script));
    return script;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail_at(peek().line, peek().col, "expected " + what);
    return next();
  }

  Statement statement(const Script& script) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwField:
        if (!script.statements.empty())
          fail_at(t.line, t.col, "the field declaration must be the first statement");
        return field_decl();
      case Tok::KwLet:
        return let_decl();
      case Tok::Command:
        return command();
      default:
        fail_at(t.line, t.col, "expected a field declaration, a let binding, or a command");
    }
  }

  Statement field_decl() {
    const Token& kw = next();
    const Token& name = expect(Tok::Ident, "a generator name");
    int idx;
    if (is_builtin_function(name.text) || is_variable_name(name.text, &idx))
      fail_at(name.line, name.col, "'" + name.text + "' is reserved and cannot name a generator");
    expect(Tok::Colon, "':' after the generator name");
    bound_.insert(name.text);
    Statement s;
    s.kind = Statement::Kind::Field;
    s.name = name.text;
    s.expr = expression();
    s.min_poly = fold_minpoly(*s.expr, s.name, kw);
    expect(Tok::Semi, "';' after the field declaration");
    return s;
  }

  Statement let_decl() {
    next();
    const Token& name = expect(Tok::Ident, "a name to bind");
    int idx;
    if (is_builtin_function(name.text))
      fail_at(name.line, name.col, "'" + name.text + "' is a builtin function name");
    if (is_variable_name(name.text, &idx))
      fail_at(name.line, name.col, "coordinate variables cannot be rebound");
    expect(Tok::Equals, "'=' after the bound name");
    Statement s;
    s.kind = Statement::Kind::Let;
    s.name = name.text;
    s.expr = expression();
    expect(Tok::Semi, "';' after the binding");
    bound_.insert(name.text);
    return s;
  }

  Statement command() {
    const Token& head = next();
    const CommandSpec* spec = find_command(head.text);
    Statement s;
    s.kind = Statement::Kind::Command;
    s.name = head.text;
    while (peek().kind == Tok::Flag) parse_flag(*spec, s);
    if (peek().kind != Tok::Semi) {
      s.args.push_back(expression());
      while (peek().kind == Tok::Comma) {
        next();
        s.args.push_back(expression());
      }
    }
    expect(Tok::Semi, "';' after the command");
    if (static_cast<int>(s.args.size()) != spec->arity)
      fail_static("ArityMismatch", head,
                  s.name + " takes " + std::to_string(spec->arity) + " argument" +
                      (spec->arity == 1 ? "" : "s") + ", got " + std::to_string(s.args.size()));
    check_flag_rules(head, s);
    return s;
  }

  void parse_flag(const CommandSpec& spec, Statement& s) {
    const Token& flag = next();
    auto in = [&](const std::vector<std::string>& list) {
      return std::find(list.begin(), list.end(), flag.text) != list.end();
    };
    if (!in(spec.bool_flags) && !in(spec.value_flags))
      fail_at(flag.line, flag.col, s.name + " does not take --" + flag.text);
    for (const CommandFlag& seen : s.flags)
      if (seen.name == flag.text) fail_at(flag.line, flag.col, "duplicate flag --" + flag.text);
    CommandFlag out;
    out.name = flag.text;
    if (in(spec.value_flags)) {
      bool negative = false;
      if (peek().kind == Tok::Minus) {
        negative = true;
        next();
      }
      const Token& value = expect(Tok::Number, "a value after --" + flag.text);
      try {
        out.value = std::stol(value.text);
      } catch (const std::out_of_range&) {
        fail_at(value.line, value.col, "flag value out of range");
      }
      if (negative) out.value = -*out.value;
    }
    s.flags.push_back(std::move(out));
  }

  // Flag combinations that the grammar alone cannot express.
  void check_flag_rules(const Token& head, const Statement& s) {
    auto has = [&](const char* name) {
      for (const CommandFlag& f : s.flags)
        if (f.name == name) return true;
      return false;
    };
    if (s.name == "resonance") {
      if (has("strong") == has("nonneg"))
        fail_at(head.line, head.col, "resonance takes exactly one of --strong or --nonneg");
      if (has("bound") && !has("nonneg"))
        fail_at(head.line, head.col, "--bound applies to the --nonneg search only");
    } else if (s.name == "blowup") {
      if (has("punctual") == has("monoidal"))
        fail_at(head.line, head.col, "blowup takes exactly one of --punctual or --monoidal");
      if (!has("chart")) fail_at(head.line, head.col, "blowup needs --chart");
      if (has("punctual") && has("axis"))
        fail_at(head.line, head.col, "--axis applies to the monoidal transform only");
      if (has("monoidal") && !has("axis"))
        fail_at(head.line, head.col, "the monoidal transform needs --axis");
    }
  }

  ExprPtr expression() { return additive(); }

  ExprPtr additive() {
    ExprPtr lhs = wedge_term();
    for (;;) {
      if (peek().kind == Tok::Plus) {
        next();
        lhs = make_binary(Expr::Kind::Add, std::move(lhs), wedge_term());
      } else if (peek().kind == Tok::Minus) {
        next();
        lhs = make_binary(Expr::Kind::Sub, std::move(lhs), wedge_term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr wedge_term() {
    ExprPtr lhs = mul_term();
    while (peek().kind == Tok::Wedge) {
      next();
      lhs = make_binary(Expr::Kind::Wedge, std::move(lhs), mul_term());
    }
    return lhs;
  }

  ExprPtr mul_term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        lhs = make_binary(Expr::Kind::Mul, std::move(lhs), unary());
      } else if (peek().kind == Tok::Slash) {
        next();
        lhs = make_binary(Expr::Kind::Div, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (peek().kind == Tok::Minus) {
      next();
      Expr e;
      e.kind = Expr::Kind::Negate;
      e.args = {unary()};
      return make_expr(std::move(e));
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& exp = expect(Tok::Number, "an integer exponent");
    Expr e;
    e.kind = Expr::Kind::Power;
    e.args = {std::move(base)};
    try {
      e.exponent = std::stoi(exp.text);
    } catch (const std::out_of_range&) {
      fail_at(exp.line, exp.col, "exponent out of range");
    }
    if (peek().kind == Tok::Caret)
      fail_at(peek().line, peek().col, "chained powers need parentheses");
    return make_expr(std::move(e));
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        Expr e;
        e.kind = Expr::Kind::Number;
        e.number = Integer(t.text);
        return make_expr(std::move(e));
      }
      case Tok::LParen: {
        next();
        ExprPtr inner = expression();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return name_atom();
      default:
        fail_at(t.line, t.col, "expected an expression");
    }
  }

  ExprPtr name_atom() {
    const Token& t = next();
    if (is_builtin_function(t.text)) {
      expect(Tok::LParen, "'(' after " + t.text);
      Expr e;
      e.kind = Expr::Kind::Call;
      e.name = t.text;
      e.args.push_back(expression());
      while (peek().kind == Tok::Comma) {
        next();
        e.args.push_back(expression());
      }
      expect(Tok::RParen, "')'");
      if (static_cast<int>(e.args.size()) != builtin_arity(t.text))
        fail_static("ArityMismatch", t,
                    t.text + "() takes " + std::to_string(builtin_arity(t.text)) +
                        " argument" + (builtin_arity(t.text) == 1 ? "" : "s") + ", got " +
                        std::to_string(e.args.size()));
      return make_expr(std::move(e));
    }
    int index;
    if (is_variable_name(t.text, &index)) {
      if (index >= 3)
        fail_at(t.line, t.col, "this build fixes three variables x1, x2, x3");
      Expr e;
      e.kind = Expr::Kind::Variable;
      e.index = index;
      return make_expr(std::move(e));
    }
    if (peek().kind == Tok::LParen)
      fail_at(t.line, t.col, "unknown function '" + t.text + "'");
    if (bound_.find(t.text) == bound_.end())
      fail_static("UnboundName", t, "unknown name '" + t.text + "'");
    Expr e;
    e.kind = Expr::Kind::Name;
    e.name = t.text;
    return make_expr(std::move(e));
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
  std::set<std::string> bound_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Wedge:
      return 2;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 3;
    case Expr::Kind::Negate:
      return 4;
    case Expr::Kind::Power:
      return 5;
    default:
      return 6;
  }
}

void print_expr(std::ostream& os, const Expr& e, int min_prec) {
  int p = precedence(e.kind);
  bool paren = p < min_prec;
  if (paren) os << '(';
  switch (e.kind) {
    case Expr::Kind::Number:
      os << e.number.get_str();
      break;
    case Expr::Kind::Name:
      os << e.name;
      break;
    case Expr::Kind::Variable:
      os << 'x' << e.index + 1;
      break;
    case Expr::Kind::Negate:
      os << '-';
      print_expr(os, *e.args[0], p + 1);
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Wedge: {
      const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : " ^^ ";
      print_expr(os, *e.args[0], p);
      os << op;
      print_expr(os, *e.args[1], p + 1);
      break;
    }
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      print_expr(os, *e.args[0], p);
      os << (e.kind == Expr::Kind::Mul ? '*' : '/');
      print_expr(os, *e.args[1], p + 1);
      break;
    case Expr::Kind::Power:
      print_expr(os, *e.args[0], p + 1);
      os << '^' << e.exponent;
      break;
    case Expr::Kind::Call:
      os << e.name << '(';
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) os << ", ";
        print_expr(os, *e.args[i], 0);
      }
      os << ')';
      break;
  }
  if (paren) os << ')';
}

}  // namespace

const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> table = {
      {"check-tangent", 2, {}, {}},
      {"check-integrable", 1, {}, {}},
      {"remove-codim1", 1, {}, {}},
      {"resonance", 3, {"strong", "nonneg"}, {"bound"}},
      {"blowup", 1, {"punctual", "monoidal"}, {"axis", "chart"}},
      {"pencil-check", 2, {}, {}},
      {"pencil-from-three", 4, {}, {}},
      {"pencil-theta", 2, {}, {}},
      {"pencil-curvature", 2, {}, {}},
      {"pencil-classify", 2, {}, {}},
      {"log-pencil", 3, {}, {}},
      {"normal-form", 4, {}, {"order", "bound"}},
      {"ch-check", 1, {}, {"bound"}},
      {"jouanolou", 1, {}, {}},
      {"first-integral", 2, {}, {}},
      {"surface-check", 2, {}, {}},
      {"surface-search", 1, {}, {"cap"}},
  };
  return table;
}

const CommandSpec* find_command(const std::string& name) {
  for (const CommandSpec& spec : command_table())
    if (spec.name == name) return &spec;
  return nullptr;
}

Script parse_script(const std::string& source) {
  return Parser(Lexer(source).run()).run();
}

std::string expr_to_string(const Expr& e) {
  std::ostringstream os;
  print_expr(os, e, 0);
  return os.str();
}

std::string pretty_print(const Statement& s) {
  std::ostringstream os;
  switch (s.kind) {
    case Statement::Kind::Field:
      os << "field " << s.name << ": " << expr_to_string(*s.expr) << ';';
      break;
    case Statement::Kind::Let:
      os << "let " << s.name << " = " << expr_to_string(*s.expr) << ';';
      break;
    case Statement::Kind::Command: {
      os << s.name;
      const CommandSpec* spec = find_command(s.name);
      auto emit = [&](const std::string& flag) {
        for (const CommandFlag& f : s.flags)
          if (f.name == flag) {
            os << " --" << f.name;
            if (f.value) os << ' ' << *f.value;
          }
      };
      for (const std::string& flag : spec->bool_flags) emit(flag);
      for (const std::string& flag : spec->value_flags) emit(flag);
      for (size_t i = 0; i < s.args.size(); ++i) {
        os << (i == 0 ? " " : ", ");
        print_expr(os, *s.args[i], 0);
      }
      os << ';';
      break;
    }
  }
  return os.str();
}

std::string pretty_print(const Script& s) {
  std::ostringstream os;
  for (const Statement& stmt : s.statements) os << pretty_print(stmt) << '\n';
  return os.str();
}

}  // namespace folkit
