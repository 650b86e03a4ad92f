#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "internal.hpp"

namespace hypmid::script {

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Point: return "point";
    case ValueKind::Line: return "line";
    case ValueKind::Circle: return "circle";
    case ValueKind::Carrier: return "carrier";
    case ValueKind::Number: return "number";
    case ValueKind::Model: return "model";
  }
  return "?";
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "SyntaxError";
    case ParseErrorKind::DuplicateName: return "DuplicateName";
    case ParseErrorKind::UnknownName: return "UnknownName";
    case ParseErrorKind::Arity: return "ArityError";
    case ParseErrorKind::KindMismatch: return "KindMismatch";
  }
  return "?";
}

namespace {

std::string describe(ParseErrorKind kind, SourceLoc loc, const std::string& token,
                     const std::vector<std::string>& expected, const std::string& message) {
  std::string out = std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                    std::string(to_string(kind)) + ": " + message;
  if (!token.empty()) out += " (at '" + token + "')";
  if (!expected.empty()) {
    out += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
  }
  return out;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, SourceLoc loc, std::string token,
                       std::vector<std::string> expected, const std::string& message)
    : std::runtime_error(describe(kind, loc, token, expected, message)),
      kind_(kind),
      loc_(loc),
      token_(std::move(token)),
      expected_(std::move(expected)) {}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.x == b.x && a.y == b.y && a.name == b.name && a.through == b.through &&
         a.args == b.args;
}

bool operator==(const SelectorExpr& a, const SelectorExpr& b) {
  return a.keyword == b.keyword && a.names == b.names;
}

bool operator==(const Statement& a, const Statement& b) {
  return a.kind == b.kind && a.name == b.name && a.declared_type == b.declared_type &&
         a.expr == b.expr && a.selector == b.selector && a.args == b.args && a.tol == b.tol &&
         a.comments == b.comments && a.trailing_comment == b.trailing_comment &&
         a.blank_before == b.blank_before;
}

bool operator==(const Program& a, const Program& b) {
  return a.statements == b.statements && a.trailing_comments == b.trailing_comments;
}

namespace detail {

const std::vector<Signature>& functions() {
  using K = ValueKind;
  static const std::vector<Signature> table = {
      {"line", {{K::Point}, {K::Point}}, K::Line},
      {"perp", {{K::Line}, {K::Point, true}}, K::Line},
      {"circle", {{K::Point}, {K::Point, true}}, K::Circle},
      {"circle", {{K::Point}, {K::Number}}, K::Circle},
      {"circle_through", {{K::Point}, {K::Point}, {K::Point}}, K::Circle},
      {"circle_diameter", {{K::Point}, {K::Point}}, K::Circle},
      {"ortho_circle", {{K::Point}, {K::Point}}, K::Circle},
      {"bisector_circle", {{K::Point}, {K::Point}}, K::Circle},
      {"geodesic", {{K::Model}, {K::Point}, {K::Point}}, K::Carrier},
      {"intersect", {{K::Carrier}, {K::Carrier}}, K::Point},
      {"invert", {{K::Point}}, K::Point},
      {"invert", {{K::Point}, {K::Circle}}, K::Point},
      {"reflect_real", {{K::Point}}, K::Point},
      {"reflect", {{K::Point}, {K::Line}}, K::Point},
      {"center", {{K::Circle}}, K::Point},
      {"midpoint", {{K::Point}, {K::Point}}, K::Point},
      {"midpoint_oracle", {{K::Model}, {K::Point}, {K::Point}}, K::Point},
  };
  return table;
}

const std::vector<Signature>& assertions() {
  using K = ValueKind;
  static const std::vector<Signature> table = {
      {"on", {{K::Point}, {K::Carrier}}, K::Number},
      {"orthogonal", {{K::Carrier}, {K::Carrier}}, K::Number},
      {"tangent", {{K::Line}, {K::Circle}}, K::Number},
      {"collinear", {{K::Point}, {K::Point}, {K::Point}}, K::Number},
      {"equal_rho", {{K::Model}, {K::Point}, {K::Point}, {K::Point}, {K::Point}}, K::Number},
      {"equals", {{K::Point}, {K::Point}}, K::Number},
  };
  return table;
}

bool accepts(ValueKind expected, ValueKind actual) {
  if (expected == actual) return true;
  return expected == ValueKind::Carrier && (actual == ValueKind::Line || actual == ValueKind::Circle);
}

bool is_selector_keyword(std::string_view w) { return selector_arity(w) >= 0; }

int selector_arity(std::string_view w) {
  if (w == "upper" || w == "lower" || w == "in_disk" || w == "out_disk" || w == "boundary" ||
      w == "unique") {
    return 0;
  }
  if (w == "nearest") return 1;
  if (w == "closer" || w == "left" || w == "right") return 2;
  return -1;
}

bool is_model_tag(std::string_view w) { return w == "h2" || w == "b2"; }

bool is_reserved(std::string_view w) {
  static const std::set<std::string_view> words = {"input", "assert", "output", "select", "tol",
                                                   "through", "point", "line", "circle", "carrier",
                                                   "h2", "b2"};
  return words.count(w) != 0;
}

}  // namespace detail

namespace {

using detail::accepts;

struct Token {
  enum class Type { Ident, Number, LParen, RParen, Comma, Equals, Comment, Newline, End };
  Type type;
  std::string text;
  SourceLoc loc;
  double number = 0.0;
};

std::string shown(const Token& t) {
  switch (t.type) {
    case Token::Type::Newline: return "end of line";
    case Token::Type::End: return "end of input";
    default: return t.text;
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      const SourceLoc loc{line_, col_};
      if (c == '\n') {
        out.push_back({Token::Type::Newline, "\n", loc});
        advance();
        line_++;
        col_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        std::size_t end = src_.find('\n', pos_);
        if (end == std::string_view::npos) end = src_.size();
        std::string text(src_.substr(pos_ + 1, end - pos_ - 1));
        if (!text.empty() && text.back() == '\r') text.pop_back();
        while (pos_ < end) advance();
        out.push_back({Token::Type::Comment, text, loc});
      } else if (c == '(' || c == ')' || c == ',' || c == '=') {
        const auto type = c == '(' ? Token::Type::LParen
                          : c == ')' ? Token::Type::RParen
                          : c == ',' ? Token::Type::Comma
                                     : Token::Type::Equals;
        out.push_back({type, std::string(1, c), loc});
        advance();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          advance();
        }
        out.push_back({Token::Type::Ident, std::string(src_.substr(start, pos_ - start)), loc});
      } else if (starts_number()) {
        out.push_back(number(loc));
      } else {
        std::size_t len = 1;
        while (pos_ + len < src_.size() && (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) ++len;
        throw ParseError(ParseErrorKind::Syntax, loc, std::string(src_.substr(pos_, len)), {},
                         "unexpected character");
      }
    }
    out.push_back({Token::Type::End, "", {line_, col_}});
    return out;
  }

 private:
  // Columns count code points; continuation bytes do not advance them.
  void advance() {
    ++pos_;
    if (pos_ >= src_.size() || (static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) ++col_;
  }

  bool is_digit_at(std::size_t i) const {
    return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
  }

  bool starts_number() const {
    std::size_t i = pos_;
    if (src_[i] == '-' || src_[i] == '+') ++i;
    if (is_digit_at(i)) return true;
    return i < src_.size() && src_[i] == '.' && is_digit_at(i + 1);
  }

  Token number(SourceLoc loc) {
    const std::size_t start = pos_;
    if (src_[pos_] == '-' || src_[pos_] == '+') advance();
    while (pos_ < src_.size() && (is_digit_at(pos_) || src_[pos_] == '.')) advance();
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t i = pos_ + 1;
      if (i < src_.size() && (src_[i] == '-' || src_[i] == '+')) ++i;
      if (is_digit_at(i)) {
        while (pos_ < i) advance();
        while (is_digit_at(pos_)) advance();
      }
    }
    std::string text(src_.substr(start, pos_ - start));
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError(ParseErrorKind::Syntax, loc, text, {"number"}, "malformed number");
    }
    return {Token::Type::Number, text, loc, value};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    kinds_["origin"] = ValueKind::Point;
    kinds_["unit"] = ValueKind::Circle;
    kinds_["real_axis"] = ValueKind::Line;
  }

  Program run() {
    Program program;
    std::vector<std::string> comments;
    bool blank = false;
    bool line_empty = true;
    while (peek().type != Token::Type::End) {
      const Token& t = peek();
      if (t.type == Token::Type::Newline) {
        if (line_empty) blank = true;
        line_empty = true;
        ++i_;
        continue;
      }
      if (t.type == Token::Type::Comment) {
        comments.push_back(t.text);
        ++i_;
        line_empty = false;
        continue;
      }
      Statement s = statement();
      s.comments = std::move(comments);
      comments.clear();
      s.blank_before = blank && !program.statements.empty();
      blank = false;
      if (peek().type == Token::Type::Comment) {
        s.trailing_comment = peek().text;
        ++i_;
      }
      if (peek().type != Token::Type::Newline && peek().type != Token::Type::End) {
        fail_expected({"end of line"});
      }
      line_empty = false;
      program.statements.push_back(std::move(s));
    }
    program.trailing_comments = std::move(comments);
    return program;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(i_++, toks_.size() - 1)]; }

  [[noreturn]] void fail_expected(std::vector<std::string> expected, std::string message = "unexpected token") {
    const Token& t = peek();
    throw ParseError(ParseErrorKind::Syntax, t.loc, shown(t), std::move(expected), message);
  }

  const Token& expect(Token::Type type, const char* what) {
    if (peek().type != type) fail_expected({what});
    return next();
  }

  const Token& expect_name() {
    if (peek().type != Token::Type::Ident) fail_expected({"name"});
    return next();
  }

  void declare(const Token& name, ValueKind kind) {
    if (detail::is_reserved(name.text)) {
      throw ParseError(ParseErrorKind::Syntax, name.loc, name.text, {"name"}, "reserved word used as a name");
    }
    if (kinds_.count(name.text)) {
      throw ParseError(ParseErrorKind::DuplicateName, name.loc, name.text, {},
                       "'" + name.text + "' is already bound");
    }
    kinds_[name.text] = kind;
  }

  ValueKind lookup(const Token& name) const {
    if (detail::is_model_tag(name.text)) return ValueKind::Model;
    auto it = kinds_.find(name.text);
    if (it == kinds_.end()) {
      throw ParseError(ParseErrorKind::UnknownName, name.loc, name.text, {},
                       "'" + name.text + "' is not bound yet");
    }
    return it->second;
  }

  Statement statement() {
    const Token& first = peek();
    if (first.type != Token::Type::Ident) {
      fail_expected({"input", "assert", "output", "a type", "name"});
    }
    Statement s;
    s.loc = first.loc;
    if (first.text == "input") return input(s);
    if (first.text == "assert") return assertion(s);
    if (first.text == "output") {
      ++i_;
      s.kind = Statement::Kind::Output;
      const Token& n = expect_name();
      lookup(n);
      s.name = n.text;
      return s;
    }
    return binding(s);
  }

  Statement input(Statement s) {
    ++i_;
    s.kind = Statement::Kind::Input;
    const Token& n = expect_name();
    declare(n, ValueKind::Point);
    s.name = n.text;
    if (peek().type == Token::Type::Equals) {
      ++i_;
      if (peek().type != Token::Type::LParen) fail_expected({"point literal"});
      s.expr = point_literal();
    }
    return s;
  }

  Statement binding(Statement s) {
    s.kind = Statement::Kind::Binding;
    const Token& head = peek();
    static const std::set<std::string_view> types = {"point", "line", "circle", "carrier"};
    if (types.count(head.text) && peek(1).type == Token::Type::Ident) {
      s.declared_type = head.text;
      ++i_;
    }
    const Token& name = expect_name();
    expect(Token::Type::Equals, "'='");
    Expr e = expression(/*top_level=*/true);
    const ValueKind kind = kind_of_expr(e);
    if (e.kind == Expr::Kind::Call && e.name == "intersect") {
      if (peek().type != Token::Type::Ident || peek().text != "select") fail_expected({"select"});
      ++i_;
      s.selector = selector();
    }
    if (!s.declared_type.empty()) {
      const ValueKind declared = s.declared_type == "point"  ? ValueKind::Point
                                 : s.declared_type == "line" ? ValueKind::Line
                                 : s.declared_type == "circle" ? ValueKind::Circle
                                                               : ValueKind::Carrier;
      if (!accepts(declared, kind)) {
        throw ParseError(ParseErrorKind::KindMismatch, e.loc, e.name, {std::string(to_string(declared))},
                         "expression yields a " + std::string(to_string(kind)));
      }
    }
    if (kind == ValueKind::Number || kind == ValueKind::Model) {
      throw ParseError(ParseErrorKind::KindMismatch, e.loc, e.name, {"point", "line", "circle"},
                       "only geometric objects can be bound");
    }
    declare(name, kind);
    s.name = name.text;
    s.expr = std::move(e);
    return s;
  }

  Statement assertion(Statement s) {
    ++i_;
    s.kind = Statement::Kind::Assert;
    const Token& kind = expect_name();
    s.name = kind.text;
    expect(Token::Type::LParen, "'('");
    s.args = arguments();
    check_call(kind, s.args, detail::assertions(), "assertion");
    if (peek().type == Token::Type::Ident && peek().text == "tol") {
      ++i_;
      const Token& t = expect(Token::Type::Number, "number");
      if (!(t.number > 0.0)) {
        throw ParseError(ParseErrorKind::Syntax, t.loc, t.text, {"positive number"}, "tolerance must be positive");
      }
      s.tol = t.number;
    }
    return s;
  }

  SelectorExpr selector() {
    SelectorExpr sel;
    const Token& kw = peek();
    if (kw.type != Token::Type::Ident || !detail::is_selector_keyword(kw.text)) {
      fail_expected({"upper", "lower", "in_disk", "out_disk", "boundary", "unique", "nearest", "closer",
                     "left", "right"},
                    "unknown selector");
    }
    ++i_;
    sel.keyword = kw.text;
    sel.loc = kw.loc;
    for (int k = 0; k < detail::selector_arity(kw.text); ++k) {
      const Token& n = expect_name();
      if (lookup(n) != ValueKind::Point) {
        throw ParseError(ParseErrorKind::KindMismatch, n.loc, n.text, {"point"}, "selector arguments are points");
      }
      sel.names.push_back(n.text);
    }
    return sel;
  }

  Expr point_literal() {
    Expr e;
    e.kind = Expr::Kind::PointLiteral;
    e.loc = expect(Token::Type::LParen, "'('").loc;
    e.x = expect(Token::Type::Number, "number").number;
    expect(Token::Type::Comma, "','");
    e.y = expect(Token::Type::Number, "number").number;
    expect(Token::Type::RParen, "')'");
    return e;
  }

  std::vector<Expr> arguments() {
    std::vector<Expr> args;
    if (peek().type == Token::Type::RParen) {
      ++i_;
      return args;
    }
    while (true) {
      bool through = false;
      if (peek().type == Token::Type::Ident && peek().text == "through") {
        ++i_;
        through = true;
      }
      Expr a = expression(false);
      a.through = through;
      args.push_back(std::move(a));
      if (peek().type == Token::Type::Comma) {
        ++i_;
        continue;
      }
      if (peek().type == Token::Type::RParen) {
        ++i_;
        return args;
      }
      fail_expected({"','", "')'"});
    }
  }

  Expr expression(bool top_level) {
    const Token& t = peek();
    if (t.type == Token::Type::LParen) return point_literal();
    if (t.type == Token::Type::Number) {
      ++i_;
      Expr e;
      e.kind = Expr::Kind::Number;
      e.loc = t.loc;
      e.x = t.number;
      return e;
    }
    if (t.type != Token::Type::Ident) fail_expected({"point literal", "number", "name", "function call"});
    ++i_;
    Expr e;
    e.loc = t.loc;
    e.name = t.text;
    if (peek().type != Token::Type::LParen) {
      e.kind = Expr::Kind::Name;
      lookup(t);
      return e;
    }
    ++i_;
    e.kind = Expr::Kind::Call;
    if (e.name == "intersect" && !top_level) {
      throw ParseError(ParseErrorKind::Syntax, t.loc, t.text, {}, "intersect needs its own binding with a selector");
    }
    e.args = arguments();
    check_call(t, e.args, detail::functions(), "function");
    return e;
  }

  const detail::Signature& check_call(const Token& fn, const std::vector<Expr>& args,
                                      const std::vector<detail::Signature>& table, const char* what) {
    std::vector<const detail::Signature*> same_name;
    for (const auto& sig : table) {
      if (sig.name == fn.text) same_name.push_back(&sig);
    }
    if (same_name.empty()) {
      throw ParseError(ParseErrorKind::UnknownName, fn.loc, fn.text, {},
                       std::string("unknown ") + what + " '" + fn.text + "'");
    }
    std::vector<const detail::Signature*> same_arity;
    for (const auto* sig : same_name) {
      if (sig->params.size() == args.size()) same_arity.push_back(sig);
    }
    if (same_arity.empty()) {
      std::vector<std::string> counts;
      for (const auto* sig : same_name) counts.push_back(std::to_string(sig->params.size()) + " arguments");
      throw ParseError(ParseErrorKind::Arity, fn.loc, fn.text, counts,
                       "'" + fn.text + "' called with " + std::to_string(args.size()) + " arguments");
    }
    std::vector<ValueKind> kinds;
    for (const auto& a : args) kinds.push_back(kind_of_expr(a));
    for (const auto* sig : same_arity) {
      bool ok = true;
      for (std::size_t k = 0; k < args.size() && ok; ++k) {
        ok = accepts(sig->params[k].kind, kinds[k]) && sig->params[k].through == args[k].through;
      }
      if (ok) return *sig;
    }
    // Report against the first overload of the right arity.
    const auto& sig = *same_arity.front();
    for (std::size_t k = 0; k < args.size(); ++k) {
      const auto& p = sig.params[k];
      if (p.through != args[k].through) {
        throw ParseError(ParseErrorKind::Syntax, args[k].loc, args[k].name.empty() ? "(" : args[k].name,
                         {p.through ? "through" : "argument without 'through'"},
                         "argument " + std::to_string(k + 1) + " of '" + fn.text + "'");
      }
      if (!accepts(p.kind, kinds[k])) {
        throw ParseError(ParseErrorKind::KindMismatch, args[k].loc, args[k].name.empty() ? "(" : args[k].name,
                         {std::string(to_string(p.kind))},
                         "argument " + std::to_string(k + 1) + " of '" + fn.text + "' is a " +
                             std::string(to_string(kinds[k])));
      }
    }
    throw ParseError(ParseErrorKind::KindMismatch, fn.loc, fn.text, {}, "no matching overload");
  }

  ValueKind kind_of_expr(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::PointLiteral: return ValueKind::Point;
      case Expr::Kind::Number: return ValueKind::Number;
      case Expr::Kind::Name: return detail::is_model_tag(e.name) ? ValueKind::Model : kinds_.at(e.name);
      case Expr::Kind::Call: break;
    }
    for (const auto& sig : detail::functions()) {
      if (sig.name != e.name || sig.params.size() != e.args.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < e.args.size() && ok; ++k) {
        ok = accepts(sig.params[k].kind, kind_of_expr(e.args[k])) && sig.params[k].through == e.args[k].through;
      }
      if (ok) return sig.result;
    }
    return ValueKind::Point;  // unreachable after check_call
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::map<std::string, ValueKind> kinds_;
};

}  // namespace

Program parse(std::string_view source) {
  return Parser(Lexer(source).run()).run();
}

}  // namespace hypmid::script
