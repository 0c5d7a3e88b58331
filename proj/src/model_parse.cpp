// Copyright 2026 The ivsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "ivsim/errors.hpp"
#include "ivsim/model.hpp"

namespace ivsim {

char signal_letter(Signal s) {
  switch (s) {
    case Signal::output: return 'y';
    case Signal::input: return 'u';
    case Signal::noise: return 'e';
  }
  return '?';
}

ExprPtr make_constant(DecimalLiteral value) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::constant;
  e->literal = std::move(value);
  return e;
}

ExprPtr make_signal(Signal s, int lag) {
  if (lag < 1) throw ParseError("signal lag must be >= 1");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::signal;
  e->signal = SignalRef{s, lag};
  return e;
}

ExprPtr make_negate(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::negate;
  e->left = std::move(child);
  return e;
}

ExprPtr make_binary(ExprKind op, ExprPtr left, ExprPtr right) {
  auto e = std::make_shared<Expr>();
  e->kind = op;
  e->left = std::move(left);
  e->right = std::move(right);
  return e;
}

ExprPtr make_power(ExprPtr base, long exponent) {
  if (exponent < 1) throw ParseError("power exponent must be >= 1");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::power;
  e->left = std::move(base);
  e->exponent = exponent;
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::constant: return a.literal == b.literal;
    case ExprKind::signal: return a.signal == b.signal;
    case ExprKind::negate: return expr_equal(*a.left, *b.left);
    case ExprKind::power:
      return a.exponent == b.exponent && expr_equal(*a.left, *b.left);
    default:
      return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
  }
}

namespace {

// Larger binds tighter.
int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::add:
    case ExprKind::subtract: return 1;
    case ExprKind::multiply:
    case ExprKind::divide: return 2;
    case ExprKind::negate: return 3;
    case ExprKind::power: return 4;
    default: return 5;
  }
}

void render(const Expr& e, std::string& out) {
  auto child = [&](const Expr& c, bool need_parens) {
    if (need_parens) out.push_back('(');
    render(c, out);
    if (need_parens) out.push_back(')');
  };
  const int p = precedence(e.kind);
  switch (e.kind) {
    case ExprKind::constant:
      out += e.literal.text();
      break;
    case ExprKind::signal:
      out.push_back(signal_letter(e.signal.signal));
      out += "(k-";
      out += std::to_string(e.signal.lag);
      out.push_back(')');
      break;
    case ExprKind::negate:
      out.push_back('-');
      child(*e.left, precedence(e.left->kind) < p);
      break;
    case ExprKind::power:
      child(*e.left, e.left->kind != ExprKind::constant &&
                         e.left->kind != ExprKind::signal);
      out.push_back('^');
      out += std::to_string(e.exponent);
      break;
    default: {
      // Left-associative binary operators: the right child needs parens at
      // equal precedence to keep the tree shape on reparse.
      child(*e.left, precedence(e.left->kind) < p);
      switch (e.kind) {
        case ExprKind::add: out += " + "; break;
        case ExprKind::subtract: out += " - "; break;
        case ExprKind::multiply: out += "*"; break;
        default: out += "/"; break;
      }
      child(*e.right, precedence(e.right->kind) <= p);
      break;
    }
  }
}

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < src.size() &&
           std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool eof() {
    skip_space();
    return pos >= src.size();
  }
  char peek() {
    skip_space();
    return pos < src.size() ? src[pos] : '\0';
  }
  // 1-based position for error messages.
  std::size_t here() {
    skip_space();
    return pos + 1;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      throw ParseError(std::string("syntax error: expected ") + what, here());
  }
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_{src} {}

  ExprPtr parse_statement() {
    lex_.expect('y', "'y(k)' on the left-hand side");
    lex_.expect('(', "'('");
    lex_.expect('k', "'k'");
    lex_.expect(')', "')'");
    lex_.expect('=', "'='");
    ExprPtr e = parse_expr();
    if (!lex_.eof())
      throw ParseError("syntax error: unexpected trailing input", lex_.here());
    return e;
  }

 private:
  Lexer lex_;

  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    for (;;) {
      if (lex_.accept('+'))
        left = make_binary(ExprKind::add, left, parse_term());
      else if (lex_.accept('-'))
        left = make_binary(ExprKind::subtract, left, parse_term());
      else
        return left;
    }
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_factor();
    for (;;) {
      if (lex_.accept('*'))
        left = make_binary(ExprKind::multiply, left, parse_factor());
      else if (lex_.accept('/'))
        left = make_binary(ExprKind::divide, left, parse_factor());
      else
        return left;
    }
  }

  ExprPtr parse_factor() {
    if (lex_.accept('-')) return make_negate(parse_factor());
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (!lex_.accept('^')) return base;
    std::size_t at = lex_.here();
    auto [text, has_fraction] = lex_number();
    if (has_fraction)
      throw ParseError("semantic error: exponent must be a positive integer",
                       at);
    long value = 0;
    for (char c : text) {
      value = value * 10 + (c - '0');
      if (value > 10000)
        throw ParseError("semantic error: exponent too large", at);
    }
    if (value < 1)
      throw ParseError("semantic error: exponent must be a positive integer",
                       at);
    return make_power(std::move(base), value);
  }

  ExprPtr parse_atom() {
    std::size_t at = lex_.here();
    char c = lex_.peek();
    if (c == '(') {
      lex_.accept('(');
      ExprPtr inner = parse_expr();
      lex_.expect(')', "')'");
      return inner;
    }
    if (c == 'y' || c == 'u' || c == 'e') return parse_signal();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      auto [text, has_fraction] = lex_number();
      (void)has_fraction;
      return make_constant(DecimalLiteral::parse(text));
    }
    throw ParseError("syntax error: expected a constant, signal or '('", at);
  }

  ExprPtr parse_signal() {
    char c = lex_.peek();
    ++lex_.pos;
    Signal s = c == 'y'   ? Signal::output
               : c == 'u' ? Signal::input
                          : Signal::noise;
    lex_.expect('(', "'(' after signal name");
    lex_.expect('k', "'k'");
    lex_.expect('-', "'-' (signals use past values only)");
    std::size_t lag_at = lex_.here();
    auto [text, has_fraction] = lex_number();
    if (has_fraction)
      throw ParseError("semantic error: lag must be an integer", lag_at);
    long lag = 0;
    for (char d : text) {
      lag = lag * 10 + (d - '0');
      if (lag > 1000000)
        throw ParseError("semantic error: lag too large", lag_at);
    }
    if (lag < 1)
      throw ParseError("semantic error: lag must be >= 1", lag_at);
    lex_.expect(')', "')'");
    return make_signal(s, static_cast<int>(lag));
  }

  // Returns the raw token text and whether it contains '.' or an exponent
  // marker (callers needing plain integers reject those).
  std::pair<std::string, bool> lex_number() {
    std::size_t at = lex_.here();
    std::size_t start = lex_.pos;
    bool fraction = false;
    bool any = false;
    while (lex_.pos < lex_.src.size()) {
      char c = lex_.src[lex_.pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        any = true;
        ++lex_.pos;
      } else if (c == '.') {
        fraction = true;
        ++lex_.pos;
      } else if ((c == 'e' || c == 'E') && any) {
        // Exponent part: digits, optionally signed.
        std::size_t save = lex_.pos;
        ++lex_.pos;
        if (lex_.pos < lex_.src.size() &&
            (lex_.src[lex_.pos] == '+' || lex_.src[lex_.pos] == '-'))
          ++lex_.pos;
        if (lex_.pos < lex_.src.size() &&
            std::isdigit(static_cast<unsigned char>(lex_.src[lex_.pos]))) {
          fraction = true;
          while (lex_.pos < lex_.src.size() &&
                 std::isdigit(static_cast<unsigned char>(lex_.src[lex_.pos])))
            ++lex_.pos;
        } else {
          lex_.pos = save;  // not an exponent; 'e' belongs to the next token
        }
        break;
      } else {
        break;
      }
    }
    if (!any) throw ParseError("syntax error: expected a number", at);
    return {std::string(lex_.src.substr(start, lex_.pos - start)), fraction};
  }
};

int expr_degree(const Expr& e) {
  switch (e.kind) {
    case ExprKind::constant: return 0;
    case ExprKind::signal: return 1;
    case ExprKind::negate: return expr_degree(*e.left);
    case ExprKind::add:
    case ExprKind::subtract:
      return std::max(expr_degree(*e.left), expr_degree(*e.right));
    case ExprKind::multiply:
    case ExprKind::divide:
      return expr_degree(*e.left) + expr_degree(*e.right);
    case ExprKind::power:
      return expr_degree(*e.left) * static_cast<int>(e.exponent);
  }
  return 0;
}

void collect_refs(const Expr& e, std::set<SignalRef>& out) {
  switch (e.kind) {
    case ExprKind::constant: return;
    case ExprKind::signal:
      out.insert(e.signal);
      return;
    case ExprKind::negate:
    case ExprKind::power:
      collect_refs(*e.left, out);
      return;
    default:
      collect_refs(*e.left, out);
      collect_refs(*e.right, out);
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

namespace {

bool is_constant_value(const Expr& e, const char* text) {
  return e.kind == ExprKind::constant &&
         e.literal == DecimalLiteral::parse(text);
}

ExprPtr d_mul(ExprPtr a, ExprPtr b) {
  if (is_constant_value(*a, "0") || is_constant_value(*b, "0"))
    return make_constant(DecimalLiteral::parse("0"));
  if (is_constant_value(*a, "1")) return b;
  if (is_constant_value(*b, "1")) return a;
  return make_binary(ExprKind::multiply, std::move(a), std::move(b));
}

ExprPtr d_add(ExprKind op, ExprPtr a, ExprPtr b) {
  if (is_constant_value(*b, "0")) return a;
  if (is_constant_value(*a, "0") && op == ExprKind::add) return b;
  return make_binary(op, std::move(a), std::move(b));
}

}  // namespace

ExprPtr differentiate(const Expr& e, const SignalRef& ref) {
  auto zero = [] { return make_constant(DecimalLiteral::parse("0")); };
  switch (e.kind) {
    case ExprKind::constant:
      return zero();
    case ExprKind::signal:
      return e.signal == ref ? make_constant(DecimalLiteral::parse("1"))
                             : zero();
    case ExprKind::negate:
      return make_negate(differentiate(*e.left, ref));
    case ExprKind::add:
    case ExprKind::subtract:
      return d_add(e.kind, differentiate(*e.left, ref),
                   differentiate(*e.right, ref));
    case ExprKind::multiply:
      return d_add(ExprKind::add,
                   d_mul(differentiate(*e.left, ref), e.right),
                   d_mul(e.left, differentiate(*e.right, ref)));
    case ExprKind::divide:
      // (a/b)' = a'/b - a*b'/b^2
      return d_add(
          ExprKind::subtract,
          make_binary(ExprKind::divide, differentiate(*e.left, ref), e.right),
          make_binary(ExprKind::divide,
                      d_mul(e.left, differentiate(*e.right, ref)),
                      make_power(e.right, 2)));
    case ExprKind::power: {
      // (b^p)' = p * b^(p-1) * b'
      ExprPtr inner = differentiate(*e.left, ref);
      ExprPtr base_pow =
          e.exponent == 1 ? make_constant(DecimalLiteral::parse("1"))
          : e.exponent == 2 ? e.left
                            : make_power(e.left, e.exponent - 1);
      ExprPtr coeff = make_constant(
          DecimalLiteral::parse(std::to_string(e.exponent)));
      return d_mul(d_mul(std::move(coeff), std::move(base_pow)),
                   std::move(inner));
    }
  }
  return zero();
}

int Model::max_lag() const {
  return std::max({max_lag_y, max_lag_u, max_lag_e});
}

Model parse_model(std::string_view source, std::string name) {
  Parser parser(source);
  Model m;
  m.name = std::move(name);
  m.expression = parser.parse_statement();
  std::set<SignalRef> refs;
  collect_refs(*m.expression, refs);
  for (const SignalRef& r : refs) {
    m.signal_refs.push_back(r);
    int& lag = r.signal == Signal::output  ? m.max_lag_y
               : r.signal == Signal::input ? m.max_lag_u
                                           : m.max_lag_e;
    lag = std::max(lag, r.lag);
  }
  m.degree = expr_degree(*m.expression);
  return m;
}

std::string print_model(const Model& m) {
  return "y(k) = " + to_string(*m.expression);
}

Model parse_model_file(std::string_view contents, std::string name) {
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    std::string_view line = contents.substr(pos, eol - pos);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) return parse_model(line, std::move(name));
    pos = eol + 1;
  }
  throw ParseError("model file contains no statement");
}

}  // namespace ivsim
