#include "connkit/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "connkit/numfmt.hpp"

namespace connkit {

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident_char = [&](char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '+': out.push_back({TokenKind::Plus, 0, "+", start}); ++i; continue;
      case '-': out.push_back({TokenKind::Minus, 0, "-", start}); ++i; continue;
      case '*': out.push_back({TokenKind::Star, 0, "*", start}); ++i; continue;
      case '/': out.push_back({TokenKind::Slash, 0, "/", start}); ++i; continue;
      case '^': out.push_back({TokenKind::Caret, 0, "^", start}); ++i; continue;
      case '(': out.push_back({TokenKind::LParen, 0, "(", start}); ++i; continue;
      case ')': out.push_back({TokenKind::RParen, 0, ")", start}); ++i; continue;
      case ',': out.push_back({TokenKind::Comma, 0, ",", start}); ++i; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      if (i < src.size() && src[i] == '.') {
        if (i + 1 >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i + 1])))
          throw ParseError("malformed number: expected digits after '.'", i);
        ++i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j >= src.size() || !std::isdigit(static_cast<unsigned char>(src[j])))
          throw ParseError("malformed number: incomplete exponent", i);
        i = j;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
      if (i < src.size() && (is_ident_start(src[i]) || src[i] == '.'))
        throw ParseError("malformed number", i);
      double value = 0.0;
      const auto res = std::from_chars(src.data() + start, src.data() + i, value);
      if (res.ec != std::errc{} || res.ptr != src.data() + i)
        throw ParseError("malformed number", start);
      out.push_back({TokenKind::Number, value, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (is_ident_start(c)) {
      while (i < src.size() && is_ident_char(src[i])) ++i;
      out.push_back({TokenKind::Ident, 0, std::string(src.substr(start, i - start)), start});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({TokenKind::End, 0, "", src.size()});
  return out;
}

namespace {

using Op = ExprNode::Op;

const std::map<std::string, Op, std::less<>>& unary_functions() {
  static const std::map<std::string, Op, std::less<>> table{
      {"sin", Op::Sin}, {"cos", Op::Cos}, {"tan", Op::Tan},
      {"exp", Op::Exp}, {"log", Op::Log}, {"sqrt", Op::Sqrt},
  };
  return table;
}

class Parser {
 public:
  Parser(std::string_view src, std::span<const std::string> variables)
      : tokens_(tokenize(src)), variables_(variables) {}

  int parse_all(std::vector<ExprNode>& nodes) {
    nodes_ = &nodes;
    if (peek().kind == TokenKind::End) throw ParseError("empty expression", 0);
    const int root = parse_expr();
    if (peek().kind != TokenKind::End)
      throw ParseError("unexpected trailing input", peek().offset);
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(TokenKind k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().offset);
  }

  int add_node(ExprNode n) {
    nodes_->push_back(n);
    return static_cast<int>(nodes_->size()) - 1;
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
        const Token op = take();
        const int rhs = parse_term();
        lhs = add_node({op.kind == TokenKind::Plus ? Op::Add : Op::Sub, 0, 0, -1, lhs, rhs,
                        op.offset});
      } else {
        return lhs;
      }
    }
  }

  int parse_term() {
    int lhs = parse_unary();
    for (;;) {
      if (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
        const Token op = take();
        const int rhs = parse_unary();
        lhs = add_node({op.kind == TokenKind::Star ? Op::Mul : Op::Div, 0, 0, -1, lhs, rhs,
                        op.offset});
      } else {
        return lhs;
      }
    }
  }

  int parse_unary() {
    if (peek().kind == TokenKind::Minus) {
      const Token op = take();
      const int a = parse_unary();
      return add_node({Op::Neg, 0, 0, -1, a, -1, op.offset});
    }
    return parse_power();
  }

  int parse_power() {
    const int base = parse_atom();
    if (peek().kind == TokenKind::Caret) {
      const Token op = take();
      const int exponent = parse_unary();  // right associative, allows 2^-3
      return make_pow(base, exponent, op.offset);
    }
    return base;
  }

  // Fold literal integer exponents (possibly negated/parenthesized) into the
  // exact repeated-multiplication form.
  int make_pow(int base, int exponent, std::size_t offset) {
    const auto literal_int = [&](int idx, long long& out) {
      const ExprNode& n = (*nodes_)[static_cast<std::size_t>(idx)];
      double v = 0.0;
      if (n.op == Op::Num) {
        v = n.number;
      } else if (n.op == Op::Neg &&
                 (*nodes_)[static_cast<std::size_t>(n.a)].op == Op::Num) {
        v = -(*nodes_)[static_cast<std::size_t>(n.a)].number;
      } else {
        return false;
      }
      if (!(std::floor(v) == v) || std::abs(v) > 1e9) return false;
      out = static_cast<long long>(v);
      return true;
    };
    long long e = 0;
    if (literal_int(exponent, e))
      return add_node({Op::PowInt, 0, e, -1, base, -1, offset});
    return add_node({Op::Pow, 0, 0, -1, base, exponent, offset});
  }

  int parse_atom() {
    const Token t = take();
    switch (t.kind) {
      case TokenKind::Number:
        return add_node({Op::Num, t.number, 0, -1, -1, -1, t.offset});
      case TokenKind::LParen: {
        const int inner = parse_expr();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::Ident: {
        if (peek().kind == TokenKind::LParen) return parse_call(t);
        for (std::size_t i = 0; i < variables_.size(); ++i) {
          if (variables_[i] == t.text)
            return add_node({Op::Var, 0, 0, static_cast<int>(i), -1, -1, t.offset});
        }
        throw BindError("unbound variable '" + t.text + "'", t.text, t.offset);
      }
      default:
        throw ParseError("expected a number, variable, function call or '('", t.offset);
    }
  }

  int parse_call(const Token& name) {
    expect(TokenKind::LParen, "'('");
    std::vector<int> args{parse_expr()};
    while (accept(TokenKind::Comma)) args.push_back(parse_expr());
    expect(TokenKind::RParen, "')'");

    if (name.text == "pow") {
      if (args.size() != 2)
        throw ParseError("pow expects 2 arguments, got " + std::to_string(args.size()),
                         name.offset);
      return make_pow(args[0], args[1], name.offset);
    }
    const auto& table = unary_functions();
    const auto it = table.find(name.text);
    if (it == table.end())
      throw ParseError("unknown function '" + name.text + "'", name.offset);
    if (args.size() != 1)
      throw ParseError(name.text + " expects 1 argument, got " + std::to_string(args.size()),
                       name.offset);
    return add_node({it->second, 0, 0, -1, args[0], -1, name.offset});
  }

  std::vector<Token> tokens_;
  std::span<const std::string> variables_;
  std::vector<ExprNode>* nodes_ = nullptr;
  std::size_t pos_ = 0;
};

int precedence(const std::vector<ExprNode>& nodes, int idx) {
  switch (nodes[static_cast<std::size_t>(idx)].op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow:
    case Op::PowInt: return 4;
    default: return 5;
  }
}

const char* function_name(Op op) {
  switch (op) {
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Tan: return "tan";
    case Op::Exp: return "exp";
    case Op::Log: return "log";
    case Op::Sqrt: return "sqrt";
    default: return "?";
  }
}

}  // namespace

Expr Expr::parse(std::string_view src, std::span<const std::string> variables) {
  auto ast = std::make_shared<Ast>();
  ast->variables.assign(variables.begin(), variables.end());
  Parser p(src, ast->variables);
  ast->root = p.parse_all(ast->nodes);
  Expr e;
  e.ast_ = std::move(ast);
  return e;
}

std::size_t Expr::variable_count() const { return ast_ ? ast_->variables.size() : 0; }

namespace {

void dump_node(const std::vector<ExprNode>& nodes, std::span<const std::string> vars, int idx,
               std::string& out) {
  const ExprNode& n = nodes[static_cast<std::size_t>(idx)];
  auto binary = [&](const char* tag) {
    out += "(";
    out += tag;
    out += " ";
    dump_node(nodes, vars, n.a, out);
    out += " ";
    dump_node(nodes, vars, n.b, out);
    out += ")";
  };
  auto unary = [&](const char* tag) {
    out += "(";
    out += tag;
    out += " ";
    dump_node(nodes, vars, n.a, out);
    out += ")";
  };
  switch (n.op) {
    case Op::Num: out += format_double(n.number); return;
    case Op::Var: out += vars[static_cast<std::size_t>(n.var)]; return;
    case Op::Add: binary("+"); return;
    case Op::Sub: binary("-"); return;
    case Op::Mul: binary("*"); return;
    case Op::Div: binary("/"); return;
    case Op::Pow: binary("^"); return;
    case Op::Neg: unary("neg"); return;
    case Op::PowInt:
      out += "(^i ";
      dump_node(nodes, vars, n.a, out);
      out += " " + std::to_string(n.ipow) + ")";
      return;
    default: unary(function_name(n.op)); return;
  }
}

void print_node(const std::vector<ExprNode>& nodes, std::span<const std::string> vars, int idx,
                std::string& out) {
  const ExprNode& n = nodes[static_cast<std::size_t>(idx)];
  auto child = [&](int c, bool parens) {
    if (parens) out += "(";
    print_node(nodes, vars, c, out);
    if (parens) out += ")";
  };
  const int my = precedence(nodes, idx);
  switch (n.op) {
    case Op::Num: out += format_double(n.number); return;
    case Op::Var: out += vars[static_cast<std::size_t>(n.var)]; return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      child(n.a, precedence(nodes, n.a) < my);
      out += n.op == Op::Add ? " + " : n.op == Op::Sub ? " - " : n.op == Op::Mul ? " * " : " / ";
      // right operand of a left-associative operator: parenthesize on equal
      // precedence to keep the tree shape
      child(n.b, precedence(nodes, n.b) <= my);
      return;
    }
    case Op::Neg:
      out += "-";
      child(n.a, precedence(nodes, n.a) < 3);
      return;
    case Op::Pow:
      child(n.a, precedence(nodes, n.a) <= 4);  // right associative
      out += " ^ ";
      child(n.b, precedence(nodes, n.b) < 4);
      return;
    case Op::PowInt:
      child(n.a, precedence(nodes, n.a) <= 4);
      out += " ^ ";
      if (n.ipow < 0) {
        out += "(" + std::to_string(n.ipow) + ")";
      } else {
        out += std::to_string(n.ipow);
      }
      return;
    default:
      out += function_name(n.op);
      out += "(";
      print_node(nodes, vars, n.a, out);
      out += ")";
      return;
  }
}

}  // namespace

std::string Expr::dump() const {
  if (!ast_) return "<empty>";
  std::string out;
  dump_node(ast_->nodes, ast_->variables, ast_->root, out);
  return out;
}

std::string Expr::print() const {
  if (!ast_) return "";
  std::string out;
  print_node(ast_->nodes, ast_->variables, ast_->root, out);
  return out;
}

}  // namespace connkit
