#include "connkit/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "connkit/errors.hpp"
#include "connkit/expr.hpp"
#include "connkit/expr_field.hpp"
#include "connkit/numfmt.hpp"

namespace connkit {

namespace {

// ---- tokens ----------------------------------------------------------------

enum class Tok { LBracket, RBracket, Equals, Comma, String, Number, Bare, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // string content for String, raw text otherwise
  int line = 0, col = 0;
};

struct Lexer {
  std::string_view src;
  std::string file;
  std::size_t i = 0;
  int line = 1, col = 1;

  [[noreturn]] void fail(const std::string& msg, int ln, int cl) const {
    throw ConfigError(file + ":" + std::to_string(ln) + ":" + std::to_string(cl) + ": " + msg,
                      file, ln, cl);
  }

  void advance() {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip_blank() {
    while (i < src.size()) {
      const char c = src[i];
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  static bool bare_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
           c == '+';
  }

  Token next() {
    skip_blank();
    Token t;
    t.line = line;
    t.col = col;
    if (i >= src.size()) return t;
    const char c = src[i];
    switch (c) {
      case '[':
        t.kind = Tok::LBracket;
        advance();
        return t;
      case ']':
        t.kind = Tok::RBracket;
        advance();
        return t;
      case '=':
        t.kind = Tok::Equals;
        advance();
        return t;
      case ',':
        t.kind = Tok::Comma;
        advance();
        return t;
      case '"': {
        advance();
        std::string s;
        while (i < src.size() && src[i] != '"') {
          if (src[i] == '\n') fail("unterminated string", t.line, t.col);
          s.push_back(src[i]);
          advance();
        }
        if (i >= src.size()) fail("unterminated string", t.line, t.col);
        advance();  // closing quote
        t.kind = Tok::String;
        t.text = std::move(s);
        return t;
      }
      default:
        break;
    }
    if (!bare_char(c)) fail(std::string("unexpected character '") + c + "'", line, col);
    std::string s;
    while (i < src.size() && bare_char(src[i])) {
      s.push_back(src[i]);
      advance();
    }
    t.text = std::move(s);
    const char first = t.text[0];
    t.kind = (std::isdigit(static_cast<unsigned char>(first)) || first == '-' || first == '+')
                 ? Tok::Number
                 : Tok::Bare;
    return t;
  }
};

// ---- parsed values ---------------------------------------------------------

struct Value;
using Array = std::vector<Value>;

struct Value {
  enum class Kind { Str, Int, Float, Bool, Arr } kind = Kind::Str;
  std::string str;
  long long integer = 0;
  double real = 0.0;
  bool boolean = false;
  Array arr;
  int line = 0, col = 0;

  const char* kind_name() const {
    switch (kind) {
      case Kind::Str: return "string";
      case Kind::Int: return "integer";
      case Kind::Float: return "float";
      case Kind::Bool: return "boolean";
      case Kind::Arr: return "array";
    }
    return "?";
  }
};

struct KeyValue {
  std::string key;
  Value value;
  int line = 0, col = 0;  // key position
};

struct Section {
  std::string name;
  int line = 0, col = 0;
  std::vector<KeyValue> entries;
};

struct Parser {
  Lexer lex;
  Token tok;
  int prev_token_line = 0;  // line of the most recently consumed token

  explicit Parser(std::string_view text, std::string file) : lex{text, std::move(file)} {
    tok = lex.next();
  }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ConfigError(lex.file + ":" + std::to_string(at.line) + ":" + std::to_string(at.col) +
                          ": " + msg,
                      lex.file, at.line, at.col);
  }

  void bump() {
    prev_token_line = tok.line;
    tok = lex.next();
  }

  Value parse_value() {
    Value v;
    v.line = tok.line;
    v.col = tok.col;
    switch (tok.kind) {
      case Tok::String:
        v.kind = Value::Kind::Str;
        v.str = tok.text;
        bump();
        return v;
      case Tok::Number: {
        const std::string raw = tok.text;
        const bool floaty = raw.find_first_of(".eE") != std::string::npos;
        errno = 0;
        char* end = nullptr;
        if (floaty) {
          v.kind = Value::Kind::Float;
          v.real = std::strtod(raw.c_str(), &end);
        } else {
          v.kind = Value::Kind::Int;
          v.integer = std::strtoll(raw.c_str(), &end, 10);
          v.real = static_cast<double>(v.integer);
        }
        if (end == nullptr || *end != '\0' || errno == ERANGE)
          fail("malformed number '" + raw + "'", tok);
        bump();
        return v;
      }
      case Tok::Bare:
        if (tok.text == "true" || tok.text == "false") {
          v.kind = Value::Kind::Bool;
          v.boolean = tok.text == "true";
          bump();
          return v;
        }
        fail("expected a value, got '" + tok.text + "'", tok);
      case Tok::LBracket: {
        v.kind = Value::Kind::Arr;
        bump();
        while (tok.kind != Tok::RBracket) {
          if (tok.kind == Tok::End) fail("unterminated array", tok);
          v.arr.push_back(parse_value());
          if (tok.kind == Tok::Comma) {
            bump();
          } else if (tok.kind != Tok::RBracket) {
            fail("expected ',' or ']' in array", tok);
          }
        }
        bump();
        return v;
      }
      default:
        fail("expected a value", tok);
    }
  }

  std::vector<Section> parse_file() {
    std::vector<Section> sections;
    int last_line = 0;
    while (tok.kind != Tok::End) {
      if (tok.kind == Tok::LBracket) {
        if (tok.line == last_line) fail("section header must start its own line", tok);
        Section s;
        s.line = tok.line;
        s.col = tok.col;
        bump();
        if (tok.kind != Tok::Bare) fail("expected section name", tok);
        s.name = tok.text;
        bump();
        if (tok.kind != Tok::RBracket) fail("expected ']' after section name", tok);
        bump();
        last_line = prev_token_line;
        sections.push_back(std::move(s));
        continue;
      }
      if (tok.kind != Tok::Bare && tok.kind != Tok::String)
        fail("expected a key or section header", tok);
      if (sections.empty()) fail("key outside of any section", tok);
      if (tok.line == last_line) fail("one key-value pair per line", tok);
      KeyValue kv;
      kv.key = tok.text;
      kv.line = tok.line;
      kv.col = tok.col;
      bump();
      if (tok.kind != Tok::Equals) fail("expected '=' after key", tok);
      bump();
      kv.value = parse_value();
      // The statement ends where its value ends (arrays may span lines).
      last_line = prev_token_line;
      sections.back().entries.push_back(std::move(kv));
    }
    return sections;
  }
};

// ---- semantic pass ---------------------------------------------------------

struct Checker {
  std::string file;

  [[noreturn]] void fail(const std::string& msg, int line, int col) const {
    throw ConfigError(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg,
                      file, line, col);
  }

  double number(const Value& v, const std::string& key) const {
    if (v.kind != Value::Kind::Int && v.kind != Value::Kind::Float)
      fail("'" + key + "' must be a number, got " + v.kind_name(), v.line, v.col);
    return v.real;
  }

  long long integer(const Value& v, const std::string& key) const {
    if (v.kind != Value::Kind::Int)
      fail("'" + key + "' must be an integer, got " + v.kind_name(), v.line, v.col);
    return v.integer;
  }

  bool boolean(const Value& v, const std::string& key) const {
    if (v.kind != Value::Kind::Bool)
      fail("'" + key + "' must be a boolean, got " + v.kind_name(), v.line, v.col);
    return v.boolean;
  }

  const std::string& string(const Value& v, const std::string& key) const {
    if (v.kind != Value::Kind::Str)
      fail("'" + key + "' must be a string, got " + v.kind_name(), v.line, v.col);
    return v.str;
  }

  std::vector<std::string> string_array(const Value& v, const std::string& key) const {
    if (v.kind != Value::Kind::Arr)
      fail("'" + key + "' must be an array, got " + v.kind_name(), v.line, v.col);
    std::vector<std::string> out;
    for (const Value& e : v.arr) out.push_back(string(e, key));
    return out;
  }

  std::vector<double> number_array(const Value& v, const std::string& key) const {
    if (v.kind != Value::Kind::Arr)
      fail("'" + key + "' must be an array, got " + v.kind_name(), v.line, v.col);
    std::vector<double> out;
    for (const Value& e : v.arr) out.push_back(number(e, key));
    return out;
  }

  // n rows of n string entries.
  std::vector<std::vector<std::string>> matrix(const Value& v, const std::string& key,
                                               int n) const {
    if (v.kind != Value::Kind::Arr)
      fail("'" + key + "' must be an array of rows, got " + v.kind_name(), v.line, v.col);
    if (static_cast<int>(v.arr.size()) != n)
      fail("'" + key + "' must have " + std::to_string(n) + " rows", v.line, v.col);
    std::vector<std::vector<std::string>> rows;
    for (const Value& r : v.arr) {
      if (r.kind != Value::Kind::Arr || static_cast<int>(r.arr.size()) != n)
        fail("each row of '" + key + "' must be an array of " + std::to_string(n) +
                 " expression strings",
             r.line, r.col);
      std::vector<std::string> row;
      for (const Value& e : r.arr) row.push_back(string(e, key));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  // Validates an expression against the chart variables; errors point into
  // the config file at the expression's own position.
  void check_expr(const std::string& src, const std::vector<std::string>& vars, int line,
                  int col) const {
    try {
      (void)Expr::parse(src, vars);
    } catch (const ParseError& e) {
      fail(std::string("in expression: ") + e.what() + " (offset " +
               std::to_string(e.offset) + ")",
           line, col);
    } catch (const BindError& e) {
      fail(std::string("in expression: ") + e.what(), line, col);
    }
  }
};

// "G^s_mn" with single-digit 1-based indices.
bool parse_coeff_key(const std::string& key, int dim, int* s, int* m, int* nu) {
  if (key.size() != 6 || key[0] != 'G' || key[1] != '^' || key[3] != '_') return false;
  const auto digit = [](char c) { return c >= '1' && c <= '9' ? c - '0' : -1; };
  const int a = digit(key[2]), b = digit(key[4]), c = digit(key[5]);
  if (a < 0 || b < 0 || c < 0) return false;
  if (a > dim || b > dim || c > dim) return false;
  *s = a - 1;
  *m = b - 1;
  *nu = c - 1;
  return true;
}

const std::set<std::string>& known_suites() {
  static const std::set<std::string> names = {
      "axioms",   "complement", "inversion",   "cartan1",  "cartan2",
      "duality",  "symmetry",   "cyclic",      "bianchi",  "deformation",
      "relative", "split",      "jacobian"};
  return names;
}

}  // namespace

SpecConfig parse_config(std::string_view text, std::string source) {
  Parser parser(text, source);
  std::vector<Section> sections = parser.parse_file();
  Checker ck{source};

  SpecConfig cfg;
  cfg.source = std::move(source);

  const std::set<std::string> known_sections = {"chart",       "frame", "connection",
                                                "deformation", "run",   "tolerances"};
  std::set<std::string> seen;
  const Section* chart_sec = nullptr;
  const Section* frame_sec = nullptr;
  const Section* conn_sec = nullptr;
  const Section* deform_sec = nullptr;
  const Section* run_sec = nullptr;
  const Section* tol_sec = nullptr;
  for (const Section& s : sections) {
    if (!known_sections.count(s.name)) ck.fail("unknown section [" + s.name + "]", s.line, s.col);
    if (!seen.insert(s.name).second)
      ck.fail("duplicate section [" + s.name + "]", s.line, s.col);
    if (s.name == "chart") chart_sec = &s;
    if (s.name == "frame") frame_sec = &s;
    if (s.name == "connection") conn_sec = &s;
    if (s.name == "deformation") deform_sec = &s;
    if (s.name == "run") run_sec = &s;
    if (s.name == "tolerances") tol_sec = &s;
  }
  if (!chart_sec) ck.fail("missing required section [chart]", 1, 1);
  if (!conn_sec) ck.fail("missing required section [connection]", 1, 1);

  // [chart]
  {
    std::set<std::string> keys;
    for (const KeyValue& kv : chart_sec->entries) {
      if (!keys.insert(kv.key).second) ck.fail("duplicate key '" + kv.key + "'", kv.line, kv.col);
      if (kv.key == "dim") {
        const long long d = ck.integer(kv.value, kv.key);
        if (d < 1 || d > 8) ck.fail("'dim' must be between 1 and 8", kv.value.line, kv.value.col);
        cfg.dim = static_cast<int>(d);
      } else if (kv.key == "coords") {
        cfg.coords = ck.string_array(kv.value, kv.key);
      } else if (kv.key == "lo") {
        cfg.lo = ck.number_array(kv.value, kv.key);
      } else if (kv.key == "hi") {
        cfg.hi = ck.number_array(kv.value, kv.key);
      } else {
        ck.fail("unknown key '" + kv.key + "' in [chart]", kv.line, kv.col);
      }
    }
    if (cfg.dim == 0) ck.fail("[chart] needs 'dim'", chart_sec->line, chart_sec->col);
    const auto n = static_cast<std::size_t>(cfg.dim);
    if (cfg.coords.size() != n)
      ck.fail("'coords' must list exactly dim names", chart_sec->line, chart_sec->col);
    if (cfg.lo.size() != n || cfg.hi.size() != n)
      ck.fail("'lo' and 'hi' must each list dim numbers", chart_sec->line, chart_sec->col);
    std::set<std::string> names;
    for (const std::string& c : cfg.coords) {
      if (c.empty() || std::isdigit(static_cast<unsigned char>(c[0])))
        ck.fail("coordinate name '" + c + "' is not a valid identifier", chart_sec->line,
                chart_sec->col);
      for (char ch : c)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
          ck.fail("coordinate name '" + c + "' is not a valid identifier", chart_sec->line,
                  chart_sec->col);
      if (!names.insert(c).second)
        ck.fail("duplicate coordinate name '" + c + "'", chart_sec->line, chart_sec->col);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!(cfg.lo[i] < cfg.hi[i]))
        ck.fail("'lo' must be strictly below 'hi' in every coordinate", chart_sec->line,
                chart_sec->col);
  }

  // [frame]
  if (frame_sec) {
    cfg.has_frame = true;
    bool have_matrix = false;
    std::set<std::string> keys;
    for (const KeyValue& kv : frame_sec->entries) {
      if (!keys.insert(kv.key).second) ck.fail("duplicate key '" + kv.key + "'", kv.line, kv.col);
      if (kv.key == "matrix") {
        cfg.frame_exprs = ck.matrix(kv.value, kv.key, cfg.dim);
        have_matrix = true;
        for (const Value& row : kv.value.arr)
          for (const Value& e : row.arr) ck.check_expr(e.str, cfg.coords, e.line, e.col);
      } else {
        ck.fail("unknown key '" + kv.key + "' in [frame]", kv.line, kv.col);
      }
    }
    if (!have_matrix) ck.fail("[frame] needs 'matrix'", frame_sec->line, frame_sec->col);
  }

  // [connection]
  {
    std::set<std::string> keys;
    for (const KeyValue& kv : conn_sec->entries) {
      if (!keys.insert(kv.key).second) ck.fail("duplicate key '" + kv.key + "'", kv.line, kv.col);
      if (kv.key == "relative") {
        cfg.relative = ck.boolean(kv.value, kv.key);
        continue;
      }
      int s = 0, m = 0, nu = 0;
      if (!parse_coeff_key(kv.key, cfg.dim, &s, &m, &nu))
        ck.fail("unknown key '" + kv.key +
                    "' in [connection]; coefficients are written \"G^s_mn\" with indices in 1.." +
                    std::to_string(cfg.dim),
                kv.line, kv.col);
      const std::string& expr = ck.string(kv.value, kv.key);
      ck.check_expr(expr, cfg.coords, kv.value.line, kv.value.col);
      cfg.coeffs.push_back(CoefficientEntry{s, m, nu, expr});
    }
    if (cfg.relative) {
      if (!cfg.coeffs.empty())
        ck.fail("a relative connection cannot also list explicit coefficients", conn_sec->line,
                conn_sec->col);
      if (!cfg.has_frame)
        ck.fail("'relative = true' requires a [frame] section", conn_sec->line, conn_sec->col);
    }
  }

  // [deformation]
  if (deform_sec) {
    cfg.has_deformation = true;
    bool have_matrix = false;
    std::set<std::string> keys;
    for (const KeyValue& kv : deform_sec->entries) {
      if (!keys.insert(kv.key).second) ck.fail("duplicate key '" + kv.key + "'", kv.line, kv.col);
      if (kv.key == "matrix") {
        cfg.deformation_exprs = ck.matrix(kv.value, kv.key, cfg.dim);
        have_matrix = true;
        for (const Value& row : kv.value.arr)
          for (const Value& e : row.arr) ck.check_expr(e.str, cfg.coords, e.line, e.col);
      } else {
        ck.fail("unknown key '" + kv.key + "' in [deformation]", kv.line, kv.col);
      }
    }
    if (!have_matrix) ck.fail("[deformation] needs 'matrix'", deform_sec->line, deform_sec->col);
  }

  // [run]
  if (run_sec) {
    std::set<std::string> keys;
    for (const KeyValue& kv : run_sec->entries) {
      if (!keys.insert(kv.key).second) ck.fail("duplicate key '" + kv.key + "'", kv.line, kv.col);
      if (kv.key == "samples") {
        const long long s = ck.integer(kv.value, kv.key);
        if (s < 1 || s > 500000)
          ck.fail("'samples' must be between 1 and 500000", kv.value.line, kv.value.col);
        cfg.samples = static_cast<int>(s);
      } else if (kv.key == "seed") {
        const long long s = ck.integer(kv.value, kv.key);
        if (s < 0) ck.fail("'seed' must be non-negative", kv.value.line, kv.value.col);
        cfg.seed = static_cast<std::uint64_t>(s);
      } else if (kv.key == "suites") {
        cfg.suites = ck.string_array(kv.value, kv.key);
        for (const std::string& s : cfg.suites)
          if (!known_suites().count(s))
            ck.fail("unknown suite '" + s + "'", kv.value.line, kv.value.col);
      } else if (kv.key == "expected_asymmetric") {
        cfg.expected_asymmetric = ck.boolean(kv.value, kv.key);
      } else {
        ck.fail("unknown key '" + kv.key + "' in [run]", kv.line, kv.col);
      }
    }
  }

  // [tolerances]
  if (tol_sec) {
    std::set<std::string> keys;
    for (const KeyValue& kv : tol_sec->entries) {
      if (!keys.insert(kv.key).second) ck.fail("duplicate key '" + kv.key + "'", kv.line, kv.col);
      if (!known_suites().count(kv.key))
        ck.fail("unknown suite '" + kv.key + "' in [tolerances]", kv.line, kv.col);
      const double t = ck.number(kv.value, kv.key);
      if (!(t > 0.0) || !std::isfinite(t))
        ck.fail("tolerance for '" + kv.key + "' must be a positive number", kv.value.line,
                kv.value.col);
      cfg.tolerance_overrides[kv.key] = t;
    }
  }

  return cfg;
}

SpecConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'", path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

// ---- compilation -----------------------------------------------------------

namespace {

// Evaluates like field_from_expr, but an evaluation failure names the source
// expression so suite errors can report what blew up.
// Compile an expression into a field whose evaluation errors carry the
// expression text and the offending point, so a failure deep inside a suite
// run is reported at the surface with full context.
ScalarField guarded_field(const std::string& src, std::span<const std::string> vars) {
  Expr e = Expr::parse(src, vars);
  std::vector<std::string> names(vars.begin(), vars.end());
  return make_scalar_field(
      [e = std::move(e), src, names = std::move(names)]<class T>(std::span<const T> x) -> T {
        try {
          return e.eval<T>(x);
        } catch (const EvalError& err) {
          std::string msg = std::string(err.what()) + " in expression \"" + src + "\" at (";
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) msg += ", ";
            if (i < names.size()) msg += names[i] + "=";
            msg += format_double(scalar_part(x[i]));
          }
          msg += ")";
          throw EvalError(msg, err.offset);
        }
      });
}

}  // namespace

FramePair default_frame(int dim) {
  std::vector<VectorField> frame;
  frame.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    std::vector<ScalarField> comps;
    comps.reserve(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      comps.push_back(make_scalar_field([i, j, dim]<class T>(std::span<const T> x) -> T {
        using std::sin;
        const double delta = i == j ? 1.0 : 0.0;
        return delta + (0.4 / dim) * sin(x[static_cast<std::size_t>(j)] + (i + 1) + 2 * (j + 1));
      }));
    }
    frame.push_back(VectorField(std::move(comps)));
  }
  return FramePair::from_vector_fields(std::move(frame));
}

OperatorField default_deformation(int dim) {
  std::vector<ScalarField> e(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    e[static_cast<std::size_t>(i * dim + i)] =
        make_scalar_field([i]<class T>(std::span<const T> x) -> T {
          using std::sin;
          return 2.0 + sin(x[static_cast<std::size_t>(i)]);
        });
  }
  return OperatorField(dim, std::move(e));
}

CompiledConfig compile_config(const SpecConfig& cfg) {
  const int n = cfg.dim;
  Chart chart = Chart::box(cfg.coords, cfg.lo, cfg.hi);

  FramePair frame = FramePair::coordinate_frame(n);
  bool frame_from_config = false;
  if (cfg.has_frame) {
    std::vector<VectorField> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (const std::vector<std::string>& row : cfg.frame_exprs) {
      std::vector<ScalarField> comps;
      comps.reserve(static_cast<std::size_t>(n));
      for (const std::string& e : row)
        comps.push_back(guarded_field(e, cfg.coords));
      rows.push_back(VectorField(std::move(comps)));
    }
    frame = FramePair::from_vector_fields(std::move(rows));
    frame_from_config = true;
  }

  Connection G = [&] {
    if (cfg.relative) {
      std::vector<ScalarField> zeros(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                                     static_cast<std::size_t>(n));
      return Connection(frame, std::move(zeros));
    }
    std::vector<ScalarField> coeffs(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                                    static_cast<std::size_t>(n));
    for (const CoefficientEntry& ce : cfg.coeffs) {
      const std::size_t idx = static_cast<std::size_t>((ce.s * n + ce.m) * n + ce.nu);
      coeffs[idx] = guarded_field(ce.expr, cfg.coords);
    }
    return Connection(FramePair::coordinate_frame(n), std::move(coeffs));
  }();

  FramePair active = frame_from_config ? frame : default_frame(n);

  Deformation deformation = [&] {
    if (cfg.has_deformation) {
      std::vector<ScalarField> e;
      e.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
      for (const std::vector<std::string>& row : cfg.deformation_exprs)
        for (const std::string& s : row)
          e.push_back(guarded_field(s, cfg.coords));
      return Deformation::from_operator(OperatorField(n, std::move(e)));
    }
    return Deformation::from_operator(default_deformation(n));
  }();

  return CompiledConfig{cfg,
                        std::move(chart),
                        std::move(G),
                        std::move(active),
                        frame_from_config,
                        std::move(deformation),
                        cfg.has_deformation};
}

}  // namespace connkit
