#include "divfree/io.hpp"

#include <cctype>
#include <sstream>

namespace divfree {

namespace {

void append_coords(std::ostringstream& os, const std::vector<std::int64_t>& c) {
  os << "{";
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << "}";
}

void append_idx(std::ostringstream& os, const std::vector<int>& e) {
  os << "[";
  for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
  os << "]";
}

// Factor list for one term, without the coefficient.
std::string monomial_factors(const Monomial& m) {
  std::ostringstream os;
  bool any = false;
  if (!m.alpha.is_zero()) {
    os << "x";
    append_coords(os, m.alpha.coords);
    any = true;
  }
  if (!m.idx.is_zero()) {
    if (any) os << "*";
    os << "t";
    append_idx(os, m.idx.entries);
  }
  return os.str();
}

// Renders a sorted term list with explicit signs; "0" when empty.
template <typename Terms, typename FactorFn>
std::string print_terms(const Terms& terms, FactorFn&& factors) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    if (first)
      os << (coeff < 0 ? "-" : "");
    else
      os << (coeff < 0 ? " - " : " + ");
    first = false;
    std::string f = factors(key);
    if (mag != 1) {
      os << rational_to_string(mag);
      if (!f.empty()) os << "*";
    } else if (f.empty()) {
      os << "1";
    }
    os << f;
  }
  return os.str();
}

}  // namespace

std::string print(const AlgebraElement& a) {
  return print_terms(a.terms(), [](const Monomial& m) { return monomial_factors(m); });
}

std::string print(const WittElement& w) {
  return print_terms(w.terms(), [](const WittKey& k) {
    std::string f = monomial_factors(k.mono);
    if (!f.empty()) f += "*";
    return f + "d" + std::to_string(k.dir);
  });
}

std::string print(const ModuleElement& v) {
  return print_terms(v.terms(), [](const BasisKey& k) {
    std::ostringstream os;
    os << "v";
    append_coords(os, k.beta.coords);
    if (!k.j.entries.empty()) append_idx(os, k.j.entries);
    return os.str();
  });
}

std::string print(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < w.entries.size(); ++k)
    os << (k ? "," : "") << rational_to_string(w.entries[k]);
  os << ")";
  return os.str();
}

std::string print(const MultiIndex& i) {
  std::ostringstream os;
  append_idx(os, i.entries);
  return os.str();
}

ParseError::ParseError(const std::string& msg, std::size_t off)
    : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}

namespace {

class Parser {
 public:
  Parser(const std::string& input, const ParseEnv* env)
      : in_(input), env_ptr_(env) {}

  ParsedValue parse() {
    ParsedValue v = expression();
    skip_ws();
    if (pos_ != in_.size()) fail("trailing input");
    return v;
  }

  MultiIndex bare_multi_index(int expected_len) {
    skip_ws();
    auto e = int_list('[', ']');
    skip_ws();
    if (pos_ != in_.size()) fail("trailing input");
    MultiIndex m;
    for (auto x : e) {
      if (x < 0) fail("negative exponent");
      m.entries.push_back(static_cast<int>(x));
    }
    if (expected_len >= 0 && static_cast<int>(m.entries.size()) != expected_len)
      fail("expected " + std::to_string(expected_len) + " exponents");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < in_.size() ? in_[pos_] : '\0';
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < in_.size() && (in_[pos_] == '-' || in_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_])))
      ++pos_;
    if (pos_ == digits) fail("expected integer");
    return std::stoll(in_.substr(start, pos_ - start));
  }

  std::vector<std::int64_t> int_list(char open, char close) {
    expect(open);
    std::vector<std::int64_t> out;
    if (!eat(close)) {
      out.push_back(integer());
      while (eat(',')) out.push_back(integer());
      expect(close);
    }
    return out;
  }

  Rational rational_literal() {
    Integer num(std::to_string(integer()));
    if (eat('/')) {
      std::int64_t d = integer();
      if (d <= 0) fail("denominator must be positive");
      Rational r(num, Integer(std::to_string(d)));
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  // expr = [sign] term { ("+"|"-") term }
  ParsedValue expression() {
    int sign = leading_sign();
    ParsedValue acc = term(sign);
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      ParsedValue t = term(c == '-' ? -1 : 1);
      if (acc.index() != t.index()) fail("mixed expression kinds in a sum");
      std::visit(
          [&](auto& a) {
            using T = std::decay_t<decltype(a)>;
            a += std::get<T>(t);
          },
          acc);
    }
    return acc;
  }

  int leading_sign() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -1;
    }
    if (c == '+') ++pos_;
    return 1;
  }

  struct TermState {
    Rational coeff{1};
    GroupElement alpha;
    MultiIndex idx;
    bool has_x = false, has_t = false;
    int dir = 0;                            // d<p> factor
    std::optional<WittElement> dop;         // D(p,q; ...) factor
    std::optional<BasisKey> vkey;           // v{...}[...] factor
  };

  ParsedValue term(int sign) {
    TermState st;
    st.alpha = env().ctx->zero();
    st.idx.entries.assign(env().ctx->sig().nvars(), 0);
    factor(st);
    for (;;) {
      bool star = eat('*');
      char c = peek();
      bool more = star || std::isdigit(static_cast<unsigned char>(c)) ||
                  c == 'x' || c == 't' || c == 'd' || c == 'D' || c == 'v';
      if (!more) break;
      factor(st);
    }
    st.coeff *= sign;
    return build(st);
  }

  void factor(TermState& st) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      st.coeff *= rational_literal();
      return;
    }
    std::size_t at = pos_;
    if (c == 'x') {
      ++pos_;
      auto coords = int_list('{', '}');
      if (static_cast<int>(coords.size()) != env().ctx->rank())
        throw ParseError("expected " + std::to_string(env().ctx->rank()) +
                             " group coordinates",
                         at);
      for (std::size_t k = 0; k < coords.size(); ++k)
        st.alpha.coords[k] += coords[k];
      st.has_x = true;
      return;
    }
    if (c == 't') {
      ++pos_;
      auto exps = int_list('[', ']');
      if (static_cast<int>(exps.size()) != env().ctx->sig().nvars())
        throw ParseError("expected " + std::to_string(env().ctx->sig().nvars()) +
                             " exponents",
                         at);
      for (std::size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] < 0) throw ParseError("t exponents must be nonnegative", at);
        st.idx.entries[k] += static_cast<int>(exps[k]);
      }
      st.has_t = true;
      return;
    }
    if (c == 'd') {
      ++pos_;
      std::int64_t p = integer();
      if (p < 1 || p > env().ctx->sig().l())
        throw ParseError("derivation index out of range", at);
      if (st.dir || st.dop || st.vkey) fail("more than one operator factor");
      st.dir = static_cast<int>(p);
      return;
    }
    if (c == 'D') {
      ++pos_;
      expect('(');
      std::int64_t p = integer();
      expect(',');
      std::int64_t q = integer();
      if (p < 1 || p > env().ctx->sig().l() || q < 1 || q > env().ctx->sig().l())
        throw ParseError("operator index out of range", at);
      expect(';');
      ParsedValue inner = expression();
      expect(')');
      auto* alg = std::get_if<AlgebraElement>(&inner);
      if (!alg) throw ParseError("D(p,q; ...) requires an algebra argument", at);
      if (st.dir || st.dop || st.vkey) fail("more than one operator factor");
      st.dop = d_op(static_cast<int>(p), static_cast<int>(q), *alg, env().rho);
      return;
    }
    if (c == 'v') {
      ++pos_;
      auto coords = int_list('{', '}');
      if (static_cast<int>(coords.size()) != env().ctx->rank())
        throw ParseError("expected " + std::to_string(env().ctx->rank()) +
                             " group coordinates",
                         at);
      BasisKey key;
      key.beta.coords.assign(coords.begin(), coords.end());
      key.j.entries.assign(env().ctx->sig().nvars(), 0);
      if (peek() == '[') {
        auto exps = int_list('[', ']');
        if (static_cast<int>(exps.size()) != env().ctx->sig().nvars())
          throw ParseError("expected " + std::to_string(env().ctx->sig().nvars()) +
                               " exponents",
                           at);
        for (std::size_t k = 0; k < exps.size(); ++k) {
          if (exps[k] < 0) throw ParseError("exponents must be nonnegative", at);
          key.j.entries[k] = static_cast<int>(exps[k]);
        }
      }
      if (st.dir || st.dop || st.vkey) fail("more than one operator factor");
      st.vkey = std::move(key);
      return;
    }
    fail("expected a factor");
  }

  ParsedValue build(TermState& st) {
    Monomial m{st.alpha, st.idx};
    if (st.vkey) {
      if (st.has_x || st.has_t)
        fail("module vectors cannot carry x/t factors");
      return ModuleElement(env().module_desc, *st.vkey, st.coeff);
    }
    if (st.dir) {
      WittElement w(env().ctx);
      w.add_term(m, st.dir, st.coeff);
      return w;
    }
    if (st.dop) {
      AlgebraElement a(env().ctx, m, st.coeff);
      return a * *st.dop;
    }
    return AlgebraElement(env().ctx, m, st.coeff);
  }

  const ParseEnv& env() const {
    if (!env_ptr_) throw ParseError("expression requires a configuration", 0);
    return *env_ptr_;
  }

  const std::string& in_;
  const ParseEnv* env_ptr_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedValue parse_expression(const std::string& input, const ParseEnv& env) {
  return Parser(input, &env).parse();
}

AlgebraElement parse_algebra(const std::string& input, const ParseEnv& env) {
  ParsedValue v = parse_expression(input, env);
  if (auto* a = std::get_if<AlgebraElement>(&v)) return std::move(*a);
  throw ParseError("expected an algebra expression", 0);
}

WittElement parse_witt(const std::string& input, const ParseEnv& env) {
  ParsedValue v = parse_expression(input, env);
  if (auto* w = std::get_if<WittElement>(&v)) return std::move(*w);
  // A pure-scalar zero parses as the zero algebra element; promote it.
  if (auto* a = std::get_if<AlgebraElement>(&v); a && a->is_zero())
    return WittElement(env.ctx);
  throw ParseError("expected an operator expression", 0);
}

ModuleElement parse_module(const std::string& input, const ParseEnv& env) {
  ParsedValue v = parse_expression(input, env);
  if (auto* m = std::get_if<ModuleElement>(&v)) return std::move(*m);
  if (auto* a = std::get_if<AlgebraElement>(&v); a && a->is_zero())
    return ModuleElement(env.module_desc);
  throw ParseError("expected a module expression", 0);
}

MultiIndex parse_multi_index(const std::string& input, int expected_len) {
  return Parser(input, nullptr).bare_multi_index(expected_len);
}

}  // namespace divfree
