#include "rwgraph/polywheel.hpp"

#include <cctype>
#include <stdexcept>

#include "rwgraph/setpart.hpp"

namespace rwgraph {

std::string PWSymbol::str() const {
  return std::string(kind == Closed ? "c" : "k") + "[" + lambda.str() + "]";
}

PWPolynomial::PWPolynomial(const Rational& r) {
  if (!r.is_zero()) terms_[PWMonomial{}] = r;
}

PWPolynomial PWPolynomial::symbol(const PWSymbol& s) {
  PWPolynomial p;
  PWMonomial m;
  m[s] = 1;
  p.terms_[m] = Rational(1);
  return p;
}

void PWPolynomial::add(const PWMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PWPolynomial PWPolynomial::operator-() const {
  PWPolynomial r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

PWPolynomial& PWPolynomial::operator+=(const PWPolynomial& o) {
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PWPolynomial& PWPolynomial::operator-=(const PWPolynomial& o) {
  for (auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

PWPolynomial operator*(const PWPolynomial& a, const PWPolynomial& b) {
  PWPolynomial r;
  for (auto& [m, c] : a.terms_) {
    for (auto& [n, d] : b.terms_) {
      PWMonomial mn = m;
      for (auto& [s, e] : n) mn[s] += e;
      r.add(mn, c * d);
    }
  }
  return r;
}

PWPolynomial PWPolynomial::scaled(const Rational& r) const {
  PWPolynomial out;
  if (r.is_zero()) return out;
  for (auto& [m, c] : terms_) out.terms_[m] = c * r;
  return out;
}

PWPolynomial PWPolynomial::pow(unsigned e) const {
  PWPolynomial r(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

PWPolynomial PWPolynomial::substituted(
    const std::function<const PWPolynomial*(const PWSymbol&)>& fn) const {
  PWPolynomial out;
  for (auto& [m, c] : terms_) {
    PWPolynomial term(c);
    for (auto& [s, e] : m) {
      const PWPolynomial* repl = fn(s);
      PWPolynomial factor = repl ? *repl : PWPolynomial::symbol(s);
      term = term * factor.pow(e);
    }
    out += term;
  }
  return out;
}

Rational PWPolynomial::evaluate(const std::function<Rational(const PWSymbol&)>& fn) const {
  Rational total(0);
  for (auto& [m, c] : terms_) {
    Rational v = c;
    for (auto& [s, e] : m) v *= fn(s).pow(e);
    total += v;
  }
  return total;
}

GraphVector PWPolynomial::evaluate_graphs(
    const std::function<GraphVector(const PWSymbol&)>& fn) const {
  GraphVector total;
  for (auto& [m, c] : terms_) {
    GraphVector v = GraphVector::unit().scaled(c);
    for (auto& [s, e] : m) v = product(v, power(fn(s), e));
    total += v;
  }
  return total;
}

unsigned PWPolynomial::homogeneous_degree() const {
  bool seen = false;
  unsigned deg = 0;
  for (auto& [m, c] : terms_) {
    unsigned d = 0;
    for (auto& [s, e] : m) d += 2 * static_cast<unsigned>(s.lambda.weight()) * e;
    if (!seen) {
      deg = d;
      seen = true;
    } else if (d != deg) {
      throw std::invalid_argument("polywheel expression is not homogeneous");
    }
  }
  return deg;
}

std::string PWPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational ac = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    for (auto& [s, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += s.str();
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) out += ac.str();
    else if (ac.is_one()) out += mono;
    else out += ac.str() + "*" + mono;
  }
  return out;
}

namespace {

// the labeled wheel factors of w~_{2 lambda}: one entry i per unit of
// multiplicity lambda_i
std::vector<std::uint32_t> factor_list(const Partition& lambda) {
  std::vector<std::uint32_t> f;
  for (std::uint32_t i = 1; i <= lambda.max_part(); ++i)
    for (std::uint32_t r = 0; r < lambda.multiplicity(i); ++r) f.push_back(i);
  return f;
}

Partition block_partition(const std::vector<std::uint32_t>& factors, const std::vector<int>& block) {
  std::vector<std::uint32_t> parts;
  for (int idx : block) parts.push_back(factors[idx]);
  return Partition::from_parts(parts);
}

}  // namespace

PWPolynomial moment_expand(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("moment_expand: empty partition");
  auto factors = factor_list(lambda);
  PWPolynomial out;
  for (auto& blocks : enumerate_set_partitions(static_cast<unsigned>(factors.size()))) {
    PWMonomial m;
    for (auto& blk : blocks) ++m[PWSymbol{PWSymbol::Connected, block_partition(factors, blk)}];
    out.add(m, Rational(1));
  }
  return out;
}

PWPolynomial connected_mixed_form(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("connected_mixed_form: empty partition");
  PWPolynomial rest = moment_expand(lambda);
  // remove the single-block term K[lambda]
  PWMonomial top;
  top[PWSymbol{PWSymbol::Connected, lambda}] = 1;
  rest.add(top, Rational(-1));
  return PWPolynomial::closed(lambda) - rest;
}

PWPolynomial connected_to_closed(const Partition& lambda) {
  // recursion over the weight: K[lambda] = C[lambda] minus products of
  // lower-degree K's, each expanded into C's in turn
  std::map<Partition, PWPolynomial> cache;
  std::function<const PWPolynomial&(const Partition&)> go =
      [&](const Partition& lam) -> const PWPolynomial& {
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
    PWPolynomial expanded =
        connected_mixed_form(lam).substituted([&](const PWSymbol& s) -> const PWPolynomial* {
          if (s.kind != PWSymbol::Connected) return nullptr;
          return &go(s.lambda);
        });
    return cache.emplace(lam, std::move(expanded)).first->second;
  };
  return go(lambda);
}

GraphVector wheel_product_vector(const Partition& lambda) {
  GraphVector v = GraphVector::unit();
  for (std::uint32_t i = 1; i <= lambda.max_part(); ++i)
    for (std::uint32_t r = 0; r < lambda.multiplicity(i); ++r)
      v = product(v, GraphVector::of(wheel(2 * static_cast<int>(i))));
  return v;
}

GraphVector closed_polywheel_vector(const Partition& lambda) {
  Rational sign = lambda.length() % 2 == 0 ? Rational(1) : Rational(-1);
  return closure(wheel_product_vector(lambda)).scaled(sign);
}

GraphVector connected_polywheel_vector(const Partition& lambda) {
  Rational sign = lambda.length() % 2 == 0 ? Rational(1) : Rational(-1);
  return connected_closure(wheel_product_vector(lambda)).scaled(sign);
}

CrossValidateReport cross_validate(const Partition& lambda, int max_trivalent) {
  CrossValidateReport rep;
  if (2 * lambda.weight() > static_cast<std::uint64_t>(max_trivalent))
    throw std::invalid_argument("cross_validate: 2||lambda|| exceeds the bound");
  GraphVector engine_side = connected_polywheel_vector(lambda);
  PWPolynomial expansion = connected_to_closed(lambda);
  GraphVector symbolic_side = expansion.evaluate_graphs([](const PWSymbol& s) {
    if (s.kind != PWSymbol::Closed)
      throw std::logic_error("connected_to_closed left a K symbol behind");
    return closed_polywheel_vector(s.lambda);
  });
  if (engine_side == symbolic_side) {
    rep.ok = true;
  } else {
    rep.detail = "lambda=" + lambda.str() + ": engine\n" + engine_side.str() +
                 "\nvs expansion\n" + symbolic_side.str();
  }
  return rep;
}

namespace {

struct PWParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit PWParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polywheel expression: " + msg + " at position " +
                                std::to_string(pos));
  }

  PWPolynomial parse_expr() {
    PWPolynomial acc = parse_term();
    while (true) {
      skip_ws();
      if (eat('+')) acc += parse_term();
      else if (eat('-')) acc -= parse_term();
      else return acc;
    }
  }

  PWPolynomial parse_term() {
    PWPolynomial acc = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) acc = acc * parse_factor();
      else return acc;
    }
  }

  PWPolynomial parse_factor() {
    PWPolynomial base = parse_atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(s.substr(start, pos - start))));
    }
    return base;
  }

  PWPolynomial parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      PWPolynomial inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'c' || c == 'k') {
      ++pos;
      if (!eat('[')) fail("expected '['");
      std::size_t start = pos;
      while (pos < s.size() && s[pos] != ']') ++pos;
      if (pos >= s.size()) fail("expected ']'");
      Partition lam = Partition::parse(s.substr(start, pos - start));
      ++pos;
      if (lam.empty()) fail("empty partition");
      return c == 'c' ? PWPolynomial::closed(lam) : PWPolynomial::connected(lam);
    }
    if (c == '-') {
      ++pos;
      return -parse_atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
        ++pos;
      return PWPolynomial(Rational::parse(s.substr(start, pos - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

PWPolynomial parse_pw_expression(const std::string& text) {
  PWParser p(text);
  PWPolynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace rwgraph
