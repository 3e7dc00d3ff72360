#include "setkit/ordinal.hpp"

#include <cctype>
#include <utility>

namespace setkit {

namespace {

// Term-count guard for natural powers of multi-term ordinals; (w+1)^n
// already has n+1 terms, so huge n means an unrepresentable result.
const unsigned long kMaxNatPowSteps = 100000;

}  // namespace

Ordinal Ordinal::make(std::vector<Term> terms) {
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

Ordinal Ordinal::from_nat(const Coeff& n) {
  if (n < 0) throw parse_error("from_nat: negative value");
  Ordinal r;
  if (n > 0) r.terms_.push_back(Term{Ordinal(), n});
  return r;
}

Ordinal Ordinal::omega() { return single_term(from_nat(1ul), 1); }

Ordinal Ordinal::single_term(Ordinal exponent, Coeff coefficient) {
  if (coefficient <= 0) throw parse_error("single_term: coefficient must be positive");
  Ordinal r;
  r.terms_.push_back(Term{std::move(exponent), std::move(coefficient)});
  return r;
}

bool Ordinal::is_nat() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Ordinal::Coeff Ordinal::nat_value() const {
  if (terms_.empty() || !terms_.back().exponent.is_zero()) return 0;
  return terms_.back().coefficient;
}

const Ordinal& Ordinal::leading_exponent() const { return terms_.front().exponent; }

OrdinalKind Ordinal::kind() const {
  if (terms_.empty()) return OrdinalKind::Zero;
  return terms_.back().exponent.is_zero() ? OrdinalKind::Successor : OrdinalKind::Limit;
}

OrdinalKind classify(const Ordinal& a) { return a.kind(); }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    auto ce = compare(ta[i].exponent, tb[i].exponent);
    if (ce != std::strong_ordering::equal) return ce;
    int cc = cmp(ta[i].coefficient, tb[i].coefficient);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Equal prefix: whichever has terms left over is the larger ordinal.
  if (ta.size() == tb.size()) return std::strong_ordering::equal;
  return ta.size() < tb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool Ordinal::operator==(const Ordinal& o) const {
  return compare(*this, o) == std::strong_ordering::equal;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& o) const {
  return compare(*this, o);
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& e = b.terms_.front().exponent;
  std::vector<Ordinal::Term> terms;
  Ordinal::Coeff lead = b.terms_.front().coefficient;
  // Terms of a with exponent above lead(b) survive; an equal exponent
  // merges coefficients; anything below is absorbed.
  for (const auto& t : a.terms_) {
    auto c = compare(t.exponent, e);
    if (c == std::strong_ordering::greater) {
      terms.push_back(t);
    } else {
      if (c == std::strong_ordering::equal) lead += t.coefficient;
      break;
    }
  }
  terms.push_back(Ordinal::Term{e, lead});
  terms.insert(terms.end(), b.terms_.begin() + 1, b.terms_.end());
  return Ordinal::make(std::move(terms));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal& e1 = a.terms_.front().exponent;
  Ordinal result;
  for (const auto& t : b.terms_) {
    if (!t.exponent.is_zero()) {
      // a * w^f = w^(e1+f) for f >= 1.
      result = add(result, Ordinal::single_term(add(e1, t.exponent), t.coefficient));
    } else {
      // Finite part of b scales the leading coefficient of a and keeps
      // the rest of a's tail.
      std::vector<Ordinal::Term> terms;
      terms.push_back(Ordinal::Term{e1, a.terms_.front().coefficient * t.coefficient});
      terms.insert(terms.end(), a.terms_.begin() + 1, a.terms_.end());
      result = add(result, Ordinal::make(std::move(terms)));
    }
  }
  return result;
}

namespace {

Ordinal one() { return Ordinal::from_nat(1ul); }

// a^n for a natural exponent by repeated multiplication (binary split,
// valid because a^(m+k) = a^m * a^k).
Ordinal nat_pow(const Ordinal& a, const Ordinal::Coeff& n) {
  if (n == 0) return one();
  if (a.is_zero()) return Ordinal();
  if (a.terms().size() == 1) {
    const auto& t = a.terms().front();
    if (t.exponent.is_zero()) {
      // Finite base: plain integer power.
      if (!n.fits_ulong_p() || n.get_ui() > (1ul << 26))
        throw limit_error("pow: finite power too large to represent");
      Ordinal::Coeff c;
      mpz_pow_ui(c.get_mpz_t(), t.coefficient.get_mpz_t(), n.get_ui());
      return Ordinal::from_nat(c);
    }
    // (w^e*c)^n = w^(e*n)*c: the inner coefficients collapse.
    return Ordinal::single_term(mul(t.exponent, Ordinal::from_nat(n)),
                                t.coefficient);
  }
  if (!n.fits_ulong_p() || n.get_ui() > kMaxNatPowSteps)
    throw limit_error("pow: natural exponent too large for a multi-term base");
  unsigned long k = n.get_ui();
  Ordinal acc = one();
  Ordinal sq = a;
  while (k > 0) {
    if (k & 1ul) acc = mul(acc, sq);
    k >>= 1;
    if (k > 0) sq = mul(sq, sq);
  }
  return acc;
}

// The beta with w*beta = lambda, for lambda a sum of terms with exponents
// >= 1: finite exponents step down by one, infinite ones are unchanged.
Ordinal divide_left_omega(const Ordinal& lambda) {
  std::vector<Ordinal::Term> terms;
  for (const auto& t : lambda.terms()) {
    const Ordinal& g = t.exponent;
    if (g.is_nat()) {
      terms.push_back(Ordinal::Term{Ordinal::from_nat(g.nat_value() - 1), t.coefficient});
    } else {
      terms.push_back(t);
    }
  }
  // Construct via repeated add to keep canonical form (order is already
  // strictly decreasing, so this is a plain copy).
  Ordinal r;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    r = add(Ordinal::single_term(it->exponent, it->coefficient), r);
  return r;
}

}  // namespace

Ordinal pow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return one();
  // Split b into its limit part and finite tail.
  std::vector<Ordinal::Term> limit_terms;
  Ordinal::Coeff n = 0;
  for (const auto& t : b.terms_) {
    if (t.exponent.is_zero())
      n = t.coefficient;
    else
      limit_terms.push_back(t);
  }
  Ordinal lambda = Ordinal::make(std::move(limit_terms));

  if (a.is_zero()) {
    // 0^b follows the recursion: 1 at 0 and limits, 0 at successors.
    return n == 0 ? one() : Ordinal();
  }
  if (a == one()) return one();
  if (lambda.is_zero()) return nat_pow(a, n);

  if (a.is_nat()) {
    // Finite base k >= 2: k^(w*beta) = w^beta, then the finite tail.
    Ordinal beta = divide_left_omega(lambda);
    Ordinal::Coeff c = 1;
    if (n > 0) {
      if (!n.fits_ulong_p() || n.get_ui() > (1ul << 26))
        throw limit_error("pow: finite power too large to represent");
      mpz_pow_ui(c.get_mpz_t(), a.nat_value().get_mpz_t(), n.get_ui());
    }
    return Ordinal::single_term(std::move(beta), std::move(c));
  }
  // Infinite base: a^lambda = w^(e1*lambda) with e1 the leading exponent.
  Ordinal head = Ordinal::single_term(mul(a.terms_.front().exponent, lambda), 1);
  return mul(head, nat_pow(a, n));
}

Ordinal sup_list(std::span<const Ordinal> items) {
  Ordinal best;
  for (const auto& x : items)
    if (compare(x, best) == std::strong_ordering::greater) best = x;
  return best;
}

// ---------------------------------------------------------------------
// Expression text.

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error("ordinal expression: " + msg + " at offset " + std::to_string(i));
  }

  Ordinal parse_sum() {
    Ordinal v = parse_product();
    while (eat('+')) v = add(v, parse_product());
    return v;
  }

  Ordinal parse_product() {
    Ordinal v = parse_power();
    while (eat('*')) v = mul(v, parse_power());
    return v;
  }

  Ordinal parse_power() {
    Ordinal base = parse_atom();
    if (eat('^')) return pow(base, parse_power());  // right associative
    return base;
  }

  Ordinal parse_atom() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      Ordinal v = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'w') {
      ++i;
      return Ordinal::omega();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return Ordinal::from_nat(Ordinal::Coeff(s.substr(start, i - start)));
    }
    fail("unexpected character");
  }

  Ordinal run() {
    Ordinal v = parse_sum();
    skip_ws();
    if (i != s.size()) fail("trailing input");
    return v;
  }
};

// An exponent can stay bare after '^' when it renders as a single atom or
// a chain of powers; anything else needs parentheses.
bool exponent_needs_parens(const Ordinal& e) {
  if (e.terms().size() != 1) return true;
  const auto& t = e.terms().front();
  if (t.exponent.is_zero()) return false;  // plain natural
  return t.coefficient != 1;               // w^E*c needs parens, w^E does not
}

void render(const Ordinal& a, std::string& out) {
  if (a.is_zero()) {
    out += "0";
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    if (t.exponent.is_zero()) {
      out += t.coefficient.get_str();
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal::from_nat(1ul))) {
      out += "^";
      bool parens = exponent_needs_parens(t.exponent);
      if (parens) out += "(";
      render(t.exponent, out);
      if (parens) out += ")";
    }
    if (t.coefficient != 1) {
      out += "*";
      out += t.coefficient.get_str();
    }
  }
}

}  // namespace

Ordinal parse_ordinal(const std::string& text) { return Parser(text).run(); }

std::string to_string(const Ordinal& a) {
  std::string out;
  render(a, out);
  return out;
}

}  // namespace setkit
