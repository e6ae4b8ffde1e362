#include "abelcert/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "abelcert/errors.hpp"

namespace abelcert {

namespace {

long long clamp_trunc(long long t) { return std::min(t, kLaurentExact); }

void require_same_field(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field->modulus() != b.field->modulus()) {
    throw InvalidInput("laurent: mixed coefficient fields");
  }
}

/// Drop leading/trailing zero coefficients and anything at or past trunc.
LaurentSeries normalize(LaurentSeries s) {
  s.trunc = clamp_trunc(s.trunc);
  const NumberField& K = *s.field;
  size_t lead = 0;
  while (lead < s.coeffs.size() && K.is_zero(s.coeffs[lead])) ++lead;
  if (lead > 0) {
    s.coeffs.erase(s.coeffs.begin(), s.coeffs.begin() + static_cast<long>(lead));
    s.v += static_cast<long long>(lead);
  }
  if (s.v >= s.trunc) {
    s.coeffs.clear();
  } else if (!s.coeffs.empty() &&
             s.v + static_cast<long long>(s.coeffs.size()) > s.trunc) {
    s.coeffs.resize(static_cast<size_t>(s.trunc - s.v));
  }
  while (!s.coeffs.empty() && K.is_zero(s.coeffs.back())) s.coeffs.pop_back();
  if (s.coeffs.empty()) s.v = 0;
  return s;
}

}  // namespace

std::shared_ptr<const NumberField> laurent_rational_field() {
  static const std::shared_ptr<const NumberField> q =
      std::make_shared<NumberField>(parse_polynomial("x"));
  return q;
}

std::shared_ptr<const NumberField> laurent_number_field(const IntPoly& f) {
  return std::make_shared<NumberField>(f);
}

LaurentSeries laurent_zero(std::shared_ptr<const NumberField> field, long long trunc,
                           std::string symbol) {
  LaurentSeries s;
  s.field = std::move(field);
  s.trunc = clamp_trunc(trunc);
  s.symbol = std::move(symbol);
  return s;
}

LaurentSeries laurent_monomial(std::shared_ptr<const NumberField> field,
                               NumberField::Elem coeff, long long exponent, long long trunc,
                               std::string symbol) {
  LaurentSeries s;
  s.field = std::move(field);
  s.v = exponent;
  s.coeffs.push_back(std::move(coeff));
  s.trunc = clamp_trunc(trunc);
  s.symbol = std::move(symbol);
  return normalize(std::move(s));
}

LaurentSeries laurent_from_rational(std::shared_ptr<const NumberField> field, const Rational& c,
                                    long long trunc, std::string symbol) {
  auto coeff = field->from_rational(c);
  return laurent_monomial(std::move(field), std::move(coeff), 0, trunc, std::move(symbol));
}

long long laurent_valuation(const LaurentSeries& a) {
  if (a.coeffs.empty()) {
    throw TruncationError(
        "laurent: valuation undetermined, the series vanishes to its truncation order " +
        std::to_string(a.trunc));
  }
  return a.v;
}

const NumberField::Elem& laurent_leading(const LaurentSeries& a) {
  laurent_valuation(a);
  return a.coeffs.front();
}

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a, b);
  const NumberField& K = *a.field;
  LaurentSeries r = laurent_zero(a.field, std::min(a.trunc, b.trunc), a.symbol);
  if (a.coeffs.empty() && b.coeffs.empty()) return r;
  const long long va = a.coeffs.empty() ? b.v : a.v;
  const long long vb = b.coeffs.empty() ? a.v : b.v;
  const long long lo = std::min(va, vb);
  const long long hi = std::min(
      r.trunc, std::max(a.v + static_cast<long long>(a.coeffs.size()),
                        b.v + static_cast<long long>(b.coeffs.size())));
  if (hi <= lo) return r;
  r.v = lo;
  r.coeffs.assign(static_cast<size_t>(hi - lo), K.zero());
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    const long long e = a.v + static_cast<long long>(i);
    if (e >= lo && e < hi) r.coeffs[static_cast<size_t>(e - lo)] = a.coeffs[i];
  }
  for (size_t i = 0; i < b.coeffs.size(); ++i) {
    const long long e = b.v + static_cast<long long>(i);
    if (e >= lo && e < hi) {
      auto& slot = r.coeffs[static_cast<size_t>(e - lo)];
      slot = K.add(slot, b.coeffs[i]);
    }
  }
  return normalize(std::move(r));
}

LaurentSeries laurent_neg(const LaurentSeries& a) {
  LaurentSeries r = a;
  for (auto& c : r.coeffs) c = a.field->neg(c);
  return r;
}

LaurentSeries laurent_sub(const LaurentSeries& a, const LaurentSeries& b) {
  return laurent_add(a, laurent_neg(b));
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a, b);
  const NumberField& K = *a.field;
  // Known-to exponents: a is O(t^ta) beyond its terms, so the product is
  // known through min(ta + v(b), tb + v(a)); an empty factor contributes its
  // truncation order in place of a valuation.
  const long long va_eff = a.coeffs.empty() ? a.trunc : a.v;
  const long long vb_eff = b.coeffs.empty() ? b.trunc : b.v;
  const long long trunc = std::min(a.trunc + vb_eff, b.trunc + va_eff);
  LaurentSeries r = laurent_zero(a.field, trunc, a.symbol);
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.v = a.v + b.v;
  if (r.v >= r.trunc) return normalize(std::move(r));
  r.coeffs.assign(static_cast<size_t>(std::min<long long>(
                      r.trunc - r.v,
                      static_cast<long long>(a.coeffs.size() + b.coeffs.size()) - 1)),
                  K.zero());
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (K.is_zero(a.coeffs[i])) continue;
    for (size_t j = 0; j < b.coeffs.size() && i + j < r.coeffs.size(); ++j) {
      r.coeffs[i + j] = K.add(r.coeffs[i + j], K.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return normalize(std::move(r));
}

LaurentSeries laurent_invert(const LaurentSeries& a) {
  if (a.coeffs.empty()) {
    throw TruncationError("laurent: cannot invert a series with no known nonzero coefficient");
  }
  const NumberField& K = *a.field;
  const long long rel = a.trunc - a.v;  // number of known coefficients
  const auto inv0 = K.inv(a.coeffs.front());
  LaurentSeries r = laurent_zero(a.field, a.trunc - 2 * a.v, a.symbol);
  r.v = -a.v;
  const size_t n = static_cast<size_t>(std::max<long long>(rel, 1));
  r.coeffs.assign(n, K.zero());
  r.coeffs[0] = inv0;
  for (size_t m = 1; m < n; ++m) {
    // sum_{j=0..m} a_j * b_{m-j} = 0 with a_j = 0 beyond the stored terms.
    auto acc = K.zero();
    for (size_t j = 1; j <= m && j < a.coeffs.size(); ++j) {
      acc = K.add(acc, K.mul(a.coeffs[j], r.coeffs[m - j]));
    }
    r.coeffs[m] = K.neg(K.mul(inv0, acc));
  }
  return normalize(std::move(r));
}

std::string to_string(const LaurentSeries& a) {
  const NumberField& K = *a.field;
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    const auto& c = a.coeffs[i];
    if (K.is_zero(c)) continue;
    std::string cs = K.to_string(c);
    bool negative = false;
    if (!cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
        cs.find(" - ") == std::string::npos) {
      negative = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    const long long e = a.v + static_cast<long long>(i);
    const bool needs_parens = cs.find(' ') != std::string::npos;
    const bool unit = cs == "1" && e != 0;
    if (needs_parens) {
      out << "(" << cs << ")";
    } else if (!unit) {
      out << cs;
    }
    if (e != 0) {
      if (!unit) out << "*";
      out << a.symbol;
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  if (first) {
    if (a.trunc >= kLaurentExact) return "0";
    return "O(" + a.symbol + "^" + std::to_string(a.trunc) + ")";
  }
  if (a.trunc < kLaurentExact) {
    out << " + O(" << a.symbol << "^" << a.trunc << ")";
  }
  return out.str();
}

LaurentSeries parse_laurent(const std::string& text,
                            std::shared_ptr<const NumberField> field, long long exponent_scale,
                            long long trunc, std::string symbol) {
  if (exponent_scale < 1) throw InvalidInput("laurent parser: exponent scale must be positive");
  const NumberField& K = *field;
  LaurentSeries acc = laurent_zero(field, trunc, symbol);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("laurent parser: " + why + " at position " + std::to_string(i));
  };
  auto parse_int = [&]() -> long long {
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail("expected an integer");
    }
    long long val = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      val = val * 10 + (text[i++] - '0');
      if (val > (1LL << 40)) fail("exponent too large");
    }
    return neg ? -val : val;
  };

  skip_ws();
  if (i == text.size()) fail("empty input");
  bool expect_term = true;
  bool term_negative = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (expect_term) {
      term_negative = false;
      while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') term_negative = !term_negative;
        ++i;
        skip_ws();
      }
      // One term: product of factors separated by '*'.
      auto coeff = K.one();
      long long exponent = 0;
      bool saw_factor = false;
      while (true) {
        skip_ws();
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          Integer num = 0;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = num * 10 + (text[i++] - '0');
          }
          Rational q(num);
          skip_ws();
          if (i < text.size() && text[i] == '/') {
            ++i;
            skip_ws();
            Integer den = 0;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
              fail("expected a denominator");
            }
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
              den = den * 10 + (text[i++] - '0');
            }
            if (den == 0) fail("zero denominator");
            q = Rational(num, den);
          }
          coeff = K.mul(coeff, K.from_rational(q));
          saw_factor = true;
        } else if (i < text.size() && text[i] == 'r') {
          ++i;
          long long e = 1;
          skip_ws();
          if (i < text.size() && text[i] == '^') {
            ++i;
            e = parse_int();
          }
          if (e < 0) fail("negative power of r");
          if (K.degree() == 1 && K.modulus() == parse_polynomial("x")) {
            fail("coefficient generator r needs a number-field mode");
          }
          coeff = K.mul(coeff, K.pow(K.generator(), static_cast<unsigned>(e)));
          saw_factor = true;
        } else if (i + symbol.size() <= text.size() &&
                   text.compare(i, symbol.size(), symbol) == 0) {
          i += symbol.size();
          long long e = 1;
          skip_ws();
          if (i < text.size() && text[i] == '^') {
            ++i;
            e = parse_int();
          }
          exponent += e * exponent_scale;
          saw_factor = true;
        } else {
          fail("expected a coefficient, 'r', or the uniformizer");
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
          ++i;
          continue;
        }
        break;
      }
      if (!saw_factor) fail("empty term");
      if (term_negative) coeff = K.neg(coeff);
      acc = laurent_add(acc, laurent_monomial(field, coeff, exponent, trunc, symbol));
      expect_term = false;
    } else {
      if (text[i] != '+' && text[i] != '-') fail("expected '+' or '-' between terms");
      expect_term = true;
    }
  }
  if (expect_term) fail("dangling operator");
  return acc;
}

}  // namespace abelcert
