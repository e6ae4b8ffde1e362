#include "abelcert/diagonal.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "abelcert/errors.hpp"

namespace abelcert {

DiagonalForm make_diagonal_form(unsigned degree, std::vector<Integer> coeffs) {
  if (degree < 2) throw InvalidInput("diagonal form: degree must be at least 2");
  if (coeffs.size() < 2) throw InvalidInput("diagonal form: need at least 2 variables");
  for (const Integer& c : coeffs) {
    if (c == 0) throw InvalidInput("diagonal form: zero coefficient");
  }
  return DiagonalForm{degree, std::move(coeffs)};
}

namespace {

std::string var_name(unsigned i, unsigned k) {
  if (k <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return names[i];
  }
  return "x" + std::to_string(i);
}

}  // namespace

DiagonalForm parse_diagonal_form(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("diagonal form parse error at position " + std::to_string(pos) + ": " + why);
  };

  std::vector<Integer> coeffs;
  std::vector<unsigned> exponents;
  std::set<std::string> seen_vars;

  skip_ws();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (first && text[pos] == '+') fail("leading '+'");
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;

    Integer coef = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string digits;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
      }
      coef = Integer(digits);
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    if (pos == text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) {
      fail("expected a variable");
    }
    std::string var;
    var += text[pos++];
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      var += text[pos++];
    }
    if (!seen_vars.insert(var).second) fail("variable '" + var + "' repeated");
    skip_ws();
    if (pos == text.size() || text[pos] != '^') fail("expected '^exponent' after variable");
    ++pos;
    skip_ws();
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected an exponent");
    }
    unsigned exp = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exp = exp * 10 + static_cast<unsigned>(text[pos++] - '0');
      if (exp > 1000) fail("exponent too large");
    }
    coeffs.push_back(Integer(sign) * coef);
    exponents.push_back(exp);
    skip_ws();
  }

  if (coeffs.size() < 2) throw InvalidInput("diagonal form: need at least 2 terms");
  for (unsigned e : exponents) {
    if (e != exponents[0]) throw InvalidInput("diagonal form: all exponents must agree");
  }
  return make_diagonal_form(exponents[0], std::move(coeffs));
}

std::string to_string(const DiagonalForm& form) {
  std::ostringstream out;
  const unsigned k = form.num_vars();
  for (unsigned i = 0; i < k; ++i) {
    const Integer& c = form.coeffs[i];
    if (i == 0) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Integer mag = abs(c);
    if (mag != 1) out << mag << "*";
    out << var_name(i, k) << "^" << form.degree;
  }
  return out.str();
}

ValuationProfile valuation_profile(const DiagonalForm& form, const Integer& p) {
  ValuationProfile prof;
  prof.p = p;
  prof.entries.reserve(form.coeffs.size());
  for (const Integer& c : form.coeffs) {
    const unsigned a = valuation(c, p);
    Integer u = c;
    for (unsigned i = 0; i < a; ++i) u /= p;
    prof.entries.emplace_back(a, u);
  }
  return prof;
}

bool staircase_check(const ValuationProfile& profile, unsigned d, unsigned e) {
  if (d < 2) throw InvalidInput("staircase_check: degree must be at least 2");
  if (e < 1) throw InvalidInput("staircase_check: ramification index must be at least 1");
  std::set<unsigned> residues;
  for (const auto& [a, u] : profile.entries) {
    const unsigned r = static_cast<unsigned>((static_cast<unsigned long long>(e) * a) % d);
    if (!residues.insert(r).second) return false;
  }
  return true;
}

DiagonalForm build_theorem1_form(const Integer& a, const Integer& b, const Integer& c,
                                 const Integer& p) {
  if (!is_prime(p)) throw HypothesisError("hypothesis failed: p must be prime");
  if (p % 3 != 2) throw HypothesisError("hypothesis failed: p = 2 (mod 3)");
  if (a == 0 || b == 0 || c == 0) throw HypothesisError("hypothesis failed: abc nonzero");
  if ((a * b * c) % p == 0) throw HypothesisError("hypothesis failed: p does not divide abc");
  return make_diagonal_form(3, {a, b * p, c * p * p});
}

DiagonalForm build_cy_form(const Integer& ell, const Integer& p) {
  if (!is_prime(ell) || ell == 2) {
    throw HypothesisError("hypothesis failed: ell must be an odd prime");
  }
  if (!is_prime(p)) throw HypothesisError("hypothesis failed: p must be prime");
  if ((p * (p - 1)) % ell == 0) {
    throw HypothesisError("hypothesis failed: ell does not divide p(p-1)");
  }
  std::vector<Integer> coeffs;
  Integer power = 1;
  for (Integer i = 0; i < ell; ++i) {
    coeffs.push_back(power);
    power *= p;
  }
  return make_diagonal_form(static_cast<unsigned>(ell), std::move(coeffs));
}

}  // namespace abelcert
