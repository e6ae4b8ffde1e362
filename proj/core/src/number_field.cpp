#include "abelcert/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "abelcert/errors.hpp"

namespace abelcert {

namespace {

// Dense rational polynomial, constant first, not normalized.
using QPoly = std::vector<Rational>;

int qdeg(const QPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

QPoly qtrim(QPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a by b (b nonzero), plus the quotient if wanted.
QPoly qmod(QPoly a, const QPoly& b) {
  const int db = qdeg(b);
  while (true) {
    const int da = qdeg(a);
    if (da < db) break;
    const Rational q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    a[da] = 0;
  }
  return qtrim(std::move(a));
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return qtrim(std::move(r));
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return qtrim(std::move(a));
}

}  // namespace

NumberField::NumberField(IntPoly f) : f_(std::move(f)) {
  if (f_.degree() < 1) throw InvalidInput("NumberField: defining polynomial must be nonconstant");
  if (!f_.is_monic()) throw InvalidInput("NumberField: defining polynomial must be monic");
  if (!is_squarefree_over_q(f_)) {
    throw InvalidInput("NumberField: defining polynomial must be squarefree");
  }
  deg_ = static_cast<unsigned>(f_.degree());
  if (deg_ <= 4 && !is_irreducible_low_degree(f_)) {
    throw InvalidInput("NumberField: defining polynomial is reducible");
  }

  // power_[k] = coordinates of r^k for k <= 2d-2, using
  // r^d = -(c_0 + c_1 r + ... + c_{d-1} r^{d-1}).
  power_.assign(2 * deg_ - 1, Elem(deg_, Rational(0)));
  power_[0][0] = 1;
  for (unsigned k = 1; k < 2 * deg_ - 1; ++k) {
    const Elem& prev = power_[k - 1];
    Elem cur(deg_, Rational(0));
    for (unsigned i = 0; i + 1 < deg_; ++i) cur[i + 1] += prev[i];
    const Rational top = prev[deg_ - 1];
    if (top != 0) {
      for (unsigned i = 0; i < deg_; ++i) cur[i] -= top * Rational(f_.c[i]);
    }
    power_[k] = std::move(cur);
  }
}

NumberField::Elem NumberField::zero() const { return Elem(deg_, Rational(0)); }

NumberField::Elem NumberField::one() const {
  Elem e(deg_, Rational(0));
  e[0] = 1;
  return e;
}

NumberField::Elem NumberField::from_rational(const Rational& c) const {
  Elem e(deg_, Rational(0));
  e[0] = c;
  return e;
}

NumberField::Elem NumberField::generator() const {
  Elem e(deg_, Rational(0));
  if (deg_ == 1) {
    // r is the rational root -c_0 of the degree-1 modulus.
    e[0] = -Rational(f_.c[0]);
  } else {
    e[1] = 1;
  }
  return e;
}

bool NumberField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
}

bool NumberField::equal(const Elem& a, const Elem& b) const { return a == b; }

NumberField::Elem NumberField::add(const Elem& a, const Elem& b) const {
  Elem r(deg_);
  for (unsigned i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
  return r;
}

NumberField::Elem NumberField::sub(const Elem& a, const Elem& b) const {
  Elem r(deg_);
  for (unsigned i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
  return r;
}

NumberField::Elem NumberField::neg(const Elem& a) const {
  Elem r(deg_);
  for (unsigned i = 0; i < deg_; ++i) r[i] = -a[i];
  return r;
}

NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const {
  if (a.size() != deg_ || b.size() != deg_) throw InvalidInput("NumberField: bad element size");
  std::vector<Rational> conv(2 * deg_ - 1, Rational(0));
  for (unsigned i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < deg_; ++j) conv[i + j] += a[i] * b[j];
  }
  Elem r = zero();
  for (unsigned k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    for (unsigned i = 0; i < deg_; ++i) r[i] += conv[k] * power_[k][i];
  }
  return r;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
  if (is_zero(a)) throw InvalidInput("NumberField: inverse of zero");
  // Extended Euclid in Q[x]: maintain u with u*a = r (mod f).
  QPoly r0;
  for (const Integer& ci : f_.c) r0.emplace_back(ci);
  QPoly r1(a.begin(), a.end());
  r1 = qtrim(std::move(r1));
  QPoly u0 = {};            // 0 * a = f (mod f)
  QPoly u1 = {Rational(1)};  // 1 * a = a (mod f)
  while (qdeg(r1) > 0) {
    // r0 = q*r1 + r2
    QPoly r2 = r0;
    QPoly q_acc;  // quotient, built term by term
    const int db = qdeg(r1);
    while (qdeg(r2) >= db) {
      const int da = qdeg(r2);
      const Rational q = r2[da] / r1[db];
      if (static_cast<int>(q_acc.size()) <= da - db) q_acc.resize(da - db + 1, Rational(0));
      q_acc[da - db] += q;
      for (int i = 0; i <= db; ++i) r2[da - db + i] -= q * r1[i];
      r2[da] = 0;
    }
    r2 = qtrim(std::move(r2));
    QPoly u2 = qsub(u0, qmul(q_acc, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (qdeg(r1) != 0) {
    throw InvalidInput("NumberField: element is a zero divisor (reducible modulus)");
  }
  const Rational lead = r1[0];
  Elem result = zero();
  QPoly u = qmod(std::move(u1), [&] {
    QPoly fq;
    for (const Integer& ci : f_.c) fq.emplace_back(ci);
    return fq;
  }());
  for (size_t i = 0; i < u.size() && i < deg_; ++i) result[i] = u[i] / lead;
  return result;
}

NumberField::Elem NumberField::pow(const Elem& a, unsigned e) const {
  Elem r = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool NumberField::is_rational(const Elem& a) const {
  for (unsigned i = 1; i < deg_; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

std::string NumberField::to_string(const Elem& a) const {
  std::ostringstream out;
  bool first = true;
  for (unsigned i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const bool unit_coeff = c == 1 && i > 0;
    if (!unit_coeff) out << c.str();
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << "r";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

IntPoly minimal_polynomial(const NumberField& K, const NumberField::Elem& a) {
  const unsigned d = K.degree();
  // powers[i] = coordinates of a^i.
  std::vector<NumberField::Elem> powers = {K.one()};
  for (unsigned k = 1; k <= d; ++k) {
    powers.push_back(K.mul(powers.back(), a));

    // Try to solve sum_{i<k} c_i a^i = -a^k by Gaussian elimination on the
    // d x (k+1) augmented system.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(k + 1, Rational(0)));
    for (unsigned row = 0; row < d; ++row) {
      for (unsigned i = 0; i < k; ++i) m[row][i] = powers[i][row];
      m[row][k] = -powers[k][row];
    }
    std::vector<int> pivot_col(d, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < k && rank < d; ++col) {
      unsigned sel = rank;
      while (sel < d && m[sel][col] == 0) ++sel;
      if (sel == d) continue;
      std::swap(m[rank], m[sel]);
      const Rational inv = Rational(1) / m[rank][col];
      for (unsigned j = col; j <= k; ++j) m[rank][j] *= inv;
      for (unsigned row = 0; row < d; ++row) {
        if (row == rank || m[row][col] == 0) continue;
        const Rational factor = m[row][col];
        for (unsigned j = col; j <= k; ++j) m[row][j] -= factor * m[rank][j];
      }
      pivot_col[rank] = static_cast<int>(col);
      ++rank;
    }
    bool consistent = true;
    for (unsigned row = rank; row < d; ++row) {
      if (m[row][k] != 0) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;

    std::vector<Rational> coeff(k + 1, Rational(0));
    coeff[k] = 1;
    for (unsigned r = 0; r < rank; ++r) coeff[pivot_col[r]] = m[r][k];
    std::vector<Integer> zc(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
      if (denominator(coeff[i]) != 1) {
        throw UnsupportedError("minimal_polynomial: element is not an algebraic integer");
      }
      zc[i] = numerator(coeff[i]);
    }
    return IntPoly::from_coeffs(std::move(zc));
  }
  throw InternalCheckError("minimal_polynomial: no dependence up to the field degree");
}

namespace {

struct RationalOps {
  Rational zero() const { return Rational(0); }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational from_rational(const Rational& q) const { return q; }
};

}  // namespace

Rational norm_form_eval_q(const NumberField& K, const std::vector<Rational>& x) {
  return norm_form_eval<Rational>(K, x, RationalOps{});
}

}  // namespace abelcert
