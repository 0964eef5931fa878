#include "conecalc/rational.hpp"

#include <algorithm>
#include <cctype>

namespace conecalc {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int_token(s)) throw InputError("bad rational: '" + s + "'");
    return Rational(mpz_class(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den)) {
    throw InputError("bad rational: '" + s + "'");
  }
  mpz_class d(den);
  if (d == 0) throw InputError("zero denominator: '" + s + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return RatMatrix(0, 0);
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw InputError("ragged row list");
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Rational dot(const RatVector& x, const RatVector& y) {
  if (x.size() != y.size()) throw InputError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
  if (x.size() != m.cols) throw InputError("mat_vec: dimension mismatch");
  RatVector out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

RatVector vec_add(const RatVector& x, const RatVector& y) {
  if (x.size() != y.size()) throw InputError("vec_add: dimension mismatch");
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

RatVector vec_sub(const RatVector& x, const RatVector& y) {
  if (x.size() != y.size()) throw InputError("vec_sub: dimension mismatch");
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

RatVector vec_scale(const Rational& c, const RatVector& x) {
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

bool is_zero(const RatVector& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const Rational& r) { return r == 0; });
}

namespace {

RatVector primitive_scaled(const RatVector& v, bool flip_to_positive) {
  mpz_class den_lcm = 1;
  for (const Rational& r : v) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    den_lcm = g;
  }
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class num_gcd = 0;
  for (const Rational& r : v) {
    mpz_class n = r.get_num() * (den_lcm / r.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    num_gcd = g;
    ints.push_back(std::move(n));
  }
  if (num_gcd == 0) return RatVector(v.size(), Rational(0));
  int sign = 1;
  if (flip_to_positive) {
    for (const mpz_class& n : ints) {
      if (n != 0) {
        sign = (n > 0) ? 1 : -1;
        break;
      }
    }
  }
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class n = ints[i] / num_gcd;
    if (sign < 0) n = -n;
    out[i] = Rational(std::move(n));
  }
  return out;
}

}  // namespace

RatVector canonicalize(const RatVector& v) { return primitive_scaled(v, true); }

RatVector canonicalize_ray(const RatVector& v) {
  return primitive_scaled(v, false);
}

bool lex_less(const RatVector& x, const RatVector& y) {
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c != 0) return c > 0;
  }
  return x.size() < y.size();
}

void sort_canonical(std::vector<RatVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace conecalc
