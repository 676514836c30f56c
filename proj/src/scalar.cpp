// scalar.cpp

#include "strat/scalar.hpp"

namespace strat {

Scalar rat(long num, long den) {
  if (den == 0) throw FieldError("rat: zero denominator");
  Scalar x(num, den);
  x.canonicalize();
  return x;
}

Scalar rat(const std::string& text) {
  mpq_class x;
  if (x.set_str(text, 10) != 0) throw FieldError("rat: bad literal '" + text + "'");
  if (x.get_den() == 0) throw FieldError("rat: zero denominator in '" + text + "'");
  x.canonicalize();
  return x;
}

static bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(long p) {
  if (!is_prime_long(p)) throw FieldError("field: modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

// residue of an integer mod p, in 0..p-1
static mpz_class mod_p(const mpz_class& z, long p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r;
}

// inverse mod p by extended euclid on machine longs (p fits a long)
static long inv_mod_p(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  if (nr == 0) throw FieldError("field: division by zero mod p");
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw FieldError("field: non-invertible residue mod p");
  if (t < 0) t += p;
  return t;
}

Scalar Field::canon(const Scalar& x) const {
  if (kind == Kind::rationals) {
    Scalar y = x;
    y.canonicalize();
    return y;
  }
  mpz_class num = mod_p(x.get_num(), p);
  mpz_class den = mod_p(x.get_den(), p);
  if (den == 0) throw FieldError("field: denominator divisible by p");
  long d = den.get_si();
  mpz_class r = mod_p(num * inv_mod_p(d, p), p);
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar c = a + b;
  return kind == Kind::prime ? canon(c) : c;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar c = a - b;
  return kind == Kind::prime ? canon(c) : c;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar c = a * b;
  return kind == Kind::prime ? canon(c) : c;
}

Scalar Field::neg(const Scalar& a) const {
  Scalar c = -a;
  return kind == Kind::prime ? canon(c) : c;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw FieldError("field: inverse of zero");
  if (kind == Kind::rationals) return Scalar(1) / a;
  return Scalar(inv_mod_p(a.get_num().get_si(), p));
}

std::string Field::str(const Scalar& a) const { return a.get_str(); }

std::string Field::name() const {
  return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p);
}

}  // namespace strat
