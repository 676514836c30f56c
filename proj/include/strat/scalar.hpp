// scalar.hpp
//
// Exact coefficient arithmetic. The default field is the rationals, backed
// by GMP's mpq_class so every value is stored canonically and equality is
// plain representation equality. A prime-field mode stores residues
// 0..p-1 in the same type, which keeps the matrix layer free of templates.

#ifndef STRAT_SCALAR_HPP
#define STRAT_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace strat {

using Scalar = mpq_class;

// Build a canonical rational from integers or a decimal string like "-3/7".
Scalar rat(long num, long den = 1);
Scalar rat(const std::string& text);

struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  long p = 0;  // modulus, prime mode only

  static Field rationals() { return Field{}; }
  static Field prime(long p);

  bool prime_mode() const { return kind == Kind::prime; }
  bool operator==(const Field&) const = default;

  // Reduce an arbitrary rational into this field. In prime mode the
  // denominator must be invertible mod p.
  Scalar canon(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero

  // Values are kept canonical, so zero tests are literal.
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  std::string str(const Scalar& a) const;
  std::string name() const;  // "q" or "fp:<p>"
};

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strat

#endif
