#pragma once
// Exact scalar arithmetic over Q or a prime field F_p.
//
// Every scalar is stored as an mpq_class.  For F_p the canonical form is
// an integer numerator in [0, p) with denominator 1; all operations route
// through a Field object which re-canonicalizes after each step.  Code that
// manipulates matrices never needs to know which field it is working over.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dualco {

using Scalar = mpq_class;

// Raised on malformed user input (bad grammar, inconsistent presentation, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation is requested outside the supported regime
// (non-split algebra, radical over F_p without quiver provenance, ...).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant violation: a structural check that should hold failed.
struct check_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class FieldKind { Rationals, Prime };

class Field {
 public:
  Field() : kind_(FieldKind::Rationals), p_(0) {}

  static Field rationals() { return Field(); }
  static Field prime(unsigned long p);

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_prime() const { return kind_ == FieldKind::Prime; }
  // 0 for Q.
  unsigned long characteristic() const { return p_; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return reduce(Scalar(1)); }
  Scalar from_long(long v) const { return reduce(Scalar(v)); }
  // num/den as a field element; den must be invertible.
  Scalar from_ratio(long num, long den) const;

  // Canonical representative of a raw rational in this field.
  Scalar reduce(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return sgn(a.get_num()) == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  std::string str(const Scalar& a) const { return a.get_str(); }
  std::string name() const;

 private:
  FieldKind kind_;
  unsigned long p_;
};

}  // namespace dualco
