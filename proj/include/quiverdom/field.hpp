#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace quiverdom {

struct FieldError : std::runtime_error {
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

// Ground field: the rationals, or F_p for a prime p in [2, 2^31 - 1].
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::int64_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::int64_t p);

  bool is_prime_field() const { return kind == Kind::prime; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;  // "Q" or "F<p>"
};

// Exact scalar tagged with its field. Rationals are kept in lowest terms with
// positive denominator; prime-field elements as residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long value);
  // Accepts "-3", "17", "2/5". Rejects zero denominators and, over F_p,
  // denominators divisible by p.
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}

  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class rat_ = 0;     // used when kind == rational
  std::int64_t res_ = 0;  // used when kind == prime
};

}  // namespace quiverdom
