#include "quiverdom/field.hpp"

#include <cctype>

namespace quiverdom {

namespace {

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a in [0, p)
  std::int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw FieldError("element not invertible mod " + std::to_string(p));
  return t < 0 ? t + p : t;
}

std::int64_t mod_of_mpz(const mpz_class& z, std::int64_t p) {
  mpz_class m = z % p;
  if (m < 0) m += p;
  return m.get_si();
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 2 || p > 2147483647LL)
    throw FieldError("prime field modulus out of range: " + std::to_string(p));
  if (!is_prime_int(p))
    throw FieldError("modulus is not prime: " + std::to_string(p));
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string FieldSpec::str() const {
  return kind == Kind::rational ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f); }

Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long value) {
  Scalar s(f);
  if (f.kind == FieldSpec::Kind::rational) {
    s.rat_ = value;
  } else {
    std::int64_t m = value % f.p;
    s.res_ = m < 0 ? m + f.p : m;
  }
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  // strict shape check: -?digits(/digits)?
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t after_num = digits(i);
  if (after_num == i) throw FieldError("bad scalar literal: '" + text + "'");
  std::size_t end = after_num;
  if (end < text.size() && text[end] == '/') {
    std::size_t after_den = digits(end + 1);
    if (after_den == end + 1) throw FieldError("bad scalar literal: '" + text + "'");
    end = after_den;
  }
  if (end != text.size()) throw FieldError("bad scalar literal: '" + text + "'");

  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw FieldError("bad scalar literal: '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw FieldError("zero denominator in scalar literal: '" + text + "'");
  q.canonicalize();

  Scalar s(f);
  if (f.kind == FieldSpec::Kind::rational) {
    s.rat_ = q;
  } else {
    std::int64_t den = mod_of_mpz(mpz_class(q.get_den()), f.p);
    if (den == 0)
      throw FieldError("denominator of '" + text + "' is zero in " + f.str());
    std::int64_t num = mod_of_mpz(mpz_class(q.get_num()), f.p);
    s.res_ = static_cast<std::int64_t>(
        (static_cast<unsigned long long>(num) * mod_inverse(den, f.p)) % f.p);
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldSpec::Kind::rational ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldSpec::Kind::rational ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldError("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = (res_ + o.res_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : field_.p - res_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = static_cast<std::int64_t>(
        (static_cast<unsigned long long>(res_) * static_cast<unsigned long long>(o.res_)) %
        field_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero in " + field_.str());
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.kind == FieldSpec::Kind::rational ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldSpec::Kind::rational) return rat_.get_str();
  return std::to_string(res_);
}

}  // namespace quiverdom
