#include "hopfca/scalar.hpp"

namespace hopfca {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned long mod_reduce(long v, unsigned long p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return static_cast<unsigned long>(r);
}

unsigned long mod_inv(unsigned long a, unsigned long p) {
  // extended Euclid; a in [1, p)
  long t = 0, new_t = 1;
  long r = static_cast<long>(p), new_r = static_cast<long>(a);
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw SingularMatrix("element not invertible mod p");
  if (t < 0) t += static_cast<long>(p);
  return static_cast<unsigned long>(t);
}

}  // namespace

FieldSpec FieldSpec::prime_field(unsigned long p) {
  if (!is_prime(p)) throw BadParams("characteristic must be prime, got " + std::to_string(p));
  return {Kind::prime_field, p};
}

std::string FieldSpec::str() const {
  return kind == Kind::rationals ? "Q" : "Fp " + std::to_string(characteristic);
}

Scalar Scalar::from_long(const FieldSpec& f, long v) {
  Scalar s;
  s.spec_ = f;
  if (f.kind == FieldSpec::Kind::rationals)
    s.q_ = v;
  else
    s.r_ = mod_reduce(v, f.characteristic);
  return s;
}

Scalar Scalar::from_ratio(const FieldSpec& f, long num, long den) {
  if (den == 0) throw SingularMatrix("zero denominator");
  Scalar s;
  s.spec_ = f;
  if (f.kind == FieldSpec::Kind::rationals) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
  } else {
    unsigned long p = f.characteristic;
    unsigned long d = mod_reduce(den, p);
    if (d == 0) throw SingularMatrix("denominator is 0 mod p");
    s.r_ = (mod_reduce(num, p) * static_cast<unsigned long long>(mod_inv(d, p))) % p;
  }
  return s;
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& v) {
  Scalar s;
  s.spec_ = f;
  if (f.kind == FieldSpec::Kind::rationals) {
    s.q_ = v;
    s.q_.canonicalize();
  } else {
    unsigned long p = f.characteristic;
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class nr = num % pm, dr = den % pm;
    if (nr < 0) nr += pm;
    if (dr < 0) dr += pm;
    unsigned long d = dr.get_ui();
    if (d == 0) throw SingularMatrix("denominator is 0 mod p");
    s.r_ = (nr.get_ui() * static_cast<unsigned long long>(mod_inv(d, p))) % p;
  }
  return s;
}

Scalar Scalar::from_string(const FieldSpec& f, const std::string& s) {
  auto slash = s.find('/');
  mpq_class v;
  if (slash == std::string::npos)
    v = mpq_class(mpz_class(s));
  else
    v = mpq_class(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  v.canonicalize();
  return from_mpq(f, v);
}

bool Scalar::is_zero() const {
  return spec_.kind == FieldSpec::Kind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return spec_.kind == FieldSpec::Kind::rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(spec_ == o.spec_)) throw FieldMismatch("scalars over different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % spec_.characteristic;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    s.q_ = q_ - o.q_;
  else
    s.r_ = (r_ + spec_.characteristic - o.r_) % spec_.characteristic;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    s.q_ = q_ * o.q_;
  else
    s.r_ = (static_cast<unsigned long long>(r_) * o.r_) % spec_.characteristic;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : spec_.characteristic - r_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw SingularMatrix("division by zero");
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldSpec::Kind::rationals)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inv(r_, spec_.characteristic);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(spec_ == o.spec_)) return false;
  return spec_.kind == FieldSpec::Kind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (spec_.kind == FieldSpec::Kind::prime_field) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace hopfca
