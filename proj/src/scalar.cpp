#include "pathhom/scalar.hpp"

#include <charconv>
#include <stdexcept>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

// Optional sign followed by at least one decimal digit.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s))
    throw InputError("invalid number literal \"" + std::string(whole) + "\"");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t value, std::uint64_t modulus) {
  if (value % modulus == 0) throw std::domain_error("zero has no inverse");
  return pow_mod(value, modulus - 2, modulus);
}

// ---- Field ----------------------------------------------------------------

Field Field::prime(std::uint64_t p) {
  if (p == 2 || p % 2 == 0)
    throw InputError("field characteristic must be odd, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 31))
    throw InputError("field prime must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "rational" || spec == "q" || spec == "Q") return rational();
  if (spec.starts_with("gf:")) {
    auto digits = spec.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw InputError("invalid field descriptor \"" + std::string(spec) + "\"");
    return prime(p);
  }
  throw InputError("invalid field descriptor \"" + std::string(spec) +
                   "\" (expected rational or gf:<p>)");
}

std::string Field::name() const {
  return is_rational() ? "rational" : "gf:" + std::to_string(modulus_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(value))));
  long long m = static_cast<long long>(modulus_);
  long long r = value % m;
  if (r < 0) r += m;
  return Scalar::residue(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto slash = text.find('/');
  mpz_class num, den(1);
  if (slash == std::string_view::npos) {
    num = parse_integer(text, text);
  } else {
    num = parse_integer(text.substr(0, slash), text);
    den = parse_integer(text.substr(slash + 1), text);
  }
  if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::uint64_t d = reduce_mod(den, modulus_);
  if (d == 0)
    throw InputError("denominator of \"" + std::string(text) + "\" is not invertible mod " +
                     std::to_string(modulus_));
  std::uint64_t n = reduce_mod(num, modulus_);
  return Scalar::residue(n * mod_inverse(d, modulus_) % modulus_, modulus_);
}

// ---- Scalar ---------------------------------------------------------------

Scalar::Scalar(mpq_class q) : v_(std::move(q)) {}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t modulus) {
  Scalar s;
  s.v_ = Residue{value % modulus, modulus};
  return s;
}

Field Scalar::field() const {
  if (is_rational()) return Field::rational();
  return Field(std::get<Residue>(v_).modulus);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).value == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no inverse");
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1) / *q);
  const auto& r = std::get<Residue>(v_);
  return residue(mod_inverse(r.value, r.modulus), r.modulus);
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

Scalar::Residue& Scalar::residue_ref(const Scalar& other) {
  auto* mine = std::get_if<Residue>(&v_);
  auto* theirs = std::get_if<Residue>(&other.v_);
  if (!mine || !theirs || mine->modulus != theirs->modulus)
    throw std::logic_error("scalar field mismatch");
  return *mine;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    if (!o.is_rational()) throw std::logic_error("scalar field mismatch");
    *q += o.rational();
    return *this;
  }
  auto& r = residue_ref(o);
  r.value = (r.value + o.residue_value()) % r.modulus;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    if (!o.is_rational()) throw std::logic_error("scalar field mismatch");
    *q -= o.rational();
    return *this;
  }
  auto& r = residue_ref(o);
  r.value = (r.value + r.modulus - o.residue_value()) % r.modulus;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    if (!o.is_rational()) throw std::logic_error("scalar field mismatch");
    *q *= o.rational();
    return *this;
  }
  auto& r = residue_ref(o);
  r.value = r.value * o.residue_value() % r.modulus;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(v_);
  return residue((r.modulus - r.value) % r.modulus, r.modulus);
}

bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

}  // namespace pathhom
