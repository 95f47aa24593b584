#include "leibniz/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace leibniz {

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so that negation never overflows.
bool fits(i128 v) { return v <= kMax && v >= -static_cast<i128>(kMax); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP si conversions assume 64-bit long");

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

bool mpz_fits_i64(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

std::int64_t mpz_to_i64(const mpz_class& z) { return mpz_get_si(z.get_mpz_t()); }

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    assign_big(mpq_class(to_mpz(value)));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() ||
      den == std::numeric_limits<std::int64_t>::min()) {
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    assign_big(std::move(q));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = gcd64(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = num == 0 ? 1 : den / g;
}

Rational::Rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  assign_big(std::move(q));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_big(mpq_class value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (mpz_fits_i64(n) && mpz_fits_i64(d)) {
    num_ = mpz_to_i64(n);
    den_ = mpz_to_i64(d);
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, bool allow_sign) -> mpz_class {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t start = 0;
    if (allow_sign && s[0] == '-') start = 1;
    if (start == s.size()) throw std::invalid_argument("missing digits");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("invalid character in rational '" + std::string(s) + "'");
      }
    }
    // No redundant leading zeros: "0" is fine, "007" and "-0" are not.
    if (s.size() - start > 1 && s[start] == '0') {
      throw std::invalid_argument("leading zero in '" + std::string(s) + "'");
    }
    if (start == 1 && s.size() == 2 && s[1] == '0') {
      throw std::invalid_argument("negative zero");
    }
    return mpz_class(std::string(s));
  };

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_int(text, true)));
  }
  mpz_class num = parse_int(text.substr(0, slash), true);
  mpz_class den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("rational '" + std::string(text) + "' not in lowest terms");
  }
  return Rational(mpq_class(num, den));
}

bool Rational::is_integer() const {
  return small() ? den_ == 1 : big_->get_den() == 1;
}

int Rational::sign() const {
  if (small()) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

mpz_class Rational::numerator() const { return small() ? to_mpz(num_) : mpz_class(big_->get_num()); }
mpz_class Rational::denominator() const { return small() ? to_mpz(den_) : mpz_class(big_->get_den()); }

mpq_class Rational::to_mpq() const {
  if (!small()) return *big_;
  mpq_class q(to_mpz(num_), to_mpz(den_));
  return q;
}

std::string Rational::to_string() const {
  if (small()) {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
}

Rational Rational::operator-() const {
  Rational r;
  if (small()) {
    r.num_ = -num_;
    r.den_ = den_;
  } else {
    r.assign_big(-*big_);
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (small() && rhs.small()) {
    if (den_ == 1 && rhs.den_ == 1) {
      i128 s = static_cast<i128>(num_) + rhs.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    } else {
      // Knuth's reduced addition.
      std::int64_t g = std::gcd(den_, rhs.den_);
      std::int64_t b1 = den_ / g;
      std::int64_t d1 = rhs.den_ / g;
      i128 t = static_cast<i128>(num_) * d1 + static_cast<i128>(rhs.num_) * b1;
      auto tg = static_cast<std::int64_t>(t % g);
      std::int64_t g2 = gcd64(tg, g);
      if (g2 == 0) g2 = g;
      i128 n = t / g2;
      i128 d = static_cast<i128>(b1) * (rhs.den_ / g2);
      if (t == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        return *this;
      }
    }
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (small() && rhs.small()) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = gcd64(num_, rhs.den_);
    std::int64_t g2 = gcd64(rhs.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (rhs.small()) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.small() != b.small()) return false;  // both canonical
  return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational gcd_integer(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) return Rational(gcd64(a.num_, b.num_));
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  return Rational(mpq_class(g));
}

Rational div_exact_integer(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) return Rational(a.num_ / b.num_);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  return Rational(mpq_class(q));
}

}  // namespace leibniz
