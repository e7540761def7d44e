#include "tiltkit/zmod/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace tiltkit {

namespace {

mpz_class mpz_of(int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Int::Int(const mpz_class& v) { set_big(v); }

Int& Int::operator=(const Int& o) {
  if (this == &o) return *this;
  small_ = o.small_;
  if (o.big_) {
    if (big_) *big_ = *o.big_;
    else big_ = std::make_unique<mpz_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Int::set_big(mpz_class v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    big_ = std::make_unique<mpz_class>(std::move(v));
  }
}

void Int::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

mpz_class Int::to_mpz() const { return big_ ? *big_ : mpz_of(small_); }

Int Int::parse(std::string_view s) {
  std::string str(s);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  mpz_class v;
  if (str.empty() || v.set_str(str, 10) != 0) throw std::invalid_argument("not an integer: " + std::string(s));
  return Int(v);
}

std::string Int::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

int Int::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

Int Int::operator-() const {
  if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Int(static_cast<long long>(-small_));
  return Int(mpz_class(-to_mpz()));
}

Int& Int::operator+=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  set_big(to_mpz() + o.to_mpz());
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  set_big(to_mpz() - o.to_mpz());
  return *this;
}

Int& Int::operator*=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  set_big(to_mpz() * o.to_mpz());
  return *this;
}

void Int::submul(const Int& q, const Int& b) {
  if (!big_ && !q.big_ && !b.big_) {
    int64_t p, r;
    if (!__builtin_mul_overflow(q.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  set_big(to_mpz() - q.to_mpz() * b.to_mpz());
}

int cmp(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  int c = ::cmp(a.to_mpz(), b.to_mpz());
  return (c > 0) - (c < 0);
}

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

Int floor_div(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && !(a.small() == std::numeric_limits<int64_t>::min() && b.small() == -1)) {
    int64_t q = a.small() / b.small();
    int64_t r = a.small() % b.small();
    if (r != 0 && ((r < 0) != (b.small() < 0))) --q;
    return Int(static_cast<long long>(q));
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Int(q);
}

Int floor_mod(const Int& a, const Int& b) {
  Int r = a;
  r.submul(floor_div(a, b), b);
  return r;
}

Int round_div(const Int& a, const Int& b) {
  // floor((2a + b) / 2b) for b > 0; mirrored for b < 0.
  if (b.sign() < 0) return round_div(-a, -b);
  Int two_a = a + a;
  return floor_div(two_a + b, b + b);
}

Int exact_div(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small() && b.small() != -1) return Int(static_cast<long long>(a.small() / b.small()));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Int(q);
}

bool divides(const Int& b, const Int& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_small() && b.is_small()) {
    if (b.small() == -1) return true;
    return a.small() % b.small() == 0;
  }
  return mpz_divisible_p(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t()) != 0;
}

Int gcd(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small() && a.small() != std::numeric_limits<int64_t>::min() &&
      b.small() != std::numeric_limits<int64_t>::min()) {
    int64_t x = a.small() < 0 ? -a.small() : a.small();
    int64_t y = b.small() < 0 ? -b.small() : b.small();
    while (y != 0) {
      int64_t t = x % y;
      x = y;
      y = t;
    }
    return Int(static_cast<long long>(x));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Int(g);
}

void gcdext(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_class G, S, T;
  mpz_gcdext(G.get_mpz_t(), S.get_mpz_t(), T.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  g = Int(G);
  s = Int(S);
  t = Int(T);
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

}  // namespace tiltkit
