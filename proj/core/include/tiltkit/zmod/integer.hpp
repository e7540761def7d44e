#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tiltkit {

// Integer with an inline 64-bit fast path; promotes to GMP on overflow and
// demotes again whenever a result fits.
class Int {
 public:
  Int() = default;
  Int(int v) : small_(v) {}
  Int(long v) : small_(v) {}
  Int(long long v) : small_(v) {}
  explicit Int(const mpz_class& v);

  Int(const Int& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o);
  Int& operator=(Int&&) noexcept = default;

  static Int parse(std::string_view s);
  std::string str() const;
  mpz_class to_mpz() const;

  bool is_small() const { return !big_; }
  // Only meaningful when is_small().
  int64_t small() const { return small_; }

  int sign() const;
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend int cmp(const Int& a, const Int& b);
  friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

  // a -= q * b without temporaries on the fast path.
  void submul(const Int& q, const Int& b);

 private:
  void set_big(mpz_class v);
  void normalize();

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Int abs(const Int& a);
// Floor division and the matching non-negative remainder for b > 0.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
// Quotient rounded to the nearest integer (ties toward -inf); keeps remainders small.
Int round_div(const Int& a, const Int& b);
// Requires b | a.
Int exact_div(const Int& a, const Int& b);
bool divides(const Int& b, const Int& a);
Int gcd(const Int& a, const Int& b);
// g = gcd(a,b) >= 0 with g = s*a + t*b.
void gcdext(const Int& a, const Int& b, Int& g, Int& s, Int& t);

std::ostream& operator<<(std::ostream& os, const Int& v);

}  // namespace tiltkit
