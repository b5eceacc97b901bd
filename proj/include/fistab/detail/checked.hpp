#pragma once

// Arithmetic kernels shared by the int64 fast path and the GMP fallback.
// Every int64 operation is overflow-checked; on overflow the caller reruns the
// whole computation over mpz_class.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <utility>

namespace fistab::detail {

struct Overflow {};

// ---- int64 ---------------------------------------------------------------

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return -a;
}
inline std::int64_t abs_of(std::int64_t a) { return a < 0 ? neg(a) : a; }
inline bool is_zero(std::int64_t a) { return a == 0; }
inline int sign_of(std::int64_t a) { return (a > 0) - (a < 0); }
inline bool abs_less(std::int64_t a, std::int64_t b) { return abs_of(a) < abs_of(b); }
inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
/// Truncated quotient.
inline std::int64_t quot(std::int64_t a, std::int64_t b) {
  if (b == -1) return neg(a);
  return a / b;
}
inline bool divides(std::int64_t d, std::int64_t a) {
  if (d == -1 || d == 1) return true;
  return a % d == 0;
}
/// acc -= q * x
inline void submul(std::int64_t& acc, std::int64_t q, std::int64_t x) { acc = sub(acc, mul(q, x)); }
/// acc += q * x
inline void addmul(std::int64_t& acc, std::int64_t q, std::int64_t x) { acc = add(acc, mul(q, x)); }

// ---- mpz -----------------------------------------------------------------

inline mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class neg(const mpz_class& a) { return -a; }
inline mpz_class abs_of(const mpz_class& a) { return abs(a); }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline int sign_of(const mpz_class& a) { return sgn(a); }
inline bool abs_less(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}
inline bool is_unit(const mpz_class& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
inline mpz_class quot(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool divides(const mpz_class& d, const mpz_class& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}
inline void submul(mpz_class& acc, const mpz_class& q, const mpz_class& x) {
  mpz_submul(acc.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t());
}
inline void addmul(mpz_class& acc, const mpz_class& q, const mpz_class& x) {
  mpz_addmul(acc.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t());
}

// ---- generic -------------------------------------------------------------

template <class T>
struct ExtGcd {
  T g, s, t;  // s*a + t*b = g >= 0
};

template <class T>
ExtGcd<T> ext_gcd(T a, T b) {
  T old_r = a, r = b;
  T old_s = T(1), s = T(0);
  T old_t = T(0), t = T(1);
  while (!is_zero(r)) {
    T q = quot(old_r, r);
    T nr = sub(old_r, mul(q, r));
    old_r = std::move(r);
    r = std::move(nr);
    T ns = sub(old_s, mul(q, s));
    old_s = std::move(s);
    s = std::move(ns);
    T nt = sub(old_t, mul(q, t));
    old_t = std::move(t);
    t = std::move(nt);
  }
  if (sign_of(old_r) < 0) {
    old_r = neg(old_r);
    old_s = neg(old_s);
    old_t = neg(old_t);
  }
  return {old_r, old_s, old_t};
}

template <class T>
T from_mpz(const mpz_class& z);

template <>
inline std::int64_t from_mpz<std::int64_t>(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Overflow{};
  return z.get_si();
}
template <>
inline mpz_class from_mpz<mpz_class>(const mpz_class& z) {
  return z;
}

inline mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}
inline const mpz_class& to_mpz(const mpz_class& v) { return v; }

/// Runs body<int64_t>() and reruns it as body<mpz_class>() on overflow.
template <class Body>
auto with_overflow_fallback(Body&& body) {
  try {
    return body.template operator()<std::int64_t>();
  } catch (const Overflow&) {
    return body.template operator()<mpz_class>();
  }
}

}  // namespace fistab::detail
