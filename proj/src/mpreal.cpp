#include "toric/mpreal.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

Real Real::of_long(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.raw(), x, MPFR_RNDN);
    return r;
}

Real Real::of_ulong(unsigned long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui(r.raw(), x, MPFR_RNDN);
    return r;
}

Real Real::of_double(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.raw(), x, MPFR_RNDN);
    return r;
}

Real Real::of_mpz(const mpz_class& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::of_mpq(const mpq_class& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real Real::nan(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_nan(r.raw());
    return r;
}

Real Real::rounded_to(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.raw(), v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Re", digits - 1, v_) < 0) throw Error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real sin(const Real& a) {
    Real r(a.prec());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real cos(const Real& a) {
    Real r(a.prec());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(join(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(join(x, y));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real ldexp(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

Complex Complex::from_polar(const Real& modulus, const Real& angle) {
    return Complex(modulus * cos(angle), modulus * sin(angle));
}

Complex Complex::unit_from_turns(const mpq_class& turns, mpfr_prec_t prec) {
    Real angle = Real::of_mpq(turns, prec) * ldexp(Real::pi(prec), 1);
    return Complex(cos(angle), sin(angle));
}

Complex Complex::one(mpfr_prec_t prec) {
    return Complex(Real::of_long(1, prec), Real::of_long(0, prec));
}

Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
}

Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
}

Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re_ * b.re_ + b.im_ * b.im_;
    Complex p = a * b.conj();
    return Complex(p.re_ / n, p.im_ / n);
}

Complex Complex::inverse() const {
    Real n = re_ * re_ + im_ * im_;
    return Complex(re_ / n, -im_ / n);
}

Complex Complex::pow(const mpz_class& e) const {
    if (sgn(e) == 0) return Complex::one(prec());
    Complex base = sgn(e) < 0 ? inverse() : *this;
    mpz_class a = ::abs(e);
    size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
    Complex acc = base;
    for (size_t i = bits - 1; i-- > 0;) {
        acc = acc * acc;
        if (mpz_tstbit(a.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = acc * base;
    }
    return acc;
}

Complex Complex::root(const mpz_class& k) const {
    if (sgn(k) == 0) throw Error("zeroth root");
    Real kk = Real::of_mpz(k, prec());
    Real modulus = exp(log(abs()) / kk);
    Real angle = atan2(im_, re_) / kk;
    return from_polar(modulus, angle);
}

std::string Complex::to_string(int digits) const {
    return re_.to_string(digits) + " " + im_.to_string(digits);
}

}  // namespace toric
