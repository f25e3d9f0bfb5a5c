#include "toric/scalar.hpp"

#include <utility>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr mpfr_prec_t kEvalGuardBits = 32;

// Reduce q into [0, 1).
mpq_class mod_one(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    mpq_class r = q - mpq_class(fl);
    r.canonicalize();
    return r;
}

bool is_prime(const mpz_class& p) {
    return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

}  // namespace

ExactScalar ExactScalar::from_parts(ExponentMap modulus_exponents, mpq_class turns) {
    ExactScalar s;
    for (auto it = modulus_exponents.begin(); it != modulus_exponents.end();) {
        if (!is_prime(it->first))
            throw ParseError("modulus base " + it->first.get_str() + " is not a prime > 1");
        if (it->second == 0)
            it = modulus_exponents.erase(it);
        else
            ++it;
    }
    s.mod_ = std::move(modulus_exponents);
    s.turns_ = mod_one(turns);
    return s;
}

ExactScalar ExactScalar::from_rational(const mpq_class& value, const mpz_class& factor_bound) {
    if (value == 0) throw ParseError("scalar constants must be nonzero");
    ExactScalar s;
    if (value < 0) s.turns_ = mpq_class(1, 2);

    auto factor_into = [&](mpz_class n, int direction) {
        // trial division by 2, 3, 5, then 6k +/- 1
        auto take = [&](const mpz_class& p) {
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
                s.mod_[p] += direction;
            }
        };
        for (long p : {2L, 3L, 5L}) take(mpz_class(p));
        for (mpz_class p = 7; p <= factor_bound && p * p <= n; p += 6) {
            take(p);  // 6k+1
            mpz_class q = p + 4;  // 6k+5; composite candidates never divide
            if (q <= factor_bound && q * q <= n) take(q);
        }
        if (n > 1) {
            if (n <= factor_bound)
                s.mod_[n] += direction;  // n survived all smaller divisors, so it is prime
            else
                throw FactorBoundExceeded("factor of " + n.get_str() + " exceeds trial-division bound " +
                                          factor_bound.get_str());
        }
    };
    factor_into(abs(value.get_num()), +1);
    factor_into(value.get_den(), -1);
    for (auto it = s.mod_.begin(); it != s.mod_.end();)
        it = it->second == 0 ? s.mod_.erase(it) : std::next(it);
    return s;
}

ExactScalar ExactScalar::mul(const ExactScalar& o) const {
    ExactScalar s;
    s.mod_ = mod_;
    for (const auto& [p, e] : o.mod_) {
        mpq_class& acc = s.mod_[p];
        acc += e;
        if (acc == 0) s.mod_.erase(p);
    }
    s.turns_ = mod_one(turns_ + o.turns_);
    return s;
}

ExactScalar ExactScalar::pow(const mpz_class& k) const {
    ExactScalar s;
    if (k == 0) return s;
    for (const auto& [p, e] : mod_) s.mod_[p] = e * k;
    s.turns_ = mod_one(turns_ * mpq_class(k));
    return s;
}

ExactScalar ExactScalar::root(const mpz_class& d, const mpz_class& branch) const {
    if (d < 1) throw PreconditionViolated("root degree must be >= 1");
    if (branch < 0 || branch >= d)
        throw PreconditionViolated("branch index " + branch.get_str() + " outside 0.." + mpz_class(d - 1).get_str());
    ExactScalar s;
    for (const auto& [p, e] : mod_) s.mod_[p] = e / mpq_class(d);
    s.turns_ = mod_one((turns_ + mpq_class(branch)) / mpq_class(d));
    return s;
}

Complex ExactScalar::evaluate(mpfr_prec_t precision_bits) const {
    if (precision_bits < 53) throw PreconditionViolated("precision_bits must be >= 53");
    const mpfr_prec_t w = precision_bits + kEvalGuardBits;
    Real log_modulus(w);
    for (const auto& [p, e] : mod_) log_modulus = log_modulus + Real::of_mpq(e, w) * log(Real::of_mpz(p, w));
    Real angle = Real::of_mpq(turns_, w) * ldexp(Real::pi(w), 1);
    return Complex::from_polar(exp(log_modulus), angle).rounded_to(precision_bits);
}

std::string ExactScalar::to_string() const {
    if (mod_.empty()) {
        if (turns_ == 0) return "1";
        if (turns_ == mpq_class(1, 2)) return "-1";
        if (turns_ == mpq_class(1, 4)) return "i";
        if (turns_ == mpq_class(3, 4)) return "-i";
    }
    std::string out;
    for (const auto& [p, e] : mod_) {
        if (!out.empty()) out += "*";
        out += p.get_str();
        if (e != 1) out += "^(" + e.get_str() + ")";
    }
    if (turns_ != 0) {
        if (!out.empty()) out += "*";
        out += "e(" + turns_.get_str() + ")";
    }
    return out.empty() ? "1" : out;
}

}  // namespace toric
