#include "toric/verify.hpp"

#include <algorithm>

#include "toric/errors.hpp"
#include "toric/rng.hpp"

namespace toric {

namespace {

constexpr mpfr_prec_t kResidualGuardBits = 32;

mpq_class turns_from_u64(std::uint64_t u) {
    mpz_class num;
    mpz_import(num.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    mpz_class den = 1;
    den <<= 64;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Complex unit_coordinate(std::uint64_t draw, mpfr_prec_t prec) {
    return Complex::unit_from_turns(turns_from_u64(draw), prec);
}

mpz_class equation_condition(const TorusEquation& eq) {
    mpz_class c = 1;
    for (const auto& p : eq.exponents) c += abs(p);
    return c;
}

mpfr_prec_t guarded(mpfr_prec_t precision_bits, const mpz_class& condition) {
    return precision_bits + kResidualGuardBits +
           static_cast<mpfr_prec_t>(mpz_sizeinbase(condition.get_mpz_t(), 2));
}

}  // namespace

Real residual(const TorusEquation& eq, const Point& z, mpfr_prec_t precision_bits) {
    if (eq.exponents.size() != z.size()) throw ShapeMismatch("residual: point dimension differs");
    for (const auto& c : z)
        if (c.is_zero()) throw ZeroCoordinate("residual: point has a zero coordinate");
    const mpfr_prec_t w = guarded(precision_bits, equation_condition(eq));
    Complex prod = Complex::one(w);
    for (size_t j = 0; j < z.size(); ++j) {
        if (eq.exponents[j] == 0) continue;
        prod = prod * z[j].rounded_to(w).pow(eq.exponents[j]);
    }
    Complex alpha = eq.constant.evaluate(w);
    return ((prod - alpha).abs() / alpha.abs()).rounded_to(precision_bits);
}

Point sample_on_subtorus(const TorusEquation& eq, std::uint64_t seed, mpfr_prec_t precision_bits) {
    const int n = static_cast<int>(eq.exponents.size());
    int pivot = -1;
    for (int j = 0; j < n; ++j)
        if (eq.exponents[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) throw DegenerateEquation("all exponents are zero");

    const mpfr_prec_t w = guarded(precision_bits, equation_condition(eq));
    Point z(n, Complex::one(w));
    for (int j = 0; j < n; ++j) {
        if (j == pivot) continue;
        z[j] = unit_coordinate(rng::derive(seed, static_cast<std::uint64_t>(j)), w);
    }
    // solve prod z^p = alpha for the pivot coordinate, principal branch
    Complex rest = eq.constant.evaluate(w);
    for (int j = 0; j < n; ++j) {
        if (j == pivot || eq.exponents[j] == 0) continue;
        rest = rest * z[j].pow(-eq.exponents[j]);
    }
    z[pivot] = rest.root(eq.exponents[pivot]);
    for (auto& c : z) c = c.rounded_to(precision_bits);
    return z;
}

Point sample_unit_torus(int n, std::uint64_t seed, mpfr_prec_t precision_bits) {
    Point z;
    z.reserve(n);
    for (int j = 0; j < n; ++j)
        z.push_back(unit_coordinate(rng::derive(seed, static_cast<std::uint64_t>(j)), precision_bits));
    return z;
}

VerifyReport verify_diffeo(const CenteringCertificate& cert, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.trials_per_equation = opts.trials;
    rep.precision_bits = opts.precision_bits;
    rep.tolerance = opts.tolerance;
    rep.seed = opts.seed;
    rep.min_off_subtorus_residual = Real::nan(opts.precision_bits);

    const int m = cert.source.size();
    const Real tol = Real::of_double(opts.tolerance, opts.precision_bits);
    const Real guard = Real::of_double(rep.guard_factor, opts.precision_bits);
    bool ok = true;

    // The whole trial pipeline runs at a working precision guarded by the
    // chain and equation condition bounds, so the reported residuals reflect
    // the requested precision even for ill-conditioned certificates.
    mpz_class worst_eq_cond = 1;
    for (const auto& eq : cert.target.equations())
        worst_eq_cond = std::max(worst_eq_cond, equation_condition(eq));
    const mpfr_prec_t w = guarded(opts.precision_bits, condition_bound(cert.chain) * worst_eq_cond);

    // stream s = 1..m: on-subtorus trials for equation s; stream 0: complement
    for (int i = 0; i < m; ++i) {
        Real worst = Real::of_long(0, opts.precision_bits);
        for (int t = 0; t < opts.trials; ++t) {
            std::uint64_t point_seed =
                rng::derive(rng::derive(opts.seed, static_cast<std::uint64_t>(i) + 1), static_cast<std::uint64_t>(t));
            Point z = sample_on_subtorus(cert.source.equation(i), point_seed, w);
            Point image = apply_point(cert.chain, z, w);
            Real r = residual(cert.target.equation(i), image, w).rounded_to(opts.precision_bits);
            if (r > worst) worst = r;
        }
        rep.on_subtorus.push_back(EquationResidual{i + 1, worst});
        if (opts.trials > 0 && !(worst < tol)) {
            ok = false;
            rep.failing_equations.push_back(i + 1);
        }
    }

    rep.complement_requested = opts.trials;
    const int n = cert.source.ambient_dim();
    for (int t = 0; t < opts.trials; ++t) {
        std::uint64_t point_seed = rng::derive(rng::derive(opts.seed, 0), static_cast<std::uint64_t>(t));
        Point z = sample_unit_torus(n, point_seed, w);
        bool near_source = false;
        for (int i = 0; i < m && !near_source; ++i)
            if (residual(cert.source.equation(i), z, opts.precision_bits) < tol) near_source = true;
        if (near_source) {
            ++rep.complement_rejected;
            continue;
        }
        ++rep.complement_accepted;
        Point image = apply_point(cert.chain, z, w);
        for (int i = 0; i < m; ++i) {
            Real r = residual(cert.target.equation(i), image, w).rounded_to(opts.precision_bits);
            if (rep.min_off_subtorus_residual.is_nan() || r < rep.min_off_subtorus_residual)
                rep.min_off_subtorus_residual = r;
            if (!(r > tol * guard)) {
                ok = false;
                rep.failing_complement_targets.push_back(i + 1);
            }
        }
    }

    rep.pass = ok;
    return rep;
}

}  // namespace toric
