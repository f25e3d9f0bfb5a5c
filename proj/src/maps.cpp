#include "toric/maps.hpp"

#include <algorithm>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr mpfr_prec_t kPointGuardBits = 32;

mpfr_prec_t guarded_prec(mpfr_prec_t precision_bits, const mpz_class& condition) {
    size_t extra = mpz_sizeinbase(condition.get_mpz_t(), 2);
    return precision_bits + kPointGuardBits + static_cast<mpfr_prec_t>(extra);
}

void require_nonzero(const Point& z) {
    for (const auto& c : z)
        if (c.is_zero()) throw ZeroCoordinate("point has a zero coordinate");
}

}  // namespace

Permutation Permutation::identity(int n) {
    Permutation p;
    p.source.resize(n);
    for (int i = 0; i < n; ++i) p.source[i] = i;
    return p;
}

Permutation Permutation::from_source(std::vector<int> source) {
    std::vector<char> seen(source.size(), 0);
    for (int s : source) {
        if (s < 0 || s >= static_cast<int>(source.size()) || seen[s])
            throw ParseError("not a permutation of 0..n-1");
        seen[s] = 1;
    }
    Permutation p;
    p.source = std::move(source);
    return p;
}

MonomialMap MonomialMap::from_forward(IntMatrix forward) {
    IntMatrix backward = unimodular_inverse(forward);
    return MonomialMap(std::move(forward), std::move(backward));
}

MonomialMap::MonomialMap(IntMatrix forward, IntMatrix backward)
    : fwd_(std::move(forward)), bwd_(std::move(backward)) {
    if (fwd_.rows() != fwd_.cols() || bwd_.rows() != bwd_.cols() || fwd_.rows() != bwd_.rows())
        throw ShapeMismatch("monomial map matrices must be square of equal size");
    IntMatrix id = IntMatrix::identity(fwd_.rows());
    if (mat_mul(fwd_, bwd_) != id || mat_mul(bwd_, fwd_) != id)
        throw NotUnimodular("monomial map matrices are not mutually inverse");
}

MonomialMap monomial_from_block(const IntMatrix& block, int n) {
    if (block.rows() != block.cols()) throw NonSquare("monomial block must be square");
    if (block.rows() > n) throw ShapeMismatch("monomial block larger than ambient dimension");
    const int m = block.rows();
    IntMatrix fwd = IntMatrix::identity(n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) fwd(i, j) = block(i, j);
    return MonomialMap::from_forward(std::move(fwd));
}

TranslationMap TranslationMap::identity(int n) {
    TranslationMap t;
    t.scale.assign(n, ExactScalar::one());
    return t;
}

Permutation invert(const Permutation& p) {
    Permutation inv;
    inv.source.resize(p.source.size());
    for (int k = 0; k < p.size(); ++k) inv.source[p.source[k]] = k;
    return inv;
}

MonomialMap invert(const MonomialMap& m) { return MonomialMap(m.backward(), m.forward()); }

TranslationMap invert(const TranslationMap& t) {
    TranslationMap inv;
    inv.scale.reserve(t.scale.size());
    for (const auto& s : t.scale) inv.scale.push_back(s.inverse());
    return inv;
}

DiffeoStep invert(const DiffeoStep& s) {
    return std::visit([](const auto& m) -> DiffeoStep { return invert(m); }, s);
}

DiffeoChain invert(const DiffeoChain& c) {
    DiffeoChain inv;
    for (auto it = c.steps().rbegin(); it != c.steps().rend(); ++it) inv.push_back(invert(*it));
    return inv;
}

Point apply_point(const Permutation& p, const Point& z, mpfr_prec_t precision_bits) {
    if (p.size() != static_cast<int>(z.size())) throw ShapeMismatch("permutation size differs from point");
    require_nonzero(z);
    Point out;
    out.reserve(z.size());
    for (int k = 0; k < p.size(); ++k) out.push_back(z[p.source[k]].rounded_to(precision_bits));
    return out;
}

Point apply_point(const MonomialMap& m, const Point& z, mpfr_prec_t precision_bits) {
    if (m.size() != static_cast<int>(z.size())) throw ShapeMismatch("monomial map size differs from point");
    require_nonzero(z);
    const mpfr_prec_t w = guarded_prec(precision_bits, condition_bound(m));
    Point out;
    out.reserve(z.size());
    for (int i = 0; i < m.size(); ++i) {
        Complex acc = Complex::one(w);
        for (int j = 0; j < m.size(); ++j) {
            const mpz_class& e = m.forward()(i, j);
            if (e == 0) continue;
            acc = acc * z[j].rounded_to(w).pow(e);
        }
        out.push_back(acc.rounded_to(precision_bits));
    }
    return out;
}

Point apply_point(const TranslationMap& t, const Point& z, mpfr_prec_t precision_bits) {
    if (t.size() != static_cast<int>(z.size())) throw ShapeMismatch("translation size differs from point");
    require_nonzero(z);
    const mpfr_prec_t w = precision_bits + kPointGuardBits;
    Point out;
    out.reserve(z.size());
    for (size_t i = 0; i < z.size(); ++i)
        out.push_back((z[i].rounded_to(w) * t.scale[i].evaluate(w)).rounded_to(precision_bits));
    return out;
}

Point apply_point(const DiffeoStep& s, const Point& z, mpfr_prec_t precision_bits) {
    return std::visit([&](const auto& m) { return apply_point(m, z, precision_bits); }, s);
}

Point apply_point(const DiffeoChain& c, const Point& z, mpfr_prec_t precision_bits) {
    // one shared working precision across the chain; round once at the end
    const mpfr_prec_t w = guarded_prec(precision_bits, condition_bound(c));
    Point cur = z;
    for (const auto& s : c.steps()) cur = apply_point(s, cur, w);
    for (auto& coord : cur) coord = coord.rounded_to(precision_bits);
    return cur;
}

TorusEquation pushforward_equation(const Permutation& p, const TorusEquation& eq) {
    if (p.size() != static_cast<int>(eq.exponents.size()))
        throw ShapeMismatch("permutation size differs from equation");
    TorusEquation out;
    out.exponents.resize(eq.exponents.size());
    for (int k = 0; k < p.size(); ++k) out.exponents[k] = eq.exponents[p.source[k]];
    out.constant = eq.constant;
    return out;
}

TorusEquation pushforward_equation(const MonomialMap& m, const TorusEquation& eq) {
    if (m.size() != static_cast<int>(eq.exponents.size()))
        throw ShapeMismatch("monomial map size differs from equation");
    // substituting z = backward(t) into prod z^p = alpha gives exponents p * backward
    TorusEquation out;
    out.exponents.assign(eq.exponents.size(), 0);
    const IntMatrix& f = m.backward();
    for (int l = 0; l < m.size(); ++l)
        for (int j = 0; j < m.size(); ++j) out.exponents[l] += eq.exponents[j] * f(j, l);
    out.constant = eq.constant;
    return out;
}

TorusEquation pushforward_equation(const TranslationMap& t, const TorusEquation& eq) {
    if (t.size() != static_cast<int>(eq.exponents.size()))
        throw ShapeMismatch("translation size differs from equation");
    TorusEquation out;
    out.exponents = eq.exponents;
    ExactScalar c = eq.constant;
    for (size_t j = 0; j < t.scale.size(); ++j) {
        if (eq.exponents[j] == 0) continue;
        c = c.mul(t.scale[j].pow(eq.exponents[j]));
    }
    out.constant = std::move(c);
    return out;
}

TorusEquation pushforward_equation(const DiffeoStep& s, const TorusEquation& eq) {
    return std::visit([&](const auto& m) { return pushforward_equation(m, eq); }, s);
}

TorusEquation pushforward_equation(const DiffeoChain& c, const TorusEquation& eq) {
    TorusEquation cur = eq;
    for (const auto& s : c.steps()) cur = pushforward_equation(s, cur);
    return cur;
}

mpz_class condition_bound(const MonomialMap& m) {
    mpz_class worst = 1;
    for (int i = 0; i < m.size(); ++i) {
        mpz_class row = 0;
        for (int j = 0; j < m.size(); ++j) row += abs(m.forward()(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

mpz_class condition_bound(const DiffeoChain& c) {
    mpz_class bound = 1;
    for (const auto& s : c.steps())
        if (const auto* m = std::get_if<MonomialMap>(&s)) bound *= condition_bound(*m);
    return bound;
}

}  // namespace toric
