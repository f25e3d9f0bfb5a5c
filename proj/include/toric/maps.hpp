#pragma once

#include <gmpxx.h>

#include <variant>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/intmat.hpp"
#include "toric/mpreal.hpp"
#include "toric/scalar.hpp"

namespace toric {

/// Coordinate permutation: output slot k takes input coordinate source[k]
/// (0-based). The same reindexing acts on points and on exponent vectors.
struct Permutation {
    std::vector<int> source;

    static Permutation identity(int n);
    // Validates that `source` is a permutation of 0..n-1.
    static Permutation from_source(std::vector<int> source);

    int size() const { return static_cast<int>(source.size()); }

    bool operator==(const Permutation& o) const { return source == o.source; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
};

/// Monomial self-map of (C*)^n: t_i = prod_j z_j^forward(i,j). The exponent
/// matrix is unimodular, so the exact integer inverse `backward` exists and
/// the map is a diffeomorphism with z_i = prod_l t_l^backward(i,l).
class MonomialMap {
  public:
    // backward computed with unimodular_inverse; throws NotUnimodular.
    static MonomialMap from_forward(IntMatrix forward);
    // Validates forward * backward = backward * forward = identity.
    MonomialMap(IntMatrix forward, IntMatrix backward);

    const IntMatrix& forward() const { return fwd_; }
    const IntMatrix& backward() const { return bwd_; }
    int size() const { return fwd_.rows(); }

    bool operator==(const MonomialMap& o) const { return fwd_ == o.fwd_; }
    bool operator!=(const MonomialMap& o) const { return !(*this == o); }

  private:
    IntMatrix fwd_, bwd_;
};

// Block-diagonal [block | identity]: acts by `block` on the first m
// coordinates and fixes the rest.
MonomialMap monomial_from_block(const IntMatrix& block, int n);

/// Componentwise translation t'_i = t_i * scale[i].
struct TranslationMap {
    std::vector<ExactScalar> scale;

    static TranslationMap identity(int n);
    int size() const { return static_cast<int>(scale.size()); }

    bool operator==(const TranslationMap& o) const { return scale == o.scale; }
    bool operator!=(const TranslationMap& o) const { return !(*this == o); }
};

using DiffeoStep = std::variant<Permutation, MonomialMap, TranslationMap>;

/// Ordered composition of steps, applied left to right.
class DiffeoChain {
  public:
    DiffeoChain() = default;
    explicit DiffeoChain(std::vector<DiffeoStep> steps) : steps_(std::move(steps)) {}

    void push_back(DiffeoStep s) { steps_.push_back(std::move(s)); }
    const std::vector<DiffeoStep>& steps() const { return steps_; }

    bool operator==(const DiffeoChain& o) const { return steps_ == o.steps_; }
    bool operator!=(const DiffeoChain& o) const { return !(*this == o); }

  private:
    std::vector<DiffeoStep> steps_;
};

Permutation invert(const Permutation& p);
MonomialMap invert(const MonomialMap& m);
TranslationMap invert(const TranslationMap& t);
DiffeoStep invert(const DiffeoStep& s);
DiffeoChain invert(const DiffeoChain& c);

using Point = std::vector<Complex>;

// Point transport at the requested precision. Monomial and translation steps
// run with guard bits scaled to the map's condition bound; the result is
// rounded back to precision_bits. Throws ZeroCoordinate.
Point apply_point(const Permutation& p, const Point& z, mpfr_prec_t precision_bits);
Point apply_point(const MonomialMap& m, const Point& z, mpfr_prec_t precision_bits);
Point apply_point(const TranslationMap& t, const Point& z, mpfr_prec_t precision_bits);
Point apply_point(const DiffeoStep& s, const Point& z, mpfr_prec_t precision_bits);
Point apply_point(const DiffeoChain& c, const Point& z, mpfr_prec_t precision_bits);

// Equation transport. Permutation reindexes exponents; a monomial map sends
// the exponent row p to p * backward; a translation multiplies the constant
// by prod_j scale[j]^p_j. All exact.
TorusEquation pushforward_equation(const Permutation& p, const TorusEquation& eq);
TorusEquation pushforward_equation(const MonomialMap& m, const TorusEquation& eq);
TorusEquation pushforward_equation(const TranslationMap& t, const TorusEquation& eq);
TorusEquation pushforward_equation(const DiffeoStep& s, const TorusEquation& eq);
TorusEquation pushforward_equation(const DiffeoChain& c, const TorusEquation& eq);

template <class Map>
ToricArrangement pushforward_arrangement(const Map& map, const ToricArrangement& a) {
    std::vector<TorusEquation> eqs;
    eqs.reserve(a.equations().size());
    for (const auto& eq : a.equations()) eqs.push_back(pushforward_equation(map, eq));
    return ToricArrangement(a.ambient_dim(), std::move(eqs));
}

// Worst-case relative-error amplification of point transport: 1 for a
// permutation, max absolute row sum for a monomial map, 1 for a translation;
// multiplicative along a chain.
mpz_class condition_bound(const MonomialMap& m);
mpz_class condition_bound(const DiffeoChain& c);

}  // namespace toric
