#pragma once

#include <cstdint>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/centering.hpp"
#include "toric/maps.hpp"
#include "toric/mpreal.hpp"

namespace toric {

// Relative defect |prod z_j^p_j - alpha| / |alpha| at the given precision.
Real residual(const TorusEquation& eq, const Point& z, mpfr_prec_t precision_bits);

// Deterministic point on the subtorus: unit-circle draws for all coordinates
// except the first one with nonzero exponent, which is solved for via the
// principal root. Throws DegenerateEquation when every exponent is zero.
Point sample_on_subtorus(const TorusEquation& eq, std::uint64_t seed, mpfr_prec_t precision_bits);

// Uniform unit-circle point of (C*)^n.
Point sample_unit_torus(int n, std::uint64_t seed, mpfr_prec_t precision_bits);

struct VerifyOptions {
    int trials = 64;
    mpfr_prec_t precision_bits = 128;
    double tolerance = 1e-25;
    std::uint64_t seed = 0;
};

struct EquationResidual {
    int equation = 0;  // 1-based
    Real max_residual;
};

struct VerifyReport {
    int trials_per_equation = 0;
    mpfr_prec_t precision_bits = 128;
    double tolerance = 0;
    double guard_factor = 1.0;
    std::uint64_t seed = 0;

    std::vector<EquationResidual> on_subtorus;
    std::vector<int> failing_equations;  // 1-based, residual above tolerance

    int complement_requested = 0;
    int complement_accepted = 0;
    int complement_rejected = 0;  // drawn within tolerance of a source subtorus
    Real min_off_subtorus_residual;  // NaN when no complement trial was accepted
    std::vector<int> failing_complement_targets;  // 1-based target equations an image landed on

    bool pass = false;
};

// Pushes `trials` points per source subtorus through the chain and measures
// residuals against the matching target equation; additionally transports
// complement points and checks they stay off every target subtorus.
VerifyReport verify_diffeo(const CenteringCertificate& cert, const VerifyOptions& opts);

}  // namespace toric
