#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/intmat.hpp"
#include "toric/maps.hpp"
#include "toric/scalar.hpp"

namespace toric {

struct Step1Result {
    Permutation sigma;       // pivot columns moved to the front
    IntMatrix h;             // unimodular column transform of the leading minor
    IntMatrix k;             // h^-1, exact integer inverse
    IntMatrix u;             // minor * h, upper triangular with positive diagonal
    MonomialMap monomial;    // block-diagonal [k | identity]
    ToricArrangement after;  // input pushed through sigma then the monomial map
};

// Permute pivot columns to the front and triangularize the leading minor.
// The resulting arrangement has associated matrix [u | rest]; constants are
// untouched. Throws the validate_hypothesis errors.
Step1Result step1_triangularize(const ToricArrangement& a);

struct CenteringStepResult {
    ToricArrangement after;      // constants of equations m-k+1..m now equal 1
    ExactScalar gamma;           // chosen d-th root
    ExactScalar root_of;         // the constant gamma was extracted from
    mpz_class degree;            // d_{m-k+1}
    TranslationMap translation;  // scale = gamma^-1 at the pivot coordinate, 1 elsewhere
};

// Rescaling number k (1-based): extracts a d-th root of the constant of
// equation m-k+1 and divides that coordinate by it. Requires equations
// m-k+2..m to be centered already (PreconditionViolated otherwise).
CenteringStepResult centering_step(const ToricArrangement& c_prev, int k, const IntMatrix& u,
                                   const mpz_class& branch = 0);

/// Everything needed to replay and independently check one centering run.
struct CenteringCertificate {
    Permutation sigma;
    IntMatrix h, k, u;
    std::vector<ExactScalar> gammas;         // application order: pivot m, m-1, ..., 1
    std::vector<ExactScalar> gamma_roots_of; // gammas[j]^gamma_degrees[j] == gamma_roots_of[j]
    std::vector<mpz_class> gamma_degrees;
    std::vector<mpz_class> branch_indices;
    DiffeoChain chain;  // [sigma, monomial, translation_1, ..., translation_m]
    ToricArrangement source;
    ToricArrangement target;

    // The m single-coordinate rescalings act on distinct coordinates and
    // commute; this is their product as one map.
    TranslationMap folded_translation() const;
};

// Full pipeline. branch_indices, when given, must have one entry per
// equation (application order) and selects the root branches.
CenteringCertificate center(const ToricArrangement& a, const std::vector<mpz_class>& branch_indices = {});

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string why) {
        ok = false;
        failures.push_back(std::move(why));
    }
};

// Exact re-derivation: unimodularity of h, triangular shape of u, the root
// identities, and a bit-exact replay of the chain from source to target.
CertificateCheck verify_certificate_exact(const CenteringCertificate& cert);

}  // namespace toric
