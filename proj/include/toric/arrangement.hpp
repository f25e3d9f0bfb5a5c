#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "toric/intmat.hpp"
#include "toric/scalar.hpp"

namespace toric {

/// One subtorus equation: prod_j z_j^exponents[j] = constant.
struct TorusEquation {
    std::vector<mpz_class> exponents;
    ExactScalar constant;

    bool operator==(const TorusEquation& o) const {
        return exponents == o.exponents && constant == o.constant;
    }
    bool operator!=(const TorusEquation& o) const { return !(*this == o); }

    // "z1^2 z2^4 = -1" with the given variable letter
    std::string to_string(char var = 'z') const;
};

/// Ordered collection of subtorus equations in (C*)^n. Order matters:
/// certificates refer to equations by index.
class ToricArrangement {
  public:
    ToricArrangement(int ambient_dim, std::vector<TorusEquation> equations);

    int ambient_dim() const { return n_; }
    const std::vector<TorusEquation>& equations() const { return eqs_; }
    const TorusEquation& equation(int i) const { return eqs_[i]; }  // 0-based
    int size() const { return static_cast<int>(eqs_.size()); }

    bool operator==(const ToricArrangement& o) const { return n_ == o.n_ && eqs_ == o.eqs_; }
    bool operator!=(const ToricArrangement& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<TorusEquation> eqs_;
};

// m x n matrix of exponent rows.
IntMatrix associated_matrix(const ToricArrangement& a);

// All constants on the unit circle.
bool is_complexified(const ToricArrangement& a);

// All constants equal to 1.
bool is_centered(const ToricArrangement& a);

struct Hypothesis {
    int m;
    int n;
};

// Checks m >= 1, n >= m and rank(associated_matrix) == m; throws
// EmptyArrangement / TooManyEquations / RankDeficient.
Hypothesis validate_hypothesis(const ToricArrangement& a);

}  // namespace toric
