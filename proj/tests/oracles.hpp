#pragma once

// Brute-force reference computations for cross-checking the library. These
// deliberately avoid the elimination code paths under test.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "toric/intmat.hpp"

namespace oracles {

// Leibniz expansion over all permutations.
inline mpz_class leibniz_det(const toric::IntMatrix& m) {
    const int n = m.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        mpz_class prod = (inversions % 2 == 0) ? 1 : -1;
        for (int i = 0; i < n; ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline bool next_combination(std::vector<int>& idx, int limit) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < limit - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Largest k admitting a k x k submatrix with nonzero determinant.
inline int brute_rank(const toric::IntMatrix& m) {
    for (int k = std::min(m.rows(), m.cols()); k >= 1; --k) {
        std::vector<int> ri(k);
        std::iota(ri.begin(), ri.end(), 0);
        do {
            std::vector<int> ci(k);
            std::iota(ci.begin(), ci.end(), 0);
            do {
                toric::IntMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
                if (leibniz_det(sub) != 0) return k;
            } while (next_combination(ci, m.cols()));
        } while (next_combination(ri, m.rows()));
    }
    return 0;
}

}  // namespace oracles
