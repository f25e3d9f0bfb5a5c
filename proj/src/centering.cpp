#include "toric/centering.hpp"

#include <utility>

#include "toric/errors.hpp"

namespace toric {

Step1Result step1_triangularize(const ToricArrangement& a) {
    const auto [m, n] = validate_hypothesis(a);
    IntMatrix assoc = associated_matrix(a);
    Permutation sigma = Permutation::from_source(select_pivot_columns(assoc));
    ToricArrangement permuted = pushforward_arrangement(sigma, a);

    IntMatrix minor(m, m);
    IntMatrix permuted_assoc = associated_matrix(permuted);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) minor(i, j) = permuted_assoc(i, j);

    HnfResult hnf = column_hnf_triangularize(minor);
    IntMatrix k = unimodular_inverse(hnf.h);
    MonomialMap monomial = monomial_from_block(k, n);
    ToricArrangement after = pushforward_arrangement(monomial, permuted);
    return Step1Result{std::move(sigma), std::move(hnf.h), std::move(k),
                       std::move(hnf.u), std::move(monomial), std::move(after)};
}

CenteringStepResult centering_step(const ToricArrangement& c_prev, int k, const IntMatrix& u,
                                   const mpz_class& branch) {
    const int m = c_prev.size();
    if (k < 1 || k > m) throw PreconditionViolated("step index k outside 1..m");
    const int pivot = m - k;  // 0-based coordinate m-k+1
    for (int i = pivot + 1; i < m; ++i)
        if (!c_prev.equation(i).constant.is_one())
            throw PreconditionViolated("equation " + std::to_string(i + 1) +
                                       " is not centered before step " + std::to_string(k));
    const mpz_class& d = u(pivot, pivot);
    if (d <= 0) throw PreconditionViolated("diagonal entry d_" + std::to_string(pivot + 1) + " not positive");

    const ExactScalar& alpha = c_prev.equation(pivot).constant;
    ExactScalar gamma = alpha.root(d, branch);

    TranslationMap tr = TranslationMap::identity(c_prev.ambient_dim());
    tr.scale[pivot] = gamma.inverse();
    ToricArrangement after = pushforward_arrangement(tr, c_prev);

    // gamma^d = alpha makes the pivot equation land exactly on 1
    if (!after.equation(pivot).constant.is_one())
        throw PreconditionViolated("root identity failed at step " + std::to_string(k));

    return CenteringStepResult{std::move(after), std::move(gamma), alpha, d, std::move(tr)};
}

TranslationMap CenteringCertificate::folded_translation() const {
    TranslationMap folded = TranslationMap::identity(source.ambient_dim());
    const int m = static_cast<int>(gammas.size());
    for (int k = 1; k <= m; ++k) folded.scale[m - k] = gammas[k - 1].inverse();
    return folded;
}

CenteringCertificate center(const ToricArrangement& a, const std::vector<mpz_class>& branch_indices) {
    Step1Result s1 = step1_triangularize(a);
    const int m = a.size();
    if (!branch_indices.empty() && static_cast<int>(branch_indices.size()) != m)
        throw PreconditionViolated("branch index list must have one entry per equation");

    DiffeoChain chain;
    chain.push_back(s1.sigma);
    chain.push_back(s1.monomial);

    std::vector<ExactScalar> gammas, roots_of;
    std::vector<mpz_class> degrees, branches;
    ToricArrangement current = s1.after;
    for (int k = 1; k <= m; ++k) {
        mpz_class b = branch_indices.empty() ? mpz_class(0) : branch_indices[k - 1];
        CenteringStepResult step = centering_step(current, k, s1.u, b);
        chain.push_back(step.translation);
        gammas.push_back(std::move(step.gamma));
        roots_of.push_back(std::move(step.root_of));
        degrees.push_back(std::move(step.degree));
        branches.push_back(std::move(b));
        current = std::move(step.after);
    }

    return CenteringCertificate{std::move(s1.sigma), std::move(s1.h),     std::move(s1.k),
                                std::move(s1.u),     std::move(gammas),   std::move(roots_of),
                                std::move(degrees),  std::move(branches), std::move(chain),
                                a,                   std::move(current)};
}

namespace {

// chain structure [sigma, monomial with blocks (K, H), one translation per
// step], the recorded root constants against the replayed intermediates, and
// the full pushforward against the target.
void check_chain_and_replay(const CenteringCertificate& cert, CertificateCheck& check) {
    const int m = cert.source.size();
    const int n = cert.source.ambient_dim();

    const auto& steps = cert.chain.steps();
    if (static_cast<int>(steps.size()) == m + 2 && std::holds_alternative<Permutation>(steps[0]) &&
        std::holds_alternative<MonomialMap>(steps[1])) {
        if (std::get<Permutation>(steps[0]) != cert.sigma) check.fail("chain permutation differs from sigma");
        const MonomialMap& mono = std::get<MonomialMap>(steps[1]);
        if (mono.size() == n) {
            bool blocks_match = true;
            for (int i = 0; i < n && blocks_match; ++i)
                for (int j = 0; j < n && blocks_match; ++j) {
                    mpz_class want_f = i < m && j < m ? cert.k(i, j) : mpz_class(i == j ? 1 : 0);
                    mpz_class want_b = i < m && j < m ? cert.h(i, j) : mpz_class(i == j ? 1 : 0);
                    if (mono.forward()(i, j) != want_f || mono.backward()(i, j) != want_b) blocks_match = false;
                }
            if (!blocks_match) check.fail("chain monomial map differs from [K | identity]");
        } else {
            check.fail("chain monomial map has wrong dimension");
        }
        // walk the rescalings: each must divide the pivot coordinate by its
        // gamma, and the constant it roots must match the recorded one
        ToricArrangement stage = pushforward_arrangement(std::get<MonomialMap>(steps[1]),
                                                         pushforward_arrangement(cert.sigma, cert.source));
        for (int k = 1; k <= m; ++k) {
            const int pivot = m - k;
            if (!std::holds_alternative<TranslationMap>(steps[k + 1])) {
                check.fail("chain step " + std::to_string(k + 2) + " is not a translation");
                break;
            }
            const TranslationMap& tr = std::get<TranslationMap>(steps[k + 1]);
            if (tr.size() != n) {
                check.fail("translation " + std::to_string(k) + " has wrong dimension");
                break;
            }
            for (int j = 0; j < n; ++j) {
                const ExactScalar want = j == pivot ? cert.gammas[k - 1].inverse() : ExactScalar::one();
                if (tr.scale[j] != want) {
                    check.fail("translation " + std::to_string(k) + " does not divide by gamma at the pivot");
                    break;
                }
            }
            if (stage.equation(pivot).constant != cert.gamma_roots_of[k - 1])
                check.fail("recorded constant for gamma " + std::to_string(k) +
                           " differs from the replayed intermediate");
            stage = pushforward_arrangement(tr, stage);
        }
    } else {
        check.fail("chain is not [permutation, monomial, translations...]");
    }

    // replay the chain and compare equation by equation
    ToricArrangement replay = pushforward_arrangement(cert.chain, cert.source);
    if (replay.ambient_dim() != cert.target.ambient_dim() || replay.size() != cert.target.size()) {
        check.fail("replayed arrangement has wrong shape");
        return;
    }
    for (int i = 0; i < m; ++i) {
        if (replay.equation(i).exponents != cert.target.equation(i).exponents)
            check.fail("equation " + std::to_string(i + 1) + ": replayed exponents differ from target");
        if (replay.equation(i).constant != cert.target.equation(i).constant)
            check.fail("equation " + std::to_string(i + 1) + ": replayed constant differs from target");
    }
}

}  // namespace

CertificateCheck verify_certificate_exact(const CenteringCertificate& cert) {
    CertificateCheck check;
    const int m = cert.source.size();
    const int n = cert.source.ambient_dim();

    if (cert.sigma.size() != n) {
        check.fail("sigma is not a permutation of 1..n");
        return check;
    }
    if (cert.h.rows() != m || cert.h.cols() != m || cert.k.rows() != m || cert.k.cols() != m ||
        cert.u.rows() != m || cert.u.cols() != m) {
        check.fail("matrix dimensions do not match the equation count");
        return check;
    }

    mpz_class dh = det(cert.h);
    if (dh != 1 && dh != -1) check.fail("H is not unimodular (det " + dh.get_str() + ")");
    IntMatrix id = IntMatrix::identity(m);
    if (mat_mul(cert.h, cert.k) != id || mat_mul(cert.k, cert.h) != id)
        check.fail("K is not the inverse of H");

    if (!is_upper_triangular(cert.u)) check.fail("U is not upper triangular");
    for (int i = 0; i < m; ++i)
        if (cert.u(i, i) <= 0) check.fail("U diagonal entry d_" + std::to_string(i + 1) + " not positive");

    // U must be the permuted leading minor times H
    ToricArrangement permuted = pushforward_arrangement(cert.sigma, cert.source);
    IntMatrix permuted_assoc = associated_matrix(permuted);
    IntMatrix minor(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) minor(i, j) = permuted_assoc(i, j);
    if (mat_mul(minor, cert.h) != cert.u) check.fail("U differs from (permuted minor) * H");

    if (static_cast<int>(cert.gammas.size()) != m || static_cast<int>(cert.gamma_degrees.size()) != m ||
        static_cast<int>(cert.gamma_roots_of.size()) != m) {
        check.fail("gamma lists do not have one entry per equation");
        return check;
    }
    for (int k = 1; k <= m; ++k) {
        const int pivot = m - k;
        if (cert.gamma_degrees[k - 1] != cert.u(pivot, pivot))
            check.fail("degree of gamma " + std::to_string(k) + " differs from d_" + std::to_string(pivot + 1));
        if (cert.gammas[k - 1].pow(cert.gamma_degrees[k - 1]) != cert.gamma_roots_of[k - 1])
            check.fail("gamma " + std::to_string(k) + " is not a d-th root of its recorded constant");
    }

    // a foreign certificate can carry dimension-inconsistent steps, so the
    // replay reports instead of throwing
    try {
        check_chain_and_replay(cert, check);
    } catch (const Error& e) {
        check.fail(std::string("replay raised: ") + e.what());
    }

    if (!is_centered(cert.target)) check.fail("target arrangement is not centered");
    return check;
}

}  // namespace toric
