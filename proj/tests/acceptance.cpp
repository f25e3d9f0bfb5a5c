// Acceptance suite: exercises the whole pipeline end to end and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gen.hpp"
#include "toric/centering.hpp"
#include "toric/errors.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {

constexpr std::uint64_t kCorpusSeed = 20260808;
constexpr int kCorpusSize = 200;

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_secs(double secs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    return buf;
}

TorusEquation eq(std::vector<long> exps, ExactScalar c) {
    TorusEquation e;
    e.exponents.assign(exps.begin(), exps.end());
    e.constant = std::move(c);
    return e;
}

ExactScalar minus_one() { return ExactScalar::from_parts({}, mpq_class(1, 2)); }

std::vector<ToricArrangement> build_corpus() {
    std::vector<ToricArrangement> corpus;
    corpus.emplace_back(2, std::vector<TorusEquation>{eq({2, 4}, minus_one())});
    corpus.emplace_back(2, std::vector<TorusEquation>{eq({1, 2}, minus_one()), eq({1, 1}, ExactScalar::one())});
    testgen::Rng rng(kCorpusSeed);
    while (static_cast<int>(corpus.size()) < kCorpusSize)
        corpus.push_back(testgen::random_arrangement(rng, 6));
    return corpus;
}

// 1. center() produces an exactly centered target with a valid certificate
//    on the whole corpus, quickly.
void criterion_exact_centering(const std::vector<ToricArrangement>& corpus,
                               std::vector<CenteringCertificate>& certs) {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (size_t i = 0; i < corpus.size() && pass; ++i) {
        certs.push_back(center(corpus[i]));
        const CenteringCertificate& cert = certs.back();
        if (!is_centered(cert.target)) {
            pass = false;
            detail = "target of corpus[" + std::to_string(i) + "] is not centered";
        }
        CertificateCheck check = verify_certificate_exact(cert);
        if (!check.ok) {
            pass = false;
            detail = "certificate of corpus[" + std::to_string(i) + "]: " + check.failures.front();
        }
    }
    double secs = seconds_since(start);
    if (pass && secs >= 5.0) {
        pass = false;
        detail = "took " + fmt_secs(secs) + " (budget 5 s)";
    }
    if (pass)
        detail = std::to_string(corpus.size()) + " arrangements centered and exact-verified in " +
                 fmt_secs(secs);
    report(1, "exact centering over the random corpus", pass, detail);
}

// 2. Canonical triangularization properties over >= 1000 random nonsingular
//    matrices.
void criterion_hnf_properties() {
    auto start = std::chrono::steady_clock::now();
    testgen::Rng rng(kCorpusSeed + 1);
    bool pass = true;
    std::string detail;
    const int rounds = 1000;
    for (int t = 0; t < rounds && pass; ++t) {
        int n = static_cast<int>(rng.in(1, 6));
        IntMatrix mat = testgen::random_nonsingular(rng, n);
        HnfResult r = column_hnf_triangularize(mat);
        mpz_class dh = det(r.h);
        if (mat_mul(mat, r.h) != r.u) {
            pass = false;
            detail = "U != M*H";
        } else if (dh != 1 && dh != -1) {
            pass = false;
            detail = "det H = " + dh.get_str();
        } else if (!is_upper_triangular(r.u)) {
            pass = false;
            detail = "U not upper triangular";
        } else {
            for (int i = 0; i < n; ++i) {
                if (r.u(i, i) <= 0) {
                    pass = false;
                    detail = "nonpositive diagonal";
                }
                for (int j = i + 1; j < n; ++j)
                    if (r.u(i, j) < 0 || r.u(i, j) >= r.u(i, i)) {
                        pass = false;
                        detail = "entry not reduced mod the diagonal";
                    }
            }
        }
    }
    double secs = seconds_since(start);
    if (pass && secs >= 5.0) {
        pass = false;
        detail = "took " + fmt_secs(secs) + " (budget 5 s)";
    }
    if (pass) detail = std::to_string(rounds) + " matrices in " + fmt_secs(secs);
    report(2, "unimodular triangularization properties", pass, detail);
}

// 3. The coordinate change of the construction is exactly invertible on
//    equations and numerically invertible on points.
void criterion_round_trip(const std::vector<ToricArrangement>& corpus,
                          const std::vector<CenteringCertificate>& certs) {
    bool pass = true;
    std::string detail;

    for (size_t i = 0; i < corpus.size() && pass; ++i) {
        const CenteringCertificate& cert = certs[i];
        // the monomial change of coordinates alone, on the permuted source
        ToricArrangement permuted = pushforward_arrangement(cert.sigma, cert.source);
        const auto& mono = std::get<MonomialMap>(cert.chain.steps()[1]);
        if (pushforward_arrangement(invert(mono), pushforward_arrangement(mono, permuted)) != permuted) {
            pass = false;
            detail = "monomial round trip broke corpus[" + std::to_string(i) + "]";
        }
        // and the full chain
        DiffeoChain inv = invert(cert.chain);
        if (pushforward_arrangement(inv, pushforward_arrangement(cert.chain, cert.source)) != cert.source) {
            pass = false;
            detail = "chain round trip broke corpus[" + std::to_string(i) + "]";
        }
    }

    // 64 random points spread over the corpus: chain then inverse chain
    const mpfr_prec_t p = 128;
    Real bound = ldexp(Real::of_long(1, p), -112);
    testgen::Rng rng(kCorpusSeed + 2);
    for (int t = 0; t < 64 && pass; ++t) {
        const CenteringCertificate& cert = certs[t % certs.size()];
        const int n = cert.source.ambient_dim();
        Point z = sample_unit_torus(n, rng.eng(), p);
        DiffeoChain inv = invert(cert.chain);
        Point back = apply_point(inv, apply_point(cert.chain, z, p), p);
        for (int j = 0; j < n; ++j)
            if (!((back[j] - z[j]).abs() < bound * z[j].abs())) {
                pass = false;
                detail = "numeric round trip above 2^-112 on point " + std::to_string(t);
            }
    }
    if (pass) detail = "exact on all arrangements, 64 numeric points below 2^-112";
    report(3, "coordinate-change round-trip identities", pass, detail);
}

// 4. Numeric replay passes everywhere, and residuals scale with precision.
void criterion_numeric_replay(const std::vector<CenteringCertificate>& certs) {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (size_t i = 0; i < certs.size() && pass; ++i) {
        VerifyOptions o128;
        o128.trials = 64;
        o128.precision_bits = 128;
        o128.tolerance = 1e-25;
        VerifyReport r128 = verify_diffeo(certs[i], o128);
        if (!r128.pass) {
            pass = false;
            detail = "verify_diffeo failed on corpus[" + std::to_string(i) + "]";
            break;
        }
        VerifyOptions o256 = o128;
        o256.precision_bits = 256;
        VerifyReport r256 = verify_diffeo(certs[i], o256);
        for (size_t e = 0; e < r128.on_subtorus.size(); ++e) {
            Real hi = r128.on_subtorus[e].max_residual.rounded_to(300);
            Real lo = r256.on_subtorus[e].max_residual.rounded_to(300);
            if (lo.is_zero()) continue;  // exactly satisfied at both precisions
            if (!(ldexp(lo, 32) <= hi)) {
                pass = false;
                detail = "residual shrink below 2^32 on corpus[" + std::to_string(i) + "] equation " +
                         std::to_string(e + 1);
            }
        }
    }
    if (pass)
        detail = "trials=64 tol=1e-25 pass at 128 bits; 256-bit residuals at least 2^32 smaller (" +
                 fmt_secs(seconds_since(start)) + ")";
    report(4, "numeric diffeomorphism replay", pass, detail);
}

// 5. The two worked examples come out exactly as computed by hand.
void criterion_worked_examples() {
    bool pass = true;
    std::string detail;

    CenteringCertificate one = center(ToricArrangement(2, {eq({2, 4}, minus_one())}));
    ExactScalar imag_unit = ExactScalar::from_parts({}, mpq_class(1, 4));
    if (one.gammas != std::vector<ExactScalar>{imag_unit}) {
        pass = false;
        detail = "gamma of z1^2 z2^4 = -1 is not i";
    }
    if (one.target.equation(0).exponents != std::vector<mpz_class>{2, 4} ||
        !one.target.equation(0).constant.is_one()) {
        pass = false;
        detail = "target of z1^2 z2^4 = -1 is not t1^2 t2^4 = 1";
    }

    CenteringCertificate two =
        center(ToricArrangement(2, {eq({1, 2}, minus_one()), eq({1, 1}, ExactScalar::one())}));
    bool coord_subtori = two.target.equation(0).exponents == std::vector<mpz_class>{1, 0} &&
                         two.target.equation(1).exponents == std::vector<mpz_class>{0, 1} &&
                         is_centered(two.target);
    if (!coord_subtori) {
        pass = false;
        detail = "pair does not center to {t1 = 1, t2 = 1}";
    }
    if (two.gammas != std::vector<ExactScalar>{ExactScalar::one(), minus_one()}) {
        pass = false;
        detail = "pair gammas differ from (1, -1)";
    }
    if (pass) detail = "gamma = i and target {t1 = 1, t2 = 1} reproduced";
    report(5, "worked examples reproduce exactly", pass, detail);
}

// 6. Any admissible branch vector yields a valid certificate.
void criterion_branch_independence(const std::vector<ToricArrangement>& corpus,
                                   const std::vector<CenteringCertificate>& certs) {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    int covered = 0, variants = 0;
    for (size_t i = 0; i < corpus.size() && pass; ++i) {
        mpz_class combos = 1;
        for (const auto& d : certs[i].gamma_degrees) combos *= d;
        if (combos > 8) continue;
        ++covered;
        std::vector<mpz_class> branches(certs[i].gamma_degrees.size(), 0);
        for (mpz_class idx = 0; idx < combos && pass; ++idx) {
            mpz_class rest = idx;
            for (size_t k = 0; k < branches.size(); ++k) {
                branches[k] = rest % certs[i].gamma_degrees[k];
                rest /= certs[i].gamma_degrees[k];
            }
            ++variants;
            CenteringCertificate cert = center(corpus[i], branches);
            if (!verify_certificate_exact(cert).ok) {
                pass = false;
                detail = "exact check failed for a branch of corpus[" + std::to_string(i) + "]";
            }
            VerifyOptions opts;
            opts.trials = 16;
            VerifyReport rep = verify_diffeo(cert, opts);
            if (!rep.pass) {
                pass = false;
                detail = "numeric replay failed for a branch of corpus[" + std::to_string(i) + "]";
            }
        }
    }
    if (pass && covered < 10) {
        pass = false;
        detail = "only " + std::to_string(covered) + " corpus arrangements have d-product <= 8";
    }
    if (pass)
        detail = std::to_string(variants) + " branch vectors over " + std::to_string(covered) +
                 " arrangements all valid (" + fmt_secs(seconds_since(start)) + ")";
    report(6, "branch independence of root choices", pass, detail);
}

// 7. Hypothesis gating and closure of the complexified class.
void criterion_hypothesis_gating() {
    bool pass = true;
    std::string detail;

    ToricArrangement deficient(2, {eq({1, 2}, ExactScalar::one()), eq({2, 4}, minus_one())});
    try {
        center(deficient);
        pass = false;
        detail = "rank-deficient input was not rejected";
    } catch (const RankDeficient&) {
    }

    ToricArrangement crowded(2, {eq({1, 0}, ExactScalar::one()), eq({0, 1}, ExactScalar::one()),
                                 eq({1, 1}, minus_one())});
    try {
        center(crowded);
        pass = false;
        detail = "m > n input was not rejected";
    } catch (const TooManyEquations&) {
    }

    // complexified inputs never leave the unit circle at any stage
    testgen::Rng rng(kCorpusSeed + 3);
    for (int t = 0; t < 50 && pass; ++t) {
        ToricArrangement a = testgen::random_arrangement(rng, 6, /*complexified=*/true);
        CenteringCertificate cert = center(a);
        ToricArrangement stage = cert.source;
        for (const auto& step : cert.chain.steps()) {
            stage = pushforward_arrangement(step, stage);
            for (const auto& e : stage.equations())
                if (!e.constant.is_unit_modulus()) {
                    pass = false;
                    detail = "intermediate constant left the unit circle";
                }
        }
        for (const auto& g : cert.gammas)
            if (!g.is_unit_modulus()) {
                pass = false;
                detail = "a gamma left the unit circle";
            }
        if (!is_centered(cert.target)) {
            pass = false;
            detail = "complexified input did not center";
        }
    }
    if (pass) detail = "RankDeficient / TooManyEquations raised; complexified stages stay unit-modulus";
    report(7, "hypothesis gating and complexified closure", pass, detail);
}

}  // namespace

int main() {
    std::vector<ToricArrangement> corpus = build_corpus();
    std::vector<CenteringCertificate> certs;
    certs.reserve(corpus.size());

    criterion_exact_centering(corpus, certs);
    criterion_hnf_properties();
    criterion_round_trip(corpus, certs);
    criterion_numeric_replay(certs);
    criterion_worked_examples();
    criterion_branch_independence(corpus, certs);
    criterion_hypothesis_gating();

    if (failures == 0)
        std::printf("all 7 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
