// Command-line front end: inspect arrangements, center them, emit and verify
// certificates, sample subtorus points.
//
// Exit codes: 0 success, 2 unreadable/invalid input, 3 internal self-check
// failure, 4 hypothesis violation, 5 verification failure, 6 bad equation
// index, 1 anything else.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "toric/centering.hpp"
#include "toric/errors.hpp"
#include "toric/json_io.hpp"
#include "toric/rng.hpp"
#include "toric/verify.hpp"

namespace {

using namespace toric;

constexpr int kExitParse = 2;
constexpr int kExitSelfCheck = 3;
constexpr int kExitHypothesis = 4;
constexpr int kExitVerifyFail = 5;
constexpr int kExitBadIndex = 6;

struct CommonOpts {
    std::string input;
    std::string output;
    long precision_bits = 128;
    double tolerance = 1e-25;
    int trials = 64;
    std::uint64_t seed = 0;
    bool json_out = false;
};

void emit(const CommonOpts& opts, const json& j, const std::string& human) {
    if (!opts.output.empty()) save_json_file(opts.output, j);
    if (opts.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

int run_info(const CommonOpts& opts) {
    ToricArrangement a = arrangement_from_json(load_json_file(opts.input));
    IntMatrix assoc = associated_matrix(a);
    int r = rank(assoc);

    std::string hypothesis = "OK";
    try {
        validate_hypothesis(a);
    } catch (const RankDeficient&) {
        hypothesis = "FAILS (rank " + std::to_string(r) + " < m " + std::to_string(a.size()) + ")";
    } catch (const TooManyEquations&) {
        hypothesis = "FAILS (m " + std::to_string(a.size()) + " > n " + std::to_string(a.ambient_dim()) + ")";
    }

    json j{{"m", a.size()},
           {"n", a.ambient_dim()},
           {"rank", r},
           {"associated_matrix", matrix_to_json(assoc)},
           {"complexified", is_complexified(a)},
           {"centered", is_centered(a)},
           {"hypothesis", hypothesis}};

    std::string human;
    human += "m=" + std::to_string(a.size()) + " n=" + std::to_string(a.ambient_dim()) +
             " rank=" + std::to_string(r) + "\n";
    human += "associated matrix: " + assoc.to_string() + "\n";
    for (int i = 0; i < a.size(); ++i)
        human += "  H" + std::to_string(i + 1) + ": " + a.equation(i).to_string('z') + "\n";
    human += std::string("complexified: ") + (is_complexified(a) ? "true" : "false") + "\n";
    human += std::string("centered: ") + (is_centered(a) ? "true" : "false") + "\n";
    human += "hypothesis: " + hypothesis + "\n";
    emit(opts, j, human);
    return 0;
}

int run_center(const CommonOpts& opts, const std::vector<long>& branch_indices) {
    ToricArrangement a = arrangement_from_json(load_json_file(opts.input));
    std::vector<mpz_class> branches(branch_indices.begin(), branch_indices.end());

    CenteringCertificate cert = center(a, branches);
    CertificateCheck check = verify_certificate_exact(cert);
    if (!check.ok) {
        std::cerr << "internal self-check failed:\n";
        for (const auto& f : check.failures) std::cerr << "  " << f << "\n";
        return kExitSelfCheck;
    }

    json j = certificate_to_json(cert);
    std::string human;
    const int m = cert.source.size();
    for (int k = 1; k <= m; ++k)
        human += "gamma_" + std::to_string(m - k + 1) + " (coordinate " + std::to_string(m - k + 1) +
                 ", degree " + cert.gamma_degrees[k - 1].get_str() + ") = " + cert.gammas[k - 1].to_string() +
                 "\n";
    human += "target (centered):\n";
    for (int i = 0; i < m; ++i)
        human += "  T" + std::to_string(i + 1) + ": " + cert.target.equation(i).to_string('t') + "\n";
    emit(opts, j, human);
    return 0;
}

int run_verify(const CommonOpts& opts) {
    CenteringCertificate cert = certificate_from_json(load_json_file(opts.input));

    CertificateCheck exact = verify_certificate_exact(cert);

    std::string human;
    human += std::string("exact check: ") + (exact.ok ? "pass" : "fail") + "\n";
    for (const auto& f : exact.failures) human += "  " + f + "\n";

    if (!exact.ok) {
        // an exactly-invalid certificate is not worth replaying numerically
        json j{{"exact_check", "fail"}, {"exact_failures", exact.failures}, {"verdict", "fail"}};
        human += "verdict: FAIL\n";
        emit(opts, j, human);
        return kExitVerifyFail;
    }

    VerifyOptions vo;
    vo.trials = opts.trials;
    vo.precision_bits = static_cast<mpfr_prec_t>(opts.precision_bits);
    vo.tolerance = opts.tolerance;
    vo.seed = opts.seed;
    VerifyReport rep = verify_diffeo(cert, vo);

    json j = report_to_json(rep);
    j["exact_check"] = "pass";

    const int digits = digits_for(rep.precision_bits);
    for (const auto& e : rep.on_subtorus)
        human += "equation " + std::to_string(e.equation) +
                 ": max residual = " + e.max_residual.to_string(digits) + "\n";
    human += "complement: " + std::to_string(rep.complement_accepted) + " accepted, " +
             std::to_string(rep.complement_rejected) + " rejected\n";
    human += std::string("verdict: ") + (rep.pass ? "PASS" : "FAIL") + "\n";
    emit(opts, j, human);
    return rep.pass ? 0 : kExitVerifyFail;
}

int run_sample(const CommonOpts& opts, int equation_index, int count) {
    ToricArrangement a = arrangement_from_json(load_json_file(opts.input));
    if (equation_index < 1 || equation_index > a.size())
        throw BadIndex("equation index " + std::to_string(equation_index) + " outside 1.." +
                       std::to_string(a.size()));
    const TorusEquation& eq = a.equation(equation_index - 1);
    const auto prec = static_cast<mpfr_prec_t>(opts.precision_bits);
    const int digits = digits_for(prec);

    json points = json::array();
    std::string human;
    for (int t = 0; t < count; ++t) {
        std::uint64_t point_seed = rng::derive(opts.seed, static_cast<std::uint64_t>(t));
        Point z = sample_on_subtorus(eq, point_seed, prec);
        Real r = residual(eq, z, prec);
        points.push_back(json{{"coordinates", point_to_json(z, digits)}, {"residual", r.to_string(digits)}});
        human += "point " + std::to_string(t + 1) + ": residual " + r.to_string(6) + "\n";
    }
    json j{{"equation", equation_index},
           {"count", count},
           {"seed", opts.seed},
           {"precision_bits", opts.precision_bits},
           {"points", std::move(points)}};
    emit(opts, j, human);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact centering of toric arrangements with maximal-rank exponent matrix"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<long> branch_indices;
    int equation_index = 1;
    int count = 4;

    auto add_common = [&](CLI::App* sub, bool with_numeric) {
        sub->add_option("-i,--input", opts.input, "input JSON file")->required();
        sub->add_option("-o,--output", opts.output, "write JSON result here");
        sub->add_flag("--json", opts.json_out, "print JSON to stdout instead of text");
        if (with_numeric) {
            sub->add_option("--precision-bits", opts.precision_bits, "working precision (>= 53)")
                ->check(CLI::Range(53L, 1000000L));
            sub->add_option("--seed", opts.seed, "sampling seed");
        }
    };

    CLI::App* info = app.add_subcommand("info", "summarize an arrangement file");
    add_common(info, false);

    CLI::App* center_cmd = app.add_subcommand("center", "produce a centering certificate");
    add_common(center_cmd, false);
    center_cmd->add_option("--branch-indices", branch_indices, "root branch per step, e.g. 0,1,0")
        ->delimiter(',');

    CLI::App* verify_cmd = app.add_subcommand("verify", "replay a certificate numerically");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--trials", opts.trials, "sample points per equation")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--tolerance", opts.tolerance, "residual tolerance")->check(CLI::PositiveNumber);

    CLI::App* sample_cmd = app.add_subcommand("sample", "emit points on one subtorus");
    add_common(sample_cmd, true);
    sample_cmd->add_option("--equation", equation_index, "1-based equation index");
    sample_cmd->add_option("--count", count, "number of points")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return run_info(opts);
        if (center_cmd->parsed()) return run_center(opts, branch_indices);
        if (verify_cmd->parsed()) return run_verify(opts);
        if (sample_cmd->parsed()) return run_sample(opts, equation_index, count);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const RankDeficient& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const TooManyEquations& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const EmptyArrangement& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const BadIndex& e) {
        std::cerr << e.what() << "\n";
        return kExitBadIndex;
    } catch (const DegenerateEquation& e) {
        std::cerr << "DegenerateEquation: " << e.what() << "\n";
        return kExitBadIndex;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
