#include "toric/json_io.hpp"

#include <cmath>
#include <fstream>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

namespace {

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("not a rational: '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

mpz_class parse_integer(const std::string& s) {
    mpz_class z;
    if (s.empty() || mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("not an integer: '" + s + "'");
    return z;
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return mpz_class(j.get<long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer (number or decimal string), got " + j.dump());
}

json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p() && abs(z) < mpz_class(1) << 53) return json(z.get_si());
    return json(z.get_str());
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw ParseError(std::string("field '") + name + "' must be an integer");
    return v.get<int>();
}

}  // namespace

int digits_for(mpfr_prec_t precision_bits) {
    return static_cast<int>(std::ceil(precision_bits * 0.30103)) + 2;
}

json scalar_to_json(const ExactScalar& s) {
    if (s.is_unit_modulus()) {
        if (s.turns() == 0) return json("1");
        if (s.turns() == mpq_class(1, 2)) return json("-1");
        if (s.turns() == mpq_class(1, 4)) return json("i");
        if (s.turns() == mpq_class(3, 4)) return json("-i");
    }
    json mod = json::object();
    for (const auto& [p, e] : s.modulus_exponents()) mod[p.get_str()] = e.get_str();
    return json{{"modulus", std::move(mod)}, {"turns", s.turns().get_str()}};
}

ExactScalar scalar_from_json(const json& j, const mpz_class& factor_bound) {
    try {
        if (j.is_string()) {
            const std::string s = j.get<std::string>();
            if (s == "1") return ExactScalar::one();
            if (s == "-1") return ExactScalar::from_parts({}, mpq_class(1, 2));
            if (s == "i") return ExactScalar::from_parts({}, mpq_class(1, 4));
            if (s == "-i") return ExactScalar::from_parts({}, mpq_class(3, 4));
            throw ParseError("unknown scalar shorthand '" + s +
                             "' (use \"1\", \"-1\", \"i\", \"-i\" or an object)");
        }
        if (!j.is_object()) throw ParseError("scalar must be a string shorthand or an object");
        if (j.contains("rational"))
            return ExactScalar::from_rational(parse_rational(field(j, "rational").get<std::string>()),
                                              factor_bound);
        ExactScalar::ExponentMap mod;
        if (j.contains("modulus")) {
            const json& m = j.at("modulus");
            if (!m.is_object()) throw ParseError("'modulus' must be an object of prime -> exponent");
            for (auto it = m.begin(); it != m.end(); ++it)
                mod[parse_integer(it.key())] = parse_rational(it.value().get<std::string>());
        }
        mpq_class turns = 0;
        if (j.contains("turns")) turns = parse_rational(j.at("turns").get<std::string>());
        return ExactScalar::from_parts(std::move(mod), std::move(turns));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(mpz_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& j) {
    try {
        int rows = int_field(j, "rows"), cols = int_field(j, "cols");
        const json& entries = field(j, "entries");
        if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
            throw ParseError("'entries' must be an array of " + std::to_string(rows) + " rows");
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            const json& row = entries.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != cols)
                throw ParseError("matrix row " + std::to_string(i + 1) + " must have " +
                                 std::to_string(cols) + " entries");
            for (int c = 0; c < cols; ++c) m(i, c) = mpz_from_json(row.at(c));
        }
        return m;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

json equation_to_json(const TorusEquation& eq) {
    json exps = json::array();
    for (const auto& p : eq.exponents) exps.push_back(mpz_to_json(p));
    return json{{"exponents", std::move(exps)}, {"constant", scalar_to_json(eq.constant)}};
}

TorusEquation equation_from_json(const json& j) {
    const json& exps = field(j, "exponents");
    if (!exps.is_array() || exps.empty()) throw ParseError("'exponents' must be a nonempty array");
    TorusEquation eq;
    for (const auto& e : exps) eq.exponents.push_back(mpz_from_json(e));
    eq.constant = scalar_from_json(field(j, "constant"));
    return eq;
}

json arrangement_to_json(const ToricArrangement& a) {
    json eqs = json::array();
    for (const auto& eq : a.equations()) eqs.push_back(equation_to_json(eq));
    return json{{"ambient_dim", a.ambient_dim()}, {"equations", std::move(eqs)}};
}

ToricArrangement arrangement_from_json(const json& j) {
    try {
        int n = int_field(j, "ambient_dim");
        const json& eqs = field(j, "equations");
        if (!eqs.is_array()) throw ParseError("'equations' must be an array");
        std::vector<TorusEquation> parsed;
        for (const auto& e : eqs) parsed.push_back(equation_from_json(e));
        return ToricArrangement(n, std::move(parsed));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

namespace {

json permutation_to_json(const Permutation& p) {
    json arr = json::array();
    for (int s : p.source) arr.push_back(s + 1);
    return arr;
}

Permutation permutation_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("permutation must be a nonempty array");
    std::vector<int> src;
    for (const auto& v : j) {
        if (!v.is_number_integer() && !v.is_number_unsigned())
            throw ParseError("permutation entries must be integers");
        src.push_back(v.get<int>() - 1);
    }
    return Permutation::from_source(std::move(src));
}

json step_to_json(const DiffeoStep& s) {
    if (const auto* p = std::get_if<Permutation>(&s))
        return json{{"kind", "permutation"}, {"perm", permutation_to_json(*p)}};
    if (const auto* m = std::get_if<MonomialMap>(&s))
        return json{{"kind", "monomial"},
                    {"forward", matrix_to_json(m->forward())},
                    {"backward", matrix_to_json(m->backward())}};
    const auto& t = std::get<TranslationMap>(s);
    json scale = json::array();
    for (const auto& g : t.scale) scale.push_back(scalar_to_json(g));
    return json{{"kind", "translation"}, {"scale", std::move(scale)}};
}

DiffeoStep step_from_json(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "permutation") return permutation_from_json(field(j, "perm"));
    if (kind == "monomial")
        return MonomialMap(matrix_from_json(field(j, "forward")), matrix_from_json(field(j, "backward")));
    if (kind == "translation") {
        const json& scale = field(j, "scale");
        if (!scale.is_array()) throw ParseError("'scale' must be an array");
        TranslationMap t;
        for (const auto& g : scale) t.scale.push_back(scalar_from_json(g));
        return t;
    }
    throw ParseError("unknown step kind '" + kind + "'");
}

}  // namespace

json chain_to_json(const DiffeoChain& c) {
    json steps = json::array();
    for (const auto& s : c.steps()) steps.push_back(step_to_json(s));
    return json{{"steps", std::move(steps)}};
}

DiffeoChain chain_from_json(const json& j) {
    try {
        const json& steps = field(j, "steps");
        if (!steps.is_array()) throw ParseError("'steps' must be an array");
        DiffeoChain c;
        for (const auto& s : steps) c.push_back(step_from_json(s));
        return c;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

json certificate_to_json(const CenteringCertificate& cert) {
    json gammas = json::array(), roots_of = json::array(), degrees = json::array(), branches = json::array();
    for (const auto& g : cert.gammas) gammas.push_back(scalar_to_json(g));
    for (const auto& r : cert.gamma_roots_of) roots_of.push_back(scalar_to_json(r));
    for (const auto& d : cert.gamma_degrees) degrees.push_back(mpz_to_json(d));
    for (const auto& b : cert.branch_indices) branches.push_back(mpz_to_json(b));
    json folded = json::array();
    for (const auto& s : cert.folded_translation().scale) folded.push_back(scalar_to_json(s));
    return json{{"sigma", permutation_to_json(cert.sigma)},
                {"H", matrix_to_json(cert.h)},
                {"K", matrix_to_json(cert.k)},
                {"U", matrix_to_json(cert.u)},
                {"gammas", std::move(gammas)},
                {"gamma_roots_of", std::move(roots_of)},
                {"gamma_degrees", std::move(degrees)},
                {"branch_indices", std::move(branches)},
                {"chain", chain_to_json(cert.chain)},
                {"folded_translation", std::move(folded)},
                {"source", arrangement_to_json(cert.source)},
                {"target", arrangement_to_json(cert.target)}};
}

CenteringCertificate certificate_from_json(const json& j) {
    try {
        Permutation sigma = permutation_from_json(field(j, "sigma"));
        IntMatrix h = matrix_from_json(field(j, "H"));
        IntMatrix k = matrix_from_json(field(j, "K"));
        IntMatrix u = matrix_from_json(field(j, "U"));
        std::vector<ExactScalar> gammas, roots_of;
        for (const auto& g : field(j, "gammas")) gammas.push_back(scalar_from_json(g));
        for (const auto& r : field(j, "gamma_roots_of")) roots_of.push_back(scalar_from_json(r));
        std::vector<mpz_class> degrees, branches;
        for (const auto& d : field(j, "gamma_degrees")) degrees.push_back(mpz_from_json(d));
        for (const auto& b : field(j, "branch_indices")) branches.push_back(mpz_from_json(b));
        DiffeoChain chain = chain_from_json(field(j, "chain"));
        ToricArrangement source = arrangement_from_json(field(j, "source"));
        ToricArrangement target = arrangement_from_json(field(j, "target"));
        return CenteringCertificate{std::move(sigma),   std::move(h),        std::move(k),
                                    std::move(u),       std::move(gammas),   std::move(roots_of),
                                    std::move(degrees), std::move(branches), std::move(chain),
                                    std::move(source),  std::move(target)};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

json report_to_json(const VerifyReport& rep) {
    const int digits = digits_for(rep.precision_bits);
    json on = json::array();
    for (const auto& e : rep.on_subtorus)
        on.push_back(json{{"equation", e.equation}, {"max_residual", e.max_residual.to_string(digits)}});
    json complement{{"requested", rep.complement_requested},
                    {"accepted", rep.complement_accepted},
                    {"rejected", rep.complement_rejected},
                    {"min_off_subtorus_residual", rep.min_off_subtorus_residual.is_nan()
                                                      ? json(nullptr)
                                                      : json(rep.min_off_subtorus_residual.to_string(digits))},
                    {"failing_targets", rep.failing_complement_targets}};
    return json{{"trials_per_equation", rep.trials_per_equation},
                {"precision_bits", static_cast<long>(rep.precision_bits)},
                {"tolerance", rep.tolerance},
                {"guard_factor", rep.guard_factor},
                {"seed", rep.seed},
                {"on_subtorus", std::move(on)},
                {"failing_equations", rep.failing_equations},
                {"complement", std::move(complement)},
                {"verdict", rep.pass ? "pass" : "fail"}};
}

json point_to_json(const Point& z, int digits) {
    json coords = json::array();
    for (const auto& c : z) coords.push_back(json::array({c.re().to_string(digits), c.im().to_string(digits)}));
    return coords;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace toric
