#pragma once

#include <json.hpp>

#include <string>

#include "toric/arrangement.hpp"
#include "toric/centering.hpp"
#include "toric/intmat.hpp"
#include "toric/maps.hpp"
#include "toric/scalar.hpp"
#include "toric/verify.hpp"

namespace toric {

using json = nlohmann::json;

// Every *_from_json throws ParseError (and nothing else) on malformed input.

json scalar_to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const json& j,
                             const mpz_class& factor_bound = ExactScalar::default_factor_bound());

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json equation_to_json(const TorusEquation& eq);
TorusEquation equation_from_json(const json& j);

json arrangement_to_json(const ToricArrangement& a);
ToricArrangement arrangement_from_json(const json& j);

json chain_to_json(const DiffeoChain& c);
DiffeoChain chain_from_json(const json& j);

json certificate_to_json(const CenteringCertificate& cert);
CenteringCertificate certificate_from_json(const json& j);

json report_to_json(const VerifyReport& rep);

json point_to_json(const Point& z, int digits);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

// Significant decimal digits that preserve a binary precision.
int digits_for(mpfr_prec_t precision_bits);

}  // namespace toric
