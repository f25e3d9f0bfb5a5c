#include "toric/arrangement.hpp"

#include <utility>

#include "toric/errors.hpp"

namespace toric {

std::string TorusEquation::to_string(char var) const {
    std::string out;
    for (size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] == 0) continue;
        if (!out.empty()) out += " ";
        out += var;
        out += std::to_string(j + 1);
        if (exponents[j] != 1) out += "^" + exponents[j].get_str();
    }
    if (out.empty()) out = "1";
    return out + " = " + constant.to_string();
}

ToricArrangement::ToricArrangement(int ambient_dim, std::vector<TorusEquation> equations)
    : n_(ambient_dim), eqs_(std::move(equations)) {
    if (n_ < 1) throw ShapeMismatch("ambient dimension must be >= 1");
    for (const auto& eq : eqs_)
        if (static_cast<int>(eq.exponents.size()) != n_)
            throw ShapeMismatch("equation exponent vector length differs from ambient dimension");
}

IntMatrix associated_matrix(const ToricArrangement& a) {
    if (a.size() == 0) throw EmptyArrangement("arrangement has no equations");
    IntMatrix m(a.size(), a.ambient_dim());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.ambient_dim(); ++j) m(i, j) = a.equation(i).exponents[j];
    return m;
}

bool is_complexified(const ToricArrangement& a) {
    for (const auto& eq : a.equations())
        if (!eq.constant.is_unit_modulus()) return false;
    return true;
}

bool is_centered(const ToricArrangement& a) {
    for (const auto& eq : a.equations())
        if (!eq.constant.is_one()) return false;
    return true;
}

Hypothesis validate_hypothesis(const ToricArrangement& a) {
    const int m = a.size(), n = a.ambient_dim();
    if (m == 0) throw EmptyArrangement("arrangement has no equations");
    if (m > n)
        throw TooManyEquations("m = " + std::to_string(m) + " equations in ambient dimension n = " +
                               std::to_string(n));
    int r = rank(associated_matrix(a));
    if (r < m)
        throw RankDeficient("associated matrix has rank " + std::to_string(r) + " < m = " + std::to_string(m));
    return Hypothesis{m, n};
}

}  // namespace toric
