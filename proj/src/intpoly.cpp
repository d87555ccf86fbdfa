#include "specgraph/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace specgraph {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(long c) {
    if (c == 0) return IntPoly();
    return IntPoly({mpz_class(c)});
}

IntPoly IntPoly::monomial(int degree, long c) {
    if (c == 0) return IntPoly();
    std::vector<mpz_class> v(degree + 1, 0);
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_power(long c, int k) {
    IntPoly p = constant(1);
    IntPoly lin({mpz_class(c), mpz_class(1)});
    for (int i = 0; i < k; ++i) p = p * lin;
    return p;
}

const mpz_class& IntPoly::coeff(int k) const {
    static const mpz_class zero = 0;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::shifted(long c) const {
    // Horner in x+c: acc(x) <- acc(x)*(x+c) + coeff.
    IntPoly acc;
    IntPoly lin({mpz_class(c), mpz_class(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + IntPoly({*it});
    return acc;
}

IntPoly IntPoly::of_square() const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> v(coeffs_.size() * 2 - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const mpz_class& c) const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ' ';
        s += coeffs_[i].get_str();
    }
    return s;
}

IntPoly IntPoly::from_string(const std::string& text) {
    std::istringstream in(text);
    std::vector<mpz_class> v;
    std::string tok;
    while (in >> tok) v.emplace_back(tok);
    return IntPoly(std::move(v));
}

}  // namespace specgraph
