#ifndef SPECGRAPH_INTPOLY_HPP
#define SPECGRAPH_INTPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace specgraph {

// Dense integer-coefficient univariate polynomial, coefficients ascending by
// degree. The zero polynomial has no coefficients. All arithmetic is exact.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly constant(long c);
    static IntPoly monomial(int degree, long c = 1);
    // (x + c)^k
    static IntPoly linear_power(long c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Zero beyond the stored degree.
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    // P(x + c)
    IntPoly shifted(long c) const;
    // P(x^2)
    IntPoly of_square() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& c) const;
    bool operator==(const IntPoly& o) const = default;

    // Ascending coefficients, space separated, exact decimal integers.
    std::string to_string() const;
    static IntPoly from_string(const std::string& text);

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

}  // namespace specgraph

#endif
