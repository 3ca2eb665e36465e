#pragma once

#include <vector>

namespace corospec {

// Real polynomial, coefficients ascending by degree. Exactly-zero leading
// coefficients are trimmed on construction.
class RealPolynomial {
public:
    explicit RealPolynomial(std::vector<double> coefficients);

    static RealPolynomial linear(double c0, double c1) {
        return RealPolynomial({c0, c1});
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    double eval(double x) const; // Horner
    RealPolynomial derivative() const;

    RealPolynomial operator*(const RealPolynomial& rhs) const;
    RealPolynomial operator+(const RealPolynomial& rhs) const;
    RealPolynomial operator-(const RealPolynomial& rhs) const;
    RealPolynomial scaled(double s) const;

    double max_abs_coefficient() const;

private:
    std::vector<double> coeffs_;
};

// All real roots with multiplicity, ascending. Supports degree 1..4.
// Roots are polished so |p(root)| <= ~1e-10 * max|coefficient| at desk scale.
std::vector<double> solve_real_polynomial(const RealPolynomial& p);

} // namespace corospec
