#include "corospec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace corospec {

RealPolynomial::RealPolynomial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(0.0);
}

double RealPolynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RealPolynomial RealPolynomial::derivative() const {
    if (degree() == 0)
        return RealPolynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * double(i);
    return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::operator*(const RealPolynomial& rhs) const {
    std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::operator+(const RealPolynomial& rhs) const {
    std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::operator-(const RealPolynomial& rhs) const {
    std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::scaled(double s) const {
    std::vector<double> out = coeffs_;
    for (double& c : out) c *= s;
    return RealPolynomial(std::move(out));
}

double RealPolynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (double c : coeffs_)
        m = std::max(m, std::fabs(c));
    return m;
}

namespace {

// One or two safeguarded Newton steps; multiplicity-aware callers polish
// against the appropriate derivative so roots stay simple here.
double polish(const RealPolynomial& p, const RealPolynomial& dp, double x) {
    for (int it = 0; it < 2; ++it) {
        const double fp = dp.eval(x);
        if (fp == 0.0)
            break;
        const double step = p.eval(x) / fp;
        if (!std::isfinite(step))
            break;
        x -= step;
    }
    return x;
}

std::vector<double> roots_linear(const std::vector<double>& c) {
    return {-c[0] / c[1]};
}

std::vector<double> roots_quadratic(const std::vector<double>& c, double rel_tol) {
    const double a = c[2], b = c[1], k = c[0];
    const double disc = b * b - 4.0 * a * k;
    const double scale = std::max({b * b, std::fabs(4.0 * a * k), 1e-300});
    if (disc < -rel_tol * scale)
        return {}; // complex pair
    if (disc <= rel_tol * scale) {
        const double r = -b / (2.0 * a);
        return {r, r};
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    double r1 = q / a;
    double r2 = (q != 0.0) ? k / q : -b / a - r1;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

// Trigonometric/Cardano cubic. Returns 1 or 3 roots (with multiplicity).
std::vector<double> roots_cubic(const std::vector<double>& c, double rel_tol) {
    const double a2 = c[2] / c[3];
    const double a1 = c[1] / c[3];
    const double a0 = c[0] / c[3];
    // depressed: t^3 + p t + q with x = t - a2/3
    const double shift = a2 / 3.0;
    const double p = a1 - a2 * a2 / 3.0;
    const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    const double scale = std::max({std::fabs(p * p * p), q * q, 1e-300});
    const double disc = -4.0 * p * p * p - 27.0 * q * q; // >= 0 iff all roots real

    std::vector<double> t;
    if (disc >= -rel_tol * scale) {
        if (p >= 0.0) {
            // disc >= 0 with p >= 0 forces p ~ q ~ 0: triple root.
            const double r = std::cbrt(-q);
            t = {r, r, r};
        } else {
            const double m = 2.0 * std::sqrt(-p / 3.0);
            const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
            const double theta = std::acos(arg) / 3.0;
            for (int k = 0; k < 3; ++k)
                t.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
        }
    } else if (p >= 0.0) {
        const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        t = {std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s)};
    } else {
        const double m = std::sqrt(-p / 3.0);
        const double arg = std::max(-3.0 * std::fabs(q) / (2.0 * p * m), 1.0);
        t = {-2.0 * std::copysign(1.0, q) * m * std::cosh(std::acosh(arg) / 3.0)};
    }
    std::vector<double> roots;
    for (double v : t)
        roots.push_back(v - shift);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

std::vector<double> solve_real_polynomial(const RealPolynomial& p) {
    const int deg = p.degree();
    if (deg < 1 || deg > 4)
        throw std::invalid_argument("solve_real_polynomial supports degree 1..4");
    const auto& c = p.coefficients();
    constexpr double rel_tol = 1e-12;

    std::vector<double> roots;
    switch (deg) {
        case 1: roots = roots_linear(c); break;
        case 2: roots = roots_quadratic(c, rel_tol); break;
        case 3: roots = roots_cubic(c, rel_tol); break;
        case 4: {
            // Isolate with the critical points, then bisect sign changes.
            const RealPolynomial dp = p.derivative();
            std::vector<double> crit = solve_real_polynomial(dp);
            crit.erase(std::unique(crit.begin(), crit.end(),
                                   [](double a, double b) {
                                       return std::fabs(a - b) <= 1e-9;
                                   }),
                       crit.end());
            double bound = 0.0;
            for (int i = 0; i < 4; ++i)
                bound = std::max(bound, std::fabs(c[i] / c[4]));
            bound += 1.0;
            std::vector<double> pts{-bound};
            pts.insert(pts.end(), crit.begin(), crit.end());
            pts.push_back(bound);

            const double res_tol =
                1e-9 * std::max(1.0, p.max_abs_coefficient()) *
                std::max(1.0, bound);
            // Multiple roots sit at critical points.
            for (double x : crit) {
                if (std::fabs(p.eval(x)) <= res_tol) {
                    int mult = 2;
                    RealPolynomial d2 = dp.derivative();
                    if (std::fabs(d2.eval(x)) <= res_tol) {
                        mult = 3;
                        if (std::fabs(d2.derivative().eval(x)) <= res_tol)
                            mult = 4;
                    }
                    roots.insert(roots.end(), mult, x);
                }
            }
            for (size_t i = 0; i + 1 < pts.size(); ++i) {
                double lo = pts[i], hi = pts[i + 1];
                double flo = p.eval(lo), fhi = p.eval(hi);
                if (std::fabs(flo) <= res_tol || std::fabs(fhi) <= res_tol)
                    continue; // endpoint roots handled above
                if (flo * fhi > 0.0)
                    continue;
                for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::fabs(lo)); ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = p.eval(mid);
                    if (fm == 0.0) { lo = hi = mid; break; }
                    if (flo * fm < 0.0) { hi = mid; fhi = fm; }
                    else { lo = mid; flo = fm; }
                }
                roots.push_back(polish(p, dp, 0.5 * (lo + hi)));
            }
            std::sort(roots.begin(), roots.end());
            break;
        }
    }

    if (deg <= 3) {
        // Polish simple roots; multiple roots are already accurate from the
        // closed forms and Newton would divide by ~0 there.
        const RealPolynomial dp = p.derivative();
        for (double& r : roots) {
            const bool repeated =
                std::count_if(roots.begin(), roots.end(), [&](double x) {
                    return std::fabs(x - r) <= 1e-7 * (1.0 + std::fabs(r));
                }) > 1;
            if (!repeated)
                r = polish(p, dp, r);
        }
        std::sort(roots.begin(), roots.end());
    }
    return roots;
}

} // namespace corospec
