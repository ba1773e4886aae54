#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vpf/exactmath.hpp"

namespace vpf {

/// Univariate polynomial with rational coefficients, lowest degree first, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial constant(const Rational& c);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }

    Rational operator()(const Rational& t) const;

    /// p(k t).
    Polynomial scaled(const Rational& k) const;
    /// p(t + s).
    Polynomial shifted(const Rational& s) const;

    std::string to_string(const std::string& var = "t") const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < xs.size() through the points (Newton form).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// C(t/beta + k, k) as a polynomial in t.
Polynomial binomial_polynomial(const Integer& beta, unsigned long k);

/// Quasi-polynomial: constituent (t mod period) evaluated at t.
class QuasiPolynomial {
public:
    QuasiPolynomial() : period_(1), constituents_(1) {}
    QuasiPolynomial(std::size_t period, std::vector<Polynomial> constituents);
    static QuasiPolynomial polynomial(Polynomial p) { return QuasiPolynomial(1, {std::move(p)}); }

    std::size_t period() const { return period_; }
    const std::vector<Polynomial>& constituents() const { return constituents_; }
    const Polynomial& constituent(const Integer& t) const;
    int degree() const;
    bool is_polynomial() const { return period_ == 1; }

    Rational operator()(const Integer& t) const;

    /// Smallest period whose constituents reproduce this one.
    QuasiPolynomial minimized() const;
    /// t -> q(k t) for a positive integer k.
    QuasiPolynomial compose_scale(const Integer& k) const;

    friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
        return a.period_ == b.period_ && a.constituents_ == b.constituents_;
    }

private:
    std::size_t period_;
    std::vector<Polynomial> constituents_;
};

}  // namespace vpf
