#include "vpf/quasi_polynomial.hpp"

#include <numeric>
#include <sstream>

namespace vpf {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::scaled(const Rational& k) const {
    std::vector<Rational> c = coeffs_;
    Rational p = 1;
    for (auto& x : c) {
        x *= p;
        p *= k;
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(const Rational& s) const {
    Polynomial result;
    Polynomial base = Polynomial::constant(1);
    Polynomial lin({s, Rational(1)});
    for (const auto& c : coeffs_) {
        result = result + Polynomial::constant(c) * base;
        base = base * lin;
    }
    return result;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = mag == 1 && i > 0;
        if (!unit) os << mag.get_str();
        if (i > 0) os << (unit ? "" : "*") << var;
        if (i > 1) os << '^' << i;
        first = false;
    }
    return os.str();
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw Error(ErrorKind::DimensionMismatch, "interpolation data length mismatch");
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    Polynomial result;
    Polynomial basis = Polynomial::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        result = result + Polynomial::constant(dd[i]) * basis;
        basis = basis * Polynomial({-xs[i], Rational(1)});
    }
    return result;
}

Polynomial binomial_polynomial(const Integer& beta, unsigned long k) {
    Polynomial p = Polynomial::constant(1);
    for (unsigned long i = 1; i <= k; ++i) {
        Rational inv_i(1, static_cast<long>(i));
        Rational slope = Rational(1) / Rational(beta);
        slope *= inv_i;
        p = p * Polynomial({Rational(1), slope});
    }
    return p;
}

QuasiPolynomial::QuasiPolynomial(std::size_t period, std::vector<Polynomial> constituents)
    : period_(period), constituents_(std::move(constituents)) {
    if (period_ == 0 || constituents_.size() != period_)
        throw Error(ErrorKind::InvalidArgument, "quasi-polynomial needs one constituent per residue");
}

const Polynomial& QuasiPolynomial::constituent(const Integer& t) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), t.get_mpz_t(), period_);
    return constituents_[r.get_ui()];
}

int QuasiPolynomial::degree() const {
    int d = -1;
    for (const auto& c : constituents_) d = std::max(d, c.degree());
    return d;
}

Rational QuasiPolynomial::operator()(const Integer& t) const { return constituent(t)(Rational(t)); }

QuasiPolynomial QuasiPolynomial::minimized() const {
    for (std::size_t p = 1; p <= period_; ++p) {
        if (period_ % p != 0) continue;
        bool ok = true;
        for (std::size_t r = p; r < period_ && ok; ++r) ok = constituents_[r] == constituents_[r % p];
        if (ok) return QuasiPolynomial(p, std::vector<Polynomial>(constituents_.begin(), constituents_.begin() + p));
    }
    return *this;
}

QuasiPolynomial QuasiPolynomial::compose_scale(const Integer& k) const {
    if (k <= 0) throw Error(ErrorKind::InvalidArgument, "scale must be positive");
    Integer g;
    Integer n = static_cast<unsigned long>(period_);
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), k.get_mpz_t());
    std::size_t np = static_cast<std::size_t>(Integer(n / g).get_ui());
    std::vector<Polynomial> cs;
    for (std::size_t r = 0; r < np; ++r) cs.push_back(constituent(k * static_cast<unsigned long>(r)).scaled(Rational(k)));
    return QuasiPolynomial(np, std::move(cs)).minimized();
}

}  // namespace vpf
