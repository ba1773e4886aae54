#include "vpf/partition.hpp"

#include <algorithm>
#include <numeric>

#include "vpf/lp.hpp"

namespace vpf {

namespace {

using u128 = unsigned __int128;

const Integer kSafe = Integer(1) << 62;

std::int64_t narrow(const Integer& v) {
    if (abs(v) >= kSafe) throw Error(ErrorKind::Overflow, "value " + v.get_str() + " exceeds the 64-bit counter range");
    return v.get_si();
}

Integer widen(u128 v) {
    Integer hi = static_cast<unsigned long>(v >> 64);
    Integer lo = static_cast<unsigned long>(v & ~std::uint64_t(0));
    return (hi << 64) + lo;
}

Integer max_abs(const IntMatrix& m) {
    Integer best = 0;
    for (const auto& e : m.entries()) best = std::max<Integer>(best, abs(e));
    return best;
}

}  // namespace

IntVector positive_functional(const IntMatrix& A) {
    const std::size_t d = A.rows();
    LinearProgram lp(d + 1);
    lp.set_all_free();
    for (std::size_t j = 0; j < A.cols(); ++j) {
        RatVector row(d + 1);
        for (std::size_t i = 0; i < d; ++i) row[i] = A(i, j);
        row[d] = -1;
        lp.add_constraint(std::move(row), Relation::GreaterEqual, Rational(0));
    }
    for (std::size_t i = 0; i < d; ++i) {
        RatVector row(d + 1);
        row[i] = 1;
        lp.add_constraint(row, Relation::LessEqual, Rational(1));
        lp.add_constraint(row, Relation::GreaterEqual, Rational(-1));
    }
    RatVector obj(d + 1);
    obj[d] = 1;
    LpResult res = lp.maximize(obj);
    if (res.status != LpStatus::Optimal || res.objective <= 0)
        throw Error(ErrorKind::NotPointed, "no functional is positive on every column");
    IntVector w = primitive(RatVector(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(d)));
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (dot(w, A.column(j)) <= 0) throw std::logic_error("positive functional check failed");
    return w;
}

std::size_t BruteCounter::StateHash::operator()(const State& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : s) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

BruteCounter::BruteCounter(const VpfInstance& inst) : d_(inst.d()), free_(inst.n() - inst.d()) {
    const IntMatrix& A = inst.A;
    w_ = positive_functional(A);

    // Basis: greedy from the last column backwards.
    std::vector<std::size_t> basis;
    for (std::size_t j = A.cols(); j-- > 0 && basis.size() < d_;) {
        std::vector<std::size_t> trial = basis;
        trial.push_back(j);
        if (rank(A.select_columns(trial)) == trial.size()) basis = trial;
    }
    std::reverse(basis.begin(), basis.end());
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (!std::binary_search(basis.begin(), basis.end(), j)) order_.push_back(j);
    order_.insert(order_.end(), basis.begin(), basis.end());

    IntMatrix AB = A.select_columns(basis);
    Integer det_b = det(AB);
    IntMatrix adj = adjugate(AB);
    const int sign = det_b < 0 ? -1 : 1;
    det_ = narrow(abs(det_b));
    adj_.assign(d_, std::vector<std::int64_t>(d_));
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t k = 0; k < d_; ++k) adj_[i][k] = narrow(adj(i, k) * sign);

    for (auto j : order_) {
        std::vector<std::int64_t> c(d_);
        for (std::size_t i = 0; i < d_; ++i) c[i] = narrow(A(i, j));
        col_.push_back(std::move(c));
        weight_.push_back(narrow(dot(w_, A.column(j))));
    }
    for (std::size_t k = 0; k < free_; ++k) {
        std::vector<std::int64_t> s(d_, 0);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t r = 0; r < d_; ++r) s[i] += adj_[i][r] * col_[k][r];
        step_.push_back(std::move(s));
    }
    rest_nonneg_.assign(free_ + 1, std::vector<bool>(d_, true));
    for (std::size_t k = free_; k-- > 0;)
        for (std::size_t i = 0; i < d_; ++i) rest_nonneg_[k][i] = rest_nonneg_[k + 1][i] && step_[k][i] >= 0;

    // |rem_i| <= |b_i| + (w·b)·max|a|, and adj_·rem must stay inside 62 bits.
    Integer scale = (max_abs(A) + 1) * (max_abs(adj) + 1) * static_cast<unsigned long>(d_ + 1);
    bound_ = kSafe / scale / (max_abs(A) + 1);
    memo_.resize(free_ + 1);
}

bool BruteCounter::hopeless(std::size_t depth, const State& rem) const {
    std::int64_t budget = 0;
    for (std::size_t i = 0; i < d_; ++i) budget += w_[i].get_si() * rem[i];
    if (budget < 0) return true;
    if (budget == 0) return std::any_of(rem.begin(), rem.end(), [](std::int64_t v) { return v != 0; });
    for (std::size_t i = 0; i < d_; ++i) {
        if (!rest_nonneg_[depth][i]) continue;
        std::int64_t r = 0;
        for (std::size_t k = 0; k < d_; ++k) r += adj_[i][k] * rem[k];
        if (r < 0) return true;
    }
    return false;
}

u128 BruteCounter::count(std::size_t depth, const State& rem) const {
    if (hopeless(depth, rem)) return 0;
    if (depth == free_) {
        for (std::size_t i = 0; i < d_; ++i) {
            std::int64_t r = 0;
            for (std::size_t k = 0; k < d_; ++k) r += adj_[i][k] * rem[k];
            if (r < 0 || r % det_ != 0) return 0;
        }
        return 1;
    }
    auto& table = memo_[depth];
    if (auto it = table.find(rem); it != table.end()) return it->second;

    std::int64_t budget = 0;
    for (std::size_t i = 0; i < d_; ++i) budget += w_[i].get_si() * rem[i];
    std::int64_t upper = budget / weight_[depth];
    for (std::size_t i = 0; i < d_; ++i) {
        if (!rest_nonneg_[depth + 1][i] || step_[depth][i] <= 0) continue;
        std::int64_t r = 0;
        for (std::size_t k = 0; k < d_; ++k) r += adj_[i][k] * rem[k];
        upper = std::min(upper, r / step_[depth][i]);
    }
    u128 total = 0;
    State next = rem;
    for (std::int64_t x = 0; x <= upper; ++x) {
        u128 part = count(depth + 1, next);
        if (__builtin_add_overflow(total, part, &total)) throw Error(ErrorKind::Overflow, "count exceeds 128 bits");
        for (std::size_t i = 0; i < d_; ++i) next[i] -= col_[depth][i];
    }
    if (table.size() > (1u << 22)) table.clear();
    table.emplace(rem, total);
    return total;
}

Integer BruteCounter::operator()(const IntVector& b) const {
    if (b.size() != d_) throw Error(ErrorKind::DimensionMismatch, "point dimension mismatch");
    Integer wb = dot(w_, b);
    if (wb < 0) return 0;
    for (const auto& v : b)
        if (abs(v) > bound_) throw Error(ErrorKind::Overflow, "point " + to_string(b) + " is too large to enumerate");
    if (wb > bound_) throw Error(ErrorKind::Overflow, "point " + to_string(b) + " is too large to enumerate");
    State rem(d_);
    for (std::size_t i = 0; i < d_; ++i) rem[i] = b[i].get_si();
    return widen(count(0, rem));
}

Integer eval_brute(const VpfInstance& inst, const IntVector& b) { return BruteCounter(inst)(b); }

std::vector<Integer> coin_counts(const IntVector& entries, std::size_t t_max) {
    std::vector<Integer> table(t_max + 1, 0);
    table[0] = 1;
    for (const auto& e : entries) {
        if (e <= 0) throw Error(ErrorKind::InvalidArgument, "coin values must be positive");
        if (e > static_cast<unsigned long>(t_max)) continue;
        const std::size_t c = e.get_ui();
        for (std::size_t t = c; t <= t_max; ++t) table[t] += table[t - c];
    }
    return table;
}

namespace {

IntVector positive_row(const IntMatrix& B) {
    if (B.rows() != 1 || B.cols() == 0) throw Error(ErrorKind::DimensionMismatch, "denumerant needs a 1×k matrix, k >= 1");
    IntVector row = B.row(0);
    bool pos = std::all_of(row.begin(), row.end(), [](const Integer& v) { return v > 0; });
    bool neg = std::all_of(row.begin(), row.end(), [](const Integer& v) { return v < 0; });
    if (!pos && !neg) throw Error(ErrorKind::MixedSigns, "entries " + to_string(row) + " are not all of one sign");
    if (neg)
        for (auto& v : row) v = -v;
    return row;
}

}  // namespace

QuasiPolynomial denumerant(const IntMatrix& B) {
    IntVector row = positive_row(B);
    const std::size_t k = row.size();
    Integer N = 1;
    for (const auto& v : row) mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), v.get_mpz_t());
    if (N * static_cast<unsigned long>(k + 1) > (1u << 21))
        throw Error(ErrorKind::Overflow, "period bound " + N.get_str() + " is too large to tabulate");
    const std::size_t period = N.get_ui();
    std::vector<Integer> counts = coin_counts(row, period * (k + 1));

    std::vector<Polynomial> constituents;
    for (std::size_t r = 0; r < period; ++r) {
        std::vector<Rational> xs, ys;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t t = r + i * period;
            xs.emplace_back(static_cast<unsigned long>(t));
            ys.emplace_back(counts[t]);
        }
        Polynomial p = interpolate(xs, ys);
        std::size_t check = r + k * period;
        if (p(Rational(static_cast<unsigned long>(check))) != Rational(counts[check]))
            throw std::logic_error("denumerant constituent failed its verification point");
        constituents.push_back(std::move(p));
    }
    return QuasiPolynomial(period, std::move(constituents)).minimized();
}

CoinPolynomiality coin_polynomiality(const IntMatrix& B) {
    IntVector row = positive_row(B);
    CoinPolynomiality out;
    out.polynomial = std::all_of(row.begin(), row.end(), [&](const Integer& v) { return v == row[0]; });
    if (out.polynomial) {
        out.beta = row[0];
        out.poly = binomial_polynomial(row[0], row.size() - 1);
    }
    return out;
}

std::vector<Integer> ehrhart_ray(const VpfInstance& inst, const IntVector& v, std::size_t t_max) {
    if (v.size() != inst.d()) throw Error(ErrorKind::DimensionMismatch, "ray dimension mismatch");
    if (!inst.positive_hull.contains(v)) throw Error(ErrorKind::OutsideCone, to_string(v) + " is not in pos(A)", to_rational(v));
    BruteCounter counter(inst);
    std::vector<Integer> out;
    for (std::size_t t = 0; t <= t_max; ++t) {
        IntVector p = v;
        for (auto& x : p) x *= static_cast<unsigned long>(t);
        out.push_back(counter(p));
    }
    return out;
}

}  // namespace vpf
