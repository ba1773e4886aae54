#include "vpf/lp.hpp"

#include <utility>

namespace vpf {

void LinearProgram::add_constraint(RatVector coefficients, Relation relation, Rational rhs) {
    if (coefficients.size() != num_vars_) throw Error(ErrorKind::DimensionMismatch, "constraint length mismatch");
    constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::add_constraint(const IntVector& coefficients, Relation relation, const Integer& rhs) {
    add_constraint(to_rational(coefficients), relation, Rational(rhs));
}

LpResult LinearProgram::feasible() const { return run(nullptr); }

LpResult LinearProgram::maximize(const RatVector& objective) const {
    if (objective.size() != num_vars_) throw Error(ErrorKind::DimensionMismatch, "objective length mismatch");
    return run(&objective);
}

bool LinearProgram::satisfied_by(const RatVector& x) const {
    if (x.size() != num_vars_) return false;
    for (std::size_t j = 0; j < num_vars_; ++j)
        if (nonnegative_[j] && x[j] < 0) return false;
    for (const auto& c : constraints_) {
        Rational lhs = dot(c.coefficients, x);
        switch (c.relation) {
            case Relation::LessEqual:
                if (lhs > c.rhs) return false;
                break;
            case Relation::GreaterEqual:
                if (lhs < c.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != c.rhs) return false;
                break;
        }
    }
    return true;
}

namespace {

// Tableau in standard form: rows T[i] = coefficients | rhs, basis[i] the basic column.
struct Tableau {
    std::vector<RatVector> rows;
    std::vector<std::size_t> basis;
    std::size_t cols = 0;  // excluding rhs

    void pivot(std::size_t r, std::size_t c) {
        RatVector& pr = rows[r];
        Rational inv = 1 / pr[c];
        for (auto& v : pr)
            if (v != 0) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            RatVector& ri = rows[i];
            for (std::size_t j = 0; j <= cols; ++j)
                if (pr[j] != 0) ri[j] -= f * pr[j];
        }
        basis[r] = c;
    }

    // Minimizes cost·z over the tableau. Columns with allowed[j] == false never enter.
    // Returns false when unbounded.
    bool minimize(const RatVector& cost, const std::vector<bool>& allowed) {
        while (true) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols && enter == cols; ++j) {
                if (!allowed[j]) continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (rows[i][j] != 0 && cost[basis[i]] != 0) reduced -= cost[basis[i]] * rows[i][j];
                if (reduced < 0) enter = j;
            }
            if (enter == cols) return true;
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rows[i][cols] / rows[i][enter];
                if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult LinearProgram::run(const RatVector* objective) const {
    // Column layout: split variables, then slacks, then artificials.
    std::vector<std::size_t> pos_col(num_vars_), neg_col(num_vars_, SIZE_MAX);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < num_vars_; ++j) {
        pos_col[j] = ncols++;
        if (!nonnegative_[j]) neg_col[j] = ncols++;
    }
    const std::size_t m = constraints_.size();
    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i)
        if (constraints_[i].relation != Relation::Equal) slack_col[i] = ncols++;
    const std::size_t first_art = ncols;
    ncols += m;

    Tableau t;
    t.cols = ncols;
    t.rows.assign(m, RatVector(ncols + 1));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints_[i];
        RatVector& row = t.rows[i];
        for (std::size_t j = 0; j < num_vars_; ++j) {
            row[pos_col[j]] = c.coefficients[j];
            if (neg_col[j] != SIZE_MAX) row[neg_col[j]] = -c.coefficients[j];
        }
        if (c.relation == Relation::LessEqual) row[slack_col[i]] = 1;
        if (c.relation == Relation::GreaterEqual) row[slack_col[i]] = -1;
        row[ncols] = c.rhs;
        if (c.rhs < 0)
            for (std::size_t j = 0; j < first_art; ++j) row[j] = -row[j];
        if (c.rhs < 0) row[ncols] = -c.rhs;
        row[first_art + i] = 1;
        t.basis[i] = first_art + i;
    }

    RatVector phase1(ncols);
    for (std::size_t i = 0; i < m; ++i) phase1[first_art + i] = 1;
    std::vector<bool> allowed(ncols, true);
    t.minimize(phase1, allowed);

    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= first_art) infeas += t.rows[i][ncols];
    LpResult result;
    if (infeas > 0) {
        result.status = LpStatus::Infeasible;
        return result;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < first_art) {
            ++i;
            continue;
        }
        std::size_t c = first_art;
        for (std::size_t j = 0; j < first_art; ++j)
            if (t.rows[i][j] != 0) {
                c = j;
                break;
            }
        if (c == first_art) {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            continue;
        }
        t.pivot(i, c);
        ++i;
    }
    for (std::size_t j = first_art; j < ncols; ++j) allowed[j] = false;

    result.status = LpStatus::Optimal;
    if (objective) {
        RatVector cost(ncols);
        for (std::size_t j = 0; j < num_vars_; ++j) {
            cost[pos_col[j]] = -(*objective)[j];
            if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = (*objective)[j];
        }
        if (!t.minimize(cost, allowed)) result.status = LpStatus::Unbounded;
    }

    RatVector z(ncols);
    for (std::size_t i = 0; i < t.rows.size(); ++i) z[t.basis[i]] = t.rows[i][ncols];
    result.x.assign(num_vars_, 0);
    for (std::size_t j = 0; j < num_vars_; ++j) {
        result.x[j] = z[pos_col[j]];
        if (neg_col[j] != SIZE_MAX) result.x[j] -= z[neg_col[j]];
    }
    if (objective) result.objective = dot(*objective, result.x);
    return result;
}

LpResult lp_feasible(const RatMatrix& A, const RatVector& b) {
    if (b.size() != A.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    LinearProgram lp(A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) lp.add_constraint(A.row(i), Relation::Equal, b[i]);
    return lp.feasible();
}

}  // namespace vpf
