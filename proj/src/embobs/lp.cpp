#include "lp.hpp"

#include <stdexcept>

namespace embobs::coincide {

namespace {

// Dense simplex tableau: rows_ x (vars_+1), last column is the rhs.
// Invariant: the basis columns form an identity submatrix.
class Tableau {
public:
    Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b)
        : rows_(a.size()), vars_(a.empty() ? 0 : a[0].size())
    {
        t_.assign(rows_, std::vector<Rational>(vars_ + 1, Rational(0)));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (a[i].size() != vars_)
                throw std::invalid_argument("solve_lp: ragged constraint matrix");
            for (std::size_t j = 0; j < vars_; ++j)
                t_[i][j] = a[i][j];
            t_[i][vars_] = b[i];
            if (t_[i][vars_] < 0)
                for (auto& v : t_[i])
                    v = -v;
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t vars() const { return vars_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    void append_artificials()
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (auto& row : t_)
                row.insert(row.end() - 1, Rational(0));
            t_[i][vars_ + i] = 1;
            basis_.push_back(vars_ + i);
        }
        total_vars_ = vars_ + rows_;
    }

    // Minimize cost over the current feasible dictionary; cost has an entry
    // per variable (zero-extended past its length). Returns false when
    // unbounded below.
    bool run(const std::vector<Rational>& cost)
    {
        while (true) {
            std::vector<Rational> y = basic_cost_multipliers(cost);
            // Bland: entering variable is the lowest index with negative
            // reduced cost.
            std::size_t enter = total_vars_;
            for (std::size_t j = 0; j < total_vars_; ++j) {
                if (is_basic(j))
                    continue;
                Rational reduced = cost_of(cost, j);
                for (std::size_t i = 0; i < rows_; ++i)
                    reduced -= y[i] * t_[i][j];
                if (reduced < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == total_vars_)
                return true;

            std::size_t leave_row = rows_;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (t_[i][enter] <= 0)
                    continue;
                Rational ratio = t_[i][total_vars_] / t_[i][enter];
                if (leave_row == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave_row])) {
                    leave_row = i;
                    best_ratio = ratio;
                }
            }
            if (leave_row == rows_)
                return false;
            pivot(leave_row, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col)
    {
        Rational p = t_[row][col];
        for (auto& v : t_[row])
            v /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || t_[i][col] == 0)
                continue;
            Rational f = t_[i][col];
            for (std::size_t j = 0; j <= total_vars_; ++j)
                t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    bool is_basic(std::size_t j) const
    {
        for (auto b : basis_)
            if (b == j)
                return true;
        return false;
    }

    Rational objective(const std::vector<Rational>& cost) const
    {
        Rational obj = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            obj += cost_of(cost, basis_[i]) * t_[i][total_vars_];
        return obj;
    }

    std::vector<Rational> solution() const
    {
        std::vector<Rational> z(vars_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < vars_)
                z[basis_[i]] = t_[i][total_vars_];
        return z;
    }

    // Pivot artificial variables out of the basis; rows that cannot be
    // repaired are redundant constraints and are dropped.
    void remove_artificials()
    {
        for (std::size_t i = 0; i < rows_;) {
            if (basis_[i] < vars_) {
                ++i;
                continue;
            }
            std::size_t col = vars_;
            for (std::size_t j = 0; j < vars_; ++j) {
                if (t_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < vars_) {
                pivot(i, col);
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --rows_;
            }
        }
        // Drop the artificial columns entirely.
        for (auto& row : t_)
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(vars_), row.end() - 1);
        total_vars_ = vars_;
    }

private:
    std::size_t rows_, vars_;
    std::size_t total_vars_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;

    static Rational cost_of(const std::vector<Rational>& cost, std::size_t j)
    {
        return j < cost.size() ? cost[j] : Rational(0);
    }

    std::vector<Rational> basic_cost_multipliers(const std::vector<Rational>& cost) const
    {
        // With an identity basis submatrix the simplex multipliers reduce to
        // the basic costs per row.
        std::vector<Rational> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            y[i] = cost_of(cost, basis_[i]);
        return y;
    }
};

} // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c)
{
    if (a.size() != b.size())
        throw std::invalid_argument("solve_lp: row count mismatch");

    Tableau t(a, b);
    t.append_artificials();

    std::vector<Rational> phase1_cost(t.vars(), Rational(0));
    phase1_cost.resize(t.vars() + t.rows(), Rational(1));
    if (!t.run(phase1_cost))
        throw std::logic_error("solve_lp: phase 1 cannot be unbounded");

    LpResult res;
    if (t.objective(phase1_cost) != 0) {
        res.status = LpResult::Status::infeasible;
        return res;
    }
    t.remove_artificials();

    if (!t.run(c)) {
        res.status = LpResult::Status::unbounded;
        return res;
    }
    res.status = LpResult::Status::optimal;
    res.solution = t.solution();
    res.objective = t.objective(c);
    return res;
}

std::vector<Rational> lex_min_feasible(std::vector<std::vector<Rational>> a,
                                       std::vector<Rational> b)
{
    std::size_t vars = a.empty() ? 0 : a[0].size();
    std::vector<Rational> fixed;
    for (std::size_t i = 0; i < vars; ++i) {
        std::vector<Rational> c(vars, Rational(0));
        c[i] = 1;
        LpResult r = solve_lp(a, b, c);
        if (r.status == LpResult::Status::infeasible)
            return {};
        if (r.status == LpResult::Status::unbounded)
            throw std::logic_error("lex_min_feasible: coordinates are bounded below by 0");
        fixed.push_back(r.objective);
        std::vector<Rational> row(vars, Rational(0));
        row[i] = 1;
        a.push_back(std::move(row));
        b.push_back(r.objective);
    }
    return fixed;
}

} // namespace embobs::coincide
