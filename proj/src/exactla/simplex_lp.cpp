#include "bierkit/exactla/simplex_lp.hpp"

#include "bierkit/exactla/error.hpp"

#include <limits>
#include <optional>

namespace bierkit::exactla {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
public:
    explicit Tableau(const LinearProgram& lp) : n_(lp.num_vars) {
        const std::size_t m_le = lp.le_rows.size();
        const std::size_t m_eq = lp.eq_rows.size();
        m_ = m_le + m_eq;
        flip_.assign(m_, 1);
        unit_col_.assign(m_, kNone);
        basis_.assign(m_, kNone);

        std::size_t artificials = 0;
        for (std::size_t i = 0; i < m_le; ++i)
            if (lp.le_rhs[i].sign() < 0) ++artificials;
        artificials += m_eq;
        first_art_ = n_ + m_le;
        cols_ = first_art_ + artificials;
        t_.assign(m_, std::vector<mpq_class>(cols_ + 1, 0));

        std::size_t next_art = first_art_;
        for (std::size_t i = 0; i < m_; ++i) {
            const bool is_le = i < m_le;
            const Vec& row = is_le ? lp.le_rows[i] : lp.eq_rows[i - m_le];
            const Rational& rhs = is_le ? lp.le_rhs[i] : lp.eq_rhs[i - m_le];
            if (row.size() != n_) throw ValidationError("LP row width mismatch");
            const int f = rhs.sign() < 0 ? -1 : 1;
            flip_[i] = f;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = f * row[j].mpq();
            t_[i][cols_] = f * rhs.mpq();
            if (is_le) {
                t_[i][n_ + i] = f;
                if (f > 0) {
                    basis_[i] = n_ + i;
                    unit_col_[i] = n_ + i;
                    continue;
                }
            }
            t_[i][next_art] = 1;
            basis_[i] = next_art;
            unit_col_[i] = next_art;
            ++next_art;
        }
    }

    bool has_artificials() const { return cols_ > first_art_; }

    // Maximizes cost.x over the current feasible basis. Returns false when
    // unbounded.
    bool optimize(const std::vector<mpq_class>& cost, bool allow_artificial_entry) {
        for (;;) {
            std::size_t enter = kNone;
            const std::size_t limit = allow_artificial_entry ? cols_ : first_art_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (is_basic(j)) continue;
                if (sgn(reduced_cost(cost, j)) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return true;

            std::size_t leave = kNone;
            mpq_class best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                mpq_class ratio = t_[i][cols_] / t_[i][enter];
                if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }

    mpq_class value(const std::vector<mpq_class>& cost) const {
        mpq_class v = 0;
        for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * t_[i][cols_];
        return v;
    }

    // After phase one: pivot zero-level artificials out wherever a
    // structural column allows it.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < first_art_) continue;
            for (std::size_t j = 0; j < first_art_; ++j) {
                if (!is_basic(j) && sgn(t_[i][j]) != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<mpq_class> primal() const {
        std::vector<mpq_class> x(n_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
        return x;
    }

    // y_i = flip_i * c_B B^-1 e_i, read off the column that started as e_i.
    std::vector<mpq_class> duals(const std::vector<mpq_class>& cost) const {
        std::vector<mpq_class> y(m_, 0);
        for (std::size_t r = 0; r < m_; ++r) {
            mpq_class acc = 0;
            for (std::size_t i = 0; i < m_; ++i) acc += cost[basis_[i]] * t_[i][unit_col_[r]];
            y[r] = flip_[r] * acc;
        }
        return y;
    }

    std::size_t cols() const { return cols_; }
    std::size_t first_artificial() const { return first_art_; }
    std::size_t pivots() const { return pivots_; }

private:
    bool is_basic(std::size_t j) const {
        for (auto b : basis_)
            if (b == j) return true;
        return false;
    }

    mpq_class reduced_cost(const std::vector<mpq_class>& cost, std::size_t j) const {
        mpq_class d = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
            if (sgn(t_[i][j]) != 0) d -= cost[basis_[i]] * t_[i][j];
        return d;
    }

    void pivot(std::size_t r, std::size_t c) {
        const mpq_class p = t_[r][c];
        for (auto& v : t_[r]) v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(t_[i][c]) == 0) continue;
            const mpq_class f = t_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
        ++pivots_;
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t cols_ = 0;
    std::size_t first_art_ = 0;
    std::vector<std::vector<mpq_class>> t_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> unit_col_;
    std::vector<int> flip_;
    std::size_t pivots_ = 0;
};

Vec to_vec(const std::vector<mpq_class>& v, std::size_t from, std::size_t count) {
    Vec out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(Rational::from_mpq(v[from + i]));
    return out;
}

void validate(const LinearProgram& lp) {
    if (lp.objective.size() != lp.num_vars) throw ValidationError("LP objective width mismatch");
    if (lp.le_rows.size() != lp.le_rhs.size() || lp.eq_rows.size() != lp.eq_rhs.size())
        throw ValidationError("LP rhs length mismatch");
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    validate(lp);
    Tableau tab(lp);
    LpSolution out;

    if (tab.has_artificials()) {
        std::vector<mpq_class> phase1(tab.cols(), 0);
        for (std::size_t j = tab.first_artificial(); j < tab.cols(); ++j) phase1[j] = -1;
        tab.optimize(phase1, true);
        if (sgn(tab.value(phase1)) < 0) {
            out.status = LpStatus::Infeasible;
            out.pivots = tab.pivots();
            return out;
        }
        tab.drive_out_artificials();
    }

    std::vector<mpq_class> cost(tab.cols(), 0);
    for (std::size_t j = 0; j < lp.num_vars; ++j) cost[j] = lp.objective[j].mpq();
    const bool bounded = tab.optimize(cost, false);
    out.pivots = tab.pivots();
    out.x = to_vec(tab.primal(), 0, lp.num_vars);
    if (!bounded) {
        out.status = LpStatus::Unbounded;
        return out;
    }
    out.status = LpStatus::Optimal;
    out.value = Rational::from_mpq(tab.value(cost));
    const auto y = tab.duals(cost);
    out.dual_le = to_vec(y, 0, lp.le_rows.size());
    out.dual_eq = to_vec(y, lp.le_rows.size(), lp.eq_rows.size());
    return out;
}

bool certifies_optimality(const LinearProgram& lp, const LpSolution& sol) {
    if (sol.status != LpStatus::Optimal) return false;
    if (sol.x.size() != lp.num_vars || sol.dual_le.size() != lp.le_rows.size() ||
        sol.dual_eq.size() != lp.eq_rows.size())
        return false;
    for (const auto& v : sol.x)
        if (v.sign() < 0) return false;
    for (std::size_t i = 0; i < lp.le_rows.size(); ++i)
        if (dot(lp.le_rows[i], sol.x) > lp.le_rhs[i]) return false;
    for (std::size_t i = 0; i < lp.eq_rows.size(); ++i)
        if (dot(lp.eq_rows[i], sol.x) != lp.eq_rhs[i]) return false;
    if (dot(lp.objective, sol.x) != sol.value) return false;

    for (const auto& y : sol.dual_le)
        if (y.sign() < 0) return false;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        Rational lhs;
        for (std::size_t i = 0; i < lp.le_rows.size(); ++i) lhs += lp.le_rows[i][j] * sol.dual_le[i];
        for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) lhs += lp.eq_rows[i][j] * sol.dual_eq[i];
        if (lhs < lp.objective[j]) return false;
    }
    return dot(lp.le_rhs, sol.dual_le) + dot(lp.eq_rhs, sol.dual_eq) == sol.value;
}

bool is_feasible(const LinearProgram& lp) {
    LinearProgram probe = lp;
    probe.objective.assign(lp.num_vars, Rational(0));
    return solve_lp(probe).status == LpStatus::Optimal;
}

}  // namespace bierkit::exactla
