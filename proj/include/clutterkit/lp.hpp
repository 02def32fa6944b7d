#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "clutterkit/rational.hpp"

namespace clutterkit {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, greater_equal, equal };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::greater_equal;
    Rational rhs;
};

/// min/max objective . x subject to the rows; all variables are >= 0.
struct LpProblem {
    Sense sense = Sense::minimize;
    std::vector<Rational> objective;
    std::vector<LinearConstraint> rows;

    std::size_t variable_count() const { return objective.size(); }

    void validate() const {
        for (const auto& r : rows)
            if (r.coeffs.size() != objective.size())
                throw std::invalid_argument("lp: constraint dimension mismatch");
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::optimal;
    Rational value;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
};

namespace detail {

// Dense rational two-phase simplex with Bland's pivoting rule (no cycling).
// Internally minimizes over rows normalized to nonnegative right-hand sides.
class SimplexTableau {
public:
    explicit SimplexTableau(const LpProblem& input) : n_(input.variable_count()) {
        costs_.assign(n_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j)
            costs_[j] = input.sense == Sense::minimize ? input.objective[j] : -input.objective[j];

        m_ = input.rows.size();
        flipped_.assign(m_, false);
        std::vector<std::vector<Rational>> body(m_);
        std::vector<Relation> rels(m_);
        std::vector<Rational> rhs(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            body[i] = input.rows[i].coeffs;
            rels[i] = input.rows[i].rel;
            rhs[i] = input.rows[i].rhs;
            if (rhs[i].is_negative()) {
                flipped_[i] = true;
                for (auto& a : body[i]) a = -a;
                rhs[i] = -rhs[i];
                if (rels[i] == Relation::less_equal)
                    rels[i] = Relation::greater_equal;
                else if (rels[i] == Relation::greater_equal)
                    rels[i] = Relation::less_equal;
            }
        }

        // Column layout: structural | slack/surplus | artificial | rhs.
        cols_ = n_;
        slack_col_.assign(m_, SIZE_MAX);
        slack_positive_.assign(m_, false);
        for (std::size_t i = 0; i < m_; ++i)
            if (rels[i] != Relation::equal) {
                slack_col_[i] = cols_++;
                slack_positive_[i] = rels[i] == Relation::less_equal;
            }
        first_art_ = cols_;
        art_col_.assign(m_, SIZE_MAX);
        for (std::size_t i = 0; i < m_; ++i)
            if (rels[i] != Relation::less_equal) art_col_[i] = cols_++;

        tab_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.assign(m_, SIZE_MAX);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = body[i][j];
            if (slack_col_[i] != SIZE_MAX)
                tab_[i][slack_col_[i]] = slack_positive_[i] ? Rational(1) : Rational(-1);
            if (art_col_[i] != SIZE_MAX) {
                tab_[i][art_col_[i]] = Rational(1);
                basis_[i] = art_col_[i];
            } else {
                basis_[i] = slack_col_[i];
            }
            tab_[i][cols_] = rhs[i];
        }
    }

    LpStatus solve() {
        // Artificials start basic and are never allowed to re-enter; once a
        // phase-one optimum of value zero is reached they stay basic at zero,
        // evicted on demand by degenerate pivots.
        enterable_.assign(cols_, true);
        for (std::size_t j = first_art_; j < cols_; ++j) enterable_[j] = false;
        if (first_art_ < cols_) {
            std::vector<Rational> phase1(cols_, Rational(0));
            for (std::size_t j = first_art_; j < cols_; ++j) phase1[j] = Rational(1);
            if (run(phase1, false) != LpStatus::optimal)
                throw std::logic_error("simplex: phase one cannot be unbounded");
            for (std::size_t i = 0; i < rows_alive(); ++i)
                if (basis_[i] >= first_art_ && !tab_[i][cols_].is_zero()) return LpStatus::infeasible;
        }
        return run(padded(costs_), true);
    }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < rows_alive(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = tab_[i][cols_];
        return x;
    }

    /// Row multipliers for the rows as given (minimization convention).
    std::vector<Rational> duals() const {
        std::vector<Rational> reduced = reduced_costs(padded(costs_));
        std::vector<Rational> y(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            Rational yi(0);
            if (slack_col_[i] != SIZE_MAX) {
                // slack column +e_i has reduced cost -y_i; surplus -e_i has +y_i
                yi = slack_positive_[i] ? -reduced[slack_col_[i]] : reduced[slack_col_[i]];
            } else {
                yi = -reduced[art_col_[i]];
            }
            y[i] = flipped_[i] ? -yi : yi;
        }
        return y;
    }

private:
    std::size_t rows_alive() const { return tab_.size(); }

    std::vector<Rational> padded(const std::vector<Rational>& structural) const {
        std::vector<Rational> c(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) c[j] = structural[j];
        return c;
    }

    std::vector<Rational> reduced_costs(const std::vector<Rational>& c) const {
        std::vector<Rational> r = c;
        for (std::size_t i = 0; i < rows_alive(); ++i) {
            const Rational& cb = c[basis_[i]];
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!tab_[i][j].is_zero()) r[j] -= cb * tab_[i][j];
        }
        return r;
    }

    LpStatus run(const std::vector<Rational>& c, bool evict_artificials) {
        for (;;) {
            std::vector<Rational> r = reduced_costs(c);
            std::size_t enter = SIZE_MAX;
            for (std::size_t j = 0; j < cols_; ++j)
                if (enterable_[j] && r[j].is_negative()) {
                    enter = j;
                    break;
                }
            if (enter == SIZE_MAX) return LpStatus::optimal;

            // A zero-valued basic artificial touched by the entering column must
            // leave first (degenerate pivot, feasible for any entry sign); this
            // keeps every artificial pinned at zero.
            std::size_t evict = SIZE_MAX;
            for (std::size_t i = 0; evict_artificials && i < rows_alive(); ++i)
                if (basis_[i] >= first_art_ && !tab_[i][enter].is_zero()) {
                    if (!tab_[i][cols_].is_zero())
                        throw std::logic_error("simplex: basic artificial became positive");
                    evict = i;
                    break;
                }
            if (evict != SIZE_MAX) {
                pivot(evict, enter);
                continue;
            }

            std::size_t leave = SIZE_MAX;
            Rational best;
            for (std::size_t i = 0; i < rows_alive(); ++i) {
                if (!(tab_[i][enter] > Rational(0))) continue;
                Rational ratio = tab_[i][cols_] / tab_[i][enter];
                if (leave == SIZE_MAX || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == SIZE_MAX) return LpStatus::unbounded;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = Rational(1) / tab_[row][col];
        for (auto& a : tab_[row]) a *= inv;
        for (std::size_t i = 0; i < rows_alive(); ++i) {
            if (i == row || tab_[i][col].is_zero()) continue;
            Rational f = tab_[i][col];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!tab_[row][j].is_zero()) tab_[i][j] -= f * tab_[row][j];
        }
        basis_[row] = col;
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t cols_ = 0;
    std::size_t first_art_ = 0;
    std::vector<Rational> costs_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> slack_col_;
    std::vector<std::size_t> art_col_;
    std::vector<bool> flipped_;
    std::vector<bool> slack_positive_;
    std::vector<bool> enterable_;
};

inline void verify_certificates(const LpProblem& p, const Rational& value,
                                const std::vector<Rational>& x, const std::vector<Rational>& y) {
    const bool minimize = p.sense == Sense::minimize;
    for (const auto& xi : x)
        if (xi.is_negative()) throw std::logic_error("lp verify: negative primal variable");

    Rational primal_value(0);
    for (std::size_t j = 0; j < p.variable_count(); ++j) primal_value += p.objective[j] * x[j];
    if (primal_value != value) throw std::logic_error("lp verify: objective mismatch");

    Rational dual_value(0);
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        Rational lhs(0);
        for (std::size_t j = 0; j < p.variable_count(); ++j) lhs += p.rows[i].coeffs[j] * x[j];
        Rational gap = lhs - p.rows[i].rhs;
        switch (p.rows[i].rel) {
            case Relation::less_equal:
                if (gap > Rational(0)) throw std::logic_error("lp verify: primal infeasible (<=)");
                if ((minimize && y[i] > Rational(0)) || (!minimize && y[i].is_negative()))
                    throw std::logic_error("lp verify: dual sign (<= row)");
                break;
            case Relation::greater_equal:
                if (gap.is_negative()) throw std::logic_error("lp verify: primal infeasible (>=)");
                if ((minimize && y[i].is_negative()) || (!minimize && y[i] > Rational(0)))
                    throw std::logic_error("lp verify: dual sign (>= row)");
                break;
            case Relation::equal:
                if (!gap.is_zero()) throw std::logic_error("lp verify: primal infeasible (=)");
                break;
        }
        if (!y[i].is_zero() && !gap.is_zero())
            throw std::logic_error("lp verify: complementary slackness (row)");
        dual_value += y[i] * p.rows[i].rhs;
    }
    if (dual_value != value) throw std::logic_error("lp verify: strong duality violated");

    for (std::size_t j = 0; j < p.variable_count(); ++j) {
        Rational reduced = p.objective[j];
        for (std::size_t i = 0; i < p.rows.size(); ++i) reduced -= y[i] * p.rows[i].coeffs[j];
        if (minimize ? reduced.is_negative() : reduced > Rational(0))
            throw std::logic_error("lp verify: dual infeasible");
        if (!reduced.is_zero() && !x[j].is_zero())
            throw std::logic_error("lp verify: complementary slackness (column)");
    }
}

}  // namespace detail

/// Exact simplex over the rationals. Optimal results return a primal/dual pair
/// verified for feasibility, equal objectives and complementary slackness.
inline LpSolution solve_lp(const LpProblem& input) {
    input.validate();
    detail::SimplexTableau tableau(input);
    LpStatus status = tableau.solve();
    LpSolution out;
    out.status = status;
    if (status != LpStatus::optimal) return out;

    out.primal = tableau.primal();
    out.dual = tableau.duals();
    if (input.sense == Sense::maximize)
        for (auto& yi : out.dual) yi = -yi;
    Rational value(0);
    for (std::size_t j = 0; j < input.variable_count(); ++j) value += input.objective[j] * out.primal[j];
    out.value = value;
    detail::verify_certificates(input, out.value, out.primal, out.dual);
    return out;
}

}  // namespace clutterkit
