#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/dd.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/lp.hpp"
#include "clutterkit/rational.hpp"

namespace clutterkit {

inline constexpr int kVertexEnumGroundCap = 14;
inline constexpr int kVertexEnumMemberCap = 64;

/// The covering polyhedron Q(C) = { x >= 0 : sum_{v in C} x_v >= 1 for C in C }.
struct CoverPolyhedron {
    Clutter clutter;

    explicit CoverPolyhedron(Clutter c) : clutter(std::move(c)) {}

    /// One >=-row per member over the ground variables.
    std::vector<LinearConstraint> member_rows() const {
        std::vector<LinearConstraint> rows;
        for (const auto& m : clutter.members()) {
            LinearConstraint row;
            row.coeffs.assign(static_cast<std::size_t>(clutter.ground_size()), Rational(0));
            for (int v : m.support()) row.coeffs[static_cast<std::size_t>(v)] = Rational(1);
            row.rel = Relation::greater_equal;
            row.rhs = Rational(1);
            rows.push_back(std::move(row));
        }
        return rows;
    }
};

/// min w.x over Q(C).
inline LpProblem covering_lp(const Clutter& c, const std::vector<Rational>& w) {
    LpProblem p;
    p.sense = Sense::minimize;
    p.objective = w;
    p.rows = CoverPolyhedron(c).member_rows();
    return p;
}

inline LpProblem covering_lp(const Clutter& c) {
    return covering_lp(c, std::vector<Rational>(static_cast<std::size_t>(c.ground_size()), Rational(1)));
}

namespace detail {

inline int rational_rank(std::vector<std::vector<Rational>> rows) {
    int rank = 0;
    std::size_t width = rows.empty() ? 0 : rows[0].size();
    std::size_t pr = 0;
    for (std::size_t col = 0; col < width && pr < rows.size(); ++col) {
        std::size_t sel = pr;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pr], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col] / rows[pr][col];
            for (std::size_t j = col; j < width; ++j) rows[r][j] -= f * rows[pr][j];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// All vertices of Q(C), exactly, in lexicographic order. Every returned point
/// is certified: feasible, and with n linearly independent tight constraints.
inline std::vector<std::vector<Rational>> enumerate_vertices(const CoverPolyhedron& q,
                                                             int ground_cap = kVertexEnumGroundCap,
                                                             int member_cap = kVertexEnumMemberCap) {
    const Clutter& c = q.clutter;
    const int n = c.ground_size();
    if (n > ground_cap) throw CapExceeded("enumerate_vertices: ground size above cap");
    if (static_cast<int>(c.member_count()) > member_cap)
        throw CapExceeded("enumerate_vertices: member count above cap");

    // Homogenize: rays of {(x, t) : x >= 0, t >= 0, sum_C x - t >= 0} with t > 0
    // are the vertices x/t.
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> row(d, Rational(0));
        row[j] = Rational(1);
        rows.push_back(std::move(row));
    }
    for (const auto& m : c.members()) {
        std::vector<Rational> row(d, Rational(0));
        for (int v : m.support()) row[static_cast<std::size_t>(v)] = Rational(1);
        row[d - 1] = Rational(-1);
        rows.push_back(std::move(row));
    }

    std::vector<std::vector<Rational>> vertices;
    for (const auto& ray : dd::cone_extreme_rays(rows, static_cast<int>(d))) {
        if (ray[d - 1] <= 0) continue;  // recession direction
        Rational t = Rational(ray[d - 1]);
        std::vector<Rational> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = Rational(ray[static_cast<std::size_t>(j)]) / t;
        vertices.push_back(std::move(x));
    }
    std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j] < b[j]) return true;
            if (b[j] < a[j]) return false;
        }
        return false;
    });

    // Certify each vertex before returning it.
    for (const auto& x : vertices) {
        std::vector<std::vector<Rational>> tight;
        for (int j = 0; j < n; ++j) {
            if (x[static_cast<std::size_t>(j)].is_negative()) throw std::logic_error("vertex certificate: x < 0");
            if (x[static_cast<std::size_t>(j)].is_zero()) {
                std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
                row[static_cast<std::size_t>(j)] = Rational(1);
                tight.push_back(std::move(row));
            }
        }
        for (const auto& m : c.members()) {
            Rational s(0);
            for (int v : m.support()) s += x[static_cast<std::size_t>(v)];
            if (s < Rational(1)) throw std::logic_error("vertex certificate: infeasible");
            if (s == Rational(1)) {
                std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
                for (int v : m.support()) row[static_cast<std::size_t>(v)] = Rational(1);
                tight.push_back(std::move(row));
            }
        }
        if (detail::rational_rank(std::move(tight)) != n)
            throw std::logic_error("vertex certificate: tight rows do not have full rank");
    }
    return vertices;
}

struct IdealnessResult {
    bool ideal = false;
    std::optional<std::vector<Rational>> fractional_vertex;
    explicit operator bool() const { return ideal; }
};

/// Q(C) integral? The witness is the lexicographically first fractional vertex.
inline IdealnessResult is_ideal(const Clutter& c, int ground_cap = kVertexEnumGroundCap,
                                int member_cap = kVertexEnumMemberCap) {
    IdealnessResult out;
    out.ideal = true;
    for (const auto& x : enumerate_vertices(CoverPolyhedron(c), ground_cap, member_cap)) {
        bool integral = true;
        for (const auto& coord : x)
            if (!coord.is_integral()) {
                integral = false;
                break;
            }
        if (!integral) {
            out.ideal = false;
            out.fractional_vertex = x;
            break;
        }
    }
    return out;
}

/// Nonnegative member weights with per-element load at most one.
struct FractionalPacking {
    std::vector<Rational> weights;  // aligned with the clutter's canonical member order
    Rational value;                 // sum of weights
    Integer denominator;            // lcm of weight denominators
};

inline FractionalPacking make_packing(const Clutter& c, std::vector<Rational> weights) {
    if (weights.size() != c.member_count()) throw std::invalid_argument("packing: weight count mismatch");
    for (const auto& w : weights)
        if (w.is_negative()) throw std::invalid_argument("packing: negative weight");
    for (int v = 0; v < c.ground_size(); ++v) {
        Rational load(0);
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (c.members()[j].get(v)) load += weights[j];
        if (load > Rational(1)) throw std::invalid_argument("packing: element load above one");
    }
    FractionalPacking p;
    p.value = Rational(0);
    for (const auto& w : weights) p.value += w;
    p.denominator = lcm_denominators(weights);
    p.weights = std::move(weights);
    return p;
}

/// Exact optimum of max 1.y subject to the element-load constraints.
inline FractionalPacking max_fractional_packing(const Clutter& c) {
    if (c.has_empty_member()) throw std::invalid_argument("max_fractional_packing: empty member");
    LpProblem p;
    p.sense = Sense::maximize;
    p.objective.assign(c.member_count(), Rational(1));
    for (int v = 0; v < c.ground_size(); ++v) {
        LinearConstraint row;
        row.coeffs.assign(c.member_count(), Rational(0));
        for (std::size_t j = 0; j < c.member_count(); ++j)
            if (c.members()[j].get(v)) row.coeffs[j] = Rational(1);
        row.rel = Relation::less_equal;
        row.rhs = Rational(1);
        p.rows.push_back(std::move(row));
    }
    LpSolution sol = solve_lp(p);
    if (sol.status != LpStatus::optimal) throw std::logic_error("max_fractional_packing: LP not optimal");
    return make_packing(c, std::move(sol.primal));
}

/// Minimal-by-inclusion support subfamily with weight sum above one. For a
/// quarter-integral packing of value two the result has at most five members,
/// and its members never share an element.
inline std::vector<std::size_t> extract_small_subfamily(const Clutter& c, const FractionalPacking& pk) {
    if (!(pk.value > Rational(1))) throw std::invalid_argument("extract_small_subfamily: value at most one");

    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < pk.weights.size(); ++j)
        if (!pk.weights[j].is_zero()) support.push_back(j);
    std::sort(support.begin(), support.end(), [&](std::size_t a, std::size_t b) {
        if (pk.weights[a] != pk.weights[b]) return pk.weights[b] < pk.weights[a];
        return BitVector::set_less(c.members()[a], c.members()[b]);
    });

    std::vector<std::size_t> chosen;
    Rational sum(0);
    for (std::size_t j : support) {
        chosen.push_back(j);
        sum += pk.weights[j];
        if (sum > Rational(1)) break;
    }
    // Peel members off, lightest first, while the sum stays above one.
    std::vector<std::size_t> order(chosen.rbegin(), chosen.rend());
    for (std::size_t j : order) {
        if (sum - pk.weights[j] > Rational(1)) {
            sum -= pk.weights[j];
            chosen.erase(std::find(chosen.begin(), chosen.end(), j));
        }
    }

    BitVector common = BitVector::ones(c.ground_size());
    for (std::size_t j : chosen) common &= c.members()[j];
    if (!common.zero()) throw std::logic_error("extract_small_subfamily: members share an element");

    bool quarter_integral = pk.denominator == 1 || pk.denominator == 2 || pk.denominator == 4;
    if (quarter_integral && pk.value == Rational(2) && chosen.size() > 5)
        throw std::logic_error("extract_small_subfamily: more than five members");
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace clutterkit
