#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "clutterkit/rational.hpp"

namespace clutterkit {
namespace dd {

using IntVec = std::vector<Integer>;

namespace detail {

inline Integer dot(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline void make_primitive(IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

using Mask = std::vector<std::uint64_t>;

inline Mask empty_mask(std::size_t bits) { return Mask((bits + 63) / 64, 0); }
inline void mask_set(Mask& m, std::size_t i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline bool mask_subset(const Mask& a, const Mask& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] & ~b[k]) return false;
    return true;
}
inline Mask mask_and(const Mask& a, const Mask& b) {
    Mask out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] & b[k];
    return out;
}
inline int mask_popcount(const Mask& m) {
    int c = 0;
    for (auto w : m) c += __builtin_popcountll(w);
    return c;
}

// Gauss-Jordan inverse over the rationals; returns false on singular input.
inline bool invert(std::vector<std::vector<Rational>> a, std::vector<std::vector<Rational>>& inv) {
    std::size_t d = a.size();
    inv.assign(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pr = col;
        while (pr < d && a[pr][col].is_zero()) ++pr;
        if (pr == d) return false;
        std::swap(a[pr], a[col]);
        std::swap(inv[pr], inv[col]);
        Rational piv = Rational(1) / a[col][col];
        for (std::size_t j = 0; j < d; ++j) {
            a[col][j] *= piv;
            inv[col][j] *= piv;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < d; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return true;
}

struct Ray {
    IntVec coords;
    Mask tight;  // over all input rows; maintained for processed rows
};

}  // namespace detail

/// Extreme rays of the pointed cone {z in Q^dim : row . z >= 0 for every row}.
/// The rows must positively span the dual (equivalently: the cone is pointed and
/// some dim rows are linearly independent); otherwise a logic_error is thrown.
/// Output rays are primitive integer vectors, deterministically ordered.
inline std::vector<IntVec> cone_extreme_rays(const std::vector<std::vector<Rational>>& rows_in, int dim) {
    const std::size_t d = static_cast<std::size_t>(dim);
    const std::size_t nrows = rows_in.size();
    if (d == 0) return {};

    std::vector<IntVec> rows(nrows, IntVec(d));
    for (std::size_t i = 0; i < nrows; ++i) {
        if (rows_in[i].size() != d) throw std::invalid_argument("dd: row dimension mismatch");
        Integer l = 1;
        for (const auto& c : rows_in[i]) l = boost::multiprecision::lcm(l, c.denominator());
        for (std::size_t j = 0; j < d; ++j)
            rows[i][j] = rows_in[i][j].numerator() * (l / rows_in[i][j].denominator());
        detail::make_primitive(rows[i]);
    }

    // Greedy independent subset for the simplicial start.
    std::vector<std::size_t> init;
    {
        std::vector<std::vector<Rational>> echelon;
        std::vector<std::size_t> pivot_cols;
        for (std::size_t i = 0; i < nrows && init.size() < d; ++i) {
            std::vector<Rational> v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = Rational(rows[i][j]);
            for (std::size_t r = 0; r < echelon.size(); ++r) {
                if (v[pivot_cols[r]].is_zero()) continue;
                Rational f = v[pivot_cols[r]];
                for (std::size_t j = 0; j < d; ++j) v[j] -= f * echelon[r][j];
            }
            std::size_t p = d;
            for (std::size_t j = 0; j < d; ++j)
                if (!v[j].is_zero()) {
                    p = j;
                    break;
                }
            if (p == d) continue;
            Rational inv = Rational(1) / v[p];
            for (auto& x : v) x *= inv;
            echelon.push_back(std::move(v));
            pivot_cols.push_back(p);
            init.push_back(i);
        }
    }
    if (init.size() < d) throw std::logic_error("dd: rows do not span, cone is not pointed");

    // Initial rays: columns of M^{-1} where M stacks the chosen rows.
    std::vector<detail::Ray> rays;
    {
        std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t j = 0; j < d; ++j) m[r][j] = Rational(rows[init[r]][j]);
        std::vector<std::vector<Rational>> mi;
        if (!detail::invert(std::move(m), mi)) throw std::logic_error("dd: singular start");
        for (std::size_t col = 0; col < d; ++col) {
            Integer l = 1;
            for (std::size_t r = 0; r < d; ++r) l = boost::multiprecision::lcm(l, mi[r][col].denominator());
            detail::Ray ray;
            ray.coords.resize(d);
            for (std::size_t r = 0; r < d; ++r)
                ray.coords[r] = mi[r][col].numerator() * (l / mi[r][col].denominator());
            detail::make_primitive(ray.coords);
            ray.tight = detail::empty_mask(nrows);
            rays.push_back(std::move(ray));
        }
    }

    std::vector<bool> processed(nrows, false);
    detail::Mask processed_mask = detail::empty_mask(nrows);
    auto mark_processed = [&](std::size_t idx) {
        processed[idx] = true;
        detail::mask_set(processed_mask, idx);
        for (auto& r : rays)
            if (detail::dot(rows[idx], r.coords) == 0) detail::mask_set(r.tight, idx);
    };
    for (std::size_t r : init) mark_processed(r);

    for (std::size_t idx = 0; idx < nrows; ++idx) {
        if (processed[idx]) continue;
        const IntVec& a = rows[idx];
        std::vector<Integer> val(rays.size());
        bool any_negative = false;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = detail::dot(a, rays[r].coords);
            if (val[r] < 0) any_negative = true;
        }
        if (!any_negative) {
            mark_processed(idx);
            continue;
        }

        std::vector<detail::Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) next.push_back(rays[r]);

        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                detail::Mask common = detail::mask_and(rays[p].tight, rays[q].tight);
                if (detail::mask_popcount(common) + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == p || t == q) continue;
                    if (detail::mask_subset(common, rays[t].tight)) adjacent = false;
                }
                if (!adjacent) continue;

                detail::Ray born;
                born.coords.resize(d);
                for (std::size_t j = 0; j < d; ++j)
                    born.coords[j] = val[p] * rays[q].coords[j] - val[q] * rays[p].coords[j];
                detail::make_primitive(born.coords);
                born.tight = detail::empty_mask(nrows);
                for (std::size_t t = 0; t < nrows; ++t)
                    if (processed[t] && detail::dot(rows[t], born.coords) == 0) detail::mask_set(born.tight, t);
                next.push_back(std::move(born));
            }
        }
        rays = std::move(next);
        mark_processed(idx);
    }

    std::vector<IntVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.coords));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dd
}  // namespace clutterkit
