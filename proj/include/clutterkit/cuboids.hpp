#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clutterkit/binary_space.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/dd.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/polyhedra.hpp"

namespace clutterkit {

inline constexpr int kCubeIdealWidthCap = 7;
inline constexpr int kFacetWidthCap = 6;

/// A finite set of 0/1 points of one width, lex-sorted and distinct.
struct ZeroOneSet {
    int width = 0;
    std::vector<BitVector> points;

    static ZeroOneSet of(int width, std::vector<BitVector> pts) {
        for (const auto& p : pts)
            if (p.width() != width) throw std::invalid_argument("ZeroOneSet: width mismatch");
        std::sort(pts.begin(), pts.end(), BitVectorLex{});
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return ZeroOneSet{width, std::move(pts)};
    }

    static ZeroOneSet from_space(const BinarySpace& s, int rank_cap = kSpaceEnumRankCap) {
        return ZeroOneSet{s.width(), s.enumerate_points(rank_cap)};
    }

    bool contains(const BitVector& p) const {
        return std::binary_search(points.begin(), points.end(), p, BitVectorLex{});
    }

    /// True when the set is GF(2)-closed (then it is exactly a binary space).
    bool is_binary_space() const {
        if (points.empty()) return false;
        BinarySpace s = BinarySpace::span(width, points);
        if (s.rank() > 40) return false;  // could never hold that many points
        return points.size() == (std::size_t{1} << s.rank());
    }

    friend bool operator==(const ZeroOneSet& a, const ZeroOneSet& b) {
        return a.width == b.width && a.points == b.points;
    }
};

/// Clutter over [2n] whose members encode the points: coordinate i (0-based)
/// owns elements 2i+1 and 2i+2, with 2i+1 chosen exactly when p_i = 1.
inline Clutter cuboid(const ZeroOneSet& s) {
    if (s.points.empty()) throw std::invalid_argument("cuboid: empty point set");
    std::vector<BitVector> members;
    members.reserve(s.points.size());
    for (const auto& p : s.points) {
        BitVector m(2 * s.width);
        for (int i = 0; i < s.width; ++i) m.set(p.get(i) ? 2 * i : 2 * i + 1, true);
        members.push_back(std::move(m));
    }
    return Clutter::from_incidence(2 * s.width, std::move(members));
}

struct CuboidView {
    ZeroOneSet set;
    std::vector<std::pair<int, int>> pairs;  // 1-based labels; coordinate i <-> (first, second)
};

/// Recognizes C as a cuboid: a perfect pairing of the ground set such that every
/// member meets every pair exactly once. The pairing is the lexicographically
/// first one; coordinates are complemented so the lexicographically smallest raw
/// point becomes the zero point.
inline std::optional<CuboidView> as_cuboid(const Clutter& c) {
    int n = c.ground_size();
    if (n % 2 != 0 || n == 0 || c.member_count() == 0) return std::nullopt;

    std::vector<BitVector> sig;
    sig.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) sig.push_back(c.element_signature(v));

    auto complementary = [&](int u, int v) {
        return (sig[static_cast<std::size_t>(u)] ^ sig[static_cast<std::size_t>(v)]) ==
               BitVector::ones(static_cast<int>(c.member_count()));
    };

    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    auto match = [&](auto&& self) -> bool {
        int u = -1;
        for (int i = 0; i < n; ++i)
            if (partner[static_cast<std::size_t>(i)] < 0) {
                u = i;
                break;
            }
        if (u < 0) return true;
        for (int v = u + 1; v < n; ++v) {
            if (partner[static_cast<std::size_t>(v)] >= 0 || !complementary(u, v)) continue;
            partner[static_cast<std::size_t>(u)] = v;
            partner[static_cast<std::size_t>(v)] = u;
            if (self(self)) return true;
            partner[static_cast<std::size_t>(u)] = -1;
            partner[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!match(match)) return std::nullopt;

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        if (partner[static_cast<std::size_t>(u)] > u) pairs.emplace_back(u, partner[static_cast<std::size_t>(u)]);

    int w = n / 2;
    std::vector<BitVector> raw;
    raw.reserve(c.member_count());
    for (const auto& m : c.members()) {
        BitVector p(w);
        for (int i = 0; i < w; ++i) p.set(i, m.get(pairs[static_cast<std::size_t>(i)].first));
        raw.push_back(std::move(p));
    }
    BitVector flip = *std::min_element(raw.begin(), raw.end(), BitVectorLex{});
    for (auto& p : raw) p ^= flip;
    for (int i = 0; i < w; ++i)
        if (flip.get(i)) std::swap(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second);

    CuboidView out;
    out.set = ZeroOneSet::of(w, std::move(raw));
    for (auto& [a, b] : pairs) out.pairs.emplace_back(a + 1, b + 1);
    return out;
}

/// Smallest coordinate (and the shared value) on which all points agree.
inline std::optional<std::pair<int, int>> agree_on_coordinate(const ZeroOneSet& s) {
    if (s.points.empty()) throw std::invalid_argument("agree_on_coordinate: empty set");
    BitVector all_one = BitVector::ones(s.width);
    BitVector all_zero = BitVector::ones(s.width);
    for (const auto& p : s.points) {
        all_one &= p;
        all_zero &= p.complement();
    }
    for (int i = 0; i < s.width; ++i) {
        if (all_zero.get(i)) return std::make_pair(i, 0);
        if (all_one.get(i)) return std::make_pair(i, 1);
    }
    return std::nullopt;
}

/// Lexicographically first subset of at most k points with no agreed coordinate.
inline std::optional<std::vector<BitVector>> min_disagreeing_subset(const ZeroOneSet& s, int k) {
    if (k < 1) return std::nullopt;
    const auto& pts = s.points;
    std::optional<std::vector<BitVector>> found;

    struct Sized {
        const std::vector<BitVector>& pts;
        int want;
        std::vector<std::size_t> pick;
        std::optional<std::vector<BitVector>>& found;
        void walk(std::size_t start, const BitVector& and1, const BitVector& and0) {
            if (found) return;
            if (static_cast<int>(pick.size()) == want) {
                if ((and1 | and0).zero()) {
                    std::vector<BitVector> out;
                    for (std::size_t i : pick) out.push_back(pts[i]);
                    found = std::move(out);
                }
                return;
            }
            for (std::size_t i = start; i < pts.size() && !found; ++i) {
                pick.push_back(i);
                walk(i + 1, and1 & pts[i], and0 & pts[i].complement());
                pick.pop_back();
            }
        }
    };
    // Sizes in increasing order so the first hit is minimum-size, lex-first.
    for (int size = 1; size <= k && !found; ++size) {
        BitVector ones = BitVector::ones(s.width);
        Sized sized{pts, size, {}, found};
        sized.walk(0, ones, ones);
    }
    return found;
}

struct CoordinateClass {
    int representative = 0;           // smallest coordinate of the class (0-based)
    std::vector<int> parallel;        // coordinates equal to the representative on all points
    std::vector<int> antiparallel;    // coordinates complementary to it on all points
};

struct CoordinateDedup {
    ZeroOneSet set;
    std::vector<CoordinateClass> classes;
};

/// Projects away duplicated coordinates (columns equal or complementary across
/// all points), keeping the smallest coordinate of each class.
inline CoordinateDedup deduplicate_coordinates(const ZeroOneSet& s) {
    if (s.points.empty()) throw std::invalid_argument("deduplicate_coordinates: empty set");
    int m = static_cast<int>(s.points.size());
    std::vector<BitVector> cols(static_cast<std::size_t>(s.width), BitVector(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < s.width; ++i)
            if (s.points[static_cast<std::size_t>(j)].get(i)) cols[static_cast<std::size_t>(i)].set(j, true);

    std::map<std::string, std::size_t> seen;  // canonical column -> class index
    std::vector<CoordinateClass> classes;
    for (int i = 0; i < s.width; ++i) {
        const BitVector& col = cols[static_cast<std::size_t>(i)];
        BitVector comp = col.complement();
        bool col_is_canonical = BitVector::lex_less(col, comp) || col == comp;
        std::string key = (col_is_canonical ? col : comp).to_string();
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, classes.size());
            CoordinateClass cl;
            cl.representative = i;
            classes.push_back(cl);
        } else {
            CoordinateClass& cl = classes[it->second];
            const BitVector& rep_col = cols[static_cast<std::size_t>(cl.representative)];
            if (col == rep_col)
                cl.parallel.push_back(i);
            else
                cl.antiparallel.push_back(i);
        }
    }

    std::vector<int> keep;
    for (const auto& cl : classes) keep.push_back(cl.representative);
    std::vector<BitVector> projected;
    projected.reserve(s.points.size());
    for (const auto& p : s.points) {
        BitVector q(static_cast<int>(keep.size()));
        for (std::size_t j = 0; j < keep.size(); ++j) q.set(static_cast<int>(j), p.get(keep[j]));
        projected.push_back(std::move(q));
    }
    return CoordinateDedup{ZeroOneSet::of(static_cast<int>(keep.size()), std::move(projected)), std::move(classes)};
}

/// Ideal as a cuboid: decided through Q(cuboid(S)) vertex integrality.
inline IdealnessResult is_cube_ideal(const ZeroOneSet& s, int width_cap = kCubeIdealWidthCap) {
    if (s.points.empty()) throw std::invalid_argument("is_cube_ideal: empty set");
    if (s.width > width_cap) throw CapExceeded("is_cube_ideal: width above cap");
    return is_ideal(cuboid(s), 2 * s.width, std::max(kVertexEnumMemberCap, 1 << s.width));
}

struct FacetClass {
    enum class Kind { lower_bound, upper_bound, generalized_set_covering, other };
    Kind kind = Kind::other;
    std::vector<int> lower;           // I of sum_I x_i + sum_J (1-x_j) >= 1 (0-based coords)
    std::vector<int> upper;           // J; for bounds, the single coordinate sits here or in lower
    std::vector<Rational> normal;     // facet inequality normal . x + offset >= 0
    Rational offset;
    std::vector<std::size_t> tight;   // indices into the point list
    bool affine_hull = false;         // inequality tight at every point (not a proper facet)
};

namespace detail {

inline std::optional<std::vector<std::size_t>> gsc_tight_set(const ZeroOneSet& s, const std::vector<int>& I,
                                                             const std::vector<int>& J) {
    std::vector<std::size_t> tight;
    for (std::size_t idx = 0; idx < s.points.size(); ++idx) {
        const auto& p = s.points[idx];
        int lhs = 0;
        for (int i : I) lhs += p.get(i) ? 1 : 0;
        for (int j : J) lhs += p.get(j) ? 0 : 1;
        if (lhs < 1) return std::nullopt;  // inequality not valid on S
        if (lhs == 1) tight.push_back(idx);
    }
    return tight;
}

}  // namespace detail

/// Full facet list of conv(S) via double description over the lifted span,
/// each facet classified against bounds and generalized set covering
/// inequalities by matching tight point sets.
inline std::vector<FacetClass> facets(const ZeroOneSet& s, int width_cap = kFacetWidthCap) {
    if (s.points.empty()) throw std::invalid_argument("facets: empty set");
    if (s.width > width_cap) throw CapExceeded("facets: width above cap");
    const int n = s.width;
    const std::size_t dlift = static_cast<std::size_t>(n) + 1;

    std::vector<std::vector<Rational>> lifted;
    for (const auto& p : s.points) {
        std::vector<Rational> q(dlift, Rational(0));
        for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = Rational(p.get(i) ? 1 : 0);
        q[dlift - 1] = Rational(1);
        lifted.push_back(std::move(q));
    }

    // Basis of the linear span of the lifted points.
    std::vector<std::vector<Rational>> basis;
    {
        std::vector<std::vector<Rational>> echelon;
        std::vector<std::size_t> pivots;
        for (const auto& q : lifted) {
            std::vector<Rational> v = q;
            for (std::size_t r = 0; r < echelon.size(); ++r)
                if (!v[pivots[r]].is_zero()) {
                    Rational f = v[pivots[r]];
                    for (std::size_t j = 0; j < dlift; ++j) v[j] -= f * echelon[r][j];
                }
            std::size_t p = dlift;
            for (std::size_t j = 0; j < dlift; ++j)
                if (!v[j].is_zero()) {
                    p = j;
                    break;
                }
            if (p == dlift) continue;
            Rational inv = Rational(1) / v[p];
            for (auto& x : v) x *= inv;
            echelon.push_back(v);
            pivots.push_back(p);
            basis.push_back(q);
        }
    }
    const std::size_t k = basis.size();

    // Polar cone in span coordinates: one row per point, entries basis_j . q_i.
    std::vector<std::vector<Rational>> rows;
    for (const auto& q : lifted) {
        std::vector<Rational> row(k, Rational(0));
        for (std::size_t j = 0; j < k; ++j) {
            Rational dot(0);
            for (std::size_t t = 0; t < dlift; ++t) dot += basis[j][t] * q[t];
            row[j] = dot;
        }
        rows.push_back(std::move(row));
    }

    std::vector<FacetClass> out;
    for (const auto& w : dd::cone_extreme_rays(rows, static_cast<int>(k))) {
        std::vector<Rational> u(dlift, Rational(0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < dlift; ++t) u[t] += Rational(w[j]) * basis[j][t];

        FacetClass f;
        f.normal.assign(u.begin(), u.end() - 1);
        f.offset = u[dlift - 1];
        for (std::size_t idx = 0; idx < lifted.size(); ++idx) {
            Rational dot(0);
            for (std::size_t t = 0; t < dlift; ++t) dot += u[t] * lifted[idx][t];
            if (dot.is_zero()) f.tight.push_back(idx);
        }
        if (f.tight.empty()) continue;  // the far face, not a facet of conv(S)

        // Classify: bounds first, then generalized set covering patterns.
        bool classified = false;
        for (int i = 0; i < n && !classified; ++i) {
            std::vector<std::size_t> tight;
            for (std::size_t idx = 0; idx < s.points.size(); ++idx)
                if (!s.points[idx].get(i)) tight.push_back(idx);
            if (tight == f.tight && !tight.empty()) {
                f.kind = FacetClass::Kind::lower_bound;
                f.lower = {i};
                classified = true;
            }
        }
        for (int i = 0; i < n && !classified; ++i) {
            std::vector<std::size_t> tight;
            for (std::size_t idx = 0; idx < s.points.size(); ++idx)
                if (s.points[idx].get(i)) tight.push_back(idx);
            if (tight == f.tight && !tight.empty()) {
                f.kind = FacetClass::Kind::upper_bound;
                f.upper = {i};
                classified = true;
            }
        }
        if (!classified) {
            // Ternary sweep over disjoint (I, J); digit 1 puts the coordinate in I,
            // digit 2 in J.
            std::vector<int> digit(static_cast<std::size_t>(n), 0);
            auto advance = [&]() {
                for (int i = 0; i < n; ++i) {
                    if (digit[static_cast<std::size_t>(i)] < 2) {
                        ++digit[static_cast<std::size_t>(i)];
                        std::fill(digit.begin(), digit.begin() + i, 0);
                        return true;
                    }
                }
                return false;
            };
            while (!classified && advance()) {
                std::vector<int> I, J;
                for (int i = 0; i < n; ++i) {
                    if (digit[static_cast<std::size_t>(i)] == 1) I.push_back(i);
                    if (digit[static_cast<std::size_t>(i)] == 2) J.push_back(i);
                }
                auto tight = detail::gsc_tight_set(s, I, J);
                if (tight && *tight == f.tight) {
                    f.kind = FacetClass::Kind::generalized_set_covering;
                    f.lower = I;
                    f.upper = J;
                    classified = true;
                }
            }
        }
        out.push_back(std::move(f));
    }

    std::sort(out.begin(), out.end(), [](const FacetClass& a, const FacetClass& b) {
        for (std::size_t j = 0; j < a.normal.size(); ++j) {
            if (a.normal[j] < b.normal[j]) return true;
            if (b.normal[j] < a.normal[j]) return false;
        }
        return a.offset < b.offset;
    });

    // When conv(S) is not full-dimensional the description also needs its
    // affine hull. Constant coordinates and duplicated coordinates realize the
    // classifiable equations; anything beyond them is reported as `other`.
    if (k < dlift) {
        std::vector<std::size_t> all_tight(s.points.size());
        for (std::size_t i = 0; i < s.points.size(); ++i) all_tight[i] = i;

        std::vector<std::vector<Rational>> hull_normals;  // echelon of classified (normal, offset)
        auto try_add = [&](std::vector<Rational> v) {
            for (const auto& row : hull_normals) {
                std::size_t p = 0;
                while (p < dlift && row[p].is_zero()) ++p;
                if (p < dlift && !v[p].is_zero()) {
                    Rational f = v[p] / row[p];
                    for (std::size_t j = 0; j < dlift; ++j) v[j] -= f * row[j];
                }
            }
            bool zero = true;
            for (const auto& q : v)
                if (!q.is_zero()) zero = false;
            if (zero) return false;
            hull_normals.push_back(std::move(v));
            return true;
        };
        auto push_entry = [&](FacetClass::Kind kind, std::vector<int> I, std::vector<int> J,
                              std::vector<Rational> normal, Rational offset) {
            FacetClass f;
            f.kind = kind;
            f.lower = std::move(I);
            f.upper = std::move(J);
            f.normal = std::move(normal);
            f.offset = std::move(offset);
            f.tight = all_tight;
            f.affine_hull = true;
            out.push_back(std::move(f));
        };

        for (int i = 0; i < n; ++i) {
            bool all0 = true, all1 = true;
            for (const auto& p : s.points) (p.get(i) ? all0 : all1) = false;
            if (!all0 && !all1) continue;
            std::vector<Rational> v(dlift, Rational(0));
            v[static_cast<std::size_t>(i)] = Rational(1);
            v[dlift - 1] = all1 ? Rational(-1) : Rational(0);
            if (!try_add(v)) continue;
            std::vector<Rational> normal(static_cast<std::size_t>(n), Rational(0));
            normal[static_cast<std::size_t>(i)] = all0 ? Rational(1) : Rational(-1);
            if (all0) {
                push_entry(FacetClass::Kind::lower_bound, {i}, {}, normal, Rational(0));
                for (auto& q : normal) q = -q;
                push_entry(FacetClass::Kind::generalized_set_covering, {}, {i}, normal, Rational(0));
            } else {
                push_entry(FacetClass::Kind::upper_bound, {}, {i}, normal, Rational(1));
                for (auto& q : normal) q = -q;
                push_entry(FacetClass::Kind::generalized_set_covering, {i}, {}, normal, Rational(-1));
            }
        }
        CoordinateDedup dedup = deduplicate_coordinates(s);
        for (const auto& cl : dedup.classes) {
            for (int other : cl.parallel) {
                std::vector<Rational> v(dlift, Rational(0));
                v[static_cast<std::size_t>(cl.representative)] = Rational(1);
                v[static_cast<std::size_t>(other)] = Rational(-1);
                if (!try_add(v)) continue;
                std::vector<Rational> normal(static_cast<std::size_t>(n), Rational(0));
                normal[static_cast<std::size_t>(cl.representative)] = Rational(1);
                normal[static_cast<std::size_t>(other)] = Rational(-1);
                push_entry(FacetClass::Kind::generalized_set_covering, {cl.representative}, {other}, normal,
                           Rational(0));
                for (auto& q : normal) q = -q;
                push_entry(FacetClass::Kind::generalized_set_covering, {other}, {cl.representative}, normal,
                           Rational(0));
            }
            for (int other : cl.antiparallel) {
                std::vector<Rational> v(dlift, Rational(0));
                v[static_cast<std::size_t>(cl.representative)] = Rational(1);
                v[static_cast<std::size_t>(other)] = Rational(1);
                v[dlift - 1] = Rational(-1);
                if (!try_add(v)) continue;
                std::vector<Rational> normal(static_cast<std::size_t>(n), Rational(0));
                normal[static_cast<std::size_t>(cl.representative)] = Rational(1);
                normal[static_cast<std::size_t>(other)] = Rational(1);
                push_entry(FacetClass::Kind::generalized_set_covering, {cl.representative, other}, {}, normal,
                           Rational(-1));
                for (auto& q : normal) q = -q;
                push_entry(FacetClass::Kind::generalized_set_covering, {}, {cl.representative, other}, normal,
                           Rational(1));
            }
        }

        // Completion: any affine-hull direction not yet covered is unclassifiable.
        // The kernel of the lifted point matrix spans all (normal, offset) pairs
        // vanishing on S.
        {
            std::vector<std::vector<Rational>> echelon;
            std::vector<std::size_t> pivots;
            for (const auto& q : lifted) {
                std::vector<Rational> v = q;
                for (std::size_t r = 0; r < echelon.size(); ++r)
                    if (!v[pivots[r]].is_zero()) {
                        Rational f = v[pivots[r]];
                        for (std::size_t j = 0; j < dlift; ++j) v[j] -= f * echelon[r][j];
                    }
                std::size_t p = dlift;
                for (std::size_t j = 0; j < dlift; ++j)
                    if (!v[j].is_zero()) {
                        p = j;
                        break;
                    }
                if (p == dlift) continue;
                Rational inv = Rational(1) / v[p];
                for (auto& x : v) x *= inv;
                // Keep fully reduced so the kernel formula below applies.
                for (std::size_t r = 0; r < echelon.size(); ++r)
                    if (!echelon[r][p].is_zero()) {
                        Rational f = echelon[r][p];
                        for (std::size_t j = 0; j < dlift; ++j) echelon[r][j] -= f * v[j];
                    }
                echelon.push_back(std::move(v));
                pivots.push_back(p);
            }
            std::vector<bool> is_pivot(dlift, false);
            for (std::size_t p : pivots) is_pivot[p] = true;
            for (std::size_t free = 0; free < dlift; ++free) {
                if (is_pivot[free]) continue;
                std::vector<Rational> kernel(dlift, Rational(0));
                kernel[free] = Rational(1);
                for (std::size_t r = 0; r < echelon.size(); ++r) kernel[pivots[r]] = -echelon[r][free];
                if (!try_add(kernel)) continue;
                FacetClass f;
                f.kind = FacetClass::Kind::other;
                f.normal.assign(kernel.begin(), kernel.end() - 1);
                f.offset = kernel[dlift - 1];
                f.tight = all_tight;
                f.affine_hull = true;
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

/// All facets representable as bounds or generalized set covering inequalities?
inline bool facets_all_classified(const std::vector<FacetClass>& fs) {
    for (const auto& f : fs)
        if (f.kind == FacetClass::Kind::other) return false;
    return true;
}

/// Description-form test: does the box together with every generalized set
/// covering inequality valid on S carve out exactly conv(S)? Equivalent to the
/// per-facet classification when conv(S) is full-dimensional, and the right
/// generalization when it is not.
inline bool cube_ideal_by_facet_description(const ZeroOneSet& s, int width_cap = kFacetWidthCap) {
    if (s.points.empty()) throw std::invalid_argument("cube_ideal_by_facet_description: empty set");
    if (s.width > width_cap) throw CapExceeded("cube_ideal_by_facet_description: width above cap");
    const int n = s.width;
    const std::size_t d = static_cast<std::size_t>(n) + 1;  // homogenizing coordinate t last

    std::vector<std::vector<Rational>> rows;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> row(d, Rational(0));
        row[j] = Rational(1);
        rows.push_back(std::move(row));  // x_i >= 0 and t >= 0
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> row(d, Rational(0));
        row[static_cast<std::size_t>(i)] = Rational(-1);
        row[d - 1] = Rational(1);  // x_i <= 1
        rows.push_back(std::move(row));
    }
    // Ternary sweep over disjoint (I, J): digit 1 -> I, digit 2 -> J.
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    auto advance = [&]() {
        for (int i = 0; i < n; ++i) {
            if (digit[static_cast<std::size_t>(i)] < 2) {
                ++digit[static_cast<std::size_t>(i)];
                std::fill(digit.begin(), digit.begin() + i, 0);
                return true;
            }
        }
        return false;
    };
    while (advance()) {
        bool valid = true;
        for (const auto& p : s.points) {
            int lhs = 0;
            for (int i = 0; i < n; ++i) {
                if (digit[static_cast<std::size_t>(i)] == 1 && p.get(i)) ++lhs;
                if (digit[static_cast<std::size_t>(i)] == 2 && !p.get(i)) ++lhs;
            }
            if (lhs < 1) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        std::vector<Rational> row(d, Rational(0));
        int j_count = 0;
        for (int i = 0; i < n; ++i) {
            if (digit[static_cast<std::size_t>(i)] == 1) row[static_cast<std::size_t>(i)] = Rational(1);
            if (digit[static_cast<std::size_t>(i)] == 2) {
                row[static_cast<std::size_t>(i)] = Rational(-1);
                ++j_count;
            }
        }
        row[d - 1] = Rational(j_count - 1);
        rows.push_back(std::move(row));
    }

    for (const auto& ray : dd::cone_extreme_rays(rows, static_cast<int>(d))) {
        if (ray[d - 1] == 0) continue;  // impossible for a subset of the box, kept for safety
        BitVector point(n);
        bool integral_01 = true;
        for (int i = 0; i < n && integral_01; ++i) {
            if (ray[static_cast<std::size_t>(i)] == 0)
                continue;
            else if (ray[static_cast<std::size_t>(i)] == ray[d - 1])
                point.set(i, true);
            else
                integral_01 = false;
        }
        if (!integral_01 || !s.contains(point)) return false;
    }
    return true;
}

}  // namespace clutterkit
