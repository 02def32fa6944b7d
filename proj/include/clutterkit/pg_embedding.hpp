#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "clutterkit/binary_matroid.hpp"
#include "clutterkit/binary_space.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/cuboids.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/polyhedra.hpp"

namespace clutterkit {

inline constexpr int kPgWidthCap = 20;
inline constexpr long kEmbedNodeCap = 1L << 16;

/// Largest subspace S' of S built by extending a basis of the orthogonal
/// complement with vectors whose span stays clear of every unit vector; after
/// projecting away duplicated coordinates, S' is the cocycle space of a
/// projective geometry. Requires that the points of S do not all agree on any
/// coordinate.
inline BinarySpace pg_subspace(const BinarySpace& s, int width_cap = kPgWidthCap) {
    const int n = s.width();
    if (n > width_cap || n > 26) throw CapExceeded("pg_subspace: width above cap");
    if (s.all_zero_coordinate())
        throw std::invalid_argument("pg_subspace: points agree on a coordinate");

    BinarySpace extended = s.orthogonal_complement();
    auto excludes_units = [n](const BinarySpace& space) {
        // A reduced basis spans a unit vector iff one of its rows is one.
        for (const auto& row : space.basis())
            if (row.popcount() == 1) return false;
        return true;
    };
    if (!excludes_units(extended))
        throw std::logic_error("pg_subspace: complement contains a unit vector");

    // Candidates in lexicographic order: coordinate 0 is the most significant bit.
    for (std::uint64_t counter = 1; counter < (std::uint64_t{1} << n); ++counter) {
        BitVector v(n);
        for (int i = 0; i < n; ++i)
            if ((counter >> (n - 1 - i)) & 1) v.set(i, true);
        if (extended.contains(v)) continue;
        BinarySpace trial = extended;
        trial.insert(v);
        if (excludes_units(trial)) extended = std::move(trial);
    }

    // Maximality pass: nothing else is addable.
    for (std::uint64_t counter = 1; counter < (std::uint64_t{1} << n); ++counter) {
        BitVector v(n);
        for (int i = 0; i < n; ++i)
            if ((counter >> (n - 1 - i)) & 1) v.set(i, true);
        if (extended.contains(v)) continue;
        BinarySpace trial = extended;
        trial.insert(v);
        if (excludes_units(trial)) throw std::logic_error("pg_subspace: extension was not maximal");
    }

    BinarySpace result = extended.orthogonal_complement();

    // The result sits inside the input and still avoids agreed coordinates.
    for (const auto& row : result.basis())
        if (!s.contains(row)) throw std::logic_error("pg_subspace: result escapes the input space");
    if (result.all_zero_coordinate()) throw std::logic_error("pg_subspace: result has an agreed coordinate");

    // Deduplicated, the result must be the cocycle space of a projective geometry.
    ZeroOneSet pts = ZeroOneSet::from_space(result);
    CoordinateDedup dedup = deduplicate_coordinates(pts);
    BinarySpace dedup_space = BinarySpace::span(dedup.set.width, dedup.set.points);
    BinaryMatroid check = BinaryMatroid::from_representation(dedup_space.basis());
    if (!is_simple(check) || is_projective_geometry(check) != result.rank())
        throw std::logic_error("pg_subspace: deduplicated result is not a projective geometry");
    return result;
}

/// Witness that a subset of the members is a duplication of the cuboid of
/// cocycle(PG(ell-1, 2)).
struct Embedding {
    int ell = 0;
    std::vector<std::size_t> member_indices;        // into the clutter's canonical member order
    std::vector<std::vector<int>> element_classes;  // duplicate classes of the subclutter (1-based)
};

namespace detail {

inline Embedding finish_embedding(const Clutter& c, int ell, std::vector<std::size_t> indices) {
    std::vector<BitVector> selected;
    for (std::size_t i : indices) selected.push_back(c.members()[i]);
    auto dd = deduplicate(Clutter::from_incidence(c.ground_size(), std::move(selected)));
    Embedding out;
    out.ell = ell;
    std::sort(indices.begin(), indices.end());
    out.member_indices = std::move(indices);
    out.element_classes = std::move(dd.classes);
    return out;
}

}  // namespace detail

/// Checks the embedding definition: the chosen members cover the ground set and
/// deduplicate to the cuboid of the cocycle space of PG(ell-1, 2).
inline bool validate_embedding(const Clutter& c, const Embedding& emb) {
    if (emb.member_indices.empty()) return false;
    std::vector<BitVector> selected;
    BitVector covered(c.ground_size());
    for (std::size_t i : emb.member_indices) {
        if (i >= c.member_count()) return false;
        selected.push_back(c.members()[i]);
        covered |= c.members()[i];
    }
    if (covered != BitVector::ones(c.ground_size())) return false;
    if (selected.size() != (std::size_t{1} << emb.ell)) return false;

    auto dd = deduplicate(Clutter::from_incidence(c.ground_size(), std::move(selected)));
    auto view = as_cuboid(dd.clutter);
    if (!view) return false;
    if (!view->set.is_binary_space()) return false;
    BinarySpace span = BinarySpace::span(view->set.width, view->set.points);
    if (span.rank() != emb.ell) return false;
    if (span.all_zero_coordinate()) return false;
    BinaryMatroid m = BinaryMatroid::from_representation(span.basis());
    if (!is_simple(m)) return false;
    return is_projective_geometry(m) == emb.ell;
}

namespace detail {

struct EmbedBudget {
    long remaining;
    void spend() {
        if (--remaining < 0) throw CapExceeded("embeds_pg: candidate-subset cap exceeded");
    }
};

// PG(0,2): two members partitioning the ground set.
inline std::optional<Embedding> embed_level1(const Clutter& c) {
    BitVector ones = BitVector::ones(c.ground_size());
    for (std::size_t i = 0; i < c.member_count(); ++i)
        for (std::size_t j = i + 1; j < c.member_count(); ++j) {
            if (c.members()[i].intersects(c.members()[j])) continue;
            if ((c.members()[i] | c.members()[j]) == ones)
                return finish_embedding(c, 1, {i, j});
        }
    return std::nullopt;
}

// PG(1,2): four members such that every element lies in exactly two of them
// and all six membership patterns occur.
inline std::optional<Embedding> embed_level2(const Clutter& c, EmbedBudget& budget) {
    const auto& ms = c.members();
    const std::size_t m = ms.size();
    BitVector ones = BitVector::ones(c.ground_size());
    std::vector<std::size_t> pick;
    std::optional<Embedding> found;

    auto walk = [&](auto&& self, std::size_t start, const BitVector& once, const BitVector& twice) -> void {
        if (found) return;
        budget.spend();
        if (pick.size() == 4) {
            if (twice != ones) return;
            // All six pairwise patterns nonempty.
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = a + 1; b < 4; ++b) {
                    BitVector pattern = ms[pick[a]] & ms[pick[b]];
                    for (std::size_t o = 0; o < 4; ++o)
                        if (o != a && o != b) pattern &= ms[pick[o]].complement();
                    if (pattern.zero()) return;
                }
            found = finish_embedding(c, 2, pick);
            return;
        }
        for (std::size_t i = start; i < m && !found; ++i) {
            if (twice.intersects(ms[i])) continue;  // some element would hit three times
            pick.push_back(i);
            self(self, i + 1, once | ms[i], twice | (once & ms[i]));
            pick.pop_back();
        }
    };
    walk(walk, 0, BitVector(c.ground_size()), BitVector(c.ground_size()));
    return found;
}

// Structured search used when the deduplicated clutter is the cuboid of a
// GF(2)-closed point set (every binary tangled clutter is): translate, pick a
// small disagreeing subset, and grow the projective-geometry subspace.
inline std::optional<Embedding> embed_structured(const Clutter& c, int ell_max, int pg_width_cap) {
    auto dd = deduplicate(c);
    auto view = as_cuboid(dd.clutter);
    if (!view || !view->set.is_binary_space()) return std::nullopt;
    BinarySpace space = BinarySpace::span(view->set.width, view->set.points);
    if (space.all_zero_coordinate()) return std::nullopt;
    if (space.width() > pg_width_cap) throw CapExceeded("embeds_pg: cuboid width above pg cap");

    auto subset = min_disagreeing_subset(view->set, ell_max + 1);
    if (!subset) return std::nullopt;

    // Translate so the subset contains the origin, then span it.
    std::vector<BitVector> translated;
    for (const auto& p : *subset) translated.push_back(p ^ subset->back());
    BinarySpace small = BinarySpace::span(space.width(), translated);
    BinarySpace pg = pg_subspace(small, pg_width_cap);

    // Members of the deduplicated cuboid whose point lies in the subspace.
    std::vector<std::size_t> indices;
    for (std::size_t j = 0; j < dd.clutter.member_count(); ++j) {
        BitVector point(view->set.width);
        for (int i = 0; i < view->set.width; ++i)
            point.set(i, dd.clutter.members()[j].get(view->pairs[static_cast<std::size_t>(i)].first - 1));
        if (pg.contains(point)) indices.push_back(j);
    }
    if (indices.size() != (std::size_t{1} << pg.rank()))
        throw std::logic_error("embeds_pg: subspace member count mismatch");

    // Lift from deduplicated members back to the original member order.
    std::vector<std::size_t> original;
    for (std::size_t j : indices) {
        const BitVector& target = dd.clutter.members()[j];
        bool matched = false;
        for (std::size_t t = 0; t < c.member_count() && !matched; ++t) {
            BitVector projected(dd.clutter.ground_size());
            for (std::size_t r = 0; r < dd.to_parent.size(); ++r)
                projected.set(static_cast<int>(r), c.members()[t].get(dd.to_parent[r] - 1));
            if (projected == target) {
                original.push_back(t);
                matched = true;
            }
        }
        if (!matched) throw std::logic_error("embeds_pg: dedup lift failed");
    }
    return finish_embedding(c, pg.rank(), std::move(original));
}

// General PG(2,2) search: 8-subsets in which every element lies in exactly
// four members, validated structurally.
inline std::optional<Embedding> embed_level3_search(const Clutter& c, EmbedBudget& budget) {
    const auto& ms = c.members();
    const std::size_t m = ms.size();
    std::vector<std::size_t> pick;
    std::vector<int> count(static_cast<std::size_t>(c.ground_size()), 0);
    std::optional<Embedding> found;

    auto walk = [&](auto&& self, std::size_t start) -> void {
        if (found) return;
        budget.spend();
        if (pick.size() == 8) {
            for (int v = 0; v < c.ground_size(); ++v)
                if (count[static_cast<std::size_t>(v)] != 4) return;
            Embedding candidate = finish_embedding(c, 3, pick);
            if (validate_embedding(c, candidate)) found = std::move(candidate);
            return;
        }
        for (std::size_t i = start; i < m && !found; ++i) {
            bool overfull = false;
            for (int v : ms[i].support())
                if (count[static_cast<std::size_t>(v)] == 4) {
                    overfull = true;
                    break;
                }
            if (overfull) continue;
            for (int v : ms[i].support()) ++count[static_cast<std::size_t>(v)];
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
            for (int v : ms[i].support()) --count[static_cast<std::size_t>(v)];
        }
    };
    walk(walk, 0);
    return found;
}

}  // namespace detail

/// Smallest ell <= ell_max such that some member subset is a duplication of the
/// cuboid of cocycle(PG(ell-1, 2)). Levels 1 and 2 are searched directly; level
/// 3 goes through the binary-space structure when available and otherwise a
/// capped subset search.
inline std::optional<Embedding> embeds_pg(const Clutter& c, int ell_max = 3,
                                          long node_cap = kEmbedNodeCap,
                                          int pg_width_cap = kPgWidthCap) {
    if (ell_max < 1 || ell_max > 3) throw std::invalid_argument("embeds_pg: ell_max must be 1..3");
    if (c.member_count() == 0 || c.ground_size() == 0) return std::nullopt;

    if (auto e = detail::embed_level1(c)) return e;
    if (ell_max < 2) return std::nullopt;

    {
        detail::EmbedBudget level2_budget{node_cap};
        if (auto e = detail::embed_level2(c, level2_budget)) return e;
    }
    if (ell_max < 3) return std::nullopt;

    if (auto e = detail::embed_structured(c, 3, pg_width_cap)) {
        if (e->ell != 3) throw std::logic_error("embeds_pg: structured search found a smaller level");
        return e;
    }
    // The structured route is complete for cuboids of binary spaces.
    {
        auto dd = deduplicate(c);
        auto view = as_cuboid(dd.clutter);
        if (view && view->set.is_binary_space()) return std::nullopt;
    }
    detail::EmbedBudget level3_budget{node_cap};
    return detail::embed_level3_search(c, level3_budget);
}

/// Uniform packing of cuboid(cocycle(PG(k, 2))): weight 1/2^k on each of the
/// 2^(k+1) members, value exactly two.
struct PgPackingResult {
    Clutter clutter;
    FractionalPacking packing;
};

inline PgPackingResult pg_packing(int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("pg_packing: k must be 0..3");
    BinaryMatroid pg = projective_geometry(k + 1);
    ZeroOneSet points = ZeroOneSet::from_space(pg.cocycles());
    Clutter cl = cuboid(points);
    std::vector<Rational> weights(cl.member_count(), Rational(Integer(1), Integer(1) << k));
    FractionalPacking packing = make_packing(cl, std::move(weights));
    if (packing.value != Rational(2)) throw std::logic_error("pg_packing: value is not two");
    for (int v = 0; v < cl.ground_size(); ++v) {
        Rational load(0);
        for (std::size_t j = 0; j < cl.member_count(); ++j)
            if (cl.members()[j].get(v)) load += packing.weights[j];
        if (load != Rational(1)) throw std::logic_error("pg_packing: uneven element load");
    }
    return PgPackingResult{std::move(cl), std::move(packing)};
}

struct QuarterPackingResult {
    FractionalPacking packing;   // over the input clutter's canonical member order
    bool idealness_assumed = false;
    int pg_rank = 0;             // rank of the projective-geometry subspace used
    std::vector<int> deleted;    // elements removed by the tangled deletion minor
};

/// Constructive value-two packing with weights in {0, 1/4, 1/2, 1} for ideal
/// binary clutters with covering number at least two. Follows the reduction:
/// tangled deletion minor, cuboid recognition, a small disagreeing subset,
/// projective-geometry subspace, uniform lift.
inline QuarterPackingResult quarter_packing(const Clutter& c, bool assume_ideal = false,
                                            int ground_cap = kVertexEnumGroundCap,
                                            int member_cap = kVertexEnumMemberCap,
                                            int pg_width_cap = kPgWidthCap) {
    if (c.has_empty_member()) throw std::invalid_argument("quarter_packing: empty member");
    auto tau = covering_number(c);
    if (!tau || *tau < 2) throw std::invalid_argument("quarter_packing: covering number below two");
    if (!is_binary(c)) throw std::invalid_argument("quarter_packing: clutter is not binary");

    bool assumed = false;
    if (assume_ideal) {
        assumed = true;
    } else {
        if (c.ground_size() > ground_cap || static_cast<int>(c.member_count()) > member_cap)
            throw CapExceeded("quarter_packing: above idealness caps; pass assume_ideal");
        if (!is_ideal(c, ground_cap, member_cap).ideal)
            throw std::invalid_argument("quarter_packing: clutter is not ideal");
    }

    auto tangled = minimal_tangled_deletion_minor(c);
    auto dd = deduplicate(tangled.clutter);
    auto view = as_cuboid(dd.clutter);
    if (!view) throw std::logic_error("quarter_packing: tangled binary minor is not a cuboid duplication");
    if (!view->set.is_binary_space())
        throw std::logic_error("quarter_packing: cuboid points do not form a binary space");

    auto subset = min_disagreeing_subset(view->set, 4);
    if (!subset)
        throw std::runtime_error("quarter_packing: no four disagreeing points; is the input really ideal?");
    std::vector<BitVector> translated;
    for (const auto& p : *subset) translated.push_back(p ^ subset->back());
    BinarySpace small = BinarySpace::span(view->set.width, translated);
    BinarySpace pg = pg_subspace(small, pg_width_cap);
    const int r = pg.rank();

    // Weights 1/2^(r-1) on the deduplicated members whose point lies in the subspace.
    Rational unit(Integer(1), Integer(1) << (r - 1));
    std::vector<Rational> dedup_weights(dd.clutter.member_count(), Rational(0));
    std::size_t chosen = 0;
    for (std::size_t j = 0; j < dd.clutter.member_count(); ++j) {
        BitVector point(view->set.width);
        for (int i = 0; i < view->set.width; ++i)
            point.set(i, dd.clutter.members()[j].get(view->pairs[static_cast<std::size_t>(i)].first - 1));
        if (pg.contains(point)) {
            dedup_weights[j] = unit;
            ++chosen;
        }
    }
    if (chosen != (std::size_t{1} << r)) throw std::logic_error("quarter_packing: support size mismatch");

    // Lift: dedup member -> tangled-minor member -> original member.
    std::vector<Rational> weights(c.member_count(), Rational(0));
    for (std::size_t j = 0; j < dd.clutter.member_count(); ++j) {
        if (dedup_weights[j].is_zero()) continue;
        const BitVector& target = dd.clutter.members()[j];
        bool matched = false;
        for (std::size_t t = 0; t < tangled.clutter.member_count() && !matched; ++t) {
            BitVector projected(dd.clutter.ground_size());
            for (std::size_t rr = 0; rr < dd.to_parent.size(); ++rr)
                projected.set(static_cast<int>(rr), tangled.clutter.members()[t].get(dd.to_parent[rr] - 1));
            if (projected != target) continue;
            matched = true;
            // The minor member, re-expanded to the original ground set.
            BitVector original(c.ground_size());
            for (std::size_t rr = 0; rr < tangled.to_parent.size(); ++rr)
                if (tangled.clutter.members()[t].get(static_cast<int>(rr)))
                    original.set(tangled.to_parent[rr] - 1, true);
            bool found = false;
            for (std::size_t u = 0; u < c.member_count() && !found; ++u)
                if (c.members()[u] == original) {
                    weights[u] = dedup_weights[j];
                    found = true;
                }
            if (!found) throw std::logic_error("quarter_packing: member lift failed");
        }
        if (!matched) throw std::logic_error("quarter_packing: dedup lift failed");
    }

    FractionalPacking packing = make_packing(c, std::move(weights));
    if (packing.value != Rational(2)) throw std::logic_error("quarter_packing: value is not two");
    Integer den = packing.denominator;
    if (!(den == 1 || den == 2 || den == 4))
        throw std::logic_error("quarter_packing: denominator is not a divisor of four");
    return QuarterPackingResult{std::move(packing), assumed, r, tangled.deleted};
}

}  // namespace clutterkit
