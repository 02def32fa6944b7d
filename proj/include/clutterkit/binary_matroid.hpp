#pragma once

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clutterkit/binary_space.hpp"
#include "clutterkit/bitvector.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/graph.hpp"

namespace clutterkit {

inline constexpr int kThreeCoverRankCap = 8;

/// Binary matroid stored by its cycle space. The ground set is an arbitrary
/// strictly increasing list of positive labels; coordinate i of the cycle
/// space corresponds to ground()[i].
class BinaryMatroid {
public:
    BinaryMatroid() = default;

    static BinaryMatroid from_cycle_space(std::vector<int> ground, BinarySpace cycles) {
        if (static_cast<int>(ground.size()) != cycles.width())
            throw std::invalid_argument("matroid: ground/cycle width mismatch");
        for (std::size_t i = 0; i < ground.size(); ++i) {
            if (ground[i] < 1 || (i > 0 && ground[i] <= ground[i - 1]))
                throw std::invalid_argument("matroid: ground labels must be strictly increasing");
        }
        BinaryMatroid m;
        m.ground_ = std::move(ground);
        m.cycles_ = std::move(cycles);
        return m;
    }

    static BinaryMatroid from_graph(const Graph& g) {
        std::vector<int> ground(static_cast<std::size_t>(g.edge_count()));
        for (int e = 0; e < g.edge_count(); ++e) ground[static_cast<std::size_t>(e)] = e + 1;
        return from_cycle_space(std::move(ground), cycle_space(g));
    }

    /// Cycle space = null space of the representation rows; cocycles = row space.
    static BinaryMatroid from_representation(const std::vector<BitVector>& rows) {
        if (rows.empty()) throw std::invalid_argument("matroid: empty representation");
        int n = rows[0].width();
        BinarySpace row_space = BinarySpace::span(n, rows);
        std::vector<int> ground(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ground[static_cast<std::size_t>(i)] = i + 1;
        return from_cycle_space(std::move(ground), row_space.orthogonal_complement());
    }

    const std::vector<int>& ground() const { return ground_; }
    int element_count() const { return static_cast<int>(ground_.size()); }
    const BinarySpace& cycles() const { return cycles_; }
    BinarySpace cocycles() const { return cycles_.orthogonal_complement(); }

    /// Matroid rank: element count minus the cycle-space dimension.
    int rank() const { return element_count() - cycles_.rank(); }

    int coordinate_of(int label) const {
        auto it = std::lower_bound(ground_.begin(), ground_.end(), label);
        if (it == ground_.end() || *it != label)
            throw std::invalid_argument("matroid: unknown element " + std::to_string(label));
        return static_cast<int>(it - ground_.begin());
    }

    bool has_element(int label) const {
        return std::binary_search(ground_.begin(), ground_.end(), label);
    }

    std::vector<int> labels_of(const BitVector& coords) const {
        std::vector<int> out;
        for (int i : coords.support()) out.push_back(ground_[static_cast<std::size_t>(i)]);
        return out;
    }

    BitVector coords_of(const std::vector<int>& labels) const {
        BitVector v(element_count());
        for (int l : labels) v.set(coordinate_of(l), true);
        return v;
    }

    /// Same matroid with the i-th ground label replaced by new_labels[i]; the
    /// labels may arrive in any order and the ground is re-sorted.
    BinaryMatroid relabeled(const std::vector<int>& new_labels) const {
        if (static_cast<int>(new_labels.size()) != element_count())
            throw std::invalid_argument("relabeled: label count mismatch");
        std::vector<int> sorted = new_labels;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> position(new_labels.size());
        for (std::size_t i = 0; i < new_labels.size(); ++i) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), new_labels[i]);
            position[i] = static_cast<int>(it - sorted.begin());
        }
        std::vector<BitVector> rows;
        for (const auto& b : cycles_.basis()) {
            BitVector r(element_count());
            for (int i : b.support()) r.set(position[static_cast<std::size_t>(i)], true);
            rows.push_back(std::move(r));
        }
        return from_cycle_space(std::move(sorted), BinarySpace::span(element_count(), rows));
    }

    friend bool operator==(const BinaryMatroid& a, const BinaryMatroid& b) {
        return a.ground_ == b.ground_ && a.cycles_ == b.cycles_;
    }

private:
    std::vector<int> ground_;
    BinarySpace cycles_;
};

inline BinaryMatroid dual(const BinaryMatroid& m) {
    return BinaryMatroid::from_cycle_space(m.ground(), m.cocycles());
}

/// Minimal nonempty cycles, in coordinate form, lex-sorted.
inline std::vector<BitVector> circuits(const BinaryMatroid& m, int rank_cap = kSpaceEnumRankCap) {
    auto pts = m.cycles().enumerate_points(rank_cap);
    std::vector<BitVector> nonzero;
    for (auto& p : pts)
        if (!p.zero()) nonzero.push_back(std::move(p));
    std::sort(nonzero.begin(), nonzero.end(),
              [](const BitVector& a, const BitVector& b) {
                  if (a.popcount() != b.popcount()) return a.popcount() < b.popcount();
                  return BitVector::lex_less(a, b);
              });
    std::vector<BitVector> minimal;
    for (const auto& p : nonzero) {
        bool dominated = false;
        for (const auto& kept : minimal)
            if (kept.subset_of(p)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end(), BitVectorLex{});
    return minimal;
}

inline std::vector<int> loops(const BinaryMatroid& m) {
    std::vector<int> out;
    for (int i = 0; i < m.element_count(); ++i)
        if (m.cycles().contains(BitVector::unit(m.element_count(), i)))
            out.push_back(m.ground()[static_cast<std::size_t>(i)]);
    return out;
}

inline std::vector<int> coloops(const BinaryMatroid& m) {
    BitVector seen(m.element_count());
    for (const auto& row : m.cycles().basis()) seen |= row;
    std::vector<int> out;
    for (int i = 0; i < m.element_count(); ++i)
        if (!seen.get(i)) out.push_back(m.ground()[static_cast<std::size_t>(i)]);
    return out;
}

/// Partition of the non-loop elements into maximal sets of pairwise parallel
/// elements (e, f parallel when {e,f} is a circuit). Singleton classes included.
inline std::vector<std::vector<int>> parallel_classes(const BinaryMatroid& m) {
    std::map<std::string, std::vector<int>> groups;
    for (int i = 0; i < m.element_count(); ++i) {
        BitVector residue = m.cycles().reduce(BitVector::unit(m.element_count(), i));
        if (residue.zero()) continue;  // loop
        groups[residue.to_string()].push_back(m.ground()[static_cast<std::size_t>(i)]);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [key, labels] : groups) classes.push_back(std::move(labels));
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return classes;
}

/// Matroid deletion: cycles avoiding the given labels, on the remaining ground.
inline BinaryMatroid deletion(const BinaryMatroid& m, const std::vector<int>& labels) {
    std::vector<int> coords;
    for (int l : labels) coords.push_back(m.coordinate_of(l));
    std::vector<int> keep_coords;
    std::vector<int> keep_labels;
    std::vector<bool> drop(static_cast<std::size_t>(m.element_count()), false);
    for (int c : coords) drop[static_cast<std::size_t>(c)] = true;
    for (int i = 0; i < m.element_count(); ++i)
        if (!drop[static_cast<std::size_t>(i)]) {
            keep_coords.push_back(i);
            keep_labels.push_back(m.ground()[static_cast<std::size_t>(i)]);
        }
    BinarySpace restricted = m.cycles().vanishing_on(coords).restricted_to(keep_coords);
    return BinaryMatroid::from_cycle_space(std::move(keep_labels), std::move(restricted));
}

/// Deletes loops and all but the smallest element of every parallel class.
inline BinaryMatroid simplify(const BinaryMatroid& m) {
    std::vector<int> to_delete = loops(m);
    for (const auto& cl : parallel_classes(m))
        for (std::size_t j = 1; j < cl.size(); ++j) to_delete.push_back(cl[j]);
    std::sort(to_delete.begin(), to_delete.end());
    return deletion(m, to_delete);
}

inline bool is_simple(const BinaryMatroid& m) {
    if (!loops(m).empty()) return false;
    for (const auto& cl : parallel_classes(m))
        if (cl.size() > 1) return false;
    return true;
}

/// Representation of PG(l-1, 2): identity columns first, then the remaining
/// nonzero vectors ascending as binary numbers with row 0 the top bit.
inline std::vector<BitVector> projective_geometry_matrix(int ell) {
    if (ell < 1 || ell > 6) throw std::invalid_argument("projective_geometry: order out of range");
    int n = (1 << ell) - 1;
    std::vector<int> columns;
    for (int r = 0; r < ell; ++r) columns.push_back(1 << (ell - 1 - r));
    for (int v = 1; v <= n; ++v)
        if (__builtin_popcount(static_cast<unsigned>(v)) >= 2) columns.push_back(v);
    std::vector<BitVector> rows(static_cast<std::size_t>(ell), BitVector(n));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < ell; ++r)
            if ((columns[static_cast<std::size_t>(c)] >> (ell - 1 - r)) & 1)
                rows[static_cast<std::size_t>(r)].set(c, true);
    return rows;
}

/// PG(l-1, 2): all nonzero vectors of {0,1}^l as columns.
inline BinaryMatroid projective_geometry(int ell) {
    BinaryMatroid m = BinaryMatroid::from_representation(projective_geometry_matrix(ell));
    if (m.rank() != ell) throw std::logic_error("projective_geometry: unexpected rank");
    auto cocycle_points = m.cocycles().enumerate_points();
    if (cocycle_points.size() != (std::size_t{1} << ell))
        throw std::logic_error("projective_geometry: unexpected cocycle count");
    for (const auto& d : cocycle_points)
        if (!d.zero() && d.popcount() != (1 << (ell - 1)))
            throw std::logic_error("projective_geometry: unexpected cocycle size");
    return m;
}

inline BinaryMatroid fano() { return projective_geometry(3); }

/// M(V8)*: dual of the graphic matroid of the Wagner graph.
inline BinaryMatroid wagner_dual() { return dual(BinaryMatroid::from_graph(wagner_graph())); }

/// Simple matroids in which every two elements share a triangle and the element
/// count is 2^rank - 1 are projective geometries; returns that rank.
inline std::optional<int> is_projective_geometry(const BinaryMatroid& m) {
    if (!is_simple(m)) throw std::invalid_argument("is_projective_geometry: matroid not simple");
    int n = m.element_count();
    int r = m.rank();
    if (n < 1 || r < 1 || r > 30 || n != (1 << r) - 1) return std::nullopt;
    // e,f lie in a triangle iff reduce(e + f) equals reduce(g) for some third g.
    std::map<std::string, std::vector<int>> residues;
    for (int i = 0; i < n; ++i)
        residues[m.cycles().reduce(BitVector::unit(n, i)).to_string()].push_back(i);
    for (int e = 0; e < n; ++e)
        for (int f = e + 1; f < n; ++f) {
            BitVector pair(n);
            pair.set(e, true);
            pair.set(f, true);
            auto it = residues.find(m.cycles().reduce(pair).to_string());
            bool triangle = false;
            if (it != residues.end())
                for (int g : it->second)
                    if (g != e && g != f) triangle = true;
            if (!triangle) return std::nullopt;
        }
    return r;
}

enum class SumKind { one_sum, two_sum, y_sum };

inline const char* sum_kind_name(SumKind k) {
    switch (k) {
        case SumKind::one_sum: return "1-sum";
        case SumKind::two_sum: return "2-sum";
        case SumKind::y_sum: return "Y-sum";
    }
    return "?";
}

struct MatroidSum {
    BinaryMatroid matroid;
    SumKind kind;
    std::vector<int> shared;  // labels of E1 intersect E2
};

namespace detail {

// Re-coordinatizes v onto the target ground; labels absent from the target are
// dropped (the Y-/2-sum composition relies on this to project shared elements).
inline BitVector embed_into(const BitVector& v, const BinaryMatroid& from, const std::vector<int>& big_ground) {
    BitVector out(static_cast<int>(big_ground.size()));
    for (int i : v.support()) {
        int label = from.ground()[static_cast<std::size_t>(i)];
        auto it = std::lower_bound(big_ground.begin(), big_ground.end(), label);
        if (it != big_ground.end() && *it == label) out.set(static_cast<int>(it - big_ground.begin()), true);
    }
    return out;
}

}  // namespace detail

/// M1 triangle M2 over ground E1 symmetric-difference E2; the overlap must match
/// a 1-sum (disjoint), 2-sum (one shared non-loop non-coloop element) or Y-sum
/// (a shared 3-element cocircuit of both containing no circuit of either).
inline MatroidSum matroid_sum(const BinaryMatroid& m1, const BinaryMatroid& m2) {
    std::vector<int> shared;
    std::set_intersection(m1.ground().begin(), m1.ground().end(), m2.ground().begin(), m2.ground().end(),
                          std::back_inserter(shared));

    SumKind kind;
    if (shared.empty()) {
        kind = SumKind::one_sum;
    } else if (shared.size() == 1) {
        kind = SumKind::two_sum;
        for (const BinaryMatroid* m : {&m1, &m2}) {
            int c = m->coordinate_of(shared[0]);
            BitVector unit = BitVector::unit(m->element_count(), c);
            if (m->cycles().contains(unit))
                throw std::invalid_argument("matroid_sum: shared element is a loop");
            bool is_coloop = true;
            for (const auto& row : m->cycles().basis())
                if (row.get(c)) is_coloop = false;
            if (is_coloop) throw std::invalid_argument("matroid_sum: shared element is a coloop");
        }
    } else if (shared.size() == 3) {
        kind = SumKind::y_sum;
        for (const BinaryMatroid* m : {&m1, &m2}) {
            BitVector triple = m->coords_of(shared);
            BinarySpace cocycle = m->cocycles();
            if (!cocycle.contains(triple))
                throw std::invalid_argument("matroid_sum: shared triple is not a cocycle");
            // Minimality of the cocircuit, and no circuit inside the triple.
            for (int mask = 1; mask < 7; ++mask) {
                BitVector sub(m->element_count());
                for (int b = 0; b < 3; ++b)
                    if ((mask >> b) & 1) sub.set(m->coordinate_of(shared[static_cast<std::size_t>(b)]), true);
                if (cocycle.contains(sub))
                    throw std::invalid_argument("matroid_sum: shared triple is not a minimal cocycle");
                if (m->cycles().contains(sub))
                    throw std::invalid_argument("matroid_sum: shared triple contains a circuit");
            }
            if (m->cycles().contains(triple))
                throw std::invalid_argument("matroid_sum: shared triple contains a circuit");
        }
    } else {
        throw std::invalid_argument("matroid_sum: overlap of size " + std::to_string(shared.size()) +
                                    " matches no sum kind");
    }

    std::vector<int> big;
    std::set_union(m1.ground().begin(), m1.ground().end(), m2.ground().begin(), m2.ground().end(),
                   std::back_inserter(big));

    std::vector<BitVector> generators;
    for (const auto& row : m1.cycles().basis()) generators.push_back(detail::embed_into(row, m1, big));
    for (const auto& row : m2.cycles().basis()) generators.push_back(detail::embed_into(row, m2, big));
    BinarySpace total = BinarySpace::span(static_cast<int>(big.size()), generators);

    std::vector<int> shared_coords;
    std::vector<int> keep_coords;
    std::vector<int> keep_labels;
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (std::binary_search(shared.begin(), shared.end(), big[i]))
            shared_coords.push_back(static_cast<int>(i));
        else {
            keep_coords.push_back(static_cast<int>(i));
            keep_labels.push_back(big[i]);
        }
    }
    BinarySpace cycles = total.vanishing_on(shared_coords).restricted_to(keep_coords);
    return MatroidSum{BinaryMatroid::from_cycle_space(std::move(keep_labels), std::move(cycles)), kind, shared};
}

/// Three (possibly repeated, possibly empty) cycles whose union is the ground set.
struct ThreeCycleCover {
    std::array<BitVector, 3> cycles;  // coordinate form
};

inline bool is_three_cycle_cover(const BinaryMatroid& m, const ThreeCycleCover& cover) {
    BitVector all(m.element_count());
    for (const auto& c : cover.cycles) {
        if (c.width() != m.element_count() || !m.cycles().contains(c)) return false;
        all |= c;
    }
    return all == BitVector::ones(m.element_count());
}

/// Lexicographically first 3-cycle cover, or nullopt. A matroid with a coloop
/// has none; the search is exhaustive over cycle-space triples otherwise.
inline std::optional<ThreeCycleCover> three_cycle_cover(const BinaryMatroid& m,
                                                        int rank_cap = kThreeCoverRankCap) {
    if (!coloops(m).empty()) return std::nullopt;
    if (m.cycles().rank() > rank_cap) throw CapExceeded("three_cycle_cover: cycle rank above cap");
    auto pts = m.cycles().enumerate_points(rank_cap);
    std::size_t count = pts.size();
    std::vector<BitVector> suffix_union(count + 1, BitVector(m.element_count()));
    for (std::size_t i = count; i-- > 0;) suffix_union[i] = suffix_union[i + 1] | pts[i];
    BitVector ones = BitVector::ones(m.element_count());

    for (std::size_t i = 0; i < count; ++i) {
        BitVector u1 = pts[i];
        if ((u1 | suffix_union[i]) != ones) continue;
        for (std::size_t j = i; j < count; ++j) {
            BitVector u2 = u1 | pts[j];
            if ((u2 | suffix_union[j]) != ones) continue;
            for (std::size_t k = j; k < count; ++k) {
                if ((u2 | pts[k]) == ones) return ThreeCycleCover{{pts[i], pts[j], pts[k]}};
            }
        }
    }
    return std::nullopt;
}

/// Composes 3-cycle covers across a 1-, 2- or Y-sum, realigning the input covers
/// so the shared elements cancel. Returns the sum together with the new cover.
struct ComposedCover {
    BinaryMatroid matroid;
    ThreeCycleCover cover;
};

inline ComposedCover compose_three_cycle_covers(const BinaryMatroid& m1, const ThreeCycleCover& cov1,
                                                const BinaryMatroid& m2, const ThreeCycleCover& cov2,
                                                SumKind kind) {
    if (!is_three_cycle_cover(m1, cov1) || !is_three_cycle_cover(m2, cov2))
        throw std::invalid_argument("compose: input covers are not 3-cycle covers");
    MatroidSum sum = matroid_sum(m1, m2);
    if (sum.kind != kind)
        throw std::invalid_argument(std::string("compose: overlap is a ") + sum_kind_name(sum.kind) +
                                    ", not a " + sum_kind_name(kind));

    std::array<std::array<BitVector, 3>, 2> cyc = {cov1.cycles, cov2.cycles};
    const BinaryMatroid* mats[2] = {&m1, &m2};

    if (kind == SumKind::two_sum) {
        for (int s = 0; s < 2; ++s) {
            int c = mats[s]->coordinate_of(sum.shared[0]);
            // Put the shared element in the first cycle only.
            int holder = -1;
            for (int j = 0; j < 3; ++j)
                if (cyc[s][static_cast<std::size_t>(j)].get(c)) {
                    holder = j;
                    break;
                }
            if (holder < 0) throw std::logic_error("compose: cover misses the shared element");
            std::swap(cyc[s][0], cyc[s][static_cast<std::size_t>(holder)]);
            for (int j = 1; j < 3; ++j)
                if (cyc[s][static_cast<std::size_t>(j)].get(c)) cyc[s][static_cast<std::size_t>(j)] ^= cyc[s][0];
        }
    } else if (kind == SumKind::y_sum) {
        for (int s = 0; s < 2; ++s) {
            const BinaryMatroid& m = *mats[s];
            BitVector triple = m.coords_of(sum.shared);
            auto pattern = [&](const BitVector& c) { return c & triple; };
            BitVector target_p = m.coords_of({sum.shared[0], sum.shared[1]});
            BitVector target_q = m.coords_of({sum.shared[0], sum.shared[2]});

            // First cycle: pattern {s0,s1}.
            int at = -1;
            for (int j = 0; j < 3; ++j)
                if (pattern(cyc[s][static_cast<std::size_t>(j)]) == target_p) at = j;
            if (at < 0) {
                // Two distinct nonzero patterns xor to the target.
                for (int a = 0; a < 3 && at < 0; ++a)
                    for (int b = 0; b < 3 && at < 0; ++b) {
                        if (a == b) continue;
                        BitVector pa = pattern(cyc[s][static_cast<std::size_t>(a)]);
                        BitVector pb = pattern(cyc[s][static_cast<std::size_t>(b)]);
                        if (!pa.zero() && !pb.zero() && pa != pb) {
                            cyc[s][static_cast<std::size_t>(a)] ^= cyc[s][static_cast<std::size_t>(b)];
                            if (pattern(cyc[s][static_cast<std::size_t>(a)]) != target_p)
                                throw std::logic_error("compose: Y-sum alignment failed");
                            at = a;
                        }
                    }
            }
            if (at < 0) throw std::logic_error("compose: Y-sum patterns do not span");
            std::swap(cyc[s][0], cyc[s][static_cast<std::size_t>(at)]);

            // Second cycle: pattern {s0,s2}.
            at = -1;
            for (int j = 1; j < 3; ++j) {
                BitVector pj = pattern(cyc[s][static_cast<std::size_t>(j)]);
                if (pj == target_q) at = j;
            }
            if (at < 0)
                for (int j = 1; j < 3; ++j) {
                    BitVector pj = pattern(cyc[s][static_cast<std::size_t>(j)]);
                    if (!pj.zero() && pj != target_p) {
                        cyc[s][static_cast<std::size_t>(j)] ^= cyc[s][0];
                        if (pattern(cyc[s][static_cast<std::size_t>(j)]) != target_q)
                            throw std::logic_error("compose: Y-sum alignment failed");
                        at = j;
                        break;
                    }
                }
            if (at < 0) throw std::logic_error("compose: Y-sum patterns do not span");
            std::swap(cyc[s][1], cyc[s][static_cast<std::size_t>(at)]);

            // Third cycle: empty pattern.
            BitVector p3 = pattern(cyc[s][2]);
            if (p3 == target_p)
                cyc[s][2] ^= cyc[s][0];
            else if (p3 == target_q)
                cyc[s][2] ^= cyc[s][1];
            else if (!p3.zero()) {
                cyc[s][2] ^= cyc[s][0];
                cyc[s][2] ^= cyc[s][1];
            }
            if (!pattern(cyc[s][2]).zero()) throw std::logic_error("compose: Y-sum alignment failed");
        }
    }

    ThreeCycleCover out;
    for (int j = 0; j < 3; ++j) {
        BitVector big1 = detail::embed_into(cyc[0][static_cast<std::size_t>(j)], m1, sum.matroid.ground());
        BitVector big2 = detail::embed_into(cyc[1][static_cast<std::size_t>(j)], m2, sum.matroid.ground());
        out.cycles[static_cast<std::size_t>(j)] = big1 ^ big2;
    }
    if (!is_three_cycle_cover(sum.matroid, out))
        throw std::logic_error("compose: produced object is not a 3-cycle cover");
    return ComposedCover{std::move(sum.matroid), std::move(out)};
}

}  // namespace clutterkit
