#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clutterkit/binary_matroid.hpp"
#include "clutterkit/cuboids.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/graph.hpp"

namespace clutterkit {

/// Lexicographically first list of k cycles whose union is the whole edge set,
/// or nullopt. Graphs with a bridge never have one.
inline std::optional<std::vector<BitVector>> k_cycle_cover(const Graph& g, int k,
                                                           int rank_cap = kThreeCoverRankCap) {
    if (k < 1) throw std::invalid_argument("k_cycle_cover: k must be positive");
    if (!bridges(g).empty()) return std::nullopt;
    BinarySpace space = cycle_space(g);
    if (space.rank() > rank_cap) throw CapExceeded("k_cycle_cover: cycle rank above cap");
    auto pts = space.enumerate_points(rank_cap);
    BitVector ones = BitVector::ones(g.edge_count());
    std::vector<BitVector> suffix(pts.size() + 1, BitVector(g.edge_count()));
    for (std::size_t i = pts.size(); i-- > 0;) suffix[i] = suffix[i + 1] | pts[i];

    std::vector<std::size_t> pick;
    std::optional<std::vector<BitVector>> found;
    auto walk = [&](auto&& self, std::size_t start, const BitVector& covered) -> void {
        if (found) return;
        if (static_cast<int>(pick.size()) == k) {
            if (covered == ones) {
                std::vector<BitVector> out;
                for (std::size_t i : pick) out.push_back(pts[i]);
                found = std::move(out);
            }
            return;
        }
        for (std::size_t i = start; i < pts.size() && !found; ++i) {
            if ((covered | suffix[i]) != ones) break;  // no later point helps further
            pick.push_back(i);
            self(self, i, covered | pts[i]);
            pick.pop_back();
        }
    };
    walk(walk, 0, BitVector(g.edge_count()));
    return found;
}

/// Multiset of cycles together with per-edge usage counts.
struct CycleCover {
    std::vector<BitVector> cycles;
    std::vector<int> edge_multiplicity;  // per edge label, 1-based offset 0
};

/// Independent check: each listed set is a cycle (even degrees) and every edge
/// is used the expected number of times.
inline bool verify_cycle_cover(const Graph& g, const CycleCover& cover, int expected_multiplicity) {
    std::vector<int> count(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& c : cover.cycles) {
        if (!is_graph_cycle(g, c)) return false;
        for (int e : c.support()) ++count[static_cast<std::size_t>(e)];
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (count[static_cast<std::size_t>(e)] != expected_multiplicity) return false;
    return count == cover.edge_multiplicity;
}

/// Seven cycles using every edge exactly four times, built from the nonzero
/// GF(2) combinations of a 3-cycle cover. Bridgeless graphs only.
inline CycleCover seven_cycle_four_cover(const Graph& g, int rank_cap = kThreeCoverRankCap) {
    auto bad = bridges(g);
    if (!bad.empty())
        throw std::invalid_argument("seven_cycle_four_cover: graph has a bridge, edge " +
                                    std::to_string(bad.front()));
    auto base = k_cycle_cover(g, 3, rank_cap);
    if (!base) throw std::logic_error("seven_cycle_four_cover: no 3-cycle cover found");

    CycleCover out;
    for (int mask = 1; mask < 8; ++mask) {
        BitVector combo(g.edge_count());
        for (int b = 0; b < 3; ++b)
            if ((mask >> b) & 1) combo ^= (*base)[static_cast<std::size_t>(b)];
        out.cycles.push_back(std::move(combo));
    }
    out.edge_multiplicity.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& c : out.cycles)
        for (int e : c.support()) ++out.edge_multiplicity[static_cast<std::size_t>(e)];
    if (!verify_cycle_cover(g, out, 4))
        throw std::logic_error("seven_cycle_four_cover: verifier rejected the cover");
    return out;
}

/// The cuboid of the cycle space of the Petersen graph: 30 elements, 64 members.
inline Clutter t30() { return cuboid(ZeroOneSet::from_space(cycle_space(petersen()))); }

}  // namespace clutterkit
