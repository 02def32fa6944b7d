#pragma once

#include <clutterkit/clutter.hpp>
#include <random>
#include <vector>

namespace testkit {

using clutterkit::BitVector;
using clutterkit::Clutter;

inline Clutter clutter_of(int n, const std::vector<std::vector<int>>& members) {
    return Clutter::from_members(n, members);
}

inline Clutter q6() { return clutter_of(6, {{1, 3, 6}, {1, 4, 5}, {2, 3, 5}, {2, 4, 6}}); }

/// Exhaustive 2^n oracle for the blocker: all covers, filtered to minimal ones.
inline Clutter blocker_bruteforce(const Clutter& c) {
    int n = c.ground_size();
    std::vector<BitVector> covers;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        BitVector b(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) b.set(i, true);
        bool covering = true;
        for (const auto& m : c.members())
            if (!b.intersects(m)) {
                covering = false;
                break;
            }
        if (covering) covers.push_back(std::move(b));
    }
    std::vector<BitVector> minimal;
    for (const auto& b : covers) {
        bool keep = true;
        for (const auto& other : covers)
            if (other != b && other.subset_of(b)) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(b);
    }
    return Clutter::from_incidence(n, std::move(minimal));
}

/// Random antichain over n elements: random sets filtered to the minimal ones.
inline Clutter random_clutter(std::mt19937& rng, int n, int raw_members, int min_size = 0) {
    std::vector<BitVector> sets;
    for (int k = 0; k < raw_members; ++k) {
        BitVector s(n);
        for (int i = 0; i < n; ++i)
            if (rng() % 3 == 0) s.set(i, true);
        if (s.popcount() < min_size) continue;
        sets.push_back(std::move(s));
    }
    std::vector<BitVector> minimal;
    for (const auto& s : sets) {
        bool keep = true;
        for (const auto& other : sets)
            if (other != s && other.subset_of(s)) {
                keep = false;
                break;
            }
        if (keep && std::find(minimal.begin(), minimal.end(), s) == minimal.end()) minimal.push_back(s);
    }
    return Clutter::from_incidence(n, std::move(minimal));
}

}  // namespace testkit
