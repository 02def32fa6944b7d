#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clutterkit/bitvector.hpp"

namespace clutterkit {

namespace detail {

inline std::string label_list(const BitVector& v) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int c : v.support()) {
        if (!first) os << ",";
        os << (c + 1);
        first = false;
    }
    os << "}";
    return os.str();
}

/// Keeps only inclusion-minimal sets, dropping duplicates. Output is set_less-sorted.
inline std::vector<BitVector> minimal_sets(std::vector<BitVector> sets) {
    std::sort(sets.begin(), sets.end(), [](const BitVector& a, const BitVector& b) {
        if (a.popcount() != b.popcount()) return a.popcount() < b.popcount();
        return BitVector::set_less(a, b);
    });
    std::vector<BitVector> out;
    for (const auto& s : sets) {
        bool dominated = false;
        for (const auto& kept : out)
            if (kept.subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), BitVectorSetOrder{});
    return out;
}

}  // namespace detail

/// A family of pairwise incomparable subsets of {1..n}. Members are stored as
/// incidence vectors (coordinate i <-> element i+1) in a fixed canonical order.
class Clutter {
public:
    Clutter() = default;

    static Clutter from_members(int ground_size, const std::vector<std::vector<int>>& members) {
        std::vector<BitVector> vecs;
        vecs.reserve(members.size());
        for (const auto& m : members) {
            BitVector v(ground_size);
            for (int label : m) {
                if (label < 1 || label > ground_size)
                    throw std::invalid_argument("clutter: element " + std::to_string(label) +
                                                " out of range 1.." + std::to_string(ground_size));
                v.set(label - 1, true);
            }
            vecs.push_back(std::move(v));
        }
        return from_incidence(ground_size, std::move(vecs));
    }

    static Clutter from_incidence(int ground_size, std::vector<BitVector> members) {
        if (ground_size < 0) throw std::invalid_argument("clutter: negative ground size");
        for (const auto& m : members)
            if (m.width() != ground_size) throw std::invalid_argument("clutter: member width mismatch");
        std::sort(members.begin(), members.end(), BitVectorSetOrder{});
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i == j || !members[i].subset_of(members[j])) continue;
                if (members[i] == members[j])
                    throw std::invalid_argument("clutter: duplicate member " + detail::label_list(members[i]));
                throw std::invalid_argument("clutter: not an antichain, " + detail::label_list(members[i]) +
                                            " is contained in " + detail::label_list(members[j]));
            }
        Clutter c;
        c.ground_size_ = ground_size;
        c.members_ = std::move(members);
        return c;
    }

    int ground_size() const { return ground_size_; }
    std::size_t member_count() const { return members_.size(); }
    const std::vector<BitVector>& members() const { return members_; }
    const BitVector& member(std::size_t i) const { return members_.at(i); }

    std::vector<std::vector<int>> member_labels() const {
        std::vector<std::vector<int>> out;
        out.reserve(members_.size());
        for (const auto& m : members_) {
            std::vector<int> labels;
            for (int c : m.support()) labels.push_back(c + 1);
            out.push_back(std::move(labels));
        }
        return out;
    }

    bool has_empty_member() const {
        for (const auto& m : members_)
            if (m.zero()) return true;
        return false;
    }

    /// Incidence pattern of element `label` across the canonical member order.
    BitVector element_signature(int label) const {
        check_label(label);
        BitVector sig(static_cast<int>(members_.size()));
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (members_[j].get(label - 1)) sig.set(static_cast<int>(j), true);
        return sig;
    }

    friend bool operator==(const Clutter& a, const Clutter& b) {
        return a.ground_size_ == b.ground_size_ && a.members_ == b.members_;
    }
    friend bool operator!=(const Clutter& a, const Clutter& b) { return !(a == b); }

    void check_label(int label) const {
        if (label < 1 || label > ground_size_)
            throw std::invalid_argument("clutter: element " + std::to_string(label) + " out of range");
    }

private:
    int ground_size_ = 0;
    std::vector<BitVector> members_;
};

/// Clutter of all inclusion-minimal covers. Conventions for the degenerate
/// clutters: b({}) = {{}} and b({{}}) = {}.
inline Clutter blocker(const Clutter& c) {
    int n = c.ground_size();
    std::vector<BitVector> trans{BitVector(n)};
    for (const auto& member : c.members()) {
        std::vector<BitVector> next;
        for (const auto& t : trans) {
            if (t.intersects(member)) {
                next.push_back(t);
                continue;
            }
            for (int v : member.support()) {
                BitVector grown = t;
                grown.set(v, true);
                next.push_back(std::move(grown));
            }
        }
        trans = detail::minimal_sets(std::move(next));
    }
    return Clutter::from_incidence(n, std::move(trans));
}

namespace detail {

/// members[j] covered by element v  <->  bit j of coverers[v].
inline std::vector<BitVector> element_coverers(const Clutter& c) {
    int m = static_cast<int>(c.member_count());
    std::vector<BitVector> cov(static_cast<std::size_t>(c.ground_size()), BitVector(m));
    for (int j = 0; j < m; ++j)
        for (int v : c.members()[static_cast<std::size_t>(j)].support()) cov[static_cast<std::size_t>(v)].set(j, true);
    return cov;
}

struct CoverSearch {
    Clutter c;
    std::vector<BitVector> coverers;
    BitVector all;
    int best;

    explicit CoverSearch(Clutter cl)
        : c(std::move(cl)), coverers(element_coverers(c)), all(BitVector::ones(static_cast<int>(c.member_count()))), best(0) {}

    void run() {
        // Greedy start for the upper bound.
        BitVector covered(all.width());
        int greedy = 0;
        while (covered != all) {
            int pick = -1, gain = -1;
            for (int v = 0; v < c.ground_size(); ++v) {
                int g = (coverers[static_cast<std::size_t>(v)] & covered.complement()).popcount();
                if (g > gain) {
                    gain = g;
                    pick = v;
                }
            }
            covered |= coverers[static_cast<std::size_t>(pick)];
            ++greedy;
        }
        best = greedy;
        descend(BitVector(all.width()), 0);
    }

    void descend(const BitVector& covered, int chosen) {
        if (covered == all) {
            best = std::min(best, chosen);
            return;
        }
        if (chosen + 1 >= best) return;
        // Branch on the first uncovered member, elements in ascending label order.
        int target = (covered ^ all).lowest_set();
        for (int v : c.members()[static_cast<std::size_t>(target)].support())
            descend(covered | coverers[static_cast<std::size_t>(v)], chosen + 1);
    }
};

}  // namespace detail

/// Exact covering number; std::nullopt encodes +infinity (the empty set is a member).
inline std::optional<int> covering_number(const Clutter& c) {
    if (c.member_count() == 0) return 0;
    if (c.has_empty_member()) return std::nullopt;
    detail::CoverSearch search(c);
    search.run();
    return search.best;
}

namespace detail {

struct PackSearch {
    const std::vector<BitVector>& members;
    int best = 0;

    void descend(std::size_t idx, const BitVector& used, int taken) {
        best = std::max(best, taken);
        if (taken + static_cast<int>(members.size() - idx) <= best) return;
        for (std::size_t j = idx; j < members.size(); ++j)
            if (!members[j].intersects(used)) descend(j + 1, used | members[j], taken + 1);
    }
};

}  // namespace detail

/// Exact packing number (maximum number of pairwise disjoint members).
inline int packing_number(const Clutter& c) {
    if (c.has_empty_member()) throw std::invalid_argument("packing_number: empty member");
    if (c.member_count() == 0) return 0;
    detail::PackSearch search{c.members()};
    search.descend(0, BitVector(c.ground_size()), 0);
    auto tau = covering_number(c);
    if (tau && search.best > *tau) throw std::logic_error("packing_number: weak duality violated");
    return search.best;
}

struct MinorResult {
    Clutter clutter;
    std::vector<int> to_parent;  // new label i+1 <-> original label to_parent[i]
};

/// Deletion minor C \ delete_set / contract_set with ground relabeled to 1..n'.
inline MinorResult minor(const Clutter& c, const std::vector<int>& delete_labels,
                         const std::vector<int>& contract_labels) {
    BitVector del(c.ground_size()), con(c.ground_size());
    for (int v : delete_labels) {
        c.check_label(v);
        del.set(v - 1, true);
    }
    for (int v : contract_labels) {
        c.check_label(v);
        con.set(v - 1, true);
    }
    if (del.intersects(con)) throw std::invalid_argument("minor: delete and contract sets overlap");

    std::vector<int> keep;
    for (int v = 0; v < c.ground_size(); ++v)
        if (!del.get(v) && !con.get(v)) keep.push_back(v);

    std::vector<BitVector> survivors;
    for (const auto& m : c.members()) {
        if (m.intersects(del)) continue;
        BitVector reduced(static_cast<int>(keep.size()));
        for (std::size_t j = 0; j < keep.size(); ++j) reduced.set(static_cast<int>(j), m.get(keep[j]));
        survivors.push_back(std::move(reduced));
    }
    survivors = detail::minimal_sets(std::move(survivors));

    MinorResult out;
    out.clutter = Clutter::from_incidence(static_cast<int>(keep.size()), std::move(survivors));
    for (int v : keep) out.to_parent.push_back(v + 1);
    return out;
}

/// Adds a clone of element u as the new element n+1.
inline Clutter duplicate(const Clutter& c, int u) {
    c.check_label(u);
    int n = c.ground_size();
    std::vector<BitVector> members;
    members.reserve(c.member_count());
    for (const auto& m : c.members()) {
        BitVector grown(n + 1);
        for (int v : m.support()) grown.set(v, true);
        if (m.get(u - 1)) grown.set(n, true);
        members.push_back(std::move(grown));
    }
    return Clutter::from_incidence(n + 1, std::move(members));
}

struct DedupResult {
    Clutter clutter;
    std::vector<std::vector<int>> classes;  // original labels; classes[i][0] is the representative
    std::vector<int> to_parent;             // new label i+1 <-> representative to_parent[i]
};

/// Collapses every duplicate class (elements lying in exactly the same members)
/// to its smallest member.
inline DedupResult deduplicate(const Clutter& c) {
    std::map<std::string, std::vector<int>> groups;  // signature -> original labels
    for (int v = 1; v <= c.ground_size(); ++v) groups[c.element_signature(v).to_string()].push_back(v);

    std::vector<std::vector<int>> classes;
    for (auto& [sig, labels] : groups) classes.push_back(labels);
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });

    std::vector<int> reps;
    for (const auto& cl : classes) reps.push_back(cl[0] - 1);

    std::vector<BitVector> members;
    for (const auto& m : c.members()) {
        BitVector reduced(static_cast<int>(reps.size()));
        for (std::size_t j = 0; j < reps.size(); ++j) reduced.set(static_cast<int>(j), m.get(reps[j]));
        members.push_back(std::move(reduced));
    }

    DedupResult out;
    out.clutter = Clutter::from_incidence(static_cast<int>(reps.size()), std::move(members));
    out.classes = std::move(classes);
    for (int r : reps) out.to_parent.push_back(r + 1);
    return out;
}

/// Every subset of at most k members shares an element, yet no element is in all members.
inline bool is_k_wise_intersecting(const Clutter& c, int k) {
    if (k < 1) throw std::invalid_argument("is_k_wise_intersecting: k must be positive");
    if (c.member_count() == 0) return false;
    BitVector common = BitVector::ones(c.ground_size());
    for (const auto& m : c.members()) common &= m;
    if (!common.zero()) return false;

    int depth_cap = std::min<int>(k, static_cast<int>(c.member_count()));
    // DFS over member subsets; any branch whose running intersection dies is a witness.
    struct Walker {
        const std::vector<BitVector>& members;
        int cap;
        bool witness_found = false;
        void walk(std::size_t start, int depth, const BitVector& acc) {
            if (witness_found) return;
            for (std::size_t j = start; j < members.size() && !witness_found; ++j) {
                BitVector next = acc & members[j];
                if (next.zero()) {
                    witness_found = true;
                    return;
                }
                if (depth + 1 < cap) walk(j + 1, depth + 1, next);
            }
        }
    } walker{c.members(), depth_cap};
    walker.walk(0, 0, BitVector::ones(c.ground_size()));
    return !walker.witness_found;
}

/// Symmetric-difference test over member triples.
inline bool is_binary(const Clutter& c) {
    const auto& ms = c.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            BitVector ij = ms[i] ^ ms[j];
            for (std::size_t k = j + 1; k < ms.size(); ++k) {
                BitVector d = ij ^ ms[k];
                bool holds = false;
                for (const auto& m : ms)
                    if (m.subset_of(d)) {
                        holds = true;
                        break;
                    }
                if (!holds) return false;
            }
        }
    return true;
}

/// All covers of the exact size tau(C); only sensible for small tau.
inline std::vector<BitVector> minimum_covers(const Clutter& c) {
    auto tau = covering_number(c);
    if (!tau) throw std::invalid_argument("minimum_covers: covering number is infinite");
    std::vector<BitVector> out;
    if (c.member_count() == 0) {
        out.push_back(BitVector(c.ground_size()));
        return out;
    }
    auto coverers = detail::element_coverers(c);
    BitVector all = BitVector::ones(static_cast<int>(c.member_count()));
    std::vector<int> pick;
    auto descend = [&](auto&& self, int start, const BitVector& covered) -> void {
        if (static_cast<int>(pick.size()) == *tau) {
            if (covered == all) {
                BitVector cover(c.ground_size());
                for (int v : pick) cover.set(v, true);
                out.push_back(std::move(cover));
            }
            return;
        }
        for (int v = start; v < c.ground_size(); ++v) {
            pick.push_back(v);
            self(self, v + 1, covered | coverers[static_cast<std::size_t>(v)]);
            pick.pop_back();
        }
    };
    descend(descend, 0, BitVector(static_cast<int>(c.member_count())));
    std::sort(out.begin(), out.end(), BitVectorSetOrder{});
    return out;
}

/// tau(C) = 2 and every element lies in some minimum cover.
inline bool is_tangled(const Clutter& c) {
    auto tau = covering_number(c);
    if (!tau || *tau != 2) return false;
    BitVector touched(c.ground_size());
    for (const auto& cover : minimum_covers(c)) touched |= cover;
    return touched == BitVector::ones(c.ground_size());
}

struct Colouring {
    std::vector<std::vector<int>> parts;  // partition of {1..n}; parts may be empty
};

struct ChromaticResult {
    int chi;
    Colouring witness;
};

/// Smallest k >= 2 admitting a partition of the ground set with no monochromatic
/// member. Requires every member to have at least two elements.
inline ChromaticResult chromatic_number(const Clutter& c) {
    for (const auto& m : c.members())
        if (m.popcount() <= 1)
            throw std::invalid_argument("chromatic_number: member of cardinality at most one");
    int n = c.ground_size();
    for (int k = 2;; ++k) {
        std::vector<BitVector> classes(static_cast<std::size_t>(k), BitVector(n));
        std::vector<int> colour_of(static_cast<std::size_t>(n), -1);
        auto assign = [&](auto&& self, int v, int used) -> bool {
            if (v == n) return true;
            int limit = std::min(k - 1, used);  // symmetry break: at most one fresh colour
            for (int col = 0; col <= limit; ++col) {
                classes[static_cast<std::size_t>(col)].set(v, true);
                bool mono = false;
                for (const auto& m : c.members())
                    if (m.get(v) && m.subset_of(classes[static_cast<std::size_t>(col)])) {
                        mono = true;
                        break;
                    }
                if (!mono) {
                    colour_of[static_cast<std::size_t>(v)] = col;
                    if (self(self, v + 1, std::max(used, col + 1))) return true;
                }
                classes[static_cast<std::size_t>(col)].set(v, false);
            }
            return false;
        };
        if (assign(assign, 0, 0)) {
            Colouring witness;
            witness.parts.assign(static_cast<std::size_t>(k), {});
            for (int v = 0; v < n; ++v) witness.parts[static_cast<std::size_t>(colour_of[static_cast<std::size_t>(v)])].push_back(v + 1);
            return {k, witness};
        }
        if (k > n + 1) throw std::logic_error("chromatic_number: search runaway");
    }
}

/// Members meeting every minimum cover exactly once. Callers are responsible for
/// idealness; see cores.hpp for the checked wrapper.
inline Clutter core_members(const Clutter& c) {
    if (!is_tangled(c)) throw std::invalid_argument("core: clutter is not tangled");
    auto covers = minimum_covers(c);
    std::vector<BitVector> picked;
    for (const auto& m : c.members()) {
        bool ok = true;
        for (const auto& cover : covers)
            if ((m & cover).popcount() != 1) {
                ok = false;
                break;
            }
        if (ok) picked.push_back(m);
    }
    return Clutter::from_incidence(c.ground_size(), std::move(picked));
}

struct TangledMinorResult {
    Clutter clutter;
    std::vector<int> deleted;    // original labels, ascending
    std::vector<int> to_parent;  // new label i+1 <-> original label
};

/// Greedily deletes elements (ascending label) while the covering number stays
/// at least two; the result is tangled.
inline TangledMinorResult minimal_tangled_deletion_minor(const Clutter& c) {
    if (c.has_empty_member()) throw std::invalid_argument("minimal_tangled_deletion_minor: empty member");
    auto tau = covering_number(c);
    if (!tau || *tau < 2) throw std::invalid_argument("minimal_tangled_deletion_minor: covering number below two");

    auto tau_after = [&](const BitVector& del) -> int {
        std::vector<BitVector> kept;
        for (const auto& m : c.members())
            if (!m.intersects(del)) kept.push_back(m);
        if (kept.empty()) return 0;
        detail::CoverSearch search(Clutter::from_incidence(c.ground_size(), std::move(kept)));
        search.run();
        return search.best;
    };

    BitVector del(c.ground_size());
    for (int v = 0; v < c.ground_size(); ++v) {
        BitVector trial = del;
        trial.set(v, true);
        if (tau_after(trial) >= 2) del = trial;
    }

    std::vector<int> deleted;
    for (int v : del.support()) deleted.push_back(v + 1);
    auto reduced = minor(c, deleted, {});
    if (!is_tangled(reduced.clutter))
        throw std::logic_error("minimal_tangled_deletion_minor: result not tangled");
    return {std::move(reduced.clutter), std::move(deleted), std::move(reduced.to_parent)};
}

}  // namespace clutterkit
