#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/cuboids.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/lp.hpp"
#include "clutterkit/polyhedra.hpp"

namespace clutterkit {

struct CoreResult {
    Clutter core;
    bool idealness_assumed = false;
};

/// Core of an ideal tangled clutter: the members meeting every minimum cover
/// exactly once. Idealness is verified when the instance fits the vertex
/// enumeration caps; beyond them the caller must assume it explicitly and the
/// assumption is recorded in the result.
inline CoreResult core(const Clutter& c, bool assume_ideal = false,
                       int ground_cap = kVertexEnumGroundCap, int member_cap = kVertexEnumMemberCap) {
    if (!is_tangled(c)) throw std::invalid_argument("core: clutter is not tangled");
    bool assumed = false;
    if (assume_ideal) {
        assumed = true;
    } else {
        if (c.ground_size() > ground_cap || static_cast<int>(c.member_count()) > member_cap)
            throw CapExceeded("core: instance above idealness-verification caps; pass assume_ideal");
        if (!is_ideal(c, ground_cap, member_cap).ideal)
            throw std::invalid_argument("core: clutter is not ideal");
    }

    Clutter picked = core_members(c);
    if (!is_tangled(picked)) throw std::logic_error("core: result is not tangled");
    auto dd = deduplicate(picked);
    if (!as_cuboid(dd.clutter)) throw std::logic_error("core: result is not a duplication of a cuboid");
    return CoreResult{std::move(picked), assumed};
}

/// LP characterization of the core: members carrying positive weight in some
/// fractional packing of value two, one LP per undecided member. Must agree
/// with core(); the agreement is asserted.
inline Clutter core_support(const Clutter& c, bool assume_ideal = false,
                            int ground_cap = kVertexEnumGroundCap, int member_cap = kVertexEnumMemberCap) {
    auto tau = covering_number(c);
    if (!tau || *tau != 2) throw std::invalid_argument("core_support: covering number is not two");
    CoreResult reference = core(c, assume_ideal, ground_cap, member_cap);

    const std::size_t m = c.member_count();
    std::vector<bool> in_support(m, false);

    // Shared constraint system: element loads <= 1, total value == 2.
    LpProblem base;
    base.objective.assign(m, Rational(0));
    for (int v = 0; v < c.ground_size(); ++v) {
        LinearConstraint row;
        row.coeffs.assign(m, Rational(0));
        for (std::size_t j = 0; j < m; ++j)
            if (c.members()[j].get(v)) row.coeffs[j] = Rational(1);
        row.rel = Relation::less_equal;
        row.rhs = Rational(1);
        base.rows.push_back(std::move(row));
    }
    {
        LinearConstraint total;
        total.coeffs.assign(m, Rational(1));
        total.rel = Relation::equal;
        total.rhs = Rational(2);
        base.rows.push_back(std::move(total));
    }

    for (std::size_t target = 0; target < m; ++target) {
        if (in_support[target]) continue;
        LpProblem p = base;
        p.sense = Sense::maximize;
        p.objective[target] = Rational(1);
        LpSolution sol = solve_lp(p);
        if (sol.status != LpStatus::optimal)
            throw std::logic_error("core_support: value-two packing LP not solvable");
        if (sol.value > Rational(0))
            for (std::size_t j = 0; j < m; ++j)
                if (!sol.primal[j].is_zero()) in_support[j] = true;
    }

    std::vector<BitVector> picked;
    for (std::size_t j = 0; j < m; ++j)
        if (in_support[j]) picked.push_back(c.members()[j]);
    Clutter support = Clutter::from_incidence(c.ground_size(), std::move(picked));
    if (support != reference.core) throw std::logic_error("core_support: disagrees with the core");
    return support;
}

}  // namespace clutterkit
