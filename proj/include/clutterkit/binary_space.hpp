#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "clutterkit/bitvector.hpp"
#include "clutterkit/errors.hpp"

namespace clutterkit {

/// Cap on enumerate_points: at most 2^22 points by default.
inline constexpr int kSpaceEnumRankCap = 22;

/// A GF(2)-closed subset of {0,1}^n held as a reduced row-echelon basis.
/// The basis is canonical (unique per subspace), so equality is structural.
class BinarySpace {
public:
    BinarySpace() = default;
    explicit BinarySpace(int width) : width_(width) {}

    static BinarySpace span(int width, const std::vector<BitVector>& generators) {
        BinarySpace s(width);
        for (const auto& g : generators) {
            if (g.width() != width) throw std::invalid_argument("span: width mismatch");
            s.insert(g);
        }
        return s;
    }

    int width() const { return width_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<BitVector>& basis() const { return basis_; }

    /// Residual of v after elimination against the basis; zero iff v is in the space.
    BitVector reduce(BitVector v) const {
        if (v.width() != width_) throw std::invalid_argument("reduce: width mismatch");
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            int p = pivots_[r];
            if (p >= 0 && v.get(p)) v ^= basis_[r];
        }
        return v;
    }

    bool contains(const BitVector& v) const { return reduce(v).zero(); }

    /// Grows the span by v; returns true when the rank increased.
    bool insert(const BitVector& v) {
        BitVector r = reduce(v);
        int p = r.lowest_set();
        if (p < 0) return false;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].get(p)) basis_[i] ^= r;
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, p);
        basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), r);
        return true;
    }

    const std::vector<int>& pivots() const { return pivots_; }

    /// S^perp: all vectors orthogonal (mod 2) to every point of the space.
    BinarySpace orthogonal_complement() const {
        std::vector<bool> is_pivot(width_, false);
        for (int p : pivots_) is_pivot[p] = true;
        std::vector<BitVector> kernel;
        for (int f = 0; f < width_; ++f) {
            if (is_pivot[f]) continue;
            BitVector k(width_);
            k.set(f, true);
            for (std::size_t r = 0; r < basis_.size(); ++r)
                if (basis_[r].get(f)) k.set(pivots_[r], true);
            kernel.push_back(std::move(k));
        }
        return span(width_, kernel);
    }

    /// All 2^rank points in lexicographic order. Errors above the rank cap.
    std::vector<BitVector> enumerate_points(int rank_cap = kSpaceEnumRankCap) const {
        if (rank() > rank_cap || rank() > 62) throw CapExceeded("enumerate_points: rank above cap");
        std::vector<BitVector> pts;
        pts.reserve(std::size_t{1} << rank());
        BitVector cur(width_);
        pts.push_back(cur);
        // Gray-code walk: step k flips basis row ctz(k).
        for (std::uint64_t k = 1; k < (std::uint64_t{1} << rank()); ++k) {
            cur ^= basis_[static_cast<std::size_t>(__builtin_ctzll(k))];
            pts.push_back(cur);
        }
        std::sort(pts.begin(), pts.end(), BitVectorLex{});
        return pts;
    }

    /// Smallest coordinate at which every point is 0, if any.
    std::optional<int> all_zero_coordinate() const {
        BitVector seen(width_);
        for (const auto& row : basis_) seen |= row;
        for (int i = 0; i < width_; ++i)
            if (!seen.get(i)) return i;
        return std::nullopt;
    }

    /// Subspace of points that vanish on all the given coordinates (same width).
    BinarySpace vanishing_on(const std::vector<int>& coords) const {
        std::vector<bool> zeroed(width_, false);
        for (int c : coords) {
            if (c < 0 || c >= width_) throw std::out_of_range("vanishing_on: bad coordinate");
            zeroed[c] = true;
        }
        // Echelon form with the chosen coordinates ordered first: rows whose pivot
        // falls outside the block are exactly a basis of the vanishing subspace.
        std::vector<int> order;
        order.reserve(width_);
        for (int c = 0; c < width_; ++c)
            if (zeroed[c]) order.push_back(c);
        for (int c = 0; c < width_; ++c)
            if (!zeroed[c]) order.push_back(c);
        std::vector<BitVector> rows = basis_;
        std::vector<BitVector> keep;
        std::size_t done = 0;
        for (int col : order) {
            std::size_t pr = done;
            while (pr < rows.size() && !rows[pr].get(col)) ++pr;
            if (pr == rows.size()) continue;
            std::swap(rows[done], rows[pr]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != done && rows[r].get(col)) rows[r] ^= rows[done];
            ++done;
        }
        for (const auto& row : rows) {
            bool clean = true;
            for (int c = 0; c < width_ && clean; ++c)
                if (zeroed[c] && row.get(c)) clean = false;
            if (clean && !row.zero()) keep.push_back(row);
        }
        return span(width_, keep);
    }

    /// Image of the space under dropping all coordinates except `keep` (in order).
    BinarySpace restricted_to(const std::vector<int>& keep) const {
        std::vector<BitVector> rows;
        rows.reserve(basis_.size());
        for (const auto& b : basis_) {
            BitVector r(static_cast<int>(keep.size()));
            for (std::size_t j = 0; j < keep.size(); ++j) r.set(static_cast<int>(j), b.get(keep[j]));
            rows.push_back(std::move(r));
        }
        return span(static_cast<int>(keep.size()), rows);
    }

    friend bool operator==(const BinarySpace& a, const BinarySpace& b) {
        return a.width_ == b.width_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const BinarySpace& a, const BinarySpace& b) { return !(a == b); }

private:
    int width_ = 0;
    std::vector<BitVector> basis_;  // reduced row-echelon, pivots ascending
    std::vector<int> pivots_;
};

}  // namespace clutterkit
