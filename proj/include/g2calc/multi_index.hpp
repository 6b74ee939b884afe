#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2calc/errors.hpp"
#include "g2calc/monomial.hpp"

namespace g2calc {

/// Strictly increasing sequence of 1-based coordinate indices; the basis label
/// of dx^{i1...ik}. Length is the form degree; the empty index labels 0-forms.
class MultiIndex {
public:
    MultiIndex() = default;
    /// Requires strictly increasing input within 1..ambient_dim.
    MultiIndex(std::vector<int> indices, int ambient_dim) : idx_(std::move(indices)) {
        int prev = 0;
        for (int i : idx_) {
            if (i <= prev) throw Error("multi-index not strictly increasing");
            if (i > ambient_dim) throw IndexOutOfRange("multi-index entry " + std::to_string(i));
            prev = i;
        }
    }

    /// Sorts an arbitrary index tuple, absorbing the permutation parity into the
    /// returned sign; a repeated index annihilates (returns nullopt).
    static std::optional<std::pair<int, MultiIndex>> canonicalize(std::vector<int> indices,
                                                                  int ambient_dim) {
        int sign = 1;
        // Insertion sort, counting transpositions.
        for (std::size_t i = 1; i < indices.size(); ++i) {
            std::size_t j = i;
            while (j > 0 && indices[j - 1] > indices[j]) {
                std::swap(indices[j - 1], indices[j]);
                sign = -sign;
                --j;
            }
        }
        for (std::size_t i = 1; i < indices.size(); ++i)
            if (indices[i - 1] == indices[i]) return std::nullopt;
        return std::make_pair(sign, MultiIndex(std::move(indices), ambient_dim));
    }

    int degree() const { return static_cast<int>(idx_.size()); }
    const std::vector<int>& indices() const { return idx_; }
    int at(int pos) const { return idx_[static_cast<std::size_t>(pos)]; }  // 0-based position

    bool contains(int index) const {
        return std::binary_search(idx_.begin(), idx_.end(), index);
    }
    /// 0-based slot of `index`, or -1 when absent.
    int position(int index) const {
        auto it = std::lower_bound(idx_.begin(), idx_.end(), index);
        if (it == idx_.end() || *it != index) return -1;
        return static_cast<int>(it - idx_.begin());
    }

    MultiIndex without_position(int pos) const {
        std::vector<int> r(idx_);
        r.erase(r.begin() + pos);
        MultiIndex m;
        m.idx_ = std::move(r);
        return m;
    }

    /// Complementary indices within 1..n, increasing.
    MultiIndex complement(int n) const {
        std::vector<int> r;
        r.reserve(static_cast<std::size_t>(n) - idx_.size());
        for (int i = 1; i <= n; ++i)
            if (!contains(i)) r.push_back(i);
        MultiIndex m;
        m.idx_ = std::move(r);
        return m;
    }

    /// Shuffle product: sign and merged index for dx^a ∧ dx^b, nullopt when the
    /// indices overlap. The sign is the parity of the merge permutation.
    static std::optional<std::pair<int, MultiIndex>> merge(const MultiIndex& a,
                                                           const MultiIndex& b) {
        std::vector<int> merged;
        merged.reserve(a.idx_.size() + b.idx_.size());
        int sign = 1;
        std::size_t ia = 0, ib = 0;
        while (ia < a.idx_.size() && ib < b.idx_.size()) {
            if (a.idx_[ia] == b.idx_[ib]) return std::nullopt;
            if (a.idx_[ia] < b.idx_[ib]) {
                merged.push_back(a.idx_[ia++]);
            } else {
                // b's entry jumps over the remaining entries of a.
                if ((a.idx_.size() - ia) % 2 == 1) sign = -sign;
                merged.push_back(b.idx_[ib++]);
            }
        }
        while (ia < a.idx_.size()) merged.push_back(a.idx_[ia++]);
        while (ib < b.idx_.size()) merged.push_back(b.idx_[ib++]);
        MultiIndex m;
        m.idx_ = std::move(merged);
        return std::make_pair(sign, m);
    }

    /// All increasing k-subsets of 1..n in lexicographic order.
    static std::vector<MultiIndex> all(int n, int k) {
        std::vector<MultiIndex> out;
        if (k < 0 || k > n) return out;
        std::vector<int> cur(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            MultiIndex m;
            m.idx_ = cur;
            out.push_back(m);
            int pos = k - 1;
            while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - (k - 1 - pos)) --pos;
            if (pos < 0) break;
            ++cur[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
        }
        return out;
    }

    std::string str() const {
        std::string s = "dx[";
        for (std::size_t i = 0; i < idx_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(idx_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.idx_ == b.idx_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.idx_ != b.idx_; }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.idx_ < b.idx_; }

private:
    std::vector<int> idx_;
};

}  // namespace g2calc
