#pragma once

#include <gerst/errors.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gerst {

/// Largest supported ambient dimension n.
inline constexpr int kMaxDimension = 8;

/// Fixed-capacity exponent/weight vector in Z^n (Signed) or N^n (!Signed).
/// Comparison is lexicographic on the entries.
template <bool Signed>
class BasicIndex {
public:
    BasicIndex() = default;

    /// Zero vector of length `dim`.
    explicit BasicIndex(int dim) : dim_(check_dim(dim)) {}

    BasicIndex(std::initializer_list<int> entries)
        : BasicIndex(std::span<const int>(entries.begin(), entries.size())) {}

    explicit BasicIndex(std::span<const int> entries)
        : dim_(check_dim(static_cast<int>(entries.size()))) {
        for (int i = 0; i < dim_; ++i) set(i, entries[i]);
    }

    explicit BasicIndex(const std::vector<int>& entries)
        : BasicIndex(std::span<const int>(entries)) {}

    int dim() const { return dim_; }
    int operator[](int i) const { return entries_[i]; }

    void set(int i, int value) {
        if constexpr (!Signed) {
            if (value < 0) throw PreconditionError("negative exponent in a natural multi-index");
        }
        entries_[i] = value;
    }

    /// |a| = sum of entries.
    int total() const {
        int s = 0;
        for (int i = 0; i < dim_; ++i) s += entries_[i];
        return s;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.begin() + dim_, [](int e) { return e == 0; });
    }

    std::vector<int> to_vector() const { return {entries_.begin(), entries_.begin() + dim_}; }

    friend bool operator==(const BasicIndex& a, const BasicIndex& b) {
        return a.dim_ == b.dim_ &&
               std::equal(a.entries_.begin(), a.entries_.begin() + a.dim_, b.entries_.begin());
    }

    friend std::strong_ordering operator<=>(const BasicIndex& a, const BasicIndex& b) {
        if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
        for (int i = 0; i < a.dim_; ++i) {
            if (auto c = a.entries_[i] <=> b.entries_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    BasicIndex& operator+=(const BasicIndex& o) {
        require_same_dim(o);
        for (int i = 0; i < dim_; ++i) entries_[i] += o.entries_[i];
        return *this;
    }

    friend BasicIndex operator+(BasicIndex a, const BasicIndex& b) { return a += b; }

    void require_same_dim(const BasicIndex& o) const {
        if (o.dim_ != dim_) {
            throw DimensionError("multi-index dimensions differ: " + std::to_string(dim_) + " vs " +
                                 std::to_string(o.dim_));
        }
    }

private:
    static int check_dim(int dim) {
        if (dim < 1 || dim > kMaxDimension) {
            throw DimensionError("dimension must be in 1.." + std::to_string(kMaxDimension) +
                                 ", got " + std::to_string(dim));
        }
        return dim;
    }

    std::array<int, kMaxDimension> entries_{};
    int dim_ = 0;
};

/// Exponent vector a in N^n.
using NatIndex = BasicIndex<false>;
/// Weight vector a in Z^n.
using IntIndex = BasicIndex<true>;

inline IntIndex to_int(const NatIndex& a) {
    IntIndex r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.set(i, a[i]);
    return r;
}

inline IntIndex operator-(const IntIndex& a, const IntIndex& b) {
    a.require_same_dim(b);
    IntIndex r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.set(i, a[i] - b[i]);
    return r;
}

inline IntIndex operator-(const IntIndex& a) { return IntIndex(a.dim()) - a; }

inline IntIndex scale(const IntIndex& a, int k) {
    IntIndex r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.set(i, k * a[i]);
    return r;
}

/// Componentwise a <= b.
template <bool S>
bool dominated_by(const BasicIndex<S>& a, const BasicIndex<S>& b) {
    a.require_same_dim(b);
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

/// a - b for b <= a componentwise.
inline NatIndex nat_difference(const NatIndex& a, const NatIndex& b) {
    a.require_same_dim(b);
    NatIndex r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.set(i, a[i] - b[i]);
    return r;
}

/// Every b with 0 <= b <= a componentwise, in lexicographic order.
std::vector<NatIndex> sub_indices(const NatIndex& a);

/// All ordered lists (c_1, ..., c_parts) of natural indices summing to `total`,
/// in lexicographic order of the list.
std::vector<std::vector<NatIndex>> compositions(const NatIndex& total, int parts);

template <bool S>
std::string to_string(const BasicIndex<S>& a) {
    std::string out = "(";
    for (int i = 0; i < a.dim(); ++i) {
        if (i) out += ' ';
        out += std::to_string(a[i]);
    }
    return out + ")";
}

} // namespace gerst
