#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tridkit/errors.hpp"
#include "tridkit/scalar.hpp"

namespace tridkit {

/// Square tridiagonal matrix stored as its three bands. Accessors are
/// 1-based to match the usual indexing of the recurrences: diag(i) is the
/// (i,i) entry for i in 1..n, super(i) is (i,i+1) and sub(i) is (i+1,i)
/// for i in 1..n-1. Immutable after construction.
template <class T>
class TridiagonalMatrix {
public:
    TridiagonalMatrix(std::vector<T> diag, std::vector<T> super, std::vector<T> sub)
        : diag_(std::move(diag)), super_(std::move(super)), sub_(std::move(sub)) {
        if (diag_.empty())
            throw DimensionMismatchError("tridiagonal matrix needs order >= 1");
        if (super_.size() != diag_.size() - 1 || sub_.size() != diag_.size() - 1)
            throw DimensionMismatchError(
                "off-diagonal bands must hold n-1 entries, got " +
                std::to_string(super_.size()) + " and " + std::to_string(sub_.size()) +
                " for n = " + std::to_string(diag_.size()));
    }

    int order() const { return static_cast<int>(diag_.size()); }

    const T& diag(int i) const { return diag_[static_cast<std::size_t>(i - 1)]; }
    const T& super(int i) const { return super_[static_cast<std::size_t>(i - 1)]; }
    const T& sub(int i) const { return sub_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<T>& diag_band() const { return diag_; }
    const std::vector<T>& super_band() const { return super_; }
    const std::vector<T>& sub_band() const { return sub_; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < super_.size(); ++i)
            if (!(super_[i] == sub_[i])) return false;
        return true;
    }

private:
    std::vector<T> diag_;
    std::vector<T> super_;
    std::vector<T> sub_;
};

/// True iff rotating the matrix 180 degrees leaves it unchanged, tested on
/// the bands alone: the diagonal must be palindromic and each super entry
/// must equal the mirrored sub entry.
template <class T>
bool is_centrosymmetric(const TridiagonalMatrix<T>& A) {
    const int n = A.order();
    for (int i = 1; i <= n; ++i)
        if (!(A.diag(i) == A.diag(n + 1 - i))) return false;
    for (int i = 1; i <= n - 1; ++i)
        if (!(A.super(i) == A.sub(n - i))) return false;
    return true;
}

} // namespace tridkit
