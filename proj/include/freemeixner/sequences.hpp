#pragma once

#include "freemeixner/errors.hpp"
#include "freemeixner/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace freemeixner {

inline constexpr int kDefaultOrder = 16;
inline constexpr int kMaxSequenceOrder = 128;

namespace detail {
inline void check_order(int order) {
    if (order < 0) throw DomainError("order must be non-negative");
    if (order > kMaxSequenceOrder)
        throw OrderError("order " + std::to_string(order) + " exceeds cap " + std::to_string(kMaxSequenceOrder));
}
}  // namespace detail

/// Moments m_0..m_N of a law, with m_0 = 1.
template <Scalar T>
class MomentSequence {
  public:
    MomentSequence() : values_{T(1)} {}

    /// values[n] = m_n. Throws DomainError unless values[0] == 1.
    explicit MomentSequence(std::vector<T> values) : values_(std::move(values)) {
        if (values_.empty() || !nearly_equal(values_.front(), T(1), 1e-12))
            throw DomainError("moment sequence must start with m_0 = 1");
        detail::check_order(order());
    }

    int order() const noexcept { return static_cast<int>(values_.size()) - 1; }

    const T& operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }
    const std::vector<T>& values() const noexcept { return values_; }

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

  private:
    std::vector<T> values_;
};

/// Free cumulants R_1..R_N. Indexing is 1-based: seq[1] == R_1.
template <Scalar T>
class CumulantSequence {
  public:
    CumulantSequence() = default;

    /// values[k] = R_{k+1}.
    explicit CumulantSequence(std::vector<T> values) : values_(std::move(values)) {
        detail::check_order(order());
    }

    static CumulantSequence zeros(int order) { return CumulantSequence(std::vector<T>(order, T(0))); }

    int order() const noexcept { return static_cast<int>(values_.size()); }

    const T& operator[](int n) const {
        if (n < 1 || n > order())
            throw OrderError("cumulant R_" + std::to_string(n) + " outside available order " + std::to_string(order()));
        return values_[static_cast<std::size_t>(n - 1)];
    }
    const std::vector<T>& values() const noexcept { return values_; }

    /// The first `n` cumulants. Throws OrderError when n > order().
    CumulantSequence truncated(int n) const {
        if (n > order()) throw OrderError("cannot truncate to a larger order");
        return CumulantSequence(std::vector<T>(values_.begin(), values_.begin() + n));
    }

    friend bool operator==(const CumulantSequence&, const CumulantSequence&) = default;

  private:
    std::vector<T> values_;
};

}  // namespace freemeixner
