#pragma once

// Non-crossing set partitions of {1..n}.
//
// Enumeration uses an open-block stack: each element either opens a new
// block or joins a block still on the stack, which closes every block opened
// after it. Every non-crossing partition is produced exactly once, with
// blocks labelled in order of their least element.

#include "freemeixner/errors.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace freemeixner {

inline constexpr int kDefaultEnumerationCap = 14;

using Block = std::vector<int>;

class Partition {
  public:
    Partition() = default;

    /// Validates disjointness/coverage of {1..n} and brings the blocks into
    /// canonical order. Throws DomainError on invalid input.
    static Partition from_blocks(int n, std::vector<Block> blocks);

    /// labels[i] is the block of element i+1; labels must be in first-appearance order.
    static Partition from_labels(std::span<const int> labels);

    int size() const noexcept { return n_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    int n_ = 0;
    std::vector<Block> blocks_;
};

bool is_crossing(const Partition& p);
int singleton_count(const Partition& p);

/// All of NC(n). Throws OrderError when n > cap.
std::vector<Partition> enumerate_nc(int n, int cap = kDefaultEnumerationCap);

/// The members of NC(n) whose blocks have at most two elements.
std::vector<Partition> enumerate_nc_le2(int n, int cap = kDefaultEnumerationCap);

/// counts[p] = number of partitions in NC<=2(n) with exactly p pairs (and
/// n - 2p singletons). Dynamic programming over the same open-stack
/// generation, so no cap applies.
std::vector<std::uint64_t> nc_le2_pair_counts(int n);

namespace detail {

template <class Visit>
class NcWalker {
  public:
    NcWalker(int n, int max_block, Visit& visit)
        : n_(n), max_block_(max_block), visit_(visit), labels_(n), sizes_() {
        sizes_.reserve(n);
        stack_.reserve(n);
    }

    void run() { step(0); }

  private:
    void step(int i) {
        if (i == n_) {
            visit_(std::span<const int>(labels_), std::span<const int>(sizes_));
            return;
        }
        const int fresh = static_cast<int>(sizes_.size());
        labels_[i] = fresh;
        sizes_.push_back(1);
        stack_.push_back(fresh);
        step(i + 1);
        stack_.pop_back();
        sizes_.pop_back();

        const std::vector<int> saved = stack_;
        for (std::size_t j = 0; j < saved.size(); ++j) {
            const int block = saved[j];
            if (max_block_ > 0 && sizes_[block] >= max_block_) continue;
            labels_[i] = block;
            ++sizes_[block];
            stack_.resize(j + 1);
            step(i + 1);
            --sizes_[block];
            stack_ = saved;
        }
    }

    int n_;
    int max_block_;
    Visit& visit_;
    std::vector<int> labels_;
    std::vector<int> sizes_;
    std::vector<int> stack_;
};

inline void check_cap(int n, int cap) {
    if (n < 0) throw DomainError("partition size must be non-negative");
    if (n > cap)
        throw OrderError("non-crossing enumeration of size " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
}

}  // namespace detail

/// Calls visit(labels, block_sizes) once per partition in NC(n) (or in
/// NC<=max_block(n) when max_block > 0) without materializing the list.
template <class Visit>
void for_each_nc(int n, Visit&& visit, int max_block = 0, int cap = kDefaultEnumerationCap) {
    detail::check_cap(n, cap);
    detail::NcWalker<std::remove_reference_t<Visit>> walker(n, max_block, visit);
    walker.run();
}

}  // namespace freemeixner
