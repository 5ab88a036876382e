#include "freemeixner/ncpart.hpp"

#include <algorithm>
#include <sstream>

namespace freemeixner {

Partition Partition::from_blocks(int n, std::vector<Block> blocks) {
    if (n < 0) throw DomainError("partition size must be non-negative");
    std::vector<int> seen(n + 1, 0);
    for (auto& block : blocks) {
        if (block.empty()) throw DomainError("partition blocks must be nonempty");
        std::sort(block.begin(), block.end());
        for (int v : block) {
            if (v < 1 || v > n) throw DomainError("block element " + std::to_string(v) + " outside 1.." + std::to_string(n));
            if (seen[v]++) throw DomainError("element " + std::to_string(v) + " appears in two blocks");
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) throw DomainError("element " + std::to_string(v) + " is not covered");
    std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.front() < y.front(); });
    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::from_labels(std::span<const int> labels) {
    Partition p;
    p.n_ = static_cast<int>(labels.size());
    for (int i = 0; i < p.n_; ++i) {
        const auto label = static_cast<std::size_t>(labels[i]);
        if (label >= p.blocks_.size()) p.blocks_.resize(label + 1);
        p.blocks_[label].push_back(i + 1);
    }
    return p;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) os << ',';
        os << '{';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) os << ',';
            os << blocks_[b][i];
        }
        os << '}';
    }
    os << '}';
    return os.str();
}

bool is_crossing(const Partition& p) {
    // Blocks r != s cross iff some pair of consecutive elements of r
    // straddles exactly one element of s while another element of s lies
    // outside that gap.
    const int n = p.size();
    std::vector<int> label(n + 1, -1);
    for (int b = 0; b < p.block_count(); ++b)
        for (int v : p.blocks()[b]) label[v] = b;
    const auto& blocks = p.blocks();
    for (int r = 0; r < p.block_count(); ++r) {
        const Block& br = blocks[r];
        for (std::size_t k = 0; k + 1 < br.size(); ++k) {
            const int lo = br[k];
            const int hi = br[k + 1];
            for (int j = lo + 1; j < hi; ++j) {
                const int s = label[j];
                if (s == r) continue;
                if (blocks[s].front() < lo || blocks[s].back() > hi) return true;
            }
        }
    }
    return false;
}

int singleton_count(const Partition& p) {
    return static_cast<int>(std::count_if(p.blocks().begin(), p.blocks().end(),
                                          [](const Block& b) { return b.size() == 1; }));
}

namespace {

std::vector<Partition> collect(int n, int max_block, int cap) {
    std::vector<Partition> out;
    for_each_nc(
        n, [&](std::span<const int> labels, std::span<const int>) { out.push_back(Partition::from_labels(labels)); },
        max_block, cap);
    return out;
}

}  // namespace

std::vector<Partition> enumerate_nc(int n, int cap) { return collect(n, 0, cap); }

std::vector<Partition> enumerate_nc_le2(int n, int cap) { return collect(n, 2, cap); }

std::vector<std::uint64_t> nc_le2_pair_counts(int n) {
    if (n < 0) throw DomainError("partition size must be non-negative");
    // ways[k][p]: prefixes with k joinable singletons on the stack and p pairs.
    const int max_pairs = n / 2;
    std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(max_pairs + 1, 0));
    ways[0][0] = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<std::uint64_t>> next(n + 1, std::vector<std::uint64_t>(max_pairs + 1, 0));
        for (int k = 0; k <= i; ++k) {
            for (int p = 0; p <= max_pairs; ++p) {
                const std::uint64_t w = ways[k][p];
                if (!w) continue;
                next[k + 1][p] += w;
                if (p < max_pairs)
                    for (int t = 0; t < k; ++t) next[t][p + 1] += w;
            }
        }
        ways = std::move(next);
    }
    std::vector<std::uint64_t> counts(max_pairs + 1, 0);
    for (int k = 0; k <= n; ++k)
        for (int p = 0; p <= max_pairs; ++p) counts[p] += ways[k][p];
    return counts;
}

}  // namespace freemeixner
