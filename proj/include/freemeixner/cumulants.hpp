#pragma once

// Moment <-> free cumulant transforms, free convolution on cumulant
// sequences, joint moments of free pairs, and the q-deformed cumulant
// recurrence.

#include "freemeixner/errors.hpp"
#include "freemeixner/ncpart.hpp"
#include "freemeixner/scalar.hpp"
#include "freemeixner/sequences.hpp"

#include <span>
#include <string>
#include <vector>

namespace freemeixner {

namespace detail {

// Coefficients [z^k] M(z)^s for 0 <= s <= max_power, filled column by column
// as moments become known.
template <Scalar T>
class SeriesPowers {
  public:
    explicit SeriesPowers(int max_power) : table_(max_power + 1) {}

    // Append column k, given m_0..m_k.
    void extend(const std::vector<T>& m) {
        const std::size_t k = table_[0].size();
        table_[0].push_back(k == 0 ? T(1) : T(0));
        for (std::size_t s = 1; s < table_.size(); ++s) {
            T acc(0);
            for (std::size_t i = 0; i <= k; ++i) acc += m[i] * table_[s - 1][k - i];
            table_[s].push_back(acc);
        }
    }

    const T& at(int power, int k) const { return table_[power][k]; }

  private:
    std::vector<std::vector<T>> table_;
};

}  // namespace detail

/// m_n = sum over NC(n) of products of R_{|B|}, evaluated through the
/// first-block functional relation M(z) = 1 + sum_s R_s z^s M(z)^s.
template <Scalar T>
MomentSequence<T> cumulants_to_moments(const CumulantSequence<T>& r) {
    const int order = r.order();
    std::vector<T> m{T(1)};
    detail::SeriesPowers<T> powers(order);
    powers.extend(m);
    for (int n = 1; n <= order; ++n) {
        T acc(0);
        for (int s = 1; s <= n; ++s) acc += r[s] * powers.at(s, n - s);
        m.push_back(acc);
        powers.extend(m);
    }
    return MomentSequence<T>(std::move(m));
}

/// Inverse of cumulants_to_moments: at each order the full-block term R_n
/// appears linearly and is solved for.
template <Scalar T>
CumulantSequence<T> moments_to_cumulants(const MomentSequence<T>& m) {
    const int order = m.order();
    detail::SeriesPowers<T> powers(order);
    for (int k = 0; k <= order; ++k) {
        std::vector<T> prefix(m.values().begin(), m.values().begin() + k + 1);
        powers.extend(prefix);
    }
    std::vector<T> r;
    r.reserve(order);
    for (int n = 1; n <= order; ++n) {
        T acc = m[n];
        for (int s = 1; s < n; ++s) acc -= r[s - 1] * powers.at(s, n - s);
        r.push_back(acc);
    }
    return CumulantSequence<T>(std::move(r));
}

/// Cumulants of the free convolution: elementwise sum.
template <Scalar T>
CumulantSequence<T> free_convolve(const CumulantSequence<T>& r1, const CumulantSequence<T>& r2) {
    if (r1.order() != r2.order())
        throw OrderError("free_convolve: order mismatch " + std::to_string(r1.order()) + " vs " +
                         std::to_string(r2.order()));
    std::vector<T> out(r1.values());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += r2.values()[i];
    return CumulantSequence<T>(std::move(out));
}

enum class PowerMode {
    law,     // t >= 1: the result is the cumulant sequence of a probability law
    formal,  // any t: formal scaling only
};

template <Scalar T>
CumulantSequence<T> convolution_power(const CumulantSequence<T>& r, const T& t, PowerMode mode = PowerMode::law) {
    if (mode == PowerMode::law && t < T(1))
        throw DomainError("convolution power t = " + to_string(t) +
                          " < 1 is not a law; use PowerMode::formal for formal scaling");
    std::vector<T> out(r.values());
    for (auto& v : out) v *= t;
    return CumulantSequence<T>(std::move(out));
}

/// Cumulants of the dilation x -> lambda x: R_n -> lambda^n R_n.
template <Scalar T>
CumulantSequence<T> dilate(const CumulantSequence<T>& r, const T& lambda) {
    std::vector<T> out(r.values());
    T scale(1);
    for (auto& v : out) {
        scale *= lambda;
        v *= scale;
    }
    return CumulantSequence<T>(std::move(out));
}

/// Free convolution with the point mass at c. Only R_1 moves.
template <Scalar T>
CumulantSequence<T> translate(const CumulantSequence<T>& r, const T& c) {
    std::vector<T> out(r.values());
    if (!out.empty()) out[0] += c;
    return CumulantSequence<T>(std::move(out));
}

// ---------------------------------------------------------------------------
// Free pairs

enum class Symbol : char { X = 'X', Y = 'Y', S = 'S' };

using Word = std::vector<Symbol>;

/// Parses "XSS" or "X,S,S" (case-insensitive). Throws DomainError.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Two free variables given by their cumulant sequences; S = X + Y.
template <Scalar T>
struct FreePair {
    CumulantSequence<T> x;
    CumulantSequence<T> y;

    int order() const { return std::min(x.order(), y.order()); }
    CumulantSequence<T> s() const { return free_convolve(x.truncated(order()), y.truncated(order())); }
};

/// A free pair whose cumulants split those of S in the ratio alpha : 1 - alpha.
template <Scalar T>
class FreePairSpec {
  public:
    FreePairSpec(CumulantSequence<T> s_cumulants, T alpha) : s_(std::move(s_cumulants)), alpha_(std::move(alpha)) {
        if (!(alpha_ > T(0) && alpha_ < T(1)))
            throw DomainError("free pair split alpha = " + to_string(alpha_) + " must lie in (0, 1)");
    }

    const CumulantSequence<T>& s_cumulants() const noexcept { return s_; }
    const T& alpha() const noexcept { return alpha_; }
    T beta() const { return T(1) - alpha_; }
    int order() const noexcept { return s_.order(); }

    CumulantSequence<T> x_cumulants() const { return convolution_power(s_, alpha_, PowerMode::formal); }
    CumulantSequence<T> y_cumulants() const { return convolution_power(s_, beta(), PowerMode::formal); }

    FreePair<T> as_free_pair() const { return {x_cumulants(), y_cumulants()}; }

  private:
    CumulantSequence<T> s_;
    T alpha_;
};

/// R_n(Z_1, ..., Z_n) for Z_i in {X, Y, S}: expanding S = X + Y and
/// dropping mixed terms leaves R_n(X) when no Y occurs plus R_n(Y) when no X occurs.
template <Scalar T>
T mixed_cumulant(const FreePair<T>& pair, std::span<const Symbol> word) {
    const int n = static_cast<int>(word.size());
    if (n == 0) throw DomainError("mixed_cumulant: empty word");
    if (n > pair.order())
        throw OrderError("word of length " + std::to_string(n) + " exceeds pair order " + std::to_string(pair.order()));
    bool has_x = false, has_y = false;
    for (Symbol z : word) {
        has_x |= z == Symbol::X;
        has_y |= z == Symbol::Y;
    }
    T value(0);
    if (!has_y) value += pair.x[n];
    if (!has_x) value += pair.y[n];
    return value;
}

/// tau(Z_1 ... Z_n): sum over NC(n) of products of block cumulants, where a
/// block mixing X and Y contributes zero.
template <Scalar T>
T joint_moment(const FreePair<T>& pair, std::span<const Symbol> word, int cap = kDefaultEnumerationCap) {
    const int n = static_cast<int>(word.size());
    if (n == 0) throw DomainError("joint_moment: word must be nonempty");
    if (n > pair.order())
        throw OrderError("word of length " + std::to_string(n) + " exceeds pair order " + std::to_string(pair.order()));

    T total(0);
    std::vector<unsigned char> flags;
    for_each_nc(
        n,
        [&](std::span<const int> labels, std::span<const int> sizes) {
            flags.assign(sizes.size(), 0);
            for (int i = 0; i < n; ++i) {
                if (word[i] == Symbol::X) flags[labels[i]] |= 1U;
                if (word[i] == Symbol::Y) flags[labels[i]] |= 2U;
            }
            T term(1);
            for (std::size_t b = 0; b < sizes.size(); ++b) {
                T block(0);
                if (!(flags[b] & 2U)) block += pair.x[sizes[b]];
                if (!(flags[b] & 1U)) block += pair.y[sizes[b]];
                if (block == T(0)) return;
                term *= block;
            }
            total += term;
        },
        0, cap);
    return total;
}

template <Scalar T>
T joint_moment_free_pair(const FreePairSpec<T>& spec, std::span<const Symbol> word) {
    return joint_moment(spec.as_free_pair(), word);
}

// ---------------------------------------------------------------------------
// q-deformation

/// Gaussian binomial coefficient with [n]_q = 1 + q + ... + q^{n-1}.
template <Scalar T>
T q_binomial(int n, int k, const T& q) {
    if (n < 0 || k < 0 || k > n) return T(0);
    // Pascal rule: [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<T> row(k + 1, T(0));
    row[0] = T(1);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + ipow(q, j) * row[j];
    }
    return row[k];
}

/// R_1 = 0, R_2 = 1, R_{n+1} = a R_n + b sum_{j=2}^{n-1} [n-1, j-1]_q R_j R_{n+1-j}.
template <Scalar T>
CumulantSequence<T> q_cumulants(const T& a, const T& b, const T& q, int order) {
    if (!(q > T(-1) && q <= T(1))) throw DomainError("q = " + to_string(q) + " must lie in (-1, 1]");
    if (order < 2) throw DomainError("q_cumulants needs order >= 2");
    detail::check_order(order);
    std::vector<T> r{T(0), T(1)};  // r[k] = R_{k+1}
    for (int n = 2; n < order; ++n) {
        T sum(0);
        for (int j = 2; j <= n - 1; ++j) sum += q_binomial(n - 1, j - 1, q) * r[j - 1] * r[n - j];
        r.push_back(a * r[n - 1] + b * sum);
    }
    return CumulantSequence<T>(std::move(r));
}

}  // namespace freemeixner
