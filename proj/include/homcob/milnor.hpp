#ifndef HOMCOB_MILNOR_HPP
#define HOMCOB_MILNOR_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "magnus.hpp"

namespace homcob {

// Residue class of a mu-invariant: value lives mod `modulus`, with
// modulus 0 meaning the integer is well-defined.
struct MuBar {
    Int value;
    Int modulus;

    bool is_zero() const { return modulus == 0 ? value == 0 : pos_mod(value, modulus) == 0; }
    std::string to_string() const { return "(" + value.str() + ", " + modulus.str() + ")"; }
    bool operator==(const MuBar&) const = default;
};

struct MilnorDegree {
    enum class Kind { Exact, AtLeast, Infinite };
    Kind kind = Kind::Infinite;
    long long bound = 0;

    static MilnorDegree exactly(long long d) { return {Kind::Exact, d}; }
    static MilnorDegree at_least(long long b) { return {Kind::AtLeast, b}; }
    static MilnorDegree infinite() { return {Kind::Infinite, 0}; }

    bool is_exact() const { return kind == Kind::Exact; }

    std::string to_string() const {
        switch (kind) {
            case Kind::Exact: return "exactly " + std::to_string(bound);
            case Kind::AtLeast: return "at least " + std::to_string(bound);
            default: return "infinite";
        }
    }
    bool operator==(const MilnorDegree&) const = default;
};

// Degree of a connected sum: the minimum of the two degrees, stated as
// tightly as the operands allow.
inline MilnorDegree combine_degrees(const MilnorDegree& a, const MilnorDegree& b) {
    using K = MilnorDegree::Kind;
    if (a.kind == K::Infinite) return b;
    if (b.kind == K::Infinite) return a;
    if (a.kind == K::Exact && b.kind == K::Exact)
        return MilnorDegree::exactly(std::min(a.bound, b.bound));
    if (a.kind == K::Exact)
        return a.bound <= b.bound ? a : MilnorDegree::at_least(b.bound);
    if (b.kind == K::Exact)
        return b.bound <= a.bound ? b : MilnorDegree::at_least(a.bound);
    return MilnorDegree::at_least(std::min(a.bound, b.bound));
}

// Shared Magnus expansions of a link's longitudes, sized for multi-indices
// of length <= max_len; all mu computations for one link go through here.
class LongitudeExpansions {
public:
    LongitudeExpansions(const std::vector<FreeWord>& longitudes, int max_len)
        : n_((int)longitudes.size()), max_len_(max_len) {
        if (max_len_ < 2) throw BadParameter("multi-index length cap must be >= 2");
        exp_.reserve(longitudes.size());
        for (const FreeWord& w : longitudes)
            exp_.push_back(magnus_expansion(w, max_len_ - 1, n_));
    }

    int components() const { return n_; }
    int max_len() const { return max_len_; }

    // I = (i_1, ..., i_k, j): coefficient of X_{i_1}...X_{i_k} in the
    // expansion of the j-th longitude. Indices are 1-based.
    Int mu(const std::vector<int>& index) const {
        validate(index);
        std::vector<int> mono(index.begin(), index.end() - 1);
        return exp_[index.back() - 1].coefficient(mono);
    }

    // Milnor indeterminacy: gcd of mu over all cyclic rotations of all
    // proper subsequences of length >= 2.
    Int indeterminacy(const std::vector<int>& index) const {
        validate(index);
        const std::size_t k = index.size();
        Int g(0);
        for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
            std::vector<int> sub;
            for (std::size_t t = 0; t < k; ++t)
                if (mask & (1u << t)) sub.push_back(index[t]);
            if (sub.size() < 2) continue;
            for (std::size_t r = 0; r < sub.size(); ++r) {
                g = gcd(g, mu(sub));
                std::rotate(sub.begin(), sub.begin() + 1, sub.end());
            }
        }
        return g;
    }

    MuBar mu_bar(const std::vector<int>& index) const {
        Int raw = mu(index);
        Int delta = indeterminacy(index);
        return MuBar{delta == 0 ? raw : pos_mod(raw, delta), delta};
    }

    // First length with a nonvanishing mu_bar, scanning lengths 2..cap in
    // order and every multi-index of each length.
    MilnorDegree milnor_degree() const {
        for (int len = 2; len <= max_len_; ++len) {
            std::vector<int> index(len, 1);
            for (;;) {
                Int raw = mu(index);
                if (raw != 0) {
                    // Only a nonzero raw value can survive the reduction.
                    Int delta = indeterminacy(index);
                    if (delta == 0 || pos_mod(raw, delta) != 0)
                        return MilnorDegree::exactly(len);
                }
                int t = len - 1;
                while (t >= 0 && index[t] == n_) index[t--] = 1;
                if (t < 0) break;
                ++index[t];
            }
        }
        return MilnorDegree::at_least(max_len_ + 1);
    }

private:
    void validate(const std::vector<int>& index) const {
        if (index.size() < 2) throw BadParameter("multi-index needs length >= 2");
        if ((int)index.size() > max_len_)
            throw BadParameter("multi-index exceeds the configured length cap");
        for (int i : index)
            if (i < 1 || i > n_) throw IndexOutOfRange("multi-index component out of range");
    }

    int n_, max_len_;
    std::vector<TruncatedSeries> exp_;
};

inline Int mu(const std::vector<FreeWord>& longitudes, const std::vector<int>& index) {
    return LongitudeExpansions(longitudes, (int)index.size()).mu(index);
}

inline MuBar mu_bar(const std::vector<FreeWord>& longitudes, const std::vector<int>& index) {
    return LongitudeExpansions(longitudes, (int)index.size()).mu_bar(index);
}

inline MilnorDegree milnor_degree(const std::vector<FreeWord>& longitudes, int max_len) {
    return LongitudeExpansions(longitudes, max_len).milnor_degree();
}

// "123" or "1,2,3" -> {1,2,3}; comma form required past component 9.
inline std::vector<int> parse_multi_index(const std::string& text) {
    std::vector<int> index;
    if (text.find(',') == std::string::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c < '1' || c > '9')
                throw ParseError(i, "digit 1-9", "'" + std::string(1, c) + "'");
            index.push_back(c - '0');
        }
    } else {
        std::size_t i = 0;
        while (i <= text.size()) {
            std::size_t j = text.find(',', i);
            if (j == std::string::npos) j = text.size();
            if (j == i) throw ParseError(i, "component index", "','");
            int v = 0;
            for (std::size_t t = i; t < j; ++t) {
                if (text[t] < '0' || text[t] > '9')
                    throw ParseError(t, "digit", "'" + std::string(1, text[t]) + "'");
                v = v * 10 + (text[t] - '0');
                if (v > 1000) throw ParseError(i, "smaller index", "overlong index");
            }
            if (v < 1) throw ParseError(i, "index >= 1", "0");
            index.push_back(v);
            if (j == text.size()) break;
            i = j + 1;
        }
    }
    if (index.size() < 2) throw ParseError(text.size(), "multi-index of length >= 2", "end of input");
    return index;
}

} // namespace homcob

#endif
