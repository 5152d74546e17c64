#ifndef HOMCOB_FREE_WORD_HPP
#define HOMCOB_FREE_WORD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace homcob {

// One letter x_gen^sign of a free-group word; generator indices are 1-based.
struct Letter {
    int gen;
    int sign; // +1 or -1

    bool operator==(const Letter&) const = default;
};

class FreeWord {
public:
    FreeWord() = default;

    static FreeWord generator(int gen, long long exp = 1) {
        FreeWord w;
        w.append(gen, exp);
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    void append(int gen, long long exp) {
        if (gen < 1) throw BadParameter("generator index must be >= 1");
        int sign = exp >= 0 ? 1 : -1;
        for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i)
            letters_.push_back(Letter{gen, sign});
    }

    FreeWord operator*(const FreeWord& o) const {
        FreeWord w = *this;
        w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
        return w;
    }

    FreeWord inverse() const {
        FreeWord w;
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(Letter{it->gen, -it->sign});
        return w;
    }

    FreeWord pow(long long n) const {
        FreeWord base = n >= 0 ? *this : inverse();
        FreeWord w;
        for (long long i = 0; i < (n >= 0 ? n : -n); ++i) w = w * base;
        return w;
    }

    // Free cancellation of adjacent inverse pairs.
    FreeWord reduced() const {
        FreeWord w;
        for (const Letter& l : letters_) {
            if (!w.letters_.empty()) {
                const Letter& last = w.letters_.back();
                if (last.gen == l.gen && last.sign == -l.sign) {
                    w.letters_.pop_back();
                    continue;
                }
            }
            w.letters_.push_back(l);
        }
        return w;
    }

    long long exponent_sum(int gen) const {
        long long s = 0;
        for (const Letter& l : letters_)
            if (l.gen == gen) s += l.sign;
        return s;
    }

    int max_generator() const {
        int m = 0;
        for (const Letter& l : letters_)
            if (l.gen > m) m = l.gen;
        return m;
    }

    // "x1 x2^-1"; the empty word prints as "1".
    std::string to_string() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < letters_.size();) {
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
            long long run = (long long)(j - i) * letters_[i].sign;
            if (!s.empty()) s += ' ';
            s += "x" + std::to_string(letters_[i].gen);
            if (run != 1) s += "^" + std::to_string(run);
            i = j;
        }
        return s;
    }

    // Words look like "x1 x2^-1 x3^2"; "1" is the empty word.
    static FreeWord parse(const std::string& text) {
        FreeWord w;
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
        auto found_here = [&]() -> std::string {
            return i < text.size() ? "'" + std::string(1, text[i]) + "'" : "end of input";
        };
        auto parse_int = [&](const char* what) -> long long {
            std::size_t start = i;
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= text.size() || text[i] < '0' || text[i] > '9')
                throw ParseError(i, what, found_here());
            long long v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + (text[i] - '0');
                if (v > 1000000) throw ParseError(start, "smaller integer", "overlong integer");
                ++i;
            }
            return neg ? -v : v;
        };

        skip_ws();
        if (i < text.size() && text[i] == '1' &&
            (i + 1 == text.size() || text[i + 1] == ' ' || text[i + 1] == '\t')) {
            std::size_t save = i;
            ++i;
            skip_ws();
            if (i == text.size()) return w;
            i = save;
        }
        while (i < text.size()) {
            if (text[i] != 'x') throw ParseError(i, "'x'", found_here());
            ++i;
            long long gen = parse_int("generator index");
            if (gen < 1) throw ParseError(i, "index >= 1", "x" + std::to_string(gen));
            long long exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                exp = parse_int("exponent");
            }
            w.append((int)gen, exp);
            skip_ws();
        }
        return w;
    }

    bool operator==(const FreeWord&) const = default;

private:
    std::vector<Letter> letters_;
};

inline FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    return a * b * a.inverse() * b.inverse();
}

} // namespace homcob

#endif
