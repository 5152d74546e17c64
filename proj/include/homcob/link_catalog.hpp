#ifndef HOMCOB_LINK_CATALOG_HPP
#define HOMCOB_LINK_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "free_word.hpp"
#include "matrix.hpp"

namespace homcob {

// A link presented by meridian/longitude words: the i-th longitude is a
// word in the meridians x_1..x_n. Diagonal entries of the matrix are
// framings; off-diagonal entries are linking numbers.
struct LinkCatalogEntry {
    std::string name;
    int components = 0;
    IntMatrix linking_matrix;
    std::vector<FreeWord> longitudes;

    bool operator==(const LinkCatalogEntry&) const = default;
};

// Validates shape and the linking-number cross-check: every off-diagonal
// entry must equal the corresponding longitude exponent sum (the degree-1
// Magnus coefficient).
inline LinkCatalogEntry make_link(std::string name, IntMatrix matrix,
                                  std::vector<FreeWord> longitudes) {
    const std::size_t n = longitudes.size();
    if (matrix.rows() != n || matrix.cols() != n)
        throw BadParameter("linking matrix shape does not match component count");
    if (!matrix.is_symmetric()) throw BadParameter("linking matrix must be symmetric");
    for (std::size_t i = 0; i < n; ++i) {
        if (longitudes[i].max_generator() > (int)n)
            throw BadParameter("longitude uses a meridian beyond the component count");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (matrix(i, j) != longitudes[i].exponent_sum((int)j + 1))
                throw BadParameter("linking matrix disagrees with longitude exponent sums");
        }
    }
    return LinkCatalogEntry{std::move(name), (int)n, std::move(matrix), std::move(longitudes)};
}

inline LinkCatalogEntry unlink(int n) {
    if (n < 1) throw BadParameter("unlink needs n >= 1");
    return make_link("unlink(" + std::to_string(n) + ")", IntMatrix(n, n),
                     std::vector<FreeWord>(n));
}

inline LinkCatalogEntry borromean() {
    auto x = [](int g) { return FreeWord::generator(g); };
    return make_link("borromean", IntMatrix(3, 3),
                     {commutator(x(2), x(3)), commutator(x(3), x(1)), commutator(x(1), x(2))});
}

inline LinkCatalogEntry whitehead() {
    auto x = [](int g) { return FreeWord::generator(g); };
    return make_link("whitehead", IntMatrix(2, 2),
                     {commutator(x(2), commutator(x(2), x(1))),
                      commutator(x(1), commutator(x(1), x(2)))});
}

// [...[[x_a, x_b], x_b], ..., x_b] with `depth` brackets.
inline FreeWord nested_bracket(int a, int b, int depth) {
    if (depth < 1) throw BadParameter("bracket depth must be >= 1");
    FreeWord w = commutator(FreeWord::generator(a), FreeWord::generator(b));
    for (int t = 1; t < depth; ++t) w = commutator(w, FreeWord::generator(b));
    return w;
}

// Three-component link whose first nonvanishing mu_bar has length exactly d:
// the cyclically symmetric family of (d-2)-fold brackets, reducing to the
// Borromean rings at d = 3.
inline LinkCatalogEntry link_family_L(int d) {
    if (d < 3) throw BadParameter("L_d needs d >= 3");
    if (d > 16) throw BadParameter("L_d supported for d <= 16");
    return make_link("L_d(" + std::to_string(d) + ")", IntMatrix(3, 3),
                     {nested_bracket(2, 3, d - 2), nested_bracket(3, 1, d - 2),
                      nested_bracket(1, 2, d - 2)});
}

// (k,1)-cable model: longitudes with mu_bar(123) = k and zero linking.
inline LinkCatalogEntry cabled_borromean(long long k) {
    if (k < 1) throw BadParameter("cabled_borromean needs k >= 1");
    if (k > 10000) throw BadParameter("cabled_borromean supported for k <= 10000");
    auto x = [](int g, long long e = 1) { return FreeWord::generator(g, e); };
    return make_link("cabled_borromean(" + std::to_string(k) + ")", IntMatrix(3, 3),
                     {commutator(x(2), x(3, k)), commutator(x(3, k), x(1)),
                      commutator(x(1), x(2)).pow(k)});
}

// Same link, every component given framing p.
inline LinkCatalogEntry framed(const LinkCatalogEntry& e, const Int& p) {
    LinkCatalogEntry r = e;
    for (int i = 0; i < e.components; ++i) r.linking_matrix(i, i) = p;
    return r;
}

inline LinkCatalogEntry borromean_framed(const Int& p) {
    LinkCatalogEntry r = framed(borromean(), p);
    r.name = "borromean_framed(" + p.str() + ")";
    return r;
}

inline FreeWord shift_generators(const FreeWord& w, int offset) {
    FreeWord out;
    for (const Letter& l : w.letters()) out.append(l.gen + offset, l.sign);
    return out;
}

// Split union: block linking matrix, second link's meridians renumbered.
inline LinkCatalogEntry disjoint_union(const LinkCatalogEntry& a, const LinkCatalogEntry& b) {
    const int n = a.components + b.components;
    IntMatrix m(n, n);
    for (int i = 0; i < a.components; ++i)
        for (int j = 0; j < a.components; ++j) m(i, j) = a.linking_matrix(i, j);
    for (int i = 0; i < b.components; ++i)
        for (int j = 0; j < b.components; ++j)
            m(a.components + i, a.components + j) = b.linking_matrix(i, j);
    std::vector<FreeWord> longitudes = a.longitudes;
    for (const FreeWord& w : b.longitudes)
        longitudes.push_back(shift_generators(w, a.components));
    return make_link("disjoint_union(" + a.name + ", " + b.name + ")", std::move(m),
                     std::move(longitudes));
}

// Named catalog access for the CLI: unlink, borromean, whitehead, L_d,
// cabled_borromean, borromean_framed; parameters n, d, k, p.
inline LinkCatalogEntry catalog(const std::string& name,
                                const std::map<std::string, Int>& params = {}) {
    auto param = [&](const char* key) -> Int {
        auto it = params.find(key);
        if (it == params.end())
            throw BadParameter(name + " needs parameter " + key + "=<value>");
        return it->second;
    };
    auto as_ll = [&](const Int& v) -> long long {
        if (v > 1000000 || v < -1000000) throw BadParameter("parameter out of supported range");
        return (long long)v;
    };
    if (name == "unlink") return unlink((int)as_ll(param("n")));
    if (name == "borromean") return borromean();
    if (name == "whitehead") return whitehead();
    if (name == "L_d") return link_family_L((int)as_ll(param("d")));
    if (name == "cabled_borromean") return cabled_borromean(as_ll(param("k")));
    if (name == "borromean_framed") return borromean_framed(param("p"));
    throw UnknownCatalogName(name);
}

} // namespace homcob

#endif
