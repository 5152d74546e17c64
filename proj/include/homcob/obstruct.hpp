#ifndef HOMCOB_OBSTRUCT_HPP
#define HOMCOB_OBSTRUCT_HPP

#include <array>
#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "descriptor.hpp"

namespace homcob {

enum class Verdict { Obstructed, ConsistentNecessaryChecksPassed, Inapplicable };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Obstructed: return "Obstructed";
        case Verdict::ConsistentNecessaryChecksPassed: return "ConsistentNecessaryChecksPassed";
        default: return "Inapplicable";
    }
}

// A nonzero value of a cup form on a basis triple (1-based indices).
struct TripleWitness {
    std::size_t i = 0, j = 0, k = 0;
    Rat value;
    FormRing ring = FormRing::Integers;
    Int p = 0;
};

// A nonzero vector in the radical of a rational cup form.
struct RadicalWitness {
    std::vector<Rat> coords;
};

struct FiredRule {
    std::string tag; // one of rule_tags()
    std::string witness_text;
    std::variant<std::monostate, TripleWitness, RadicalWitness> witness;
};

struct ObstructionReport {
    Verdict verdict = Verdict::Inapplicable;
    std::vector<FiredRule> fired_rules;
    std::vector<std::string> notes;
};

inline const std::vector<std::string>& rule_tags() {
    static const std::vector<std::string> tags = {"Thm1.1", "Cor1.2", "Thm1.3", "Prop4.2",
                                                  "Prop4.4"};
    return tags;
}

namespace detail {

// Basis of the kernel {v : m v = 0} over the rationals.
inline std::vector<std::vector<Rat>> rational_kernel(RatMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        Rat inv = Rat(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m(i, c);
        basis.push_back(v);
    }
    return basis;
}

inline std::string coords_to_string(const std::vector<Rat>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline TripleWitness first_nonzero_triple(const AlternatingTrilinearForm& f) {
    TripleWitness w;
    for (const auto& [key, value] : f.triples()) {
        w.i = key[0] + 1;
        w.j = key[1] + 1;
        w.k = key[2] + 1;
        w.value = value;
        w.ring = f.ring();
        w.p = f.characteristic();
        break;
    }
    return w;
}

} // namespace detail

// Vectors spanning {v : f(v, x, y) = 0 for all x, y}. Requires a form over
// Z or Q; dim 3 with a nonzero form gives an empty basis, the zero form
// gives the whole space.
inline std::vector<std::vector<Rat>> radical_of_form(const AlternatingTrilinearForm& f) {
    if (f.ring() == FormRing::ModP)
        throw BadParameter("radical requires a form over the integers or rationals");
    const std::size_t n = f.dim();
    std::vector<std::array<std::size_t, 2>> pairs;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) pairs.push_back({j, k});
    RatMatrix m(pairs.size(), n);
    for (std::size_t r = 0; r < pairs.size(); ++r)
        for (std::size_t i = 0; i < n; ++i) m(r, i) = f.eval(i, pairs[r][0], pairs[r][1]);
    return detail::rational_kernel(m);
}

// Rank 3 alternating trilinear forms over the rationals are equivalent
// exactly when both vanish or both do not.
inline bool rank3_forms_equivalent(const AlternatingTrilinearForm& a,
                                   const AlternatingTrilinearForm& b) {
    if (a.dim() != 3 || b.dim() != 3) throw BadParameter("rank3 equivalence needs dim 3 forms");
    return a.is_zero() == b.is_zero();
}

// Necessary conditions on the rational cup form for the class of d to
// contain a Seifert fibered space. Assumes nothing beyond the descriptor.
inline ObstructionReport check_theorem_1_1(const ManifoldDescriptor& d) {
    ObstructionReport rep;
    for (const Int& t : d.torsion)
        if (t % 2 == 0) {
            rep.notes.push_back("two torsion in H1: the cup form test does not apply");
            return rep;
        }
    if (!d.cup_form_q) {
        rep.notes.push_back("no rational cup form data");
        return rep;
    }
    if (d.beta1 == 0) {
        rep.notes.push_back("first Betti number zero: no rational cup form to test");
        return rep;
    }
    const AlternatingTrilinearForm& f = *d.cup_form_q;
    if (f.dim() != d.beta1) throw BadParameter("cup form dimension does not match beta1");

    if (d.beta1 % 2 == 0) {
        if (f.is_zero()) {
            rep.verdict = Verdict::ConsistentNecessaryChecksPassed;
            rep.notes.push_back(
                "even first Betti number and vanishing cup form match a Seifert fibered model");
            return rep;
        }
        TripleWitness w = detail::first_nonzero_triple(f);
        std::string text = "cup form takes value " + to_string(w.value) + " on basis triple (" +
                           std::to_string(w.i) + ", " + std::to_string(w.j) + ", " +
                           std::to_string(w.k) + ") but every candidate form with even first "
                           "Betti number " + std::to_string(d.beta1) + " vanishes";
        rep.verdict = Verdict::Obstructed;
        rep.fired_rules.push_back({"Cor1.2", text, w});
        if (d.kind == SurgeryKind::ZeroSurgeryLink)
            rep.fired_rules.push_back(
                {"Prop4.2", "zero surgery presentation with nonzero cup form", w});
        return rep;
    }

    if (d.beta1 == 1) {
        rep.verdict = Verdict::ConsistentNecessaryChecksPassed;
        rep.notes.push_back("first Betti number one: every alternating form vanishes");
        return rep;
    }

    std::vector<std::vector<Rat>> rad = radical_of_form(f);
    if (!rad.empty()) {
        RadicalWitness w{rad.front()};
        std::string text = "radical of the cup form contains " +
                           detail::coords_to_string(w.coords) +
                           " but the candidate form for odd first Betti number " +
                           std::to_string(d.beta1) + " has trivial radical";
        rep.verdict = Verdict::Obstructed;
        rep.fired_rules.push_back({"Cor1.2", text, w});
        return rep;
    }
    rep.verdict = Verdict::ConsistentNecessaryChecksPassed;
    if (d.beta1 == 3)
        rep.notes.push_back(
            "trivial radical in rank three: the cup form is equivalent to the standard one");
    else
        rep.notes.push_back(
            "trivial radical is necessary but equivalence to the standard form in rank " +
            std::to_string(d.beta1) + " was not decided");
    return rep;
}

// Necessary condition on mod p cup forms for a rational homology sphere.
inline ObstructionReport check_theorem_1_3(const ManifoldDescriptor& d) {
    ObstructionReport rep;
    if (d.beta1 > 0) {
        rep.notes.push_back("positive first Betti number: the mod p test does not apply");
        return rep;
    }
    if (d.cup_forms_mod_p.empty()) {
        rep.notes.push_back("no mod p cup form data");
        return rep;
    }
    for (const auto& [p, f] : d.cup_forms_mod_p) {
        if (f.is_zero()) continue;
        TripleWitness w = detail::first_nonzero_triple(f);
        std::string text = "mod " + to_string(p) + " cup form takes value " + to_string(w.value) +
                           " on basis triple (" + std::to_string(w.i) + ", " +
                           std::to_string(w.j) + ", " + std::to_string(w.k) +
                           ") but vanishes for every rational homology sphere candidate";
        rep.verdict = Verdict::Obstructed;
        rep.fired_rules.push_back({"Thm1.3", text, w});
        if (d.kind == SurgeryKind::FramedSurgeryLink)
            rep.fired_rules.push_back(
                {"Prop4.4", "framed surgery presentation with nonzero mod p cup form", w});
        return rep;
    }
    rep.verdict = Verdict::ConsistentNecessaryChecksPassed;
    rep.notes.push_back("all computed mod p cup forms vanish");
    return rep;
}

// Runs every applicable test. Obstructed wins; otherwise consistent if at
// least one test ran; otherwise inapplicable.
inline ObstructionReport obstruct(const ManifoldDescriptor& d) {
    ObstructionReport a = check_theorem_1_1(d);
    ObstructionReport b = check_theorem_1_3(d);
    ObstructionReport rep;
    rep.fired_rules = a.fired_rules;
    rep.fired_rules.insert(rep.fired_rules.end(), b.fired_rules.begin(), b.fired_rules.end());
    rep.notes = a.notes;
    rep.notes.insert(rep.notes.end(), b.notes.begin(), b.notes.end());
    if (a.verdict == Verdict::Obstructed || b.verdict == Verdict::Obstructed)
        rep.verdict = Verdict::Obstructed;
    else if (a.verdict == Verdict::ConsistentNecessaryChecksPassed ||
             b.verdict == Verdict::ConsistentNecessaryChecksPassed)
        rep.verdict = Verdict::ConsistentNecessaryChecksPassed;
    return rep;
}

// Exhaustive isomorphism test for linking forms on groups of order at
// most cutoff. Throws CutoffExceeded beyond that.
inline bool linking_forms_isomorphic(const LinkingForm& a, const LinkingForm& b,
                                     const Int& cutoff = 2000) {
    if (a.canonical_group() != b.canonical_group()) return false;
    const Int order = a.group_order();
    if (order > cutoff)
        throw CutoffExceeded("linking form isomorphism test needs group order <= " +
                             to_string(cutoff) + ", got " + to_string(order));
    const std::vector<Int>& oa = a.orders();
    const std::vector<Int>& ob = b.orders();
    const std::size_t k = oa.size(), l = ob.size();
    if (order == 1) return true;

    // all elements of the target group
    std::vector<std::vector<Int>> elems;
    std::vector<Int> cur(l, 0);
    while (true) {
        elems.push_back(cur);
        std::size_t j = 0;
        while (j < l) {
            cur[j] += 1;
            if (cur[j] < ob[j]) break;
            cur[j] = 0;
            ++j;
        }
        if (j == l) break;
    }
    auto order_of = [&](const std::vector<Int>& e) {
        Int o(1);
        for (std::size_t j = 0; j < l; ++j) o = lcm(o, ob[j] / gcd(ob[j], e[j]));
        return o;
    };

    std::vector<std::vector<Int>> img(k);
    auto generates_all = [&]() {
        std::set<std::vector<Int>> seen;
        std::vector<Int> c(k, 0);
        while (true) {
            std::vector<Int> sum(l, 0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < l; ++j)
                    sum[j] = pos_mod(sum[j] + c[i] * img[i][j], ob[j]);
            seen.insert(sum);
            std::size_t j = 0;
            while (j < k) {
                c[j] += 1;
                if (c[j] < oa[j]) break;
                c[j] = 0;
                ++j;
            }
            if (j == k) break;
        }
        return Int(seen.size()) == order;
    };

    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == k) return generates_all();
        for (const auto& cand : elems) {
            if (oa[i] % order_of(cand) != 0) continue;
            bool ok = true;
            for (std::size_t t = 0; t <= i && ok; ++t) {
                const std::vector<Int>& other = t == i ? cand : img[t];
                std::vector<Int> x(k, 0), y(k, 0);
                x[i] = 1;
                y[t] = 1;
                if (b.eval(cand, other) != a.eval(x, y)) ok = false;
            }
            if (!ok) continue;
            img[i] = cand;
            if (place(i + 1)) return true;
        }
        return false;
    };
    return place(0);
}

struct EvidenceRow {
    std::string invariant;
    std::string lhs;
    std::string rhs;
};

struct DistinctionReport {
    bool distinct = false;
    std::vector<EvidenceRow> evidence;
    std::vector<std::string> caveats;
};

// Compares computable invariants of two descriptors. distinct means some
// invariant differs, so the manifolds cannot be homology cobordant; a
// negative answer only says these invariants agree.
inline DistinctionReport distinguish(const ManifoldDescriptor& a, const ManifoldDescriptor& b,
                                     const Int& linking_cutoff = 2000) {
    DistinctionReport rep;
    auto add = [&](const std::string& name, const std::string& l, const std::string& r) {
        rep.evidence.push_back({name, l, r});
        rep.distinct = true;
    };

    if (a.beta1 != b.beta1)
        add("first Betti number", std::to_string(a.beta1), std::to_string(b.beta1));
    if (a.torsion != b.torsion) add("torsion subgroup", a.torsion_to_string(), b.torsion_to_string());

    if (a.linking_form && b.linking_form && a.torsion == b.torsion) {
        try {
            if (!linking_forms_isomorphic(*a.linking_form, *b.linking_form, linking_cutoff))
                add("torsion linking form", a.linking_form->to_string(),
                    b.linking_form->to_string());
        } catch (const CutoffExceeded& e) {
            rep.caveats.push_back(std::string("linking form comparison skipped: ") + e.what());
        }
    }

    if (a.cup_form_q && b.cup_form_q && a.cup_form_q->dim() == b.cup_form_q->dim()) {
        const AlternatingTrilinearForm& fa = *a.cup_form_q;
        const AlternatingTrilinearForm& fb = *b.cup_form_q;
        if (fa.is_zero() != fb.is_zero())
            add("rational cup form", fa.is_zero() ? "zero" : "nonzero",
                fb.is_zero() ? "zero" : "nonzero");
        else if (!fa.is_zero() && fa.ring() == FormRing::Integers &&
                 fb.ring() == FormRing::Integers) {
            if (fa.dim() == 3 && abs(numerator(fa.eval(0, 1, 2))) !=
                                     abs(numerator(fb.eval(0, 1, 2))))
                add("integral cup form on the top triple",
                    to_string(abs(numerator(fa.eval(0, 1, 2)))),
                    to_string(abs(numerator(fb.eval(0, 1, 2)))));
            else if (fa.gcd_of_constants() != fb.gcd_of_constants())
                add("gcd of integral cup form values", to_string(fa.gcd_of_constants()),
                    to_string(fb.gcd_of_constants()));
        }
    }

    for (const auto& [p, fa] : a.cup_forms_mod_p) {
        auto it = b.cup_forms_mod_p.find(p);
        if (it == b.cup_forms_mod_p.end() || fa.dim() != it->second.dim()) continue;
        if (fa.is_zero() != it->second.is_zero())
            add("mod " + to_string(p) + " cup form", fa.is_zero() ? "zero" : "nonzero",
                it->second.is_zero() ? "zero" : "nonzero");
    }

    if (a.milnor && b.milnor) {
        const MilnorDegree& ma = *a.milnor;
        const MilnorDegree& mb = *b.milnor;
        bool differ = false;
        if (ma.is_exact() && mb.is_exact())
            differ = ma.bound != mb.bound;
        else if (ma.is_exact() && mb.kind == MilnorDegree::Kind::AtLeast)
            differ = ma.bound < mb.bound;
        else if (mb.is_exact() && ma.kind == MilnorDegree::Kind::AtLeast)
            differ = mb.bound < ma.bound;
        else if (ma.kind == MilnorDegree::Kind::Infinite || mb.kind == MilnorDegree::Kind::Infinite)
            differ = ma.is_exact() || mb.is_exact();
        if (differ) add("Milnor degree", ma.to_string(), mb.to_string());
    }

    if (!rep.distinct)
        rep.caveats.push_back("all compared invariants agree; the manifolds may still differ");
    return rep;
}

} // namespace homcob

#endif
