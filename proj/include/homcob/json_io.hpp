#ifndef HOMCOB_JSON_IO_HPP
#define HOMCOB_JSON_IO_HPP

#include <limits>
#include <string>

#include <json.hpp>

#include "families.hpp"
#include "obstruct.hpp"

namespace homcob {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; readers accept both. Rationals are [num, den].

inline json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return to_string(v);
}

inline Int int_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw Error(ErrorClass::Parse, what + ": not a valid integer string");
        }
    }
    throw Error(ErrorClass::Parse, what + ": expected an integer or a decimal string");
}

inline json rat_to_json(const Rat& v) {
    return json::array({int_to_json(numerator(v)), int_to_json(denominator(v))});
}

inline Rat rat_from_json(const json& j, const std::string& what) {
    if (j.is_array()) {
        if (j.size() != 2) throw Error(ErrorClass::Parse, what + ": expected [num, den]");
        Int num = int_from_json(j[0], what + " numerator");
        Int den = int_from_json(j[1], what + " denominator");
        if (den == 0) throw Error(ErrorClass::Parse, what + ": zero denominator");
        return make_rat(std::move(num), std::move(den));
    }
    return Rat(int_from_json(j, what));
}

namespace detail {

inline const json& field(const json& j, const char* name, const std::string& what) {
    if (!j.is_object()) throw Error(ErrorClass::Parse, what + ": expected a JSON object");
    auto it = j.find(name);
    if (it == j.end())
        throw Error(ErrorClass::Parse, what + ": missing field '" + std::string(name) + "'");
    return *it;
}

inline const json& array_field(const json& j, const char* name, const std::string& what) {
    const json& f = field(j, name, what);
    if (!f.is_array())
        throw Error(ErrorClass::Parse, what + ": field '" + std::string(name) + "' must be an array");
    return f;
}

} // namespace detail

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline IntMatrix matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(ErrorClass::Parse, what + ": expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw Error(ErrorClass::Parse, what + ": rows must be arrays");
        cols = j[0].size();
    }
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw Error(ErrorClass::Parse, what + ": rows must be arrays of equal length");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = int_from_json(j[i][c], what + " entry");
    }
    return m;
}

inline json torsion_to_json(const std::vector<Int>& t) {
    json a = json::array();
    for (const Int& v : t) a.push_back(int_to_json(v));
    return a;
}

inline std::vector<Int> torsion_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(ErrorClass::Parse, what + ": expected an array");
    std::vector<Int> t;
    for (const json& v : j) t.push_back(int_from_json(v, what + " entry"));
    return t;
}

inline json form_to_json(const AlternatingTrilinearForm& f) {
    json j;
    j["dimension"] = f.dim();
    j["ring"] = to_string(f.ring());
    if (f.ring() == FormRing::ModP) j["p"] = int_to_json(f.characteristic());
    json triples = json::array();
    for (const auto& [key, value] : f.triples()) {
        json entry = json::array({key[0] + 1, key[1] + 1, key[2] + 1});
        if (denominator(value) == 1) entry.push_back(int_to_json(numerator(value)));
        else entry.push_back(rat_to_json(value));
        triples.push_back(entry);
    }
    j["triples"] = triples;
    return j;
}

inline AlternatingTrilinearForm form_from_json(const json& j, const std::string& what) {
    std::size_t dim = detail::field(j, "dimension", what).get<std::size_t>();
    std::string ring = detail::field(j, "ring", what).get<std::string>();
    AlternatingTrilinearForm f = [&] {
        if (ring == "Z") return AlternatingTrilinearForm(dim, FormRing::Integers);
        if (ring == "Q") return AlternatingTrilinearForm(dim, FormRing::Rationals);
        if (ring == "Z/p")
            return AlternatingTrilinearForm(dim, FormRing::ModP,
                                            int_from_json(detail::field(j, "p", what), what + " p"));
        throw Error(ErrorClass::Parse, what + ": ring must be one of \"Z\", \"Q\", \"Z/p\"");
    }();
    for (const json& t : detail::array_field(j, "triples", what)) {
        if (!t.is_array() || t.size() != 4)
            throw Error(ErrorClass::Parse, what + ": triples must be [i, j, k, value]");
        std::size_t i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>(),
                    k = t[2].get<std::size_t>();
        if (i < 1 || jj < 1 || k < 1)
            throw Error(ErrorClass::Parse, what + ": triple indices are 1-based");
        f.set(i - 1, jj - 1, k - 1, rat_from_json(t[3], what + " value"));
    }
    return f;
}

inline json linking_form_to_json(const LinkingForm& lf) {
    json j;
    j["torsion"] = torsion_to_json(lf.orders());
    json gram = json::array();
    for (std::size_t i = 0; i < lf.generators(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < lf.generators(); ++c) row.push_back(rat_to_json(lf.gram()(i, c)));
        gram.push_back(row);
    }
    j["gram"] = gram;
    return j;
}

inline LinkingForm linking_form_from_json(const json& j, const std::string& what) {
    std::vector<Int> orders = torsion_from_json(detail::field(j, "torsion", what), what + " torsion");
    const json& g = detail::array_field(j, "gram", what);
    if (g.size() != orders.size())
        throw Error(ErrorClass::Parse, what + ": gram must be square of the torsion length");
    RatMatrix gram(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (!g[i].is_array() || g[i].size() != orders.size())
            throw Error(ErrorClass::Parse, what + ": gram rows must match the torsion length");
        for (std::size_t c = 0; c < orders.size(); ++c)
            gram(i, c) = rat_from_json(g[i][c], what + " gram entry");
    }
    return LinkingForm(orders, gram);
}

inline json mu_bar_to_json(const MuBar& m) {
    return json{{"value", int_to_json(m.value)}, {"modulus", int_to_json(m.modulus)}};
}

inline json milnor_degree_to_json(const MilnorDegree& d) {
    switch (d.kind) {
        case MilnorDegree::Kind::Exact: return json{{"kind", "exact"}, {"bound", d.bound}};
        case MilnorDegree::Kind::AtLeast: return json{{"kind", "at_least"}, {"bound", d.bound}};
        default: return json{{"kind", "infinite"}};
    }
}

inline MilnorDegree milnor_degree_from_json(const json& j, const std::string& what) {
    std::string kind = detail::field(j, "kind", what).get<std::string>();
    if (kind == "infinite") return MilnorDegree::infinite();
    long long bound = detail::field(j, "bound", what).get<long long>();
    if (kind == "exact") return MilnorDegree::exactly(bound);
    if (kind == "at_least") return MilnorDegree::at_least(bound);
    throw Error(ErrorClass::Parse, what + ": kind must be \"exact\", \"at_least\" or \"infinite\"");
}

inline std::string surgery_kind_to_string(SurgeryKind k) {
    switch (k) {
        case SurgeryKind::ZeroSurgeryLink: return "zero_surgery_link";
        case SurgeryKind::FramedSurgeryLink: return "framed_surgery_link";
        default: return "none";
    }
}

inline SurgeryKind surgery_kind_from_string(const std::string& s, const std::string& what) {
    if (s == "zero_surgery_link") return SurgeryKind::ZeroSurgeryLink;
    if (s == "framed_surgery_link") return SurgeryKind::FramedSurgeryLink;
    if (s == "none") return SurgeryKind::None;
    throw Error(ErrorClass::Parse, what + ": unknown surgery kind '" + s + "'");
}

inline json descriptor_to_json(const ManifoldDescriptor& d) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["beta1"] = d.beta1;
    j["torsion"] = torsion_to_json(d.torsion);
    if (d.linking_form) j["linking_form"] = linking_form_to_json(*d.linking_form);
    if (d.cup_form_q) j["cup_form_q"] = form_to_json(*d.cup_form_q);
    json mods = json::array();
    for (const auto& [p, f] : d.cup_forms_mod_p)
        mods.push_back(json{{"p", int_to_json(p)}, {"form", form_to_json(f)}});
    j["cup_forms_mod_p"] = mods;
    if (d.milnor) j["milnor_degree"] = milnor_degree_to_json(*d.milnor);
    j["kind"] = surgery_kind_to_string(d.kind);
    j["provenance"] = d.provenance;
    return j;
}

inline ManifoldDescriptor descriptor_from_json(const json& j) {
    const std::string what = "descriptor";
    ManifoldDescriptor d;
    d.beta1 = detail::field(j, "beta1", what).get<std::size_t>();
    d.torsion = torsion_from_json(detail::field(j, "torsion", what), what + " torsion");
    if (j.contains("linking_form"))
        d.linking_form = linking_form_from_json(j["linking_form"], what + " linking_form");
    if (j.contains("cup_form_q")) {
        d.cup_form_q = form_from_json(j["cup_form_q"], what + " cup_form_q");
        if (d.cup_form_q->dim() != d.beta1)
            throw Error(ErrorClass::Parse, what + ": cup_form_q dimension must equal beta1");
    }
    if (j.contains("cup_forms_mod_p")) {
        if (!j["cup_forms_mod_p"].is_array())
            throw Error(ErrorClass::Parse, what + ": cup_forms_mod_p must be an array");
        for (const json& entry : j["cup_forms_mod_p"]) {
            Int p = int_from_json(detail::field(entry, "p", what + " mod p entry"), "p");
            AlternatingTrilinearForm f =
                form_from_json(detail::field(entry, "form", what + " mod p entry"), "mod p form");
            if (f.ring() != FormRing::ModP || f.characteristic() != p)
                throw Error(ErrorClass::Parse, what + ": mod p entry ring must be Z/p with the same p");
            d.cup_forms_mod_p.emplace(p, f);
        }
    }
    if (j.contains("milnor_degree"))
        d.milnor = milnor_degree_from_json(j["milnor_degree"], what + " milnor_degree");
    if (j.contains("kind"))
        d.kind = surgery_kind_from_string(j["kind"].get<std::string>(), what);
    if (j.contains("provenance"))
        for (const json& line : j["provenance"]) d.provenance.push_back(line.get<std::string>());
    return d;
}

inline json fired_rule_to_json(const FiredRule& r) {
    json j;
    j["tag"] = r.tag;
    j["witness_text"] = r.witness_text;
    if (std::holds_alternative<TripleWitness>(r.witness)) {
        const TripleWitness& w = std::get<TripleWitness>(r.witness);
        json wj{{"type", "triple"},
                {"i", w.i},
                {"j", w.j},
                {"k", w.k},
                {"value", rat_to_json(w.value)},
                {"ring", to_string(w.ring)}};
        if (w.ring == FormRing::ModP) wj["p"] = int_to_json(w.p);
        j["witness"] = wj;
    } else if (std::holds_alternative<RadicalWitness>(r.witness)) {
        const RadicalWitness& w = std::get<RadicalWitness>(r.witness);
        json coords = json::array();
        for (const Rat& c : w.coords) coords.push_back(rat_to_json(c));
        j["witness"] = json{{"type", "radical"}, {"coords", coords}};
    }
    return j;
}

inline json obstruction_report_to_json(const ObstructionReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["verdict"] = to_string(rep.verdict);
    json rules = json::array();
    for (const FiredRule& r : rep.fired_rules) rules.push_back(fired_rule_to_json(r));
    j["fired_rules"] = rules;
    j["notes"] = rep.notes;
    return j;
}

inline json distinction_report_to_json(const DistinctionReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["distinct"] = rep.distinct;
    json rows = json::array();
    for (const EvidenceRow& e : rep.evidence)
        rows.push_back(json{{"invariant", e.invariant}, {"lhs", e.lhs}, {"rhs", e.rhs}});
    j["evidence"] = rows;
    j["caveats"] = rep.caveats;
    return j;
}

inline json link_to_json(const LinkCatalogEntry& e) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = e.name;
    j["components"] = e.components;
    j["linking_matrix"] = matrix_to_json(e.linking_matrix);
    json words = json::array();
    for (const FreeWord& w : e.longitudes) words.push_back(w.to_string());
    j["longitudes"] = words;
    return j;
}

inline LinkCatalogEntry link_from_json(const json& j) {
    const std::string what = "link";
    IntMatrix m = matrix_from_json(detail::field(j, "linking_matrix", what), what + " linking_matrix");
    std::vector<FreeWord> longitudes;
    for (const json& w : detail::array_field(j, "longitudes", what)) {
        if (!w.is_string())
            throw Error(ErrorClass::Parse, what + ": longitudes must be word strings");
        longitudes.push_back(FreeWord::parse(w.get<std::string>()));
    }
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "custom link";
    return make_link(name, m, longitudes);
}

} // namespace homcob

#endif
