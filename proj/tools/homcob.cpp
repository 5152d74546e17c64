// homcob: homology cobordism invariants of 3-manifolds.
//
// Subcommands: sfs, link, obstruct, examples. Exit codes are a stable
// contract: 0 consistent/ok, 2 parse error, 3 domain error or inapplicable,
// 4 unknown catalog or example name, 10 obstructed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <homcob/homcob.hpp>

namespace {

using namespace homcob;

enum class Format { Text, Json };

Format detect_format(const std::string& flag) {
    if (flag == "text") return Format::Text;
    if (flag == "json") return Format::Json;
    if (!flag.empty()) throw BadParameter("format must be 'text' or 'json'");
    const char* env = std::getenv("HOMCOB_FORMAT");
    if (env && std::string(env) == "json") return Format::Json;
    return Format::Text;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// caret diagnostic for notation and word parse errors
template <typename F>
auto with_caret(const std::string& text, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n  " << text << "\n  "
                  << std::string(e.pos <= text.size() ? e.pos : text.size(), ' ') << "^\n";
        std::exit(2);
    }
}

Int parse_int(const std::string& text, const std::string& what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw ParseError(0, "integer " + what, "'" + text + "'");
    }
}

std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
    if (out.empty()) throw ParseError(0, "comma separated list of " + what, "'" + text + "'");
    return out;
}

std::map<std::string, Int> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, Int> params;
    for (const std::string& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(0, "parameter of the form key=value", "'" + kv + "'");
        params[kv.substr(0, eq)] = parse_int(kv.substr(eq + 1), "parameter value");
    }
    return params;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParameter("cannot open file: " + path);
    return json::parse(in);
}

std::string rules_to_string(const ObstructionReport& rep) {
    std::string s;
    for (const FiredRule& r : rep.fired_rules) {
        if (!s.empty()) s += ", ";
        s += r.tag;
    }
    return s.empty() ? "-" : s;
}

void print_report_text(const ObstructionReport& rep) {
    std::cout << "verdict: " << to_string(rep.verdict) << "\n";
    for (const FiredRule& r : rep.fired_rules)
        std::cout << "rule " << r.tag << ": " << r.witness_text << "\n";
    for (const std::string& n : rep.notes) std::cout << "note: " << n << "\n";
}

void print_descriptor_text(const ManifoldDescriptor& d) {
    std::cout << "H1: " << d.torsion_to_string() << "\n";
    std::cout << "beta1: " << d.beta1 << "\n";
    if (d.milnor) std::cout << "milnor degree: " << d.milnor->to_string() << "\n";
    if (d.linking_form) std::cout << "linking form: " << d.linking_form->to_string() << "\n";
    for (const std::string& p : d.provenance) std::cout << "from: " << p << "\n";
}

int verdict_exit(const ObstructionReport& rep) {
    switch (rep.verdict) {
        case Verdict::Obstructed: return 10;
        case Verdict::ConsistentNecessaryChecksPassed: return 0;
        default: return 3;
    }
}

// ---- sfs ----

int cmd_sfs(const std::string& notation, bool want_linking, const Int& cutoff, Format fmt) {
    SeifertInvariants s = with_caret(notation, [&] { return parse_seifert(notation); });
    FGAbelianGroup h = first_homology(s);
    std::optional<Int> fiber = regular_fiber_order(s);
    bool two = has_two_torsion(s);
    std::optional<Rat> euler;
    if (s.orientable_base) euler = euler_number(s);
    CohomologyRingType ring = rational_cohomology_type(s);
    std::optional<LinkingForm> lf;
    if (want_linking) {
        lf = seifert_linking_form(s);
        if (lf->group_order() > cutoff)
            throw CutoffExceeded("linking form exceeds cutoff " + to_string(cutoff));
    }

    if (fmt == Format::Json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["notation"] = print_seifert(s);
        j["h1"] = json{{"rank", h.rank}, {"torsion", torsion_to_json(h.torsion)}};
        j["beta1"] = h.rank;
        j["fiber_order"] = fiber ? int_to_json(*fiber) : json("infinite");
        j["two_torsion"] = two;
        j["euler_number"] = euler ? rat_to_json(*euler) : json(nullptr);
        j["ring_type"] = ring.to_string();
        if (lf) j["linking_form"] = linking_form_to_json(*lf);
        emit(j);
        return 0;
    }
    std::cout << "seifert " << print_seifert(s) << "\n";
    std::cout << "H1: " << h.to_string() << "\n";
    std::cout << "beta1: " << h.rank << "\n";
    std::cout << "regular fiber order: " << (fiber ? to_string(*fiber) : "infinite") << "\n";
    std::cout << "two torsion: " << (two ? "yes" : "no") << "\n";
    std::cout << "euler number: " << (euler ? to_string(*euler) : "undefined (non-orientable base)")
              << "\n";
    std::cout << "rational cohomology ring: " << ring.to_string() << "\n";
    if (lf) std::cout << "linking form: " << lf->to_string() << "\n";
    return 0;
}

// ---- link ----

int cmd_link(const std::string& name, const std::string& file,
             const std::vector<std::string>& param_kvs, const std::vector<std::string>& mu_flags,
             bool want_degree, int cap, int magnus_cap, Format fmt) {
    if (name.empty() == file.empty())
        throw BadParameter("give exactly one of a catalog name or --file");
    if (cap < 2 || cap > 10) throw BadParameter("--cap must be between 2 and 10");
    if (magnus_cap < 1 || magnus_cap > 10) throw BadParameter("--magnus-cap must be between 1 and 10");
    if (cap > magnus_cap + 1) throw BadParameter("--cap exceeds --magnus-cap + 1");

    LinkCatalogEntry entry =
        name.empty() ? link_from_json(load_json_file(file)) : catalog(name, parse_params(param_kvs));

    struct MuRow {
        std::vector<int> index;
        Int raw;
        MuBar bar;
    };
    std::vector<MuRow> rows;
    for (const std::string& flag : mu_flags) {
        std::vector<int> index = with_caret(flag, [&] { return parse_multi_index(flag); });
        if ((int)index.size() > magnus_cap + 1)
            throw BadParameter("multi-index length exceeds --magnus-cap + 1");
        LongitudeExpansions exp(entry.longitudes, (int)index.size());
        rows.push_back({index, exp.mu(index), exp.mu_bar(index)});
    }
    std::optional<MilnorDegree> degree;
    if (want_degree) degree = milnor_degree(entry.longitudes, cap);

    if (fmt == Format::Json) {
        json j = link_to_json(entry);
        json mus = json::array();
        for (const MuRow& r : rows) {
            std::string idx;
            for (int c : r.index) idx += std::to_string(c);
            mus.push_back(json{{"index", idx},
                               {"mu", int_to_json(r.raw)},
                               {"mu_bar", mu_bar_to_json(r.bar)}});
        }
        j["mu"] = mus;
        if (degree) j["milnor_degree"] = milnor_degree_to_json(*degree);
        emit(j);
        return 0;
    }
    std::cout << "link " << entry.name << " (" << entry.components << " components)\n";
    std::cout << "linking matrix:\n";
    for (std::size_t i = 0; i < entry.linking_matrix.rows(); ++i) {
        std::cout << " ";
        for (std::size_t c = 0; c < entry.linking_matrix.cols(); ++c)
            std::cout << " " << to_string(entry.linking_matrix(i, c));
        std::cout << "\n";
    }
    for (std::size_t i = 0; i < entry.longitudes.size(); ++i)
        std::cout << "longitude " << i + 1 << ": " << entry.longitudes[i].to_string() << "\n";
    for (const MuRow& r : rows) {
        std::string idx;
        for (int c : r.index) idx += std::to_string(c);
        std::cout << "mu(" << idx << ") = " << to_string(r.raw) << ", mu_bar(" << idx
                  << ") = " << r.bar.to_string() << "\n";
    }
    if (degree) std::cout << "milnor degree (cap " << cap << "): " << degree->to_string() << "\n";
    return 0;
}

// ---- obstruct / examples ----

struct FramingSpec {
    Int value;
    bool explicit_p = false;
};

FramingSpec parse_framing(const std::string& text) {
    FramingSpec f;
    if (text.rfind("p=", 0) == 0) {
        f.value = parse_int(text.substr(2), "framing");
        f.explicit_p = true;
        if (f.value == 0) throw BadParameter("framing p=0 is not a prime");
    } else {
        f.value = parse_int(text, "framing");
    }
    return f;
}

ManifoldDescriptor descriptor_from_framed_catalog(const std::string& name,
                                                  const std::vector<std::string>& param_kvs,
                                                  const std::string& framing_text, int cap) {
    LinkCatalogEntry entry = catalog(name, parse_params(param_kvs));
    FramingSpec f = parse_framing(framing_text);
    DescriptorOptions opt;
    opt.milnor_cap = cap;
    if (f.value != 0) {
        entry = framed(entry, f.value);
        if (f.explicit_p) opt.mod_primes.push_back(f.value);
        else opt.auto_mod_primes = true;
    }
    return descriptor_from_surgery(surgery_on(entry), opt);
}

struct ExampleRow {
    std::string label;
    ManifoldDescriptor descriptor;
    ObstructionReport report;
    std::vector<std::string> extra_notes;
};

ManifoldDescriptor q_summand(const std::string& torsion_flag, const std::string& q_notation) {
    if (!q_notation.empty()) {
        SeifertInvariants s = with_caret(q_notation, [&] { return parse_seifert(q_notation); });
        return descriptor_from_seifert(s);
    }
    if (torsion_flag.empty() || torsion_flag == "trivial") return s3_descriptor();
    throw BadParameter("--torsion accepts only 'trivial'; use --q for a nontrivial summand");
}

std::vector<ExampleRow> build_example(const std::string& name, const std::string& d_list,
                                      const std::string& k_list, const std::string& p_list,
                                      long long m, const std::string& torsion_flag,
                                      const std::string& q_notation) {
    std::vector<ExampleRow> rows;
    auto push = [&](std::string label, ManifoldDescriptor d) {
        ObstructionReport rep = obstruct(d);
        rows.push_back({std::move(label), std::move(d), std::move(rep), {}});
    };
    if (name == "prop4.1") {
        ManifoldDescriptor q = q_summand(torsion_flag, q_notation);
        long long mm = m == 0 ? 1 : m;
        for (const Int& d : parse_int_list(d_list.empty() ? "3,4,5" : d_list, "d")) {
            if (d > 12) throw BadParameter("d > 12 is not supported");
            push("prop4.1 d=" + to_string(d) + " m=" + std::to_string(mm),
                 prop41((long long)d, mm, q));
        }
    } else if (name == "prop4.2") {
        push("prop4.2", prop42());
    } else if (name == "prop4.3") {
        long long mm = m == 0 ? 2 : m;
        ManifoldDescriptor q = q_summand(torsion_flag, q_notation);
        for (const Int& k : parse_int_list(k_list.empty() ? "1,2,3" : k_list, "k"))
            push("prop4.3 k=" + to_string(k) + " m=" + std::to_string(mm),
                 prop43((long long)k, mm, q));
    } else if (name == "prop4.4") {
        for (const Int& p : parse_int_list(p_list.empty() ? "3,5,7" : p_list, "p"))
            push("prop4.4 p=" + to_string(p), prop44(p));
    } else if (name == "whitehead-example") {
        ManifoldDescriptor d = whitehead_example_descriptor();
        ObstructionReport rep = obstruct(d);
        ExampleRow row{"whitehead-example", std::move(d), std::move(rep), {}};
        row.extra_notes.push_back(
            "all cup form tests pass, yet this class contains no Seifert fibered manifold: "
            "its cup products vanish while a higher Massey product does not, which the "
            "present checks do not see");
        rows.push_back(std::move(row));
    } else {
        throw UnknownExample("unknown example name: " + name);
    }
    return rows;
}

int cmd_obstruct(const ExampleRow& row, Format fmt) {
    if (fmt == Format::Json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["label"] = row.label;
        j["descriptor"] = descriptor_to_json(row.descriptor);
        j["report"] = obstruction_report_to_json(row.report);
        emit(j);
    } else {
        std::cout << row.label << "\n";
        print_descriptor_text(row.descriptor);
        print_report_text(row.report);
        for (const std::string& n : row.extra_notes) std::cout << "note: " << n << "\n";
    }
    return verdict_exit(row.report);
}

int cmd_examples(const std::vector<ExampleRow>& rows, const Int& cutoff, Format fmt) {
    std::vector<std::pair<std::size_t, DistinctionReport>> dists;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        dists.push_back({i, distinguish(rows[i].descriptor, rows[i + 1].descriptor, cutoff)});

    bool any_obstructed = false;
    for (const ExampleRow& r : rows)
        if (r.report.verdict == Verdict::Obstructed) any_obstructed = true;

    if (fmt == Format::Json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        json jrows = json::array();
        for (const ExampleRow& r : rows) {
            json row;
            row["label"] = r.label;
            row["descriptor"] = descriptor_to_json(r.descriptor);
            row["report"] = obstruction_report_to_json(r.report);
            if (!r.extra_notes.empty()) row["notes"] = r.extra_notes;
            jrows.push_back(row);
        }
        j["rows"] = jrows;
        json jd = json::array();
        for (const auto& [i, rep] : dists)
            jd.push_back(json{{"lhs", rows[i].label},
                              {"rhs", rows[i + 1].label},
                              {"report", distinction_report_to_json(rep)}});
        j["distinctions"] = jd;
        emit(j);
        return any_obstructed ? 10 : 0;
    }

    for (const ExampleRow& r : rows) {
        std::cout << r.label << ": H1 = " << r.descriptor.torsion_to_string()
                  << ", verdict = " << to_string(r.report.verdict)
                  << ", rules = " << rules_to_string(r.report);
        if (r.descriptor.milnor)
            std::cout << ", milnor degree = " << r.descriptor.milnor->to_string();
        std::cout << "\n";
        for (const FiredRule& fr : r.report.fired_rules)
            std::cout << "  " << fr.tag << ": " << fr.witness_text << "\n";
        for (const std::string& n : r.extra_notes) std::cout << "  note: " << n << "\n";
    }
    for (const auto& [i, rep] : dists) {
        std::cout << "distinguish(" << rows[i].label << ", " << rows[i + 1].label
                  << "): " << (rep.distinct ? "distinct" : "not separated");
        for (const EvidenceRow& e : rep.evidence)
            std::cout << " [" << e.invariant << ": " << e.lhs << " vs " << e.rhs << "]";
        std::cout << "\n";
        for (const std::string& c : rep.caveats) std::cout << "  caveat: " << c << "\n";
    }
    return any_obstructed ? 10 : 0;
}

int run(int argc, char** argv) {
    CLI::App app{"homology cobordism invariants of 3-manifolds"};
    app.require_subcommand(1);
    // Let global options (notably --format) appear after the subcommand.
    app.fallthrough();
    std::string format_flag;
    app.add_option("--format", format_flag, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // sfs
    auto* sfs = app.add_subcommand("sfs", "invariants of a Seifert fibered space");
    std::string notation;
    bool want_linking = false;
    std::string cutoff_str = "2000";
    sfs->add_option("notation", notation, "e.g. \"(+2 | 3/1, 5/2)\"")->required();
    sfs->add_flag("--linking-form", want_linking, "also print the torsion linking form");
    sfs->add_option("--cutoff", cutoff_str, "largest torsion group order handled (default 2000)");

    // link
    auto* link = app.add_subcommand("link", "Milnor invariants of a catalog or JSON link");
    std::string link_name, link_file;
    std::vector<std::string> param_kvs, mu_flags;
    bool want_degree = false;
    int cap = 6, magnus_cap = 8;
    link->add_option("name", link_name, "catalog name: unlink, borromean, whitehead, L_d, "
                                        "cabled_borromean, borromean_framed");
    link->add_option("--file", link_file, "JSON link file");
    link->add_option("--param", param_kvs, "catalog parameter key=value (repeatable)");
    link->add_option("--mu", mu_flags, "multi-index, e.g. 123 or 1,2,3 (repeatable)");
    link->add_flag("--degree", want_degree, "compute the Milnor degree of the link");
    link->add_option("--cap", cap, "multi-index length cap for --degree (default 6)");
    link->add_option("--magnus-cap", magnus_cap, "expansion degree cap (default 8)");

    // obstruct
    auto* obs = app.add_subcommand("obstruct", "Seifert fibered obstruction for one manifold");
    std::string obs_sfs, obs_surgery, obs_framing = "0", obs_file, obs_example;
    std::string obs_d = "4", obs_k = "1", obs_p = "3", obs_torsion, obs_q;
    long long obs_m = 0;
    obs->add_option("--sfs", obs_sfs, "Seifert notation");
    obs->add_option("--surgery", obs_surgery, "catalog link name for surgery");
    obs->add_option("--param", param_kvs, "catalog parameter key=value (repeatable)");
    obs->add_option("--framing", obs_framing, "framing: 0, an integer, or p=<odd prime>");
    obs->add_option("--file", obs_file, "JSON descriptor or link file");
    obs->add_option("--example", obs_example, "family name: prop4.1, prop4.2, prop4.3, "
                                              "prop4.4, whitehead-example");
    obs->add_option("--d", obs_d, "prop4.1 degree parameter");
    obs->add_option("--k", obs_k, "prop4.3 cabling parameter");
    obs->add_option("--p", obs_p, "prop4.4 prime parameter");
    obs->add_option("--m", obs_m, "rank parameter for prop4.1 / prop4.3");
    obs->add_option("--torsion", obs_torsion, "torsion of the extra summand: trivial");
    obs->add_option("--q", obs_q, "Seifert notation for a rational homology sphere summand");
    obs->add_option("--cap", cap, "multi-index length cap (default 6)");

    // examples
    auto* ex = app.add_subcommand("examples", "reproduce a worked family");
    std::string ex_name, ex_d, ex_k, ex_p, ex_torsion, ex_q;
    long long ex_m = 0;
    ex->add_option("name", ex_name, "prop4.1, prop4.2, prop4.3, prop4.4, whitehead-example")
        ->required();
    ex->add_option("--d", ex_d, "comma list of degrees for prop4.1 (default 3,4,5)");
    ex->add_option("--k", ex_k, "comma list of cabling parameters for prop4.3 (default 1,2,3)");
    ex->add_option("--p", ex_p, "comma list of odd primes for prop4.4 (default 3,5,7)");
    ex->add_option("--m", ex_m, "rank parameter for prop4.1 / prop4.3");
    ex->add_option("--torsion", ex_torsion, "torsion of the extra summand: trivial");
    ex->add_option("--q", ex_q, "Seifert notation for a rational homology sphere summand");
    ex->add_option("--cutoff", cutoff_str, "linking form comparison cutoff (default 2000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    Format fmt = detect_format(format_flag);
    Int cutoff = parse_int(cutoff_str, "cutoff");
    if (cutoff < 1) throw BadParameter("--cutoff must be positive");

    if (*sfs) return cmd_sfs(notation, want_linking, cutoff, fmt);
    if (*link)
        return cmd_link(link_name, link_file, param_kvs, mu_flags, want_degree, cap, magnus_cap,
                        fmt);
    if (*obs) {
        int sources = (!obs_sfs.empty()) + (!obs_surgery.empty()) + (!obs_file.empty()) +
                      (!obs_example.empty());
        if (sources != 1)
            throw BadParameter("give exactly one of --sfs, --surgery, --file, --example");
        if (!obs_sfs.empty()) {
            SeifertInvariants s = with_caret(obs_sfs, [&] { return parse_seifert(obs_sfs); });
            ManifoldDescriptor d = descriptor_from_seifert(s);
            return cmd_obstruct({"seifert " + print_seifert(s), d, obstruct(d), {}}, fmt);
        }
        if (!obs_surgery.empty()) {
            ManifoldDescriptor d =
                descriptor_from_framed_catalog(obs_surgery, param_kvs, obs_framing, cap);
            return cmd_obstruct({"surgery on " + obs_surgery, d, obstruct(d), {}}, fmt);
        }
        if (!obs_file.empty()) {
            json j = load_json_file(obs_file);
            ManifoldDescriptor d;
            if (j.contains("beta1")) {
                d = descriptor_from_json(j);
            } else {
                DescriptorOptions opt;
                opt.milnor_cap = cap;
                opt.auto_mod_primes = true;
                d = descriptor_from_surgery(surgery_on(link_from_json(j)), opt);
            }
            return cmd_obstruct({"file " + obs_file, d, obstruct(d), {}}, fmt);
        }
        std::vector<ExampleRow> rows =
            build_example(obs_example, obs_d, obs_k, obs_p, obs_m, obs_torsion, obs_q);
        int worst = 0;
        for (const ExampleRow& row : rows) worst = std::max(worst, cmd_obstruct(row, fmt));
        return worst;
    }
    std::vector<ExampleRow> rows = build_example(ex_name, ex_d, ex_k, ex_p, ex_m, ex_torsion, ex_q);
    return cmd_examples(rows, cutoff, fmt);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const homcob::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const homcob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.error_class()) {
            case homcob::ErrorClass::Parse: return 2;
            case homcob::ErrorClass::UnknownName: return 4;
            default: return 3;
        }
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
