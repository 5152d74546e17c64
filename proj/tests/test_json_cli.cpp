#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"

using namespace homcob;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + HOMCOB_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    r.exit_code = WEXITSTATUS(status);
    return r;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(HOMCOB_SCHEMA_DIR) + "/" + name + ".schema.json");
    REQUIRE(in.good());
    return json::parse(in);
}

bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

// Checks the subset of json schema the docs/schemas files use: type,
// enum, required, properties, items, minItems, maxItems.
void validate(const json& inst, const json& schema, const std::string& path,
              std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) ok = type_matches(inst, t.get<std::string>());
        else
            for (const json& alt : t) ok = ok || type_matches(inst, alt.get<std::string>());
        if (!ok) {
            errors.push_back(path + ": type mismatch");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const json& e : schema["enum"]) ok = ok || inst == e;
        if (!ok) errors.push_back(path + ": value not allowed by enum");
    }
    if (inst.is_object()) {
        if (schema.contains("required"))
            for (const json& r : schema["required"])
                if (!inst.contains(r.get<std::string>()))
                    errors.push_back(path + ": missing required member " + r.get<std::string>());
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (inst.contains(it.key()))
                    validate(inst[it.key()], it.value(), path + "." + it.key(), errors);
    }
    if (inst.is_array()) {
        if (schema.contains("minItems") && inst.size() < schema["minItems"].get<std::size_t>())
            errors.push_back(path + ": fewer than minItems entries");
        if (schema.contains("maxItems") && inst.size() > schema["maxItems"].get<std::size_t>())
            errors.push_back(path + ": more than maxItems entries");
        if (schema.contains("items")) {
            std::size_t i = 0;
            for (const json& v : inst)
                validate(v, schema["items"], path + "[" + std::to_string(i++) + "]", errors);
        }
    }
}

void require_valid(const json& inst, const std::string& schema_name) {
    std::vector<std::string> errors;
    validate(inst, load_schema(schema_name), schema_name, errors);
    for (const std::string& e : errors) UNSCOPED_INFO(e);
    REQUIRE(errors.empty());
}

ErrorClass thrown_class(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.error_class();
    }
    throw std::runtime_error("expected an error");
}

} // namespace

TEST_CASE("descriptor json round trip preserves the invariants") {
    DescriptorOptions opt;
    opt.auto_mod_primes = true;
    ManifoldDescriptor d = descriptor_from_surgery(surgery_on(framed(borromean(), 3)), opt);
    ManifoldDescriptor back = descriptor_from_json(descriptor_to_json(d));
    REQUIRE(d == back);
    REQUIRE(back.kind == d.kind);

    ManifoldDescriptor z = descriptor_from_surgery(surgery_on(borromean()));
    ManifoldDescriptor zback = descriptor_from_json(descriptor_to_json(z));
    REQUIRE(z == zback);
    REQUIRE(zback.milnor.has_value());
    REQUIRE(zback.milnor->is_exact());

    // equality ignores provenance
    ManifoldDescriptor relabeled = z;
    relabeled.provenance = {"another construction"};
    REQUIRE(z == relabeled);
}

TEST_CASE("link and linking form json round trips") {
    LinkCatalogEntry e = borromean();
    LinkCatalogEntry back = link_from_json(link_to_json(e));
    REQUIRE(back.name == e.name);
    REQUIRE(back.components == e.components);
    REQUIRE(back.linking_matrix == e.linking_matrix);
    for (std::size_t i = 0; i < e.longitudes.size(); ++i)
        REQUIRE(back.longitudes[i].to_string() == e.longitudes[i].to_string());

    LinkingForm lf({3, 15}, RatMatrix{{Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(7, 15)}});
    LinkingForm lback = linking_form_from_json(linking_form_to_json(lf), "test");
    REQUIRE(lback.orders() == lf.orders());
    REQUIRE(lback.gram() == lf.gram());
}

TEST_CASE("form and milnor degree json round trips") {
    AlternatingTrilinearForm f(4, FormRing::ModP, 5);
    f.set(0, 1, 3, Rat(2));
    f.set(1, 2, 3, Rat(4));
    AlternatingTrilinearForm back = form_from_json(form_to_json(f), "test");
    REQUIRE(back.dim() == 4);
    REQUIRE(back.ring() == FormRing::ModP);
    REQUIRE(back.characteristic() == 5);
    REQUIRE(back.eval(0, 1, 3) == Rat(2));
    REQUIRE(back.eval(3, 1, 0) == Rat(3)); // odd permutation, reduced mod 5

    for (const MilnorDegree& d :
         {MilnorDegree::exactly(4), MilnorDegree::at_least(7), MilnorDegree::infinite()}) {
        MilnorDegree b = milnor_degree_from_json(milnor_degree_to_json(d), "test");
        REQUIRE(b.kind == d.kind);
        REQUIRE(b.bound == d.bound);
    }
}

TEST_CASE("malformed json is rejected as a parse error") {
    REQUIRE(thrown_class([] { descriptor_from_json(json::object()); }) == ErrorClass::Parse);
    REQUIRE(thrown_class([] {
                form_from_json(json{{"dimension", 3}, {"ring", "Z/8?"}, {"triples", json::array()}},
                               "test");
            }) == ErrorClass::Parse);
    REQUIRE(thrown_class([] {
                linking_form_from_json(json{{"torsion", {3}}, {"gram", json::array()}}, "test");
            }) == ErrorClass::Parse);
    REQUIRE(thrown_class([] {
                link_from_json(json{{"longitudes", {"x2", "x1"}}});
            }) == ErrorClass::Parse);

    // structurally valid json whose content is inconsistent is a domain error
    REQUIRE(thrown_class([] {
                link_from_json(json{{"linking_matrix", {{0, 2}, {2, 0}}},
                                    {"longitudes", {"x2", "x1"}}});
            }) == ErrorClass::Domain);
}

TEST_CASE("emitted json conforms to the shipped schemas") {
    require_valid(link_to_json(borromean()), "link");
    require_valid(link_to_json(cabled_borromean(4)), "link");

    DescriptorOptions opt;
    opt.auto_mod_primes = true;
    require_valid(descriptor_to_json(descriptor_from_surgery(surgery_on(framed(borromean(), 3)), opt)),
                  "descriptor");
    require_valid(descriptor_to_json(descriptor_from_surgery(surgery_on(borromean()))), "descriptor");
    require_valid(descriptor_to_json(descriptor_from_seifert(parse_seifert("(+0 | 2/1, 3/1, 5/1)"))),
                  "descriptor");
    require_valid(descriptor_to_json(prop41(3, 2)), "descriptor");

    require_valid(obstruction_report_to_json(obstruct(prop42())), "obstruction_report");
    require_valid(obstruction_report_to_json(obstruct(prop44(5))), "obstruction_report");
    require_valid(obstruction_report_to_json(obstruct(prop41(3, 1))), "obstruction_report");
    require_valid(obstruction_report_to_json(obstruct(whitehead_example_descriptor())),
                  "obstruction_report");

    require_valid(distinction_report_to_json(distinguish(prop41(3, 1), prop41(4, 1))),
                  "distinction_report");
    require_valid(distinction_report_to_json(distinguish(prop44(3), prop44(3))),
                  "distinction_report");
}

TEST_CASE("cli computes the seifert example in both formats") {
    RunResult text = run_cli("sfs \"(+0 | 2/1, 3/1, 5/1)\"");
    REQUIRE(text.exit_code == 0);
    REQUIRE(text.out.find("H1: Z/31") != std::string::npos);
    REQUIRE(text.out.find("regular fiber order: 31") != std::string::npos);
    REQUIRE(text.out.find("euler number: -31/30") != std::string::npos);

    RunResult jr = run_cli("sfs \"(+0 | 2/1, 3/1, 5/1)\" --format json --linking-form");
    REQUIRE(jr.exit_code == 0);
    json j = json::parse(jr.out);
    REQUIRE(j["h1"]["rank"] == 0);
    REQUIRE(j["h1"]["torsion"] == json::array({31}));
    REQUIRE(j["fiber_order"] == 31);
    REQUIRE(j["euler_number"] == json::array({-31, 30}));
    REQUIRE(j["two_torsion"] == false);
    REQUIRE(j["linking_form"]["torsion"] == json::array({31}));
    REQUIRE(j["linking_form"]["gram"][0][0] == json::array({7, 31}));
}

TEST_CASE("cli link output agrees between text and json") {
    RunResult text = run_cli("link borromean --mu 123 --degree");
    REQUIRE(text.exit_code == 0);
    REQUIRE(text.out.find("mu(123) = 1") != std::string::npos);
    REQUIRE(text.out.find("milnor degree (cap 6): exactly 3") != std::string::npos);

    RunResult jr = run_cli("link borromean --mu 123 --degree --format json");
    REQUIRE(jr.exit_code == 0);
    json j = json::parse(jr.out);
    require_valid(j, "link");
    REQUIRE(j["components"] == 3);
    REQUIRE(j["mu"][0]["index"] == "123");
    REQUIRE(j["mu"][0]["mu"] == 1);
    REQUIRE(j["mu"][0]["mu_bar"]["modulus"] == 0);
    REQUIRE(j["milnor_degree"]["kind"] == "exact");
    REQUIRE(j["milnor_degree"]["bound"] == 3);
}

TEST_CASE("cli reads a custom link file") {
    const char* path = "homcob_test_link.json";
    {
        std::ofstream out(path);
        out << link_to_json(whitehead()).dump() << "\n";
    }
    RunResult jr = run_cli(std::string("link --file ") + path + " --mu 1122 --format json");
    std::remove(path);
    REQUIRE(jr.exit_code == 0);
    json j = json::parse(jr.out);
    REQUIRE(j["mu"][0]["mu_bar"]["value"] == 1);
}

TEST_CASE("cli exit codes distinguish failure classes") {
    REQUIRE(run_cli("sfs \"(+2 | 3/\"").exit_code == 2);       // parse error
    REQUIRE(run_cli("sfs \"(-0 | 2/1)\"").exit_code == 3);     // domain error
    REQUIRE(run_cli("link no-such-link").exit_code == 4);      // unknown name
    REQUIRE(run_cli("examples no-such-example").exit_code == 4);
    REQUIRE(run_cli("link L_d --param d=99").exit_code == 3);        // parameter out of range
    REQUIRE(run_cli("obstruct --surgery borromean --framing p=3").exit_code == 10);
    REQUIRE(run_cli("obstruct --surgery borromean --framing 0").exit_code == 0);
    REQUIRE(run_cli("obstruct --sfs \"(+0 | 2/1, 3/1, 5/1)\"").exit_code == 3); // inapplicable
    REQUIRE(run_cli("link borromean --mu 129").exit_code == 3); // index beyond components
}

TEST_CASE("cli obstruct emits a schema conforming payload") {
    RunResult jr = run_cli("obstruct --surgery borromean --framing p=3 --format json");
    REQUIRE(jr.exit_code == 10);
    json j = json::parse(jr.out);
    require_valid(j["descriptor"], "descriptor");
    require_valid(j["report"], "obstruction_report");
    REQUIRE(j["report"]["verdict"] == "Obstructed");

    RunResult ex = run_cli("examples prop4.4 --p 3,5 --format json");
    REQUIRE(ex.exit_code == 10);
    json je = json::parse(ex.out);
    REQUIRE(je["rows"].size() == 2);
    for (const json& row : je["rows"]) {
        require_valid(row["descriptor"], "descriptor");
        require_valid(row["report"], "obstruction_report");
        REQUIRE(row["report"]["verdict"] == "Obstructed");
    }
    REQUIRE(je["distinctions"].size() == 1);
    require_valid(je["distinctions"][0]["report"], "distinction_report");
    REQUIRE(je["distinctions"][0]["report"]["distinct"] == true);
}

TEST_CASE("cli format comes from the flag, the environment, then text") {
    RunResult env_json = run_cli("sfs \"(+1 | 2/1)\"", "HOMCOB_FORMAT=json");
    REQUIRE(env_json.exit_code == 0);
    REQUIRE(json::parse(env_json.out).contains("h1"));

    RunResult flag_wins = run_cli("sfs \"(+1 | 2/1)\" --format text", "HOMCOB_FORMAT=json");
    REQUIRE(flag_wins.exit_code == 0);
    REQUIRE(flag_wins.out.rfind("seifert ", 0) == 0);

    RunResult plain = run_cli("sfs \"(+1 | 2/1)\"");
    REQUIRE(plain.out.rfind("seifert ", 0) == 0);
}

TEST_CASE("whitehead example row carries the massey product caveat") {
    RunResult ex = run_cli("examples whitehead-example --format json");
    REQUIRE(ex.exit_code == 0);
    json je = json::parse(ex.out);
    REQUIRE(je["rows"].size() == 1);
    REQUIRE(je["rows"][0]["report"]["verdict"] == "ConsistentNecessaryChecksPassed");
    bool caveat = false;
    for (const json& n : je["rows"][0]["notes"])
        if (n.get<std::string>().find("Massey") != std::string::npos) caveat = true;
    REQUIRE(caveat);
}
