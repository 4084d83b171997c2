#include "cohomkern/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohomkern/cohomology.hpp"
#include "cohomkern/json_io.hpp"
#include "cohomkern/sequences.hpp"

namespace cohomkern {

using nlohmann::json;

std::string cochain_to_json(const MetacyclicGroup& G, const Cochain& c) {
    json entries = json::array();
    const uint32_t N = G.order(), r = c.M->rank, n = c.degree;
    for (size_t t = 0; t < c.tuples(); ++t) {
        const uint32_t* row = c.at(t);
        bool zero = true;
        for (uint32_t l = 0; l < r; ++l) zero = zero && row[l] == 0;
        if (zero) continue;
        json tuple = json::array();
        size_t rem = t;
        std::vector<uint32_t> dig(n);
        for (uint32_t k = 0; k < n; ++k) {
            size_t pw = 1;
            for (uint32_t q = 0; q + k + 1 < n; ++q) pw *= N;
            dig[k] = uint32_t(rem / pw);
            rem %= pw;
        }
        for (uint32_t k = 0; k < n; ++k) {
            GroupElement e = G.element(dig[k]);
            tuple.push_back(json::array({e.i, e.j}));
        }
        json value = json::array();
        for (uint32_t l = 0; l < r; ++l) value.push_back(row[l]);
        entries.push_back(json{{"tuple", tuple}, {"value", value}});
    }
    json j{{"degree", c.degree}, {"module", c.M->name}, {"entries", entries}};
    return j.dump(2);
}

Cochain cochain_from_json(const MetacyclicGroup& G, const GModule& M, const std::string& text) {
    json j = json::parse(text);
    uint32_t n = j.at("degree").get<uint32_t>();
    if (j.contains("module") && j.at("module").get<std::string>() != M.name)
        throw Error(Errc::ParseError,
                    "cochain module '" + j.at("module").get<std::string>() + "' != " + M.name);
    Cochain c(M, n);
    const uint32_t N = G.order();
    for (const auto& e : j.at("entries")) {
        const auto& tuple = e.at("tuple");
        if (tuple.size() != n) throw Error(Errc::ParseError, "tuple length != degree");
        size_t t = 0;
        for (const auto& ge : tuple) {
            uint32_t i = ge.at(0).get<uint32_t>() % G.d();
            uint32_t jj = ge.at(1).get<uint32_t>() % G.s();
            t = t * N + G.index_of({i, jj});
        }
        const auto& value = e.at("value");
        if (value.size() != M.rank) throw Error(Errc::ParseError, "value length != module rank");
        for (uint32_t l = 0; l < M.rank; ++l)
            c.at(t)[l] = value.at(l).get<uint32_t>() % M.mod;
    }
    return c;
}

namespace cli {

GroupSpec parse_group_descriptor(const std::string& text) {
    GroupSpec g;
    if (text.rfind("metacyclic:", 0) != 0)
        throw Error(Errc::ConfigError, "group descriptor must look like metacyclic:d,s,t");
    char comma1 = 0, comma2 = 0;
    std::istringstream is(text.substr(11));
    if (!(is >> g.d >> comma1 >> g.s >> comma2 >> g.t) || comma1 != ',' || comma2 != ',')
        throw Error(Errc::ConfigError, "group descriptor must look like metacyclic:d,s,t");
    return g;
}

Family infer_family(const GroupSpec& g) {
    if (g.s == 1) return Family::Cyclic;
    if (g.s == 2 && g.t == g.d - 1) return Family::DihedralClassic;
    if (g.s % 2 == 0) return Family::Semidirect;
    throw Error(Errc::ConfigError, "no family fits s odd > 1; pass --family");
}

namespace {

constexpr const char* kVersion = "0.1.0";

struct Config {
    std::vector<std::string> groups;
    std::string family;
    std::string degrees;  // "a..b" or "a"; empty = automatic
    uint32_t samples = 100;
    uint64_t seed = 20240801;
    std::string json_path;
    unsigned jobs = 1;
    bool timings = false;
};

uint32_t max_d_cap() {
    if (const char* env = std::getenv("COHOMKERN_MAX_D")) {
        int v = std::atoi(env);
        if (v > 1) return uint32_t(v);
    }
    return 50;
}

MetacyclicGroup make_group_checked(const GroupSpec& gs, const std::string& family) {
    if (gs.d > max_d_cap())
        throw Error(Errc::ConfigError,
                    "d exceeds the configured cap (COHOMKERN_MAX_D, default 50)");
    Family fam = family.empty() ? infer_family(gs) : family_from_string(family);
    return MetacyclicGroup::make(gs.d, gs.s, gs.t, fam);
}

std::pair<uint32_t, uint32_t> parse_degrees(const std::string& s) {
    if (s == "none") return {1, 0};  // empty range: skip the six-term checks
    if (s.empty()) return {0, 1};
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        uint32_t a = uint32_t(std::stoul(s));
        return {a, a};
    }
    uint32_t a = uint32_t(std::stoul(s.substr(0, dots)));
    uint32_t b = uint32_t(std::stoul(s.substr(dots + 2)));
    if (b < a) throw Error(Errc::ConfigError, "bad --degrees range");
    return {a, b};
}

void apply_config_file(Config& cfg, const std::string& path, const CLI::App& app) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ConfigError, "cannot read config file " + path);
    auto flag_given = [&](const std::string& name) {
        auto* opt = app.get_option_no_throw(name);
        return opt && opt->count() > 0;
    };
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "group" && !flag_given("--group")) cfg.groups.push_back(val);
        else if (key == "family" && !flag_given("--family")) cfg.family = val;
        else if (key == "degrees" && !flag_given("--degrees")) cfg.degrees = val;
        else if (key == "samples" && !flag_given("--samples")) cfg.samples = uint32_t(std::stoul(val));
        else if (key == "seed" && !flag_given("--seed")) cfg.seed = std::stoull(val);
        else if (key == "json" && !flag_given("--json")) cfg.json_path = val;
        else if (key == "jobs" && !flag_given("--jobs")) cfg.jobs = unsigned(std::stoul(val));
    }
}

json claims_json(const VerificationReport& rep) {
    json arr = json::array();
    for (const auto& c : rep.claims) {
        json j{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
        arr.push_back(std::move(j));
    }
    return arr;
}

json ranks_json(const VerificationReport& rep) {
    json j = json::object();
    for (const auto& [n, v] : rep.ranks) j[n] = v;
    return j;
}

json instance_json(const MetacyclicGroup& G) {
    return json{{"d", G.d()}, {"s", G.s()}, {"t", G.t()}, {"family", family_name(G.family())}};
}

struct InstanceOutcome {
    json j;
    VerificationReport rep;
    std::string text;
};

InstanceOutcome run_verify_instance(const GroupSpec& gs, const Config& cfg) {
    MetacyclicGroup G = make_group_checked(gs, cfg.family);
    VerificationReport all;
    auto timed = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport r = fn();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!r.claims.empty())
            for (auto& c : r.claims) c.seconds = dt / double(r.claims.size());
        all.merge(r);
    };

    FourTermSequence seq = build_sequence(G);
    timed([&] { return verify_four_term(seq); });
    if (G.s() % 2 == 0) {
        timed([&] { return verify_b_identities(G); });
        timed([&] { return verify_m4_structure(G); });
        timed([&] { return verify_kernel_diagram(G); });
    }
    if (G.s() == 2) timed([&] { return verify_oldlemma14(G); });

    SequenceCohomology sc = make_sequence_cohomology(seq);
    auto [lo, hi] = parse_degrees(cfg.degrees);
    for (uint32_t n = lo; n <= hi; ++n) {
        if (cfg.degrees.empty() && n >= 1 && G.order() > 12) break;  // automatic cap
        timed([&] { return six_term_verify(sc, n); });
    }

    InstanceOutcome out;
    out.rep = all;
    out.j = json{{"instance", instance_json(G)},
                 {"claims", claims_json(all)},
                 {"ranks", ranks_json(all)}};
    std::ostringstream os;
    os << "== " << G.describe() << " (" << family_name(G.family()) << ")\n"
       << report_text(all, cfg.timings);
    out.text = os.str();
    return out;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    if (cfg.groups.empty()) throw Error(Errc::ConfigError, "verify needs at least one --group");
    std::vector<GroupSpec> specs;
    for (const auto& g : cfg.groups) specs.push_back(parse_group_descriptor(g));
    // validate every instance before starting any computation
    for (const auto& s : specs) (void)make_group_checked(s, cfg.family);

    std::vector<InstanceOutcome> outcomes(specs.size());
    if (cfg.jobs > 1) {
        std::vector<std::future<InstanceOutcome>> futs;
        for (const auto& s : specs)
            futs.push_back(std::async(std::launch::async,
                                      [&cfg, s] { return run_verify_instance(s, cfg); }));
        for (size_t i = 0; i < futs.size(); ++i) outcomes[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < specs.size(); ++i) outcomes[i] = run_verify_instance(specs[i], cfg);
    }

    size_t total = 0, failed = 0;
    json instances = json::array();
    for (auto& oc : outcomes) {
        out << oc.text;
        total += oc.rep.claims.size();
        failed += oc.rep.failed();
        instances.push_back(std::move(oc.j));
    }
    out << total - failed << "/" << total << " claims pass\n";

    if (!cfg.json_path.empty()) {
        json j{{"tool", {{"name", "cohomkern"}, {"version", kVersion}}},
               {"config",
                {{"groups", cfg.groups},
                 {"family", cfg.family},
                 {"degrees", cfg.degrees},
                 {"samples", cfg.samples},
                 {"seed", cfg.seed},
                 {"jobs", cfg.jobs}}},
               {"instances", instances},
               {"summary", {{"claims", total}, {"passed", total - failed}, {"failed", failed}}}};
        std::ofstream f(cfg.json_path, std::ios::binary);
        if (!f) throw Error(Errc::ConfigError, "cannot write " + cfg.json_path);
        f << j.dump(2) << '\n';
    }
    return failed == 0 ? 0 : 1;
}

int cmd_cohomology(const Config& cfg, const std::string& module_name, uint32_t degree,
                   std::ostream& out) {
    if (cfg.groups.size() != 1)
        throw Error(Errc::ConfigError, "cohomology needs exactly one --group");
    MetacyclicGroup G = make_group_checked(parse_group_descriptor(cfg.groups[0]), cfg.family);
    const uint32_t d = G.d();

    ModuleName mn;
    if (module_name == "M1") mn = ModuleName::M1;
    else if (module_name == "M2") mn = ModuleName::M2;
    else if (module_name == "M3") mn = ModuleName::M3;
    else if (module_name == "M4") mn = ModuleName::M4;
    else if (module_name == "M3prime") mn = ModuleName::M3prime;
    else if (module_name == "ring") mn = ModuleName::FullRing;
    else throw Error(Errc::ConfigError, "module must be one of M1..M4, M3prime, ring");

    FreeModuleBasis M = make_module(G, mn, d);
    GModule Mbar = gmodule_of(M, table_of(G), d, module_name + "bar");
    CohomologyGroup H = cohomology_group(Mbar, degree);

    out << "H^" << degree << "(" << G.describe() << ", " << module_name << " mod " << d << "): ";
    if (H.trivial()) {
        out << "trivial\n";
    } else {
        out << "invariant factors";
        for (auto f : H.invariant_factors) out << ' ' << f;
        out << '\n';
        for (size_t i = 0; i < H.generators.size(); ++i)
            out << "generator " << i << ":\n" << cochain_to_json(G, H.generators[i]) << '\n';
    }
    if (!cfg.json_path.empty()) {
        json gens = json::array();
        for (const auto& g : H.generators) gens.push_back(json::parse(cochain_to_json(G, g)));
        json j{{"group", instance_json(G)},
               {"module", module_name},
               {"degree", degree},
               {"invariant_factors", H.invariant_factors},
               {"generators", gens}};
        std::ofstream f(cfg.json_path, std::ios::binary);
        f << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_eta(const Config& cfg, const std::string& cocycle_path, uint32_t degree,
            std::ostream& out) {
    if (cfg.groups.size() != 1) throw Error(Errc::ConfigError, "eta needs exactly one --group");
    MetacyclicGroup G = make_group_checked(parse_group_descriptor(cfg.groups[0]), cfg.family);
    FourTermSequence seq = build_sequence(G);
    SequenceCohomology sc = make_sequence_cohomology(seq);

    std::vector<Cochain> inputs;
    if (!cocycle_path.empty()) {
        std::ifstream f(cocycle_path);
        if (!f) throw Error(Errc::ConfigError, "cannot read " + cocycle_path);
        std::stringstream ss;
        ss << f.rdbuf();
        Cochain c = cochain_from_json(G, sc.M4bar, ss.str());
        if (c.degree != degree) throw Error(Errc::ConfigError, "cocycle degree != --degree");
        if (!is_cocycle(c)) throw Error(Errc::NotACocycle, "input table has nonzero coboundary");
        inputs.push_back(std::move(c));
    } else {
        CohomologyGroup HD = cohomology_group(sc.M4bar, degree);
        inputs = sample_cocycles(HD, cfg.samples, cfg.seed);
    }

    CohomologyGroup HA1 = cohomology_group(sc.M1bar, degree + 1);
    bool all_ok = true;
    json results = json::array();
    for (size_t i = 0; i < inputs.size(); ++i) {
        Cochain g = eta_generic(sc, inputs[i]);
        Cochain c = eta_closed(sc, inputs[i]);
        std::string verdict;
        if (g == c) verdict = "equal";
        else if (HA1.cohomologous(g, c)) verdict = "cohomologous";
        else {
            verdict = "different";
            all_ok = false;
        }
        out << "cocycle " << i << ": " << verdict << '\n';
        if (inputs.size() == 1) {
            out << "generic:\n" << cochain_to_json(G, g) << '\n';
            out << "closed form:\n" << cochain_to_json(G, c) << '\n';
        }
        results.push_back(json{{"index", i}, {"verdict", verdict}});
    }
    if (!cfg.json_path.empty()) {
        json j{{"group", instance_json(G)},
               {"degree", degree},
               {"seed", cfg.seed},
               {"results", results}};
        std::ofstream f(cfg.json_path, std::ios::binary);
        f << j.dump(2) << '\n';
    }
    return all_ok ? 0 : 1;
}

int cmd_ring(const Config& cfg, const std::string& op, const std::vector<std::string>& exprs,
             uint32_t mod_opt, std::ostream& out) {
    if (cfg.groups.size() != 1) throw Error(Errc::ConfigError, "ring needs exactly one --group");
    MetacyclicGroup G = make_group_checked(parse_group_descriptor(cfg.groups[0]), cfg.family);
    uint32_t mod = mod_opt ? mod_opt : G.d() * G.d();
    std::vector<RingElement> vals;
    for (const auto& e : exprs) vals.push_back(ring_parse(G, mod, e));
    if (op == "print") {
        for (const auto& v : vals) out << ring_to_string(v) << '\n';
    } else if (op == "mul") {
        if (vals.size() < 2) throw Error(Errc::ConfigError, "mul needs two expressions");
        RingElement acc = vals[0];
        for (size_t i = 1; i < vals.size(); ++i) acc = ring_mul(acc, vals[i]);
        out << ring_to_string(acc) << '\n';
    } else if (op == "add") {
        if (vals.size() < 2) throw Error(Errc::ConfigError, "add needs two expressions");
        RingElement acc = vals[0];
        for (size_t i = 1; i < vals.size(); ++i) acc = ring_add(acc, vals[i]);
        out << ring_to_string(acc) << '\n';
    } else {
        throw Error(Errc::ConfigError, "ring op must be print, mul or add");
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"four-term sequences of group-ring modules and their six-term cohomology"};
    app.set_version_flag("--version", kVersion);
    Config cfg;
    std::string config_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", cfg.groups, "group descriptor metacyclic:d,s,t");
        sub->add_option("--family", cfg.family,
                        "cyclic | dihedral | dihedral-classic | semidirect | arason");
        sub->add_option("--seed", cfg.seed, "PRNG seed for sampled cocycles");
        sub->add_option("--samples", cfg.samples, "sample count for sampled cocycles");
        sub->add_option("--json", cfg.json_path, "write a JSON report to this path");
        sub->add_option("--config", config_path, "key=value config file (flags win)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify);
    verify->add_option("--degrees", cfg.degrees,
                       "degree range for the six-term checks, e.g. 0..1, or 'none'");
    verify->add_option("--jobs", cfg.jobs, "run instances in parallel");
    verify->add_flag("--timings", cfg.timings, "show per-claim timing in the text report");

    CLI::App* cohomology = app.add_subcommand("cohomology", "print one cohomology group");
    add_common(cohomology);
    std::string module_name = "M4";
    uint32_t degree = 0;
    cohomology->add_option("--module", module_name, "M1..M4, M3prime or ring");
    cohomology->add_option("--degree", degree, "cohomological degree");

    CLI::App* eta = app.add_subcommand("eta", "evaluate and validate the connecting map");
    add_common(eta);
    std::string cocycle_path;
    eta->add_option("--degree", degree, "degree of the input cocycles");
    eta->add_option("--cocycle", cocycle_path, "JSON cochain file (default: sampled cocycles)");

    CLI::App* ring = app.add_subcommand("ring", "ad-hoc group-ring arithmetic");
    add_common(ring);
    std::string ring_op = "print";
    std::vector<std::string> ring_exprs;
    uint32_t ring_mod = 0;
    ring->add_option("--op", ring_op, "print | mul | add");
    ring->add_option("--mod", ring_mod, "coefficient modulus (default d^2)");
    ring->add_option("expr", ring_exprs, "formal sums like '2*t^2 s + t - 1'");

    app.require_subcommand(1);
    try {
        std::vector<const char*> argv;
        argv.push_back("cohomkern");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (!config_path.empty()) {
            CLI::App* active = app.get_subcommands().front();
            apply_config_file(cfg, config_path, *active);
        }
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (cohomology->parsed()) return cmd_cohomology(cfg, module_name, degree, out);
        if (eta->parsed()) return cmd_eta(cfg, cocycle_path, degree, out);
        if (ring->parsed()) return cmd_ring(cfg, ring_op, ring_exprs, ring_mod, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const znz::ZnError& e) {
        err << "error: " << e.what << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace cli
}  // namespace cohomkern
