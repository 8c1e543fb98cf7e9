// Command-line surface: classify single circulants, sweep the classification
// theorems, emit and re-check witness certificates, compute homology.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "serre/cache.hpp"
#include "serre/io.hpp"

namespace fs = std::filesystem;
using namespace serre;

namespace {

struct GraphSpec {
    int n = 0;
    std::string gens_csv;
    std::string family;
    int d = 0, i = 0, a = 0, b = 0, two_n = 0;
};

void add_graph_flags(CLI::App* cmd, GraphSpec& spec) {
    cmd->add_option("--n", spec.n, "vertex count");
    cmd->add_option("--gens", spec.gens_csv, "comma-separated generators, e.g. 1,3");
    cmd->add_option("--family", spec.family,
                    "power-of-cycle | upper-interval | omit-one | one-paired | cubic | cycle");
    cmd->add_option("--d", spec.d, "family parameter d");
    cmd->add_option("--i", spec.i, "omitted distance");
    cmd->add_option("--a", spec.a, "family parameter a");
    cmd->add_option("--b", spec.b, "family parameter b");
    cmd->add_option("--two-n", spec.two_n, "vertex count 2n of a cubic circulant");
}

CirculantGraph graph_from_spec(const GraphSpec& spec) {
    if (!spec.family.empty()) {
        auto fam = family_from_name(spec.family);
        if (!fam) throw CLI::ValidationError("--family", "unknown family: " + spec.family);
        switch (*fam) {
            case Family::PowerOfCycle: return power_of_cycle(spec.n, spec.d).graph;
            case Family::UpperInterval: return upper_interval(spec.n, spec.d).graph;
            case Family::OmitOne: return omit_one(spec.n, spec.i).graph;
            case Family::OnePaired: return one_paired(spec.n, spec.a, spec.b).graph;
            case Family::Cubic: return cubic(spec.two_n, spec.a).graph;
            case Family::PlainCycle: return plain_cycle(spec.n).graph;
        }
    }
    if (spec.n <= 0) throw CLI::ValidationError("--n", "a graph spec needs --n or --family");
    std::vector<int> gens;
    std::stringstream ss(spec.gens_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) gens.push_back(std::stoi(tok));
    return make_circulant(spec.n, gens);
}

std::vector<int> parse_chars(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    if (out.empty()) out = {0, 2, 3, 5};
    for (int ch : out) validate_field(FieldSpec{ch});
    return out;
}

Json witness_file_json(const CirculantGraph& g, const SimplicialComplex& ind, const Witness& w) {
    Json j = witness_to_json(w);
    j["subject"] = g.id();
    j["graph"] = to_json(g);
    j["complex"] = to_json(ind);
    return j;
}

int write_witness_files(const CirculantGraph& g, const std::vector<Witness>& ws,
                        const std::string& out_dir) {
    auto ind = independence_complex(g.graph);
    fs::create_directories(out_dir);
    int idx = 0;
    for (const auto& w : ws) {
        std::ostringstream name;
        name << g.id() << "-" << witness_kind_name(w.kind) << "-" << idx << ".json";
        fs::path path = fs::path(out_dir) / name.str();
        std::ofstream out(path);
        out << witness_file_json(g, ind, w).dump(2) << "\n";
        std::cout << path.string() << "\n";
        ++idx;
    }
    return idx;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant graph Serre-condition classifier"};
    app.set_config("--config");
    app.require_subcommand(1);

    std::string cache_path;
    std::string chars_csv = "0,2,3,5";
    long long budget = 10'000'000;
    int jobs = 1;
    std::string format = "json";
    bool stats = false;
    bool certify = false;
    std::string out_dir = ".";

    auto add_common = [&](CLI::App* cmd, bool with_jobs) {
        cmd->add_option("--chars", chars_csv, "characteristics to report (default 0,2,3,5)");
        cmd->add_option("--budget", budget, "search budget in nodes")->check(CLI::PositiveNumber);
        cmd->add_option("--cache", cache_path, "result cache path (JSON lines)")
            ->envname("SERRE_CACHE");
        cmd->add_option("--format", format, "json | table | csv");
        cmd->add_flag("--stats", stats, "print cache and runtime statistics to stderr");
        cmd->add_flag("--certify", certify, "write shelling certificates as standalone files");
        cmd->add_option("--out-dir", out_dir, "directory for certificate/witness files");
        if (with_jobs)
            cmd->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    };

    GraphSpec spec;
    auto* cmd_classify = app.add_subcommand("classify", "classify one circulant graph");
    add_graph_flags(cmd_classify, spec);
    add_common(cmd_classify, false);

    std::string theorem = "all";
    int max_n = -1;
    auto* cmd_verify = app.add_subcommand("verify", "sweep-verify classification theorems");
    cmd_verify->add_option("--theorem", theorem, "theorem id or 'all'");
    cmd_verify->add_option("--max-n", max_n, "override the sweep's vertex bound");
    add_common(cmd_verify, true);

    auto* cmd_witness = app.add_subcommand("witness", "write witness files for one graph");
    add_graph_flags(cmd_witness, spec);
    add_common(cmd_witness, false);

    std::string recheck_file;
    auto* cmd_recheck = app.add_subcommand("recheck", "re-validate a witness file");
    cmd_recheck->add_option("file", recheck_file, "witness JSON file")->required();

    std::string complex_file;
    auto* cmd_homology =
        app.add_subcommand("homology", "reduced homology of Ind(G) or of a complex file");
    add_graph_flags(cmd_homology, spec);
    cmd_homology->add_option("--complex-file", complex_file,
                             "plain-text complex: n, then one facet per line");
    add_common(cmd_homology, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_classify || *cmd_witness) {
            auto g = graph_from_spec(spec);
            Session session;
            CacheStats cstats;
            if (!cache_path.empty()) {
                cstats = load_cache(cache_path, session);
                cstats.spot_checks = spot_check_cache(session);
            }
            ClassificationOptions opts;
            opts.characteristics = parse_chars(chars_csv);
            opts.budgets.shelling_nodes = budget;
            opts.budgets.vd_nodes = budget;
            auto rep = session_report(session, g, opts);
            if (!cache_path.empty()) flush_cache(cache_path, session);

            if (*cmd_witness) {
                int files = write_witness_files(g, rep.witnesses, out_dir);
                if (stats) std::cerr << "witness files written: " << files << "\n";
            } else {
                if (certify)
                    for (const auto& w : rep.witnesses)
                        if (w.kind == WitnessKind::ShellingOrder)
                            write_witness_files(g, {w}, out_dir);
                if (format == "table")
                    std::cout << report_table(rep);
                else
                    std::cout << to_json(rep).dump(2) << "\n";
            }
            if (stats)
                std::cerr << "cache: loaded " << cstats.records_loaded << " records, "
                          << session.cache_hits() << " hits, " << cstats.spot_checks
                          << " spot-checks\n";
            return 0;
        }

        if (*cmd_verify) {
            std::vector<TheoremId> ids;
            if (theorem == "all") {
                ids = all_theorems();
            } else {
                auto t = theorem_from_name(theorem);
                if (!t) {
                    std::cerr << "unknown theorem id: " << theorem << "\n";
                    return 2;
                }
                ids = {*t};
            }
            Session session;
            CacheStats cstats;
            if (!cache_path.empty()) {
                cstats = load_cache(cache_path, session);
                cstats.spot_checks = spot_check_cache(session);
            }
            SweepSettings settings;
            settings.max_n = max_n;
            settings.characteristics = parse_chars(chars_csv);
            settings.budgets.shelling_nodes = budget;
            settings.budgets.vd_nodes = budget;
            settings.jobs = jobs;
            settings.certify = certify;

            bool all_pass = true;
            Json out = Json::array();
            std::ostringstream table;
            std::ostringstream csv;
            csv << "theorem,instances,mismatches,timeouts\n";
            for (TheoremId t : ids) {
                auto r = verify_theorem(t, session, settings);
                all_pass = all_pass && r.passed();
                out.push_back(sweep_to_json(r));
                table << sweep_table(r);
                csv << sweep_csv_row(r);
                if (stats)
                    std::cerr << theorem_name(t) << ": " << r.instances_checked << " instances, "
                              << r.runtime_ms << " ms\n";
            }
            if (!cache_path.empty()) {
                flush_cache(cache_path, session);
                if (stats)
                    std::cerr << "cache: loaded " << cstats.records_loaded << " records, "
                              << session.cache_hits() << " hits, " << cstats.spot_checks
                              << " spot-checks\n";
            }
            if (format == "table")
                std::cout << table.str();
            else if (format == "csv")
                std::cout << csv.str();
            else
                std::cout << out.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }

        if (*cmd_recheck) {
            std::ifstream in(recheck_file);
            if (!in) {
                std::cerr << "cannot open " << recheck_file << "\n";
                return 2;
            }
            Json j = Json::parse(in);
            Witness w = witness_from_json(j);
            auto complex = complex_from_json(j.at("complex"));
            bool ok = validate_witness(complex, w);
            std::cout << (ok ? "valid" : "INVALID") << " "
                      << witness_kind_name(w.kind);
            if (j.contains("subject")) std::cout << " for " << j["subject"].get<std::string>();
            std::cout << "\n";
            return ok ? 0 : 1;
        }

        if (*cmd_homology) {
            SimplicialComplex c = SimplicialComplex::void_complex(0);
            if (!complex_file.empty()) {
                std::ifstream in(complex_file);
                if (!in) {
                    std::cerr << "cannot open " << complex_file << "\n";
                    return 2;
                }
                std::stringstream buf;
                buf << in.rdbuf();
                c = complex_from_text(buf.str());
            } else {
                c = independence_complex(graph_from_spec(spec).graph);
            }
            auto p = reduced_homology(c);
            if (format == "table")
                std::cout << homology_table(p);
            else
                std::cout << to_json(p).dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
