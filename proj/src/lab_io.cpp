#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurq/lab.hpp"
#include "schurq/skew_shape.hpp"
#include "schurq/tableaux.hpp"

namespace schurq::lab {

namespace {

using ordered_json = nlohmann::ordered_json;

long long small_int(const Rational& c) {
    if (denominator(c) != 1) throw std::logic_error("report expansion has non-integral coefficient");
    Int num = numerator(c);
    if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min())
        throw std::logic_error("report expansion coefficient overflows the JSON integer range");
    return num.convert_to<long long>();
}

ordered_json expansion_json(const OmegaElem& e) {
    ordered_json terms = ordered_json::array();
    for (const auto& [key, c] : e.coeffs())
        terms.push_back(ordered_json::array({ordered_json::array({parts_str(key)}), small_int(c)}));
    return terms;
}

ordered_json class_json(int n, const ClassInfo& info) {
    ordered_json j;
    j["n"] = n;
    j["class_id"] = info.id;
    ordered_json members = ordered_json::array();
    for (const auto& m : info.members) members.push_back(m.str());
    j["members"] = members;
    j["expansion"] = expansion_json(info.expansion);
    return j;
}

void write_json(const ClassReport& report, std::ostream& os) {
    ordered_json j;
    j["n"] = report.n;
    ordered_json cls = ordered_json::array();
    for (const auto& c : report.classes) cls.push_back(class_json(report.n, c));
    j["classes"] = cls;
    if (!report.closure_classes.empty()) {
        ordered_json ccls = ordered_json::array();
        for (const auto& c : report.closure_classes) ccls.push_back(class_json(report.n, c));
        j["closure_classes"] = ccls;
        j["verdict"] = report.verdict == ClassReport::Verdict::Match ? "match" : "mismatch";
        j["hard_failure"] = report.hard_failure;
        j["witnesses"] = report.witnesses;
    }
    if (!report.notes.empty()) j["notes"] = report.notes;
    os << j.dump(2) << '\n';
}

void write_csv_rows(std::ostream& os, const char* kind, int n, const std::vector<ClassInfo>& infos) {
    for (const auto& c : infos)
        for (const auto& m : c.members)
            os << kind << ',' << n << ',' << c.id << ",\"" << m.str() << "\",\""
               << c.expansion.str() << "\"\n";
}

void write_csv(const ClassReport& report, std::ostream& os) {
    os << "kind,n,class_id,member,expansion\n";
    write_csv_rows(os, "class", report.n, report.classes);
    write_csv_rows(os, "closure", report.n, report.closure_classes);
}

}  // namespace

void export_report(const ClassReport& report, const RunConfig& config) {
    std::ofstream os(config.output_path);
    if (!os) throw std::runtime_error("cannot write report to " + config.output_path);
    if (config.format == RunConfig::Format::Json)
        write_json(report, os);
    else
        write_csv(report, os);
}

namespace {

RunConfig::Format parse_format(const std::string& text) {
    if (text == "json") return RunConfig::Format::Json;
    if (text == "csv") return RunConfig::Format::Csv;
    throw CLI::ValidationError("--format", "format must be json or csv");
}

/// Plain key=value defaults, applied before flag parsing; flags win.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot read config file " + path);
    std::string line;
    while (std::getline(is, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
        size_t start = line.find_first_not_of(' ');
        if (start == std::string::npos) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line is not key=value: " + line);
        out[line.substr(start, eq - start)] = line.substr(eq + 1);
    }
    return out;
}

int print_suite(const std::string& name, const SuiteResult& res) {
    std::cout << name << ": " << res.checks << " checks, " << res.failures.size() << " failures\n";
    for (const auto& f : res.failures) std::cout << "  FAIL " << f << '\n';
    return res.ok() ? 0 : 1;
}

void print_classes(const std::vector<ClassInfo>& infos) {
    std::cout << infos.size() << " classes\n";
    for (const auto& c : infos) {
        std::cout << "class " << c.id << " (" << c.members.size() << " members): ";
        for (size_t i = 0; i < c.members.size(); ++i)
            std::cout << (i ? " " : "") << c.members[i].str();
        std::cout << "  ->  " << c.expansion.str() << '\n';
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    // pick up --config first so its values become flag defaults
    std::map<std::string, std::string> defaults;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--config=", 0) == 0)
            defaults = read_config(arg.substr(9));
        else if (arg == "--config" && i + 1 < argc)
            defaults = read_config(argv[i + 1]);
    }
    RunConfig stock;
    int jobs = defaults.count("jobs") ? std::stoi(defaults["jobs"]) : stock.worker_count;
    std::string out_path = defaults.count("out") ? defaults["out"] : stock.output_path;
    std::string format = defaults.count("format") ? defaults["format"] : "json";
    int conj_n = defaults.count("n") ? std::stoi(defaults["n"]) : stock.max_n;
    int verify_max = defaults.count("max") ? std::stoi(defaults["max"]) : 0;
    int kmax = defaults.count("kmax") ? std::stoi(defaults["kmax"]) : stock.variable_count;

    CLI::App app{"exact engine for ribbon and skew Schur Q-functions"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path,
                   "plain key=value defaults file (jobs, out, format, n, max, kmax)");

    auto* expand_cmd = app.add_subcommand("expand", "print the q-basis expansion of a ribbon");
    std::string expand_ribbon;
    expand_cmd->add_option("--ribbon", expand_ribbon, "composition, e.g. 2,1")->required();

    auto* eq_cmd = app.add_subcommand("eq", "decide equality of two ribbon Schur Q-functions");
    std::string eq_a, eq_b;
    int eq_kmax = kmax;
    eq_cmd->add_option("--a", eq_a)->required();
    eq_cmd->add_option("--b", eq_b)->required();
    eq_cmd->add_option("--kmax", eq_kmax, "variable budget for oversized ribbons");

    auto* classes_cmd = app.add_subcommand("classes", "equality classes of all ribbons of size n");
    int classes_n = 0;
    std::string classes_out = out_path, classes_format = format;
    int classes_jobs = jobs;
    classes_cmd->add_option("--n", classes_n, "ribbon size")->required();
    classes_cmd->add_option("--out", classes_out, "write the report here");
    classes_cmd->add_option("--format", classes_format, "json or csv");
    classes_cmd->add_option("--jobs", classes_jobs, "worker threads");

    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
    std::string suite;
    int suite_max = verify_max;
    verify_cmd->add_option("--suite", suite, "relations, theorems, oracle or all")->required();
    verify_cmd->add_option("--max", suite_max,
                           "size budget (cells for oracle); 0 = suite default (10/10/6)");

    auto* conj_cmd = app.add_subcommand("conjecture", "compare move closure with equality classes");
    int cn = conj_n, conj_jobs = jobs;
    std::string conj_out = out_path, conj_format = format;
    conj_cmd->add_option("--n", cn, "ribbon size (default 11)");
    conj_cmd->add_option("--jobs", conj_jobs, "worker threads");
    conj_cmd->add_option("--out", conj_out, "write the report here");
    conj_cmd->add_option("--format", conj_format, "json or csv");

    try {
        app.parse(argc, argv);

        if (expand_cmd->parsed()) {
            std::cout << ribbon_q(Composition::parse(expand_ribbon)).str() << '\n';
            return 0;
        }
        if (eq_cmd->parsed()) {
            Composition a = Composition::parse(eq_a), b = Composition::parse(eq_b);
            if (a.size() != b.size()) {  // different degrees
                std::cout << "not equal\n";
                return 0;
            }
            auto wit = inequality_witness(a, b, eq_kmax);
            switch (wit.kind) {
                case WitnessResult::Kind::Equal: std::cout << "equal\n"; break;
                case WitnessResult::Kind::Differs: std::cout << "not equal\n"; break;
                case WitnessResult::Kind::Inconclusive: std::cout << "inconclusive\n"; break;
            }
            return 0;
        }
        if (classes_cmd->parsed()) {
            ClassReport report;
            report.n = classes_n;
            report.classes = classes(classes_n, classes_jobs);
            print_classes(report.classes);
            if (!classes_out.empty()) {
                RunConfig cfg;
                cfg.output_path = classes_out;
                cfg.format = parse_format(classes_format);
                cfg.worker_count = classes_jobs;
                export_report(report, cfg);
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            int rc = 0;
            if (suite == "relations" || suite == "all")
                rc |= print_suite("relations", relation_suite(suite_max > 0 ? suite_max : 10));
            if (suite == "theorems" || suite == "all")
                rc |= print_suite("theorems", theorem_suite(suite_max > 0 ? suite_max : 10));
            if (suite == "oracle" || suite == "all")
                rc |= print_suite("oracle", oracle_suite(suite_max > 0 ? suite_max : 6));
            if (suite != "relations" && suite != "theorems" && suite != "oracle" && suite != "all")
                throw CLI::ValidationError("--suite", "unknown suite " + suite);
            return rc;
        }
        if (conj_cmd->parsed()) {
            ClassReport report = conjecture_check(cn, conj_jobs);
            std::cout << "n=" << report.n << ": " << report.classes.size() << " equality classes, "
                      << report.closure_classes.size() << " closure classes: "
                      << (report.verdict == ClassReport::Verdict::Match ? "match" : "MISMATCH")
                      << '\n';
            for (const auto& w : report.witnesses) std::cout << "  " << w << '\n';
            for (const auto& note : report.notes) std::cout << "note: " << note << '\n';
            if (!conj_out.empty()) {
                RunConfig cfg;
                cfg.output_path = conj_out;
                cfg.format = parse_format(conj_format);
                cfg.worker_count = conj_jobs;
                export_report(report, cfg);
            }
            return report.verdict == ClassReport::Verdict::Match && !report.hard_failure ? 0 : 1;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace schurq::lab
