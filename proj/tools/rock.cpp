#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rock/abacus.hpp"
#include "rock/errors.hpp"
#include "rock/graded_dim.hpp"
#include "rock/tableaux.hpp"
#include "rock/verify.hpp"
#include "rock/zigzag.hpp"

using namespace rock;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCap = 3, kDomain = 4 };

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    int max_e = 5, max_d = 3, max_n = 3;
    long long max_enum = 200000;
    int max_schur_e = 3, max_schur_d = 2, max_schur_n = 2;
};

Caps load_caps(const std::string& path) {
    Caps c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read config " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.find('[') != std::string::npos) continue;  // table headers are ignored
        auto eq = line.find('=');
        if (eq == std::string::npos) throw PreconditionError("config line " + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        long long v;
        try {
            v = std::stoll(trim(line.substr(eq + 1)));
        } catch (const std::exception&) {
            throw PreconditionError("config line " + std::to_string(lineno) + ": value must be an integer");
        }
        if (key == "max_e") c.max_e = static_cast<int>(v);
        else if (key == "max_d") c.max_d = static_cast<int>(v);
        else if (key == "max_n") c.max_n = static_cast<int>(v);
        else if (key == "max_enum") c.max_enum = v;
        else if (key == "max_schur_e") c.max_schur_e = static_cast<int>(v);
        else if (key == "max_schur_d") c.max_schur_d = static_cast<int>(v);
        else if (key == "max_schur_n") c.max_schur_n = static_cast<int>(v);
        else throw PreconditionError("config line " + std::to_string(lineno) + ": unknown key " + key);
    }
    return c;
}

std::vector<int> parse_csv(const std::string& s) {
    std::vector<int> out;
    std::string t = s;
    for (char& ch : t)
        if (ch == ',') ch = ' ';
    std::istringstream is(t);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw PreconditionError("bad integer list '" + s + "'");
        }
    }
    return out;
}

json multipartition_json(const Multipartition& m) {
    json a = json::array();
    for (const auto& p : m.components) a.push_back(p.parts());
    return a;
}

struct Params {
    int e = 3, d = 2, n = 2;
    std::uint64_t seed = 0;
    int samples = -1;
    int nodes = 9;
    std::string json_path, config_path, tsv_path;
    std::string lambda, colors, lambda2, colors2, rho, i_word, j_word, lj = "canonical";
    std::string partition;
    std::optional<int> N;
    std::string suite, kind;
};

void check_range(const Params& p, const Caps& c, bool needs_n) {
    if (p.e < 2) throw PreconditionError("e must be at least 2");
    if (p.d < 0 || p.n < 1) throw PreconditionError("d must be >= 0 and n >= 1");
    if (p.e > c.max_e) throw CapError("e=" + std::to_string(p.e) + " exceeds max_e=" + std::to_string(c.max_e));
    if (p.d > c.max_d) throw CapError("d=" + std::to_string(p.d) + " exceeds max_d=" + std::to_string(c.max_d));
    if (needs_n && p.n > c.max_n) throw CapError("n=" + std::to_string(p.n) + " exceeds max_n=" + std::to_string(c.max_n));
}

void check_schur(const Params& p, const Caps& c) {
    if (p.e > c.max_schur_e || p.d > c.max_schur_d || p.n > c.max_schur_n)
        throw CapError("Schur/double suites are capped at e<=" + std::to_string(c.max_schur_e) + ", d<=" +
                       std::to_string(c.max_schur_d) + ", n<=" + std::to_string(c.max_schur_n));
}

void check_enum(long long count, const Caps& c, const std::string& what) {
    if (count > c.max_enum) throw CapError(what + " has " + std::to_string(count) + " members, above max_enum");
}

json verdicts_of(const SuiteReport& r) {
    json v = json::array();
    for (const auto& c : r.checks) {
        json x = {{"check", c.name}, {"passed", c.passed}};
        if (!c.passed) {
            x["detail"] = c.detail;
            x["counterexample"] = c.counterexample;
        }
        v.push_back(x);
    }
    return v;
}

SuiteReport run_suite(const std::string& suite, const Params& p, const Caps& c) {
    auto samples = [&](int dflt) { return p.samples >= 0 ? p.samples : dflt; };
    if (suite == "zigzag") {
        check_range(p, c, false);
        return verify_zigzag(p.e);
    }
    if (suite == "wreath") {
        check_range(p, c, false);
        return verify_wreath(p.e, p.d, samples(50), p.seed);
    }
    if (suite == "tableaux") {
        check_range(p, c, false);
        if (p.nodes > 10) throw CapError("tableau suite is capped at 10 nodes");
        return verify_tableaux(p.e, p.nodes);
    }
    if (suite == "words") {
        check_range(p, c, false);
        return verify_words(p.e, p.d);
    }
    if (suite == "rock-d1") {
        check_range(p, c, false);
        return verify_rock_d1(p.e);
    }
    if (suite == "abacus") {
        check_range(p, c, false);
        check_enum(static_cast<long long>(multipartitions(p.e, p.d).size()), c, "the block");
        return verify_abacus(p.e, p.d);
    }
    if (suite == "counting") {
        check_range(p, c, true);
        check_enum(static_cast<long long>(multipartitions(p.e, p.d).size()), c, "the block");
        return verify_counting(p.e, p.d, p.n, samples(30), p.seed);
    }
    if (suite == "schur") {
        check_range(p, c, true);
        check_schur(p, c);
        return verify_schur(p.n, p.d, p.e, samples(50), p.seed);
    }
    if (suite == "double") {
        check_range(p, c, true);
        check_schur(p, c);
        return verify_double(p.n, p.d, p.e, samples(200), p.seed);
    }
    if (suite == "all") {
        check_range(p, c, true);
        check_schur(p, c);
        SuiteReport all{"all", {}, json::object()};
        for (const char* s : {"zigzag", "wreath", "tableaux", "words", "rock-d1", "abacus", "counting", "schur", "double"})
            all.merge(run_suite(s, p, c));
        return all;
    }
    throw PreconditionError("unknown suite " + suite);
}

json base_params(const Params& p) { return {{"e", p.e}, {"d", p.d}, {"n", p.n}, {"seed", p.seed}}; }

ColoredComposition colored(const std::string& lam, const std::string& col, int e) {
    return ColoredComposition(Composition{parse_csv(lam)}, parse_csv(col), e);
}

LjChoice lj_choice(const Params& p) {
    if (p.lj == "canonical") return LjChoice::canonical(p.e);
    if (p.lj == "reversed") return LjChoice::reversed(p.e);
    throw PreconditionError("--lj must be canonical or reversed");
}

RouquierCore rock_core(const Params& p) {
    if (p.rho.empty()) return make_rouquier_core(p.e, p.d);
    Partition rho = Partition::parse(p.rho);
    auto core = is_rouquier_core(rho, p.d, p.e);
    if (!core) throw DomainError("rho = " + rho.to_string() + " is not a " + std::to_string(p.d) + "-Rouquier " + std::to_string(p.e) + "-core");
    return *core;
}

int emit(const json& report, const Params& p) {
    std::string text = report.dump(2) + "\n";
    if (p.json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(p.json_path);
        if (!out) throw PreconditionError("cannot write " + p.json_path);
        out << text;
    }
    return kPass;
}

json dims_json(const GradedDim& g) {
    json contrib = json::array();
    for (const auto& [mu, v] : g.contributions) contrib.push_back({{"mu", mu.parts()}, {"value", to_json(v)}});
    return {{"value", to_json(g.value)}, {"contributions", contrib}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RoCK block, zigzag Schur algebra and Turner double computations"};
    app.require_subcommand(1);
    Params p;
    auto common = [&](CLI::App* s) {
        s->add_option("--e", p.e, "e (size of I)");
        s->add_option("--d", p.d, "weight d");
        s->add_option("--n", p.n, "n");
        s->add_option("--seed", p.seed, "seed for randomized checks");
        s->add_option("--json", p.json_path, "write the JSON report here instead of stdout");
        s->add_option("--config", p.config_path, "cap configuration (key = value lines)");
    };

    auto* cq = app.add_subcommand("core-quotient", "e-core, e-quotient and weight of a partition");
    cq->add_option("partition", p.partition, "partition, e.g. 3,1 or ∅")->required();
    cq->add_option("--N", p.N, "number of beads (default: length of the partition)");
    common(cq);

    auto* ver = app.add_subcommand("verify", "run an identity suite");
    ver->add_option("suite", p.suite, "tableaux|counting|wreath|schur|double|zigzag|words|abacus|rock-d1|all")->required();
    ver->add_option("--samples", p.samples, "random samples (suite default when omitted)");
    ver->add_option("--nodes", p.nodes, "largest shape for the tableaux suite");
    common(ver);

    auto* dim = app.add_subcommand("dim", "graded dimensions");
    dim->add_option("kind", p.kind, "cyclotomic|rock|module|table")->required();
    dim->add_option("--lambda", p.lambda, "composition");
    dim->add_option("--colors", p.colors, "colors in J");
    dim->add_option("--lambda2", p.lambda2, "second composition (rock)");
    dim->add_option("--colors2", p.colors2, "second colors (rock)");
    dim->add_option("--rho", p.rho, "core (rock; default: a generated d-Rouquier core)");
    dim->add_option("--lj", p.lj, "canonical|reversed choice of l^j");
    dim->add_option("--i", p.i_word, "divided power word (cyclotomic)");
    dim->add_option("--j", p.j_word, "divided power word (cyclotomic)");
    dim->add_option("--tsv", p.tsv_path, "write the table as TSV (table)");
    common(dim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        Caps caps = load_caps(p.config_path);
        json report = {{"schema", "rock-report/v1"}};

        if (cq->parsed()) {
            Partition lam = Partition::parse(p.partition);
            if (p.e < 2) throw PreconditionError("e must be at least 2");
            if (p.e > caps.max_e) throw CapError("e exceeds max_e");
            int N = p.N.value_or(lam.length());
            if (N < lam.length()) throw PreconditionError("N must be at least the length of the partition");
            auto r = core_quotient_weight(lam, N, p.e);
            report["command"] = "core-quotient";
            report["params"] = {{"partition", lam.parts()}, {"e", p.e}, {"N", N}};
            report["results"] = {{"core", r.core.parts()}, {"quotient", multipartition_json(r.quotient)}, {"weight", r.weight},
                                 {"is_core", r.weight == 0}};
            report["verdicts"] = json::array();
            return emit(report, p);
        }

        if (ver->parsed()) {
            SuiteReport r = run_suite(p.suite, p, caps);
            report["command"] = "verify";
            json params = base_params(p);
            params["suite"] = p.suite;
            report["params"] = params;
            report["results"] = r.results;
            report["verdicts"] = verdicts_of(r);
            emit(report, p);
            if (const Check* f = r.first_failure()) {
                std::cerr << "identity failed: " << f->name << ": " << f->detail << "\n";
                if (!f->counterexample.is_null()) std::cerr << "counterexample: " << f->counterexample.dump() << "\n";
                return kFail;
            }
            return kPass;
        }

        report["command"] = "dim";
        json params = base_params(p);
        params["kind"] = p.kind;
        if (p.kind == "cyclotomic") {
            check_range(p, caps, false);
            auto i = DividedPowerWord::parse(p.i_word), j = DividedPowerWord::parse(p.j_word);
            params["i"] = i.to_string();
            params["j"] = j.to_string();
            report["params"] = params;
            report["results"] = dims_json(cyclotomic_graded_dim(i, j, p.e));
            report["verdicts"] = json::array();
        } else if (p.kind == "rock") {
            check_range(p, caps, false);
            auto a = colored(p.lambda, p.colors, p.e), b = colored(p.lambda2, p.colors2, p.e);
            if (a.size() != p.d || b.size() != p.d) throw PreconditionError("compositions must have size d");
            RouquierCore core = rock_core(p);
            params["lambda"] = a.lambda.parts;
            params["colors"] = a.colors;
            params["lambda2"] = b.lambda.parts;
            params["colors2"] = b.colors;
            params["rho"] = core.rho.parts();
            params["lj"] = p.lj;
            report["params"] = params;
            auto g = rock_truncation_dim(core, a, b, lj_choice(p));
            json res = dims_json(g);
            res["kappa"] = core.kappa;
            bool omega = std::all_of(b.lambda.parts.begin(), b.lambda.parts.end(), [](int x) { return x == 1; }) &&
                         b.length() == p.d;
            json verdicts = json::array();
            if (omega) {
                long long mc = matrix_count(a, b.colors, p.e);
                res["matrix_count"] = mc;
                verdicts.push_back({{"check", "dim_vs_matrix_count"}, {"passed", g.value.at_one() == mc}});
            }
            report["results"] = res;
            report["verdicts"] = verdicts;
        } else if (p.kind == "module") {
            if (p.e < 2) throw PreconditionError("e must be at least 2");
            if (p.e > caps.max_e) throw CapError("e exceeds max_e");
            auto a = colored(p.lambda, p.colors, p.e);
            if (a.size() > caps.max_d) throw CapError("module size exceeds max_d");
            params["lambda"] = a.lambda.parts;
            params["colors"] = a.colors;
            report["params"] = params;
            long long cf = closed_form_module_dim(a, p.e);
            long long count = ColoredModule(a, p.e).dim();
            report["results"] = {{"dim", count}, {"closed_form", cf}};
            report["verdicts"] = json::array({{{"check", "basis_count_vs_closed_form"}, {"passed", cf == count}}});
        } else if (p.kind == "table") {
            check_range(p, caps, true);
            RouquierCore core = rock_core(p);
            RockBlockDims B(core, lj_choice(p));
            auto lcs = colored_compositions(p.n, p.d, p.e);
            check_enum(static_cast<long long>(lcs.size() * lcs.size()), caps, "the table");
            std::vector<std::string> labels;
            for (const auto& lc : lcs) {
                std::string s = lc.lambda.to_string() + "|";
                for (std::size_t k = 0; k < lc.colors.size(); ++k) s += (k ? "," : "") + std::to_string(lc.colors[k]);
                labels.push_back(s);
            }
            json rows = json::array();
            std::ostringstream tsv;
            tsv << "lambda";
            for (const auto& l : labels) tsv << "\t" << l;
            tsv << "\n";
            for (std::size_t a = 0; a < lcs.size(); ++a) {
                tsv << labels[a];
                json row = json::array();
                for (std::size_t b = 0; b < lcs.size(); ++b) {
                    auto v = B.dim(lcs[a], lcs[b]).value;
                    tsv << "\t" << v.to_string();
                    row.push_back(to_json(v));
                }
                tsv << "\n";
                rows.push_back(row);
            }
            params["rho"] = core.rho.parts();
            report["params"] = params;
            report["results"] = {{"labels", labels}, {"table", rows}};
            report["verdicts"] = json::array();
            if (!p.tsv_path.empty()) {
                std::ofstream out(p.tsv_path);
                if (!out) throw PreconditionError("cannot write " + p.tsv_path);
                out << tsv.str();
            }
        } else {
            throw PreconditionError("unknown dim kind " + p.kind);
        }
        return emit(report, p);
    } catch (const CapError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kCap;
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kFail;
    }
}
