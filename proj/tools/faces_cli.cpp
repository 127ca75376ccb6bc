#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "faces/canonical.hpp"
#include "faces/closedform.hpp"
#include "faces/crystal.hpp"
#include "faces/fock.hpp"
#include "faces/json_io.hpp"
#include "faces/partitions.hpp"
#include "faces/qpoly.hpp"
#include "faces/verify.hpp"
#include "faces/weights.hpp"

using namespace faces;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIntegrity = 3 };

struct RunConfig {
    int e = 4;
    std::vector<int> lambda;
    std::vector<int> interval;
    int max_degree = 6;
    bool keep = false;
    std::string format = "text";
    std::string cache_dir;
    std::string output;
};

DominantWeight base_of(const RunConfig& cfg) {
    if (cfg.lambda.empty()) throw DomainError("--lambda is required");
    return DominantWeight(cfg.e, cfg.lambda);
}

std::string cache_dir(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* env = std::getenv("FACES_CACHE_DIR")) return env;
    return {};
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw DomainError("cannot write " + cfg.output);
    f << text;
}

std::string graph_text(const CrystalGraph& g) {
    std::ostringstream os;
    os << "vertices " << g.vertices().size() << ", edges " << g.edges().size() << ", max degree " << g.max_degree()
       << '\n';
    os << "content\thub\tdefect\tcount\n";
    for (const auto& v : g.vertices())
        os << content_string(v.content) << '\t' << hub_string(v.hub) << '\t' << v.defect << '\t' << v.count << '\n';
    return os.str();
}

std::string render_graph(const RunConfig& cfg, const CrystalGraph& g) {
    if (cfg.format == "json") return to_json(g).dump(2) + "\n";
    if (cfg.format == "dot") return to_dot(g);
    return graph_text(g);
}

/// Holds the G(mu) memo for one run and persists it when a cache dir is set.
class CachedBasis {
public:
    CachedBasis(const Multicharge& charge, std::string dir) : basis_(charge), dir_(std::move(dir)) {
        if (!dir_.empty()) load_cache(basis_, path());
    }
    ~CachedBasis() {
        if (dir_.empty()) return;
        try {
            std::filesystem::create_directories(dir_);
            save_cache(basis_, path());
        } catch (const std::exception& ex) {
            std::cerr << "warning: " << ex.what() << '\n';
        }
    }
    CanonicalBasis& operator*() { return basis_; }
    CanonicalBasis* operator->() { return &basis_; }

private:
    std::string path() const { return (std::filesystem::path(dir_) / cache_file_name(basis_.charge())).string(); }
    CanonicalBasis basis_;
    std::string dir_;
};

int cmd_crystal(const RunConfig& cfg) {
    const auto g = build_crystal(base_of(cfg), cfg.max_degree, std::nullopt, cfg.keep);
    emit(cfg, render_graph(cfg, g));
    return kOk;
}

int cmd_face(const RunConfig& cfg) {
    if (cfg.interval.empty()) throw DomainError("--interval is required");
    const auto spec = FaceSpec::from_interval(base_of(cfg), cfg.interval);
    const auto g = face(spec, cfg.keep);
    std::string out = render_graph(cfg, g);
    if (cfg.format == "text")
        out += "rho " + hub_string(rho_hub(spec)) + ", degree " + std::to_string(rho_degree(spec)) + "\n";
    emit(cfg, out);
    return kOk;
}

int cmd_cbe(const RunConfig& cfg, const std::string& mu_text) {
    const auto base = base_of(cfg);
    const auto mu = parse_multipartition(mu_text, base.multicharge());
    CachedBasis cb(base.multicharge(), cache_dir(cfg));
    const auto& g = cb->element(mu);
    if (cfg.format == "json") {
        emit(cfg, to_json(g).dump(2) + "\n");
    } else {
        emit(cfg, "G(" + to_string(mu) + ") = " + to_string(g.vector) + "\nshape " + to_string_ascending(g.shape, "z") +
                      "\n");
    }
    return kOk;
}

int cmd_fock_path(const RunConfig& cfg, const std::string& path_text, bool strip) {
    const auto base = base_of(cfg);
    const auto path = parse_path(path_text);
    const auto x = eval_path(path, base.multicharge());
    if (!strip) {
        emit(cfg, cfg.format == "json" ? to_json(x).dump(2) + "\n" : to_string(x) + "\n");
        return kOk;
    }
    CachedBasis cb(base.multicharge(), cache_dir(cfg));
    const auto parts = cb->strip(x);
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& p : parts) out.push_back({{"coef", to_json(p.coef)}, {"leader", to_json(p.element.leader)}});
        emit(cfg, out.dump(2) + "\n");
    } else {
        std::string s;
        for (const auto& p : parts) {
            if (!s.empty()) s += " + ";
            s += coefficient_prefix(p.coef) + "G(" + to_string(p.element.leader) + ")";
        }
        emit(cfg, s + "\n");
    }
    return kOk;
}

int cmd_shape(const RunConfig& cfg, const std::string& mu_text, const std::string& path_text) {
    const auto base = base_of(cfg);
    LaurentPoly s;
    if (!mu_text.empty()) {
        CachedBasis cb(base.multicharge(), cache_dir(cfg));
        s = cb->element(parse_multipartition(mu_text, base.multicharge())).shape;
    } else if (!path_text.empty()) {
        s = shape(eval_path(parse_path(path_text), base.multicharge()));
    } else {
        throw DomainError("shape needs --mu or --path");
    }
    emit(cfg, cfg.format == "json" ? to_json(s).dump() + "\n" : to_string_ascending(s, "z") + "\n");
    return kOk;
}

int cmd_enumerate(const RunConfig& cfg, int j1, int j2) {
    const FaceParams p(base_of(cfg), j1, j2);
    const auto cls = classify_face_mps(p);
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& c : cls) out.push_back(to_json(c));
        emit(cfg, out.dump(2) + "\n");
    } else {
        std::string s;
        for (const auto& c : cls)
            s += "w=" + std::to_string(c.w) + "\t" + to_string(c.mu) + "\tpath " + to_string(c.path) + "\n";
        emit(cfg, s);
    }
    return kOk;
}

int cmd_count(const RunConfig& cfg, int j1, int j2) {
    const FaceParams p(base_of(cfg), j1, j2);
    const int n = count_face_mps(p);
    emit(cfg, cfg.format == "json" ? json{{"j1", j1}, {"j2", j2}, {"count", n}}.dump() + "\n"
                                   : std::to_string(n) + "\n");
    return kOk;
}

struct VerifyOptions {
    std::string suite;
    int max_a = 3;
    int max_t = 3;
    int max_e = 6;
    std::size_t samples = 200;
    unsigned seed = 1;
};

int cmd_verify(const RunConfig& cfg, const VerifyOptions& o) {
    std::vector<SweepReport> reports;
    const bool all = o.suite == "all";
    if (all || o.suite == "closed-fock") {
        reports.push_back(sweep_closed_fock(cfg.e, o.max_a));
    }
    if (all || o.suite == "counts") reports.push_back(sweep_counts(cfg.e, o.max_a));
    if (all || o.suite == "shapes") reports.push_back(sweep_shapes(o.max_a, std::max(cfg.e, 2)));
    if (all || o.suite == "mathas") reports.push_back(sweep_mathas(o.samples, o.seed));
    if (all || o.suite == "tau") {
        if (!cfg.lambda.empty() && !cfg.interval.empty())
            reports.push_back(sweep_tau_face(FaceSpec::from_interval(base_of(cfg), cfg.interval)));
        else
            reports.push_back(sweep_tau(o.max_t, o.max_e, o.max_a));
    }
    if (reports.empty()) throw DomainError("unknown suite '" + o.suite + "'");

    bool ok = true;
    json out = json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        out.push_back({{"suite", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"failures", r.failures},
                       {"messages", r.messages}});
    }
    if (cfg.format == "text") {
        std::string s;
        for (const auto& r : reports) {
            s += (r.passed() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases, " +
                 std::to_string(r.failures) + " failures)\n";
            for (const auto& m : r.messages) s += "  " + m + "\n";
        }
        emit(cfg, s);
    } else {
        emit(cfg, out.dump(2) + "\n");
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_export(RunConfig cfg) {
    if (cfg.format == "text") cfg.format = "json";
    if (cfg.format != "json" && cfg.format != "dot") throw DomainError("export format must be json or dot");
    if (cfg.interval.empty()) return cmd_crystal(cfg);
    return cmd_face(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystals, faces and canonical bases for affine type A"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool needs_lambda) {
        sub->add_option("--e", cfg.e, "rank e")->check(CLI::Range(2, 64));
        auto* l = sub->add_option("--lambda", cfg.lambda, "coefficients a0,...,a_{e-1} of Lambda")->delimiter(',');
        if (needs_lambda) l->required();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
    };

    auto* crystal = app.add_subcommand("crystal", "block-reduced crystal up to a degree bound");
    common(crystal, true);
    crystal->add_option("--max-degree", cfg.max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    crystal->add_flag("--keep-multipartitions", cfg.keep, "list multipartitions at each vertex");

    auto* face_cmd = app.add_subcommand("face", "the face generated by an interval of residues");
    common(face_cmd, true);
    face_cmd->add_option("--interval", cfg.interval, "consecutive residues, e.g. 1,2")->delimiter(',')->required();
    face_cmd->add_flag("--keep-multipartitions", cfg.keep, "list multipartitions at each vertex");

    std::string mu_text, path_text;
    auto* cbe = app.add_subcommand("cbe", "canonical basis element G(mu)");
    common(cbe, true);
    cbe->add_option("--mu", mu_text, "multipartition, e.g. [[2],[1],[1],[1],[]]")->required();
    cbe->add_option("--cache", cfg.cache_dir, "directory for the G(mu) cache (or FACES_CACHE_DIR)");

    bool strip = false;
    auto* fock = app.add_subcommand("fock-path", "evaluate a path of divided powers on the vacuum");
    common(fock, true);
    fock->add_option("--path", path_text, "steps in application order, e.g. \"2^1 1^2 2^2\"")->required();
    fock->add_flag("--strip", strip, "decompose into canonical basis elements");
    fock->add_option("--cache", cfg.cache_dir, "directory for the G(mu) cache (or FACES_CACHE_DIR)");

    auto* shape_cmd = app.add_subcommand("shape", "shape polynomial of G(mu) or of a path vector");
    common(shape_cmd, true);
    auto* mu_opt = shape_cmd->add_option("--mu", mu_text, "multipartition");
    shape_cmd->add_option("--path", path_text, "path")->excludes(mu_opt);
    shape_cmd->add_option("--cache", cfg.cache_dir, "directory for the G(mu) cache (or FACES_CACHE_DIR)");

    int j1 = 0, j2 = 0;
    auto* enumerate = app.add_subcommand("enumerate", "e-regular multipartitions at content (j1,j2) of the {1,2} face");
    common(enumerate, true);
    enumerate->add_option("--j1", j1)->required();
    enumerate->add_option("--j2", j2)->required();

    auto* count = app.add_subcommand("count", "number of e-regular multipartitions at (j1,j2) on the {1,2} face");
    common(count, true);
    count->add_option("--j1", j1)->required();
    count->add_option("--j2", j2)->required();

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "compare closed forms with brute force");
    common(verify, false);
    verify->add_option("suite", vo.suite, "closed-fock, counts, shapes, mathas, tau or all")
        ->required()
        ->check(CLI::IsMember({"closed-fock", "counts", "shapes", "mathas", "tau", "all"}));
    verify->add_option("--max-a", vo.max_a, "largest coefficient in sweeps")->check(CLI::Range(1, 8));
    verify->add_option("--max-t", vo.max_t, "largest interval length (tau)")->check(CLI::Range(1, 4));
    verify->add_option("--max-e", vo.max_e, "largest rank (tau)")->check(CLI::Range(3, 8));
    verify->add_option("--interval", cfg.interval, "single face for the tau suite")->delimiter(',');
    verify->add_option("--samples", vo.samples, "random instances (mathas)");
    verify->add_option("--seed", vo.seed, "random seed (mathas)");

    auto* exp = app.add_subcommand("export", "write a crystal or face as JSON or DOT");
    common(exp, true);
    exp->add_option("--interval", cfg.interval, "face interval; whole crystal when absent")->delimiter(',');
    exp->add_option("--max-degree", cfg.max_degree, "degree bound for the whole crystal")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int rc = app.exit(ex);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*crystal) return cmd_crystal(cfg);
        if (*face_cmd) return cmd_face(cfg);
        if (*cbe) return cmd_cbe(cfg, mu_text);
        if (*fock) return cmd_fock_path(cfg, path_text, strip);
        if (*shape_cmd) return cmd_shape(cfg, mu_text, path_text);
        if (*enumerate) return cmd_enumerate(cfg, j1, j2);
        if (*count) return cmd_count(cfg, j1, j2);
        if (*verify) return cmd_verify(cfg, vo);
        if (*exp) return cmd_export(cfg);
    } catch (const DomainError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const IntegrityError& ex) {
        std::cerr << "integrity error: " << ex.what() << '\n';
        return kIntegrity;
    } catch (const OverflowError& ex) {
        std::cerr << "overflow: " << ex.what() << '\n';
        return kIntegrity;
    } catch (const json::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
