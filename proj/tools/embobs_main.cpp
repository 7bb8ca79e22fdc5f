// Command-line driver over the embobs C API. Every subcommand prints one
// RunReport JSON object on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 negative verdict (cover hypothesis violated or
// inadmissible parameters), 2 input/parse error, 3 resource cap exceeded,
// 4 internal error.

#include <embobs.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

struct CliError {
    int exit_code;
    std::string message;
};

int status_to_exit(embobs_status s)
{
    switch (s) {
    case EMBOBS_OK:
        return 0;
    case EMBOBS_ERR_INVALID:
    case EMBOBS_ERR_PARSE:
        return 2;
    case EMBOBS_ERR_LIMIT:
        return 3;
    default:
        return 4;
    }
}

void check(embobs_status s)
{
    if (s != EMBOBS_OK)
        throw CliError{status_to_exit(s), embobs_last_error()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CliError{2, "cannot open '" + path + "'"};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// FNV-1a over the inputs that determine the result.
struct Digest {
    std::uint64_t h = 1469598103934665603ull;

    void feed(const std::string& s)
    {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    }

    std::string hex() const
    {
        static const char* digits = "0123456789abcdef";
        std::string out = "fnv1a:";
        for (int i = 60; i >= 0; i -= 4)
            out += digits[(h >> i) & 0xf];
        return out;
    }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { embobs_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

struct OwnedComplex {
    embobs_complex* k = nullptr;
    ~OwnedComplex() { embobs_complex_free(k); }
};

// Accepts a path or one of the builtin shorthands documented in the README:
// builtin:boundary:N, builtin:rp2, builtin:k5.
void load_complex(const std::string& spec, Digest& digest, OwnedComplex& out)
{
    digest.feed(spec);
    if (spec.rfind("builtin:", 0) == 0) {
        std::string rest = spec.substr(8);
        if (rest == "rp2") {
            check(embobs_complex_minimal_rp2(&out.k));
            return;
        }
        if (rest == "k5") {
            OwnedComplex boundary;
            check(embobs_complex_boundary_simplex(4, &boundary.k));
            check(embobs_complex_skeleton(boundary.k, 1, &out.k));
            return;
        }
        if (rest.rfind("boundary:", 0) == 0) {
            int n = 0;
            try {
                n = std::stoi(rest.substr(9));
            } catch (const std::exception&) {
                throw CliError{2, "malformed builtin '" + spec + "'"};
            }
            check(embobs_complex_boundary_simplex(n, &out.k));
            return;
        }
        throw CliError{2, "unknown builtin complex '" + spec + "'"};
    }
    std::string text = read_file(spec);
    digest.feed(text);
    check(embobs_complex_from_json(text.c_str(), &out.k));
}

void emit_report(const std::string& command, const json& parameters, const Digest& digest,
                 const json& results, std::chrono::steady_clock::time_point start)
{
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = command;
    report["input_digest"] = digest.hex();
    report["parameters"] = parameters;
    report["results"] = results;
    report["timing_ms"] = elapsed;
    std::cout << report.dump() << "\n";
}

json parse_results(const OwnedString& s)
{
    return json::parse(s.str());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"embobs: embedding obstructions of triangulated manifolds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", embobs_version());

    // dualsw / capd / division share the presentation selection.
    struct ClassArgs {
        int rp = 0;
        std::string total_file;
        int m = 0;
    };

    auto add_presentation_opts = [](CLI::App* cmd, ClassArgs& args) {
        auto* rp = cmd->add_option("--rp", args.rp, "real projective space RP^d");
        auto* total =
            cmd->add_option("--total", args.total_file, "presented total tangent class (JSON)");
        rp->excludes(total);
        total->excludes(rp);
    };

    ClassArgs dualsw_args, capd_args, division_args;
    auto* cmd_dualsw = app.add_subcommand("dualsw", "dual Stiefel-Whitney classes and D");
    add_presentation_opts(cmd_dualsw, dualsw_args);
    auto* cmd_capd = app.add_subcommand("capd", "the double-point invariant D");
    add_presentation_opts(cmd_capd, capd_args);
    auto* cmd_division = app.add_subcommand("division", "division witness a(t) with a*t*w(tau,t) = t^m");
    add_presentation_opts(cmd_division, division_args);
    cmd_division->add_option("--m", division_args.m, "target power of t")->required();

    struct IndexArgs {
        std::string complex_file;
        std::string mode = "full";
        int max_degree = -1;
        bool emit_cocycles = false;
    } index_args;
    auto* cmd_index = app.add_subcommand("index", "Z/2-index of the deleted product");
    cmd_index->add_option("--complex", index_args.complex_file, "complex JSON file")->required();
    cmd_index->add_option("--mode", index_args.mode, "full | cap:M | family:FILE");
    cmd_index->add_option("--max-degree", index_args.max_degree, "materialize degrees <= N");
    cmd_index->add_flag("--emit-cocycles", index_args.emit_cocycles,
                        "include Euler power cocycle bit strings");

    struct CoverArgs {
        std::string complex_file, family_file;
        int m = 0, r = 0, threads = 1;
    } cover_args;
    auto* cmd_cover = app.add_subcommand("cover-check", "verify the cover family hypothesis");
    cmd_cover->add_option("--complex", cover_args.complex_file)->required();
    cmd_cover->add_option("--family", cover_args.family_file)->required();
    cmd_cover->add_option("--m", cover_args.m)->required();
    cmd_cover->add_option("--r", cover_args.r)->required();
    cmd_cover->add_option("--threads", cover_args.threads, "worker threads");

    struct CoincideArgs {
        std::string complex_file, points_file;
        bool random = false;
        std::uint64_t seed = 0;
        int dim = 2;
        long denom_bound = 1000;
        int cap = -1;
        int threads = 1;
    } coincide_args;
    auto* cmd_coincide = app.add_subcommand("coincide", "exact coincidence witnesses of a PL map");
    cmd_coincide->add_option("--complex", coincide_args.complex_file)->required();
    auto* points_opt = cmd_coincide->add_option("--points", coincide_args.points_file,
                                                "vertex images JSON file");
    auto* random_flag = cmd_coincide->add_flag("--random", coincide_args.random,
                                               "draw a seeded random map instead");
    auto* seed_opt = cmd_coincide->add_option("--seed", coincide_args.seed, "RNG seed");
    cmd_coincide->add_option("--dim", coincide_args.dim, "target dimension for --random");
    cmd_coincide->add_option("--denom-bound", coincide_args.denom_bound,
                             "denominator bound for --random");
    cmd_coincide->add_option("--cap", coincide_args.cap, "pair dimension cap");
    cmd_coincide->add_option("--threads", coincide_args.threads, "worker threads");
    random_flag->needs(seed_opt);
    random_flag->excludes(points_opt);

    struct KtheoryArgs {
        int d = 1;
        unsigned f = 1;
        int n = 8;
    } ktheory_args;
    auto* cmd_ktheory = app.add_subcommand("ktheory", "gamma operations and the Atiyah bound");
    cmd_ktheory->add_option("--d", ktheory_args.d, "projective space dimension")->required();
    cmd_ktheory->add_option("--f", ktheory_args.f, "torsion exponent of the coefficient ring")
        ->required();
    cmd_ktheory->add_option("--n", ktheory_args.n, "table size");

    struct FhArgs {
        long long l = 0, m = 0, k = 0, r = 0, capd = 0;
    } fh_args;
    auto* cmd_fh = app.add_subcommand("fh", "Frick-Harrison admissibility");
    cmd_fh->add_option("--l", fh_args.l)->required();
    cmd_fh->add_option("--m", fh_args.m)->required();
    cmd_fh->add_option("--k", fh_args.k)->required();
    cmd_fh->add_option("--r", fh_args.r)->required();
    cmd_fh->add_option("--capD", fh_args.capd)->required();

    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    try {
        auto run_class_command = [&](const std::string& name, const ClassArgs& args,
                                     auto&& rp_fn, auto&& total_fn, const json& extra_params) {
            Digest digest;
            digest.feed(name);
            json params = extra_params;
            OwnedString out;
            if (!args.total_file.empty()) {
                std::string text = read_file(args.total_file);
                digest.feed(text);
                params["total"] = args.total_file;
                check(total_fn(text.c_str(), &out.s));
            } else if (args.rp >= 1) {
                digest.feed("rp" + std::to_string(args.rp));
                params["rp"] = args.rp;
                check(rp_fn(args.rp, &out.s));
            } else {
                throw CliError{2, name + ": provide --rp D or --total FILE"};
            }
            emit_report(name, params, digest, parse_results(out), start);
            return 0;
        };

        if (cmd_dualsw->parsed()) {
            return run_class_command("dualsw", dualsw_args, embobs_dualsw_rp,
                                     embobs_dualsw_total, json::object());
        }
        if (cmd_capd->parsed()) {
            return run_class_command("capd", capd_args, embobs_capd_rp, embobs_capd_total,
                                     json::object());
        }
        if (cmd_division->parsed()) {
            int m = division_args.m;
            auto rp_fn = [m](int d, char** out) { return embobs_division_rp(d, m, out); };
            auto total_fn = [m](const char* text, char** out) {
                return embobs_division_total(text, m, out);
            };
            return run_class_command("division", division_args, rp_fn, total_fn,
                                     json{{"m", m}});
        }

        if (cmd_index->parsed()) {
            Digest digest;
            digest.feed("index");
            OwnedComplex k;
            load_complex(index_args.complex_file, digest, k);

            std::string mode = index_args.mode;
            std::string family_json;
            if (mode.rfind("family:", 0) == 0) {
                family_json = read_file(mode.substr(7));
                digest.feed(family_json);
                mode = "family";
            }
            digest.feed(mode);

            json params{{"complex", index_args.complex_file},
                        {"mode", index_args.mode},
                        {"max_degree", index_args.max_degree},
                        {"emit_cocycles", index_args.emit_cocycles}};
            OwnedString out;
            check(embobs_index_report(k.k, mode.c_str(),
                                      family_json.empty() ? nullptr : family_json.c_str(),
                                      index_args.max_degree, index_args.emit_cocycles ? 1 : 0,
                                      &out.s));
            emit_report("index", params, digest, parse_results(out), start);
            return 0;
        }

        if (cmd_cover->parsed()) {
            Digest digest;
            digest.feed("cover-check");
            OwnedComplex k;
            load_complex(cover_args.complex_file, digest, k);
            std::string family = read_file(cover_args.family_file);
            digest.feed(family);
            digest.feed(std::to_string(cover_args.m) + "," + std::to_string(cover_args.r));

            json params{{"complex", cover_args.complex_file},
                        {"family", cover_args.family_file},
                        {"m", cover_args.m},
                        {"r", cover_args.r}};
            int holds = 0;
            OwnedString out;
            check(embobs_cover_check(k.k, family.c_str(), cover_args.m, cover_args.r,
                                     cover_args.threads, &holds, &out.s));
            emit_report("cover-check", params, digest, parse_results(out), start);
            return holds ? 0 : 1;
        }

        if (cmd_coincide->parsed()) {
            Digest digest;
            digest.feed("coincide");
            OwnedComplex k;
            load_complex(coincide_args.complex_file, digest, k);

            std::string points_json;
            json params{{"complex", coincide_args.complex_file}, {"cap", coincide_args.cap}};
            if (coincide_args.random) {
                OwnedString pts;
                check(embobs_random_plmap(k.k, coincide_args.dim, coincide_args.seed,
                                          coincide_args.denom_bound, &pts.s));
                points_json = pts.str();
                params["seed"] = coincide_args.seed;
                params["dim"] = coincide_args.dim;
                params["denom_bound"] = coincide_args.denom_bound;
                digest.feed(points_json);
            } else if (!coincide_args.points_file.empty()) {
                points_json = read_file(coincide_args.points_file);
                params["points"] = coincide_args.points_file;
                digest.feed(points_json);
            } else {
                throw CliError{2, "coincide: provide --points FILE or --random --seed S"};
            }

            OwnedString out;
            check(embobs_coincide(k.k, points_json.c_str(), coincide_args.cap,
                                  coincide_args.threads, &out.s));
            json results = parse_results(out);
            if (coincide_args.random)
                results["map"] = json::parse(points_json);
            emit_report("coincide", params, digest, results, start);
            return 0;
        }

        if (cmd_ktheory->parsed()) {
            Digest digest;
            digest.feed("ktheory");
            digest.feed(std::to_string(ktheory_args.d) + "," + std::to_string(ktheory_args.f) +
                        "," + std::to_string(ktheory_args.n));
            json params{{"d", ktheory_args.d}, {"f", ktheory_args.f}, {"n", ktheory_args.n}};
            OwnedString out;
            check(embobs_ktheory(ktheory_args.d, ktheory_args.f, ktheory_args.n, &out.s));
            emit_report("ktheory", params, digest, parse_results(out), start);
            return 0;
        }

        if (cmd_fh->parsed()) {
            Digest digest;
            digest.feed("fh");
            digest.feed(std::to_string(fh_args.l) + "," + std::to_string(fh_args.m) + "," +
                        std::to_string(fh_args.k) + "," + std::to_string(fh_args.r) + "," +
                        std::to_string(fh_args.capd));
            json params{{"l", fh_args.l},
                        {"m", fh_args.m},
                        {"k", fh_args.k},
                        {"r", fh_args.r},
                        {"capD", fh_args.capd}};
            int ok = 0;
            OwnedString out;
            check(embobs_fh_admissible(fh_args.l, fh_args.m, fh_args.k, fh_args.r, fh_args.capd,
                                       &ok, &out.s));
            emit_report("fh", params, digest, parse_results(out), start);
            return ok ? 0 : 1;
        }
    } catch (const CliError& e) {
        std::cerr << "embobs: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "embobs: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
