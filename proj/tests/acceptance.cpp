// Acceptance suite: prints one pass/fail line per criterion and exits
// nonzero if any fails. Criterion 11 drives the CLI binary named by the
// EMBOBS_CLI environment variable.

#include "embobs/charclass.hpp"
#include "embobs/coincide.hpp"
#include "embobs/cover.hpp"
#include "embobs/deleted.hpp"
#include "embobs/jsonio.hpp"
#include "embobs/lambda.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>

using nlohmann::json;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<bool(std::string&)>& body)
{
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok)
        ++g_failures;
    std::printf("[%s] criterion %2d: %s (%.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), seconds, budget_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
}

embobs::simplicial::SimplicialComplex k5()
{
    return embobs::simplicial::skeleton(embobs::simplicial::boundary_of_simplex(4), 1);
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const char* cli = std::getenv("EMBOBS_CLI");
    if (!cli)
        return RunResult{-1, ""};
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return RunResult{-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe))
        out.append(buf, n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string strip_timing(const std::string& report)
{
    json j = json::parse(report);
    j.erase("timing_ms");
    return j.dump();
}

} // namespace

int main()
{
    using namespace embobs;

    run_criterion(1, "RP^d table of D for 1 <= d <= 32", 1.0, [](std::string& detail) {
        for (int d = 1; d <= 32; ++d) {
            int r = 0;
            while ((1 << (r + 1)) <= d)
                ++r;
            int expect = (1 << (r + 1)) - 1;
            if (charclass::cap_d(charclass::projective_space(d)) != expect) {
                detail = "mismatch at d = " + std::to_string(d);
                return false;
            }
        }
        return true;
    });

    run_criterion(2, "Peterson obstruction for d = 2, 4, 8, 16", 1.0, [](std::string& detail) {
        for (int d : {2, 4, 8, 16}) {
            auto rp = charclass::projective_space(d);
            auto dual = charclass::dual_total_class(rp.tangent_total);
            if (dual.comp[static_cast<std::size_t>(d - 1)].is_zero()) {
                detail = "w_{d-1}(-tau) = 0 at d = " + std::to_string(d);
                return false;
            }
            if (charclass::cap_d(rp) != 2 * d - 1) {
                detail = "D != 2d-1 at d = " + std::to_string(d);
                return false;
            }
        }
        return true;
    });

    run_criterion(3, "sphere models: z2 index of the full deleted product", 30.0,
                  [](std::string& detail) {
                      for (int d = 1; d <= 3; ++d) {
                          deleted::QuotientComplex y(deleted::deleted_product(
                              simplicial::boundary_of_simplex(d + 1)));
                          if (deleted::z2_index(y) != d) {
                              detail = "index != d at d = " + std::to_string(d);
                              return false;
                          }
                      }
                      return true;
                  });

    run_criterion(4, "capped complexes keep e(lambda)^m nonzero", 30.0,
                  [](std::string& detail) {
                      auto k = simplicial::boundary_of_simplex(4); // S^3 model
                      for (int m = 0; m <= 3; ++m) {
                          deleted::QuotientComplex y(deleted::deleted_product_capped(k, m));
                          if (!deleted::euler_power_nonzero(y, m)) {
                              detail = "vanished at m = " + std::to_string(m);
                              return false;
                          }
                      }
                      return true;
                  });

    run_criterion(5, "manifold converse: z2 index equals D", 60.0, [](std::string& detail) {
        for (int d = 1; d <= 3; ++d) {
            deleted::QuotientComplex y(
                deleted::deleted_product(simplicial::boundary_of_simplex(d + 1)));
            int index = deleted::z2_index(y);
            int cap = charclass::cap_d(charclass::sphere_presentation(d));
            if (index != cap) {
                detail = "sphere d = " + std::to_string(d);
                return false;
            }
        }
        deleted::QuotientComplex rp2(deleted::deleted_product(simplicial::minimal_rp2()));
        int index = deleted::z2_index(rp2);
        int cap = charclass::cap_d(charclass::projective_space(2));
        if (index != 3 || cap != 3) {
            detail = "projective plane: index " + std::to_string(index) + ", D " +
                     std::to_string(cap);
            return false;
        }
        return true;
    });

    run_criterion(6, "van Kampen-Flores instance on K_5", 5.0, [](std::string& detail) {
        deleted::QuotientComplex y(deleted::deleted_product(k5()));
        int index = deleted::z2_index(y);
        if (index < 2) {
            detail = "index below the cover-family lower bound";
            return false;
        }
        if (index != 2) {
            detail = "index " + std::to_string(index) + " != 2";
            return false;
        }
        return true;
    });

    run_criterion(7, "coincidence witnesses for K_5 drawings and Radon instances", 60.0,
                  [](std::string& detail) {
                      auto graph = k5();
                      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                          auto f = coincide::random_plmap(graph, 2, seed, 1000);
                          auto ws = coincide::find_coincidences(graph, f);
                          if (ws.empty()) {
                              detail = "K_5 seed " + std::to_string(seed) + " has no witness";
                              return false;
                          }
                          for (const auto& w : ws)
                              if (!w.verify(f)) {
                                  detail = "witness failed exact verification";
                                  return false;
                              }
                      }
                      auto tetra = simplicial::boundary_of_simplex(3);
                      for (std::uint64_t seed = 1; seed <= 200; ++seed) {
                          auto f = coincide::random_plmap(tetra, 2, seed, 1000);
                          auto ws = coincide::find_coincidences(tetra, f);
                          if (ws.empty()) {
                              detail = "Radon seed " + std::to_string(seed) + " has no witness";
                              return false;
                          }
                          for (const auto& w : ws)
                              if (!w.verify(f)) {
                                  detail = "witness failed exact verification";
                                  return false;
                              }
                      }
                      return true;
                  });

    run_criterion(8, "cover hypothesis for skeleton and partition families", 10.0,
                  [](std::string& detail) {
                      for (int d = 1; d <= 5; ++d) {
                          auto k = simplicial::boundary_of_simplex(d + 1);
                          for (int m = 0; m <= 2 * d; ++m) {
                              auto f = simplicial::skeleton_family(k, m);
                              if (simplicial::verify_cover_hypothesis(k, f, m, 1)) {
                                  detail = "skeleton family failed at d = " +
                                           std::to_string(d) + ", m = " + std::to_string(m);
                                  return false;
                              }
                          }
                      }
                      // partitions into odd parts: all-3 blocks plus singletons
                      for (int d = 1; d <= 5; ++d) {
                          auto k = simplicial::boundary_of_simplex(d + 1);
                          int n = d + 2;
                          // odd part sizes: blocks of 3, the remainder as
                          // one or two singletons
                          std::vector<std::size_t> sizes(static_cast<std::size_t>(n / 3), 3);
                          for (int rem = n % 3; rem > 0; --rem)
                              sizes.push_back(1);
                          std::vector<std::vector<std::string>> parts;
                          int v = 0;
                          for (std::size_t s : sizes) {
                              std::vector<std::string> part;
                              for (std::size_t i = 0; i < s; ++i)
                                  part.push_back("v" + std::to_string(v++));
                              parts.push_back(std::move(part));
                          }
                          auto f = simplicial::partition_family(k, parts);
                          int r = static_cast<int>(parts.size());
                          for (int m = 0; m <= 2 * d; ++m) {
                              if (simplicial::verify_cover_hypothesis(k, f, m, r)) {
                                  detail = "partition family failed at d = " +
                                           std::to_string(d);
                                  return false;
                              }
                          }
                      }
                      // deliberately broken family: an even part produces a
                      // concrete counterexample
                      auto k = simplicial::boundary_of_simplex(3);
                      auto broken = simplicial::partition_family(
                          k, {{"v0", "v1"}, {"v2", "v3"}});
                      auto violation = simplicial::verify_cover_hypothesis(k, broken, 1, 2);
                      if (!violation) {
                          detail = "broken family was not detected";
                          return false;
                      }
                      if (violation->first.empty() || violation->second.empty()) {
                          detail = "counterexample is not concrete";
                          return false;
                      }
                      return true;
                  });

    run_criterion(9, "lambda ring identities", 5.0, [](std::string& detail) {
        using namespace embobs::lambda;
        using embobs::gf2::KElem;
        using embobs::gf2::KRing;
        std::mt19937_64 rng(271828);
        for (int trial = 0; trial < 100; ++trial) {
            KRing ring{1 + static_cast<unsigned>(rng() % 10), false};
            LambdaElement xi = LambdaElement::hopf_sum(
                ring, static_cast<long>(rng() % 4), static_cast<long>(rng() % 4));
            long k = xi.rank();
            auto c = chern_from_lambda(xi, k);

            KElem total = KElem::zero(ring);
            for (const auto& ci : c)
                total = total + ci;
            if (total != KElem::one(ring)) {
                detail = "sum v^i c_i != 1";
                return false;
            }
            auto lam = lambda_series(xi, static_cast<int>(k));
            if (c[0] != lam.coeff[static_cast<std::size_t>(k)]) {
                detail = "c_0 != lambda^k";
                return false;
            }
            auto ct = chern_from_lambda(LambdaElement::trivial(ring, k), k);
            for (std::size_t i = 1; i < ct.size(); ++i)
                if (!ct[i].is_zero()) {
                    detail = "trivial bundle has nonzero higher Chern class";
                    return false;
                }

            LambdaElement eta = LambdaElement::hopf_sum(
                ring, static_cast<long>(rng() % 4), static_cast<long>(rng() % 4));
            auto ce = chern_from_lambda(eta, eta.rank());
            auto cs = chern_from_lambda(xi + eta, k + eta.rank());
            for (std::size_t i = 0; i < cs.size(); ++i) {
                KElem conv = KElem::zero(ring);
                for (std::size_t r = 0; r <= i && r < c.size(); ++r)
                    if (i - r < ce.size())
                        conv = conv + c[r] * ce[i - r];
                if (cs[i] != conv) {
                    detail = "multiplicativity failed";
                    return false;
                }
            }
        }
        // gamma_ops internally cross-checks the Chern route against the
        // direct lambda_{T/(1-T)} substitution and throws on mismatch
        for (int trial = 0; trial < 100; ++trial) {
            KRing ring{1 + static_cast<unsigned>(rng() % 10), false};
            long a = static_cast<long>(rng() % 9) - 4;
            gamma_ops(LambdaElement::hopf_sum(ring, a, -a), 8);
        }
        return true;
    });

    run_criterion(10, "Frick-Harrison parity predicate", 1.0, [](std::string& detail) {
        auto naive_binomial = [](long long n, long long k) {
            boost::multiprecision::cpp_int acc = 1;
            if (k < 0 || k > n)
                return boost::multiprecision::cpp_int(0);
            for (long long i = 0; i < k; ++i) {
                acc *= n - i;
                acc /= i + 1;
            }
            return acc;
        };
        std::mt19937_64 rng(161803);
        for (int trial = 0; trial < 500; ++trial) {
            long long l = static_cast<long long>(rng() % 64);
            long long m = static_cast<long long>(rng() % 64);
            long long k = static_cast<long long>(rng() % 64);
            long long r = static_cast<long long>(rng() % 4);
            long long d = static_cast<long long>(rng() % 80);
            bool expect = 0 <= l && l <= m && m <= k && m + r <= d &&
                          naive_binomial(k - l, k - m) % 2 != 0;
            if (charclass::frick_harrison_admissible(l, m, k, r, d) != expect) {
                detail = "parity mismatch";
                return false;
            }
        }
        for (long long m = 0; m <= 40; ++m)
            for (long long r = 0; r <= 3; ++r)
                if (!charclass::frick_harrison_admissible(m, m, m + 1, r, m + r)) {
                    detail = "reflection case rejected";
                    return false;
                }
        return true;
    });

    run_criterion(11, "CLI determinism across reruns and thread counts", 120.0,
                  [](std::string& detail) {
                      if (!std::getenv("EMBOBS_CLI")) {
                          detail = "EMBOBS_CLI not set";
                          return false;
                      }
                      auto tmp = std::filesystem::temp_directory_path();
                      auto fam = tmp / "embobs_acc_family.json";
                      std::ofstream(fam) << R"({"kind": "skeleton", "m": 2})";
                      auto pts = tmp / "embobs_acc_points.json";
                      std::ofstream(pts) << R"({"dimension": 2, "images": {
                          "v0": ["0","0"], "v1": ["1","0"], "v2": ["1/2","1"],
                          "v3": ["1/2","1/3"]}})";

                      std::vector<std::string> commands = {
                          "dualsw --rp 8",
                          "capd --rp 12",
                          "division --rp 4 --m 8",
                          "index --complex builtin:boundary:3",
                          "index --complex builtin:k5 --emit-cocycles",
                          "cover-check --complex builtin:boundary:4 --family " + fam.string() +
                              " --m 2 --r 1",
                          "coincide --complex builtin:boundary:3 --points " + pts.string(),
                          "coincide --complex builtin:k5 --random --seed 17 --dim 2",
                          "ktheory --d 6 --f 5 --n 6",
                          "fh --l 2 --m 3 --k 5 --r 1 --capD 7",
                      };
                      for (const auto& cmd : commands) {
                          RunResult a = run_cli(cmd);
                          RunResult b = run_cli(cmd);
                          if (a.exit_code != b.exit_code || a.exit_code < 0 ||
                              strip_timing(a.out) != strip_timing(b.out)) {
                              detail = "nondeterministic: " + cmd;
                              return false;
                          }
                      }
                      for (const auto& base :
                           {std::string("cover-check --complex builtin:boundary:5 --family ") +
                                fam.string() + " --m 2 --r 1",
                            std::string("coincide --complex builtin:k5 --random --seed 4 "
                                        "--dim 2")}) {
                          RunResult t1 = run_cli(base + " --threads 1");
                          RunResult t4 = run_cli(base + " --threads 4");
                          RunResult t7 = run_cli(base + " --threads 7");
                          if (strip_timing(t1.out) != strip_timing(t4.out) ||
                              strip_timing(t1.out) != strip_timing(t7.out)) {
                              detail = "thread count changed the report";
                              return false;
                          }
                      }
                      return true;
                  });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", g_failures);
    return 1;
}
