#include "coincide.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace embobs::coincide {

namespace {

bool disjoint(const Simplex& a, const Simplex& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

// Equality rows for { f|sigma (x) = f|tau (y), sum x = 1, sum y = 1 }.
void coincidence_rows(const PLMap& f, const Simplex& sigma, const Simplex& tau,
                      std::size_t extra_vars, std::vector<std::vector<Rational>>& a,
                      std::vector<Rational>& b)
{
    std::size_t p = sigma.size(), q = tau.size();
    std::size_t vars = p + q + extra_vars;
    int m = f.target_dim;

    for (int j = 0; j < m; ++j) {
        std::vector<Rational> row(vars, Rational(0));
        for (std::size_t i = 0; i < p; ++i)
            row[i] = f.image[static_cast<std::size_t>(sigma[i])][static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < q; ++i)
            row[p + i] = -f.image[static_cast<std::size_t>(tau[i])][static_cast<std::size_t>(j)];
        a.push_back(std::move(row));
        b.emplace_back(0);
    }
    std::vector<Rational> sx(vars, Rational(0)), sy(vars, Rational(0));
    for (std::size_t i = 0; i < p; ++i)
        sx[i] = 1;
    for (std::size_t i = 0; i < q; ++i)
        sy[p + i] = 1;
    a.push_back(std::move(sx));
    b.emplace_back(1);
    a.push_back(std::move(sy));
    b.emplace_back(1);
}

} // namespace

PLMap PLMap::from_labels(const SimplicialComplex& k, int m,
                         const std::map<std::string, std::vector<Rational>>& images)
{
    if (m < 1)
        throw std::invalid_argument("PLMap: target dimension must be >= 1");
    PLMap f;
    f.target_dim = m;
    f.image.assign(static_cast<std::size_t>(k.num_vertices()), {});
    for (const auto& [lab, coords] : images) {
        int id = k.vertex_id(lab);
        if (id < 0)
            throw parse_error("points file names unknown vertex '" + lab + "'");
        if (static_cast<int>(coords.size()) != m)
            throw parse_error("vertex '" + lab + "' has the wrong coordinate count");
        f.image[static_cast<std::size_t>(id)] = coords;
    }
    for (int v = 0; v < k.num_vertices(); ++v)
        if (f.image[static_cast<std::size_t>(v)].empty())
            throw parse_error("vertex '" + k.vertex_labels()[static_cast<std::size_t>(v)] +
                              "' has no image");
    return f;
}

bool CoincidenceWitness::verify(const PLMap& f) const
{
    if (!disjoint(sigma, tau))
        return false;
    Rational sum_x(0), sum_y(0);
    for (const auto& v : x)
        sum_x += v;
    for (const auto& v : y)
        sum_y += v;
    if (sum_x != 1 || sum_y != 1)
        return false;
    for (const auto& v : x)
        if (v < 0)
            return false;
    for (const auto& v : y)
        if (v < 0)
            return false;

    for (int j = 0; j < f.target_dim; ++j) {
        Rational lhs(0), rhs(0);
        for (std::size_t i = 0; i < sigma.size(); ++i)
            lhs += x[i] * f.image[static_cast<std::size_t>(sigma[i])][static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < tau.size(); ++i)
            rhs += y[i] * f.image[static_cast<std::size_t>(tau[i])][static_cast<std::size_t>(j)];
        if (lhs != rhs || lhs != point[static_cast<std::size_t>(j)])
            return false;
    }
    return true;
}

std::optional<CoincidenceWitness> pair_feasible(const SimplicialComplex& k, const PLMap& f,
                                                const Simplex& sigma, const Simplex& tau)
{
    if (!k.contains(sigma) || !k.contains(tau))
        throw std::invalid_argument("pair_feasible: arguments must be simplices of the complex");
    if (!disjoint(sigma, tau))
        throw std::invalid_argument("pair_feasible: simplices must be disjoint");

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    coincidence_rows(f, sigma, tau, 0, a, b);

    std::vector<Rational> z = lex_min_feasible(a, b);
    if (z.empty())
        return std::nullopt;

    CoincidenceWitness w;
    w.sigma = sigma;
    w.tau = tau;
    w.x.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(sigma.size()));
    w.y.assign(z.begin() + static_cast<std::ptrdiff_t>(sigma.size()), z.end());
    w.dim_bound = static_cast<int>(sigma.size() + tau.size()) - 2;
    w.point.assign(static_cast<std::size_t>(f.target_dim), Rational(0));
    for (int j = 0; j < f.target_dim; ++j)
        for (std::size_t i = 0; i < sigma.size(); ++i)
            w.point[static_cast<std::size_t>(j)] +=
                w.x[i] * f.image[static_cast<std::size_t>(sigma[i])][static_cast<std::size_t>(j)];
    if (!w.verify(f))
        throw std::logic_error("pair_feasible: witness failed exact verification");
    return w;
}

std::vector<CoincidenceWitness> find_coincidences(const SimplicialComplex& k, const PLMap& f,
                                                  std::optional<int> cap, int threads)
{
    if (static_cast<int>(f.image.size()) != k.num_vertices())
        throw std::invalid_argument("find_coincidences: map does not cover the vertex set");

    std::vector<std::pair<Simplex, Simplex>> pairs;
    for (const auto& sigma : k.simplices()) {
        for (const auto& tau : k.simplices()) {
            if (!(sigma < tau))
                continue;
            if (!disjoint(sigma, tau))
                continue;
            int d = static_cast<int>(sigma.size() + tau.size()) - 2;
            if (cap && d > *cap)
                continue;
            pairs.emplace_back(sigma, tau);
        }
    }

    std::vector<std::optional<CoincidenceWitness>> found(pairs.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            found[i] = pair_feasible(k, f, pairs[i].first, pairs[i].second);
    };
    if (threads <= 1 || pairs.size() < 16) {
        work(0, pairs.size());
    } else {
        std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), pairs.size());
        std::vector<std::thread> pool;
        std::size_t chunk = (pairs.size() + nt - 1) / nt;
        for (std::size_t t = 0; t < nt; ++t) {
            std::size_t lo = t * chunk, hi = std::min(pairs.size(), lo + chunk);
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    std::vector<CoincidenceWitness> out;
    for (auto& w : found)
        if (w)
            out.push_back(std::move(*w));
    return out;
}

PLMap random_plmap(const SimplicialComplex& k, int m, std::uint64_t seed, long denom_bound)
{
    if (m < 1)
        throw std::invalid_argument("random_plmap: target dimension must be >= 1");
    if (denom_bound < 1)
        throw std::invalid_argument("random_plmap: denominator bound must be >= 1");

    std::mt19937_64 rng(seed);
    // the stream must not depend on std::uniform_int_distribution internals
    auto draw = [&rng](std::uint64_t n) { return rng() % n; };

    PLMap f;
    f.target_dim = m;
    f.image.resize(static_cast<std::size_t>(k.num_vertices()));
    for (int v = 0; v < k.num_vertices(); ++v) {
        auto& coords = f.image[static_cast<std::size_t>(v)];
        coords.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            std::uint64_t q = 1 + draw(static_cast<std::uint64_t>(denom_bound));
            std::uint64_t p = draw(2 * q + 1); // numerator offset in [0, 2q]
            Rational val(static_cast<long long>(p) - static_cast<long long>(q),
                         static_cast<long long>(q));
            coords.push_back(val);
        }
    }
    return f;
}

Rational pair_min_gap(const SimplicialComplex& k, const PLMap& f, const Simplex& sigma,
                      const Simplex& tau)
{
    if (!k.contains(sigma) || !k.contains(tau))
        throw std::invalid_argument("pair_min_gap: arguments must be simplices of the complex");

    // Variables: x, y, s, then 2m slack columns; minimize s subject to
    // |f(x) - f(y)|_j <= s for each coordinate.
    std::size_t p = sigma.size(), q = tau.size();
    int m = f.target_dim;
    std::size_t vars = p + q + 1 + 2 * static_cast<std::size_t>(m);
    std::size_t s_col = p + q;

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int j = 0; j < m; ++j) {
        std::vector<Rational> up(vars, Rational(0)), down(vars, Rational(0));
        for (std::size_t i = 0; i < p; ++i) {
            Rational v = f.image[static_cast<std::size_t>(sigma[i])][static_cast<std::size_t>(j)];
            up[i] = v;
            down[i] = v;
        }
        for (std::size_t i = 0; i < q; ++i) {
            Rational v = f.image[static_cast<std::size_t>(tau[i])][static_cast<std::size_t>(j)];
            up[p + i] = -v;
            down[p + i] = -v;
        }
        // diff - s + slack = 0  and  diff + s - slack' = 0
        up[s_col] = -1;
        up[s_col + 1 + static_cast<std::size_t>(2 * j)] = 1;
        down[s_col] = 1;
        down[s_col + 1 + static_cast<std::size_t>(2 * j + 1)] = -1;
        a.push_back(std::move(up));
        b.emplace_back(0);
        a.push_back(std::move(down));
        b.emplace_back(0);
    }
    std::vector<Rational> sx(vars, Rational(0)), sy(vars, Rational(0));
    for (std::size_t i = 0; i < p; ++i)
        sx[i] = 1;
    for (std::size_t i = 0; i < q; ++i)
        sy[p + i] = 1;
    a.push_back(std::move(sx));
    b.emplace_back(1);
    a.push_back(std::move(sy));
    b.emplace_back(1);

    std::vector<Rational> cost(vars, Rational(0));
    cost[s_col] = 1;
    LpResult r = solve_lp(a, b, cost);
    if (r.status != LpResult::Status::optimal)
        throw std::logic_error("pair_min_gap: bounded feasible program expected");
    return r.objective;
}

HomotopyScanReport homotopy_scan(const SimplicialComplex& a,
                                 const std::vector<std::pair<Rational, PLMap>>& h,
                                 const Rational& tolerance, int reflect_axis,
                                 std::optional<int> cap)
{
    if (h.size() < 2)
        throw std::invalid_argument("homotopy_scan: need at least the two endpoint maps");
    int m = h.front().second.target_dim;
    int axis = reflect_axis < 0 ? m - 1 : reflect_axis;
    if (axis < 0 || axis >= m)
        throw std::invalid_argument("homotopy_scan: reflection axis out of range");

    const PLMap& first = h.front().second;
    const PLMap& last = h.back().second;
    for (int v = 0; v < a.num_vertices(); ++v) {
        for (int j = 0; j < m; ++j) {
            Rational expect = first.image[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
            if (j == axis)
                expect = -expect;
            if (last.image[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] != expect)
                throw std::invalid_argument(
                    "homotopy_scan: endpoints are not mirror images across the axis");
        }
    }

    HomotopyScanReport report;
    for (const auto& [t, f] : h) {
        HomotopyStep step;
        step.time = t;
        step.witnesses = find_coincidences(a, f, cap);
        if (step.witnesses.empty()) {
            Rational best(-1);
            for (const auto& sigma : a.simplices()) {
                for (const auto& tau : a.simplices()) {
                    if (!(sigma < tau) || !disjoint(sigma, tau))
                        continue;
                    if (cap && static_cast<int>(sigma.size() + tau.size()) - 2 > *cap)
                        continue;
                    Rational g = pair_min_gap(a, f, sigma, tau);
                    if (best < 0 || g < best)
                        best = g;
                }
            }
            if (best >= 0)
                step.gap = best;
        } else {
            report.witness_found = true;
            step.gap = Rational(0);
        }
        if (step.gap && (!report.min_gap || *step.gap < *report.min_gap))
            report.min_gap = *step.gap;
        report.steps.push_back(std::move(step));
    }
    report.within_tolerance =
        report.witness_found || (report.min_gap && *report.min_gap <= tolerance);
    return report;
}

} // namespace embobs::coincide
