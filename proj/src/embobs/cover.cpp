#include "cover.hpp"

#include <algorithm>
#include <thread>

namespace embobs::simplicial {

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

bool is_subset(const Simplex& a, const Simplex& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::set<Simplex> CoverFamily::intersection() const
{
    if (members.empty())
        return {};
    std::set<Simplex> r = members.front();
    for (std::size_t j = 1; j < members.size(); ++j) {
        std::set<Simplex> next;
        for (const auto& s : members[j])
            if (r.count(s))
                next.insert(s);
        r = std::move(next);
    }
    return r;
}

SimplicialComplex subcomplex_of_family(const SimplicialComplex& k, const CoverFamily& family)
{
    std::set<Simplex> r = family.intersection();
    std::set<Simplex> a;
    for (const auto& s : r)
        if (k.contains(s))
            a.insert(s);
    return from_simplex_set(k.vertex_labels(), std::move(a));
}

CoverFamily skeleton_family(const SimplicialComplex& k, int m)
{
    CoverFamily f;
    f.members.emplace_back();
    for (const auto& s : k.simplices())
        if (2 * static_cast<int>(s.size()) <= m + 3)
            f.members.back().insert(s);
    return f;
}

CoverFamily partition_family(const SimplicialComplex& k,
                             const std::vector<std::vector<std::string>>& parts)
{
    std::vector<char> seen(static_cast<std::size_t>(k.num_vertices()), 0);
    std::vector<std::vector<int>> id_parts;
    for (const auto& part : parts) {
        if (part.empty())
            throw std::invalid_argument("partition_family: empty part");
        std::vector<int> ids;
        for (const auto& lab : part) {
            int id = k.vertex_id(lab);
            if (id < 0)
                throw std::invalid_argument("partition_family: unknown vertex '" + lab + "'");
            if (seen[static_cast<std::size_t>(id)])
                throw std::invalid_argument("partition_family: vertex '" + lab + "' repeated");
            seen[static_cast<std::size_t>(id)] = 1;
            ids.push_back(id);
        }
        std::sort(ids.begin(), ids.end());
        id_parts.push_back(std::move(ids));
    }
    for (char c : seen)
        if (!c)
            throw std::invalid_argument("partition_family: parts do not cover the vertex set");

    CoverFamily f;
    for (const auto& part : id_parts) {
        std::set<Simplex> rj;
        for (const auto& s : k.simplices()) {
            std::size_t inter = 0;
            for (int v : s)
                if (std::binary_search(part.begin(), part.end(), v))
                    ++inter;
            if (2 * inter < part.size())
                rj.insert(s);
        }
        f.members.push_back(std::move(rj));
    }
    return f;
}

std::optional<CoverViolation> verify_cover_hypothesis(const SimplicialComplex& k,
                                                      const CoverFamily& family, int m, int r,
                                                      int threads)
{
    if (static_cast<int>(family.size()) != r)
        throw std::invalid_argument("verify_cover_hypothesis: family must have r members");
    if (threads < 1)
        threads = 1;

    std::vector<Simplex> all(k.simplices().begin(), k.simplices().end());
    std::size_t n = all.size();
    if (n * n > (std::size_t{1} << 24))
        throw limit_error("verify_cover_hypothesis: simplex pair enumeration cap exceeded");

    for (std::size_t j = 0; j < family.size(); ++j) {
        const auto& rj = family.members[j];

        // Lexicographically least violating pair; parallel chunks each keep
        // their least index, merged by minimum afterwards.
        auto scan = [&](std::size_t lo, std::size_t hi, std::size_t& best_a, std::size_t& best_b) {
            best_a = n;
            best_b = n;
            for (std::size_t a = lo; a < hi; ++a) {
                if (rj.count(all[a]))
                    continue;
                for (std::size_t b = a + 1; b < n; ++b) {
                    int total = static_cast<int>(all[a].size()) - 1 +
                                static_cast<int>(all[b].size()) - 1;
                    if (total > m + r)
                        continue;
                    if (!disjoint(all[a], all[b]))
                        continue;
                    if (rj.count(all[b]))
                        continue;
                    best_a = a;
                    best_b = b;
                    return;
                }
            }
        };

        std::size_t found_a = n, found_b = n;
        if (threads == 1 || n < 64) {
            scan(0, n, found_a, found_b);
        } else {
            std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
            std::vector<std::size_t> best_a(nt, n), best_b(nt, n);
            std::vector<std::thread> pool;
            std::size_t chunk = (n + nt - 1) / nt;
            for (std::size_t t = 0; t < nt; ++t) {
                std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
                pool.emplace_back([&, t, lo, hi] { scan(lo, hi, best_a[t], best_b[t]); });
            }
            for (auto& th : pool)
                th.join();
            for (std::size_t t = 0; t < nt; ++t) {
                if (best_a[t] < found_a || (best_a[t] == found_a && best_b[t] < found_b)) {
                    found_a = best_a[t];
                    found_b = best_b[t];
                }
            }
        }

        if (found_a < n)
            return CoverViolation{j + 1, all[found_a], all[found_b]};
    }
    return std::nullopt;
}

std::set<Simplex> minimal_excluded(const SimplicialComplex& k, const CoverFamily& family)
{
    std::set<Simplex> r = family.intersection();
    std::vector<Simplex> excluded;
    for (const auto& s : k.simplices())
        if (!r.count(s))
            excluded.push_back(s);

    std::set<Simplex> gamma;
    for (const auto& s : excluded) {
        bool minimal = true;
        for (const auto& t : excluded) {
            if (t != s && is_subset(t, s)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            gamma.insert(s);
    }
    return gamma;
}

std::vector<std::set<Simplex>> gamma_pieces(const std::set<Simplex>& gamma,
                                            const CoverFamily& family)
{
    std::vector<std::set<Simplex>> c;
    for (const auto& rj : family.members) {
        std::set<Simplex> cj;
        for (const auto& s : gamma)
            if (!rj.count(s))
                cj.insert(s);
        c.push_back(std::move(cj));
    }
    return c;
}

bool gamma_cover_check(const SimplicialComplex& k, const std::set<Simplex>& gamma,
                       const std::vector<std::set<Simplex>>& c, int m, int r,
                       std::string* reason)
{
    auto fail = [&](const std::string& why) {
        if (reason)
            *reason = why;
        return false;
    };

    if (static_cast<int>(c.size()) != r)
        throw std::invalid_argument("gamma_cover_check: expected r pieces");
    for (const auto& s : gamma)
        if (!k.contains(s))
            return fail("gamma contains a non-simplex");

    // (i) Gamma = union of the C_j.
    std::set<Simplex> covered;
    for (const auto& cj : c) {
        for (const auto& s : cj) {
            if (!gamma.count(s))
                return fail("C_j contains an element outside gamma");
            covered.insert(s);
        }
    }
    if (covered != gamma)
        return fail("gamma is not covered by the C_j");

    // (ii) members of each C_j overlap or are jointly large.
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (const auto& a : c[j]) {
            for (const auto& b : c[j]) {
                if (a > b)
                    continue;
                if (static_cast<int>(a.size() + b.size()) > m + r + 2)
                    continue;
                if (!disjoint(a, b))
                    continue;
                return fail("C_" + std::to_string(j + 1) +
                            " has small disjoint members");
            }
        }
    }

    // Induced R_j = { I in S : no I' in C_j is contained in I }.
    CoverFamily induced;
    for (const auto& cj : c) {
        std::set<Simplex> rj;
        for (const auto& s : k.simplices()) {
            bool blocked = false;
            for (const auto& excl : cj) {
                if (is_subset(excl, s)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked)
                rj.insert(s);
        }
        induced.members.push_back(std::move(rj));
    }
    if (auto v = verify_cover_hypothesis(k, induced, m, r))
        return fail("induced family violates the cover hypothesis at member " +
                    std::to_string(v->member));
    return true;
}

} // namespace embobs::simplicial
