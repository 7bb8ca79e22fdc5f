#include "simplicial.hpp"

#include <algorithm>

namespace embobs::simplicial {

namespace {

constexpr std::size_t kMaxSimplices = std::size_t{1} << 22;

void insert_closure(std::set<Simplex>& out, const Simplex& facet)
{
    // All nonempty subsets via bitmask enumeration; facets stay desk-scale.
    if (facet.size() > 24)
        throw limit_error("simplex closure: facet has more than 24 vertices");
    std::uint32_t full = (facet.size() == 32) ? ~0u : ((1u << facet.size()) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < facet.size(); ++i)
            if (mask & (1u << i))
                s.push_back(facet[i]);
        out.insert(std::move(s));
        if (out.size() > kMaxSimplices)
            throw limit_error("simplicial complex exceeds the simplex cap");
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& facets)
{
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw parse_error("duplicate vertex label");

    SimplicialComplex k;
    k.labels_ = std::move(vertices);

    for (const auto& f : facets) {
        Simplex s;
        for (const auto& lab : f) {
            int id = k.vertex_id(lab);
            if (id < 0)
                throw parse_error("facet uses unknown vertex '" + lab + "'");
            s.push_back(id);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw parse_error("facet repeats a vertex");
        if (s.empty())
            throw parse_error("empty facet");
        insert_closure(k.simplices_, s);
    }
    k.recompute_facets();
    return k;
}

SimplicialComplex from_simplex_set(std::vector<std::string> labels, std::set<Simplex> simplices)
{
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    k.simplices_ = std::move(simplices);
    if (!k.is_downward_closed())
        throw std::invalid_argument("from_simplex_set: set is not downward closed");
    k.recompute_facets();
    return k;
}

void SimplicialComplex::recompute_facets()
{
    facets_.clear();
    for (const auto& s : simplices_) {
        // Maximal iff no coface obtained by inserting one vertex is present.
        bool maximal = true;
        for (int v = 0; v < num_vertices() && maximal; ++v) {
            if (std::binary_search(s.begin(), s.end(), v))
                continue;
            Simplex t = s;
            t.insert(std::lower_bound(t.begin(), t.end(), v), v);
            if (simplices_.count(t))
                maximal = false;
        }
        if (maximal)
            facets_.push_back(s);
    }
}

int SimplicialComplex::dim() const
{
    int d = -1;
    for (const auto& s : simplices_)
        d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

std::vector<std::size_t> SimplicialComplex::simplex_counts_per_dim() const
{
    std::vector<std::size_t> counts(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& s : simplices_)
        ++counts[s.size() - 1];
    return counts;
}

int SimplicialComplex::vertex_id(const std::string& label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return -1;
    return static_cast<int>(it - labels_.begin());
}

Simplex SimplicialComplex::to_ids(const std::vector<std::string>& labels) const
{
    Simplex s;
    for (const auto& lab : labels) {
        int id = vertex_id(lab);
        if (id < 0)
            throw parse_error("unknown vertex '" + lab + "'");
        s.push_back(id);
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<std::string> SimplicialComplex::to_labels(const Simplex& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (int id : s)
        out.push_back(labels_.at(static_cast<std::size_t>(id)));
    return out;
}

bool SimplicialComplex::is_downward_closed() const
{
    for (const auto& s : simplices_) {
        if (s.size() == 1)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            if (!simplices_.count(face))
                return false;
        }
    }
    return true;
}

SimplicialComplex skeleton(const SimplicialComplex& k, int q)
{
    if (q < 0)
        throw std::invalid_argument("skeleton: q must be >= 0");
    std::set<Simplex> out;
    for (const auto& s : k.simplices())
        if (static_cast<int>(s.size()) <= q + 1)
            out.insert(s);
    return from_simplex_set(k.vertex_labels(), std::move(out));
}

SimplicialComplex boundary_of_simplex(int n)
{
    if (n < 1)
        throw std::invalid_argument("boundary_of_simplex: n must be >= 1");
    if (n > 20)
        throw limit_error("boundary_of_simplex: vertex set too large");
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i)
        labels.push_back("v" + std::to_string(i));
    std::sort(labels.begin(), labels.end());

    std::set<Simplex> all;
    int count = n + 1;
    for (std::uint32_t mask = 1; mask + 1 < (1u << count); ++mask) {
        Simplex s;
        for (int i = 0; i < count; ++i)
            if (mask & (1u << i))
                s.push_back(i);
        all.insert(std::move(s));
    }
    return from_simplex_set(std::move(labels), std::move(all));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2)
{
    for (const auto& lab : k2.vertex_labels())
        if (k1.vertex_id(lab) >= 0)
            throw std::invalid_argument("join: vertex label clash on '" + lab + "'");

    std::vector<std::string> labels = k1.vertex_labels();
    labels.insert(labels.end(), k2.vertex_labels().begin(), k2.vertex_labels().end());
    std::sort(labels.begin(), labels.end());

    SimplicialComplex merged;
    auto remap = [&labels](const SimplicialComplex& k, const Simplex& s) {
        Simplex out;
        for (int id : s) {
            const std::string& lab = k.vertex_labels()[static_cast<std::size_t>(id)];
            out.push_back(static_cast<int>(
                std::lower_bound(labels.begin(), labels.end(), lab) - labels.begin()));
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    std::set<Simplex> out;
    for (const auto& s : k1.simplices())
        out.insert(remap(k1, s));
    for (const auto& t : k2.simplices())
        out.insert(remap(k2, t));
    for (const auto& s : k1.simplices()) {
        Simplex rs = remap(k1, s);
        for (const auto& t : k2.simplices()) {
            Simplex rt = remap(k2, t);
            Simplex u = rs;
            u.insert(u.end(), rt.begin(), rt.end());
            std::sort(u.begin(), u.end());
            out.insert(std::move(u));
            if (out.size() > kMaxSimplices)
                throw limit_error("join exceeds the simplex cap");
        }
    }
    return from_simplex_set(std::move(labels), std::move(out));
}

SimplicialComplex minimal_rp2()
{
    // Antipodal quotient of the icosahedron on vertices 1..6.
    std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6"};
    std::vector<std::vector<std::string>> facets = {
        {"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "5"}, {"1", "4", "6"}, {"1", "5", "6"},
        {"2", "3", "6"}, {"2", "4", "5"}, {"2", "5", "6"}, {"3", "4", "5"}, {"3", "4", "6"}};
    return SimplicialComplex::from_facets(std::move(labels), facets);
}

BarycentricPoint::BarycentricPoint(const SimplicialComplex& k,
                                   const std::map<std::string, Rational>& weights)
{
    w_.assign(static_cast<std::size_t>(k.num_vertices()), Rational(0));
    Rational sum(0);
    for (const auto& [lab, val] : weights) {
        int id = k.vertex_id(lab);
        if (id < 0)
            throw parse_error("barycentric point uses unknown vertex '" + lab + "'");
        if (val < 0)
            throw std::invalid_argument("barycentric weights must be nonnegative");
        w_[static_cast<std::size_t>(id)] = val;
        sum += val;
    }
    if (sum != 1)
        throw std::invalid_argument("barycentric weights must sum to 1");
    if (!k.contains(support()))
        throw std::invalid_argument("barycentric support is not a simplex of the complex");
}

Simplex BarycentricPoint::support() const
{
    Simplex s;
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] > 0)
            s.push_back(static_cast<int>(i));
    return s;
}

BarycentricPoint alpha(const BarycentricPoint& x, const BarycentricPoint& y)
{
    if (x.weights().size() != y.weights().size())
        throw std::invalid_argument("alpha: points live on different complexes");
    if (x == y)
        throw std::invalid_argument("alpha: undefined on the diagonal");

    std::vector<Rational> diff(x.weights().size(), Rational(0));
    Rational denom(0);
    for (std::size_t v = 0; v < diff.size(); ++v) {
        Rational d = x.weights()[v] - y.weights()[v];
        if (d > 0) {
            diff[v] = d;
            denom += d;
        }
    }
    BarycentricPoint out;
    out.w_.resize(diff.size());
    for (std::size_t v = 0; v < diff.size(); ++v)
        out.w_[v] = diff[v] / denom;
    return out;
}

Rational mu(const BarycentricPoint& x, const std::set<Simplex>& rj)
{
    Rational total(0);
    for (const auto& w : x.weights())
        total += w;

    Rational best = total; // I = {} leaves all mass outside
    for (const auto& simplex : rj) {
        Rational inside(0);
        for (int v : simplex)
            inside += x.weight(v);
        Rational outside = total - inside;
        if (outside < best)
            best = outside;
    }
    return best;
}

} // namespace embobs::simplicial
