#include "jsonio.hpp"

#include <algorithm>

namespace embobs::io {

using boost::multiprecision::cpp_int;

std::string rational_to_string(const Rational& r)
{
    cpp_int num = numerator(r), den = denominator(r);
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(cpp_int(s));
        cpp_int num(s.substr(0, slash));
        cpp_int den(s.substr(slash + 1));
        if (den == 0)
            throw parse_error("rational with zero denominator: '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("malformed rational: '" + s + "'");
    }
}

SimplicialComplex complex_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw parse_error("complex file must provide 'vertices' and 'facets'");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string())
            throw parse_error("vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) {
        std::vector<std::string> facet;
        for (const auto& v : f) {
            if (!v.is_string())
                throw parse_error("facet entries must be vertex labels");
            facet.push_back(v.get<std::string>());
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(std::move(vertices), facets);
}

json complex_to_json(const SimplicialComplex& k)
{
    json j;
    j["vertices"] = k.vertex_labels();
    json facets = json::array();
    for (const auto& f : k.facets())
        facets.push_back(k.to_labels(f));
    j["facets"] = std::move(facets);
    return j;
}

simplicial::CoverFamily family_from_json(const SimplicialComplex& k, const json& j)
{
    if (!j.is_object() || !j.contains("kind"))
        throw parse_error("family file must provide 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "skeleton") {
        if (!j.contains("m"))
            throw parse_error("skeleton family needs 'm'");
        return simplicial::skeleton_family(k, j.at("m").get<int>());
    }
    if (kind == "partition") {
        if (!j.contains("parts"))
            throw parse_error("partition family needs 'parts'");
        std::vector<std::vector<std::string>> parts;
        for (const auto& p : j.at("parts"))
            parts.push_back(p.get<std::vector<std::string>>());
        try {
            return simplicial::partition_family(k, parts);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }
    if (kind == "explicit") {
        if (!j.contains("members"))
            throw parse_error("explicit family needs 'members'");
        simplicial::CoverFamily f;
        for (const auto& member : j.at("members")) {
            std::set<simplicial::Simplex> rj;
            for (const auto& s : member) {
                simplicial::Simplex ids = k.to_ids(s.get<std::vector<std::string>>());
                if (!k.contains(ids))
                    throw parse_error("family member lists a non-simplex");
                rj.insert(std::move(ids));
            }
            f.members.push_back(std::move(rj));
        }
        return f;
    }
    throw parse_error("unknown family kind '" + kind + "'");
}

coincide::PLMap plmap_from_json(const SimplicialComplex& k, const json& j)
{
    if (!j.is_object() || !j.contains("dimension") || !j.contains("images"))
        throw parse_error("points file must provide 'dimension' and 'images'");
    int m = j.at("dimension").get<int>();
    std::map<std::string, std::vector<Rational>> images;
    for (const auto& [lab, coords] : j.at("images").items()) {
        std::vector<Rational> point;
        for (const auto& c : coords)
            point.push_back(rational_from_string(c.get<std::string>()));
        images[lab] = std::move(point);
    }
    return coincide::PLMap::from_labels(k, m, images);
}

json plmap_to_json(const SimplicialComplex& k, const coincide::PLMap& f)
{
    json images = json::object();
    for (int v = 0; v < k.num_vertices(); ++v) {
        json coords = json::array();
        for (const auto& c : f.image[static_cast<std::size_t>(v)])
            coords.push_back(rational_to_string(c));
        images[k.vertex_labels()[static_cast<std::size_t>(v)]] = std::move(coords);
    }
    return json{{"dimension", f.target_dim}, {"images", std::move(images)}};
}

json witness_to_json(const SimplicialComplex& k, const coincide::CoincidenceWitness& w)
{
    auto rationals = [](const std::vector<Rational>& v) {
        json arr = json::array();
        for (const auto& r : v)
            arr.push_back(rational_to_string(r));
        return arr;
    };
    json j;
    j["sigma"] = k.to_labels(w.sigma);
    j["tau"] = k.to_labels(w.tau);
    j["x"] = rationals(w.x);
    j["y"] = rationals(w.y);
    j["point"] = rationals(w.point);
    j["dim_bound"] = w.dim_bound;
    return j;
}

namespace {

// Monomial strings: "1", "T", "T^3", "T^2*U".
gf2::Poly monomial_from_string(const gf2::RingPtr& ring, const std::string& s)
{
    gf2::Monomial mono(ring->arity(), 0);
    if (s != "1") {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t star = s.find('*', pos);
            std::string factor = s.substr(pos, star == std::string::npos ? star : star - pos);
            std::size_t caret = factor.find('^');
            std::string name = factor.substr(0, caret);
            unsigned long exp = 1;
            if (caret != std::string::npos) {
                try {
                    exp = std::stoul(factor.substr(caret + 1));
                } catch (const std::exception&) {
                    throw parse_error("malformed exponent in monomial '" + s + "'");
                }
            }
            bool found = false;
            for (std::size_t g = 0; g < ring->arity(); ++g) {
                if (ring->generators()[g].name == name) {
                    mono[g] += static_cast<std::uint32_t>(exp);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw parse_error("unknown generator '" + name + "' in monomial '" + s + "'");
            pos = star == std::string::npos ? s.size() : star + 1;
        }
    }
    gf2::Poly p(ring);
    p.add_term(mono, 1);
    return p;
}

json poly_to_monomials(const gf2::Poly& p)
{
    json arr = json::array();
    for (const auto& [mono, c] : p.terms()) {
        (void)c;
        std::string s;
        const auto& gens = p.ring()->generators();
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (mono[g] == 0)
                continue;
            if (!s.empty())
                s += "*";
            s += gens[g].name;
            if (mono[g] > 1)
                s += "^" + std::to_string(mono[g]);
        }
        arr.push_back(s.empty() ? "1" : s);
    }
    return arr;
}

} // namespace

charclass::ManifoldPresentation presentation_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("dimension") || !j.contains("generators") ||
        !j.contains("total"))
        throw parse_error("presentation needs 'dimension', 'generators' and 'total'");
    int d = j.at("dimension").get<int>();
    if (d < 1)
        throw parse_error("presentation dimension must be >= 1");

    std::vector<gf2::Generator> gens;
    for (const auto& g : j.at("generators")) {
        gf2::Generator gen;
        gen.name = g.at("name").get<std::string>();
        gen.degree = g.value("degree", 1u);
        gen.truncation = g.at("truncation").get<unsigned>();
        if (gen.degree == 0 || gen.truncation == 0)
            throw parse_error("generators need positive degree and truncation");
        gens.push_back(std::move(gen));
    }
    gf2::RingPtr ring = gf2::make_ring(gf2::Domain::f2, std::move(gens));

    const json& total = j.at("total");
    if (!total.is_array() || static_cast<int>(total.size()) != d + 1)
        throw parse_error("'total' must list components 0..dimension");

    charclass::CharClassVector w;
    w.ring = ring;
    for (int i = 0; i <= d; ++i) {
        gf2::Poly comp = gf2::Poly::zero(ring);
        for (const auto& mono : total.at(static_cast<std::size_t>(i)))
            comp = comp + monomial_from_string(ring, mono.get<std::string>());
        if (comp != comp.component_of_degree(static_cast<unsigned>(i)))
            throw parse_error("total class component " + std::to_string(i) +
                              " has the wrong degree");
        w.comp.push_back(std::move(comp));
    }
    try {
        w.validate();
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
    return charclass::ManifoldPresentation{ring, d, std::move(w)};
}

json char_vector_to_json(const charclass::CharClassVector& v)
{
    json arr = json::array();
    for (const auto& c : v.comp)
        arr.push_back(poly_to_monomials(c));
    return arr;
}

json dualsw_report(const charclass::ManifoldPresentation& mp)
{
    charclass::CharClassVector dual = charclass::dual_total_class(mp.tangent_total);
    json j;
    j["dimension"] = mp.dim;
    j["tangent_total"] = char_vector_to_json(mp.tangent_total);
    j["dual_total"] = char_vector_to_json(dual);
    j["D"] = charclass::cap_d(mp);
    j["manifold_bounds_ok"] = charclass::within_manifold_bounds(mp);
    return j;
}

json capd_report(const charclass::ManifoldPresentation& mp)
{
    json j;
    j["dimension"] = mp.dim;
    j["D"] = charclass::cap_d(mp);
    j["manifold_bounds_ok"] = charclass::within_manifold_bounds(mp);
    return j;
}

json division_report(const charclass::ManifoldPresentation& mp, int m)
{
    json j;
    j["dimension"] = mp.dim;
    j["m"] = m;
    std::optional<gf2::Poly> a = charclass::division_witness(mp, m);
    j["exists"] = a.has_value();
    if (a)
        j["witness"] = a->to_string();
    return j;
}

namespace {

json quotient_summary(const deleted::QuotientComplex& y)
{
    json pair_counts = json::array(), orbit_counts = json::array();
    for (int n = 0; n <= y.max_degree(); ++n) {
        pair_counts.push_back(y.pair_complex().cell_count(n));
        orbit_counts.push_back(y.orbit_count(n));
    }
    return json{{"pair_cells_per_degree", std::move(pair_counts)},
                {"orbit_cells_per_degree", std::move(orbit_counts)}};
}

} // namespace

QuotientBuild build_quotient(const SimplicialComplex& k, const std::string& mode,
                             const std::optional<json>& family, std::optional<int> max_degree)
{
    deleted::FreeInvolutionComplex x;
    std::optional<std::size_t> subcomplex_size;
    if (mode == "full") {
        x = max_degree ? deleted::deleted_product_capped(k, *max_degree)
                       : deleted::deleted_product(k);
    } else if (mode.rfind("cap:", 0) == 0) {
        int m;
        try {
            m = std::stoi(mode.substr(4));
        } catch (const std::exception&) {
            throw parse_error("malformed cap mode '" + mode + "'");
        }
        if (max_degree && *max_degree < m)
            m = *max_degree;
        x = deleted::deleted_product_capped(k, m);
    } else if (mode == "family") {
        if (!family)
            throw parse_error("family mode needs a family file");
        simplicial::CoverFamily fam = family_from_json(k, *family);
        SimplicialComplex a = simplicial::subcomplex_of_family(k, fam);
        subcomplex_size = a.size();
        x = deleted::deleted_product_of_subcomplex(k, a, max_degree);
    } else {
        throw parse_error("unknown index mode '" + mode + "'");
    }
    return QuotientBuild{deleted::QuotientComplex(std::move(x)), subcomplex_size};
}

json index_report(const SimplicialComplex& k, const std::string& mode,
                  const std::optional<json>& family, std::optional<int> max_degree,
                  bool emit_cocycles)
{
    json j;
    j["mode"] = mode;
    QuotientBuild built = build_quotient(k, mode, family, max_degree);
    if (built.subcomplex_size)
        j["subcomplex_size"] = *built.subcomplex_size;

    deleted::QuotientComplex& y = built.quotient;
    deleted::IndexComputation comp = deleted::z2_index_detailed(y);

    j["summary"] = quotient_summary(y);
    j["index"] = comp.index;
    j["saturated_at_cap"] = comp.saturated_at_cap;
    if (y.cap())
        j["cap"] = *y.cap();
    if (emit_cocycles) {
        json reps = json::array();
        for (const auto& c : comp.power_reps)
            reps.push_back(json{{"degree", c.degree}, {"bits", c.bits.to_string()}});
        j["euler_power_cocycles"] = std::move(reps);
    }
    return j;
}

json cover_report(const SimplicialComplex& k, const json& family, int m, int r, int threads,
                  bool* holds_out)
{
    simplicial::CoverFamily fam = family_from_json(k, family);
    if (static_cast<int>(fam.size()) != r)
        throw parse_error("family has " + std::to_string(fam.size()) + " members, expected r = " +
                          std::to_string(r));
    auto violation = simplicial::verify_cover_hypothesis(k, fam, m, r, threads);
    json j;
    j["m"] = m;
    j["r"] = r;
    j["holds"] = !violation.has_value();
    if (violation) {
        j["counterexample"] = json{{"member", violation->member},
                                   {"I", k.to_labels(violation->first)},
                                   {"J", k.to_labels(violation->second)}};
    } else {
        SimplicialComplex a = simplicial::subcomplex_of_family(k, fam);
        j["subcomplex_size"] = a.size();
        j["subcomplex_dim"] = a.dim();
    }
    if (holds_out)
        *holds_out = !violation.has_value();
    return j;
}

json coincide_report(const SimplicialComplex& k, const coincide::PLMap& f,
                     std::optional<int> cap, int threads)
{
    auto witnesses = coincide::find_coincidences(k, f, cap, threads);
    json arr = json::array();
    for (const auto& w : witnesses)
        arr.push_back(witness_to_json(k, w));
    json j;
    j["target_dimension"] = f.target_dim;
    if (cap)
        j["cap"] = *cap;
    j["witness_count"] = witnesses.size();
    j["witnesses"] = std::move(arr);
    return j;
}

json ktheory_report(int d, unsigned f, int n)
{
    if (n < 0)
        throw parse_error("ktheory: table size must be >= 0");
    std::vector<gf2::KElem> gammas = lambda::atiyah_gammas(d, f, n);
    json table = json::array();
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        table.push_back(json{{"i", i},
                             {"free", gammas[i].free_part().str()},
                             {"mu", gammas[i].mu_part().str()}});
    }
    json j;
    j["d"] = d;
    j["f"] = f;
    j["gamma"] = std::move(table);
    j["atiyah_bound"] = lambda::atiyah_bound(d, f);
    return j;
}

json fh_report(long long l, long long m, long long k, long long r, long long cap_d,
               bool* admissible_out)
{
    bool ok = charclass::frick_harrison_admissible(l, m, k, r, cap_d);
    if (admissible_out)
        *admissible_out = ok;
    return json{{"l", l}, {"m", m}, {"k", k}, {"r", r}, {"capD", cap_d}, {"admissible", ok}};
}

} // namespace embobs::io
