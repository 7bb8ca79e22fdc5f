#include "embobs.h"

#include "embobs/jsonio.hpp"

#include <cstring>
#include <new>
#include <string>

using embobs::io::json;

struct embobs_complex {
    embobs::simplicial::SimplicialComplex k;
};

struct embobs_quotient {
    embobs::deleted::QuotientComplex y;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// nlohmann's std::map-backed objects serialize with sorted keys, so dumps of
// equal values are byte-identical.
char* dup_json(const json& j)
{
    return dup_string(j.dump());
}

template <typename Fn> embobs_status guarded(Fn&& fn)
{
    try {
        fn();
        return EMBOBS_OK;
    } catch (const embobs::parse_error& e) {
        g_last_error = e.what();
        return EMBOBS_ERR_PARSE;
    } catch (const embobs::limit_error& e) {
        g_last_error = e.what();
        return EMBOBS_ERR_LIMIT;
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return EMBOBS_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return EMBOBS_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return EMBOBS_ERR_LIMIT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return EMBOBS_ERR_INTERNAL;
    }
}

json parse_json(const char* text, const char* what)
{
    if (!text)
        throw embobs::parse_error(std::string(what) + ": null input");
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw embobs::parse_error(std::string(what) + ": malformed JSON");
    return j;
}

embobs::charclass::ManifoldPresentation presentation_from(const char* text)
{
    return embobs::io::presentation_from_json(parse_json(text, "presentation"));
}

} // namespace

extern "C" {

const char* embobs_version(void)
{
    return "1.0.0";
}

const char* embobs_last_error(void)
{
    return g_last_error.c_str();
}

void embobs_string_free(char* s)
{
    delete[] s;
}

embobs_status embobs_complex_from_json(const char* text, embobs_complex** out)
{
    return guarded([&] {
        json j = parse_json(text, "complex");
        *out = new embobs_complex{embobs::io::complex_from_json(j)};
    });
}

embobs_status embobs_complex_boundary_simplex(int n, embobs_complex** out)
{
    return guarded([&] { *out = new embobs_complex{embobs::simplicial::boundary_of_simplex(n)}; });
}

embobs_status embobs_complex_minimal_rp2(embobs_complex** out)
{
    return guarded([&] { *out = new embobs_complex{embobs::simplicial::minimal_rp2()}; });
}

embobs_status embobs_complex_skeleton(const embobs_complex* k, int q, embobs_complex** out)
{
    return guarded([&] {
        if (!k)
            throw std::invalid_argument("skeleton: null complex");
        *out = new embobs_complex{embobs::simplicial::skeleton(k->k, q)};
    });
}

embobs_status embobs_complex_to_json(const embobs_complex* k, char** json_out)
{
    return guarded([&] {
        if (!k)
            throw std::invalid_argument("complex_to_json: null complex");
        *json_out = dup_json(embobs::io::complex_to_json(k->k));
    });
}

int embobs_complex_num_vertices(const embobs_complex* k)
{
    return k ? k->k.num_vertices() : -1;
}

int embobs_complex_dim(const embobs_complex* k)
{
    return k ? k->k.dim() : -2;
}

void embobs_complex_free(embobs_complex* k)
{
    delete k;
}

embobs_status embobs_dualsw_rp(int d, char** json_out)
{
    return guarded([&] {
        *json_out = dup_json(embobs::io::dualsw_report(embobs::charclass::projective_space(d)));
    });
}

embobs_status embobs_dualsw_total(const char* presentation_json, char** json_out)
{
    return guarded(
        [&] { *json_out = dup_json(embobs::io::dualsw_report(presentation_from(presentation_json))); });
}

embobs_status embobs_capd_rp(int d, char** json_out)
{
    return guarded([&] {
        *json_out = dup_json(embobs::io::capd_report(embobs::charclass::projective_space(d)));
    });
}

embobs_status embobs_capd_total(const char* presentation_json, char** json_out)
{
    return guarded(
        [&] { *json_out = dup_json(embobs::io::capd_report(presentation_from(presentation_json))); });
}

embobs_status embobs_division_rp(int d, int m, char** json_out)
{
    return guarded([&] {
        *json_out =
            dup_json(embobs::io::division_report(embobs::charclass::projective_space(d), m));
    });
}

embobs_status embobs_division_total(const char* presentation_json, int m, char** json_out)
{
    return guarded([&] {
        *json_out = dup_json(embobs::io::division_report(presentation_from(presentation_json), m));
    });
}

embobs_status embobs_fh_admissible(long long l, long long m, long long k, long long r,
                                   long long cap_d, int* admissible_out, char** json_out)
{
    return guarded([&] {
        bool ok = false;
        json j = embobs::io::fh_report(l, m, k, r, cap_d, &ok);
        if (admissible_out)
            *admissible_out = ok ? 1 : 0;
        if (json_out)
            *json_out = dup_json(j);
    });
}

embobs_status embobs_quotient_build(const embobs_complex* k, const char* mode,
                                    const char* family_json, int max_degree,
                                    embobs_quotient** out)
{
    return guarded([&] {
        if (!k || !mode)
            throw std::invalid_argument("quotient_build: null argument");
        std::string mode_str(mode);
        std::optional<json> family;
        if (mode_str == "family")
            family = parse_json(family_json, "family");
        std::optional<int> cap;
        if (max_degree >= 0)
            cap = max_degree;
        auto built = embobs::io::build_quotient(k->k, mode_str, family, cap);
        *out = new embobs_quotient{std::move(built.quotient)};
    });
}

embobs_status embobs_quotient_euler_power_nonzero(const embobs_quotient* y, int m,
                                                  int* nonzero_out)
{
    return guarded([&] {
        if (!y || !nonzero_out)
            throw std::invalid_argument("euler_power_nonzero: null argument");
        *nonzero_out = embobs::deleted::euler_power_nonzero(y->y, m) ? 1 : 0;
    });
}

embobs_status embobs_quotient_z2_index(const embobs_quotient* y, int* index_out)
{
    return guarded([&] {
        if (!y || !index_out)
            throw std::invalid_argument("z2_index: null argument");
        *index_out = embobs::deleted::z2_index(y->y);
    });
}

void embobs_quotient_free(embobs_quotient* y)
{
    delete y;
}

embobs_status embobs_index_report(const embobs_complex* k, const char* mode,
                                  const char* family_json, int max_degree, int emit_cocycles,
                                  char** json_out)
{
    return guarded([&] {
        if (!k || !mode)
            throw std::invalid_argument("index_report: null argument");
        std::optional<json> family;
        std::string mode_str(mode);
        if (mode_str == "family")
            family = parse_json(family_json, "family");
        std::optional<int> cap;
        if (max_degree >= 0)
            cap = max_degree;
        *json_out = dup_json(
            embobs::io::index_report(k->k, mode_str, family, cap, emit_cocycles != 0));
    });
}

embobs_status embobs_cover_check(const embobs_complex* k, const char* family_json, int m, int r,
                                 int threads, int* holds_out, char** json_out)
{
    return guarded([&] {
        if (!k)
            throw std::invalid_argument("cover_check: null complex");
        json fam = parse_json(family_json, "family");
        bool holds = false;
        json j = embobs::io::cover_report(k->k, fam, m, r, threads, &holds);
        if (holds_out)
            *holds_out = holds ? 1 : 0;
        if (json_out)
            *json_out = dup_json(j);
    });
}

embobs_status embobs_coincide(const embobs_complex* k, const char* points_json, int cap,
                              int threads, char** json_out)
{
    return guarded([&] {
        if (!k)
            throw std::invalid_argument("coincide: null complex");
        json pts = parse_json(points_json, "points");
        auto f = embobs::io::plmap_from_json(k->k, pts);
        std::optional<int> pair_cap;
        if (cap >= 0)
            pair_cap = cap;
        *json_out = dup_json(embobs::io::coincide_report(k->k, f, pair_cap, threads));
    });
}

embobs_status embobs_random_plmap(const embobs_complex* k, int target_dim,
                                  unsigned long long seed, long denom_bound, char** json_out)
{
    return guarded([&] {
        if (!k)
            throw std::invalid_argument("random_plmap: null complex");
        auto f = embobs::coincide::random_plmap(k->k, target_dim, seed, denom_bound);
        *json_out = dup_json(embobs::io::plmap_to_json(k->k, f));
    });
}

embobs_status embobs_ktheory(int d, unsigned f, int n, char** json_out)
{
    return guarded([&] { *json_out = dup_json(embobs::io::ktheory_report(d, f, n)); });
}

} // extern "C"
