#ifndef EMBOBS_COVER_HPP
#define EMBOBS_COVER_HPP

#include "simplicial.hpp"

#include <optional>

namespace embobs::simplicial {

// Family R_1..R_r of allowed supports inside the simplex set of a complex.
struct CoverFamily {
    std::vector<std::set<Simplex>> members;

    std::size_t size() const { return members.size(); }
    std::set<Simplex> intersection() const;
};

// A = { x : supp(x) in R }; throws when the result is not downward closed.
SimplicialComplex subcomplex_of_family(const SimplicialComplex& k, const CoverFamily& family);

// R_1 = { I in S : 2 #I <= m+3 }.
CoverFamily skeleton_family(const SimplicialComplex& k, int m);

// R_j = { I in S : 2 #(I cap V_j) < #V_j } for a partition V = sqcup V_j.
CoverFamily partition_family(const SimplicialComplex& k,
                             const std::vector<std::vector<std::string>>& parts);

struct CoverViolation {
    std::size_t member;   // 1-based index j
    Simplex first, second; // disjoint I, J with neither in R_j
};

// Checks: for each j and all disjoint I, J in S with #I-1 + #J-1 <= m+r,
// either I or J lies in R_j. Returns the lexicographically least violation
// (by j, then I, then J with I < J) or nullopt. Enumeration is capped at
// 2^24 simplex pairs per member.
std::optional<CoverViolation> verify_cover_hypothesis(const SimplicialComplex& k,
                                                      const CoverFamily& family, int m, int r,
                                                      int threads = 1);

// Minimal elements of S - R, the excluded-face generators Gamma.
std::set<Simplex> minimal_excluded(const SimplicialComplex& k, const CoverFamily& family);

// C_j = { I' in Gamma : I' not in R_j }.
std::vector<std::set<Simplex>> gamma_pieces(const std::set<Simplex>& gamma,
                                            const CoverFamily& family);

// Verifies (i) Gamma = union C_j, (ii) members of each C_j either overlap or
// have combined cardinality > m+r+2, and that the induced families
// R_j = { I : no I' in C_j with I' subseteq I } satisfy the cover hypothesis.
// On failure an explanation is written to *reason when given.
bool gamma_cover_check(const SimplicialComplex& k, const std::set<Simplex>& gamma,
                       const std::vector<std::set<Simplex>>& c, int m, int r,
                       std::string* reason = nullptr);

} // namespace embobs::simplicial

#endif
