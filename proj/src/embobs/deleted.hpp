#ifndef EMBOBS_DELETED_HPP
#define EMBOBS_DELETED_HPP

#include "gf2.hpp"
#include "simplicial.hpp"

#include <compare>
#include <optional>

namespace embobs::deleted {

using simplicial::Simplex;
using simplicial::SimplicialComplex;

// One cell of the combinatorial deleted product: an ordered pair of disjoint
// simplices, of dimension dim(first) + dim(second).
struct PairCell {
    Simplex first, second;

    int dim() const { return static_cast<int>(first.size() + second.size()) - 2; }
    PairCell swapped() const { return PairCell{second, first}; }
    auto operator<=>(const PairCell&) const = default;
};

// Regular pair-cell complex of ordered disjoint simplex pairs with the free
// swap involution. Boundary is ('d'sigma, tau) + (sigma, 'd'tau) mod 2.
class FreeInvolutionComplex {
public:
    int max_degree() const { return static_cast<int>(cells_.size()) - 1; }
    std::optional<int> cap() const { return cap_; }

    std::size_t cell_count(int n) const;
    const std::vector<PairCell>& cells(int n) const;
    std::size_t index_of(int n, const PairCell& c) const;

    // Faces of the i-th n-cell as indices into degree n-1.
    const std::vector<std::uint32_t>& faces(int n, std::size_t i) const;
    std::uint32_t swap_index(int n, std::size_t i) const;

    gf2::BitMatrix boundary_matrix(int n) const; // rows: (n-1)-cells, cols: n-cells

    bool involution_is_free() const;
    std::size_t total_cells() const;

private:
    std::vector<std::vector<PairCell>> cells_;
    std::vector<std::vector<std::vector<std::uint32_t>>> faces_;
    std::vector<std::vector<std::uint32_t>> swap_;
    std::optional<int> cap_;

    friend FreeInvolutionComplex build_deleted_product(const std::set<Simplex>&,
                                                       std::optional<int>);
};

// Full deleted product of K.
FreeInvolutionComplex deleted_product(const SimplicialComplex& k);
// Cells of total dimension <= cap only.
FreeInvolutionComplex deleted_product_capped(const SimplicialComplex& k, int cap);
// Pairs drawn from a subcomplex A of K, with an optional cap.
FreeInvolutionComplex deleted_product_of_subcomplex(const SimplicialComplex& k,
                                                    const SimplicialComplex& a,
                                                    std::optional<int> cap = std::nullopt);

struct Cochain {
    int degree = 0;
    gf2::BitVector bits; // indexed by the orbit cells of that degree
};

// Orbit complex of the swap involution, carrying the transfer/projection
// data of the mod-2 Smith sequence 0 -> C(Y) -> C(X) -> C(Y) -> 0.
class QuotientComplex {
public:
    explicit QuotientComplex(FreeInvolutionComplex x);

    const FreeInvolutionComplex& pair_complex() const { return x_; }
    int max_degree() const { return x_.max_degree(); }
    std::optional<int> cap() const { return x_.cap(); }

    std::size_t orbit_count(int n) const;
    const std::vector<PairCell>& orbit_cells(int n) const; // canonical reps, sorted
    std::size_t total_cells() const;

    gf2::BitMatrix boundary_matrix(int n) const;   // orbit chains
    gf2::BitMatrix transfer_matrix(int n) const;   // C_n(Y) -> C_n(X)
    gf2::BitMatrix projection_matrix(int n) const; // C_n(X) -> C_n(Y)

    Cochain zero_cochain(int degree) const;
    Cochain unit_cocycle() const; // all-ones in degree 0

    bool is_cocycle(const Cochain& c) const;
    bool is_coboundary(const Cochain& c) const;

    // Internal indexing helpers (used by the connecting homomorphism).
    std::uint32_t orbit_of(int n, std::size_t x_index) const;
    bool is_canonical(int n, std::size_t x_index) const;
    std::size_t rep_x_index(int n, std::size_t orbit) const;

private:
    FreeInvolutionComplex x_;
    std::vector<std::vector<PairCell>> orbit_;
    std::vector<std::vector<std::uint32_t>> orbit_of_;    // per degree, X index -> orbit
    std::vector<std::vector<std::uint32_t>> rep_index_;   // per degree, orbit -> X index
    std::vector<std::vector<std::vector<std::uint32_t>>> orbit_faces_;
};

QuotientComplex quotient(FreeInvolutionComplex x);

// Connecting homomorphism of the Smith sequence: lift a degree-n cocycle
// through the canonical section (lexicographically least orbit member), take
// the coboundary upstairs and divide by the projection. Realizes cup product
// with e(lambda); throws when the input is not a cocycle.
Cochain smith_connecting(const QuotientComplex& y, const Cochain& c);

// Whether e(lambda)^m != 0 in H^m(Y): iterate the connecting homomorphism m
// times from the unit 0-cocycle and test coboundary membership.
bool euler_power_nonzero(const QuotientComplex& y, int m);

// Largest m <= max degree with e(lambda)^m != 0; -1 for an empty complex.
int z2_index(const QuotientComplex& y);

// As z2_index, but also reports the representative cocycles.
struct IndexComputation {
    int index = -1;
    bool saturated_at_cap = false;       // index reached a degree cap
    std::vector<Cochain> power_reps;     // e(lambda)^m representatives, m = 0..index
};
IndexComputation z2_index_detailed(const QuotientComplex& y);

} // namespace embobs::deleted

#endif
