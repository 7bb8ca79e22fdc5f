#ifndef EMBOBS_COINCIDE_HPP
#define EMBOBS_COINCIDE_HPP

#include "lp.hpp"
#include "simplicial.hpp"

#include <cstdint>
#include <optional>

namespace embobs::coincide {

using simplicial::Simplex;
using simplicial::SimplicialComplex;

// Affine map K -> R^m given by exact rational vertex images.
struct PLMap {
    int target_dim = 0;
    std::vector<std::vector<Rational>> image; // per vertex id

    static PLMap from_labels(const SimplicialComplex& k, int m,
                             const std::map<std::string, std::vector<Rational>>& images);
    std::vector<Rational> at_vertex(int id) const { return image[static_cast<std::size_t>(id)]; }
};

struct CoincidenceWitness {
    Simplex sigma, tau;              // disjoint, sigma < tau
    std::vector<Rational> x, y;      // barycentric weights along sigma / tau
    std::vector<Rational> point;     // the common image f(x) = f(y)
    int dim_bound = 0;               // #sigma-1 + #tau-1

    bool verify(const PLMap& f) const;
};

// Exact feasibility of f(x) = f(y) over the pair of closed simplices; the
// witness is the lexicographically least feasible (x, y).
std::optional<CoincidenceWitness> pair_feasible(const SimplicialComplex& k, const PLMap& f,
                                                const Simplex& sigma, const Simplex& tau);

// All feasible disjoint unordered pairs within the optional dimension cap,
// ordered by (sigma, tau).
std::vector<CoincidenceWitness> find_coincidences(const SimplicialComplex& k, const PLMap& f,
                                                  std::optional<int> cap = std::nullopt,
                                                  int threads = 1);

// Reproducible rational vertex images: coordinates p/q with q <= denom_bound.
PLMap random_plmap(const SimplicialComplex& k, int m, std::uint64_t seed, long denom_bound);

// Minimum L-infinity distance between the images of two disjoint simplices.
Rational pair_min_gap(const SimplicialComplex& k, const PLMap& f, const Simplex& sigma,
                      const Simplex& tau);

struct HomotopyStep {
    Rational time;
    std::vector<CoincidenceWitness> witnesses;
    std::optional<Rational> gap; // smallest pair gap when no witness exists
};

struct HomotopyScanReport {
    std::vector<HomotopyStep> steps;
    bool witness_found = false;
    std::optional<Rational> min_gap;
    bool within_tolerance = false; // some gap <= tolerance (or witness found)
};

// Grid demonstration of the reflection coincidence statement: endpoint maps
// must differ exactly by negating the reflected coordinate. Existence of an
// exact coincidence time is not decided, only probed on the grid.
HomotopyScanReport homotopy_scan(const SimplicialComplex& a,
                                 const std::vector<std::pair<Rational, PLMap>>& h,
                                 const Rational& tolerance, int reflect_axis = -1,
                                 std::optional<int> cap = std::nullopt);

} // namespace embobs::coincide

#endif
