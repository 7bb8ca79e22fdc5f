#ifndef EMBOBS_SIMPLICIAL_HPP
#define EMBOBS_SIMPLICIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace embobs {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace simplicial {

using Rational = boost::multiprecision::cpp_rational;

// Sorted vertex ids; ids index the lexicographically ordered label list.
using Simplex = std::vector<int>;

// Finite abstract simplicial complex: ordered vertex labels and a
// downward-closed set of nonempty simplices.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Closure of the facets is computed; extra isolated vertices allowed.
    static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                         const std::vector<std::vector<std::string>>& facets);

    const std::vector<std::string>& vertex_labels() const { return labels_; }
    int num_vertices() const { return static_cast<int>(labels_.size()); }
    const std::set<Simplex>& simplices() const { return simplices_; }
    const std::vector<Simplex>& facets() const { return facets_; }

    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    int dim() const; // -1 when empty
    std::size_t size() const { return simplices_.size(); }
    std::vector<std::size_t> simplex_counts_per_dim() const;

    int vertex_id(const std::string& label) const; // -1 when absent
    Simplex to_ids(const std::vector<std::string>& labels) const;
    std::vector<std::string> to_labels(const Simplex& s) const;

    bool is_downward_closed() const;

private:
    std::vector<std::string> labels_;
    std::set<Simplex> simplices_;
    std::vector<Simplex> facets_;

    void recompute_facets();
    friend SimplicialComplex from_simplex_set(std::vector<std::string>, std::set<Simplex>);
};

// Builds a complex from an explicit simplex set (must be downward closed).
SimplicialComplex from_simplex_set(std::vector<std::string> labels, std::set<Simplex> simplices);

// Simplices of cardinality <= q+1.
SimplicialComplex skeleton(const SimplicialComplex& k, int q);

// All proper nonempty subsets of an (n+1)-vertex set; labels v0..vn.
SimplicialComplex boundary_of_simplex(int n);

// Join: sigma cup tau over sigma in S1 + {}, tau in S2 + {}, not both empty.
// Throws on clashing vertex labels.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

// The 6-vertex triangulation of the real projective plane.
SimplicialComplex minimal_rp2();

// Exact barycentric coordinates on a complex: nonnegative rational weights
// summing to 1 whose support is a simplex.
class BarycentricPoint {
public:
    BarycentricPoint(const SimplicialComplex& k, const std::map<std::string, Rational>& weights);

    const std::vector<Rational>& weights() const { return w_; }
    const Rational& weight(int vertex_id) const { return w_[static_cast<std::size_t>(vertex_id)]; }
    Simplex support() const;

    bool operator==(const BarycentricPoint& o) const { return w_ == o.w_; }

private:
    BarycentricPoint() = default;
    std::vector<Rational> w_;
    friend BarycentricPoint alpha(const BarycentricPoint&, const BarycentricPoint&);
};

// alpha(x,y)(v) = max{x(v)-y(v), 0} normalized; throws when x = y.
BarycentricPoint alpha(const BarycentricPoint& x, const BarycentricPoint& y);

// mu_j(x) = min over I in R_j + {} of the mass of x outside I.
Rational mu(const BarycentricPoint& x, const std::set<Simplex>& rj);

} // namespace simplicial
} // namespace embobs

#endif
