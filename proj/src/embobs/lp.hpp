#ifndef EMBOBS_LP_HPP
#define EMBOBS_LP_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace embobs::coincide {

using Rational = boost::multiprecision::cpp_rational;

// Exact rational linear program in standard form:
//   minimize c.z  subject to  A z = b, z >= 0.
// Two-phase simplex with Bland's rule; terminates on every input.
struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    std::vector<Rational> solution; // basic feasible solution when optimal
    Rational objective = 0;
};

LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

// The lexicographically least feasible point of {A z = b, z >= 0}, obtained
// by minimizing the coordinates in index order; empty when infeasible.
std::vector<Rational> lex_min_feasible(std::vector<std::vector<Rational>> a,
                                       std::vector<Rational> b);

} // namespace embobs::coincide

#endif
