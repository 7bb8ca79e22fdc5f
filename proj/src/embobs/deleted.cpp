#include "deleted.hpp"

#include <algorithm>
#include <stdexcept>

namespace embobs::deleted {

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

constexpr std::size_t kMaxCells = std::size_t{1} << 24;

} // namespace

FreeInvolutionComplex build_deleted_product(const std::set<Simplex>& source,
                                            std::optional<int> cap)
{
    FreeInvolutionComplex x;
    x.cap_ = cap;

    std::size_t total = 0;
    std::vector<std::vector<PairCell>> by_degree;
    for (const auto& sigma : source) {
        for (const auto& tau : source) {
            if (!disjoint(sigma, tau))
                continue;
            int d = static_cast<int>(sigma.size() + tau.size()) - 2;
            if (cap && d > *cap)
                continue;
            if (static_cast<std::size_t>(d) >= by_degree.size())
                by_degree.resize(static_cast<std::size_t>(d) + 1);
            by_degree[static_cast<std::size_t>(d)].push_back(PairCell{sigma, tau});
            if (++total > kMaxCells)
                throw limit_error("deleted product exceeds the cell cap");
        }
    }
    for (auto& cells : by_degree)
        std::sort(cells.begin(), cells.end());
    x.cells_ = std::move(by_degree);

    // Face lists: drop one vertex from either factor.
    x.faces_.resize(x.cells_.size());
    for (std::size_t n = 0; n < x.cells_.size(); ++n) {
        x.faces_[n].resize(x.cells_[n].size());
        if (n == 0)
            continue;
        for (std::size_t i = 0; i < x.cells_[n].size(); ++i) {
            const PairCell& c = x.cells_[n][i];
            auto& out = x.faces_[n][i];
            if (c.first.size() > 1) {
                for (std::size_t v = 0; v < c.first.size(); ++v) {
                    PairCell f = c;
                    f.first.erase(f.first.begin() + static_cast<std::ptrdiff_t>(v));
                    out.push_back(static_cast<std::uint32_t>(
                        x.index_of(static_cast<int>(n) - 1, f)));
                }
            }
            if (c.second.size() > 1) {
                for (std::size_t v = 0; v < c.second.size(); ++v) {
                    PairCell f = c;
                    f.second.erase(f.second.begin() + static_cast<std::ptrdiff_t>(v));
                    out.push_back(static_cast<std::uint32_t>(
                        x.index_of(static_cast<int>(n) - 1, f)));
                }
            }
            std::sort(out.begin(), out.end());
        }
    }

    x.swap_.resize(x.cells_.size());
    for (std::size_t n = 0; n < x.cells_.size(); ++n) {
        x.swap_[n].resize(x.cells_[n].size());
        for (std::size_t i = 0; i < x.cells_[n].size(); ++i)
            x.swap_[n][i] = static_cast<std::uint32_t>(
                x.index_of(static_cast<int>(n), x.cells_[n][i].swapped()));
    }
    return x;
}

FreeInvolutionComplex deleted_product(const SimplicialComplex& k)
{
    return build_deleted_product(k.simplices(), std::nullopt);
}

FreeInvolutionComplex deleted_product_capped(const SimplicialComplex& k, int cap)
{
    if (cap < 0)
        throw std::invalid_argument("deleted_product_capped: cap must be >= 0");
    return build_deleted_product(k.simplices(), cap);
}

FreeInvolutionComplex deleted_product_of_subcomplex(const SimplicialComplex& k,
                                                    const SimplicialComplex& a,
                                                    std::optional<int> cap)
{
    // Translate into K's vertex id space; A may use a sublist of K's labels.
    std::set<Simplex> source;
    for (const auto& s : a.simplices()) {
        Simplex t = k.to_ids(a.to_labels(s));
        if (!k.contains(t))
            throw std::invalid_argument("deleted_product_of_subcomplex: A is not contained in K");
        source.insert(std::move(t));
    }
    return build_deleted_product(source, cap);
}

std::size_t FreeInvolutionComplex::cell_count(int n) const
{
    if (n < 0 || n > max_degree())
        return 0;
    return cells_[static_cast<std::size_t>(n)].size();
}

const std::vector<PairCell>& FreeInvolutionComplex::cells(int n) const
{
    static const std::vector<PairCell> empty;
    if (n < 0 || n > max_degree())
        return empty;
    return cells_[static_cast<std::size_t>(n)];
}

std::size_t FreeInvolutionComplex::index_of(int n, const PairCell& c) const
{
    const auto& v = cells_[static_cast<std::size_t>(n)];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it == v.end() || *it != c)
        throw std::logic_error("FreeInvolutionComplex: cell not found");
    return static_cast<std::size_t>(it - v.begin());
}

const std::vector<std::uint32_t>& FreeInvolutionComplex::faces(int n, std::size_t i) const
{
    return faces_[static_cast<std::size_t>(n)][i];
}

std::uint32_t FreeInvolutionComplex::swap_index(int n, std::size_t i) const
{
    return swap_[static_cast<std::size_t>(n)][i];
}

gf2::BitMatrix FreeInvolutionComplex::boundary_matrix(int n) const
{
    std::size_t rows = cell_count(n - 1), cols = cell_count(n);
    gf2::BitMatrix b(rows, cols);
    for (std::size_t i = 0; i < cols; ++i)
        for (auto f : faces(n, i))
            b.set(f, i, !b.get(f, i)); // mod-2 accumulate
    return b;
}

bool FreeInvolutionComplex::involution_is_free() const
{
    for (std::size_t n = 0; n < swap_.size(); ++n)
        for (std::size_t i = 0; i < swap_[n].size(); ++i)
            if (swap_[n][i] == i)
                return false;
    return true;
}

std::size_t FreeInvolutionComplex::total_cells() const
{
    std::size_t t = 0;
    for (const auto& c : cells_)
        t += c.size();
    return t;
}

QuotientComplex::QuotientComplex(FreeInvolutionComplex x) : x_(std::move(x))
{
    if (!x_.involution_is_free())
        throw std::invalid_argument("QuotientComplex: involution has a fixed cell");

    int degrees = x_.max_degree() + 1;
    orbit_.resize(static_cast<std::size_t>(degrees));
    orbit_of_.resize(static_cast<std::size_t>(degrees));
    rep_index_.resize(static_cast<std::size_t>(degrees));
    orbit_faces_.resize(static_cast<std::size_t>(degrees));

    for (int n = 0; n < degrees; ++n) {
        const auto& cells = x_.cells(n);
        auto& reps = orbit_[static_cast<std::size_t>(n)];
        auto& of = orbit_of_[static_cast<std::size_t>(n)];
        auto& ri = rep_index_[static_cast<std::size_t>(n)];
        of.assign(cells.size(), 0);

        // Canonical representative: the lexicographically least orbit member.
        // Cells are sorted, so reps appear in sorted order too.
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i] < cells[i].swapped()) {
                of[i] = static_cast<std::uint32_t>(reps.size());
                reps.push_back(cells[i]);
                ri.push_back(static_cast<std::uint32_t>(i));
            }
        }
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (!(cells[i] < cells[i].swapped()))
                of[i] = of[x_.swap_index(n, i)];
    }

    for (int n = 1; n < degrees; ++n) {
        auto& ofc = orbit_faces_[static_cast<std::size_t>(n)];
        ofc.resize(orbit_count(n));
        for (std::size_t o = 0; o < orbit_count(n); ++o) {
            std::vector<std::uint32_t> fs;
            std::size_t rep = rep_x_index(n, o);
            for (auto f : x_.faces(n, rep))
                fs.push_back(orbit_of(n - 1, f));
            std::sort(fs.begin(), fs.end());
            ofc[o] = std::move(fs);
        }
    }
}

QuotientComplex quotient(FreeInvolutionComplex x)
{
    return QuotientComplex(std::move(x));
}

std::size_t QuotientComplex::orbit_count(int n) const
{
    if (n < 0 || n > max_degree())
        return 0;
    return orbit_[static_cast<std::size_t>(n)].size();
}

const std::vector<PairCell>& QuotientComplex::orbit_cells(int n) const
{
    static const std::vector<PairCell> empty;
    if (n < 0 || n > max_degree())
        return empty;
    return orbit_[static_cast<std::size_t>(n)];
}

std::size_t QuotientComplex::total_cells() const
{
    std::size_t t = 0;
    for (const auto& o : orbit_)
        t += o.size();
    return t;
}

std::uint32_t QuotientComplex::orbit_of(int n, std::size_t x_index) const
{
    return orbit_of_[static_cast<std::size_t>(n)][x_index];
}

bool QuotientComplex::is_canonical(int n, std::size_t x_index) const
{
    const PairCell& c = x_.cells(n)[x_index];
    return c < c.swapped();
}

std::size_t QuotientComplex::rep_x_index(int n, std::size_t orbit) const
{
    return rep_index_[static_cast<std::size_t>(n)][orbit];
}

gf2::BitMatrix QuotientComplex::boundary_matrix(int n) const
{
    std::size_t rows = orbit_count(n - 1), cols = orbit_count(n);
    gf2::BitMatrix b(rows, cols);
    if (n < 1 || n > max_degree())
        return b;
    for (std::size_t o = 0; o < cols; ++o)
        for (auto f : orbit_faces_[static_cast<std::size_t>(n)][o])
            b.set(f, o, !b.get(f, o));
    return b;
}

gf2::BitMatrix QuotientComplex::transfer_matrix(int n) const
{
    gf2::BitMatrix t(x_.cell_count(n), orbit_count(n));
    for (std::size_t i = 0; i < x_.cell_count(n); ++i)
        t.set(i, orbit_of(n, i), true);
    return t;
}

gf2::BitMatrix QuotientComplex::projection_matrix(int n) const
{
    gf2::BitMatrix p(orbit_count(n), x_.cell_count(n));
    for (std::size_t i = 0; i < x_.cell_count(n); ++i)
        p.set(orbit_of(n, i), i, true);
    return p;
}

Cochain QuotientComplex::zero_cochain(int degree) const
{
    return Cochain{degree, gf2::BitVector(orbit_count(degree))};
}

Cochain QuotientComplex::unit_cocycle() const
{
    Cochain c = zero_cochain(0);
    for (std::size_t i = 0; i < c.bits.size(); ++i)
        c.bits.set(i, true);
    return c;
}

bool QuotientComplex::is_cocycle(const Cochain& c) const
{
    int up = c.degree + 1;
    if (up > max_degree())
        return true; // no cells above: condition is vacuous
    for (std::size_t o = 0; o < orbit_count(up); ++o) {
        bool v = false;
        for (auto f : orbit_faces_[static_cast<std::size_t>(up)][o])
            v ^= c.bits.get(f);
        if (v)
            return false;
    }
    return true;
}

bool QuotientComplex::is_coboundary(const Cochain& c) const
{
    if (c.degree == 0)
        return !c.bits.any();
    gf2::BitMatrix delta = boundary_matrix(c.degree).transposed();
    return gf2::solve(delta, c.bits).has_value();
}

Cochain smith_connecting(const QuotientComplex& y, const Cochain& c)
{
    int n = c.degree;
    if (c.bits.size() != y.orbit_count(n))
        throw std::invalid_argument("smith_connecting: cochain length mismatch");
    if (!y.is_cocycle(c))
        throw std::invalid_argument("smith_connecting: input is not a cocycle");

    const FreeInvolutionComplex& x = y.pair_complex();
    int up = n + 1;
    Cochain w = y.zero_cochain(up);
    if (up > y.max_degree())
        return w;

    // Lift through the section supported on canonical representatives.
    gf2::BitVector u(x.cell_count(n));
    for (std::size_t i = 0; i < u.size(); ++i)
        if (y.is_canonical(n, i))
            u.set(i, c.bits.get(y.orbit_of(n, i)));

    // Coboundary upstairs, then divide by the (injective) projection pullback.
    gf2::BitVector du(x.cell_count(up));
    for (std::size_t e = 0; e < du.size(); ++e) {
        bool v = false;
        for (auto f : x.faces(up, e))
            v ^= u.get(f);
        du.set(e, v);
    }
    for (std::size_t o = 0; o < y.orbit_count(up); ++o) {
        std::size_t rep = y.rep_x_index(up, o);
        bool v = du.get(rep);
        if (v != du.get(x.swap_index(up, rep)))
            throw std::logic_error("smith_connecting: coboundary is not equivariant");
        w.bits.set(o, v);
    }
    if (!y.is_cocycle(w))
        throw std::logic_error("smith_connecting: output failed the cocycle check");
    return w;
}

bool euler_power_nonzero(const QuotientComplex& y, int m)
{
    if (m < 0)
        throw std::invalid_argument("euler_power_nonzero: m must be >= 0");
    if (y.cap() && m > *y.cap())
        throw std::invalid_argument("euler_power_nonzero: complex capped below m");
    if (m > y.max_degree())
        return false;

    Cochain c = y.unit_cocycle();
    for (int step = 0; step < m; ++step)
        c = smith_connecting(y, c);
    return !y.is_coboundary(c);
}

int z2_index(const QuotientComplex& y)
{
    return z2_index_detailed(y).index;
}

IndexComputation z2_index_detailed(const QuotientComplex& y)
{
    IndexComputation out;
    if (y.orbit_count(0) == 0)
        return out;

    Cochain c = y.unit_cocycle();
    int m = 0;
    while (true) {
        if (y.is_coboundary(c))
            break;
        out.index = m;
        out.power_reps.push_back(c);
        if (m == y.max_degree())
            break;
        c = smith_connecting(y, c);
        ++m;
    }
    out.saturated_at_cap = y.cap() && out.index == *y.cap();
    return out;
}

} // namespace embobs::deleted
