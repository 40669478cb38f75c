#include "actdim/vk.hpp"

#include <algorithm>
#include <tuple>

namespace actdim {

ConfigCell ConfigCell::make(Simplex a, Simplex b)
{
    if (b < a)
        std::swap(a, b);
    return ConfigCell{std::move(a), std::move(b)};
}

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

Simplex drop(const Simplex& s, std::size_t i)
{
    Simplex out;
    out.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i)
            out.push_back(s[j]);
    return out;
}

const std::vector<ConfigCell> kNoCells;

}  // namespace

ConfigComplex::ConfigComplex(SimplicialComplex k) : k_(std::move(k))
{
    std::vector<Simplex> all;
    for (int d = 0; d <= k_.dim(); ++d)
        all.insert(all.end(), k_.faces(d).begin(), k_.faces(d).end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (!disjoint(all[i], all[j]))
                continue;
            ConfigCell c = ConfigCell::make(all[i], all[j]);
            const auto d = static_cast<std::size_t>(c.dim());
            if (cells_.size() <= d)
                cells_.resize(d + 1);
            cells_[d].push_back(std::move(c));
        }
    }
    index_.resize(cells_.size());
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        std::sort(cells_[d].begin(), cells_[d].end());
        for (std::size_t i = 0; i < cells_[d].size(); ++i)
            index_[d].emplace(cells_[d][i], i);
    }
}

const std::vector<ConfigCell>& ConfigComplex::cells(int n) const
{
    if (n < 0 || n > dim())
        return kNoCells;
    return cells_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> ConfigComplex::find(const ConfigCell& c) const
{
    const int d = c.dim();
    if (d < 0 || d > dim())
        return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    auto it = idx.find(c);
    if (it == idx.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::size_t> ConfigComplex::boundary_of(int n, std::size_t i) const
{
    const ConfigCell& c = cells(n).at(i);
    std::vector<std::size_t> out;
    auto add = [&](Simplex a, Simplex b) {
        auto j = find(ConfigCell::make(std::move(a), std::move(b)));
        check_internal(j.has_value(), "configuration complex is not closed under faces");
        out.push_back(*j);
    };
    if (c.first.size() > 1)
        for (std::size_t k = 0; k < c.first.size(); ++k)
            add(drop(c.first, k), c.second);
    if (c.second.size() > 1)
        for (std::size_t k = 0; k < c.second.size(); ++k)
            add(c.first, drop(c.second, k));
    std::sort(out.begin(), out.end());
    return out;
}

gf2::Matrix ConfigComplex::boundary_matrix(int n) const
{
    std::vector<std::vector<std::size_t>> cols;
    if (n >= 1)
        for (std::size_t i = 0; i < count(n); ++i)
            cols.push_back(boundary_of(n, i));
    else
        cols.resize(count(n));
    return gf2::Matrix::from_columns(count(n - 1), cols);
}

std::string ConfigComplex::cell_label(const ConfigCell& c) const
{
    return "{" + simplex_label(k_, c.first) + "," + simplex_label(k_, c.second) + "}";
}

VertexOrdering VertexOrdering::identity(std::size_t n)
{
    VertexOrdering o;
    for (std::size_t i = 0; i < n; ++i)
        o.rank.push_back(static_cast<int>(i));
    return o;
}

VertexOrdering VertexOrdering::from_sequence(const std::vector<Vertex>& sequence, std::size_t n)
{
    require(sequence.size() == n, "ordering must list every vertex exactly once");
    VertexOrdering o;
    o.rank.assign(n, -1);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const Vertex v = sequence[i];
        require(v >= 0 && static_cast<std::size_t>(v) < n, "ordering names an unknown vertex");
        require(o.rank[static_cast<std::size_t>(v)] < 0, "ordering repeats a vertex");
        o.rank[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return o;
}

std::vector<Vertex> VertexOrdering::sequence() const
{
    std::vector<Vertex> seq(rank.size());
    for (std::size_t v = 0; v < rank.size(); ++v)
        seq[static_cast<std::size_t>(rank[v])] = static_cast<Vertex>(v);
    return seq;
}

gf2::BitVec to_bits(const std::vector<std::size_t>& support, std::size_t n)
{
    gf2::BitVec v(n);
    for (auto i : support)
        v.set(i);
    return v;
}

std::vector<std::size_t> from_bits(const gf2::BitVec& v)
{
    return v.support();
}

bool meshed(const Simplex& sigma, const Simplex& tau, const VertexOrdering& order)
{
    require(disjoint(sigma, tau), "meshed: simplices overlap");
    const auto a = static_cast<long>(sigma.size());
    const auto b = static_cast<long>(tau.size());
    if (std::abs(a - b) > 1)
        return false;
    std::vector<std::pair<int, int>> seq;
    for (Vertex v : sigma)
        seq.emplace_back(order.rank.at(static_cast<std::size_t>(v)), 0);
    for (Vertex v : tau)
        seq.emplace_back(order.rank.at(static_cast<std::size_t>(v)), 1);
    std::sort(seq.begin(), seq.end());
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].second == seq[i - 1].second)
            return false;
    return true;
}

Gf2Cochain vk_cocycle(const ConfigComplex& cc, int n, const VertexOrdering& order)
{
    require(n >= 0, "vk cocycle: negative degree");
    require(order.rank.size() == cc.base().num_vertices(), "ordering size does not match the complex");
    Gf2Cochain c{n, {}};
    const auto& cells = cc.cells(n);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& cell = cells[i];
        // Only dimension pairs differing by at most one can mesh.
        const auto gap = static_cast<long>(cell.first.size()) - static_cast<long>(cell.second.size());
        if (std::abs(gap) > 1)
            continue;
        if (meshed(cell.first, cell.second, order))
            c.support.push_back(i);
    }
    return c;
}

Gf2Chain chain_boundary(const ConfigComplex& cc, const Gf2Chain& z)
{
    Gf2Chain out{z.degree - 1, {}};
    if (z.degree < 1)
        return out;
    gf2::BitVec acc(cc.count(z.degree - 1));
    for (auto i : z.support)
        for (auto j : cc.boundary_of(z.degree, i))
            acc.flip(j);
    out.support = acc.support();
    return out;
}

bool is_cycle(const ConfigComplex& cc, const Gf2Chain& z)
{
    return chain_boundary(cc, z).support.empty();
}

bool is_cocycle(const ConfigComplex& cc, const Gf2Cochain& c)
{
    const gf2::BitVec bits = to_bits(c.support, cc.count(c.degree));
    for (std::size_t i = 0; i < cc.count(c.degree + 1); ++i) {
        bool parity = false;
        for (auto j : cc.boundary_of(c.degree + 1, i))
            parity ^= bits.get(j);
        if (parity)
            return false;
    }
    return true;
}

bool evaluate(const Gf2Cochain& c, const Gf2Chain& z)
{
    require(c.degree == z.degree, "evaluate: cochain of degree " + std::to_string(c.degree) +
                                      " against chain of degree " + std::to_string(z.degree));
    std::vector<std::size_t> common;
    std::set_intersection(c.support.begin(), c.support.end(), z.support.begin(), z.support.end(),
                          std::back_inserter(common));
    return common.size() % 2 == 1;
}

std::optional<Gf2Cochain> coboundary_certificate(const ConfigComplex& cc, const Gf2Cochain& c)
{
    require(is_cocycle(cc, c), "coboundary certificate: input is not a cocycle");
    if (c.degree == 0 || c.support.empty()) {
        if (!c.support.empty())
            return std::nullopt;
        return Gf2Cochain{c.degree - 1, {}};
    }
    // delta x = c  <=>  (boundary_n)^T x = c.
    const gf2::Matrix dt = cc.boundary_matrix(c.degree).transpose();
    auto x = gf2::solve(dt, to_bits(c.support, cc.count(c.degree)));
    if (!x)
        return std::nullopt;
    return Gf2Cochain{c.degree - 1, x->support()};
}

Gf2Chain omega_chain(const OctaComplex& doubled, const ConfigComplex& cc, const Simplex& delta)
{
    require(cc.base() == doubled.complex, "omega chain: configuration complex is not built on D");
    require(doubled.base.contains(delta), "omega chain: Delta is not a simplex of the base");
    const int n = doubled.d + doubled.delta;
    Gf2Chain z{n, {}};
    const auto& cells = cc.cells(n);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        Simplex cover = simplex_union(doubled.project(cells[i].first), doubled.project(cells[i].second));
        if (is_face_of(delta, cover))
            z.support.push_back(i);
    }
    const Gf2Chain bd = chain_boundary(cc, z);
    if (!bd.support.empty())
        throw InternalError("Omega is not a cycle: boundary contains " +
                            cc.cell_label(cc.cells(n - 1)[bd.support.front()]));
    return z;
}

Gf2Chain transport(const Gf2Chain& z, const ConfigComplex& from, const ConfigComplex& to)
{
    auto map_simplex = [&](const Simplex& s) {
        Simplex out;
        for (Vertex v : s) {
            auto w = to.base().find_vertex(from.base().label(v));
            require(w.has_value(), "transport: vertex '" + from.base().label(v) + "' missing in target");
            out.push_back(*w);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    Gf2Chain out{z.degree, {}};
    for (auto i : z.support) {
        const auto& c = from.cells(z.degree).at(i);
        auto j = to.find(ConfigCell::make(map_simplex(c.first), map_simplex(c.second)));
        require(j.has_value(), "transport: cell " + from.cell_label(c) + " missing in target");
        out.support.push_back(*j);
    }
    std::sort(out.support.begin(), out.support.end());
    return out;
}

VertexOrdering canonical_octa_ordering(const OctaComplex& o, const Simplex& delta)
{
    std::vector<Vertex> seq(o.vertices.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
        seq[i] = static_cast<Vertex>(i);
    auto key = [&](Vertex v) {
        const auto& lv = o.vertices[static_cast<std::size_t>(v)];
        const bool outside = !std::binary_search(delta.begin(), delta.end(), lv.base);
        return std::make_tuple(outside, lv.base, lv.label);
    };
    std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return key(a) < key(b); });
    return VertexOrdering::from_sequence(seq, seq.size());
}

VkVerdict vk_nontrivial(const ConfigComplex& cc, int n, const VertexOrdering& order,
                        const std::optional<Gf2Chain>& cycle)
{
    const Gf2Cochain c = vk_cocycle(cc, n, order);
    check_internal(is_cocycle(cc, c), "vk cochain is not a cocycle");
    if (cycle) {
        require(cycle->degree == n, "supplied cycle has the wrong degree");
        require(is_cycle(cc, *cycle), "supplied chain is not a cycle");
        if (evaluate(c, *cycle))
            return NontrivialByPairing{*cycle};
    }
    if (auto x = coboundary_certificate(cc, c))
        return Trivial{*x};

    // c is outside the row space of the boundary, so some cycle detects it.
    std::vector<gf2::BitVec> kernel;
    if (n == 0) {
        for (std::size_t i = 0; i < cc.count(0); ++i) {
            gf2::BitVec e(cc.count(0));
            e.set(i);
            kernel.push_back(e);
        }
    } else {
        kernel = gf2::kernel_basis(cc.boundary_matrix(n));
    }
    const gf2::BitVec cb = to_bits(c.support, cc.count(n));
    for (const auto& z : kernel)
        if (z.dot(cb))
            return NontrivialBySolver{Gf2Chain{n, z.support()}};
    throw InternalError("vk: no certificate and no detecting cycle");
}

bool star_condition(const SimplicialComplex& l, const std::vector<Simplex>& cycle, const Simplex& delta)
{
    require(l.contains(delta), "star condition: Delta is not a simplex of L");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        for (std::size_t j = i; j < cycle.size(); ++j) {
            if (!is_face_of(delta, simplex_union(cycle[i], cycle[j])))
                continue;
            if (!is_face_of(simplex_intersection(cycle[i], cycle[j]), delta))
                return false;
        }
    }
    return true;
}

}  // namespace actdim
