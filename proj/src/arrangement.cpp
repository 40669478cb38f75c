#include "actdim/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "actdim/errors.hpp"

namespace actdim {

namespace {

using boost::multiprecision::cpp_int;

struct Echelon
{
    std::vector<QVector> rows;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; zero rows are dropped.
Echelon rref(std::vector<QVector> m, std::size_t cols)
{
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[r], m[p]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

bool in_span(const Echelon& e, QVector v)
{
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const Rational f = v[e.pivots[i]];
        if (f == 0)
            continue;
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] -= f * e.rows[i][k];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Some solution of rows . x = rhs, or none.
std::optional<QVector> solve(const std::vector<QVector>& rows, const QVector& rhs, std::size_t cols)
{
    std::vector<QVector> aug;
    aug.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        QVector r = rows[i];
        r.push_back(rhs[i]);
        aug.push_back(std::move(r));
    }
    auto e = rref(std::move(aug), cols + 1);
    if (!e.pivots.empty() && e.pivots.back() == cols)
        return std::nullopt;
    QVector x(cols, 0);
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        x[e.pivots[i]] = e.rows[i][cols];
    return x;
}

std::vector<QVector> kernel(const std::vector<QVector>& rows, std::size_t cols)
{
    auto e = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        QVector v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

QVector augmented(const Hyperplane& h)
{
    QVector r = h.normal;
    r.push_back(h.offset);
    return r;
}

/// The flat cut out by the hyperplanes in `s`, or none if they miss each other.
std::optional<Flat> make_flat(const Arrangement& a, const HyperplaneSet& s)
{
    const auto n = static_cast<std::size_t>(a.dim());
    std::vector<QVector> aug, normals;
    QVector offsets;
    for (auto i : s) {
        aug.push_back(augmented(a[i]));
        normals.push_back(a[i].normal);
        offsets.push_back(a[i].offset);
    }
    auto e = rref(aug, n + 1);
    if (!e.pivots.empty() && e.pivots.back() == n)
        return std::nullopt;
    Flat f;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (in_span(e, augmented(a[i])))
            f.hyperplanes.push_back(i);
    f.codim = static_cast<int>(e.rows.size());
    auto p = solve(normals, offsets, n);
    check_internal(p.has_value(), "flat: consistent system without a solution");
    f.basepoint = std::move(*p);
    f.basis = kernel(normals, n);
    check_internal(static_cast<int>(f.basis.size()) == a.dim() - f.codim, "flat: dimension mismatch");
    return f;
}

bool proper_subset(const HyperplaneSet& a, const HyperplaneSet& b)
{
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<QVector> normals_of(const Arrangement& a, const HyperplaneSet& hs)
{
    std::vector<QVector> out;
    for (auto i : hs)
        out.push_back(a[i].normal);
    return out;
}

bool is_central(const Arrangement& a)
{
    QVector offsets;
    std::vector<QVector> normals;
    for (const auto& h : a.hyperplanes()) {
        normals.push_back(h.normal);
        offsets.push_back(h.offset);
    }
    return solve(normals, offsets, static_cast<std::size_t>(a.dim())).has_value();
}

struct UnionFind
{
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Rational parse_rational(const std::string& s)
{
    auto parse_int = [&](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+'))
            ++i;
        require(i < t.size() && std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                                            [](char c) { return c >= '0' && c <= '9'; }),
                "not a rational number: '" + s + "'");
        return cpp_int(t[0] == '+' ? t.substr(1) : t);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(s, true));
    cpp_int num = parse_int(s.substr(0, slash), true);
    cpp_int den = parse_int(s.substr(slash + 1), false);
    require(den != 0, "zero denominator in '" + s + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& q)
{
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

int rational_rank(const std::vector<QVector>& vectors)
{
    if (vectors.empty())
        return 0;
    return static_cast<int>(rref(vectors, vectors.front().size()).rows.size());
}

std::vector<std::vector<std::size_t>> matroid_components(const std::vector<QVector>& vectors)
{
    // Components are the classes of the "share a fundamental circuit"
    // relation for any basis; a greedy basis in input order will do.
    const std::size_t m = vectors.size();
    UnionFind uf(m);
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < m; ++i) {
        if (std::all_of(vectors[i].begin(), vectors[i].end(), [](const Rational& x) { return x == 0; }))
            continue;
        const std::size_t dim = vectors[i].size();
        // Columns are the basis vectors: solve B c = v.
        std::vector<QVector> rows(dim, QVector(basis.size()));
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t t = 0; t < basis.size(); ++t)
                rows[r][t] = vectors[basis[t]][r];
        auto c = basis.empty() ? std::nullopt : solve(rows, vectors[i], basis.size());
        if (!c) {
            basis.push_back(i);
            continue;
        }
        for (std::size_t t = 0; t < basis.size(); ++t)
            if ((*c)[t] != 0)
                uf.unite(i, basis[t]);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i)
        groups[uf.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, g] : groups)
        out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

// --- Arrangement ---------------------------------------------------------

Arrangement::Arrangement(int n, std::vector<Hyperplane> hyperplanes) : n_(n), hyperplanes_(std::move(hyperplanes))
{
    require(n >= 0, "arrangement dimension must be nonnegative");
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        const auto& h = hyperplanes_[i];
        require(h.normal.size() == static_cast<std::size_t>(n),
                "hyperplane " + std::to_string(i) + ": normal has length " + std::to_string(h.normal.size()) +
                    ", expected " + std::to_string(n));
        require(std::any_of(h.normal.begin(), h.normal.end(), [](const Rational& x) { return x != 0; }),
                "hyperplane " + std::to_string(i) + ": zero normal");
    }
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
        for (std::size_t j = i + 1; j < hyperplanes_.size(); ++j)
            require(rational_rank({augmented(hyperplanes_[i]), augmented(hyperplanes_[j])}) == 2,
                    "hyperplanes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

Arrangement Arrangement::product(const Arrangement& a, const Arrangement& b)
{
    std::vector<Hyperplane> hs;
    for (const auto& h : a.hyperplanes()) {
        Hyperplane g{h.normal, h.offset};
        g.normal.resize(static_cast<std::size_t>(a.dim() + b.dim()), 0);
        hs.push_back(std::move(g));
    }
    for (const auto& h : b.hyperplanes()) {
        Hyperplane g{QVector(static_cast<std::size_t>(a.dim()), 0), h.offset};
        g.normal.insert(g.normal.end(), h.normal.begin(), h.normal.end());
        hs.push_back(std::move(g));
    }
    return Arrangement(a.dim() + b.dim(), std::move(hs));
}

std::string Flat::label() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(hyperplanes[i]);
    }
    return s + "]";
}

// --- FlatPoset -----------------------------------------------------------

FlatPoset::FlatPoset(Arrangement a) : arrangement_(std::move(a))
{
    const auto n = static_cast<std::size_t>(arrangement_.dim());
    std::map<HyperplaneSet, Flat> found;
    Flat ambient;
    ambient.basepoint.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n, 0);
        e[i] = 1;
        ambient.basis.push_back(std::move(e));
    }
    found.emplace(HyperplaneSet{}, ambient);
    std::deque<HyperplaneSet> queue{HyperplaneSet{}};
    while (!queue.empty()) {
        const HyperplaneSet cur = queue.front();
        queue.pop_front();
        for (std::size_t h = 0; h < arrangement_.size(); ++h) {
            if (std::binary_search(cur.begin(), cur.end(), h))
                continue;
            HyperplaneSet s = cur;
            s.insert(std::upper_bound(s.begin(), s.end(), h), h);
            auto f = make_flat(arrangement_, s);
            if (!f || found.count(f->hyperplanes))
                continue;
            queue.push_back(f->hyperplanes);
            found.emplace(f->hyperplanes, std::move(*f));
        }
    }
    for (auto& [key, f] : found)
        flats_.push_back(std::move(f));
    std::stable_sort(flats_.begin(), flats_.end(), [](const Flat& x, const Flat& y) {
        return std::tie(x.codim, x.hyperplanes) < std::tie(y.codim, y.hyperplanes);
    });
    for (std::size_t i = 0; i < flats_.size(); ++i)
        index_.emplace(flats_[i].hyperplanes, i);

    meet_.assign(flats_.size(), std::vector<std::optional<std::size_t>>(flats_.size()));
    for (std::size_t i = 0; i < flats_.size(); ++i) {
        meet_[i][i] = i;
        for (std::size_t j = i + 1; j < flats_.size(); ++j) {
            HyperplaneSet u;
            std::set_union(flats_[i].hyperplanes.begin(), flats_[i].hyperplanes.end(),
                           flats_[j].hyperplanes.begin(), flats_[j].hyperplanes.end(), std::back_inserter(u));
            if (auto f = make_flat(arrangement_, u)) {
                auto it = index_.find(f->hyperplanes);
                check_internal(it != index_.end(), "intersection of two flats is missing from the poset");
                meet_[i][j] = meet_[j][i] = it->second;
            }
        }
    }
}

bool FlatPoset::less(std::size_t i, std::size_t j) const
{
    return proper_subset(flats_.at(i).hyperplanes, flats_.at(j).hyperplanes);
}

std::optional<std::size_t> FlatPoset::find(const HyperplaneSet& a) const
{
    auto it = index_.find(a);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FlatPoset::intersection(std::size_t i, std::size_t j) const
{
    return meet_.at(i).at(j);
}

int FlatPoset::rank() const
{
    return flats_.back().codim;
}

Poset FlatPoset::proper_part() const
{
    Poset p;
    const std::size_t m = flats_.size() - 1;
    for (std::size_t i = 1; i < flats_.size(); ++i)
        p.labels.push_back(flats_[i].label());
    p.less.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            p.less[i][j] = less(i + 1, j + 1);
    return p;
}

FlatPoset intersection_poset(const Arrangement& a)
{
    return FlatPoset(a);
}

ArrangementProperties properties(const FlatPoset& q)
{
    ArrangementProperties p;
    p.rank = q.rank();
    p.essential = p.rank == q.arrangement().dim();
    p.central = q.flats().back().hyperplanes.size() == q.arrangement().size();
    return p;
}

// --- irreducibility ------------------------------------------------------

std::vector<HyperplaneSet> irreducible_decomposition(const Arrangement& a)
{
    require(is_central(a), "irreducible decomposition needs a central arrangement");
    std::vector<QVector> normals;
    for (const auto& h : a.hyperplanes())
        normals.push_back(h.normal);
    return matroid_components(normals);
}

bool is_irreducible_localization(const Arrangement& a, const HyperplaneSet& hs)
{
    return !hs.empty() && matroid_components(normals_of(a, hs)).size() == 1;
}

std::vector<std::size_t> set_of_irreducibles(const FlatPoset& q)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < q.size(); ++i)
        if (is_irreducible_localization(q.arrangement(), q[i].hyperplanes))
            out.push_back(i);
    return out;
}

// --- building sets and nested complexes -----------------------------------

std::optional<std::size_t> building_set_violation(const FlatPoset& q, const std::vector<std::size_t>& building)
{
    for (auto g : building)
        require(g > 0 && g < q.size(), "building set: " + std::to_string(g) + " is not a proper flat");
    for (std::size_t x = 1; x < q.size(); ++x) {
        std::vector<std::size_t> below;
        for (auto g : building)
            if (g == x || q.less(g, x))
                below.push_back(g);
        std::vector<std::size_t> maxes;
        for (auto g : below)
            if (std::none_of(below.begin(), below.end(), [&](std::size_t h) { return q.less(g, h); }))
                maxes.push_back(g);
        // The interval below X is the product of the intervals below the
        // maxima iff their hyperplane sets partition A_X with additive rank.
        std::size_t count = 0;
        int codim = 0;
        std::set<std::size_t> covered;
        for (auto g : maxes) {
            count += q[g].hyperplanes.size();
            codim += q[g].codim;
            covered.insert(q[g].hyperplanes.begin(), q[g].hyperplanes.end());
        }
        if (count != covered.size() || covered.size() != q[x].hyperplanes.size() || codim != q[x].codim)
            return x;
    }
    return std::nullopt;
}

namespace {

/// Every antichain of s + {x} through x (of size >= 2) meets in a flat outside G.
bool extends_nested(const FlatPoset& q, const std::vector<bool>& in_g, const std::vector<std::size_t>& s,
                    std::size_t x)
{
    std::vector<std::size_t> free;
    for (auto y : s)
        if (!q.less(x, y) && !q.less(y, x))
            free.push_back(y);
    for (std::size_t mask = 1; mask < (std::size_t{1} << free.size()); ++mask) {
        std::vector<std::size_t> t;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask >> b & 1)
                t.push_back(free[b]);
        bool antichain = true;
        for (std::size_t i = 0; i < t.size() && antichain; ++i)
            for (std::size_t j = i + 1; j < t.size() && antichain; ++j)
                antichain = !q.less(t[i], t[j]) && !q.less(t[j], t[i]);
        if (!antichain)
            continue;
        std::optional<std::size_t> cap = x;
        for (auto y : t) {
            cap = q.intersection(*cap, y);
            if (!cap)
                return false;
        }
        if (in_g[*cap])
            return false;
    }
    return true;
}

}  // namespace

NestedComplex nested_complex(const FlatPoset& q, std::vector<std::size_t> building)
{
    std::sort(building.begin(), building.end());
    building.erase(std::unique(building.begin(), building.end()), building.end());
    if (auto bad = building_set_violation(q, building))
        throw InputError("not a building set: the localization at flat " + q[*bad].label() +
                         " does not split over the maximal building-set flats below it");

    std::vector<bool> in_g(q.size(), false);
    for (auto g : building)
        in_g[g] = true;

    std::vector<Simplex> simplices;
    std::vector<std::size_t> flats;
    Simplex current;
    auto grow = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t i = from; i < building.size(); ++i) {
            if (!extends_nested(q, in_g, flats, building[i]))
                continue;
            flats.push_back(building[i]);
            current.push_back(static_cast<Vertex>(i));
            simplices.push_back(current);
            self(self, i + 1);
            flats.pop_back();
            current.pop_back();
        }
    };
    grow(grow, 0);

    std::vector<std::string> labels;
    for (auto g : building)
        labels.push_back(q[g].label());
    NestedComplex nc;
    nc.building = std::move(building);
    nc.complex = SimplicialComplex::from_index_facets(std::move(labels), simplices);
    return nc;
}

NestedComplex irreducible_complex(const FlatPoset& q)
{
    return nested_complex(q, set_of_irreducibles(q));
}

NestedComplex flag_completion(const NestedComplex& nc)
{
    NestedComplex out;
    out.building = nc.building;
    out.complex = clique_complex(nc.complex.labels(), nc.complex.adjacency());
    out.flag_completed = true;
    return out;
}

// --- Moebius function and Poincare polynomial -----------------------------

MobiusData mobius_poincare_beta(const FlatPoset& q)
{
    MobiusData d;
    d.mu.assign(q.size(), 0);
    d.poincare.assign(static_cast<std::size_t>(q.rank()) + 1, 0);
    // Flats are sorted by codimension, so everything below i comes first.
    for (std::size_t i = 0; i < q.size(); ++i) {
        long long m = i == q.ambient() ? 1 : 0;
        for (std::size_t j = 0; j < i; ++j)
            if (q.less(j, i))
                m -= d.mu[j];
        d.mu[i] = m;
        const bool even = q[i].codim % 2 == 0;
        check_internal(m != 0 && (m > 0) == even, "Moebius sign does not alternate with codimension at flat " +
                                                      q[i].label());
        d.poincare[static_cast<std::size_t>(q[i].codim)] += m > 0 ? m : -m;
    }
    long long at_minus_one = 0;
    for (std::size_t c = 0; c < d.poincare.size(); ++c)
        at_minus_one += c % 2 ? -d.poincare[c] : d.poincare[c];
    check_internal(at_minus_one == std::accumulate(d.mu.begin(), d.mu.end(), 0LL),
                   "p(-1) differs from the sum of the Moebius function");
    d.beta = at_minus_one < 0 ? -at_minus_one : at_minus_one;
    return d;
}

Arrangement decone(const Arrangement& a, std::size_t h)
{
    require(h < a.size(), "decone: no hyperplane " + std::to_string(h));
    require(is_central(a), "decone needs a central arrangement");
    const auto n = static_cast<std::size_t>(a.dim());

    // New coordinates z = M y, last row of M the chosen normal, the rest unit
    // vectors completing it to a basis. A form a.y becomes c.z with c M = a.
    std::vector<QVector> m;
    for (std::size_t k = 0; k < n && m.size() + 1 < n; ++k) {
        QVector e(n, 0);
        e[k] = 1;
        auto trial = m;
        trial.push_back(e);
        trial.push_back(a[h].normal);
        if (rational_rank(trial) == static_cast<int>(trial.size()))
            m.push_back(std::move(e));
    }
    m.push_back(a[h].normal);
    check_internal(rational_rank(m) == static_cast<int>(n), "decone: coordinate change is singular");
    std::vector<QVector> mt(n, QVector(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            mt[c][r] = m[r][c];

    std::vector<Hyperplane> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == h)
            continue;
        auto c = solve(mt, a[i].normal, n);
        check_internal(c.has_value(), "decone: change of coordinates failed");
        // Translating to the common point kills every offset; z_n = 1.
        Hyperplane g{QVector(c->begin(), c->end() - 1), -c->back()};
        out.push_back(std::move(g));
    }
    Arrangement d(static_cast<int>(n) - 1, std::move(out));

    auto pa = mobius_poincare_beta(FlatPoset(a)).poincare;
    auto pd = mobius_poincare_beta(FlatPoset(d)).poincare;
    std::vector<long long> prod(pd.size() + 1, 0);
    for (std::size_t i = 0; i < pd.size(); ++i) {
        prod[i] += pd[i];
        prod[i + 1] += pd[i];
    }
    check_internal(prod == pa, "deconing identity p_A = (1+t) p_dA fails");
    return d;
}

// --- chains, H1 images, factors, report -----------------------------------

std::optional<std::vector<std::size_t>> complete_chain(const FlatPoset& q)
{
    const int n = q.arrangement().dim();
    if (!properties(q).essential || n == 0)
        return std::nullopt;
    const auto viq = set_of_irreducibles(q);
    std::vector<std::size_t> chain;
    auto dfs = [&](auto&& self) -> bool {
        const int next = static_cast<int>(chain.size()) + 1;
        if (next > n)
            return true;
        for (auto g : viq) {
            if (q[g].codim != next || (!chain.empty() && !q.less(chain.back(), g)))
                continue;
            chain.push_back(g);
            if (self(self))
                return true;
            chain.pop_back();
        }
        return false;
    };
    if (dfs(dfs))
        return chain;
    return std::nullopt;
}

H1Images h1_images(const FlatPoset& q, const std::vector<std::size_t>& flats)
{
    const auto viq = set_of_irreducibles(q);
    H1Images out;
    std::vector<QVector> rows;
    for (auto g : flats) {
        require(std::binary_search(viq.begin(), viq.end(), g),
                "h1 images: flat " + (g < q.size() ? q[g].label() : std::to_string(g)) + " is not irreducible");
        std::vector<int> v(q.arrangement().size(), 0);
        QVector r(q.arrangement().size(), 0);
        for (auto h : q[g].hyperplanes) {
            v[h] = 1;
            r[h] = 1;
        }
        out.vectors.push_back(std::move(v));
        rows.push_back(std::move(r));
    }
    out.independent = rational_rank(rows) == static_cast<int>(flats.size());
    return out;
}

CentralFactorization central_factors(const Arrangement& a)
{
    // Cone: a.x = b becomes a.x - b x0 = 0, plus the hyperplane x0 = 0.
    std::vector<QVector> cone;
    for (const auto& h : a.hyperplanes()) {
        QVector v = h.normal;
        v.push_back(-h.offset);
        cone.push_back(std::move(v));
    }
    QVector e0(static_cast<std::size_t>(a.dim()) + 1, 0);
    e0.back() = 1;
    cone.push_back(e0);
    CentralFactorization f;
    for (auto& comp : matroid_components(cone)) {
        if (comp.back() == a.size()) {
            comp.pop_back();
            f.rest = std::move(comp);
        } else {
            f.central.push_back(std::move(comp));
        }
    }
    return f;
}

ArrangementReport arrangement_actdim_report(const Arrangement& a, bool aspherical)
{
    ArrangementReport r;
    FlatPoset q(a);
    r.props = properties(q);
    r.factors = central_factors(a);
    r.irreducible = r.props.central && r.factors.central.size() == 1;
    const long long n = a.dim();
    const long long k = static_cast<long long>(r.factors.central.size());

    const auto fiq = flag_completion(irreducible_complex(q));
    r.fiq_dim = fiq.complex.dim();

    if (aspherical && r.fiq_dim > n - 1) {
        for (const auto& s : fiq.complex.facets()) {
            if (static_cast<long long>(s.size()) - 1 <= n - 1)
                continue;
            std::vector<std::size_t> w;
            for (auto v : s)
                w.push_back(fiq.building[static_cast<std::size_t>(v)]);
            r.contradiction = std::move(w);
            break;
        }
        r.bounds.notes.push_back("asphericity flag contradicted: FIQ has dimension " + std::to_string(r.fiq_dim) +
                                 " > n-1; aspherical bounds withheld");
    } else if (aspherical) {
        if (r.props.essential && k == 0)
            r.bounds.add("actdim", BoundKind::Exact, 2 * n, "essential aspherical arrangement without central factors");
        if (r.props.essential && r.irreducible)
            r.bounds.add("actdim", BoundKind::Exact, 2 * n - 1, "aspherical irreducible essential central arrangement");
        // Inessential arrangements split off a C^(n-rank) factor, which does
        // not change the fundamental group.
        const long long ne = r.props.rank;
        const std::string where = r.props.essential ? "" : " (essentialization, n = rank)";
        r.bounds.add("actdim", BoundKind::Exact, 2 * ne - k, "product of k irreducible central factors" + where);
        r.bounds.add("obdim", BoundKind::Exact, 2 * ne - k, "product of k irreducible central factors" + where);
    } else {
        r.bounds.notes.push_back("asphericity not asserted: product formulas give no conclusion");
    }

    if (r.props.essential && !r.props.central) {
        r.chain = complete_chain(q);
        if (r.chain)
            r.bounds.add("obdim", BoundKind::Lower, 2 * n, "complete chain of irreducibles");
        else
            r.bounds.notes.push_back("no complete chain of irreducibles: no conclusion");
    } else {
        r.bounds.notes.push_back("complete-chain bound needs an essential noncentral arrangement: no conclusion");
    }
    r.bounds.check_consistency();
    return r;
}

}  // namespace actdim
