#include "actdim/scomplex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace actdim {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (Vertex v : s) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool is_face_of(const Simplex& small, const Simplex& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Simplex simplex_intersection(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex simplex_union(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

constexpr std::size_t kMaxFacetSize = 24;

Simplex canonical(Simplex s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_ids,
                                                 const std::vector<std::vector<std::string>>& facets)
{
    SimplicialComplex k;
    k.labels_ = std::move(vertex_ids);
    for (std::size_t i = 0; i < k.labels_.size(); ++i) {
        auto [it, fresh] = k.label_index_.emplace(k.labels_[i], static_cast<Vertex>(i));
        require(fresh, "duplicate vertex identifier '" + k.labels_[i] + "'");
    }
    std::vector<Simplex> gens;
    gens.reserve(facets.size());
    for (const auto& f : facets) {
        Simplex s;
        for (const auto& id : f) {
            auto it = k.label_index_.find(id);
            require(it != k.label_index_.end(), "facet uses unknown vertex '" + id + "'");
            s.push_back(it->second);
        }
        require(!s.empty(), "empty facet");
        gens.push_back(canonical(std::move(s)));
    }
    k.build(gens);
    return k;
}

SimplicialComplex SimplicialComplex::from_index_facets(std::vector<std::string> vertex_ids,
                                                       const std::vector<Simplex>& facets)
{
    SimplicialComplex k;
    k.labels_ = std::move(vertex_ids);
    for (std::size_t i = 0; i < k.labels_.size(); ++i) {
        auto [it, fresh] = k.label_index_.emplace(k.labels_[i], static_cast<Vertex>(i));
        require(fresh, "duplicate vertex identifier '" + k.labels_[i] + "'");
    }
    std::vector<Simplex> gens;
    gens.reserve(facets.size());
    const auto n = static_cast<Vertex>(k.labels_.size());
    for (const auto& f : facets) {
        require(!f.empty(), "empty facet");
        for (Vertex v : f)
            require(v >= 0 && v < n, "facet uses vertex index out of range");
        gens.push_back(canonical(f));
    }
    k.build(gens);
    return k;
}

void SimplicialComplex::build(const std::vector<Simplex>& generators)
{
    std::vector<std::unordered_set<Simplex, SimplexHash>> levels;
    auto insert = [&](Simplex s) {
        const std::size_t d = s.size() - 1;
        if (levels.size() <= d)
            levels.resize(d + 1);
        levels[d].insert(std::move(s));
    };
    for (std::size_t v = 0; v < labels_.size(); ++v)
        insert(Simplex{static_cast<Vertex>(v)});

    // Dominated generators contribute nothing new; skip them cheaply when an
    // identical generator was already expanded.
    std::unordered_set<Simplex, SimplexHash> seen;
    for (const auto& g : generators) {
        if (!seen.insert(g).second)
            continue;
        require(g.size() <= kMaxFacetSize, "facet too large to enumerate");
        if (g.size() <= levels.size() && levels[g.size() - 1].count(g))
            continue;
        const std::size_t n = g.size();
        const std::uint32_t full = (std::uint32_t{1} << n);
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            Simplex s;
            s.reserve(static_cast<std::size_t>(__builtin_popcount(mask)));
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint32_t{1} << i))
                    s.push_back(g[i]);
            insert(std::move(s));
        }
    }

    faces_.clear();
    face_index_.clear();
    for (auto& level : levels) {
        std::vector<Simplex> sorted(level.begin(), level.end());
        std::sort(sorted.begin(), sorted.end());
        faces_.push_back(std::move(sorted));
    }
    while (!faces_.empty() && faces_.back().empty())
        faces_.pop_back();
    face_index_.resize(faces_.size());
    for (std::size_t d = 0; d < faces_.size(); ++d)
        for (std::size_t i = 0; i < faces_[d].size(); ++i)
            face_index_[d].emplace(faces_[d][i], i);

    // A face is maximal iff it is not a codimension-one face of anything.
    std::vector<std::vector<bool>> dominated(faces_.size());
    for (std::size_t d = 0; d < faces_.size(); ++d)
        dominated[d].assign(faces_[d].size(), false);
    for (std::size_t d = 1; d < faces_.size(); ++d) {
        for (const auto& s : faces_[d]) {
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                Simplex f;
                f.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != skip)
                        f.push_back(s[i]);
                dominated[d - 1][face_index_[d - 1].at(f)] = true;
            }
        }
    }
    facets_.clear();
    for (std::size_t d = 0; d < faces_.size(); ++d)
        for (std::size_t i = 0; i < faces_[d].size(); ++i)
            if (!dominated[d][i])
                facets_.push_back(faces_[d][i]);
    std::sort(facets_.begin(), facets_.end());
}

std::optional<Vertex> SimplicialComplex::find_vertex(const std::string& id) const
{
    auto it = label_index_.find(id);
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

Vertex SimplicialComplex::vertex(const std::string& id) const
{
    auto v = find_vertex(id);
    require(v.has_value(), "unknown vertex '" + id + "'");
    return *v;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const
{
    static const std::vector<Simplex> none;
    if (k < 0 || k >= static_cast<int>(faces_.size()))
        return none;
    return faces_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& level : faces_)
        f.push_back(level.size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t d = 0; d < faces_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(faces_[d].size());
    return chi;
}

std::optional<std::size_t> SimplicialComplex::find_index(const Simplex& s) const
{
    if (s.empty() || s.size() > faces_.size())
        return std::nullopt;
    const auto& idx = face_index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end())
        return std::nullopt;
    return it->second;
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    return find_index(s).has_value();
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const
{
    auto i = find_index(s);
    require(i.has_value(), "simplex is not in the complex");
    return *i;
}

Simplex SimplicialComplex::simplex_from_ids(const std::vector<std::string>& ids) const
{
    Simplex s;
    for (const auto& id : ids)
        s.push_back(vertex(id));
    return canonical(std::move(s));
}

std::vector<std::string> SimplicialComplex::ids_of(const Simplex& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : s)
        out.push_back(label(v));
    return out;
}

std::vector<std::vector<Vertex>> SimplicialComplex::adjacency() const
{
    std::vector<std::vector<Vertex>> adj(labels_.size());
    for (const auto& e : faces(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end());
    return adj;
}

void Poset::validate() const
{
    const std::size_t n = labels.size();
    require(less.size() == n, "poset relation has wrong size");
    for (const auto& row : less)
        require(row.size() == n, "poset relation has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        require(!less[i][i], "poset relation is not irreflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (!less[i][j])
                continue;
            require(!less[j][i], "poset relation is not antisymmetric");
            for (std::size_t k = 0; k < n; ++k)
                if (less[j][k])
                    require(less[i][k], "poset relation is not transitive");
        }
    }
}

SimplexPoset simplex_poset(const SimplicialComplex& k, bool with_empty)
{
    SimplexPoset sp;
    sp.with_empty = with_empty;
    if (with_empty)
        sp.simplices.push_back({});
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.faces(d))
            sp.simplices.push_back(s);
    const std::size_t n = sp.simplices.size();
    sp.poset.labels.reserve(n);
    for (const auto& s : sp.simplices)
        sp.poset.labels.push_back(simplex_label(k, s));
    sp.poset.less.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sp.simplices[i].size() < sp.simplices[j].size() && is_face_of(sp.simplices[i], sp.simplices[j]))
                sp.poset.less[i][j] = true;
    return sp;
}

std::vector<Simplex> enumerate_cliques(const std::vector<std::vector<Vertex>>& adjacency)
{
    std::vector<Simplex> out;
    Simplex current;
    // Extend cliques only by larger vertices so each clique appears once.
    std::function<void(const std::vector<Vertex>&)> extend = [&](const std::vector<Vertex>& candidates) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const Vertex v = candidates[i];
            current.push_back(v);
            out.push_back(current);
            std::vector<Vertex> next;
            const auto& nb = adjacency[static_cast<std::size_t>(v)];
            std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                                  nb.begin(), nb.end(), std::back_inserter(next));
            extend(next);
            current.pop_back();
        }
    };
    std::vector<Vertex> all(adjacency.size());
    std::iota(all.begin(), all.end(), 0);
    extend(all);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex clique_complex(std::vector<std::string> labels,
                                 const std::vector<std::vector<Vertex>>& adjacency)
{
    require(labels.size() == adjacency.size(), "adjacency size mismatch");
    std::vector<std::vector<Vertex>> adj = adjacency;
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    // Only maximal cliques are needed as generators.
    auto cliques = enumerate_cliques(adj);
    std::vector<Simplex> maximal;
    for (const auto& c : cliques) {
        bool extendable = false;
        std::vector<Vertex> common = adj[static_cast<std::size_t>(c[0])];
        for (std::size_t i = 1; i < c.size() && !common.empty(); ++i) {
            std::vector<Vertex> next;
            const auto& nb = adj[static_cast<std::size_t>(c[i])];
            std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
            common = std::move(next);
        }
        extendable = !common.empty();
        if (!extendable)
            maximal.push_back(c);
    }
    return SimplicialComplex::from_index_facets(std::move(labels), maximal);
}

FlagResult flag_check_and_complete(const SimplicialComplex& k)
{
    FlagResult r;
    r.completion = clique_complex(k.labels(), k.adjacency());
    r.is_flag = (r.completion == k);
    return r;
}

bool is_flag(const SimplicialComplex& k)
{
    return flag_check_and_complete(k).is_flag;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& w)
{
    const auto n = static_cast<Vertex>(k.num_vertices());
    std::vector<Vertex> keep = w;
    for (Vertex v : keep)
        require(v >= 0 && v < n, "full_subcomplex: unknown vertex");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<Vertex> new_index(static_cast<std::size_t>(n), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        new_index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
        labels.push_back(k.label(keep[i]));
    }
    std::vector<Simplex> gens;
    // Largest faces first so that build() skips the faces they already cover.
    for (int d = k.dim(); d >= 0; --d) {
        for (const auto& s : k.faces(d)) {
            Simplex t;
            bool inside = true;
            for (Vertex v : s) {
                const Vertex nv = new_index[static_cast<std::size_t>(v)];
                if (nv < 0) {
                    inside = false;
                    break;
                }
                t.push_back(nv);
            }
            if (inside)
                gens.push_back(std::move(t));
        }
    }
    return SimplicialComplex::from_index_facets(std::move(labels), gens);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<std::string>& w)
{
    std::vector<Vertex> idx;
    for (const auto& id : w)
        idx.push_back(k.vertex(id));
    return full_subcomplex(k, idx);
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma)
{
    require(k.contains(sigma), "link: simplex is not in the complex");
    std::vector<Simplex> pieces;
    std::vector<bool> used(k.num_vertices(), false);
    for (const auto& f : k.facets()) {
        if (!is_face_of(sigma, f))
            continue;
        Simplex rest;
        std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
        if (rest.empty())
            continue;
        for (Vertex v : rest)
            used[static_cast<std::size_t>(v)] = true;
        pieces.push_back(std::move(rest));
    }
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < used.size(); ++v)
        if (used[v])
            keep.push_back(static_cast<Vertex>(v));
    std::vector<Vertex> new_index(k.num_vertices(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        new_index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
        labels.push_back(k.label(keep[i]));
    }
    for (auto& p : pieces)
        for (auto& v : p)
            v = new_index[static_cast<std::size_t>(v)];
    return SimplicialComplex::from_index_facets(std::move(labels), pieces);
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma)
{
    require(k.contains(sigma), "star: simplex is not in the complex");
    std::vector<Simplex> pieces;
    std::vector<bool> used(k.num_vertices(), false);
    for (const auto& f : k.facets()) {
        if (!is_face_of(sigma, f))
            continue;
        for (Vertex v : f)
            used[static_cast<std::size_t>(v)] = true;
        pieces.push_back(f);
    }
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < used.size(); ++v)
        if (used[v])
            keep.push_back(static_cast<Vertex>(v));
    std::vector<Vertex> new_index(k.num_vertices(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        new_index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
        labels.push_back(k.label(keep[i]));
    }
    for (auto& p : pieces)
        for (auto& v : p)
            v = new_index[static_cast<std::size_t>(v)];
    return SimplicialComplex::from_index_facets(std::move(labels), pieces);
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex)
{
    require(!k.find_vertex(apex).has_value(), "cone: apex identifier already used");
    std::vector<std::string> labels = k.labels();
    labels.push_back(apex);
    const auto a = static_cast<Vertex>(labels.size() - 1);
    std::vector<Simplex> gens;
    for (auto f : k.facets()) {
        f.push_back(a);
        gens.push_back(std::move(f));
    }
    gens.push_back({a});
    return SimplicialComplex::from_index_facets(std::move(labels), gens);
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2)
{
    for (const auto& id : k2.labels())
        require(!k1.find_vertex(id).has_value(), "join: vertex identifier '" + id + "' appears in both factors");
    std::vector<std::string> labels = k1.labels();
    labels.insert(labels.end(), k2.labels().begin(), k2.labels().end());
    const auto offset = static_cast<Vertex>(k1.num_vertices());
    std::vector<Simplex> gens;
    if (k1.empty() || k2.empty()) {
        for (const auto& f : k1.facets())
            gens.push_back(f);
        for (auto f : k2.facets()) {
            for (auto& v : f)
                v += offset;
            gens.push_back(std::move(f));
        }
    } else {
        for (const auto& f1 : k1.facets()) {
            for (const auto& f2 : k2.facets()) {
                Simplex s = f1;
                for (Vertex v : f2)
                    s.push_back(v + offset);
                gens.push_back(std::move(s));
            }
        }
    }
    return SimplicialComplex::from_index_facets(std::move(labels), gens);
}

SimplicialComplex order_complex(const Poset& p)
{
    p.validate();
    const std::size_t n = p.size();
    // Chains are cliques of the comparability graph.
    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (p.less[i][j] || p.less[j][i]))
                adj[i].push_back(static_cast<Vertex>(j));
    return clique_complex(p.labels, adj);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k)
{
    return order_complex(simplex_poset(k, false).poset);
}

std::string simplex_label(const SimplicialComplex& k, const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += k.label(s[i]);
    }
    out += "}";
    return out;
}

}  // namespace actdim
