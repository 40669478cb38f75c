#include "actdim/coxart.hpp"

#include <algorithm>
#include <set>

#include "actdim/errors.hpp"

namespace actdim {

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators, std::vector<std::vector<int>> matrix)
    : generators_(std::move(generators)), matrix_(std::move(matrix))
{
    const std::size_t n = generators_.size();
    require(std::set<std::string>(generators_.begin(), generators_.end()).size() == n,
            "Coxeter system: duplicate generator");
    require(matrix_.size() == n, "Coxeter matrix must have one row per generator");
    for (std::size_t i = 0; i < n; ++i) {
        require(matrix_[i].size() == n, "Coxeter matrix row " + std::to_string(i) + " has the wrong length");
        require(matrix_[i][i] == 1, "Coxeter matrix diagonal must be 1");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            require(matrix_[i][j] == matrix_[j][i], "Coxeter matrix is not symmetric at (" + std::to_string(i) +
                                                        "," + std::to_string(j) + ")");
            require(matrix_[i][j] == 0 || matrix_[i][j] >= 2,
                    "Coxeter label at (" + std::to_string(i) + "," + std::to_string(j) + ") must be >= 2 or 0");
        }
}

CoxeterSystem CoxeterSystem::right_angled(const SimplicialComplex& graph)
{
    const std::size_t n = graph.num_vertices();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    for (const auto& e : graph.faces(1))
        m[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] =
            m[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 2;
    return CoxeterSystem(graph.labels(), std::move(m));
}

std::vector<GeneratorSet> diagram_components(const CoxeterSystem& w, const GeneratorSet& t)
{
    std::vector<GeneratorSet> out;
    std::vector<bool> seen(t.size(), false);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (seen[i])
            continue;
        GeneratorSet comp;
        std::vector<std::size_t> stack{i};
        seen[i] = true;
        while (!stack.empty()) {
            auto a = stack.back();
            stack.pop_back();
            comp.push_back(t[a]);
            for (std::size_t b = 0; b < t.size(); ++b)
                if (!seen[b] && w.m(t[a], t[b]) != 2) {
                    seen[b] = true;
                    stack.push_back(b);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::string> finite_type(const CoxeterSystem& w, const GeneratorSet& c)
{
    const std::size_t k = c.size();
    require(k > 0, "finite_type: empty diagram");
    if (k == 1)
        return "A1";
    std::vector<std::vector<std::size_t>> adj(k);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const int m = w.m(c[i], c[j]);
            if (m == 2)
                continue;
            if (m == 0)
                return std::nullopt;
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
        }
    if (k == 2) {
        require(edges == 1, "finite_type: diagram is not connected");
        switch (const int m = w.m(c[0], c[1])) {
        case 3:
            return "A2";
        case 4:
            return "B2";
        case 6:
            return "G2";
        default:
            return "I2(" + std::to_string(m) + ")";
        }
    }
    if (edges != k - 1)
        return std::nullopt;  // has a cycle (connected input)
    auto label = [&](std::size_t i, std::size_t j) { return w.m(c[i], c[j]); };

    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < k; ++i) {
        if (adj[i].size() > 3)
            return std::nullopt;
        if (adj[i].size() == 3)
            branch.push_back(i);
    }
    const std::string n = std::to_string(k);

    if (branch.empty()) {
        std::size_t start = 0;
        while (adj[start].size() != 1)
            ++start;
        std::vector<int> labels;
        for (std::size_t prev = k, cur = start;;) {
            std::size_t next = k;
            for (auto x : adj[cur])
                if (x != prev)
                    next = x;
            if (next == k)
                break;
            labels.push_back(label(cur, next));
            prev = cur;
            cur = next;
        }
        std::vector<std::size_t> odd;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] != 3)
                odd.push_back(i);
        if (odd.empty())
            return "A" + n;
        if (odd.size() != 1)
            return std::nullopt;
        const int m = labels[odd[0]];
        const bool at_end = odd[0] == 0 || odd[0] + 1 == labels.size();
        if (m == 4 && at_end)
            return "B" + n;
        if (m == 4 && k == 4)
            return "F4";
        if (m == 5 && at_end && (k == 3 || k == 4))
            return "H" + n;
        return std::nullopt;
    }

    if (branch.size() != 1)
        return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        for (auto j : adj[i])
            if (label(i, j) != 3)
                return std::nullopt;
    std::vector<std::size_t> arms;
    for (auto first : adj[branch[0]]) {
        std::size_t len = 1;
        for (std::size_t prev = branch[0], cur = first; adj[cur].size() == 2; ++len) {
            const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return "D" + n;
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return "E" + n;
    return std::nullopt;
}

bool is_spherical(const CoxeterSystem& w, const GeneratorSet& t)
{
    for (const auto& c : diagram_components(w, t))
        if (!finite_type(w, c))
            return false;
    return true;
}

std::vector<GeneratorSet> irreducible_components(const CoxeterSystem& w, const GeneratorSet& t)
{
    require(is_spherical(w, t), "irreducible components: " + generator_label(w, t) + " is not spherical");
    return diagram_components(w, t);
}

namespace {

/// Every nonempty spherical subset, by depth-first extension (spherical
/// subsets are closed under taking subsets).
std::vector<GeneratorSet> spherical_subsets(const CoxeterSystem& w)
{
    std::vector<GeneratorSet> out;
    GeneratorSet cur;
    auto grow = [&](auto&& self, int from) -> void {
        for (int s = from; s < static_cast<int>(w.size()); ++s) {
            cur.push_back(s);
            if (is_spherical(w, cur)) {
                out.push_back(cur);
                self(self, s + 1);
            }
            cur.pop_back();
        }
    };
    grow(grow, 0);
    return out;
}

bool orthogonal(const CoxeterSystem& w, const GeneratorSet& a, const GeneratorSet& b)
{
    for (int s : a)
        for (int t : b)
            if (s == t || w.m(s, t) != 2)
                return false;
    return true;
}

}  // namespace

std::string generator_label(const CoxeterSystem& w, const GeneratorSet& t)
{
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ",";
        s += w.generators().at(static_cast<std::size_t>(t[i]));
    }
    return s + "}";
}

SimplicialComplex nerve(const CoxeterSystem& w)
{
    std::vector<Simplex> simplices;
    for (const auto& t : spherical_subsets(w))
        simplices.push_back(t);
    return SimplicialComplex::from_index_facets(w.generators(), simplices);
}

SubdividedNerve l_odot(const CoxeterSystem& w)
{
    SubdividedNerve out;
    for (auto& t : spherical_subsets(w))
        if (diagram_components(w, t).size() == 1)
            out.subsets.push_back(std::move(t));
    std::stable_sort(out.subsets.begin(), out.subsets.end(),
                     [](const GeneratorSet& a, const GeneratorSet& b) { return a.size() < b.size(); });

    const std::size_t n = out.subsets.size();
    std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& a = out.subsets[i];
            const auto& b = out.subsets[j];
            const bool nested = std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
                                std::includes(b.begin(), b.end(), a.begin(), a.end());
            compatible[i][j] = nested || orthogonal(w, a, b);
        }

    std::vector<Simplex> simplices;
    Simplex cur;
    std::vector<GeneratorSet> unions{GeneratorSet{}};
    auto grow = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t i = from; i < n; ++i) {
            if (!std::all_of(cur.begin(), cur.end(),
                             [&](Vertex v) { return compatible[static_cast<std::size_t>(v)][i]; }))
                continue;
            GeneratorSet u;
            std::set_union(unions.back().begin(), unions.back().end(), out.subsets[i].begin(), out.subsets[i].end(),
                           std::back_inserter(u));
            if (!is_spherical(w, u))
                continue;
            cur.push_back(static_cast<Vertex>(i));
            unions.push_back(std::move(u));
            simplices.push_back(cur);
            self(self, i + 1);
            cur.pop_back();
            unions.pop_back();
        }
    };
    grow(grow, 0);

    std::vector<std::string> labels;
    for (const auto& t : out.subsets)
        labels.push_back(generator_label(w, t));
    out.complex = SimplicialComplex::from_index_facets(std::move(labels), simplices);
    return out;
}

namespace {

bool top_reduced_z2_nonzero(const SimplicialComplex& l)
{
    if (l.dim() < 0)
        return false;
    const auto b = reduced_betti_z2(l);
    const auto d = static_cast<std::size_t>(l.dim());
    return d < b.size() && b[d] > 0;
}

}  // namespace

ArtinReport artin_actdim_report(const CoxeterSystem& w, bool assume_kpi1)
{
    require(w.size() > 0, "Artin report: empty Coxeter system");
    ArtinReport r;
    const auto l = nerve(w);
    const long long d = l.dim();
    const long long n = static_cast<long long>(w.size());
    r.d = l.dim();
    GeneratorSet all(w.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<int>(i);
    r.spherical = is_spherical(w, all);
    r.kpi1_from_flag = is_flag(l);
    r.kpi1 = assume_kpi1 || r.kpi1_from_flag;
    r.edce = edce_verdict(l);
    r.top_homology_nonzero = top_reduced_z2_nonzero(l);
    r.lodot_vertices = l_odot(w).subsets.size();

    if (r.spherical) {
        r.factors = irreducible_components(w, all);
        const auto k = static_cast<long long>(r.factors.size());
        r.bounds.add("actdim", BoundKind::Exact, 2 * n - k, "spherical Artin group: sum of 2*rank-1 over irreducible factors");
    }
    if (r.kpi1) {
        const std::string why = r.kpi1_from_flag ? " (K(pi,1) holds: flag nerve)" : " (K(pi,1) assumed)";
        r.bounds.add("gdim", BoundKind::Exact, d + 1, "dimension of the Salvetti complex" + why);
        r.bounds.add("actdim", BoundKind::Upper, 2 * d + 2, "K(pi,1) Artin complex: actdim <= 2d+2" + why);
        if (r.edce.status == EdceStatus::Edce)
            r.bounds.add("actdim", BoundKind::Upper, 2 * d + 1, "EDCE nerve: actdim <= 2d+1" + why);
        else
            r.bounds.notes.push_back("nerve not certified EDCE (" + to_string(r.edce.status) +
                                     "): no 2d+1 bound");
        if (r.top_homology_nonzero) {
            r.bounds.add("actdim", BoundKind::Exact, 2 * d + 2, "H_d(L;Z/2) != 0: actdim = obdim = 2d+2" + why);
            r.bounds.add("obdim", BoundKind::Exact, 2 * d + 2, "H_d(L;Z/2) != 0: actdim = obdim = 2d+2" + why);
        }
    } else {
        r.bounds.notes.push_back("K(pi,1) not assumed and nerve not flag: dimension bounds withheld");
    }
    r.bounds.notes.push_back("L_odot has " + std::to_string(r.lodot_vertices) +
                             " vertices; its simplex rule (nested or orthogonal, spherical union) is provisional");
    r.bounds.check_consistency();
    return r;
}

GraphProductReport graph_product_actdim_report(const SimplicialComplex& l, const std::vector<VertexManifold>& data,
                                               EdceHint hint)
{
    require(l.num_vertices() > 0, "graph product: empty complex");
    require(is_flag(l), "graph product: L must be a flag complex");
    require(data.size() == l.num_vertices(), "graph product: vertex data has " + std::to_string(data.size()) +
                                                 " entries for " + std::to_string(l.num_vertices()) + " vertices");
    for (std::size_t v = 0; v < data.size(); ++v) {
        require(data[v].dim >= 1, "graph product: vertex " + l.labels()[v] + " needs dimension >= 1");
        require(data[v].closed || data[v].dim >= 2,
                "graph product: vertex " + l.labels()[v] + " has boundary and needs dimension >= 2");
    }
    GraphProductReport r;
    r.d = l.dim();
    const long long d = r.d;
    r.top_homology_nonzero = top_reduced_z2_nonzero(l);
    switch (hint) {
    case EdceHint::Yes:
        require(!r.top_homology_nonzero, "graph product: EDCE hint contradicts H_d(L;Z/2) != 0");
        r.edce = true;
        break;
    case EdceHint::No:
        r.edce = false;
        break;
    case EdceHint::Auto:
        r.edce = edce_verdict(l).status == EdceStatus::Edce;
        break;
    }

    long long sup = 0;
    for (const auto& f : l.facets()) {
        long long s = 0;
        for (auto v : f)
            s += data[static_cast<std::size_t>(v)].dim + (data[static_cast<std::size_t>(v)].closed ? 1 : 0);
        sup = std::max(sup, s);
    }
    r.bounds.add("actdim", BoundKind::Upper, sup, "sup over simplices of thickened vertex-manifold dimensions");

    const int m0 = data[0].dim;
    if (std::all_of(data.begin(), data.end(), [&](const VertexManifold& x) { return x.closed && x.dim == m0; }))
        r.uniform_closed_dim = m0;
    if (r.uniform_closed_dim) {
        const long long m = *r.uniform_closed_dim;
        r.bounds.add("gdim", BoundKind::Exact, m * (d + 1), "closed vertex manifolds of dimension m: gdim = m(d+1)");
        r.bounds.add("actdim", BoundKind::Upper, (m + 1) * (d + 1), "closed vertex manifolds: actdim <= (m+1)(d+1)");
        if (r.edce)
            r.bounds.add("actdim", BoundKind::Upper, (m + 1) * (d + 1) - 1,
                         "EDCE L with closed vertex manifolds: actdim <= (m+1)(d+1)-1");
        if (r.top_homology_nonzero) {
            r.bounds.add("actdim", BoundKind::Exact, (m + 1) * (d + 1),
                         "H_d(L;Z/2) != 0 with closed vertex manifolds: actdim = (m+1)(d+1)");
            r.bounds.add("obdim", BoundKind::Lower, (m + 1) * (d + 1),
                         "H_d(L;Z/2) != 0 with closed vertex manifolds: obdim >= (m+1)(d+1)");
        }
    } else {
        r.bounds.notes.push_back("vertex manifolds are mixed: only the supremum bound applies");
    }
    r.bounds.check_consistency();
    return r;
}

}  // namespace actdim
