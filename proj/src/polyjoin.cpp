#include "actdim/polyjoin.hpp"

#include <algorithm>

#include "actdim/chains.hpp"

namespace actdim {

Simplex OctaComplex::project(const Simplex& s) const
{
    Simplex out;
    for (Vertex v : s)
        out.push_back(project(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Vertex> OctaComplex::find(Vertex base_vertex, int label) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), LabeledVertex{base_vertex, label});
    if (it == vertices.end() || !(*it == LabeledVertex{base_vertex, label}))
        return std::nullopt;
    return static_cast<Vertex>(it - vertices.begin());
}

std::string labeled_id(const SimplicialComplex& base, Vertex v, int label)
{
    return base.label(v) + ":" + std::to_string(label);
}

SimplicialComplex polyhedral_join(const SimplicialComplex& l, const std::vector<SimplicialComplex>& factors)
{
    require(factors.size() == l.num_vertices(), "polyhedral join needs one factor per vertex");
    std::vector<std::string> labels;
    std::vector<Vertex> offset;
    for (const auto& f : factors) {
        require(!f.empty(), "polyhedral join: empty factor complex");
        offset.push_back(static_cast<Vertex>(labels.size()));
        labels.insert(labels.end(), f.labels().begin(), f.labels().end());
    }

    std::vector<Simplex> gens;
    for (const auto& sigma : l.facets()) {
        // Cartesian product of one factor facet per vertex of sigma.
        std::vector<Simplex> partial{Simplex{}};
        for (Vertex v : sigma) {
            const auto& f = factors[static_cast<std::size_t>(v)];
            std::vector<Simplex> next;
            next.reserve(partial.size() * f.facets().size());
            for (const auto& p : partial) {
                for (const auto& phi : f.facets()) {
                    Simplex s = p;
                    for (Vertex w : phi)
                        s.push_back(w + offset[static_cast<std::size_t>(v)]);
                    next.push_back(std::move(s));
                }
            }
            partial = std::move(next);
        }
        gens.insert(gens.end(), partial.begin(), partial.end());
    }
    // from_index_facets rejects duplicate identifiers across factors.
    return SimplicialComplex::from_index_facets(std::move(labels), gens);
}

OctaComplex octahedralization(const SimplicialComplex& l, int m)
{
    require(m >= 1, "octahedralization needs m >= 1");
    std::vector<SimplicialComplex> factors;
    std::vector<Simplex> sphere;
    for (int omit = m; omit >= 0; --omit) {
        Simplex s;
        for (int i = 0; i <= m; ++i)
            if (i != omit)
                s.push_back(i);
        sphere.push_back(s);
    }
    OctaComplex out;
    for (Vertex v = 0; v < static_cast<Vertex>(l.num_vertices()); ++v) {
        std::vector<std::string> ids;
        for (int i = 0; i <= m; ++i) {
            ids.push_back(labeled_id(l, v, i));
            out.vertices.push_back({v, i});
        }
        factors.push_back(SimplicialComplex::from_index_facets(std::move(ids), sphere));
    }
    out.base = l;
    out.complex = polyhedral_join(l, factors);
    out.m = m;
    out.d = l.dim();
    out.delta = m * (out.d + 1) - 1;
    check_internal(l.empty() || out.complex.dim() == out.delta, "octahedralization has the wrong dimension");
    return out;
}

namespace {

OctaComplex restrict_octa(const OctaComplex& o, const std::vector<Vertex>& w)
{
    OctaComplex out;
    out.base = o.base;
    out.m = o.m;
    out.complex = full_subcomplex(o.complex, w);
    for (Vertex v : w)
        out.vertices.push_back(o.vertices[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace

OctaComplex doubled_complex(const SimplicialComplex& l, int m, const std::vector<Simplex>& cycle,
                            const Simplex& delta)
{
    require(m >= 1, "doubled complex needs m >= 1");
    require(!cycle.empty(), "doubled complex: empty cycle");
    require(is_flag(l), "doubled complex: L must be flag");
    const std::size_t k1 = cycle.front().size();
    for (const auto& s : cycle) {
        require(s.size() == k1, "doubled complex: cycle simplices must share one dimension");
        require(l.contains(s), "doubled complex: cycle simplex " + simplex_label(l, s) + " is not in L");
    }
    require(z2_boundary(cycle).empty(), "doubled complex: C is not a cycle");
    require(std::find(cycle.begin(), cycle.end(), delta) != cycle.end(),
            "doubled complex: Delta is not a simplex of C");

    const OctaComplex o = octahedralization(l, m);
    std::vector<bool> in_c(l.num_vertices(), false);
    for (const auto& s : cycle)
        for (Vertex v : s)
            in_c[static_cast<std::size_t>(v)] = true;
    std::vector<Vertex> w;
    for (Vertex v = 0; v < static_cast<Vertex>(o.vertices.size()); ++v) {
        const auto& lv = o.vertices[static_cast<std::size_t>(v)];
        const bool in_delta = std::binary_search(delta.begin(), delta.end(), lv.base);
        if (in_delta || (in_c[static_cast<std::size_t>(lv.base)] && lv.label == 0))
            w.push_back(v);
    }
    OctaComplex out = restrict_octa(o, w);
    out.d = static_cast<int>(k1) - 1;
    out.delta = m * (out.d + 1) - 1;
    return out;
}

OctaComplex octa_from_parts(const SimplicialComplex& base, int m, const SimplicialComplex& complex)
{
    const OctaComplex o = octahedralization(base, m);
    std::vector<Vertex> w;
    for (const auto& id : complex.labels()) {
        auto v = o.complex.find_vertex(id);
        require(v.has_value(), "vertex '" + id + "' is not a vertex of O_m(base)");
        w.push_back(*v);
    }
    require(std::is_sorted(w.begin(), w.end()), "complex vertices are not in O_m(base) order");
    OctaComplex out = restrict_octa(o, w);
    require(out.complex == complex, "complex is not a full subcomplex of O_m(base)");
    out.d = o.d;
    out.delta = o.delta;
    return out;
}

}  // namespace actdim
