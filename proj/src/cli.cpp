#include "actdim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "actdim/arrangement.hpp"
#include "actdim/chains.hpp"
#include "actdim/coxart.hpp"
#include "actdim/errors.hpp"
#include "actdim/polyjoin.hpp"
#include "actdim/scomplex.hpp"
#include "actdim/vk.hpp"

namespace actdim::cli {

namespace {

using json = nlohmann::json;

struct Options
{
    std::string file;
    int degree = -1;
    int m = -1;
    std::string ordering;
    std::string out;
    std::string cycle = "auto";
    std::string simplex;
    std::string building = "irreducibles";
    std::vector<std::string> flats;
    std::string edce = "auto";
    bool aspherical = false;
    bool assume_kpi1 = false;
    bool quiet = false;
};

/// One run: collects the inputs read and the pieces of the report.
struct Invocation
{
    std::string command;
    std::vector<std::string> arguments;
    std::vector<std::string> inputs;
    json result = json::object();
    json provenance = json::array();
    json witnesses = json::object();
    json notes = json::array();

    std::string read(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        require(in.good(), "cannot open input file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        inputs.push_back(ss.str());
        return inputs.back();
    }

    json read_json(const std::string& path)
    {
        const std::string text = read(path);
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw InputError("'" + path + "' is not valid JSON: " + e.what());
        }
    }
};

std::string sha256_hex(const std::vector<std::string>& parts)
{
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    check_internal(ctx != nullptr, "cannot allocate a digest context");
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            EVP_DigestUpdate(ctx, "\0", 1);
        EVP_DigestUpdate(ctx, parts[i].data(), parts[i].size());
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

// --- input parsing -----------------------------------------------------------

template <typename T>
T field(const json& j, const std::string& key, const std::string& what)
{
    require(j.is_object() && j.contains(key), what + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(what + ": field '" + key + "' has the wrong type");
    }
}

SimplicialComplex complex_from_json(const json& j)
{
    auto vertices = field<std::vector<std::string>>(j, "vertices", "complex");
    auto facets = field<std::vector<std::vector<std::string>>>(j, "facets", "complex");
    return SimplicialComplex::from_facets(std::move(vertices), facets);
}

json complex_to_json(const SimplicialComplex& k)
{
    json facets = json::array();
    for (const auto& f : k.facets())
        facets.push_back(k.ids_of(f));
    return {{"vertices", k.labels()}, {"facets", facets}};
}

struct LoadedComplex
{
    SimplicialComplex complex;
    std::optional<OctaComplex> octa;
};

LoadedComplex load_complex(Invocation& inv, const std::string& path)
{
    const json j = inv.read_json(path);
    LoadedComplex lc{complex_from_json(j), std::nullopt};
    if (j.contains("octa")) {
        const json& o = j.at("octa");
        const auto base = complex_from_json(o.at("base"));
        lc.octa = octa_from_parts(base, field<int>(o, "m", "octa metadata"), lc.complex);
    }
    return lc;
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    require(j.is_string(), "rational must be an integer or a string \"p/q\"");
    return parse_rational(j.get<std::string>());
}

Arrangement arrangement_from_json(const json& j)
{
    const int n = field<int>(j, "dim", "arrangement");
    require(j.contains("hyperplanes") && j.at("hyperplanes").is_array(), "arrangement: missing 'hyperplanes' list");
    std::vector<Hyperplane> hs;
    for (const auto& h : j.at("hyperplanes")) {
        require(h.contains("normal") && h.at("normal").is_array(), "hyperplane: missing 'normal' list");
        Hyperplane g;
        for (const auto& x : h.at("normal"))
            g.normal.push_back(rational_from_json(x));
        require(h.contains("offset"), "hyperplane: missing 'offset'");
        g.offset = rational_from_json(h.at("offset"));
        hs.push_back(std::move(g));
    }
    return Arrangement(n, std::move(hs));
}

CoxeterSystem coxeter_from_json(const json& j)
{
    return CoxeterSystem(field<std::vector<std::string>>(j, "generators", "Coxeter system"),
                         field<std::vector<std::vector<int>>>(j, "matrix", "Coxeter system"));
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty())
            out.push_back(cur);
    return out;
}

VertexOrdering load_ordering(Invocation& inv, const Options& o, const SimplicialComplex& k)
{
    if (o.ordering.empty())
        return VertexOrdering::identity(k.num_vertices());
    const json j = inv.read_json(o.ordering);
    std::vector<std::string> ids;
    try {
        ids = j.get<std::vector<std::string>>();
    } catch (const json::exception&) {
        throw InputError("ordering file must be a list of vertex identifiers");
    }
    std::vector<Vertex> seq;
    for (const auto& id : ids)
        seq.push_back(k.vertex(id));
    return VertexOrdering::from_sequence(seq, k.num_vertices());
}

std::vector<Simplex> load_cycle(Invocation& inv, const Options& o, const SimplicialComplex& l)
{
    if (o.cycle == "auto") {
        auto c = find_z2_cycle(l, l.dim());
        require(c.has_value(), "no GF(2) cycle in the top degree of the complex; pass --cycle <file>");
        return *c;
    }
    const json j = inv.read_json(o.cycle);
    std::vector<std::vector<std::string>> ids;
    try {
        ids = j.get<std::vector<std::vector<std::string>>>();
    } catch (const json::exception&) {
        throw InputError("cycle file must be a list of simplices (lists of vertex identifiers)");
    }
    require(!ids.empty(), "cycle is empty");
    std::vector<Simplex> c;
    for (const auto& s : ids) {
        c.push_back(l.simplex_from_ids(s));
        require(l.contains(c.back()), "cycle simplex " + simplex_label(l, c.back()) + " is not in the complex");
        require(c.back().size() == c.front().size(), "cycle simplices have different dimensions");
    }
    std::sort(c.begin(), c.end());
    require(std::adjacent_find(c.begin(), c.end()) == c.end(), "cycle lists a simplex twice");
    require(z2_boundary(c).empty(), "the given chain is not a GF(2) cycle");
    return c;
}

Simplex load_simplex(const Options& o, const SimplicialComplex& l, const std::vector<Simplex>& cycle)
{
    if (o.simplex.empty())
        return cycle.front();
    Simplex s = l.simplex_from_ids(split(o.simplex, ','));
    require(l.contains(s), "simplex " + simplex_label(l, s) + " is not in the complex");
    return s;
}

int require_m(const Options& o)
{
    require(o.m >= 1, "--m must be given and at least 1");
    return o.m;
}

json labels_of(const FlatPoset& q, const std::vector<std::size_t>& flats)
{
    json out = json::array();
    for (auto f : flats)
        out.push_back(q[f].label());
    return out;
}

json generator_sets(const CoxeterSystem& w, const std::vector<GeneratorSet>& sets)
{
    json out = json::array();
    for (const auto& t : sets)
        out.push_back(generator_label(w, t));
    return out;
}

json opt_value(const std::optional<long long>& v)
{
    return v ? json(*v) : json(nullptr);
}

/// Copies bounds into the provenance list and returns a per-quantity summary.
json add_bounds(Invocation& inv, const BoundReport& b)
{
    for (const auto& x : b.bounds)
        inv.provenance.push_back(
            {{"quantity", x.quantity}, {"kind", to_string(x.kind)}, {"value", x.value}, {"source", x.provenance}});
    for (const auto& n : b.notes)
        inv.notes.push_back(n);
    json summary = json::object();
    for (const std::string q : {"actdim", "obdim", "gdim"})
        summary[q] = {{"lower", opt_value(b.lower(q))}, {"upper", opt_value(b.upper(q))}, {"exact", opt_value(b.exact(q))}};
    return summary;
}

json chain_labels(const ConfigComplex& cc, int degree, const std::vector<std::size_t>& support)
{
    json out = json::array();
    for (auto i : support)
        out.push_back(cc.cell_label(cc.cells(degree)[i]));
    return out;
}

void write_octa(Invocation& inv, const Options& o, const OctaComplex& oc)
{
    if (o.out.empty())
        return;
    json j = complex_to_json(oc.complex);
    j["octa"] = {{"m", oc.m}, {"base", complex_to_json(oc.base)}};
    std::ofstream f(o.out);
    require(f.good(), "cannot write '" + o.out + "'");
    f << j.dump(2) << "\n";
    inv.result["written"] = o.out;
}

// --- commands ----------------------------------------------------------------

void complex_homology(Invocation& inv, const Options& o)
{
    const auto k = load_complex(inv, o.file).complex;
    const auto h = integral_homology(k);
    json degrees = json::array();
    for (std::size_t d = 0; d < h.degrees.size(); ++d) {
        json torsion = json::array();
        for (const auto& t : h.degrees[d].torsion)
            torsion.push_back(t.str());
        degrees.push_back({{"degree", d},
                           {"betti_z2", h.degrees[d].betti_z2},
                           {"free_rank", h.degrees[d].free_rank},
                           {"torsion", torsion}});
    }
    inv.result = {{"dim", k.dim()},
                  {"f_vector", k.f_vector()},
                  {"euler_characteristic", k.euler_characteristic()},
                  {"betti_z2", betti_z2(k)},
                  {"reduced_betti_z2", reduced_betti_z2(k)},
                  {"integral", degrees}};
}

void complex_edce(Invocation& inv, const Options& o)
{
    const auto k = load_complex(inv, o.file).complex;
    const auto v = edce_verdict(k);
    inv.result = {{"dim", k.dim()}, {"status", to_string(v.status)}};
    if (!v.witness.empty())
        inv.witnesses["failed_condition"] = v.witness;
}

void complex_flag(Invocation& inv, const Options& o)
{
    const auto k = load_complex(inv, o.file).complex;
    const auto r = flag_check_and_complete(k);
    inv.result = {{"is_flag", r.is_flag},
                  {"f_vector", k.f_vector()},
                  {"completion_f_vector", r.completion.f_vector()},
                  {"completion", complex_to_json(r.completion)}};
    if (!r.is_flag) {
        // A smallest clique that is not a face.
        for (int d = 2; d <= r.completion.dim(); ++d) {
            auto it = std::find_if(r.completion.faces(d).begin(), r.completion.faces(d).end(),
                                   [&](const Simplex& s) { return !k.contains(s); });
            if (it != r.completion.faces(d).end()) {
                inv.witnesses["missing_clique"] = r.completion.ids_of(*it);
                break;
            }
        }
    }
}

void complex_subdivide(Invocation& inv, const Options& o)
{
    const auto sd = barycentric_subdivision(load_complex(inv, o.file).complex);
    inv.result = {{"f_vector", sd.f_vector()}, {"complex", complex_to_json(sd)}};
}

void octa_build(Invocation& inv, const Options& o)
{
    const auto l = load_complex(inv, o.file).complex;
    const auto oc = octahedralization(l, require_m(o));
    inv.result = {{"m", oc.m},
                  {"d", oc.d},
                  {"delta", oc.delta},
                  {"f_vector", oc.complex.f_vector()},
                  {"complex", complex_to_json(oc.complex)}};
    write_octa(inv, o, oc);
}

void octa_doubled(Invocation& inv, const Options& o)
{
    const auto l = load_complex(inv, o.file).complex;
    const auto cycle = load_cycle(inv, o, l);
    const auto delta = load_simplex(o, l, cycle);
    const auto oc = doubled_complex(l, require_m(o), cycle, delta);
    json c = json::array();
    for (const auto& s : cycle)
        c.push_back(l.ids_of(s));
    inv.result = {{"m", oc.m},
                  {"d", oc.d},
                  {"delta", oc.delta},
                  {"simplex", l.ids_of(delta)},
                  {"f_vector", oc.complex.f_vector()},
                  {"complex", complex_to_json(oc.complex)}};
    inv.witnesses["cycle"] = c;
    write_octa(inv, o, oc);
}

int require_degree(const Options& o)
{
    require(o.degree >= 0, "--degree must be given and nonnegative");
    return o.degree;
}

void vk_compute(Invocation& inv, const Options& o)
{
    const auto k = load_complex(inv, o.file).complex;
    const int n = require_degree(o);
    const auto order = load_ordering(inv, o, k);
    const ConfigComplex cc(k);
    const auto c = vk_cocycle(cc, n, order);
    inv.result = {{"degree", n},
                  {"config_dim", cc.dim()},
                  {"cells", cc.count(n)},
                  {"support_size", c.support.size()},
                  {"is_cocycle", is_cocycle(cc, c)}};
    inv.witnesses["cocycle"] = chain_labels(cc, n, c.support);
}

void vk_nontrivial_cmd(Invocation& inv, const Options& o)
{
    const auto lc = load_complex(inv, o.file);
    const int n = require_degree(o);
    const ConfigComplex cc(lc.complex);
    auto order = load_ordering(inv, o, lc.complex);

    std::optional<Gf2Chain> omega;
    if (lc.octa) {
        // Candidate cycle: Omega of a doubled complex over a top cycle of the base.
        const auto& base = lc.octa->base;
        const int m = lc.octa->m;
        const int d = base.dim();
        const auto full = octahedralization(base, m);
        auto cycle = find_z2_cycle(base, d);
        if (full.complex == lc.complex && cycle && n == d + m * (d + 1) - 1 && is_flag(base)) {
            const Simplex delta = cycle->front();
            const auto dbl = doubled_complex(base, m, *cycle, delta);
            const ConfigComplex dcc(dbl.complex);
            omega = transport(omega_chain(dbl, dcc, delta), dcc, cc);
            if (o.ordering.empty())
                order = canonical_octa_ordering(full, delta);
            inv.witnesses["omega_simplex"] = base.ids_of(delta);
        } else {
            inv.notes.push_back("no Omega candidate for this complex and degree; solver only");
        }
    }

    const auto verdict = vk_nontrivial(cc, n, order, omega);
    inv.result = {{"degree", n}, {"cells", cc.count(n)}};
    if (auto* p = std::get_if<NontrivialByPairing>(&verdict)) {
        inv.result["nontrivial"] = true;
        inv.result["method"] = "pairing with the Omega cycle";
        inv.witnesses["cycle"] = chain_labels(cc, n, p->cycle.support);
    } else if (auto* s = std::get_if<NontrivialBySolver>(&verdict)) {
        inv.result["nontrivial"] = true;
        inv.result["method"] = "coboundary equation has no solution";
        inv.witnesses["cycle"] = chain_labels(cc, n, s->witness.support);
    } else {
        const auto& t = std::get<Trivial>(verdict);
        inv.result["nontrivial"] = false;
        inv.result["method"] = "coboundary certificate";
        inv.witnesses["certificate"] = chain_labels(cc, n - 1, t.certificate.support);
    }
}

void vk_omega(Invocation& inv, const Options& o)
{
    const auto l = load_complex(inv, o.file).complex;
    const auto cycle = load_cycle(inv, o, l);
    const auto delta = load_simplex(o, l, cycle);
    const auto dbl = doubled_complex(l, require_m(o), cycle, delta);
    const ConfigComplex cc(dbl.complex);
    const auto z = omega_chain(dbl, cc, delta);
    const auto c = vk_cocycle(cc, z.degree, canonical_octa_ordering(dbl, delta));
    inv.result = {{"m", dbl.m},
                  {"d", dbl.d},
                  {"delta", dbl.delta},
                  {"degree", z.degree},
                  {"size", z.support.size()},
                  {"is_cycle", is_cycle(cc, z)},
                  {"pairing", evaluate(c, z) ? 1 : 0},
                  {"simplex", l.ids_of(delta)}};
    inv.witnesses["omega"] = chain_labels(cc, z.degree, z.support);
}

void vk_star(Invocation& inv, const Options& o)
{
    const auto l = load_complex(inv, o.file).complex;
    const auto cycle = load_cycle(inv, o, l);
    const auto delta = load_simplex(o, l, cycle);
    inv.result = {{"holds", star_condition(l, cycle, delta)}, {"simplex", l.ids_of(delta)}};
}

void arr_poset(Invocation& inv, const Options& o)
{
    const FlatPoset q(arrangement_from_json(inv.read_json(o.file)));
    json flats = json::array();
    for (const auto& f : q.flats()) {
        json point = json::array(), basis = json::array();
        for (const auto& x : f.basepoint)
            point.push_back(format_rational(x));
        for (const auto& b : f.basis) {
            json v = json::array();
            for (const auto& x : b)
                v.push_back(format_rational(x));
            basis.push_back(v);
        }
        flats.push_back({{"label", f.label()}, {"codim", f.codim}, {"hyperplanes", f.hyperplanes},
                         {"basepoint", point}, {"basis", basis}});
    }
    json covers = json::array();
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (q.less(i, j) && q[j].codim == q[i].codim + 1)
                covers.push_back({q[i].label(), q[j].label()});
    inv.result = {{"count", q.size()}, {"flats", flats}, {"covers", covers}};
}

void arr_props(Invocation& inv, const Options& o)
{
    const auto a = arrangement_from_json(inv.read_json(o.file));
    const auto p = properties(FlatPoset(a));
    inv.result = {{"dim", a.dim()},
                  {"hyperplanes", a.size()},
                  {"rank", p.rank},
                  {"essential", p.essential},
                  {"central", p.central}};
}

void arr_irr(Invocation& inv, const Options& o)
{
    const auto a = arrangement_from_json(inv.read_json(o.file));
    const FlatPoset q(a);
    const auto p = properties(q);
    const auto f = central_factors(a);
    inv.result = {{"central", p.central},
                  {"set_of_irreducibles", labels_of(q, set_of_irreducibles(q))},
                  {"central_factors", f.central},
                  {"noncentral_part", f.rest}};
    if (p.central) {
        const auto blocks = irreducible_decomposition(a);
        inv.result["decomposition"] = blocks;
        inv.result["irreducible"] = blocks.size() == 1;
    } else {
        inv.result["decomposition"] = nullptr;
        inv.result["irreducible"] = nullptr;
        inv.notes.push_back("noncentral arrangement: irreducible decomposition is defined for central ones only");
    }
}

void arr_nested(Invocation& inv, const Options& o)
{
    const FlatPoset q(arrangement_from_json(inv.read_json(o.file)));
    std::vector<std::size_t> building;
    if (o.building == "irreducibles") {
        building = set_of_irreducibles(q);
    } else if (o.building == "all") {
        for (std::size_t i = 1; i < q.size(); ++i)
            building.push_back(i);
    } else {
        throw InputError("--building must be 'irreducibles' or 'all'");
    }
    const auto nc = nested_complex(q, building);
    const auto fc = flag_completion(nc);
    inv.result = {{"building_set", labels_of(q, nc.building)},
                  {"f_vector", nc.complex.f_vector()},
                  {"complex", complex_to_json(nc.complex)},
                  {"flag_completion", {{"dim", fc.complex.dim()},
                                       {"f_vector", fc.complex.f_vector()},
                                       {"complex", complex_to_json(fc.complex)}}}};
}

void arr_poincare(Invocation& inv, const Options& o)
{
    const FlatPoset q(arrangement_from_json(inv.read_json(o.file)));
    const auto d = mobius_poincare_beta(q);
    json mu = json::array();
    for (std::size_t i = 0; i < q.size(); ++i)
        mu.push_back({{"flat", q[i].label()}, {"codim", q[i].codim}, {"mu", d.mu[i]}});
    inv.result = {{"mobius", mu}, {"poincare", d.poincare}, {"beta", d.beta}};
}

void arr_chain(Invocation& inv, const Options& o)
{
    const FlatPoset q(arrangement_from_json(inv.read_json(o.file)));
    const auto p = properties(q);
    const auto c = complete_chain(q);
    inv.result = {{"essential", p.essential}, {"chain", c ? labels_of(q, *c) : json(nullptr)}};
    if (!p.essential)
        inv.notes.push_back("arrangement is not essential: no complete chain is searched");
}

void arr_h1(Invocation& inv, const Options& o)
{
    const FlatPoset q(arrangement_from_json(inv.read_json(o.file)));
    std::vector<std::size_t> flats;
    for (const auto& spec : o.flats) {
        HyperplaneSet hs;
        for (const auto& t : split(spec, ',')) {
            require(!t.empty() && std::all_of(t.begin(), t.end(), ::isdigit), "bad hyperplane index '" + t + "'");
            hs.push_back(std::stoul(t));
        }
        std::sort(hs.begin(), hs.end());
        auto f = q.find(hs);
        require(f.has_value(), "no flat has exactly the hyperplanes {" + spec + "}");
        flats.push_back(*f);
    }
    const auto fiq = flag_completion(irreducible_complex(q));
    if (flats.empty()) {
        if (auto c = complete_chain(q)) {
            flats = *c;
            inv.notes.push_back("no --flat given: using the complete chain of irreducibles");
        } else if (!fiq.complex.facets().empty()) {
            for (auto v : fiq.complex.facets().front())
                flats.push_back(fiq.building[static_cast<std::size_t>(v)]);
            inv.notes.push_back("no --flat given: using the first facet of FIQ");
        }
    }
    const auto h = h1_images(q, flats);
    Simplex s;
    for (auto f : flats) {
        auto it = std::find(fiq.building.begin(), fiq.building.end(), f);
        s.push_back(static_cast<Vertex>(it - fiq.building.begin()));
    }
    std::sort(s.begin(), s.end());
    inv.result = {{"flats", labels_of(q, flats)},
                  {"vectors", h.vectors},
                  {"independent", h.independent},
                  {"simplex_of_fiq", !s.empty() && fiq.complex.contains(s)}};
}

void arr_actdim(Invocation& inv, const Options& o)
{
    const auto a = arrangement_from_json(inv.read_json(o.file));
    const auto r = arrangement_actdim_report(a, o.aspherical);
    const FlatPoset q(a);
    inv.result = {{"dim", a.dim()},
                  {"rank", r.props.rank},
                  {"essential", r.props.essential},
                  {"central", r.props.central},
                  {"irreducible", r.irreducible},
                  {"aspherical_assumed", o.aspherical},
                  {"central_factors", r.factors.central},
                  {"k", r.factors.central.size()},
                  {"fiq_dim", r.fiq_dim}};
    inv.result["bounds"] = add_bounds(inv, r.bounds);
    if (r.chain)
        inv.witnesses["complete_chain"] = labels_of(q, *r.chain);
    if (r.contradiction)
        inv.witnesses["fiq_simplex_too_large"] = labels_of(q, *r.contradiction);
}

void cox_nerve(Invocation& inv, const Options& o)
{
    const auto w = coxeter_from_json(inv.read_json(o.file));
    const auto l = nerve(w);
    json spherical = json::array();
    for (int d = 0; d <= l.dim(); ++d)
        for (const auto& s : l.faces(d)) {
            json types = json::array();
            for (const auto& c : diagram_components(w, s))
                types.push_back(*finite_type(w, c));
            spherical.push_back({{"subset", generator_label(w, s)}, {"types", types}});
        }
    inv.result = {{"d", l.dim()},
                  {"f_vector", l.f_vector()},
                  {"is_flag", is_flag(l)},
                  {"complex", complex_to_json(l)},
                  {"spherical_subsets", spherical}};
}

void cox_lodot(Invocation& inv, const Options& o)
{
    const auto w = coxeter_from_json(inv.read_json(o.file));
    const auto lo = l_odot(w);
    inv.result = {{"vertices", generator_sets(w, lo.subsets)},
                  {"f_vector", lo.complex.f_vector()},
                  {"complex", complex_to_json(lo.complex)}};
    inv.notes.push_back("simplex rule of L_odot (nested or orthogonal, spherical union) is provisional");
}

void cox_actdim(Invocation& inv, const Options& o)
{
    const auto w = coxeter_from_json(inv.read_json(o.file));
    const auto r = artin_actdim_report(w, o.assume_kpi1);
    inv.result = {{"d", r.d},
                  {"generators", w.size()},
                  {"spherical", r.spherical},
                  {"kpi1", r.kpi1},
                  {"kpi1_from_flag_nerve", r.kpi1_from_flag},
                  {"edce", to_string(r.edce.status)},
                  {"top_homology_nonzero", r.top_homology_nonzero},
                  {"irreducible_factors", generator_sets(w, r.factors)},
                  {"lodot_vertices", r.lodot_vertices}};
    inv.result["bounds"] = add_bounds(inv, r.bounds);
}

void gp_actdim(Invocation& inv, const Options& o)
{
    const json j = inv.read_json(o.file);
    const auto l = complex_from_json(j);
    std::vector<VertexManifold> data(l.num_vertices());
    const bool has_data = j.contains("vertex_data");
    require(has_data || o.m >= 1, "graph product: give 'vertex_data' in the file or a uniform --m");
    for (std::size_t v = 0; v < l.num_vertices(); ++v) {
        const auto& id = l.labels()[v];
        if (has_data && j.at("vertex_data").contains(id)) {
            const auto& e = j.at("vertex_data").at(id);
            data[v] = VertexManifold{field<int>(e, "dim", "vertex_data." + id),
                                     e.contains("closed") ? field<bool>(e, "closed", "vertex_data." + id) : true};
        } else {
            require(o.m >= 1, "graph product: no vertex_data for '" + id + "' and no --m");
            data[v] = VertexManifold{o.m, true};
        }
    }
    EdceHint hint = EdceHint::Auto;
    if (o.edce == "yes")
        hint = EdceHint::Yes;
    else if (o.edce == "no")
        hint = EdceHint::No;
    else
        require(o.edce == "auto", "--edce must be yes, no or auto");
    const auto r = graph_product_actdim_report(l, data, hint);
    inv.result = {{"d", r.d},
                  {"uniform_closed_dim", r.uniform_closed_dim ? json(*r.uniform_closed_dim) : json(nullptr)},
                  {"edce", r.edce},
                  {"top_homology_nonzero", r.top_homology_nonzero}};
    inv.result["bounds"] = add_bounds(inv, r.bounds);
}

// --- dispatch ----------------------------------------------------------------

struct Command
{
    std::string group;
    std::string action;
    std::string summary;
    std::vector<std::string> options;
    void (*run)(Invocation&, const Options&);
};

const std::vector<Command>& commands()
{
    static const std::vector<Command> table = {
        {"complex", "homology", "Betti numbers and integral homology", {}, complex_homology},
        {"complex", "edce", "homological EDCE verdict", {}, complex_edce},
        {"complex", "flag", "flag check and clique completion", {}, complex_flag},
        {"complex", "subdivide", "barycentric subdivision", {}, complex_subdivide},
        {"octa", "build", "octahedralization O_mL", {"m", "out"}, octa_build},
        {"octa", "doubled", "doubled complex over a cycle", {"m", "cycle", "simplex", "out"}, octa_doubled},
        {"vk", "compute", "van Kampen cocycle", {"degree", "ordering"}, vk_compute},
        {"vk", "nontrivial", "decide whether vk is nonzero", {"degree", "ordering"}, vk_nontrivial_cmd},
        {"vk", "omega", "Omega cycle and its pairing", {"m", "cycle", "simplex"}, vk_omega},
        {"vk", "star", "star condition for a cycle and simplex", {"cycle", "simplex"}, vk_star},
        {"arr", "poset", "intersection poset", {}, arr_poset},
        {"arr", "props", "rank, essential, central", {}, arr_props},
        {"arr", "irr", "irreducible decomposition and irreducible flats", {}, arr_irr},
        {"arr", "nested", "nested set complex and flag completion", {"building"}, arr_nested},
        {"arr", "poincare", "Moebius function, Poincare polynomial, beta", {}, arr_poincare},
        {"arr", "chain", "complete chain of irreducibles", {}, arr_chain},
        {"arr", "h1", "H1 images of a simplex of FIQ", {"flat"}, arr_h1},
        {"arr", "actdim", "action dimension report", {"aspherical"}, arr_actdim},
        {"cox", "nerve", "nerve of a Coxeter system", {}, cox_nerve},
        {"cox", "lodot", "subdivided nerve L_odot", {}, cox_lodot},
        {"cox", "actdim", "Artin group action dimension report", {"assume-kpi1"}, cox_actdim},
        {"gp", "actdim", "graph product action dimension report", {"m", "edce"}, gp_actdim},
    };
    return table;
}

void add_options(CLI::App& app, Options& o, const Command& c)
{
    app.add_option("file", o.file, "input file");
    app.add_option("--complex,--input", o.file, "input file, as an alternative to the positional argument");
    app.add_flag("--quiet", o.quiet, "print the result payload only");
    auto wants = [&](const std::string& name) {
        return std::find(c.options.begin(), c.options.end(), name) != c.options.end();
    };
    if (wants("degree"))
        app.add_option("--degree", o.degree, "cochain degree")->required();
    if (wants("m"))
        app.add_option("--m", o.m, "sphere dimension / vertex manifold dimension");
    if (wants("ordering"))
        app.add_option("--ordering", o.ordering, "file with a list of vertex ids, smallest first");
    if (wants("out"))
        app.add_option("--out", o.out, "write the complex with its octahedral metadata");
    if (wants("cycle"))
        app.add_option("--cycle", o.cycle, "'auto' or a file with a list of simplices");
    if (wants("simplex"))
        app.add_option("--simplex", o.simplex, "comma-separated vertex ids");
    if (wants("building"))
        app.add_option("--building", o.building, "'irreducibles' or 'all'");
    if (wants("flat"))
        app.add_option("--flat", o.flats, "comma-separated hyperplane indices of a flat (repeatable)");
    if (wants("aspherical"))
        app.add_flag("--aspherical", o.aspherical, "assume the complement is aspherical");
    if (wants("assume-kpi1"))
        app.add_flag("--assume-kpi1", o.assume_kpi1, "assume the K(pi,1) conjecture for this Artin group");
    if (wants("edce"))
        app.add_option("--edce", o.edce, "yes, no or auto");
}

}  // namespace

std::string usage()
{
    std::string s = "usage: actdim <group> <command> <file> [options]\n\ncommands:\n";
    for (const auto& c : commands()) {
        std::string name = c.group + " " + c.action;
        name.resize(18, ' ');
        s += "  " + name + c.summary + "\n";
    }
    s += "\nRun 'actdim <group> <command> --help' for the options of one command.\n";
    return s;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        (args.empty() ? err : out) << usage();
        return args.empty() ? exit_usage : exit_ok;
    }
    const Command* cmd = nullptr;
    if (args.size() >= 2)
        for (const auto& c : commands())
            if (c.group == args[0] && c.action == args[1])
                cmd = &c;
    if (!cmd) {
        err << "unknown command: " << args[0] << (args.size() >= 2 ? " " + args[1] : "") << "\n" << usage();
        return exit_usage;
    }

    Options o;
    CLI::App app{cmd->summary, "actdim " + cmd->group + " " + cmd->action};
    add_options(app, o, *cmd);
    std::vector<std::string> rest(args.begin() + 2, args.end());
    std::vector<std::string> reversed(rest.rbegin(), rest.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    if (o.file.empty()) {
        err << "error: no input file given\n";
        return exit_input;
    }

    Invocation inv;
    inv.command = cmd->group + " " + cmd->action;
    inv.arguments = rest;
    try {
        cmd->run(inv, o);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const json::exception& e) {
        err << "input error: malformed input: " << e.what() << "\n";
        return exit_input;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }

    if (o.quiet) {
        out << inv.result.dump(2) << "\n";
        return exit_ok;
    }
    json report = {{"command", inv.command},
                   {"arguments", inv.arguments},
                   {"input_digest", "sha256:" + sha256_hex(inv.inputs)},
                   {"result", inv.result},
                   {"provenance", inv.provenance},
                   {"witnesses", inv.witnesses},
                   {"notes", inv.notes}};
    out << report.dump(2) << "\n";
    return exit_ok;
}

}  // namespace actdim::cli
