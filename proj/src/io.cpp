#include "blgeo/io.hpp"

#include <algorithm>
#include <fstream>

namespace blgeo::io {

namespace {

template <class F>
auto guarded(const char* what, F f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t count_from(const json& j)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError("expected a non-negative integer");
    return j.get<std::size_t>();
}

json vectors_to_json(const std::vector<Vector>& vs)
{
    json out = json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

std::vector<Vector> vectors_from(const json& j)
{
    if (!j.is_array()) throw ParseError("expected an array of vectors");
    std::vector<Vector> out;
    for (const auto& v : j) out.push_back(vector_from(v));
    return out;
}

json subspaces_to_json(const std::vector<Subspace>& ss)
{
    json out = json::array();
    for (const auto& s : ss) out.push_back(to_json(s));
    return out;
}

json string_list(const std::vector<std::string>& xs)
{
    json out = json::array();
    for (const auto& x : xs) out.push_back(x);
    return out;
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Vector& v)
{
    json out = json::array();
    for (const auto& c : v) out.push_back(to_json(c));
    return out;
}

json to_json(const Matrix& m)
{
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

json to_json(const Subspace& s) { return {{"ambient_dim", s.ambient_dim()}, {"basis", vectors_to_json(s.basis())}}; }

json to_json(const BLDatum& d)
{
    json entries = json::array();
    for (const auto& e : d.entries()) entries.push_back({{"subspace", to_json(e.subspace)}, {"weight", to_json(e.weight)}});
    return {{"ambient_dim", d.ambient_dim()}, {"entries", entries}};
}

json to_json(const UniformCover& c)
{
    json sets = json::array();
    for (const auto& sigma : c.sets) {
        json s = json::array();
        for (auto j : sigma) s.push_back(j + 1);
        sets.push_back(s);
    }
    return {{"n", c.n}, {"s", c.s}, {"sets", sets}};
}

json to_json(const HPolytope& p)
{
    json ineqs = json::array();
    for (const auto& h : p.inequalities()) ineqs.push_back({{"a", to_json(h.normal)}, {"b", to_json(h.offset)}});
    return {{"dim", p.dim()}, {"inequalities", ineqs}};
}

json to_json(const VPolytope& p) { return {{"dim", p.dim()}, {"vertices", vectors_to_json(p.vertices())}}; }

json to_json(const MeasureValue& m) { return {{"q", to_json(m.q())}, {"g", to_json(m.g())}}; }

json to_json(const Interval& i) { return json::array({i.lo_string(), i.hi_string()}); }

json to_json(const PowerProduct& p)
{
    json factors = json::array();
    for (const auto& f : p.factors()) factors.push_back({{"base", to_json(f.base)}, {"exponent", to_json(f.exponent)}});
    json out = {{"factors", factors}, {"interval", to_json(p.enclose())}};
    if (auto r = p.as_rational()) out["exact"] = to_json(*r);
    return out;
}

json to_json(const ValueExpr& e)
{
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back(to_json(t));
    json out = {{"terms", terms}, {"interval", to_json(e.enclose())}};
    if (e.is_single())
        if (auto r = e.terms[0].as_rational()) out["exact"] = to_json(*r);
    return out;
}

json to_json(const InequalityReport& r)
{
    return {{"name", r.name},
            {"direction", to_string(r.direction)},
            {"lhs", to_json(r.lhs)},
            {"rhs", to_json(r.rhs)},
            {"ratio", to_json(r.ratio)},
            {"holds", r.holds},
            {"equality", to_string(r.equality)},
            {"notes", string_list(r.notes)}};
}

json to_json(const EqualityCertificate& c)
{
    json out = {{"verdict", to_string(c.verdict)},
                {"reason", c.reason},
                {"independent", subspaces_to_json(c.independent)},
                {"spanning", c.spanning},
                {"volume_K", to_json(c.volume_k)},
                {"witnesses", string_list(c.witnesses)}};
    if (c.reconstruction) {
        out["reconstruction"] = to_json(*c.reconstruction);
        out["volume_reconstruction"] = to_json(c.volume_reconstruction);
    } else {
        out["reconstruction"] = nullptr;
        out["volume_reconstruction"] = nullptr;
    }
    return out;
}

json to_json(const DatumValidation& v)
{
    return {{"valid", v.valid}, {"residual", to_json(v.residual)}, {"trace_defect", to_json(v.trace_defect)}};
}

json to_json(const DecompositionReport& r)
{
    json independent = json::array();
    for (std::size_t j = 0; j < r.independent.size(); ++j) {
        json members = json::array();
        for (auto i : r.membership[j]) members.push_back(i + 1);
        independent.push_back({{"subspace", to_json(r.independent[j])}, {"pattern", r.patterns[j]}, {"contained_in", members}});
    }
    return {{"independent", independent}, {"dependent", to_json(r.dependent)}};
}

json to_json(const NormDecomposition& r) { return {{"value", to_json(r.value)}, {"parts", vectors_to_json(r.parts)}}; }

json to_json(const NormAdditivityReport& r)
{
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"point", to_json(f.point)}, {"gauge", to_json(f.gauge)}, {"split_sum", to_json(f.split_sum)}});
    return {{"all_pass", r.all_pass()},
            {"subspace_points", r.subspace_points},
            {"subspace_failures", r.subspace_failures},
            {"ambient_points", r.ambient_points},
            {"ambient_failures", r.ambient_failures},
            {"failures", failures}};
}

json to_json(const InfDecompositionReport& r)
{
    json gaps = json::array();
    for (const auto& g : r.gaps) gaps.push_back(to_json(g));
    return {{"all_zero", r.all_zero()}, {"max_gap", to_json(r.max_gap)}, {"points", vectors_to_json(r.points)}, {"gaps", gaps}};
}

json to_json(const MonteCarloEstimate& e)
{
    return {{"estimate", e.estimate}, {"std_error", e.std_error}, {"samples", e.samples}, {"exact", to_json(e.exact)},
            {"exact_decimal", e.exact.get_d()}};
}

json to_json(const ExpGaugeEstimate& e)
{
    json out = to_json(static_cast<const MonteCarloEstimate&>(e));
    out["truncation"] = e.truncation;
    out["tail_bound"] = e.tail_bound;
    return out;
}

Rational rational_from(const json& j)
{
    if (j.is_string()) return guarded("rational", [&] { return parse_rational(j.get<std::string>()); });
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string \"p/q\" or an integer");
}

Vector vector_from(const json& j)
{
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    Vector v;
    for (const auto& c : j) v.push_back(rational_from(c));
    return v;
}

Subspace subspace_from(const json& j)
{
    const std::size_t n = count_from(field(j, "ambient_dim"));
    auto basis = vectors_from(field(j, "basis"));
    return guarded("subspace", [&] { return Subspace::span(n, basis); });
}

BLDatum datum_from(const json& j)
{
    const std::size_t n = count_from(field(j, "ambient_dim"));
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
    std::vector<DatumEntry> out;
    for (const auto& e : entries) out.push_back({subspace_from(field(e, "subspace")), rational_from(field(e, "weight"))});
    return guarded("datum", [&] { return BLDatum::create(n, std::move(out)); });
}

UniformCover cover_from(const json& j)
{
    UniformCover c;
    c.n = count_from(field(j, "n"));
    c.s = count_from(field(j, "s"));
    const json& sets = field(j, "sets");
    if (!sets.is_array()) throw ParseError("\"sets\" must be an array");
    for (const auto& s : sets) {
        if (!s.is_array()) throw ParseError("each set must be an array of 1-based indices");
        IndexSet sigma;
        for (const auto& x : s) {
            const std::size_t v = count_from(x);
            if (v == 0) throw ParseError("cover elements are 1-based");
            sigma.push_back(v - 1);
        }
        std::sort(sigma.begin(), sigma.end());
        c.sets.push_back(std::move(sigma));
    }
    return c;
}

HPolytope hpolytope_from(const json& j)
{
    const std::size_t n = count_from(field(j, "dim"));
    const json& ineqs = field(j, "inequalities");
    if (!ineqs.is_array()) throw ParseError("\"inequalities\" must be an array");
    std::vector<Halfspace> hs;
    for (const auto& h : ineqs) hs.push_back({vector_from(field(h, "a")), rational_from(field(h, "b"))});
    return HPolytope::create(n, std::move(hs));
}

VPolytope vpolytope_from(const json& j)
{
    const std::size_t n = count_from(field(j, "dim"));
    auto pts = vectors_from(field(j, "vertices"));
    for (const auto& p : pts)
        if (p.size() != n) throw ParseError("vertex length differs from \"dim\"");
    if (pts.empty()) throw ParseError("a V-polytope needs at least one vertex");
    return VPolytope::hull(n, std::move(pts));
}

MeasureValue measure_from(const json& j)
{
    Rational q = rational_from(field(j, "q")), g = rational_from(field(j, "g"));
    return guarded("measure", [&] { return MeasureValue(q, g); });
}

Body body_from(const json& j)
{
    if (j.is_object() && j.contains("inequalities")) return hpolytope_from(j);
    if (j.is_object() && j.contains("vertices")) return vpolytope_from(j);
    throw ParseError("a body needs \"inequalities\" or \"vertices\"");
}

HPolytope as_h(const Body& b)
{
    if (const auto* h = std::get_if<HPolytope>(&b)) return *h;
    return facets_of(std::get<VPolytope>(b));
}

VPolytope as_v(const Body& b)
{
    if (const auto* v = std::get_if<VPolytope>(&b)) return *v;
    return vertices_of(std::get<HPolytope>(b));
}

json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
    if (!out) throw ParseError("write failed for " + path);
}

}  // namespace blgeo::io
