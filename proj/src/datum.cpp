#include "blgeo/datum.hpp"

#include "blgeo/linalg.hpp"

#include <stdexcept>
#include <string>

namespace blgeo {

namespace {

void require_valid(const BLDatum& d, const char* what)
{
    if (!validate_datum(d).valid)
        throw std::invalid_argument(std::string(what) + ": datum does not satisfy sum c_i P_i = I_n");
}

struct PatternNode {
    Subspace space;
    std::uint32_t pattern;
};

// Depth-first over sign choices for entries [depth, k); E_i before E_i^⊥ keeps
// the output in lexicographic pattern order.
void enumerate_patterns(const std::vector<Subspace>& e, const std::vector<Subspace>& e_perp, std::size_t depth,
                        const Subspace& current, std::uint32_t pattern, std::vector<PatternNode>& out)
{
    if (current.is_trivial()) return;
    if (depth == e.size()) {
        out.push_back({current, pattern});
        return;
    }
    enumerate_patterns(e, e_perp, depth + 1, intersect(current, e[depth]), pattern, out);
    enumerate_patterns(e, e_perp, depth + 1, intersect(current, e_perp[depth]), pattern | (1u << depth), out);
}

}  // namespace

BLDatum BLDatum::create(std::size_t ambient_dim, std::vector<DatumEntry> entries)
{
    if (ambient_dim == 0) throw std::invalid_argument("BLDatum: ambient dimension must be positive");
    if (entries.empty()) throw std::invalid_argument("BLDatum: no entries");
    if (entries.size() > kMaxDatumEntries)
        throw std::invalid_argument("BLDatum: more than " + std::to_string(kMaxDatumEntries) + " entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        const std::string where = "BLDatum entry " + std::to_string(i + 1) + ": ";
        if (e.subspace.ambient_dim() != ambient_dim) throw std::invalid_argument(where + "ambient dimension mismatch");
        if (e.subspace.is_trivial()) throw std::invalid_argument(where + "subspace is {0}");
        if (e.subspace.is_whole()) throw std::invalid_argument(where + "subspace is the whole space");
        if (e.weight <= 0) throw std::invalid_argument(where + "weight must be positive");
    }
    return BLDatum(ambient_dim, std::move(entries));
}

Matrix BLDatum::weighted_projection_sum() const
{
    Matrix s(ambient_dim_, ambient_dim_);
    for (const auto& e : entries_) s = s + e.weight * e.subspace.projection();
    return s;
}

DatumValidation validate_datum(const BLDatum& d)
{
    DatumValidation v;
    v.residual = d.weighted_projection_sum() - Matrix::identity(d.ambient_dim());
    v.trace_defect = datum_dimension_check(d);
    v.valid = v.residual.is_zero();
    return v;
}

Rational datum_dimension_check(const BLDatum& d)
{
    Rational s = 0;
    for (const auto& e : d.entries()) s += e.weight * Rational(static_cast<long>(e.subspace.dim()));
    return s - Rational(static_cast<long>(d.ambient_dim()));
}

CriticalityReport is_critical_subspace(const BLDatum& d, const Subspace& v)
{
    if (v.ambient_dim() != d.ambient_dim()) throw std::invalid_argument("is_critical_subspace: ambient dimension mismatch");
    if (v.is_trivial()) throw std::invalid_argument("is_critical_subspace: V must be non-trivial");
    require_valid(d, "is_critical_subspace");

    const Subspace v_perp = orthogonal_complement(v);
    CriticalityReport r;
    r.splits = true;
    for (const auto& e : d.entries()) {
        const std::size_t inside = intersect(e.subspace, v).dim();
        r.weighted_dimension += e.weight * Rational(static_cast<long>(inside));
        if (inside + intersect(e.subspace, v_perp).dim() != e.subspace.dim()) r.splits = false;
    }
    r.critical = r.weighted_dimension == Rational(static_cast<long>(v.dim()));
    return r;
}

DecompositionReport decompose(const BLDatum& d, Execution exec)
{
    require_valid(d, "decompose");
    const std::size_t n = d.ambient_dim();
    const std::size_t k = d.size();
    std::vector<Subspace> e, e_perp;
    for (const auto& entry : d.entries()) {
        e.push_back(entry.subspace);
        e_perp.push_back(orthogonal_complement(entry.subspace));
    }

    // Fix the first `split` choices up front; each prefix is an independent task.
    const std::size_t split = std::min<std::size_t>(k, 4);
    const std::size_t prefixes = std::size_t{1} << split;
    std::vector<std::vector<PatternNode>> found(prefixes);
    auto run_prefix = [&](std::size_t p) {
        // Lexicographic order of patterns = bit 0 most significant, so walk prefixes by reversed bits.
        std::uint32_t pattern = 0;
        Subspace current = Subspace::whole(n);
        for (std::size_t i = 0; i < split && !current.is_trivial(); ++i) {
            const bool perp = (p >> (split - 1 - i)) & 1;
            current = intersect(current, perp ? e_perp[i] : e[i]);
            if (perp) pattern |= 1u << i;
        }
        enumerate_patterns(e, e_perp, split, current, pattern, found[p]);
    };
    const auto count = static_cast<long>(prefixes);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long p = 0; p < count; ++p) run_prefix(static_cast<std::size_t>(p));
    } else {
        for (long p = 0; p < count; ++p) run_prefix(static_cast<std::size_t>(p));
    }

    DecompositionReport report;
    Subspace total = Subspace::zero(n);
    for (const auto& group : found)
        for (const auto& node : group) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < k; ++i)
                if (!((node.pattern >> i) & 1)) members.push_back(i);
            report.independent.push_back(node.space);
            report.patterns.push_back(node.pattern);
            report.membership.push_back(std::move(members));
            total = sum(total, node.space);
        }
    report.dependent = orthogonal_complement(total);
    return report;
}

Rational gaussian_bl_constant(const BLDatum& d) { return determinant(d.weighted_projection_sum()); }

BLDatum loomis_whitney_datum(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("loomis_whitney_datum: n must be at least 2");
    std::vector<DatumEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
        entries.push_back({orthogonal_complement(Subspace::span(n, {unit_vector(n, i)})), Rational(1, static_cast<unsigned long>(n - 1))});
    return BLDatum::create(n, std::move(entries));
}

BLDatum axes_datum(const Vector& weights)
{
    const std::size_t n = weights.size();
    std::vector<DatumEntry> entries;
    for (std::size_t i = 0; i < n; ++i) entries.push_back({Subspace::span(n, {unit_vector(n, i)}), weights[i]});
    return BLDatum::create(n, std::move(entries));
}

}  // namespace blgeo
