#include "blgeo/certify.hpp"

#include "blgeo/errors.hpp"
#include "blgeo/norm_decompose.hpp"
#include "blgeo/random.hpp"

#include <stdexcept>

namespace blgeo {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

void cross_check(const EqualityCertificate& cert, const InequalityReport& report)
{
    if (report.equality != EqualityChannel::exact_yes && report.equality != EqualityChannel::exact_no) return;
    const bool verifier_equal = report.equality == EqualityChannel::exact_yes;
    if (verifier_equal != (cert.verdict == Verdict::equality))
        throw std::logic_error("equality certificate disagrees with the " + report.name + " verifier");
}

Rational split_gauge(const HPolytope& k, const std::vector<Subspace>& parts, const Vector& x)
{
    Rational total = 0;
    for (const auto& f : parts) total += gauge(k, f.project(x));
    return total;
}

}  // namespace

Vector random_rational_point(std::size_t n, std::uint64_t seed, std::uint64_t index)
{
    CounterRng rng = CounterRng(seed, 0).split(index);
    Vector x(n);
    for (auto& c : x) c = rng.rational();
    return x;
}

EqualityCertificate certify_bt_equality(const VPolytope& k, const UniformCover& cover)
{
    const CoverValidation v = validate_cover(cover);
    if (!v.valid) throw std::invalid_argument("certify_bt_equality: invalid cover: " + v.reason);
    if (cover.n != k.dim()) throw std::invalid_argument("certify_bt_equality: cover and body dimensions differ");
    if (k.affine_dimension() != k.dim()) throw NotFullDimensional(k.affine_dimension(), k.dim());

    EqualityCertificate cert;
    for (const auto& block : induced_partition(cover)) cert.independent.push_back(coordinate_subspace(cover.n, block));
    cert.spanning = true;
    const VPolytope b = direct_sum_of_projections(k, cert.independent);
    cert.volume_k = volume(k);
    cert.volume_reconstruction = volume(b);
    cert.reconstruction = b;
    cert.witnesses.push_back("induced partition has " + std::to_string(cert.independent.size()) + " blocks");
    cert.witnesses.push_back("|K| = " + to_string(cert.volume_k) + ", |B| = " + to_string(cert.volume_reconstruction));
    if (cert.volume_k == cert.volume_reconstruction) {
        cert.verdict = Verdict::equality;
        cert.reason = "K equals the direct sum of its projections";
    } else {
        cert.verdict = Verdict::strict;
        cert.reason = "K is strictly contained in the direct sum of its projections";
    }
    const InequalityReport report = verify_bollobas_thomason(k, cover);
    cert.witnesses.push_back(std::string("verifier channel: ") + to_string(report.equality));
    cross_check(cert, report);
    return cert;
}

EqualityCertificate certify_liakopoulos_equality(const HPolytope& k, const BLDatum& d)
{
    if (d.ambient_dim() != k.dim()) throw std::invalid_argument("certify_liakopoulos_equality: dimension mismatch");
    if (!k.has_origin_in_interior()) throw OriginNotInterior();
    if (!validate_datum(d).valid)
        throw std::invalid_argument("certify_liakopoulos_equality: datum does not satisfy sum c_i P_i = I_n");

    EqualityCertificate cert;
    const DecompositionReport dec = decompose(d);
    cert.independent = dec.independent;
    cert.spanning = dec.dependent.is_trivial();
    cert.volume_k = volume(k);
    cert.witnesses.push_back(std::to_string(dec.independent.size()) + " independent subspaces, dim F_dep = " +
                             std::to_string(dec.dependent.dim()));

    if (!cert.spanning) {
        cert.verdict = Verdict::strict;
        cert.reason = "dependent space nontrivial";
    } else {
        const VPolytope m = conv_of_sections(k, dec.independent);
        cert.volume_reconstruction = volume(m);
        cert.reconstruction = m;
        cert.witnesses.push_back("|K| = " + to_string(cert.volume_k) + ", |M| = " + to_string(cert.volume_reconstruction));
        if (cert.volume_k == cert.volume_reconstruction) {
            cert.verdict = Verdict::equality;
            cert.reason = "K equals the convex hull of its independent sections";
        } else {
            cert.verdict = Verdict::strict;
            cert.reason = "convex hull of independent sections is strictly smaller than K";
        }
    }
    const InequalityReport report = verify_liakopoulos(k, d);
    cert.witnesses.push_back(std::string("verifier channel: ") + to_string(report.equality));
    cross_check(cert, report);
    return cert;
}

NormAdditivityReport check_norm_additivity(const HPolytope& k, const BLDatum& d, std::size_t samples,
                                           std::uint64_t seed, Execution exec)
{
    if (d.ambient_dim() != k.dim()) throw std::invalid_argument("check_norm_additivity: dimension mismatch");
    if (!k.has_origin_in_interior()) throw OriginNotInterior();
    const DecompositionReport dec = decompose(d, exec);
    if (!dec.dependent.is_trivial())
        throw std::invalid_argument("check_norm_additivity: independent subspaces do not span");
    const std::size_t n = k.dim();
    const HPolytope m = facets_of(conv_of_sections(k, dec.independent));

    // Points on the E_i: section vertices first, then random coordinates.
    std::vector<Vector> on_subspaces;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Subspace& e = d.entries()[i].subspace;
        const VPolytope v = vertices_of(section(k, e).coords);
        for (const auto& t : v.vertices()) on_subspaces.push_back(e.lift(t));
        for (std::size_t s = 0; s < samples; ++s) {
            CounterRng rng = CounterRng(seed, 1 + i).split(s);
            Vector t(e.dim());
            for (auto& c : t) c = rng.rational();
            on_subspaces.push_back(e.lift(t));
        }
    }
    std::vector<Vector> ambient;
    for (std::size_t s = 0; s < samples; ++s) ambient.push_back(random_rational_point(n, seed, s));

    const std::size_t total = on_subspaces.size() + ambient.size();
    std::vector<Rational> lhs(total), rhs(total);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (std::size_t j = 0; j < total; ++j) {
        if (j < on_subspaces.size()) {
            lhs[j] = gauge(k, on_subspaces[j]);
            rhs[j] = split_gauge(k, dec.independent, on_subspaces[j]);
        } else {
            const Vector& z = ambient[j - on_subspaces.size()];
            lhs[j] = gauge(m, z);
            rhs[j] = split_gauge(k, dec.independent, z);
        }
    }

    NormAdditivityReport r;
    r.subspace_points = on_subspaces.size();
    r.ambient_points = ambient.size();
    for (std::size_t j = 0; j < total; ++j) {
        if (lhs[j] == rhs[j]) continue;
        const bool on_e = j < on_subspaces.size();
        (on_e ? r.subspace_failures : r.ambient_failures)++;
        if (r.failures.size() < kMaxRecordedFailures)
            r.failures.push_back({on_e ? on_subspaces[j] : ambient[j - on_subspaces.size()], lhs[j], rhs[j]});
    }
    return r;
}

Rational inf_decomposition_gap(const HPolytope& k, const BLDatum& d, const Vector& z)
{
    std::vector<Subspace> subspaces;
    for (const auto& e : d.entries()) subspaces.push_back(e.subspace);
    return norm_decompose(k, subspaces, z).value - gauge(k, z);
}

InfDecompositionReport check_inf_decomposition_equality(const HPolytope& k, const BLDatum& d, std::size_t samples,
                                                        std::uint64_t seed, Execution exec)
{
    if (d.ambient_dim() != k.dim()) throw std::invalid_argument("check_inf_decomposition_equality: dimension mismatch");
    if (!k.has_origin_in_interior()) throw OriginNotInterior();
    if (!validate_datum(d).valid)
        throw std::invalid_argument("check_inf_decomposition_equality: datum does not satisfy sum c_i P_i = I_n");
    InfDecompositionReport r;
    for (std::size_t s = 0; s < samples; ++s) r.points.push_back(random_rational_point(k.dim(), seed, s));
    r.gaps.resize(samples);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (std::size_t s = 0; s < samples; ++s) r.gaps[s] = inf_decomposition_gap(k, d, r.points[s]);
    r.max_gap = 0;
    for (const auto& g : r.gaps)
        if (g > r.max_gap) r.max_gap = g;
    return r;
}

const char* to_string(Verdict verdict) { return verdict == Verdict::equality ? "equality" : "strict"; }

}  // namespace blgeo
