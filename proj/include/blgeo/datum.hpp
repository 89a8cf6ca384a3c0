#pragma once

// Geometric Brascamp-Lieb data: subspaces E_i with weights c_i > 0 such that
// sum_i c_i P_{E_i} = I_n, and their independent/dependent decomposition.

#include "blgeo/execution.hpp"
#include "blgeo/matrix.hpp"
#include "blgeo/subspace.hpp"

#include <cstdint>
#include <vector>

namespace blgeo {

inline constexpr std::size_t kMaxDatumEntries = 20;

struct DatumEntry {
    Subspace subspace;
    Rational weight;
};

class BLDatum {
public:
    /// Enforces the structural invariants: every subspace proper and
    /// non-trivial (1 <= dim E_i <= n-1), weights positive, at most
    /// kMaxDatumEntries entries. Does not check the projection identity.
    static BLDatum create(std::size_t ambient_dim, std::vector<DatumEntry> entries);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<DatumEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// sum_i c_i P_{E_i}
    Matrix weighted_projection_sum() const;

private:
    BLDatum(std::size_t n, std::vector<DatumEntry> entries) : ambient_dim_(n), entries_(std::move(entries)) {}

    std::size_t ambient_dim_ = 0;
    std::vector<DatumEntry> entries_;
};

struct DatumValidation {
    bool valid = false;
    Matrix residual;       // sum_i c_i P_{E_i} - I_n
    Rational trace_defect;  // sum_i c_i dim E_i - n
};

DatumValidation validate_datum(const BLDatum& d);

/// sum_i c_i dim E_i - n
Rational datum_dimension_check(const BLDatum& d);

struct CriticalityReport {
    bool critical = false;        // sum_i c_i dim(E_i ∩ V) == dim V
    bool splits = false;          // E_i = (E_i ∩ V) + (E_i ∩ V^⊥) for all i
    Rational weighted_dimension;  // sum_i c_i dim(E_i ∩ V)
};

/// Throws std::invalid_argument for trivial V, an ambient mismatch, or an invalid datum.
CriticalityReport is_critical_subspace(const BLDatum& d, const Subspace& v);

struct DecompositionReport {
    std::vector<Subspace> independent;
    /// Sign pattern of each independent subspace: bit i set means E_i^⊥ was used.
    std::vector<std::uint32_t> patterns;
    /// For each independent F_j, the indices i with F_j ⊆ E_i.
    std::vector<std::vector<std::size_t>> membership;
    Subspace dependent = Subspace::zero(0);
};

/// Enumerates all 2^k intersections of E_i or E_i^⊥ (pruned at {0}), in
/// lexicographic pattern order. Throws std::invalid_argument for an invalid datum.
DecompositionReport decompose(const BLDatum& d, Execution exec = Execution::parallel);

/// det(sum_i c_i P_{E_i}); equal to 1 for every valid datum.
Rational gaussian_bl_constant(const BLDatum& d);

/// E_i = e_i^⊥ with weights 1/(n-1).
BLDatum loomis_whitney_datum(std::size_t n);

/// E_i = span(e_i) with the given weights.
BLDatum axes_datum(const Vector& weights);

}  // namespace blgeo
