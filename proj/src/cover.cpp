#include "blgeo/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace blgeo {

CoverValidation validate_cover(const UniformCover& c)
{
    CoverValidation v;
    v.multiplicity.assign(c.n, 0);
    if (c.n == 0) {
        v.reason = "n must be positive";
        return v;
    }
    if (c.s == 0) {
        v.reason = "s must be positive";
        return v;
    }
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
        const auto& set = c.sets[i];
        std::vector<bool> seen(c.n, false);
        for (auto j : set) {
            if (j >= c.n) {
                v.reason = "set " + std::to_string(i + 1) + " contains element " + std::to_string(j + 1) + " outside [n]";
                return v;
            }
            if (seen[j]) {
                v.reason = "set " + std::to_string(i + 1) + " repeats element " + std::to_string(j + 1);
                return v;
            }
            seen[j] = true;
            ++v.multiplicity[j];
        }
        if (set.empty() && v.reason.empty()) v.reason = "set " + std::to_string(i + 1) + " is empty";
        if (set.size() == c.n && v.reason.empty()) v.reason = "set " + std::to_string(i + 1) + " is all of [n]";
    }
    if (!v.reason.empty()) return v;
    for (std::size_t j = 0; j < c.n; ++j)
        if (v.multiplicity[j] != c.s) {
            v.reason = "element " + std::to_string(j + 1) + " is covered " + std::to_string(v.multiplicity[j]) +
                       " times, expected " + std::to_string(c.s);
            return v;
        }
    v.valid = true;
    return v;
}

std::vector<IndexSet> induced_partition(const UniformCover& c)
{
    if (c.n == 0) return {};
    IndexSet all(c.n);
    for (std::size_t j = 0; j < c.n; ++j) all[j] = j;
    std::vector<IndexSet> blocks = {all};
    for (const auto& set : c.sets) {
        std::vector<bool> in(c.n, false);
        for (auto j : set) in.at(j) = true;
        std::vector<IndexSet> refined;
        for (const auto& block : blocks) {
            IndexSet inside, outside;
            for (auto j : block) (in[j] ? inside : outside).push_back(j);
            if (!inside.empty()) refined.push_back(std::move(inside));
            if (!outside.empty()) refined.push_back(std::move(outside));
        }
        blocks = std::move(refined);
    }
    std::sort(blocks.begin(), blocks.end(), [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
    return blocks;
}

Subspace coordinate_subspace(std::size_t n, const IndexSet& sigma)
{
    if (sigma.empty()) throw std::invalid_argument("coordinate_subspace: empty index set");
    std::vector<Vector> basis;
    for (auto i : sigma) {
        if (i >= n) throw std::invalid_argument("coordinate_subspace: index outside [n]");
        basis.push_back(unit_vector(n, i));
    }
    return Subspace::span(n, basis);
}

BLDatum datum_from_cover(const UniformCover& c)
{
    const CoverValidation v = validate_cover(c);
    if (!v.valid) throw std::invalid_argument("datum_from_cover: invalid cover: " + v.reason);
    std::vector<DatumEntry> entries;
    for (const auto& set : c.sets)
        entries.push_back({coordinate_subspace(c.n, set), Rational(1, static_cast<unsigned long>(c.s))});
    return BLDatum::create(c.n, std::move(entries));
}

UniformCover loomis_whitney_cover(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("loomis_whitney_cover: n must be at least 2");
    UniformCover c{n, n - 1, {}};
    for (std::size_t i = 0; i < n; ++i) {
        IndexSet s;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) s.push_back(j);
        c.sets.push_back(std::move(s));
    }
    return c;
}

}  // namespace blgeo
