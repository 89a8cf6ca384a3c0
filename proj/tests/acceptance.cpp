// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "blgeo/certify.hpp"
#include "blgeo/cover.hpp"
#include "blgeo/datum.hpp"
#include "blgeo/generators.hpp"
#include "blgeo/integrate.hpp"
#include "blgeo/polytope.hpp"
#include "blgeo/random.hpp"
#include "blgeo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace blgeo;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Data validated or invalidated along the way; criterion 7 re-examines them.
std::vector<BLDatum> g_valid;
std::vector<BLDatum> g_invalid;

BLDatum with_weight_shift(const BLDatum& d, const Rational& eps)
{
    std::vector<DatumEntry> entries = d.entries();
    entries[0].weight += eps;
    return BLDatum::create(d.ambient_dim(), std::move(entries));
}

bool exact_channel(const InequalityReport& r)
{
    return r.equality == EqualityChannel::exact_yes || r.equality == EqualityChannel::exact_no;
}

Outcome datum_identity()
{
    Outcome o;
    const Rational eps = Rational(1) / Rational(1000000000);
    std::vector<BLDatum> data;
    for (std::size_t n = 2; n <= 5; ++n) data.push_back(loomis_whitney_datum(n));
    CounterRng rng(1, 1);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 6));
        const auto s = static_cast<std::size_t>(rng.integer(1, 3));
        data.push_back(datum_from_cover(random_uniform_cover(n, s, rng)));
    }
    int accepted = 0, rejected = 0;
    for (const auto& d : data) {
        if (validate_datum(d).valid) {
            ++accepted;
            g_valid.push_back(d);
        }
        for (const Rational& e : std::vector<Rational>{eps, Rational(-eps)}) {
            BLDatum bad = with_weight_shift(d, e);
            if (!validate_datum(bad).valid) {
                ++rejected;
                g_invalid.push_back(std::move(bad));
            }
        }
    }
    o.ok = accepted == static_cast<int>(data.size()) && rejected == 2 * static_cast<int>(data.size());
    o.detail = std::to_string(accepted) + "/" + std::to_string(data.size()) + " valid, " + std::to_string(rejected) +
               "/" + std::to_string(2 * data.size()) + " perturbations rejected";
    return o;
}

Outcome decomposition()
{
    Outcome o;
    CounterRng rng(2, 1);
    int matched = 0;
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 6));
        const auto s = static_cast<std::size_t>(rng.integer(1, 3));
        const UniformCover c = random_uniform_cover(n, s, rng);
        const BLDatum d = datum_from_cover(c);
        const DecompositionReport r = decompose(d);
        const auto parts = induced_partition(c);
        bool ok = r.dependent.is_trivial() && r.independent.size() == parts.size();
        for (const auto& sigma : parts) {
            const Subspace f = coordinate_subspace(n, sigma);
            ok = ok && std::any_of(r.independent.begin(), r.independent.end(),
                                   [&](const Subspace& g) { return equals(f, g); });
        }
        if (ok) ++matched;
    }
    o.ok = matched == 100;
    o.detail = std::to_string(matched) + "/100 covers decompose into their induced partition with trivial dependent part";
    return o;
}

Outcome meyer_liakopoulos_equality()
{
    Outcome o;
    CounterRng rng(3, 1);
    const std::vector<Rational> epsilons = {Rational(1), Rational(1) / Rational(1000), Rational(1) / Rational(1000000)};
    int eq_ok = 0, flip_ok = 0, flips = 0;
    for (int t = 0; t < 50; ++t) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 4));
        const Vector lambdas = random_lambdas(n, rng);
        const BLDatum d = (t % 2 == 0 || n == 2) ? axes_datum(Vector(n, Rational(1))) : loomis_whitney_datum(n);
        const VPolytope kv = make_cross_polytope(lambdas);
        const HPolytope k = facets_of(kv);
        const auto m = verify_meyer(k);
        const auto l = verify_liakopoulos(k, d);
        const auto c = certify_liakopoulos_equality(k, d);
        if (m.equality == EqualityChannel::exact_yes && l.equality == EqualityChannel::exact_yes &&
            c.verdict == Verdict::equality)
            ++eq_ok;

        for (const auto& eps : epsilons) {
            ++flips;
            std::vector<Vector> pts = kv.vertices();
            for (auto& p : pts) {
                if (p[0] != lambdas[0]) continue;
                for (auto& x : p) x += eps;
            }
            const HPolytope kp = facets_of(VPolytope::hull(n, pts));
            const auto mp = verify_meyer(kp);
            const auto lp = verify_liakopoulos(kp, d);
            const auto cp = certify_liakopoulos_equality(kp, d);
            if (mp.equality == EqualityChannel::exact_no && mp.holds && lp.equality == EqualityChannel::exact_no &&
                lp.holds && cp.verdict == Verdict::strict)
                ++flip_ok;
        }
    }
    o.ok = eq_ok == 50 && flip_ok == flips;
    o.detail = std::to_string(eq_ok) + "/50 cross-polytopes exact equality, " + std::to_string(flip_ok) + "/" +
               std::to_string(flips) + " perturbations strict";
    return o;
}

Outcome bollobas_thomason_equality()
{
    Outcome o;
    const UniformCover cover{3, 2, {{0, 1}, {1, 2}, {0, 2}}};
    CounterRng rng(4, 1);
    int boxes = 0, simplices = 0;
    for (int t = 0; t < 50; ++t) {
        const VPolytope b = random_box(3, rng);
        const auto c = certify_bt_equality(b, cover);
        const auto r = verify_bollobas_thomason(b, cover);
        if (c.verdict == Verdict::equality && r.equality == EqualityChannel::exact_yes) ++boxes;
        const VPolytope s = random_simplex(3, rng);
        const auto cs = certify_bt_equality(s, cover);
        const auto rs = verify_bollobas_thomason(s, cover);
        if (cs.verdict == Verdict::strict && rs.equality == EqualityChannel::exact_no && rs.holds) ++simplices;
    }
    o.ok = boxes == 50 && simplices == 50;
    o.detail = std::to_string(boxes) + "/50 boxes equality, " + std::to_string(simplices) + "/50 simplices strict";
    return o;
}

BLDatum frame_datum_2()
{
    const Rational half = Rational(1) / Rational(2);
    std::vector<DatumEntry> e;
    for (const Vector& v : std::vector<Vector>{{1, 0}, {0, 1}, {1, 1}, {1, -1}})
        e.push_back({Subspace::span(2, {v}), half});
    return BLDatum::create(2, std::move(e));
}

Outcome soundness()
{
    Outcome o;
    CounterRng root(5, 1);
    int held = 0, total = 0, exact = 0;
    std::vector<std::string> failures;
    for (int t = 0; t < 500; ++t) {
        CounterRng rng = root.split(static_cast<std::uint64_t>(t));
        const auto n = static_cast<std::size_t>(rng.integer(2, 3));
        const VPolytope kv = random_body(n, static_cast<std::size_t>(rng.integer(1, 6)), rng);
        const HPolytope k = facets_of(kv);
        InequalityReport r;
        switch (t % 6) {
        case 0:
            r = verify_loomis_whitney(kv);
            break;
        case 1: {
            const auto s = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n) - 1));
            r = verify_bollobas_thomason(kv, random_uniform_cover(n, s, rng));
            break;
        }
        case 2:
            r = verify_meyer(k);
            break;
        case 3: {
            BLDatum d = (n == 2 && rng.integer(0, 2) == 0) ? rotated(frame_datum_2(), random_orthogonal(2, rng))
                                                            : random_datum(n, rng);
            g_valid.push_back(d);
            r = verify_liakopoulos(k, d);
            break;
        }
        case 4: {
            const VPolytope y = random_body(n, static_cast<std::size_t>(rng.integer(1, 6)), rng);
            const Rational a = rng.rational_between(Rational(1, 10), Rational(3), 29);
            const Rational b = rng.rational_between(Rational(1, 10), Rational(3), 29);
            r = verify_brunn_minkowski(kv, y, a, b);
            break;
        }
        default: {
            const BLDatum d = n == 2 && rng.integer(0, 1) == 0 ? frame_datum_2() : random_datum(n, rng);
            r = verify_rbl_indicators(k, d);
            break;
        }
        }
        ++total;
        if (exact_channel(r)) ++exact;
        if (r.holds)
            ++held;
        else if (failures.size() < 3)
            failures.push_back("trial " + std::to_string(t) + " " + r.name);
    }
    o.ok = held == total;
    o.detail = std::to_string(held) + "/" + std::to_string(total) + " hold (" + std::to_string(exact) +
               " decided exactly)";
    for (const auto& f : failures) o.detail += "; violated: " + f;
    return o;
}

Outcome norm_representation()
{
    Outcome o;
    std::ostringstream msg;

    // (a) integral of exp(-gauge) equals n! |K|.
    int mc_ok = 0;
    CounterRng rng(6, 1);
    for (int t = 0; t < 10; ++t) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 3));
        const HPolytope k = facets_of(random_body(n, static_cast<std::size_t>(rng.integer(1, 5)), rng));
        const auto est = mc_exp_gauge(k, Rational(1), 100000, 600 + static_cast<std::uint64_t>(t));
        if (std::abs(est.estimate - est.exact.get_d()) <= 4 * est.std_error + est.tail_bound) ++mc_ok;
    }
    msg << "exp-gauge " << mc_ok << "/10 within 4 sigma";

    // (b) conv_of_sections bodies split their gauge exactly.
    std::size_t points = 0, failures = 0;
    for (int t = 0; t < 10; ++t) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 3));
        const BLDatum d = random_datum(n, rng);
        const HPolytope k = facets_of(random_body(n, static_cast<std::size_t>(rng.integer(1, 5)), rng));
        const HPolytope m = facets_of(conv_of_sections(k, decompose(d).independent));
        const auto r = check_norm_additivity(m, d, 100, 700 + static_cast<std::uint64_t>(t));
        points += r.ambient_points + r.subspace_points;
        failures += r.ambient_failures + r.subspace_failures;
    }
    msg << ", additivity " << points - failures << "/" << points << " exact";

    // (c) the inf-decomposition gap vanishes exactly on certified bodies.
    std::size_t gap_points = 0, nonzero = 0;
    for (int t = 0; t < 4; ++t) {
        const auto n = static_cast<std::size_t>(2 + t % 2);
        const BLDatum d = t < 2 ? axes_datum(Vector(n, Rational(1))) : loomis_whitney_datum(n);
        const HPolytope k = facets_of(make_cross_polytope(random_lambdas(n, rng)));
        if (certify_liakopoulos_equality(k, d).verdict != Verdict::equality) {
            ++nonzero;
            continue;
        }
        const auto r = check_inf_decomposition_equality(k, d, 250, 800 + static_cast<std::uint64_t>(t));
        gap_points += r.points.size();
        nonzero += static_cast<std::size_t>(std::count_if(r.gaps.begin(), r.gaps.end(), [](const Rational& g) { return g != 0; }));
    }
    bool cube_gap = true;
    for (std::size_t n = 2; n <= 3; ++n) {
        const Rational g = inf_decomposition_gap(facets_of(make_box(Vector(n, Rational(-1)), Vector(n, Rational(1)))),
                                                 axes_datum(Vector(n, Rational(1))), Vector(n, Rational(1)));
        cube_gap = cube_gap && g > 0;
    }
    msg << ", inf-gap zero on " << gap_points - std::min(gap_points, nonzero) << "/" << gap_points
        << (cube_gap ? ", cube gap > 0" : ", cube gap not positive");

    o.ok = mc_ok == 10 && failures == 0 && points >= 1000 && nonzero == 0 && gap_points >= 1000 && cube_gap;
    o.detail = msg.str();
    return o;
}

Outcome gaussian_constant()
{
    Outcome o;
    std::size_t ones = 0, non_ones = 0;
    for (const auto& d : g_valid)
        if (gaussian_bl_constant(d) == 1) ++ones;
    for (const auto& d : g_invalid)
        if (gaussian_bl_constant(d) != 1) ++non_ones;
    o.ok = ones == g_valid.size() && non_ones == g_invalid.size() && !g_valid.empty() && !g_invalid.empty();
    o.detail = std::to_string(ones) + "/" + std::to_string(g_valid.size()) + " valid data give 1, " +
               std::to_string(non_ones) + "/" + std::to_string(g_invalid.size()) + " invalidated data do not";
    return o;
}

Outcome volume_oracle()
{
    Outcome o;
    CounterRng rng(8, 1);
    int ok = 0;
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = t < 10 ? 2 : 3;
        const VPolytope v = random_body(n, static_cast<std::size_t>(rng.integer(2, 8)), rng);
        const Rational exact = volume(v);
        const auto est = mc_volume(facets_of(v), 100000, 900 + static_cast<std::uint64_t>(t));
        const double z = std::abs(est.estimate - exact.get_d()) / est.std_error;
        worst = std::max(worst, z);
        if (z <= 4) ++ok;
    }
    o.ok = ok == 20;
    std::ostringstream msg;
    msg << ok << "/20 within 4 sigma, worst " << worst << " sigma";
    o.detail = msg.str();
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "datum identity", 1, datum_identity},
        {2, "decomposition of cover data", 5, decomposition},
        {3, "Meyer/Liakopoulos equality and perturbation", 30, meyer_liakopoulos_equality},
        {4, "Bollobas-Thomason equality characterization", 30, bollobas_thomason_equality},
        {5, "soundness sweep", 300, soundness},
        {6, "norm representation", 120, norm_representation},
        {7, "Gaussian constant", 60, gaussian_constant},
        {8, "volume oracle equivalence", 120, volume_oracle},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_s;
        const bool pass = out.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s %d %s (%.2fs / %.0fs): %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                    out.detail.c_str(), in_time ? "" : " [time limit exceeded]");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
