// blgeo: command-line front end. Reports go to stdout (or --output) as JSON,
// diagnostics to stderr.
//
// Exit codes: 0 ok / holds / equality, 1 I/O, parse or input error,
// 2 invalid datum or cover, 3 an inequality reported as violated, 4 strict.

#include "blgeo/certify.hpp"
#include "blgeo/errors.hpp"
#include "blgeo/integrate.hpp"
#include "blgeo/io.hpp"
#include "blgeo/norm_decompose.hpp"
#include "blgeo/search.hpp"
#include "blgeo/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

using namespace blgeo;
using io::json;

namespace {

enum Exit { kOk = 0, kInputError = 1, kInvalid = 2, kViolation = 3, kStrict = 4 };

struct Options {
    std::string output;
    std::string datum_path, cover_path, body_path, second_path, aux_path, name;
    std::string alpha = "1", beta = "1", power = "1", point, mode = "exp-gauge";
    std::size_t samples = 0, trials = 0, top = 10;
    std::optional<std::uint64_t> seed;
    bool serial = false;
};

Execution execution(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

void emit(const Options& o, const json& report)
{
    const std::string text = report.dump(2) + "\n";
    if (o.output.empty()) std::cout << text;
    else io::write_text(o.output, text);
}

std::uint64_t require_seed(const Options& o)
{
    if (!o.seed) throw io::ParseError("--seed is required; results are reproducible only for a fixed seed");
    return *o.seed;
}

Vector parse_point(const std::string& text)
{
    Vector v;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            v.push_back(parse_rational(piece));
        } catch (const std::invalid_argument& e) {
            throw io::ParseError(std::string("--point: ") + e.what());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return v;
}

int check_datum(const Options& o)
{
    const BLDatum d = io::datum_from(io::read_file(o.datum_path));
    const DatumValidation v = validate_datum(d);
    json out = io::to_json(v);
    out["datum"] = io::to_json(d);
    if (v.valid) out["decomposition"] = io::to_json(decompose(d, execution(o)));
    emit(o, out);
    return v.valid ? kOk : kInvalid;
}

int decompose_cmd(const Options& o)
{
    const BLDatum d = io::datum_from(io::read_file(o.datum_path));
    const DatumValidation v = validate_datum(d);
    if (!v.valid) {
        emit(o, io::to_json(v));
        return kInvalid;
    }
    const DecompositionReport r = decompose(d, execution(o));
    json out = io::to_json(r);
    out["spanning"] = r.dependent.is_trivial();
    out["gaussian_constant"] = io::to_json(gaussian_bl_constant(d));
    emit(o, out);
    return kOk;
}

int cover_cmd(const Options& o)
{
    const UniformCover c = io::cover_from(io::read_file(o.cover_path));
    const CoverValidation v = validate_cover(c);
    json out = {{"valid", v.valid}, {"reason", v.reason}, {"multiplicity", v.multiplicity}};
    if (v.valid) {
        json blocks = json::array();
        for (const auto& b : induced_partition(c)) {
            json block = json::array();
            for (auto j : b) block.push_back(j + 1);
            blocks.push_back(block);
        }
        out["partition"] = blocks;
        out["datum"] = io::to_json(datum_from_cover(c));
    }
    emit(o, out);
    return v.valid ? kOk : kInvalid;
}

int volume_cmd(const Options& o)
{
    const io::Body body = io::body_from(io::read_file(o.body_path));
    const VPolytope v = io::as_v(body);
    const HPolytope h = io::as_h(body);
    emit(o, {{"volume", io::to_json(volume(v, execution(o)))}, {"vertices", io::to_json(v)}, {"facets", io::to_json(h)}});
    return kOk;
}

bool is_cover(const json& j) { return j.is_object() && j.contains("sets"); }

int verify_cmd(const Options& o)
{
    const io::Body body = io::body_from(io::read_file(o.body_path));
    const std::string& name = o.name;
    auto aux = [&] {
        if (o.aux_path.empty()) throw io::ParseError("verify " + name + " needs a datum or cover file");
        return io::read_file(o.aux_path);
    };
    InequalityReport r;
    if (name == "loomis-whitney" || name == "lw") {
        r = verify_loomis_whitney(io::as_v(body));
    } else if (name == "bollobas-thomason" || name == "bt") {
        r = verify_bollobas_thomason(io::as_v(body), io::cover_from(aux()));
    } else if (name == "meyer") {
        r = verify_meyer(io::as_h(body));
    } else if (name == "liakopoulos") {
        const json j = aux();
        const BLDatum d = is_cover(j) ? datum_from_cover(io::cover_from(j)) : io::datum_from(j);
        r = verify_liakopoulos(io::as_h(body), d);
    } else if (name == "brunn-minkowski" || name == "bm") {
        if (o.aux_path.empty()) throw io::ParseError("verify brunn-minkowski needs a second body");
        r = verify_brunn_minkowski(io::as_v(body), io::as_v(io::body_from(aux())), parse_rational(o.alpha),
                                   parse_rational(o.beta));
    } else if (name == "rbl") {
        const json j = aux();
        const BLDatum d = is_cover(j) ? datum_from_cover(io::cover_from(j)) : io::datum_from(j);
        r = verify_rbl_indicators(io::as_h(body), d, execution(o));
    } else {
        throw io::ParseError("unknown inequality \"" + name + "\"");
    }
    emit(o, io::to_json(r));
    if (!r.holds) {
        std::cerr << "blgeo: " << r.name << " reported as violated; this contradicts a theorem\n";
        return kViolation;
    }
    return kOk;
}

int certify_cmd(const Options& o)
{
    const io::Body body = io::body_from(io::read_file(o.body_path));
    const json j = io::read_file(o.aux_path);
    EqualityCertificate cert;
    json extra;
    if (is_cover(j)) {
        const UniformCover c = io::cover_from(j);
        const CoverValidation v = validate_cover(c);
        if (!v.valid) {
            std::cerr << "blgeo: invalid cover: " << v.reason << "\n";
            return kInvalid;
        }
        cert = certify_bt_equality(io::as_v(body), c);
    } else {
        const BLDatum d = io::datum_from(j);
        if (!validate_datum(d).valid) {
            emit(o, io::to_json(validate_datum(d)));
            return kInvalid;
        }
        const HPolytope k = io::as_h(body);
        cert = certify_liakopoulos_equality(k, d);
        if (cert.spanning && o.samples > 0) {
            const std::uint64_t seed = require_seed(o);
            extra["norm_additivity"] = io::to_json(check_norm_additivity(k, d, o.samples, seed, execution(o)));
            extra["inf_decomposition"] = io::to_json(check_inf_decomposition_equality(k, d, o.samples, seed, execution(o)));
        }
    }
    json out = io::to_json(cert);
    for (auto it = extra.begin(); extra.is_object() && it != extra.end(); ++it) out[it.key()] = it.value();
    emit(o, out);
    return cert.verdict == Verdict::equality ? kOk : kStrict;
}

int norm_decompose_cmd(const Options& o)
{
    const HPolytope k = io::as_h(io::body_from(io::read_file(o.body_path)));
    const BLDatum d = io::datum_from(io::read_file(o.datum_path));
    if (!o.point.empty()) {
        const Vector z = parse_point(o.point);
        std::vector<Subspace> es;
        for (const auto& e : d.entries()) es.push_back(e.subspace);
        const NormDecomposition r = norm_decompose(k, es, z);
        json out = io::to_json(r);
        out["gauge"] = io::to_json(gauge(k, z));
        out["gap"] = io::to_json(r.value - gauge(k, z));
        emit(o, out);
        return kOk;
    }
    if (o.samples == 0) throw io::ParseError("norm-decompose needs --point or --samples");
    emit(o, io::to_json(check_inf_decomposition_equality(k, d, o.samples, require_seed(o), execution(o))));
    return kOk;
}

int integrate_cmd(const Options& o)
{
    const HPolytope k = io::as_h(io::body_from(io::read_file(o.body_path)));
    const std::uint64_t seed = require_seed(o);
    if (o.mode == "exp-gauge") {
        emit(o, io::to_json(mc_exp_gauge(k, parse_rational(o.power), o.samples, seed, execution(o))));
    } else if (o.mode == "volume") {
        emit(o, io::to_json(mc_volume(k, o.samples, seed, execution(o))));
    } else {
        throw io::ParseError("unknown --mode \"" + o.mode + "\" (expected exp-gauge or volume)");
    }
    return kOk;
}

int search_cmd(const Options& o)
{
    const BLDatum d = io::datum_from(io::read_file(o.datum_path));
    const std::uint64_t seed = require_seed(o);
    if (!validate_datum(d).valid) {
        emit(o, io::to_json(validate_datum(d)));
        return kInvalid;
    }
    const SearchResult r = liakopoulos_search(d, o.trials, seed, o.top, execution(o));
    json table = json::array();
    for (const auto& hit : r.best) {
        json row = {{"trial", hit.trial},
                    {"ratio", io::to_json(hit.report.ratio)},
                    {"equality", to_string(hit.report.equality)},
                    {"body", io::to_json(hit.body)}};
        if (hit.certificate) row["certificate"] = io::to_json(*hit.certificate);
        table.push_back(row);
    }
    emit(o, {{"trials", r.trials},
             {"seed", seed},
             {"exact_equalities", r.exact_equalities},
             {"violations", r.violations},
             {"best", table}});
    return r.violations == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Brascamp-Lieb geometry: data, covers, polytopes, volume inequalities and their equality cases"};
    app.require_subcommand(1);
    Options o;

    auto with_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", o.output, "Write the JSON report to this file");
        sub->add_flag("--serial", o.serial, "Run kernels on one thread");
        return sub;
    };

    auto* check = with_output(app.add_subcommand("check-datum", "Validate sum c_i P_i = I_n"));
    check->add_option("datum", o.datum_path)->required();
    auto* dec = with_output(app.add_subcommand("decompose", "Independent subspaces and the dependent space"));
    dec->add_option("datum", o.datum_path)->required();
    auto* cov = with_output(app.add_subcommand("cover", "Validate an s-uniform cover and build its datum"));
    cov->add_option("cover", o.cover_path)->required();
    auto* vol = with_output(app.add_subcommand("volume", "Exact volume and both representations"));
    vol->add_option("body", o.body_path)->required();

    auto* ver = with_output(app.add_subcommand("verify", "Both sides of an inequality"));
    ver->add_option("inequality", o.name, "loomis-whitney | bt | meyer | liakopoulos | brunn-minkowski | rbl")->required();
    ver->add_option("body", o.body_path)->required();
    ver->add_option("aux", o.aux_path, "Datum, cover, or second body");
    ver->add_option("--alpha", o.alpha, "Brunn-Minkowski coefficient of the first body");
    ver->add_option("--beta", o.beta, "Brunn-Minkowski coefficient of the second body");

    auto* cert = with_output(app.add_subcommand("certify", "Decide an equality case"));
    cert->add_option("body", o.body_path)->required();
    cert->add_option("datum-or-cover", o.aux_path)->required();
    cert->add_option("--samples", o.samples, "Also run the gauge identity checks on this many points");
    cert->add_option("--seed", o.seed);

    auto* nd = with_output(app.add_subcommand("norm-decompose", "inf over z = sum y_i of sum ||y_i||_K"));
    nd->add_option("body", o.body_path)->required();
    nd->add_option("datum", o.datum_path)->required();
    nd->add_option("--point", o.point, "Comma-separated rationals");
    nd->add_option("--samples", o.samples);
    nd->add_option("--seed", o.seed);

    auto* integ = with_output(app.add_subcommand("integrate", "Monte Carlo checks"));
    integ->add_option("body", o.body_path)->required();
    integ->add_option("--mode", o.mode, "exp-gauge | volume");
    integ->add_option("--power", o.power, "p in exp(-p ||x||_K)");
    integ->add_option("--samples", o.samples)->required();
    integ->add_option("--seed", o.seed)->required();

    auto* search = with_output(app.add_subcommand("search", "Random bodies ranked by volume ratio"));
    search->add_option("datum", o.datum_path)->required();
    search->add_option("--trials", o.trials)->required();
    search->add_option("--seed", o.seed)->required();
    search->add_option("--top", o.top, "Rows to keep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (check->parsed()) return check_datum(o);
        if (dec->parsed()) return decompose_cmd(o);
        if (cov->parsed()) return cover_cmd(o);
        if (vol->parsed()) return volume_cmd(o);
        if (ver->parsed()) return verify_cmd(o);
        if (cert->parsed()) return certify_cmd(o);
        if (nd->parsed()) return norm_decompose_cmd(o);
        if (integ->parsed()) return integrate_cmd(o);
        if (search->parsed()) return search_cmd(o);
    } catch (const std::exception& e) {
        std::cerr << "blgeo: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
