// Command-line front end: parse signal/point-set files, run verifications,
// emit deterministic JSON/CSV reports.
//
// Exit codes: 0 success, 1 verification failure (a report with holds or
// certified == false), 2 usage/IO/parse errors.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tfa/bargmann.hpp"
#include "tfa/frft.hpp"
#include "tfa/hrt.hpp"
#include "tfa/signal_io.hpp"
#include "tfa/stft.hpp"
#include "tfa/uncertainty.hpp"

namespace {

struct Options {
    std::string signal_path;
    std::string points_path;
    std::string window = "gaussian";
    std::string geometry;
    std::string grid = "41x41";
    std::string out_path;
    std::string format;  // empty: subcommand default (csv for stft, json otherwise)
    std::string lambdas = "1,0.5,0.1,0.01";
    double R = 0.0;
    double N = 0.0;
    double lambda = 0.0;
    double theta = 0.0;
    double tol = 0.0;  // 0: subcommand default
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        tfa::write_file(opt.out_path, text);
    }
}

// Returns true for csv, false for json (the default when --format is absent).
bool want_csv(const Options& opt, const std::string& subcommand) {
    if (opt.format.empty() || opt.format == "json") return false;
    if (opt.format == "csv") return true;
    throw std::invalid_argument(subcommand + ": --format must be json or csv");
}

void require_gaussian_window(const Options& opt) {
    if (opt.window != "gaussian") {
        throw std::invalid_argument("--window: only 'gaussian' is supported");
    }
}

tfa::GaussianMixture resolve_signal(const Options& opt) {
    if (!opt.signal_path.empty()) {
        tfa::GaussianMixture f = tfa::load_signal(opt.signal_path);
        if (f.d != 1) throw std::invalid_argument("this subcommand requires a d = 1 signal");
        return f;
    }
    if (opt.lambda > 0.0) return tfa::to_mixture(tfa::dilated_gaussian(opt.lambda));
    throw std::invalid_argument("need --signal <path> or --lambda <value>");
}

std::vector<double> parse_lambda_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("--lambdas: cannot parse '" + tok + "'");
        }
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("--lambdas: empty list");
    return out;
}

std::pair<int, int> parse_grid(const std::string& text) {
    const std::size_t x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == text.size()) {
        throw std::invalid_argument("--grid: expected <nx>x<nw>, e.g. 41x41");
    }
    int nx = 0, nw = 0;
    try {
        nx = std::stoi(text.substr(0, x));
        nw = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--grid: expected <nx>x<nw>, e.g. 41x41");
    }
    if (nx < 2 || nw < 2) throw std::invalid_argument("--grid: both sizes must be >= 2");
    return {nx, nw};
}

int run_stft(const Options& opt) {
    require_gaussian_window(opt);
    if (!opt.format.empty() && opt.format != "csv") {
        throw std::invalid_argument("stft: only --format csv is supported");
    }
    const tfa::GaussianMixture f = resolve_signal(opt);
    const auto [nx, nw] = parse_grid(opt.grid);
    const double extent = opt.R > 0.0 ? opt.R : 4.0;

    // Sample on a grid wide enough for the class's decay at desk scale.
    const int n = 4096;
    const double dt = 1.0 / 64.0;
    const double t0 = -32.0;
    const tfa::SampledSignal sampled = tfa::sample(f, n, dt, t0);

    std::vector<double> x_axis(nx);
    for (int i = 0; i < nx; ++i) x_axis[i] = -extent + 2.0 * extent * i / (nx - 1);

    // Admissible frequencies are integer multiples of 1/(M dt) for the padded
    // FFT length M; snap the requested extent onto that grid.
    std::size_t m = 1;
    while (m < static_cast<std::size_t>(4 * n)) m <<= 1;
    const double bin = 1.0 / (static_cast<double>(m) * dt);
    const long long stride =
        std::max<long long>(1, std::llround(2.0 * extent / ((nw - 1) * bin)));
    std::vector<double> omega_axis(nw);
    for (int i = 0; i < nw; ++i) {
        omega_axis[i] = static_cast<double>((i - nw / 2) * stride) * bin;
    }

    const tfa::STFTGrid grid = tfa::stft_grid(sampled, tfa::standard_window(1), x_axis, omega_axis);
    emit(opt, tfa::stft_grid_csv(grid));
    return 0;
}

int run_bound(const Options& opt) {
    if (!(opt.N > 1.0)) throw std::invalid_argument("bound: requires --N greater than 1");
    if (want_csv(opt, "bound")) {
        emit(opt, tfa::bounds_csv(opt.N));
    } else {
        emit(opt, tfa::bounds_json(opt.N));
    }
    return 0;
}

int run_verify(const Options& opt) {
    require_gaussian_window(opt);
    if (!opt.format.empty() && opt.format != "json") throw std::invalid_argument("verify: only --format json is supported");
    if (!(opt.R > 0.0)) throw std::invalid_argument("verify: requires --R greater than 0");
    tfa::Geometry geometry;
    if (opt.geometry == "cylinder") {
        geometry = tfa::Geometry::cylinder;
    } else if (opt.geometry == "sphere") {
        geometry = tfa::Geometry::sphere;
    } else {
        throw std::invalid_argument("verify: --geometry must be cylinder or sphere");
    }
    const tfa::GaussianMixture f = resolve_signal(opt);
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-9;
    const tfa::TheoremReport rep = tfa::verify_theorem(f, opt.R, geometry, tol);
    emit(opt, tfa::theorem_report_json(rep));
    return rep.holds ? 0 : 1;
}

int run_sharpness(const Options& opt) {
    if (!(opt.N > 1.0)) throw std::invalid_argument("sharpness: requires --N greater than 1");
    const std::vector<double> lambdas = parse_lambda_list(opt.lambdas);
    const std::vector<tfa::SharpnessRow> rows = tfa::sharpness_sweep(opt.N, lambdas);
    if (want_csv(opt, "sharpness")) {
        emit(opt, tfa::sharpness_csv(rows));
    } else {
        emit(opt, tfa::sharpness_json(opt.N, rows));
    }
    return 0;
}

int run_bargmann_check(const Options& opt) {
    if (!opt.format.empty() && opt.format != "json") {
        throw std::invalid_argument("bargmann-check: only --format json is supported");
    }
    const tfa::GaussianMixture f = resolve_signal(opt);
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-9;

    double max_relation = 0.0, max_phi = 0.0;
    int count = 0;
    for (int i = -4; i <= 4; ++i) {
        for (int j = -4; j <= 4; ++j) {
            const double x = 0.5 * i;
            const double w = 0.5 * j;
            const tfa::ComplexPoint z{tfa::complexd(x, w)};
            max_relation = std::max(max_relation, tfa::verify_bargmann_relation(f, z));
            const double lhs =
                std::abs(tfa::stft_closed_form(f, tfa::standard_window(1), {x, -w}));
            const double rhs = std::exp(-tfa::kPi * w * w) * std::abs(tfa::phi_transform(f, z));
            max_phi = std::max(max_phi, std::abs(lhs - rhs));
            ++count;
        }
    }
    const bool holds = max_relation <= tol && max_phi <= tol;
    std::string out = "{\"points\":" + std::to_string(count);
    out += ",\"max_relation_residual\":" + tfa::json_number(max_relation);
    out += ",\"max_phi_identity_residual\":" + tfa::json_number(max_phi);
    out += ",\"holds\":" + tfa::json_bool(holds);
    out += ",\"tolerance\":" + tfa::json_number(tol) + "}\n";
    emit(opt, out);
    return holds ? 0 : 1;
}

int run_gram(const Options& opt) {
    require_gaussian_window(opt);
    if (!opt.format.empty() && opt.format != "json") throw std::invalid_argument("gram: only --format json is supported");
    if (opt.points_path.empty()) throw std::invalid_argument("gram: requires --points <path>");
    const std::vector<tfa::PhasePoint> pts = tfa::load_points(opt.points_path);
    const tfa::ShiftSystem system(tfa::standard_window(1), pts);
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-10;
    const tfa::GramCertificate cert = tfa::certify_independence(system, tol);
    emit(opt, tfa::gram_certificate_json(cert));
    return cert.certified_independent ? 0 : 1;
}

int run_fat_tail(const Options& opt) {
    require_gaussian_window(opt);
    if (!opt.format.empty() && opt.format != "json") {
        throw std::invalid_argument("fat-tail: only --format json is supported");
    }
    if (!(opt.R > 0.0)) throw std::invalid_argument("fat-tail: requires --R greater than 0");
    if (!(opt.N > 0.0)) throw std::invalid_argument("fat-tail: requires --N greater than 0");
    tfa::FatTailRegion region;
    if (opt.geometry == "exterior" || opt.geometry.empty()) {
        region = tfa::FatTailRegion::exterior;
    } else if (opt.geometry == "sphere") {
        region = tfa::FatTailRegion::sphere;
    } else if (opt.geometry == "cylinder") {
        region = tfa::FatTailRegion::cylinder;
    } else {
        throw std::invalid_argument("fat-tail: --geometry must be cylinder, sphere, or exterior");
    }
    const tfa::GaussianMixture f = resolve_signal(opt);
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-6;
    const tfa::FatTailReport rep = tfa::fat_tail_scan(f, opt.R, opt.N, region, tol);
    emit(opt, tfa::fat_tail_report_json(rep));
    return rep.holds ? 0 : 1;
}

int run_covariance(const Options& opt) {
    require_gaussian_window(opt);
    if (!opt.format.empty() && opt.format != "json") {
        throw std::invalid_argument("covariance: only --format json is supported");
    }
    const tfa::GaussianMixture f = resolve_signal(opt);
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-8;

    double max_residual = 0.0;
    int count = 0;
    for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
            max_residual = std::max(
                max_residual,
                tfa::verify_covariance(f, opt.theta,
                                       tfa::PhasePoint(static_cast<double>(i),
                                                       static_cast<double>(j))));
            ++count;
        }
    }
    const double unitarity =
        std::abs(tfa::l2_norm(tfa::frft(f, opt.theta)) - tfa::l2_norm(f));
    const bool holds = max_residual <= tol && unitarity <= tol;

    std::string out = "{\"theta\":" + tfa::json_number(opt.theta);
    out += ",\"points\":" + std::to_string(count);
    out += ",\"max_covariance_residual\":" + tfa::json_number(max_residual);
    out += ",\"unitarity_residual\":" + tfa::json_number(unitarity);
    out += ",\"holds\":" + tfa::json_bool(holds);
    out += ",\"tolerance\":" + tfa::json_number(tol) + "}\n";
    emit(opt, out);
    return holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"time-frequency analysis toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--signal", opt.signal_path, "signal JSON path");
        sub->add_option("--window", opt.window, "analysis window (only: gaussian)");
        sub->add_option("--lambda", opt.lambda, "use the dilated Gaussian f_lambda as the signal");
        sub->add_option("--tol", opt.tol, "tolerance (subcommand-specific default)");
        sub->add_option("--out", opt.out_path, "output path (default: stdout)");
        sub->add_option("--format", opt.format, "output format: json or csv");
    };

    CLI::App* stft = app.add_subcommand("stft", "export a sampled-signal STFT grid as CSV");
    add_common(stft);
    stft->add_option("--grid", opt.grid, "grid size <nx>x<nw> (default 41x41)");
    stft->add_option("--R", opt.R, "half-extent of the grid axes (default 4)");

    CLI::App* bound = app.add_subcommand("bound", "print the cylinder and sphere radius bounds");
    bound->add_option("--N", opt.N, "concentration ratio N > 1")->required();
    bound->add_option("--out", opt.out_path, "output path (default: stdout)");
    bound->add_option("--format", opt.format, "output format: json or csv");

    CLI::App* verify = app.add_subcommand("verify", "verify a radius inequality for a signal");
    add_common(verify);
    verify->add_option("--geometry", opt.geometry, "cylinder or sphere")->required();
    verify->add_option("--R", opt.R, "boundary radius")->required();

    CLI::App* sharp = app.add_subcommand("sharpness", "bisection sweep of minimal cylinder radii");
    sharp->add_option("--N", opt.N, "concentration ratio N > 1")->required();
    sharp->add_option("--lambdas", opt.lambdas, "comma-separated dilations (default 1,0.5,0.1,0.01)");
    sharp->add_option("--out", opt.out_path, "output path (default: stdout)");
    sharp->add_option("--format", opt.format, "output format: json or csv");

    CLI::App* bcheck = app.add_subcommand("bargmann-check", "residuals of the transform identities");
    add_common(bcheck);

    CLI::App* gram = app.add_subcommand("gram", "Gram-matrix independence certificate");
    add_common(gram);
    gram->add_option("--points", opt.points_path, "point-set JSON path");

    CLI::App* fat = app.add_subcommand("fat-tail", "scan the concentration condition over a region");
    add_common(fat);
    fat->add_option("--geometry", opt.geometry, "cylinder, sphere, or exterior (default)");
    fat->add_option("--R", opt.R, "region radius")->required();
    fat->add_option("--N", opt.N, "concentration ratio")->required();

    CLI::App* cov = app.add_subcommand("covariance", "rotation covariance residuals");
    add_common(cov);
    cov->add_option("--theta", opt.theta, "rotation angle in radians")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (stft->parsed()) return run_stft(opt);
        if (bound->parsed()) return run_bound(opt);
        if (verify->parsed()) return run_verify(opt);
        if (sharp->parsed()) return run_sharpness(opt);
        if (bcheck->parsed()) return run_bargmann_check(opt);
        if (gram->parsed()) return run_gram(opt);
        if (fat->parsed()) return run_fat_tail(opt);
        if (cov->parsed()) return run_covariance(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
