#include "sboxkit/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sboxkit/chaos.hpp"
#include "sboxkit/config_io.hpp"
#include "sboxkit/criteria.hpp"
#include "sboxkit/image.hpp"
#include "sboxkit/report_io.hpp"
#include "sboxkit/sbox.hpp"

namespace sboxkit {
namespace {

namespace fs = std::filesystem;

// Signals a --strict invariant violation, distinct from parse errors.
struct StrictViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator parameters assembled from --config plus individual overrides;
// flags win over the file, the file wins over the preset.
struct ConfigFlags {
    std::string config_path;
    std::string preset = "default";
    std::optional<double> alpha1, alpha2, x01, x02;
    std::optional<std::string> lags1, lags2;
    std::optional<long> burn_in;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key-value config file");
        cmd->add_option("--preset", preset, "base parameter set: default|swapped")
            ->check(CLI::IsMember({"default", "swapped"}));
        cmd->add_option("--alpha1", alpha1, "series-1 bifurcation parameter");
        cmd->add_option("--alpha2", alpha2, "series-2 bifurcation parameter");
        cmd->add_option("--x01", x01, "series-1 initial condition");
        cmd->add_option("--x02", x02, "series-2 initial condition");
        cmd->add_option("--lags1", lags1, "series-1 lags, comma separated");
        cmd->add_option("--lags2", lags2, "series-2 lags, comma separated");
        cmd->add_option("--burn-in", burn_in, "iterations discarded before emission");
    }

    GeneratorConfig resolve() const {
        GeneratorConfig cfg = preset == "swapped" ? swapped_config() : default_config();
        if (!config_path.empty()) cfg = load_config(config_path);
        if (alpha1) cfg.params1.alpha = *alpha1;
        if (alpha2) cfg.params2.alpha = *alpha2;
        if (x01) cfg.params1.x0 = *x01;
        if (x02) cfg.params2.x0 = *x02;
        if (lags1) cfg.lags1 = parse_config("lags1 = " + *lags1).lags1;
        if (lags2) cfg.lags2 = parse_config("lags2 = " + *lags2).lags2;
        if (burn_in) cfg.burn_in = *burn_in;
        cfg.validate();
        return cfg;
    }
};

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string provenance_text(const GeneratorConfig& cfg, const GenerateResult& res) {
    std::ostringstream out;
    out << format_config(cfg);
    out << "bits_consumed = " << res.bits_consumed << "\n";
    out << "blocks_consumed = " << res.blocks_consumed << "\n";
    return out.str();
}

int cmd_gen(const ConfigFlags& flags, int n, const std::string& out_path, int count) {
    GeneratorConfig cfg = flags.resolve();
    if (count == 1) {
        GenerateResult res = generate_sbox(cfg, n);
        save_sbox(res.box, out_path);
        write_text_file(out_path + ".prov", provenance_text(cfg, res));
    } else {
        fs::create_directories(out_path);
        Generator gen(cfg);
        std::ostringstream prov;
        prov << format_config(cfg);
        for (int i = 0; i < count; ++i) {
            std::uint64_t offset = gen.emitted();
            GenerateResult res = generate_sbox(gen, n);
            std::ostringstream name;
            name << "sbox_" << std::setw(4) << std::setfill('0') << i << ".txt";
            save_sbox(res.box, fs::path(out_path) / name.str());
            prov << "member_" << i << "_bit_offset = " << offset << "\n";
        }
        write_text_file(fs::path(out_path) / "provenance.txt", prov.str());
    }
    return kExitOk;
}

int cmd_analyze(const std::string& in_path, const std::string& format,
                const std::string& out_path, bool strict) {
    SBox box = load_sbox(in_path, /*require_bijective=*/false);
    CriteriaReport rep = full_report(box);
    if (strict && !rep.bijective)
        throw StrictViolation("input S-box is not bijective");
    if (format == "csv-dir") {
        report_to_csv_dir(rep, out_path.empty() ? "report_csv" : out_path);
        return kExitOk;
    }
    std::string text = format == "json" ? report_to_json(rep) : report_to_text(rep);
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
    return kExitOk;
}

int cmd_compare(const std::vector<std::string>& in_paths, const std::string& out_path) {
    std::vector<std::string> names;
    std::vector<CriteriaReport> reports;
    bool any_failed = false;
    for (const std::string& path : in_paths) {
        try {
            SBox box = load_sbox(path, /*require_bijective=*/false);
            names.push_back(fs::path(path).filename().string());
            reports.push_back(full_report(box));
        } catch (const std::exception& e) {
            std::cerr << "skipping " << path << ": " << e.what() << "\n";
            any_failed = true;
        }
    }
    if (reports.empty()) return kExitParse;
    std::string table = comparison_table(names, reports);
    if (out_path.empty())
        std::cout << table;
    else
        write_text_file(out_path, table);
    return any_failed ? kExitParse : kExitOk;
}

int cmd_trace(const ConfigFlags& flags, long samples, const std::string& out_path) {
    GeneratorConfig cfg = flags.resolve();
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << std::setprecision(17);
    out << "i,x_i,m_i1,m_i2,z_i\n";
    Generator gen(cfg);
    for (long i = 0; i < samples; ++i) {
        TraceRow row = gen.next_trace();
        out << row.i << ',' << row.x << ',' << row.m1 << ',' << row.m2 << ',' << row.z << "\n";
    }
    return kExitOk;
}

int cmd_dynamics(const std::string& mode, double alpha, double alpha_min, double alpha_max,
                 int steps, long n_iter, long burn_in, int keep, double x0,
                 const std::string& out_path) {
    std::ostringstream out;
    out << std::setprecision(17);
    if (mode == "fixed-points") {
        out << "x,stability\n";
        for (const FixedPoint& fp : fixed_points(alpha))
            out << fp.value << ',' << (fp.repulsive ? "repulsive" : "attracting") << "\n";
    } else if (mode == "lyapunov") {
        out << "alpha,lambda\n";
        for (int s = 0; s < steps; ++s) {
            double t = steps == 1 ? 0.0 : static_cast<double>(s) / (steps - 1);
            double a = alpha_min + t * (alpha_max - alpha_min);
            Interval iv = invariant_interval(a);
            double seed = iv.contains(x0) ? x0 : 0.5 * (iv.lo + iv.hi) + 0.1;
            out << a << ',' << lyapunov_exponent({a, seed}, n_iter, burn_in) << "\n";
        }
    } else {  // bifurcation
        out << "alpha,x\n";
        for (const BifurcationSlice& slice :
             bifurcation_scan(alpha_min, alpha_max, steps, burn_in, keep))
            for (double x : slice.orbit) out << slice.alpha << ',' << x << "\n";
    }
    if (out_path.empty())
        std::cout << out.str();
    else
        write_text_file(out_path, out.str());
    return kExitOk;
}

int cmd_image(const ConfigFlags& flags, const std::string& in_path,
              const std::string& out_path, bool decrypt, const std::string& hist_in,
              const std::string& hist_out) {
    GeneratorConfig cfg = flags.resolve();
    GrayImage input = read_pgm(in_path);
    SBoxFamily family = generate_family(cfg, 8, static_cast<std::size_t>(input.height));
    GrayImage output = decrypt ? unsubstitute(input, family) : substitute(input, family);
    write_pgm(output, out_path);
    if (!hist_in.empty()) write_histogram_csv(histogram(input), hist_in);
    if (!hist_out.empty()) write_histogram_csv(histogram(output), hist_out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"chaotic S-box generation and analysis toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate S-box fixture(s) from the bit stream");
    ConfigFlags gen_cfg;
    gen_cfg.attach(gen);
    int gen_n = 8;
    int gen_count = 1;
    std::string gen_out = "sbox.txt";
    gen->add_option("--n", gen_n, "word size in bits")->check(CLI::Range(2, 16));
    gen->add_option("--count", gen_count, "number of family members")->check(CLI::Range(1, 1 << 20));
    gen->add_option("--out", gen_out, "output fixture file (or directory with --count > 1)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "evaluate the good-S-box criteria");
    std::string an_in, an_format = "text", an_out;
    bool an_strict = false;
    analyze->add_option("--in", an_in, "S-box fixture")->required();
    analyze->add_option("--format", an_format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv-dir"}));
    analyze->add_option("--out", an_out, "output file (directory for csv-dir); stdout if absent");
    analyze->add_flag("--strict", an_strict, "fail on non-bijective input");

    // compare
    auto* compare = app.add_subcommand("compare", "side-by-side criteria table");
    std::vector<std::string> cp_in;
    std::string cp_out;
    compare->add_option("--in", cp_in, "S-box fixtures")->required()->expected(-1);
    compare->add_option("--out", cp_out, "output file; stdout if absent");

    // trace
    auto* trace = app.add_subcommand("trace", "emit (i, x_i, m_i1, m_i2, z_i) rows");
    ConfigFlags tr_cfg;
    tr_cfg.attach(trace);
    long tr_samples = 1000;
    std::string tr_out = "trace.csv";
    trace->add_option("--samples", tr_samples, "rows to emit")->check(CLI::NonNegativeNumber);
    trace->add_option("--out", tr_out, "output CSV");

    // dynamics
    auto* dynamics = app.add_subcommand("dynamics", "map diagnostics as CSV");
    std::string dy_mode;
    double dy_alpha = 4.0, dy_alpha_min = -2.0, dy_alpha_max = 4.0, dy_x0 = 0.3;
    int dy_steps = 1, dy_keep = 100;
    long dy_n_iter = 100000, dy_burn_in = 1000;
    std::string dy_out;
    dynamics->add_option("--mode", dy_mode, "lyapunov|bifurcation|fixed-points")
        ->required()
        ->check(CLI::IsMember({"lyapunov", "bifurcation", "fixed-points"}));
    dynamics->add_option("--alpha", dy_alpha, "single alpha (fixed-points)");
    dynamics->add_option("--alpha-min", dy_alpha_min, "scan start");
    dynamics->add_option("--alpha-max", dy_alpha_max, "scan end");
    dynamics->add_option("--steps", dy_steps, "scan points")->check(CLI::PositiveNumber);
    dynamics->add_option("--n-iter", dy_n_iter, "iterations per exponent estimate");
    dynamics->add_option("--burn-in", dy_burn_in, "discarded transient iterations");
    dynamics->add_option("--keep", dy_keep, "orbit samples kept per alpha");
    dynamics->add_option("--x0", dy_x0, "initial condition");
    dynamics->add_option("--out", dy_out, "output CSV; stdout if absent");

    // image
    auto* image = app.add_subcommand("image", "per-row polyalphabetic substitution of a PGM");
    ConfigFlags im_cfg;
    im_cfg.attach(image);
    std::string im_in, im_out, im_hist_in, im_hist_out;
    bool im_decrypt = false;
    image->add_option("--in", im_in, "input P5 PGM")->required();
    image->add_option("--out", im_out, "output P5 PGM")->required();
    image->add_flag("--decrypt", im_decrypt, "apply the inverse substitution");
    image->add_option("--hist-in", im_hist_in, "write input histogram CSV here");
    image->add_option("--hist-out", im_hist_out, "write output histogram CSV here");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "sboxkit";
    argv.push_back(prog.data());
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_cfg, gen_n, gen_out, gen_count);
        if (analyze->parsed()) return cmd_analyze(an_in, an_format, an_out, an_strict);
        if (compare->parsed()) return cmd_compare(cp_in, cp_out);
        if (trace->parsed()) return cmd_trace(tr_cfg, tr_samples, tr_out);
        if (dynamics->parsed())
            return cmd_dynamics(dy_mode, dy_alpha, dy_alpha_min, dy_alpha_max, dy_steps,
                                dy_n_iter, dy_burn_in, dy_keep, dy_x0, dy_out);
        if (image->parsed())
            return cmd_image(im_cfg, im_in, im_out, im_decrypt, im_hist_in, im_hist_out);
    } catch (const StrictViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStrict;
    } catch (const StreamExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}

}  // namespace sboxkit
