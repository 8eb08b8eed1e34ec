#include "sboxkit/report_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace sboxkit {

std::string report_to_json(const CriteriaReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["bijective"] = rep.bijective;
    j["nonlinearities"] = rep.nonlinearities;
    j["nl_min"] = rep.nl_min;
    j["nl_max"] = rep.nl_max;
    j["nl_avg"] = rep.nl_avg;
    j["sac_matrix"] = rep.sac;
    j["sac_min"] = rep.sac_min;
    j["sac_max"] = rep.sac_max;
    j["sac_avg"] = rep.sac_avg;
    j["bic_nl_matrix"] = rep.bic_nl_matrix;
    j["bic_nl_mean"] = rep.bic_nl_mean;
    j["bic_sac_matrix"] = rep.bic_sac_matrix;
    j["bic_sac_mean"] = rep.bic_sac_mean;
    j["bic_dd_matrix"] = rep.bic_dd_matrix;
    j["bic_dd_max"] = rep.bic_dd_max;
    j["ddt"] = rep.ddt;
    j["ddt_max"] = rep.ddt_max;
    j["dp"] = rep.dp;
    j["lat_sq_max"] = rep.lat_sq_max;
    j["lat_sq_mean_nonzero"] = rep.lat_sq_mean_nonzero;
    return j.dump(2);
}

static std::string fmt4(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
}

std::string report_to_text(const CriteriaReport& rep) {
    std::ostringstream out;
    out << "n " << rep.n << "\n";
    out << "bijective " << (rep.bijective ? "true" : "false") << "\n";
    out << "nonlinearities";
    for (int v : rep.nonlinearities) out << ' ' << v;
    out << "\n";
    out << "nl_min " << rep.nl_min << "\n";
    out << "nl_max " << rep.nl_max << "\n";
    out << "nl_avg " << fmt4(rep.nl_avg) << "\n";
    out << "sac_min " << fmt4(rep.sac_min) << "\n";
    out << "sac_max " << fmt4(rep.sac_max) << "\n";
    out << "sac_avg " << fmt4(rep.sac_avg) << "\n";
    out << "bic_nl_mean " << fmt4(rep.bic_nl_mean) << "\n";
    out << "bic_sac_mean " << fmt4(rep.bic_sac_mean) << "\n";
    out << "bic_dd_max " << rep.bic_dd_max << "\n";
    out << "ddt_max " << rep.ddt_max << "\n";
    out << "dp " << fmt4(rep.dp) << "\n";
    out << "lat_sq_max " << fmt4(rep.lat_sq_max) << "\n";
    out << "lat_sq_mean_nonzero " << fmt4(rep.lat_sq_mean_nonzero) << "\n";

    auto print_matrix = [&out](const char* name, const auto& m) {
        out << name << "\n";
        for (const auto& row : m) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out << ' ';
                if constexpr (std::is_floating_point_v<std::decay_t<decltype(row[j])>>)
                    out << fmt4(row[j]);
                else
                    out << row[j];
            }
            out << "\n";
        }
    };
    print_matrix("sac_matrix", rep.sac);
    print_matrix("bic_nl_matrix", rep.bic_nl_matrix);
    print_matrix("bic_sac_matrix", rep.bic_sac_matrix);
    print_matrix("bic_dd_matrix", rep.bic_dd_matrix);
    return out.str();
}

std::string comparison_table(const std::vector<std::string>& names,
                             const std::vector<CriteriaReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(24) << "name" << std::right << std::setw(10) << "bijective"
        << std::setw(8) << "nl_min" << std::setw(8) << "nl_max" << std::setw(10) << "nl_avg"
        << std::setw(9) << "sac_min" << std::setw(9) << "sac_max" << std::setw(9) << "sac_avg"
        << std::setw(10) << "bic_sac" << std::setw(9) << "bic_nl" << std::setw(9) << "dp"
        << std::setw(9) << "melp" << "\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const CriteriaReport& r = reports[i];
        out << std::left << std::setw(24) << names[i] << std::right << std::setw(10)
            << (r.bijective ? "yes" : "no") << std::setw(8) << r.nl_min << std::setw(8)
            << r.nl_max << std::setw(10) << fmt4(r.nl_avg) << std::setw(9) << fmt4(r.sac_min)
            << std::setw(9) << fmt4(r.sac_max) << std::setw(9) << fmt4(r.sac_avg)
            << std::setw(10) << fmt4(r.bic_sac_mean) << std::setw(9) << fmt4(r.bic_nl_mean)
            << std::setw(9) << fmt4(r.dp) << std::setw(9) << fmt4(r.lat_sq_max) << "\n";
    }
    return out.str();
}

template <typename M>
static void write_csv_matrix(const std::filesystem::path& path, const M& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            if constexpr (std::is_floating_point_v<std::decay_t<decltype(row[j])>>)
                out << std::setprecision(17) << row[j];
            else
                out << row[j];
        }
        out << "\n";
    }
}

void report_to_csv_dir(const CriteriaReport& rep, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_csv_matrix(dir / "sac.csv", rep.sac);
    write_csv_matrix(dir / "bic_nl.csv", rep.bic_nl_matrix);
    write_csv_matrix(dir / "bic_sac.csv", rep.bic_sac_matrix);
    write_csv_matrix(dir / "bic_dd.csv", rep.bic_dd_matrix);
    write_csv_matrix(dir / "ddt.csv", rep.ddt);
}

}  // namespace sboxkit
