#include <mmsim/trajectory_io.hpp>

#include <mmsim/config.hpp>
#include <mmsim/errors.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace mmsim {

const std::vector<std::string> &csv_columns() {
    static const std::vector<std::string> columns{"t",   "x", "y", "z", "phi", "theta", "psi", "u",     "v",      "w",
                                                  "p",   "q", "r", "x_p", "vpx", "vpy",  "vpz", "tau_X", "tau_Xp", "kinetic"};
    return columns;
}

WriteSummary write_trajectory(const std::vector<TrajectoryRecord> &records, const std::string &path, int decimation,
                              const RunMetadata &metadata) {
    if (decimation < 1) {
        throw ValidationError("decimation must be a positive integer");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }

    std::string buffer;
    for (std::size_t i = 0; i < csv_columns().size(); ++i) {
        buffer += (i ? "," : "") + csv_columns()[i];
    }
    buffer += '\n';

    WriteSummary summary{path, path + ".meta.json", 0};
    for (std::size_t i = 0; i < records.size(); i += static_cast<std::size_t>(decimation)) {
        const TrajectoryRecord &r = records[i];
        fmt::format_to(std::back_inserter(buffer), "{:.17g}", r.t);
        for (Eigen::Index k = 0; k < 6; ++k) {
            fmt::format_to(std::back_inserter(buffer), ",{:.17g}", r.eta(k));
        }
        for (Eigen::Index k = 0; k < 6; ++k) {
            fmt::format_to(std::back_inserter(buffer), ",{:.17g}", r.nu(k));
        }
        fmt::format_to(std::back_inserter(buffer), ",{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.x_p,
                       r.v_p(0), r.v_p(1), r.v_p(2), r.tau_X, r.tau_Xp, r.kinetic);
        ++summary.rows;
    }
    out << buffer;
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }

    nlohmann::json meta;
    meta["config_hash"] = metadata.config_hash;
    meta["formulation"] = to_string(metadata.formulation);
    meta["dt"] = metadata.dt;
    meta["duration"] = metadata.duration;
    meta["decimation"] = decimation;
    meta["rows"] = summary.rows;
    meta["code_version"] = std::string(code_version());
    meta["overrides"] = metadata.overrides;
    meta["notes"] = metadata.notes;
    meta["error"] = metadata.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(metadata.error);
    if (!metadata.vehicle_params_json.empty()) {
        meta["vehicle_params"] = nlohmann::json::parse(metadata.vehicle_params_json);
    }
    std::ofstream meta_out(summary.metadata_path, std::ios::binary | std::ios::trunc);
    if (!meta_out) {
        throw IoError("cannot open '" + summary.metadata_path + "' for writing");
    }
    meta_out << meta.dump(2) << '\n';
    if (!meta_out) {
        throw IoError("failed writing '" + summary.metadata_path + "'");
    }
    return summary;
}

std::size_t CsvTable::column(const std::string &name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw ParseError("CSV has no column '" + name + "'");
}

CsvTable read_csv(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(path + ": empty CSV");
    }
    std::stringstream hs(line);
    for (std::string cell; std::getline(hs, cell, ',');) {
        table.header.push_back(cell);
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            const std::size_t end = std::min(line.find(',', start), line.size());
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + end, value);
            if (ec != std::errc() || ptr != line.data() + end) {
                throw ParseError(fmt::format("{}:{}: malformed number", path, line_no));
            }
            row.push_back(value);
            start = end + 1;
        }
        if (row.size() != table.header.size()) {
            throw ParseError(fmt::format("{}:{}: expected {} columns, found {}", path, line_no, table.header.size(),
                                         row.size()));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace mmsim
