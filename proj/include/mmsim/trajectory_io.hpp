#pragma once

#include <mmsim/scenario.hpp>

#include <string>
#include <vector>

namespace mmsim {

/// Column order of the trajectory CSV.
const std::vector<std::string> &csv_columns();

/// Provenance written next to every trajectory as <csv>.meta.json.
struct RunMetadata {
    std::string config_hash;
    Formulation formulation = Formulation::NewtonEuler;
    double dt = 0.0;
    double duration = 0.0;
    std::vector<std::string> overrides;  ///< CLI flags that replaced config values
    std::vector<std::string> notes;
    std::string vehicle_params_json;
    std::string error;                   ///< empty unless the run aborted
};

struct WriteSummary {
    std::string csv_path;
    std::string metadata_path;
    std::size_t rows = 0;
};

/// Writes every decimation-th record (the first always) with 17 significant
/// digits and LF line endings, plus the metadata sidecar. Throws IoError.
WriteSummary write_trajectory(const std::vector<TrajectoryRecord> &records, const std::string &path, int decimation,
                              const RunMetadata &metadata);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string &name) const;
};

/// Reads a numeric CSV with a header row. Throws IoError / ParseError.
CsvTable read_csv(const std::string &path);

} // namespace mmsim
