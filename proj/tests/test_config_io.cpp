#include <mmsim/config.hpp>
#include <mmsim/errors.hpp>
#include <mmsim/trajectory_io.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace mmsim;
namespace fs = std::filesystem;

namespace {

const std::string kShipped = std::string(MMSIM_SOURCE_DIR) + "/config/remus100.yaml";

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string shipped_text() {
    return read_file(kShipped);
}

std::string replace(std::string text, const std::string &from, const std::string &to) {
    const auto pos = text.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return text.replace(pos, from.size(), to);
}

fs::path scratch_dir(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / ("mmsim_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<TrajectoryRecord> synthetic_records(std::size_t n) {
    std::vector<TrajectoryRecord> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k].t = static_cast<double>(k) * 0.01;
        out[k].eta(2) = 0.1 * static_cast<double>(k) / 3.0;
        out[k].x_p = 0.05 * std::sin(static_cast<double>(k));
        out[k].tau_X = 1.0;
        out[k].tau_Xp = 0.5;
    }
    return out;
}

} // namespace

TEST(Config, ShippedRemusConfiguration) {
    const RunConfig cfg = load_config(kShipped);
    EXPECT_NEAR(cfg.vehicle.m_p, 30.48 / 6.0, 1e-12);
    EXPECT_TRUE(cfg.scenario.rail.origin.isApprox(Vec3(0, 0, 0.05)));
    EXPECT_EQ(cfg.scenario.depth_deep, 20.0);
    EXPECT_EQ(cfg.scenario.depth_shallow, 3.0);
    EXPECT_EQ(cfg.scenario.duration, 500.0);
    EXPECT_EQ(cfg.scenario.dt, 0.01);
    EXPECT_EQ(cfg.formulation, Formulation::NewtonEuler);
    EXPECT_TRUE(cfg.volume_derived);
    EXPECT_TRUE(make_env(cfg.vehicle).neutrally_buoyant());
}

TEST(Config, ThresholdOrderViolationIsValidationError) {
    const std::string text = replace(shipped_text(), "depth_shallow: 3.0", "depth_shallow: 30.0");
    try {
        parse_config(text);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError &e) {
        EXPECT_NE(std::string(e.what()).find("depth_shallow < depth_deep"), std::string::npos) << e.what();
    }
}

TEST(Config, UnknownKeyReportsLine) {
    const std::string text = replace(shipped_text(), "  dt: 0.01", "  dt: 0.01\n  tiemstep: 0.02");
    try {
        parse_config(text);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("tiemstep"), std::string::npos) << msg;
        EXPECT_TRUE(std::regex_search(msg, std::regex("line [0-9]+"))) << msg;
    }
}

TEST(Config, MalformedYamlIsParseError) {
    EXPECT_THROW(parse_config("vehicle: [1, 2\nscenario: {"), ParseError);
    EXPECT_THROW(parse_config("vehicle:\n  total_mass: heavy\n"), ParseError);
}

TEST(Config, ExplicitVolumeMustBeNeutral) {
    const std::string text = replace(shipped_text(), "  gravity: 9.81", "  gravity: 9.81\n  displaced_volume: 0.01");
    EXPECT_THROW(parse_config(text), ValidationError);
}

TEST(Config, MissingFileIsIoError) {
    EXPECT_THROW(load_config("/nonexistent/remus.yaml"), IoError);
}

TEST(Config, HashIsStableAndSensitive) {
    const std::string text = shipped_text();
    EXPECT_EQ(content_hash(text), content_hash(text));
    EXPECT_EQ(content_hash(text).size(), 16u);
    EXPECT_NE(content_hash(text), content_hash(text + " "));
}

TEST(TrajectoryIo, TwoRecordsGiveThreeLines) {
    const fs::path dir = scratch_dir("two");
    const std::string path = (dir / "t.csv").string();
    const WriteSummary w = write_trajectory(synthetic_records(2), path, 1, RunMetadata{});
    EXPECT_EQ(w.rows, 2u);
    const std::string text = read_file(path);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "t,x,y,z,phi,theta,psi,u,v,w,p,q,r,x_p,vpx,vpy,vpz,tau_X,tau_Xp,kinetic");
}

TEST(TrajectoryIo, DecimationKeepsFirstAndEveryTenth) {
    const fs::path dir = scratch_dir("decimate");
    const std::string path = (dir / "t.csv").string();
    const WriteSummary w = write_trajectory(synthetic_records(50001), path, 10, RunMetadata{});
    EXPECT_EQ(w.rows, 5001u);
    const CsvTable table = read_csv(path);
    ASSERT_EQ(table.rows.size(), 5001u);
    EXPECT_EQ(table.rows[1][table.column("t")], 0.1);
}

TEST(TrajectoryIo, RoundTripIsBitExact) {
    const fs::path dir = scratch_dir("roundtrip");
    const std::string path = (dir / "t.csv").string();
    const auto records = synthetic_records(500);
    write_trajectory(records, path, 1, RunMetadata{});
    const CsvTable table = read_csv(path);
    const std::size_t ct = table.column("t"), cz = table.column("z"), cx = table.column("x_p");
    for (std::size_t k = 0; k < records.size(); ++k) {
        EXPECT_EQ(table.rows[k][ct], records[k].t);
        EXPECT_EQ(table.rows[k][cz], records[k].eta(2));
        EXPECT_EQ(table.rows[k][cx], records[k].x_p);
    }
}

TEST(TrajectoryIo, MetadataSidecar) {
    const fs::path dir = scratch_dir("meta");
    const std::string path = (dir / "t.csv").string();
    RunMetadata meta;
    meta.config_hash = "0123456789abcdef";
    meta.formulation = Formulation::Woolsey;
    meta.dt = 0.01;
    meta.duration = 0.01;
    meta.overrides = {"--dt 0.01"};
    meta.vehicle_params_json = serialize_params(load_config(kShipped).vehicle);
    const WriteSummary w = write_trajectory(synthetic_records(2), path, 1, meta);
    const auto j = nlohmann::json::parse(read_file(w.metadata_path));
    EXPECT_EQ(j.at("config_hash"), "0123456789abcdef");
    EXPECT_EQ(j.at("formulation"), "woolsey");
    EXPECT_EQ(j.at("dt"), 0.01);
    EXPECT_EQ(j.at("rows"), 2);
    EXPECT_EQ(j.at("overrides").size(), 1u);
    EXPECT_TRUE(j.at("error").is_null());
    EXPECT_TRUE(j.contains("code_version"));
    EXPECT_NEAR(j.at("vehicle_params").at("m_p").get<double>(), 30.48 / 6, 1e-12);
}

TEST(TrajectoryIo, UnwritablePathIsIoError) {
    EXPECT_THROW(write_trajectory(synthetic_records(2), "/nonexistent/dir/t.csv", 1, RunMetadata{}), IoError);
    EXPECT_THROW(read_csv("/nonexistent/t.csv"), IoError);
}
