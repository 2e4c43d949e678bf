#ifndef DIRACGEO_IO_HPP
#define DIRACGEO_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "diracgeo/grid.hpp"
#include "diracgeo/identities.hpp"

namespace dgeo {

/// Flat key = value configuration text; '#' starts a comment.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback) const;
    std::string require(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

/// Grid-shaped array of fixed-arity double tuples; the exchange format for
/// field snapshots (CSV with a commented header, or raw binary).
struct FieldSnapshot {
    Grid grid;
    int arity = 1;
    std::vector<double> values; // node-major, arity entries per node
};

FieldSnapshot snapshot_of(const Field<Spinor>& f);
Field<Spinor> spinor_field_of(const FieldSnapshot& s);

void write_snapshot_csv(const FieldSnapshot& s, const std::string& path,
                        const std::string& manifest_hash = "");
FieldSnapshot read_snapshot_csv(const std::string& path);
void write_snapshot_binary(const FieldSnapshot& s, const std::string& path);
FieldSnapshot read_snapshot_binary(const std::string& path);

/// Reproducibility record carried by every output file.
struct RunManifest {
    std::string command;
    std::string config_path;
    unsigned long seed = 0;
    std::string version = "diracgeo 1.0";
    double tol_scale = 1.0;
    std::vector<std::string> outputs;
    double wall_time_s = 0.0; // excluded from the hash

    std::string hash() const; // fnv-1a over the stable fields
    std::string to_json() const;
};

void write_manifest(const RunManifest& m, const std::string& path);

std::string residual_report_json(const ResidualReport& rep,
                                 const std::string& manifest_hash);

/// Formatting used by every CSV writer: round-trip exact doubles.
std::string format_double(double v);

} // namespace dgeo

#endif
