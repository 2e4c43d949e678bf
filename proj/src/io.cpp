#include "diracgeo/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dgeo {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r\n");
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace

Config Config::parse_string(const std::string& text)
{
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        c.kv_[key] = val;
    }
    return c;
}

Config Config::parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

std::string Config::get(const std::string& key, const std::string& fallback) const
{
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

std::string Config::require(const std::string& key) const
{
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing config key: " + key);
    return it->second;
}

double Config::get_double(const std::string& key, double fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        std::size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' is not a number: " + it->second);
    }
}

int Config::get_int(const std::string& key, int fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        std::size_t pos = 0;
        int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' is not an integer: " + it->second);
    }
}

bool Config::get_bool(const std::string& key, bool fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config key '" + key + "' is not a boolean: " + v);
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

FieldSnapshot snapshot_of(const Field<Spinor>& f)
{
    FieldSnapshot s;
    s.grid = f.grid;
    s.arity = 8;
    s.values.reserve(f.size() * 8);
    for (const Spinor& sp : f.v)
        for (int c = 0; c < 4; ++c) {
            s.values.push_back(sp[c].real());
            s.values.push_back(sp[c].imag());
        }
    return s;
}

Field<Spinor> spinor_field_of(const FieldSnapshot& s)
{
    if (s.arity != 8) throw ConfigError("snapshot arity is not a spinor field");
    Field<Spinor> f(s.grid);
    for (std::size_t p = 0; p < f.size(); ++p)
        for (int c = 0; c < 4; ++c)
            f.v[p][c] = Complex(s.values[8 * p + 2 * c], s.values[8 * p + 2 * c + 1]);
    return f;
}

void write_snapshot_csv(const FieldSnapshot& s, const std::string& path,
                        const std::string& manifest_hash)
{
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path);
    if (!manifest_hash.empty()) out << "# manifest " << manifest_hash << "\n";
    out << "# dims " << s.grid.n[0] << " " << s.grid.n[1] << " " << s.grid.n[2] << " "
        << s.grid.n[3] << "\n";
    out << "# spacing " << format_double(s.grid.h[0]) << " " << format_double(s.grid.h[1])
        << " " << format_double(s.grid.h[2]) << " " << format_double(s.grid.h[3]) << "\n";
    out << "# origin " << format_double(s.grid.origin[0]) << " "
        << format_double(s.grid.origin[1]) << " " << format_double(s.grid.origin[2])
        << " " << format_double(s.grid.origin[3]) << "\n";
    out << "# arity " << s.arity << "\n";
    for (std::size_t p = 0; p < s.values.size(); p += s.arity) {
        for (int c = 0; c < s.arity; ++c) {
            if (c) out << ",";
            out << format_double(s.values[p + c]);
        }
        out << "\n";
    }
}

FieldSnapshot read_snapshot_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open snapshot: " + path);
    FieldSnapshot s;
    std::string line;
    bool have_dims = false, have_arity = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tag;
            hs >> tag;
            if (tag == "dims") {
                hs >> s.grid.n[0] >> s.grid.n[1] >> s.grid.n[2] >> s.grid.n[3];
                have_dims = true;
            } else if (tag == "spacing") {
                hs >> s.grid.h[0] >> s.grid.h[1] >> s.grid.h[2] >> s.grid.h[3];
            } else if (tag == "origin") {
                hs >> s.grid.origin[0] >> s.grid.origin[1] >> s.grid.origin[2]
                    >> s.grid.origin[3];
            } else if (tag == "arity") {
                hs >> s.arity;
                have_arity = true;
            }
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) s.values.push_back(std::stod(cell));
    }
    if (!have_dims || !have_arity)
        throw ConfigError("snapshot header incomplete in " + path);
    if (s.values.size() != s.grid.size() * std::size_t(s.arity))
        throw ConfigError("snapshot size mismatch in " + path);
    return s;
}

void write_snapshot_binary(const FieldSnapshot& s, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    const char magic[4] = {'D', 'G', 'F', '1'};
    out.write(magic, 4);
    std::int64_t n[4] = {s.grid.n[0], s.grid.n[1], s.grid.n[2], s.grid.n[3]};
    out.write(reinterpret_cast<const char*>(n), sizeof n);
    out.write(reinterpret_cast<const char*>(s.grid.h.data()), 4 * sizeof(double));
    out.write(reinterpret_cast<const char*>(s.grid.origin.data()), 4 * sizeof(double));
    std::int64_t arity = s.arity;
    out.write(reinterpret_cast<const char*>(&arity), sizeof arity);
    out.write(reinterpret_cast<const char*>(s.values.data()),
              std::streamsize(s.values.size() * sizeof(double)));
}

FieldSnapshot read_snapshot_binary(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open snapshot: " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, "DGF1", 4) != 0)
        throw ConfigError("not a field snapshot: " + path);
    FieldSnapshot s;
    std::int64_t n[4];
    in.read(reinterpret_cast<char*>(n), sizeof n);
    for (int i = 0; i < 4; ++i) s.grid.n[i] = int(n[i]);
    in.read(reinterpret_cast<char*>(s.grid.h.data()), 4 * sizeof(double));
    in.read(reinterpret_cast<char*>(s.grid.origin.data()), 4 * sizeof(double));
    std::int64_t arity = 0;
    in.read(reinterpret_cast<char*>(&arity), sizeof arity);
    s.arity = int(arity);
    s.values.resize(s.grid.size() * std::size_t(s.arity));
    in.read(reinterpret_cast<char*>(s.values.data()),
            std::streamsize(s.values.size() * sizeof(double)));
    if (!in) throw ConfigError("snapshot truncated: " + path);
    return s;
}

std::string RunManifest::hash() const
{
    std::string canon = command + "|" + config_path + "|" + std::to_string(seed) + "|"
                        + version + "|" + format_double(tol_scale);
    for (const std::string& o : outputs) canon += "|" + o;
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string RunManifest::to_json() const
{
    nlohmann::json j;
    j["command"] = command;
    j["config"] = config_path;
    j["seed"] = seed;
    j["version"] = version;
    j["tol_scale"] = tol_scale;
    j["outputs"] = outputs;
    j["wall_time_s"] = wall_time_s;
    j["manifest_hash"] = hash();
    return j.dump(2);
}

void write_manifest(const RunManifest& m, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << m.to_json() << "\n";
}

std::string residual_report_json(const ResidualReport& rep,
                                 const std::string& manifest_hash)
{
    nlohmann::json j;
    j["manifest"] = manifest_hash;
    for (const auto& [key, e] : rep.entries) {
        j["residuals"][key] = {{"max", e.max_abs},
                               {"where", e.where},
                               {"relative", e.relative()}};
    }
    return j.dump(2);
}

} // namespace dgeo
