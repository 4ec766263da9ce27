#include "exosynth/config.hpp"

#include "exosynth/errors.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace exosynth {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        // primitive lengths (mm)
        "L_AB", "L_BC", "L_CD", "L_CI", "L_ED", "L_EF", "L_EJ", "L_KB", "L_KH",
        "L_GH", "L_GF",
        // frame constants (mm / deg)
        "l_act", "l_KN", "q_KN", "l_LK", "q_LK", "l_ML",
        // composite signs and loop-4 compatibility flag
        "s_BD", "s_BH", "s_FD", "db_angle_corrected",
        // extension warm-start seed (mm / deg)
        "seed_lx", "seed_c1", "seed_c2", "seed_qB", "seed_qD", "seed_qG",
        "seed_qK", "seed_qN",
        // anthropometry (mm)
        "anthro_l_ML", "anthro_l_p2", "anthro_c1_max", "anthro_c2_max"};
    return keys;
}

}  // namespace

double ConfigFile::get(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) throw ConfigError("config: missing key '" + key + "'");
    return it->second;
}

double ConfigFile::get_or(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

ConfigFile parse_config(const std::string& text) {
    ConfigFile cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected name = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (known_keys().count(key) == 0) {
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" +
                              key + "'");
        }
        double v = 0.0;
        const auto res = std::from_chars(val.data(), val.data() + val.size(), v);
        if (res.ec != std::errc() || res.ptr != val.data() + val.size()) {
            throw ConfigError("config line " + std::to_string(lineno) + ": bad value '" +
                              val + "'");
        }
        if (!cfg.values.emplace(key, v).second) {
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" +
                              key + "'");
        }
    }
    return cfg;
}

ConfigFile load_config(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str());
}

Geometry geometry_from_config(const ConfigFile& cfg) {
    Geometry g;
    g.L_AB = cfg.get("L_AB");
    g.L_BC = cfg.get("L_BC");
    g.L_CD = cfg.get("L_CD");
    g.L_CI = cfg.get("L_CI");
    g.L_ED = cfg.get("L_ED");
    g.L_EF = cfg.get("L_EF");
    g.L_EJ = cfg.get("L_EJ");
    g.L_KB = cfg.get("L_KB");
    g.L_KH = cfg.get("L_KH");
    g.L_GH = cfg.get("L_GH");
    g.L_GF = cfg.get("L_GF");
    g.l_act = cfg.get("l_act");
    g.l_KN = cfg.get("l_KN");
    g.q_KN = deg_to_rad(cfg.get("q_KN"));
    g.l_LK = cfg.get("l_LK");
    g.q_LK = deg_to_rad(cfg.get("q_LK"));
    g.l_ML = cfg.get("l_ML");
    g.s_BD = static_cast<int>(cfg.get_or("s_BD", +1));
    g.s_BH = static_cast<int>(cfg.get_or("s_BH", -1));
    g.s_FD = static_cast<int>(cfg.get_or("s_FD", +1));
    g.db_angle = cfg.get_or("db_angle_corrected", 1.0) != 0.0 ? DbAngle::corrected_qB
                                                              : DbAngle::as_printed_qK;
    g.extension_seed.l_x = cfg.get("seed_lx");
    g.extension_seed.c_1 = cfg.get("seed_c1");
    g.extension_seed.c_2 = cfg.get("seed_c2");
    g.extension_seed.q_B = deg_to_rad(cfg.get("seed_qB"));
    g.extension_seed.q_D = deg_to_rad(cfg.get("seed_qD"));
    g.extension_seed.q_G = deg_to_rad(cfg.get("seed_qG"));
    g.extension_seed.q_K = deg_to_rad(cfg.get("seed_qK"));
    g.extension_seed.q_N = deg_to_rad(cfg.get("seed_qN"));
    g.validate();
    return g;
}

Anthropometry anthropometry_from_config(const ConfigFile& cfg) {
    Anthropometry a;
    a.l_ML = cfg.get("anthro_l_ML");
    a.l_p2 = cfg.get("anthro_l_p2");
    a.c1_max = cfg.get("anthro_c1_max");
    a.c2_max = cfg.get("anthro_c2_max");
    a.validate();
    return a;
}

namespace {

void emit(std::ostringstream& out, const char* key, double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    out << key << " = " << std::string(buf, res.ptr) << "\n";
}

}  // namespace

std::string geometry_to_config(const Geometry& g) {
    std::ostringstream out;
    emit(out, "L_AB", g.L_AB);
    emit(out, "L_BC", g.L_BC);
    emit(out, "L_CD", g.L_CD);
    emit(out, "L_CI", g.L_CI);
    emit(out, "L_ED", g.L_ED);
    emit(out, "L_EF", g.L_EF);
    emit(out, "L_EJ", g.L_EJ);
    emit(out, "L_KB", g.L_KB);
    emit(out, "L_KH", g.L_KH);
    emit(out, "L_GH", g.L_GH);
    emit(out, "L_GF", g.L_GF);
    emit(out, "l_act", g.l_act);
    emit(out, "l_KN", g.l_KN);
    emit(out, "q_KN", rad_to_deg(g.q_KN));
    emit(out, "l_LK", g.l_LK);
    emit(out, "q_LK", rad_to_deg(g.q_LK));
    emit(out, "l_ML", g.l_ML);
    emit(out, "s_BD", g.s_BD);
    emit(out, "s_BH", g.s_BH);
    emit(out, "s_FD", g.s_FD);
    emit(out, "db_angle_corrected", g.db_angle == DbAngle::corrected_qB ? 1 : 0);
    emit(out, "seed_lx", g.extension_seed.l_x);
    emit(out, "seed_c1", g.extension_seed.c_1);
    emit(out, "seed_c2", g.extension_seed.c_2);
    emit(out, "seed_qB", rad_to_deg(g.extension_seed.q_B));
    emit(out, "seed_qD", rad_to_deg(g.extension_seed.q_D));
    emit(out, "seed_qG", rad_to_deg(g.extension_seed.q_G));
    emit(out, "seed_qK", rad_to_deg(g.extension_seed.q_K));
    emit(out, "seed_qN", rad_to_deg(g.extension_seed.q_N));
    return out.str();
}

}  // namespace exosynth
