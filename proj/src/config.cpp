#include "mppabs/config.h"

#include "mppabs/errors.h"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace mppabs {

using nlohmann::json;

namespace {

std::string where(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key))
            throw ConfigError("unknown field '" + where(path, key) + "'");
}

const json& require_object(const json& parent, const std::string& key, const std::string& path) {
    if (!parent.contains(key))
        throw ConfigError("missing field '" + where(path, key) + "'");
    const json& v = parent.at(key);
    if (!v.is_object())
        throw ConfigError("field '" + where(path, key) + "' must be an object");
    return v;
}

double read_number(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key))
        throw ConfigError("missing field '" + where(path, key) + "'");
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("field '" + where(path, key) + "' must be a number");
    return v.get<double>();
}

void read_optional(const json& obj, const std::string& key, const std::string& path, double& out) {
    if (obj.contains(key))
        out = read_number(obj, key, path);
}

MppSpec read_mpp(const json& obj, const std::string& path) {
    if (!obj.is_object())
        throw ConfigError("field '" + path + "' must be an object");
    reject_unknown(obj, path, {"t_h", "d_h", "sigma_h"});
    return {read_number(obj, "t_h", path), read_number(obj, "d_h", path), read_number(obj, "sigma_h", path)};
}

json write_mpp(const MppSpec& m) {
    return {{"t_h", m.t_h}, {"d_h", m.d_h}, {"sigma_h", m.sigma_h}};
}

StructureConfig read_structure(const json& s) {
    const std::string path = "structure";
    if (!s.contains("type") || !s.at("type").is_string())
        throw ConfigError("field 'structure.type' must be \"three_chamber\" or \"single_chamber\"");
    const std::string type = s.at("type").get<std::string>();

    if (type == "three_chamber") {
        std::set<std::string> allowed{"type", "mpps"};
        ThreeChamberStructure out;
        for (const auto& field : design_fields()) {
            allowed.emplace(field.name);
            out.design.*field.member = read_number(s, std::string(field.name), path);
        }
        reject_unknown(s, path, allowed);
        if (!s.contains("mpps") || !s.at("mpps").is_array() || s.at("mpps").size() != 3)
            throw ConfigError("field 'structure.mpps' must be an array of three MPP objects");
        for (std::size_t i = 0; i < 3; ++i)
            out.mpps[i] = read_mpp(s.at("mpps").at(i), "structure.mpps[" + std::to_string(i) + "]");
        return out;
    }
    if (type == "single_chamber") {
        reject_unknown(s, path, {"type", "d_m", "l_m", "d_e", "t_e", "mpp"});
        SingleChamberDesign out;
        out.d_m = read_number(s, "d_m", path);
        out.l_m = read_number(s, "l_m", path);
        out.d_e = read_number(s, "d_e", path);
        out.t_e = read_number(s, "t_e", path);
        if (!s.contains("mpp"))
            throw ConfigError("missing field 'structure.mpp'");
        out.mpp = read_mpp(s.at("mpp"), "structure.mpp");
        return out;
    }
    throw ConfigError("field 'structure.type' has unknown value \"" + type + "\"");
}

json write_structure(const StructureConfig& structure) {
    if (const auto* three = std::get_if<ThreeChamberStructure>(&structure)) {
        json s = json::object();
        s["type"] = "three_chamber";
        for (const auto& field : design_fields())
            s[std::string(field.name)] = three->design.*field.member;
        s["mpps"] = json::array({write_mpp(three->mpps[0]), write_mpp(three->mpps[1]), write_mpp(three->mpps[2])});
        return s;
    }
    const auto& single = std::get<SingleChamberDesign>(structure);
    return {{"type", "single_chamber"}, {"d_m", single.d_m}, {"l_m", single.l_m},
            {"d_e", single.d_e},        {"t_e", single.t_e}, {"mpp", write_mpp(single.mpp)}};
}

AnnealingSchedule read_schedule(const json& s) {
    const std::string path = "schedule";
    reject_unknown(s, path,
                   {"initial_temperature", "iterations_per_temperature", "cooling_rate",
                    "termination_temperature", "step_fraction", "seed", "cooling_reading"});
    AnnealingSchedule out;
    read_optional(s, "initial_temperature", path, out.initial_temperature);
    read_optional(s, "cooling_rate", path, out.cooling_rate);
    read_optional(s, "termination_temperature", path, out.termination_temperature);
    read_optional(s, "step_fraction", path, out.step_fraction);
    if (s.contains("iterations_per_temperature")) {
        if (!s.at("iterations_per_temperature").is_number_integer())
            throw ConfigError("field 'schedule.iterations_per_temperature' must be an integer");
        out.iterations_per_temperature = s.at("iterations_per_temperature").get<int>();
    }
    if (s.contains("seed")) {
        if (!s.at("seed").is_number_unsigned())
            throw ConfigError("field 'schedule.seed' must be a non-negative integer");
        out.seed = s.at("seed").get<std::uint64_t>();
    }
    if (s.contains("cooling_reading")) {
        const json& v = s.at("cooling_reading");
        if (v == "decrement")
            out.cooling = CoolingReading::decrement;
        else if (v == "multiplier")
            out.cooling = CoolingReading::multiplier;
        else
            throw ConfigError("field 'schedule.cooling_reading' must be \"decrement\" or \"multiplier\"");
    }
    return out;
}

json write_schedule(const AnnealingSchedule& s) {
    return {{"initial_temperature", s.initial_temperature},
            {"iterations_per_temperature", s.iterations_per_temperature},
            {"cooling_rate", s.cooling_rate},
            {"termination_temperature", s.termination_temperature},
            {"step_fraction", s.step_fraction},
            {"seed", s.seed},
            {"cooling_reading", s.cooling == CoolingReading::decrement ? "decrement" : "multiplier"}};
}

std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace

ElementChain build_chain(const StructureConfig& structure) {
    if (const auto* three = std::get_if<ThreeChamberStructure>(&structure))
        return build_chain(three->design, three->mpps);
    return build_single_chamber_chain(std::get<SingleChamberDesign>(structure));
}

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                          e.what());
    }
    if (!root.is_object())
        throw ConfigError("configuration must be a JSON object");
    reject_unknown(root, "", {"structure", "medium", "grid", "threshold", "schedule"});

    RunConfig cfg;
    try {
        cfg.structure = read_structure(require_object(root, "structure", ""));

        if (root.contains("medium")) {
            const json& m = require_object(root, "medium", "");
            reject_unknown(m, "medium", {"sound_speed", "density", "dynamic_viscosity", "temperature"});
            read_optional(m, "sound_speed", "medium", cfg.medium.sound_speed);
            read_optional(m, "density", "medium", cfg.medium.density);
            read_optional(m, "dynamic_viscosity", "medium", cfg.medium.dynamic_viscosity);
            read_optional(m, "temperature", "medium", cfg.medium.temperature);
        }
        if (root.contains("grid")) {
            const json& g = require_object(root, "grid", "");
            reject_unknown(g, "grid", {"f_min", "f_max", "step"});
            read_optional(g, "f_min", "grid", cfg.grid.f_min);
            read_optional(g, "f_max", "grid", cfg.grid.f_max);
            read_optional(g, "step", "grid", cfg.grid.step);
        }
        read_optional(root, "threshold", "", cfg.threshold);
        if (root.contains("schedule"))
            cfg.schedule = read_schedule(require_object(root, "schedule", ""));

        cfg.medium.validate();
        cfg.grid.validate();
        if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0))
            throw ValidationError("threshold", "must lie in (0, 1)");
        if (cfg.schedule)
            cfg.schedule->validate();
        build_chain(cfg.structure).validate();
    } catch (const ValidationError& e) {
        throw ConfigError(std::string("invalid field ") + e.what());
    } catch (const json::exception& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_config(text.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string serialize_config(const RunConfig& config) {
    json root = json::object();
    root["structure"] = write_structure(config.structure);
    root["medium"] = {{"sound_speed", config.medium.sound_speed},
                      {"density", config.medium.density},
                      {"dynamic_viscosity", config.medium.dynamic_viscosity},
                      {"temperature", config.medium.temperature}};
    root["grid"] = {{"f_min", config.grid.f_min}, {"f_max", config.grid.f_max}, {"step", config.grid.step}};
    root["threshold"] = config.threshold;
    if (config.schedule)
        root["schedule"] = write_schedule(*config.schedule);
    return root.dump(2) + "\n";
}

void save_config(const RunConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << serialize_config(config);
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace mppabs
