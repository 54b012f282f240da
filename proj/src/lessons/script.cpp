#include "qanalogy/lessons/script.hpp"

#include <fstream>
#include <sstream>

namespace qanalogy::embedded {
extern const std::string_view default_lessons;
}

namespace qanalogy::lessons {

namespace {

using nlohmann::json;

bool is_gate_lesson(LessonId id) {
    return id == LessonId::GateIdentity || id == LessonId::GatePauliX || id == LessonId::GateHadamard;
}

double param(const json& params, const char* name, double fallback, const std::string& where) {
    if (!params.contains(name)) return fallback;
    const auto& v = params.at(name);
    if (!v.is_number()) throw ScriptError(where + ": param '" + name + "' must be a number");
    return v.get<double>();
}

LessonParams parse_params(const json& params, const std::string& where) {
    if (!params.is_object()) throw ScriptError(where + ": params must be an object");
    LessonParams p;
    p.rotation_speed = param(params, "rotation_speed", p.rotation_speed, where);
    p.decay_omega0 = param(params, "decay_omega0", p.decay_omega0, where);
    p.decay_tau = param(params, "decay_tau", p.decay_tau, where);
    p.decay_stop_speed = param(params, "decay_stop_speed", p.decay_stop_speed, where);
    p.tunnel_transmission = param(params, "tunnel_transmission", p.tunnel_transmission, where);
    if (!(p.rotation_speed > 0) || !(p.decay_omega0 > 0) || !(p.decay_tau > 0) || !(p.decay_stop_speed > 0)) {
        throw ScriptError(where + ": speeds and time constants must be positive");
    }
    if (!(p.tunnel_transmission >= 0 && p.tunnel_transmission <= 1)) {
        throw ScriptError(where + ": tunnel_transmission must lie in [0, 1]");
    }
    return p;
}

StepSpec parse_step(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("name") || !j.at("name").is_string()) {
        throw ScriptError(where + ": every step needs a string 'name'");
    }
    StepSpec step;
    step.name = j.at("name").get<std::string>();
    step.narration = j.value("narration", std::string{});
    for (const auto& a : j.value("awaits", json::array())) {
        Placement p;
        const auto kind = parse_object_kind(a.value("kind", std::string{}));
        if (!kind) throw ScriptError(where + "/" + step.name + ": unknown object kind in awaits");
        p.kind = *kind;
        p.zone = a.value("zone", std::string{});
        if (p.zone.empty()) throw ScriptError(where + "/" + step.name + ": placement needs a zone");
        p.narration = a.value("narration", std::string{});
        step.awaits.push_back(std::move(p));
    }
    return step;
}

void check_layout(const LessonScript& s) {
    const auto where = std::string(to_string(s.id));
    const auto& names = expected_steps(s.id);
    if (s.steps.size() != names.size()) {
        throw ScriptError(where + ": expected " + std::to_string(names.size()) + " steps, found " +
                          std::to_string(s.steps.size()));
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (s.steps[i].name != names[i]) {
            throw ScriptError(where + ": step " + std::to_string(i) + " must be '" + std::string(names[i]) + "'");
        }
        if ((i == 0) == s.steps[i].awaits.empty()) {
            throw ScriptError(where + ": only the first step places objects, and it must place at least one");
        }
    }
    const auto& awaits = s.steps.front().awaits;
    if (is_gate_lesson(s.id)) {
        int cutters = 0;
        int cubes = 0;
        for (const auto& p : awaits) {
            cutters += p.kind == ObjectKind::PaperCutter;
            cubes += p.kind == ObjectKind::CubeI || p.kind == ObjectKind::CubeX || p.kind == ObjectKind::CubeH;
        }
        if (cutters != 1 || cubes != 1 || awaits.size() != 2) {
            throw ScriptError(where + ": gate lessons place exactly one paper cutter and one cube");
        }
    } else {
        for (const auto& p : awaits) {
            if (p.kind != ObjectKind::Coin) throw ScriptError(where + ": coin lessons only place coins");
        }
        const std::size_t coins = s.id == LessonId::Entanglement ? 2 : 1;
        if (awaits.size() != coins) {
            throw ScriptError(where + ": expected " + std::to_string(coins) + " coin placements");
        }
    }
}

}  // namespace

const std::vector<std::string_view>& expected_steps(LessonId id) {
    static const std::map<LessonId, std::vector<std::string_view>> layout = {
        {LessonId::Superposition, {"place_coin", "await_fist", "spinning"}},
        {LessonId::Measurement, {"place_coin", "await_superpose", "await_measure", "collapsed"}},
        {LessonId::Decoherence, {"place_coin", "await_fist", "decohering", "halted"}},
        {LessonId::Tunneling, {"place_coin", "await_fist", "tunneled"}},
        {LessonId::Teleportation, {"place_coin", "await_superpose", "await_teleport", "teleported"}},
        {LessonId::Entanglement, {"place_coins", "await_measure", "collapsed"}},
        {LessonId::GateIdentity, {"place_equipment", "adjusting"}},
        {LessonId::GatePauliX, {"place_equipment", "adjusting"}},
        {LessonId::GateHadamard, {"place_equipment", "adjusting"}},
    };
    return layout.at(id);
}

LessonLibrary LessonLibrary::parse(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScriptError(std::string("lesson scripts are not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("lessons") || !doc.at("lessons").is_array()) {
        throw ScriptError("lesson document must be an object with a 'lessons' array");
    }
    LessonLibrary lib;
    for (const auto& entry : doc.at("lessons")) {
        if (!entry.is_object()) throw ScriptError("lesson entries must be objects");
        const auto id_text = entry.value("id", std::string{});
        const auto id = parse_lesson_id(id_text);
        if (!id) throw ScriptError("unknown lesson id '" + id_text + "'");
        LessonScript s;
        s.id = *id;
        s.title = entry.value("title", id_text);
        s.concept_name = entry.value("concept", std::string{});
        s.params = parse_params(entry.value("params", json::object()), id_text);
        if (!entry.contains("steps") || !entry.at("steps").is_array()) {
            throw ScriptError(id_text + ": missing 'steps' array");
        }
        for (const auto& step : entry.at("steps")) s.steps.push_back(parse_step(step, id_text));
        check_layout(s);
        if (!lib.scripts_.emplace(s.id, std::move(s)).second) {
            throw ScriptError("lesson '" + id_text + "' defined twice");
        }
    }
    for (LessonId id : kAllLessons) {
        if (!lib.scripts_.count(id)) throw ScriptError("lesson '" + std::string(to_string(id)) + "' is missing");
    }
    return lib;
}

LessonLibrary LessonLibrary::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScriptError("cannot open lesson file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

const LessonLibrary& LessonLibrary::shipped() {
    static const LessonLibrary lib = parse(embedded::default_lessons);
    return lib;
}

}  // namespace qanalogy::lessons
