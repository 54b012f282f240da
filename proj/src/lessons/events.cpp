#include "qanalogy/lessons/events.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qanalogy::lessons {

namespace {

using nlohmann::json;

template <typename Enum, std::size_t N>
using NameTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr NameTable<LessonId, 9> kLessonNames{{
    {LessonId::Superposition, "Superposition"},
    {LessonId::Measurement, "Measurement"},
    {LessonId::Decoherence, "Decoherence"},
    {LessonId::Tunneling, "Tunneling"},
    {LessonId::Teleportation, "Teleportation"},
    {LessonId::Entanglement, "Entanglement"},
    {LessonId::GateIdentity, "GateIdentity"},
    {LessonId::GatePauliX, "GatePauliX"},
    {LessonId::GateHadamard, "GateHadamard"},
}};

constexpr NameTable<GestureKind, 2> kGestureNames{{{GestureKind::Fist, "Fist"}, {GestureKind::ThumbsUp, "ThumbsUp"}}};

constexpr NameTable<ObjectKind, 5> kObjectNames{{
    {ObjectKind::Coin, "Coin"},
    {ObjectKind::PaperCutter, "PaperCutter"},
    {ObjectKind::CubeI, "CubeI"},
    {ObjectKind::CubeX, "CubeX"},
    {ObjectKind::CubeH, "CubeH"},
}};

constexpr NameTable<Face, 2> kFaceNames{{{Face::Head, "Head"}, {Face::Tail, "Tail"}}};

constexpr NameTable<AnimationKind, 4> kAnimationNames{{
    {AnimationKind::TunnelThroughBarrier, "TunnelThroughBarrier"},
    {AnimationKind::TeleportTransfer, "TeleportTransfer"},
    {AnimationKind::DecoherenceSlowdown, "DecoherenceSlowdown"},
    {AnimationKind::EnvironmentInteraction, "EnvironmentInteraction"},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(const NameTable<Enum, N>& table, Enum value) {
    for (const auto& [e, name] : table) {
        if (e == value) return name;
    }
    return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> parse_name(const NameTable<Enum, N>& table, std::string_view name) {
    for (const auto& [e, n] : table) {
        if (n == name) return e;
    }
    return std::nullopt;
}

constexpr std::array<std::string_view, 5> kInputTags = {"Gesture", "ObjectDetected", "SliderMoved", "MenuSelect",
                                                         "Tick"};
constexpr std::array<std::string_view, 8> kOutputTags = {"StartRotation", "StopRotation", "PanelUpdate",
                                                          "ShowMath",      "Animate",      "Narration",
                                                          "ReturnToMenu",  "VirtualCutterOutput"};

[[noreturn]] void bad_payload(std::string_view type, const std::string& why) {
    throw EventFormatError("invalid_payload", std::string(type) + ": " + why);
}

const json& field(const json& payload, std::string_view type, const char* name) {
    if (!payload.is_object() || !payload.contains(name)) bad_payload(type, std::string("missing '") + name + "'");
    return payload.at(name);
}

double number_field(const json& payload, std::string_view type, const char* name) {
    const auto& v = field(payload, type, name);
    if (!v.is_number()) bad_payload(type, std::string("'") + name + "' must be a number");
    return v.get<double>();
}

std::string string_field(const json& payload, std::string_view type, const char* name) {
    const auto& v = field(payload, type, name);
    if (!v.is_string()) bad_payload(type, std::string("'") + name + "' must be a string");
    return v.get<std::string>();
}

template <typename Enum, std::size_t N>
Enum enum_field(const json& payload, std::string_view type, const char* name, const NameTable<Enum, N>& table,
                const char* code = "invalid_payload") {
    const auto text = string_field(payload, type, name);
    auto value = parse_name(table, text);
    if (!value) throw EventFormatError(code, std::string(type) + ": unknown " + name + " '" + text + "'");
    return *value;
}

std::optional<double> optional_number(const json& payload, std::string_view type, const char* name) {
    if (!payload.contains(name) || payload.at(name).is_null()) return std::nullopt;
    return number_field(payload, type, name);
}

}  // namespace

std::string_view to_string(LessonId id) { return name_of(kLessonNames, id); }
std::optional<LessonId> parse_lesson_id(std::string_view name) { return parse_name(kLessonNames, name); }
std::string_view to_string(GestureKind k) { return name_of(kGestureNames, k); }
std::string_view to_string(ObjectKind k) { return name_of(kObjectNames, k); }
std::optional<ObjectKind> parse_object_kind(std::string_view name) { return parse_name(kObjectNames, name); }
std::string_view to_string(Face f) { return name_of(kFaceNames, f); }
std::string_view to_string(AnimationKind k) { return name_of(kAnimationNames, k); }

std::optional<double> accept_slider(double s) {
    if (!std::isfinite(s) || s < -kSliderSlack || s > 1.0 + kSliderSlack) return std::nullopt;
    return std::clamp(s, 0.0, 1.0);
}

std::optional<std::string> check_event(const InputEvent& ev) {
    if (const auto* moved = std::get_if<SliderMoved>(&ev)) {
        if (!accept_slider(moved->s)) return "invalid_slider";
    } else if (const auto* seen = std::get_if<ObjectDetected>(&ev)) {
        if ((seen->kind == ObjectKind::PaperCutter) != seen->slider.has_value()) return "invalid_payload";
        if (seen->slider && !accept_slider(*seen->slider)) return "invalid_slider";
        if (seen->confidence && !(*seen->confidence >= 0.0 && *seen->confidence <= 1.0)) return "invalid_payload";
    } else if (const auto* tick = std::get_if<Tick>(&ev)) {
        if (!(tick->dt >= 0.0) || !std::isfinite(tick->dt)) return "invalid_payload";
    }
    return std::nullopt;
}

std::string_view type_tag(const InputEvent& ev) { return kInputTags[ev.index()]; }
std::string_view type_tag(const OutputEvent& ev) { return kOutputTags[ev.index()]; }

bool is_input_type(std::string_view tag) {
    return std::find(kInputTags.begin(), kInputTags.end(), tag) != kInputTags.end();
}

bool is_output_type(std::string_view tag) {
    return std::find(kOutputTags.begin(), kOutputTags.end(), tag) != kOutputTags.end();
}

json to_payload(const InputEvent& ev) {
    return std::visit(
        [](const auto& e) -> json {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Gesture>) {
                return {{"kind", to_string(e.kind)}};
            } else if constexpr (std::is_same_v<T, ObjectDetected>) {
                json j{{"kind", to_string(e.kind)}, {"zone", e.zone}};
                if (e.slider) j["slider"] = *e.slider;
                if (e.confidence) j["confidence"] = *e.confidence;
                return j;
            } else if constexpr (std::is_same_v<T, SliderMoved>) {
                return {{"s", e.s}};
            } else if constexpr (std::is_same_v<T, MenuSelect>) {
                return {{"lesson", to_string(e.lesson)}};
            } else {
                return {{"dt", e.dt}};
            }
        },
        ev);
}

json to_payload(const OutputEvent& ev) {
    return std::visit(
        [](const auto& e) -> json {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, StartRotation>) {
                return {{"object", e.object}, {"speed", e.speed}};
            } else if constexpr (std::is_same_v<T, StopRotation>) {
                return {{"object", e.object}, {"face", to_string(e.face)}};
            } else if constexpr (std::is_same_v<T, PanelUpdate>) {
                return {{"panel", e.panel}, {"labels", e.labels}, {"probabilities", e.probabilities}};
            } else if constexpr (std::is_same_v<T, ShowMath>) {
                return {{"expression", e.expression}};
            } else if constexpr (std::is_same_v<T, Animate>) {
                json j{{"kind", to_string(e.kind)}, {"object", e.object}, {"params", json::object()}};
                if (!e.target.empty()) j["target"] = e.target;
                for (const auto& [k, v] : e.params) j["params"][k] = v;
                return j;
            } else if constexpr (std::is_same_v<T, Narration>) {
                return {{"text_id", e.text_id}};
            } else if constexpr (std::is_same_v<T, ReturnToMenu>) {
                return json::object();
            } else {
                return {{"s_out", e.s_out}};
            }
        },
        ev);
}

InputEvent input_from_payload(std::string_view type, const json& payload) {
    if (!payload.is_object()) bad_payload(type, "payload must be an object");
    if (type == "Gesture") {
        return Gesture{enum_field(payload, type, "kind", kGestureNames)};
    }
    if (type == "ObjectDetected") {
        ObjectDetected d;
        d.kind = enum_field(payload, type, "kind", kObjectNames);
        d.zone = string_field(payload, type, "zone");
        d.slider = optional_number(payload, type, "slider");
        d.confidence = optional_number(payload, type, "confidence");
        return d;
    }
    if (type == "SliderMoved") {
        return SliderMoved{number_field(payload, type, "s")};
    }
    if (type == "MenuSelect") {
        return MenuSelect{enum_field(payload, type, "lesson", kLessonNames, "unknown_lesson")};
    }
    if (type == "Tick") {
        return Tick{number_field(payload, type, "dt")};
    }
    throw EventFormatError("unknown_type", "unknown input event type '" + std::string(type) + "'");
}

OutputEvent output_from_payload(std::string_view type, const json& payload) {
    if (!payload.is_object()) bad_payload(type, "payload must be an object");
    try {
        if (type == "StartRotation") {
            return StartRotation{string_field(payload, type, "object"), number_field(payload, type, "speed")};
        }
        if (type == "StopRotation") {
            return StopRotation{string_field(payload, type, "object"), enum_field(payload, type, "face", kFaceNames)};
        }
        if (type == "PanelUpdate") {
            return PanelUpdate{string_field(payload, type, "panel"),
                               field(payload, type, "labels").get<std::vector<std::string>>(),
                               field(payload, type, "probabilities").get<std::vector<double>>()};
        }
        if (type == "ShowMath") {
            return ShowMath{string_field(payload, type, "expression")};
        }
        if (type == "Animate") {
            Animate a;
            a.kind = enum_field(payload, type, "kind", kAnimationNames);
            a.object = string_field(payload, type, "object");
            a.target = payload.value("target", std::string{});
            a.params = payload.value("params", json::object()).get<std::map<std::string, double>>();
            return a;
        }
        if (type == "Narration") {
            return Narration{string_field(payload, type, "text_id")};
        }
        if (type == "ReturnToMenu") {
            return ReturnToMenu{};
        }
        if (type == "VirtualCutterOutput") {
            return VirtualCutterOutput{number_field(payload, type, "s_out")};
        }
    } catch (const json::exception& e) {
        bad_payload(type, e.what());
    }
    throw EventFormatError("unknown_type", "unknown output event type '" + std::string(type) + "'");
}

}  // namespace qanalogy::lessons
