#ifndef QANALOGY_LESSONS_EVENTS_HPP
#define QANALOGY_LESSONS_EVENTS_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qanalogy::lessons {

enum class LessonId {
    Superposition,
    Measurement,
    Decoherence,
    Tunneling,
    Teleportation,
    Entanglement,
    GateIdentity,
    GatePauliX,
    GateHadamard,
};

inline constexpr std::array<LessonId, 9> kAllLessons = {
    LessonId::Superposition, LessonId::Measurement,  LessonId::Decoherence,
    LessonId::Tunneling,     LessonId::Teleportation, LessonId::Entanglement,
    LessonId::GateIdentity,  LessonId::GatePauliX,    LessonId::GateHadamard,
};

std::string_view to_string(LessonId id);
std::optional<LessonId> parse_lesson_id(std::string_view name);

// ---- learner input ---------------------------------------------------------

enum class GestureKind { Fist, ThumbsUp };
enum class ObjectKind { Coin, PaperCutter, CubeI, CubeX, CubeH };

std::string_view to_string(GestureKind k);
std::string_view to_string(ObjectKind k);
std::optional<ObjectKind> parse_object_kind(std::string_view name);

struct Gesture {
    GestureKind kind = GestureKind::Fist;
    friend bool operator==(const Gesture&, const Gesture&) = default;
};

/// A perceived object. slider is present exactly for PaperCutter;
/// confidence is reserved for detector adapters and ignored by lessons.
struct ObjectDetected {
    ObjectKind kind = ObjectKind::Coin;
    std::string zone;
    std::optional<double> slider;
    std::optional<double> confidence;
    friend bool operator==(const ObjectDetected&, const ObjectDetected&) = default;
};

struct SliderMoved {
    double s = 0.0;
    friend bool operator==(const SliderMoved&, const SliderMoved&) = default;
};

struct MenuSelect {
    LessonId lesson = LessonId::Superposition;
    friend bool operator==(const MenuSelect&, const MenuSelect&) = default;
};

struct Tick {
    double dt = 0.0;
    friend bool operator==(const Tick&, const Tick&) = default;
};

using InputEvent = std::variant<Gesture, ObjectDetected, SliderMoved, MenuSelect, Tick>;

// ---- system reactions ------------------------------------------------------

enum class Face { Head, Tail };
enum class AnimationKind { TunnelThroughBarrier, TeleportTransfer, DecoherenceSlowdown, EnvironmentInteraction };

std::string_view to_string(Face f);
std::string_view to_string(AnimationKind k);

struct StartRotation {
    std::string object;
    double speed = 0.0;  // rad/s
    friend bool operator==(const StartRotation&, const StartRotation&) = default;
};

struct StopRotation {
    std::string object;
    Face face = Face::Head;
    friend bool operator==(const StopRotation&, const StopRotation&) = default;
};

struct PanelUpdate {
    std::string panel;
    std::vector<std::string> labels;
    std::vector<double> probabilities;
    friend bool operator==(const PanelUpdate&, const PanelUpdate&) = default;
};

struct ShowMath {
    std::string expression;
    friend bool operator==(const ShowMath&, const ShowMath&) = default;
};

struct Animate {
    AnimationKind kind = AnimationKind::EnvironmentInteraction;
    std::string object;
    std::string target;
    std::map<std::string, double> params;
    friend bool operator==(const Animate&, const Animate&) = default;
};

struct Narration {
    std::string text_id;
    friend bool operator==(const Narration&, const Narration&) = default;
};

struct ReturnToMenu {
    friend bool operator==(const ReturnToMenu&, const ReturnToMenu&) = default;
};

struct VirtualCutterOutput {
    double s_out = 0.0;
    friend bool operator==(const VirtualCutterOutput&, const VirtualCutterOutput&) = default;
};

using OutputEvent = std::variant<StartRotation, StopRotation, PanelUpdate, ShowMath, Animate, Narration, ReturnToMenu,
                                 VirtualCutterOutput>;

// ---- validation ------------------------------------------------------------

inline constexpr double kSliderSlack = 1e-9;

/// Slider readings within kSliderSlack of [0, 1] are clamped into range;
/// anything further out, or non-finite, is rejected.
std::optional<double> accept_slider(double s);

/// Returns an error code ("invalid_slider", "invalid_payload") when the
/// event breaks its own invariants, nullopt when it is well-formed.
std::optional<std::string> check_event(const InputEvent& ev);

// ---- JSON payloads ---------------------------------------------------------

/// Malformed wire payload. code is the normative error code.
class EventFormatError : public std::runtime_error {
  public:
    EventFormatError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

std::string_view type_tag(const InputEvent& ev);
std::string_view type_tag(const OutputEvent& ev);
bool is_input_type(std::string_view tag);
bool is_output_type(std::string_view tag);

nlohmann::json to_payload(const InputEvent& ev);
nlohmann::json to_payload(const OutputEvent& ev);

/// Decodes a payload for the given type tag. Throws EventFormatError.
InputEvent input_from_payload(std::string_view type, const nlohmann::json& payload);
OutputEvent output_from_payload(std::string_view type, const nlohmann::json& payload);

}  // namespace qanalogy::lessons

#endif  // QANALOGY_LESSONS_EVENTS_HPP
