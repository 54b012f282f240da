#ifndef QANALOGY_LESSONS_ENGINE_HPP
#define QANALOGY_LESSONS_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qanalogy/lessons/events.hpp"
#include "qanalogy/lessons/script.hpp"
#include "qanalogy/qcore/random_source.hpp"
#include "qanalogy/qcore/state_vector.hpp"

namespace qanalogy::lessons {

struct ObjectMotion {
    double angle = 0.0;  // rad, kept in [0, 2pi)
    double speed = 0.0;  // rad/s

    friend bool operator==(const ObjectMotion&, const ObjectMotion&) = default;
};

/// Everything one learner's lesson needs between events. Plain value type:
/// handlers take a state and return the next one.
struct SessionState {
    LessonId lesson = LessonId::Superposition;
    std::size_t step = 0;
    bool in_menu = false;
    std::optional<qcore::StateVector> qubits;
    std::map<std::string, ObjectMotion> animation;
    qcore::RandomSource rng;
    std::optional<PanelUpdate> panel;
    double elapsed = 0.0;  // s, total ticked time

    std::vector<Placement> placed;   // satisfied placements of the current step
    std::optional<double> slider;    // gate lessons: last cutter reading
    double decay_time = 0.0;         // decoherence: time since the trigger

    friend bool operator==(const SessionState&, const SessionState&) = default;
};

struct Reaction {
    SessionState state;
    std::vector<OutputEvent> outputs;
};

/// Drives the nine lessons. Every quantum effect goes through qcore; the
/// engine only sequences steps, animation and panel output.
class LessonEngine {
  public:
    explicit LessonEngine(LessonLibrary library = LessonLibrary::shipped());

    SessionState start_lesson(LessonId id, std::uint64_t seed) const;

    /// Deterministic in (state, ev). Events the current step does not expect
    /// return the state unchanged with no outputs; malformed events return
    /// the state unchanged with a diagnostic Narration.
    Reaction handle_event(const SessionState& state, const InputEvent& ev) const;

    /// Advances animation time. Throws std::domain_error for negative dt.
    Reaction tick(const SessionState& state, double dt) const;

    const LessonLibrary& library() const { return library_; }
    const StepSpec& current_step(const SessionState& state) const;

  private:
    LessonLibrary library_;
};

/// Shorthands over an engine using the shipped scripts.
SessionState start_lesson(LessonId id, std::uint64_t seed);
Reaction handle_event(const SessionState& state, const InputEvent& ev);
Reaction tick(const SessionState& state, double dt);

/// Diagnostic narration ids.
inline constexpr std::string_view kInvalidSliderNarration = "diagnostic.invalid_slider";
inline constexpr std::string_view kInvalidEventNarration = "diagnostic.invalid_event";
inline constexpr std::string_view kCubeMismatchNarration = "diagnostic.cube_mismatch";

}  // namespace qanalogy::lessons

#endif  // QANALOGY_LESSONS_ENGINE_HPP
