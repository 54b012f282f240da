#ifndef QANALOGY_LESSONS_SCRIPT_HPP
#define QANALOGY_LESSONS_SCRIPT_HPP

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qanalogy/lessons/events.hpp"

namespace qanalogy::lessons {

/// An object the learner must put in a zone before the step completes.
struct Placement {
    ObjectKind kind = ObjectKind::Coin;
    std::string zone;
    std::string narration;  // emitted when this placement lands, if any

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct StepSpec {
    std::string name;
    std::string narration;  // emitted on entering the step
    std::vector<Placement> awaits;

    friend bool operator==(const StepSpec&, const StepSpec&) = default;
};

/// Tunables. Decoherence uses speed(t) = decay_omega0 * exp(-t / decay_tau)
/// and halts once speed drops below decay_stop_speed.
struct LessonParams {
    double rotation_speed = 10.0;
    double decay_omega0 = 10.0;
    double decay_tau = 3.0;
    double decay_stop_speed = 0.5;
    // Exposed for the tunneling animation; the shipped lesson always passes.
    double tunnel_transmission = 1.0;

    friend bool operator==(const LessonParams&, const LessonParams&) = default;
};

struct LessonScript {
    LessonId id = LessonId::Superposition;
    std::string title;
    std::string concept_name;
    LessonParams params;
    std::vector<StepSpec> steps;

    friend bool operator==(const LessonScript&, const LessonScript&) = default;
};

/// Step names the engine drives for each lesson, in order.
const std::vector<std::string_view>& expected_steps(LessonId id);

class ScriptError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The nine lesson scripts, validated against the engine's step layout.
class LessonLibrary {
  public:
    static LessonLibrary parse(std::string_view json_text);
    static LessonLibrary load(const std::filesystem::path& path);
    /// data/lessons.json, compiled in.
    static const LessonLibrary& shipped();

    const LessonScript& script(LessonId id) const { return scripts_.at(id); }
    const std::map<LessonId, LessonScript>& scripts() const { return scripts_; }

  private:
    std::map<LessonId, LessonScript> scripts_;
};

}  // namespace qanalogy::lessons

#endif  // QANALOGY_LESSONS_SCRIPT_HPP
