#ifndef QANALOGY_SERVICE_REPLAY_HPP
#define QANALOGY_SERVICE_REPLAY_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qanalogy/lessons/engine.hpp"
#include "qanalogy/service/wire.hpp"

namespace qanalogy::service {

/// A lesson plus the timed input to feed it. On disk:
///
///   {"lesson": "Measurement",
///    "events": [{"type": "ObjectDetected", "payload": {...}},
///               {"type": "Tick", "payload": {"dt": 0.1}, "repeat": 20}]}
struct ReplayScript {
    lessons::LessonId lesson = lessons::LessonId::Superposition;
    std::vector<lessons::InputEvent> events;  // repeats expanded
};

class ReplayError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Throws ReplayError naming the offending event.
ReplayScript parse_replay_script(std::string_view json_text);
ReplayScript load_replay_script(const std::filesystem::path& path);

/// Runs the script headlessly. Output messages are numbered 1, 2, ... exactly
/// as a live session numbers them.
std::vector<WireMessage> run_replay(const ReplayScript& script, std::uint64_t seed,
                                    const lessons::LessonEngine& engine = lessons::LessonEngine());

/// transcript_line per message, newline-terminated.
std::string render_transcript(const std::vector<WireMessage>& messages);

}  // namespace qanalogy::service

#endif  // QANALOGY_SERVICE_REPLAY_HPP
