#include "qanalogy/service/replay.hpp"

#include <fstream>
#include <sstream>

namespace qanalogy::service {

using nlohmann::json;

ReplayScript parse_replay_script(std::string_view json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) throw ReplayError("script is not valid JSON");
    if (!doc.is_object() || !doc.contains("lesson") || !doc["lesson"].is_string()) {
        throw ReplayError("script needs a string 'lesson'");
    }
    const auto lesson = lessons::parse_lesson_id(doc["lesson"].get<std::string>());
    if (!lesson) throw ReplayError("unknown lesson '" + doc["lesson"].get<std::string>() + "'");
    if (!doc.contains("events") || !doc["events"].is_array()) throw ReplayError("script needs an 'events' array");

    ReplayScript script;
    script.lesson = *lesson;
    std::size_t index = 0;
    for (const auto& e : doc["events"]) {
        const std::string where = "event " + std::to_string(index++);
        if (!e.is_object() || !e.contains("type") || !e["type"].is_string()) {
            throw ReplayError(where + ": needs a string 'type'");
        }
        const auto type = e["type"].get<std::string>();
        lessons::InputEvent ev;
        try {
            ev = lessons::input_from_payload(type, e.value("payload", json::object()));
        } catch (const lessons::EventFormatError& err) {
            throw ReplayError(where + " (" + type + "): " + err.what());
        }
        if (auto problem = lessons::check_event(ev)) throw ReplayError(where + " (" + type + "): " + *problem);
        long repeat = 1;
        if (e.contains("repeat")) {
            if (!e["repeat"].is_number_integer() || e["repeat"].get<long>() < 1) {
                throw ReplayError(where + ": 'repeat' must be a positive integer");
            }
            repeat = e["repeat"].get<long>();
        }
        for (long i = 0; i < repeat; ++i) script.events.push_back(ev);
    }
    return script;
}

ReplayScript load_replay_script(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ReplayError("cannot open script " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_replay_script(text.str());
}

std::vector<WireMessage> run_replay(const ReplayScript& script, std::uint64_t seed,
                                    const lessons::LessonEngine& engine) {
    std::vector<WireMessage> out;
    auto state = engine.start_lesson(script.lesson, seed);
    for (const auto& ev : script.events) {
        auto reaction = engine.handle_event(state, ev);
        state = std::move(reaction.state);
        for (const auto& o : reaction.outputs) {
            WireMessage m;
            m.type = lessons::type_tag(o);
            m.seq = out.size() + 1;
            m.payload = lessons::to_payload(o);
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::string render_transcript(const std::vector<WireMessage>& messages) {
    std::string text;
    for (const auto& m : messages) {
        text += transcript_line(m);
        text += '\n';
    }
    return text;
}

}  // namespace qanalogy::service
