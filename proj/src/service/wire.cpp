#include "qanalogy/service/wire.hpp"

namespace qanalogy::service {

using nlohmann::json;

WireMessage parse_wire(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw WireError("malformed", "message is not valid JSON");
    if (!doc.is_object()) throw WireError("malformed", "message must be a JSON object");
    if (!doc.contains("type") || !doc["type"].is_string()) throw WireError("malformed", "missing string 'type'");

    WireMessage m;
    m.type = doc["type"].get<std::string>();
    if (doc.contains("session_id") && !doc["session_id"].is_null()) {
        if (!doc["session_id"].is_string()) throw WireError("malformed", "'session_id' must be a string");
        m.session_id = doc["session_id"].get<std::string>();
    }
    if (doc.contains("seq") && !doc["seq"].is_null()) {
        const auto& seq = doc["seq"];
        const bool non_negative = seq.is_number_unsigned() || (seq.is_number_integer() && seq.get<std::int64_t>() >= 0);
        if (!non_negative) throw WireError("malformed", "'seq' must be a non-negative integer");
        m.seq = seq.get<std::uint64_t>();
    }
    if (doc.contains("payload") && !doc["payload"].is_null()) {
        if (!doc["payload"].is_object()) throw WireError("malformed", "'payload' must be an object");
        m.payload = std::move(doc["payload"]);
    }
    return m;
}

json to_json(const WireMessage& m) {
    json j = {{"type", m.type}, {"payload", m.payload}};
    if (!m.session_id.empty()) j["session_id"] = m.session_id;
    if (m.seq) j["seq"] = *m.seq;
    return j;
}

std::string to_text(const WireMessage& m) { return to_json(m).dump(); }

std::string transcript_line(const WireMessage& m) {
    json j = {{"type", m.type}, {"payload", m.payload}};
    if (m.seq) j["seq"] = *m.seq;
    return j.dump();
}

WireMessage error_message(std::string session_id, std::string code, std::string message,
                          std::optional<std::uint64_t> in_reply_to) {
    WireMessage m;
    m.type = kError;
    m.session_id = std::move(session_id);
    m.payload = {{"code", std::move(code)}, {"message", std::move(message)}};
    if (in_reply_to) m.payload["in_reply_to"] = *in_reply_to;
    return m;
}

json lesson_list_json(const lessons::LessonLibrary& library) {
    json out = json::array();
    for (const auto& [id, script] : library.scripts()) {
        json steps = json::array();
        for (const auto& step : script.steps) steps.push_back(step.name);
        out.push_back({{"id", lessons::to_string(id)},
                       {"title", script.title},
                       {"concept", script.concept_name},
                       {"steps", std::move(steps)}});
    }
    return out;
}

namespace {

json properties_json(const analogy::ObjectProperties& p) {
    return {{"num_objects", p.num_objects},
            {"rotation", p.rotation},
            {"translation", p.translation},
            {"continuity", analogy::to_string(p.continuity)}};
}

}  // namespace

json framework_json() {
    json rows = json::array();
    for (const auto& row : analogy::framework_table()) {
        const auto& c = row.characterization;
        rows.push_back({{"concept", analogy::to_string(row.subject)},
                        {"num_qubits", c.num_qubits},
                        {"duality", analogy::to_string(c.duality)},
                        {"type", analogy::to_string(c.concept_type)},
                        {"probability", analogy::to_string(c.probability)},
                        {"properties", properties_json(row.properties)}});
    }
    return rows;
}

json validation_json(const analogy::Concept& qc, const analogy::DailyObject& object,
                     const analogy::ValidationReport& report) {
    json dims = json::array();
    for (const auto& d : report.per_dimension) {
        dims.push_back({{"dimension", d.dimension},
                        {"required", d.required},
                        {"offered", d.offered},
                        {"satisfied", d.satisfied}});
    }
    return {{"concept", analogy::to_string(qc)},
            {"object", object.id},
            {"valid", report.valid},
            {"per_dimension", std::move(dims)}};
}

json quiz_score_json(const lessons::QuizScore& score) {
    return {{"score", score.score}, {"total", score.total}, {"correct", score.correct}};
}

lessons::QuizScore quiz_score_from_json(const json& j) {
    lessons::QuizScore s;
    s.score = j.at("score").get<int>();
    s.total = j.at("total").get<int>();
    s.correct = j.at("correct").get<std::vector<bool>>();
    return s;
}

}  // namespace qanalogy::service
