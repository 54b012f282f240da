#include "qanalogy/service/result_store.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>

namespace qanalogy::service {

using nlohmann::json;

json to_json(const SessionRecord& r) {
    json transcript = json::array();
    for (const auto& e : r.transcript) {
        transcript.push_back({{"direction", e.direction == Direction::Inbound ? "in" : "out"},
                              {"message", to_json(e.message)}});
    }
    json j = {{"session_id", r.session_id},
              {"lesson", lessons::to_string(r.lesson)},
              {"seed", r.seed},
              {"created_at", r.created_at},
              {"transcript", std::move(transcript)}};
    j["quiz_score"] = r.quiz_score ? quiz_score_json(*r.quiz_score) : json(nullptr);
    return j;
}

SessionRecord record_from_json(const json& j) {
    SessionRecord r;
    r.session_id = j.at("session_id").get<std::string>();
    const auto lesson = lessons::parse_lesson_id(j.at("lesson").get<std::string>());
    if (!lesson) throw StoreError("stored record has an unknown lesson");
    r.lesson = *lesson;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.created_at = j.at("created_at").get<std::string>();
    for (const auto& e : j.at("transcript")) {
        const auto dir = e.at("direction").get<std::string>();
        r.transcript.push_back({dir == "in" ? Direction::Inbound : Direction::Outbound,
                                parse_wire(e.at("message").dump())});
    }
    if (j.contains("quiz_score") && !j["quiz_score"].is_null()) r.quiz_score = quiz_score_from_json(j["quiz_score"]);
    return r;
}

ResultStore::ResultStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_)) {
        throw StoreError("cannot use result store directory " + dir_.string() + ": " + ec.message());
    }
}

namespace {

std::string today_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[16];
    std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
    return buf;
}

}  // namespace

void ResultStore::append(const SessionRecord& record) {
    const std::string line = to_json(record).dump() + "\n";
    std::lock_guard lock(mutex_);
    const auto path = dir_ / ("sessions-" + today_utc() + ".jsonl");
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw StoreError("cannot open " + path.string() + " for append");
    out << line;
    out.flush();
    if (!out) throw StoreError("write to " + path.string() + " failed");
}

std::vector<SessionRecord> ResultStore::load() const {
    std::lock_guard lock(mutex_);
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
        const auto name = entry.path().filename().string();
        if (name.starts_with("sessions-") && name.ends_with(".jsonl")) files.push_back(entry.path());
    }
    if (ec) throw StoreError("cannot list " + dir_.string() + ": " + ec.message());
    std::sort(files.begin(), files.end());

    std::vector<SessionRecord> records;
    std::map<std::string, std::size_t> index;
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw StoreError("cannot read " + path.string());
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            SessionRecord r;
            try {
                r = record_from_json(json::parse(line));
            } catch (const std::exception& e) {
                throw StoreError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
            }
            if (auto it = index.find(r.session_id); it != index.end()) {
                records[it->second] = std::move(r);
            } else {
                index.emplace(r.session_id, records.size());
                records.push_back(std::move(r));
            }
        }
    }
    return records;
}

std::optional<SessionRecord> ResultStore::find(const std::string& session_id) const {
    for (auto& r : load()) {
        if (r.session_id == session_id) return std::move(r);
    }
    return std::nullopt;
}

}  // namespace qanalogy::service
