#ifndef QANALOGY_SERVICE_RESULT_STORE_HPP
#define QANALOGY_SERVICE_RESULT_STORE_HPP

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qanalogy/lessons/quiz.hpp"
#include "qanalogy/service/wire.hpp"

namespace qanalogy::service {

enum class Direction { Inbound, Outbound };

struct TranscriptEntry {
    Direction direction = Direction::Inbound;
    WireMessage message;

    friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct SessionRecord {
    std::string session_id;
    lessons::LessonId lesson = lessons::LessonId::Superposition;
    std::uint64_t seed = 0;
    std::string created_at;  // ISO 8601, UTC
    std::vector<TranscriptEntry> transcript;
    std::optional<lessons::QuizScore> quiz_score;

    friend bool operator==(const SessionRecord&, const SessionRecord&) = default;
};

nlohmann::json to_json(const SessionRecord& r);
SessionRecord record_from_json(const nlohmann::json& j);

class StoreError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Append-only line-delimited records, one file per UTC day
/// (sessions-YYYY-MM-DD.jsonl). A session may be appended more than once as
/// it progresses; load() keeps the latest line per session id.
class ResultStore {
  public:
    /// Creates the directory if needed. Throws StoreError if it cannot.
    explicit ResultStore(std::filesystem::path dir);

    /// Throws StoreError on any I/O failure.
    void append(const SessionRecord& record);
    std::vector<SessionRecord> load() const;
    std::optional<SessionRecord> find(const std::string& session_id) const;

    const std::filesystem::path& directory() const { return dir_; }

  private:
    std::filesystem::path dir_;
    mutable std::mutex mutex_;
};

}  // namespace qanalogy::service

#endif  // QANALOGY_SERVICE_RESULT_STORE_HPP
