#ifndef QANALOGY_SERVICE_WIRE_HPP
#define QANALOGY_SERVICE_WIRE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qanalogy/analogy/catalog.hpp"
#include "qanalogy/lessons/quiz.hpp"
#include "qanalogy/lessons/script.hpp"

namespace qanalogy::service {

inline constexpr int kProtocolVersion = 1;

// Control verbs. Lesson events use the InputEvent / OutputEvent tags.
inline constexpr std::string_view kCreateSession = "CreateSession";
inline constexpr std::string_view kSessionCreated = "SessionCreated";
inline constexpr std::string_view kListLessons = "ListLessons";
inline constexpr std::string_view kLessonList = "LessonList";
inline constexpr std::string_view kValidateAnalogy = "ValidateAnalogy";
inline constexpr std::string_view kValidationResult = "ValidationResult";
inline constexpr std::string_view kSubmitQuiz = "SubmitQuiz";
inline constexpr std::string_view kQuizResult = "QuizResult";
inline constexpr std::string_view kError = "Error";

struct WireMessage {
    std::string type;
    std::string session_id;              // empty for session-less verbs
    std::optional<std::uint64_t> seq;    // optional inbound, always set outbound
    nlohmann::json payload = nlohmann::json::object();

    friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

/// Envelope-level failure; code() is one of the normative error codes.
class WireError : public std::runtime_error {
  public:
    WireError(std::string code, const std::string& message) : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

/// Throws WireError("malformed") for anything that is not an envelope.
WireMessage parse_wire(std::string_view text);
nlohmann::json to_json(const WireMessage& m);
std::string to_text(const WireMessage& m);

/// One transcript line: the envelope minus session_id. Headless replay and
/// live sessions render through this so their output can be compared.
std::string transcript_line(const WireMessage& m);

WireMessage error_message(std::string session_id, std::string code, std::string message,
                          std::optional<std::uint64_t> in_reply_to = std::nullopt);

// Payload builders shared by the socket, HTTP and CLI front ends.
nlohmann::json lesson_list_json(const lessons::LessonLibrary& library);
nlohmann::json framework_json();
nlohmann::json validation_json(const analogy::Concept& qc, const analogy::DailyObject& object,
                               const analogy::ValidationReport& report);
nlohmann::json quiz_score_json(const lessons::QuizScore& score);
lessons::QuizScore quiz_score_from_json(const nlohmann::json& j);

}  // namespace qanalogy::service

#endif  // QANALOGY_SERVICE_WIRE_HPP
