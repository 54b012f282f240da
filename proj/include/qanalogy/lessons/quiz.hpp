#ifndef QANALOGY_LESSONS_QUIZ_HPP
#define QANALOGY_LESSONS_QUIZ_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qanalogy/lessons/events.hpp"

namespace qanalogy::lessons {

struct QuizItem {
    std::string id;
    LessonId lesson = LessonId::Superposition;
    std::string prompt;
    std::vector<std::string> choices;
    int answer_index = 0;
};

struct QuizScore {
    int score = 0;
    int total = 0;
    std::vector<bool> correct;

    friend bool operator==(const QuizScore&, const QuizScore&) = default;
};

/// Throws ScriptError on malformed documents or out-of-range answers.
std::vector<QuizItem> parse_quiz(std::string_view json_text);
std::vector<QuizItem> load_quiz(const std::filesystem::path& path);

/// data/quiz.json, compiled in: nine items, one per lesson.
const std::vector<QuizItem>& shipped_quiz();

/// Throws std::domain_error when the answer count differs from the item
/// count or an answer is not a valid choice index.
QuizScore grade(std::span<const QuizItem> items, std::span<const int> answers);

}  // namespace qanalogy::lessons

#endif  // QANALOGY_LESSONS_QUIZ_HPP
