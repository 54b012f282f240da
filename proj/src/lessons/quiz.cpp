#include "qanalogy/lessons/quiz.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qanalogy/lessons/script.hpp"

namespace qanalogy::embedded {
extern const std::string_view default_quiz;
}

namespace qanalogy::lessons {

using nlohmann::json;

std::vector<QuizItem> parse_quiz(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScriptError(std::string("quiz is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("items") || !doc.at("items").is_array()) {
        throw ScriptError("quiz must be an object with an 'items' array");
    }
    std::vector<QuizItem> items;
    std::set<std::string> ids;
    for (const auto& j : doc.at("items")) {
        QuizItem item;
        try {
            item.id = j.at("id").get<std::string>();
            const auto lesson = parse_lesson_id(j.at("lesson").get<std::string>());
            if (!lesson) throw ScriptError("quiz item '" + item.id + "' names an unknown lesson");
            item.lesson = *lesson;
            item.prompt = j.at("prompt").get<std::string>();
            item.choices = j.at("choices").get<std::vector<std::string>>();
            item.answer_index = j.at("answer_index").get<int>();
        } catch (const json::exception& e) {
            throw ScriptError(std::string("malformed quiz item: ") + e.what());
        }
        if (item.choices.empty() || item.answer_index < 0 || item.answer_index >= int(item.choices.size())) {
            throw ScriptError("quiz item '" + item.id + "' has an answer_index outside its choices");
        }
        if (!ids.insert(item.id).second) throw ScriptError("duplicate quiz item id '" + item.id + "'");
        items.push_back(std::move(item));
    }
    return items;
}

std::vector<QuizItem> load_quiz(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScriptError("cannot open quiz file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_quiz(text.str());
}

const std::vector<QuizItem>& shipped_quiz() {
    static const std::vector<QuizItem> items = parse_quiz(embedded::default_quiz);
    return items;
}

QuizScore grade(std::span<const QuizItem> items, std::span<const int> answers) {
    if (answers.size() != items.size()) {
        throw std::domain_error("expected " + std::to_string(items.size()) + " answers, got " +
                                std::to_string(answers.size()));
    }
    QuizScore result;
    result.total = int(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (answers[i] < 0 || answers[i] >= int(items[i].choices.size())) {
            throw std::domain_error("answer " + std::to_string(i + 1) + " is not a valid choice index");
        }
        const bool ok = answers[i] == items[i].answer_index;
        result.correct.push_back(ok);
        result.score += ok ? 1 : 0;
    }
    return result;
}

}  // namespace qanalogy::lessons
