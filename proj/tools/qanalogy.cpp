// qanalogy: serve lessons, replay scripts headlessly, inspect the framework.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qanalogy/analogy/catalog.hpp"
#include "qanalogy/lessons/quiz.hpp"
#include "qanalogy/service/replay.hpp"
#include "qanalogy/service/server.hpp"

namespace {

using namespace qanalogy;

int run_serve(const std::string& address, unsigned short port, const std::string& store_dir, int idle_minutes) {
    service::ResultStore store(store_dir);
    service::HostOptions host_options;
    host_options.store = &store;
    host_options.idle_timeout = std::chrono::minutes(idle_minutes);
    service::SessionHost host(host_options);

    service::ServerOptions options;
    options.address = address;
    options.port = port;
    service::Server server(host, options);
    server.start();
    std::cerr << "qanalogy: listening on " << address << ":" << server.port() << ", results in " << store_dir
              << '\n';
    server.wait();
    return 0;
}

int run_replay(const std::string& script_path, std::uint64_t seed, const std::string& out_path) {
    const auto script = service::load_replay_script(script_path);
    const auto text = service::render_transcript(service::run_replay(script, seed));
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "qanalogy: cannot write " << out_path << '\n';
            return 1;
        }
    }
    return 0;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_framework(bool as_json) {
    if (as_json) {
        std::cout << service::framework_json().dump(2) << '\n';
        return 0;
    }
    std::cout << std::left << std::setw(16) << "concept" << std::setw(8) << "qubits" << std::setw(10) << "duality"
              << std::setw(10) << "type" << std::setw(18) << "probability" << std::setw(9) << "objects" << std::setw(10)
              << "rotation" << std::setw(13) << "translation"
              << "continuity\n";
    for (const auto& row : analogy::framework_table()) {
        const auto& c = row.characterization;
        const auto& p = row.properties;
        std::cout << std::setw(16) << analogy::to_string(row.subject) << std::setw(8) << c.num_qubits
                  << std::setw(10) << analogy::to_string(c.duality) << std::setw(10)
                  << analogy::to_string(c.concept_type) << std::setw(18) << analogy::to_string(c.probability)
                  << std::setw(9) << p.num_objects << std::setw(10) << yes_no(p.rotation) << std::setw(13)
                  << yes_no(p.translation) << analogy::to_string(p.continuity) << '\n';
    }
    return 0;
}

int run_validate(const std::string& concept_text, const std::string& object_id, const std::string& catalog_path,
                 bool as_json) {
    const auto qc = analogy::parse_concept(concept_text);
    if (!qc) {
        std::cerr << "qanalogy: unknown concept '" << concept_text << "'\n";
        return 1;
    }
    const auto catalog = catalog_path.empty() ? analogy::default_catalog() : analogy::load_catalog(catalog_path);
    const auto* object = analogy::find_object(catalog, object_id);
    if (object == nullptr) {
        std::cerr << "qanalogy: no catalog object '" << object_id << "'\n";
        return 1;
    }
    const auto report = analogy::validate_analogy(*qc, *object);
    if (as_json) {
        std::cout << service::validation_json(*qc, *object, report).dump(2) << '\n';
    } else {
        std::cout << analogy::to_string(*qc) << " as " << object->name << ": " << (report.valid ? "VALID" : "INVALID")
                  << '\n';
        for (const auto& d : report.per_dimension) {
            std::cout << "  " << (d.satisfied ? "ok  " : "FAIL") << ' ' << std::left << std::setw(22) << d.dimension
                      << "required " << std::setw(12) << d.required << "offered " << d.offered << '\n';
        }
    }
    return report.valid ? 0 : 2;
}

std::vector<int> parse_answers(const std::string& csv) {
    std::vector<int> answers;
    std::stringstream in(csv);
    std::string field;
    while (std::getline(in, field, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || field.find_first_not_of(" \t", used) != std::string::npos) {
            throw std::invalid_argument("answer '" + field + "' is not an integer");
        }
        answers.push_back(value);
    }
    return answers;
}

int run_quiz(const std::string& csv) {
    const auto& items = lessons::shipped_quiz();
    const auto score = lessons::grade(items, parse_answers(csv));
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::cout << items[i].id << ' ' << (score.correct[i] ? "correct" : "wrong") << '\n';
    }
    std::cout << "score " << score.score << "/" << score.total << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum concepts through everyday objects"};
    app.require_subcommand(1);

    auto* serve = app.add_subcommand("serve", "Run the HTTP/WebSocket session service");
    std::string address = "127.0.0.1";
    unsigned short port = 8080;
    std::string store_dir = "results";
    int idle_minutes = 30;
    serve->add_option("--address", address, "Address to bind");
    serve->add_option("--port", port, "Port to bind (0 picks one)");
    serve->add_option("--store", store_dir, "Directory for session records");
    serve->add_option("--idle-minutes", idle_minutes, "Reap sessions idle this long")->check(CLI::PositiveNumber);

    auto* replay = app.add_subcommand("replay", "Run a lesson script headlessly and print the output transcript");
    std::string script_path;
    std::uint64_t seed = 0;
    std::string out_path;
    replay->add_option("--script", script_path, "Replay script (JSON)")->required()->check(CLI::ExistingFile);
    replay->add_option("--seed", seed, "Session seed")->required();
    replay->add_option("--out", out_path, "Also write the transcript here");

    auto* framework = app.add_subcommand("framework", "Concept characterization framework");
    framework->require_subcommand(1);
    auto* table = framework->add_subcommand("table", "Print the framework table");
    bool framework_json = false;
    table->add_flag("--json", framework_json, "Print JSON rows");

    auto* analogy_cmd = app.add_subcommand("analogy", "Daily-object analogies");
    analogy_cmd->require_subcommand(1);
    auto* validate = analogy_cmd->add_subcommand("validate", "Check an object against a concept (exit 2 if invalid)");
    std::string concept_text, object_id, catalog_path;
    bool validate_json = false;
    validate->add_option("--concept", concept_text, "Concept, e.g. Superposition or Gate:Hadamard")->required();
    validate->add_option("--object", object_id, "Catalog object id")->required();
    validate->add_option("--catalog", catalog_path, "Catalog file instead of the shipped one")
        ->check(CLI::ExistingFile);
    validate->add_flag("--json", validate_json, "Print JSON");

    auto* quiz = app.add_subcommand("quiz", "Quiz tools");
    quiz->require_subcommand(1);
    auto* grade_cmd = quiz->add_subcommand("grade", "Grade comma-separated answer indices");
    std::string answers;
    grade_cmd->add_option("--answers", answers, "e.g. 1,2,1,0,2,1,0,2,2")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*serve) return run_serve(address, port, store_dir, idle_minutes);
        if (*replay) return run_replay(script_path, seed, out_path);
        if (*table) return run_framework(framework_json);
        if (*validate) return run_validate(concept_text, object_id, catalog_path, validate_json);
        if (*grade_cmd) return run_quiz(answers);
    } catch (const std::exception& e) {
        std::cerr << "qanalogy: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
