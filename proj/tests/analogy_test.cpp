#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qanalogy/analogy/catalog.hpp"
#include "qanalogy/analogy/framework.hpp"

using namespace qanalogy::analogy;

namespace {

Concept gate(GateLabel label) { return Concept::gate(label); }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("qanalogy_" + name);
    std::ofstream(path) << text;
    return path;
}

const DailyObject& shipped(std::string_view id) {
    const auto* obj = find_object(default_catalog(), id);
    if (obj == nullptr) throw std::runtime_error("missing shipped object " + std::string(id));
    return *obj;
}

struct GoldenRow {
    Concept subject;
    ConceptCharacterization characterization;
    ObjectProperties properties;
};

// Written out by hand, independent of the library tables: concept dimensions
// on the left, the object properties they demand on the right.
std::vector<GoldenRow> golden_table() {
    using enum Duality;
    using enum ConceptType;
    using enum Probability;
    using enum Continuity;
    return {
        {Concept(ConceptKind::Superposition), {1, Dual, State, NonProbabilistic}, {1, true, false, Discrete}},
        {Concept(ConceptKind::Measurement), {1, NonDual, Operator, NonProbabilistic}, {1, false, true, Discrete}},
        {Concept(ConceptKind::Decoherence), {1, NonDual, Process, NonProbabilistic}, {1, false, true, Discrete}},
        {Concept(ConceptKind::Tunneling), {1, Dual, Process, NonProbabilistic}, {1, true, true, Discrete}},
        {Concept(ConceptKind::Teleportation), {2, Dual, Process, NonProbabilistic}, {2, true, true, Discrete}},
        {Concept(ConceptKind::Entanglement), {2, Dual, Process, NonProbabilistic}, {2, true, true, Discrete}},
        {gate(GateLabel::Hadamard), {1, Dual, Operator, Probabilistic}, {1, true, true, Continuous}},
        {gate(GateLabel::CNOT), {2, Dual, Operator, Probabilistic}, {2, true, true, Continuous}},
        {gate(GateLabel::CSwap), {3, Dual, Operator, Probabilistic}, {3, true, true, Continuous}},
    };
}

}  // namespace

TEST(Characterize, Examples) {
    using enum Duality;
    using enum ConceptType;
    using enum Probability;
    EXPECT_EQ(characterize(Concept(ConceptKind::Superposition)),
              (ConceptCharacterization{1, Dual, State, NonProbabilistic}));
    EXPECT_EQ(characterize(Concept(ConceptKind::Measurement)),
              (ConceptCharacterization{1, NonDual, Operator, NonProbabilistic}));
    EXPECT_EQ(characterize(gate(GateLabel::Hadamard)), (ConceptCharacterization{1, Dual, Operator, Probabilistic}));
}

TEST(Characterize, GateArityFollowsLabel) {
    EXPECT_EQ(characterize(gate(GateLabel::Identity)).num_qubits, 1);
    EXPECT_EQ(characterize(gate(GateLabel::PauliX)).num_qubits, 1);
    EXPECT_EQ(characterize(gate(GateLabel::CNOT)).num_qubits, 2);
    EXPECT_EQ(characterize(gate(GateLabel::CSwap)).num_qubits, 3);
}

TEST(Concept, GateLabelPresentExactlyForGates) {
    EXPECT_THROW(Concept(ConceptKind::Gate), std::invalid_argument);
    for (auto kind : kAllConceptKinds) {
        if (kind == ConceptKind::Gate) continue;
        EXPECT_FALSE(Concept(kind).gate_label().has_value());
    }
    EXPECT_TRUE(gate(GateLabel::CNOT).gate_label().has_value());
}

TEST(Concept, Parsing) {
    EXPECT_EQ(parse_concept("superposition"), Concept(ConceptKind::Superposition));
    EXPECT_EQ(parse_concept("Gate:Hadamard"), gate(GateLabel::Hadamard));
    EXPECT_EQ(parse_concept("Gate(PauliX)"), gate(GateLabel::PauliX));
    EXPECT_EQ(parse_concept("CNOT"), gate(GateLabel::CNOT));
    EXPECT_FALSE(parse_concept("Gate").has_value());
    EXPECT_FALSE(parse_concept("Superposition:Hadamard").has_value());
    EXPECT_FALSE(parse_concept("interference").has_value());
    for (const auto& row : framework_table()) EXPECT_EQ(parse_concept(to_string(row.subject)), row.subject);
}

TEST(RequiredProperties, Examples) {
    using enum Duality;
    using enum ConceptType;
    using enum Probability;
    using enum Continuity;
    EXPECT_EQ(required_properties({1, Dual, State, NonProbabilistic}), (ObjectProperties{1, true, false, Discrete}));
    EXPECT_EQ(required_properties({2, Dual, Process, NonProbabilistic}), (ObjectProperties{2, true, true, Discrete}));
    EXPECT_EQ(required_properties({1, Dual, Operator, Probabilistic}), (ObjectProperties{1, true, true, Continuous}));
}

TEST(RequiredProperties, TotalOverProductSpace) {
    int count = 0;
    for (int q = 1; q <= 3; ++q) {
        for (auto d : {Duality::Dual, Duality::NonDual}) {
            for (auto t : {ConceptType::State, ConceptType::Process, ConceptType::Operator}) {
                for (auto p : {Probability::Probabilistic, Probability::NonProbabilistic}) {
                    const ConceptCharacterization c{q, d, t, p};
                    const auto a = required_properties(c);
                    EXPECT_EQ(a, required_properties(c));
                    EXPECT_EQ(a.num_objects, q);
                    EXPECT_EQ(a.rotation, d == Duality::Dual);
                    EXPECT_EQ(a.translation, t != ConceptType::State);
                    EXPECT_EQ(a.continuity == Continuity::Continuous, p == Probability::Probabilistic);
                    ++count;
                }
            }
        }
    }
    EXPECT_EQ(count, 36);
}

TEST(FrameworkTable, MatchesGoldenRows) {
    const auto table = framework_table();
    const auto golden = golden_table();
    ASSERT_EQ(table.size(), golden.size());
    for (std::size_t i = 0; i < golden.size(); ++i) {
        EXPECT_EQ(table[i].subject, golden[i].subject) << i;
        EXPECT_EQ(table[i].characterization, golden[i].characterization) << to_string(golden[i].subject);
        EXPECT_EQ(table[i].properties, golden[i].properties) << to_string(golden[i].subject);
        EXPECT_EQ(required_properties(characterize(golden[i].subject)), golden[i].properties);
    }
}

TEST(ValidateAnalogy, Examples) {
    const auto superposition = Concept(ConceptKind::Superposition);
    const DailyObject spinning_coin{"coin", "Coin", {1, true, true, Continuity::Discrete}, ""};
    const auto ok = validate_analogy(superposition, spinning_coin);
    EXPECT_TRUE(ok.valid);
    ASSERT_EQ(ok.per_dimension.size(), 4U);

    const DailyObject book{"book", "Book", {1, false, false, Continuity::Discrete}, ""};
    const auto bad = validate_analogy(superposition, book);
    EXPECT_FALSE(bad.valid);
    EXPECT_EQ(bad.per_dimension[1].dimension, "rotation");
    EXPECT_FALSE(bad.per_dimension[1].satisfied);
    EXPECT_TRUE(bad.per_dimension[0].satisfied);

    const auto hadamard = gate(GateLabel::Hadamard);
    const auto coin_report = validate_analogy(hadamard, spinning_coin);
    EXPECT_FALSE(coin_report.valid);
    EXPECT_EQ(coin_report.per_dimension[3].dimension, "property continuity");
    EXPECT_FALSE(coin_report.per_dimension[3].satisfied);
    EXPECT_TRUE(validate_analogy(hadamard, shipped("paper_cutter")).valid);
}

TEST(ValidateAnalogy, CountIsAtLeastRequired) {
    const DailyObject one_coin{"c", "c", {1, true, true, Continuity::Discrete}, ""};
    const DailyObject two_coins{"c2", "c2", {2, true, true, Continuity::Discrete}, ""};
    const auto entanglement = Concept(ConceptKind::Entanglement);
    EXPECT_FALSE(validate_analogy(entanglement, one_coin).valid);
    EXPECT_TRUE(validate_analogy(entanglement, two_coins).valid);
    EXPECT_TRUE(validate_analogy(Concept(ConceptKind::Superposition), two_coins).valid);
}

TEST(ValidateAnalogy, ReportSoundnessRandomized) {
    std::mt19937 gen(11);
    std::vector<Concept> concepts;
    for (const auto& row : framework_table()) concepts.push_back(row.subject);
    concepts.push_back(gate(GateLabel::Identity));
    concepts.push_back(gate(GateLabel::PauliX));
    for (int trial = 0; trial < 2000; ++trial) {
        DailyObject obj{"r", "r",
                        {int(gen() % 4) + 1, bool(gen() & 1), bool(gen() & 1),
                         (gen() & 1) ? Continuity::Continuous : Continuity::Discrete},
                        ""};
        for (const auto& qc : concepts) {
            const auto report = validate_analogy(qc, obj);
            ASSERT_EQ(report.per_dimension.size(), 4U);
            bool all = true;
            for (const auto& d : report.per_dimension) all = all && d.satisfied;
            EXPECT_EQ(report.valid, all);
        }
    }
}

TEST(SuggestObjects, ShippedCatalog) {
    auto ids = [](const std::vector<DailyObject>& objs) {
        std::set<std::string> out;
        for (const auto& o : objs) out.insert(o.id);
        return out;
    };
    const auto sup = ids(suggest_objects(Concept(ConceptKind::Superposition), default_catalog()));
    EXPECT_TRUE(sup.count("coin"));
    EXPECT_TRUE(sup.count("playing_card"));
    EXPECT_TRUE(sup.count("spinner_wheel"));
    EXPECT_FALSE(sup.count("book"));

    const auto x = ids(suggest_objects(gate(GateLabel::PauliX), default_catalog()));
    EXPECT_TRUE(x.count("paper_cutter"));
    EXPECT_TRUE(x.count("ruler_and_coin"));
    EXPECT_FALSE(x.count("coin"));

    const auto ent = ids(suggest_objects(Concept(ConceptKind::Entanglement), default_catalog()));
    EXPECT_TRUE(ent.count("coin"));
    EXPECT_TRUE(ent.count("gears"));

    EXPECT_TRUE(suggest_objects(Concept(ConceptKind::Measurement), std::vector<DailyObject>{}).empty());
}

TEST(SuggestObjects, AgreesWithValidateAndKeepsOrder) {
    const auto& catalog = default_catalog();
    for (const auto& row : framework_table()) {
        const auto suggested = suggest_objects(row.subject, catalog);
        std::size_t next = 0;
        for (const auto& obj : catalog) {
            const bool valid = validate_analogy(row.subject, obj).valid;
            const bool listed = next < suggested.size() && suggested[next] == obj;
            EXPECT_EQ(valid, listed) << obj.id << " / " << to_string(row.subject);
            if (listed) ++next;
        }
        EXPECT_EQ(next, suggested.size());
    }
}

TEST(LoadCatalog, ShippedFileCoversFrameworkExamples) {
    const auto catalog = load_catalog(std::filesystem::path(QANALOGY_DATA_DIR) / "catalog.json");
    EXPECT_GE(catalog.size(), 7U);
    EXPECT_EQ(catalog, default_catalog());
    for (const char* id : {"coin", "playing_card", "spinner_wheel", "gears", "paper_cutter", "ruler_and_coin"}) {
        EXPECT_NE(find_object(catalog, id), nullptr) << id;
    }
}

TEST(LoadCatalog, DuplicateIdNamed) {
    const auto path = write_temp("dup.json", R"({"objects":[
        {"id":"coin","name":"a","num_objects":1,"rotation":true,"translation":true,"continuity":"Discrete"},
        {"id":"coin","name":"b","num_objects":1,"rotation":true,"translation":true,"continuity":"Discrete"}]})");
    try {
        load_catalog(path);
        FAIL() << "expected CatalogError";
    } catch (const CatalogError& e) {
        EXPECT_NE(std::string(e.what()).find("'coin'"), std::string::npos) << e.what();
    }
}

TEST(LoadCatalog, MalformedInputs) {
    EXPECT_THROW(load_catalog(write_temp("empty.json", "")), CatalogError);
    EXPECT_THROW(load_catalog(write_temp("array.json", "[]")), CatalogError);
    EXPECT_THROW(load_catalog("/nonexistent/catalog.json"), CatalogError);
    EXPECT_THROW(parse_catalog(R"({"objects":[{"id":"a","name":"a","num_objects":0,"rotation":true,
        "translation":true,"continuity":"Discrete"}]})"),
                 CatalogError);
    EXPECT_THROW(parse_catalog(R"({"objects":[{"id":"a","name":"a","num_objects":1,"rotation":"yes",
        "translation":true,"continuity":"Discrete"}]})"),
                 CatalogError);
    EXPECT_THROW(parse_catalog(R"({"objects":[{"id":"a","name":"a","num_objects":1,"rotation":true,
        "translation":true,"continuity":"Smooth"}]})"),
                 CatalogError);
    EXPECT_THROW(parse_catalog(R"({"objects":[{"name":"a","num_objects":1,"rotation":true,
        "translation":true,"continuity":"Discrete"}]})"),
                 CatalogError);
}
