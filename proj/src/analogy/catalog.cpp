#include "qanalogy/analogy/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qanalogy::embedded {
extern const std::string_view default_catalog;
}

namespace qanalogy::analogy {

namespace {

using nlohmann::json;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <typename T>
T required_field(const json& entry, const char* field, std::size_t index) {
    if (!entry.contains(field)) {
        throw CatalogError("catalog entry " + std::to_string(index) + " is missing field '" + field + "'");
    }
    try {
        return entry.at(field).get<T>();
    } catch (const json::exception&) {
        throw CatalogError("catalog entry " + std::to_string(index) + " has a malformed '" + field + "'");
    }
}

DailyObject parse_entry(const json& entry, std::size_t index) {
    if (!entry.is_object()) {
        throw CatalogError("catalog entry " + std::to_string(index) + " is not an object");
    }
    DailyObject obj;
    obj.id = required_field<std::string>(entry, "id", index);
    obj.name = required_field<std::string>(entry, "name", index);
    obj.description = entry.value("description", std::string{});
    if (obj.id.empty()) {
        throw CatalogError("catalog entry " + std::to_string(index) + " has an empty id");
    }

    const auto& count = entry.contains("num_objects") ? entry.at("num_objects") : json();
    if (!count.is_number_integer()) {
        throw CatalogError("object '" + obj.id + "' needs an integer num_objects");
    }
    obj.properties.num_objects = count.get<int>();
    if (obj.properties.num_objects < 1) {
        throw CatalogError("object '" + obj.id + "' must have num_objects >= 1");
    }
    obj.properties.rotation = required_field<bool>(entry, "rotation", index);
    obj.properties.translation = required_field<bool>(entry, "translation", index);
    const auto continuity = parse_continuity(required_field<std::string>(entry, "continuity", index));
    if (!continuity) {
        throw CatalogError("object '" + obj.id + "' has continuity other than Continuous/Discrete");
    }
    obj.properties.continuity = *continuity;
    return obj;
}

}  // namespace

ValidationReport validate_analogy(const Concept& qc, const DailyObject& object) {
    const auto need = required_properties(characterize(qc));
    const auto& have = object.properties;

    ValidationReport report;
    report.per_dimension = {
        {"number of objects", std::to_string(need.num_objects), std::to_string(have.num_objects),
         have.num_objects >= need.num_objects},
        {"rotation", yes_no(need.rotation), yes_no(have.rotation), !need.rotation || have.rotation},
        {"translation", yes_no(need.translation), yes_no(have.translation), !need.translation || have.translation},
        {"property continuity", std::string(to_string(need.continuity)), std::string(to_string(have.continuity)),
         have.continuity == Continuity::Continuous || need.continuity == Continuity::Discrete},
    };
    report.valid = true;
    for (const auto& check : report.per_dimension) report.valid = report.valid && check.satisfied;
    return report;
}

std::vector<DailyObject> suggest_objects(const Concept& qc, std::span<const DailyObject> catalog) {
    std::vector<DailyObject> out;
    for (const auto& obj : catalog) {
        if (validate_analogy(qc, obj).valid) out.push_back(obj);
    }
    return out;
}

std::vector<DailyObject> parse_catalog(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("objects") || !doc.at("objects").is_array()) {
        throw CatalogError("catalog must be an object with an 'objects' array");
    }
    std::vector<DailyObject> catalog;
    std::set<std::string> seen;
    std::size_t index = 0;
    for (const auto& entry : doc.at("objects")) {
        auto obj = parse_entry(entry, index++);
        if (!seen.insert(obj.id).second) {
            throw CatalogError("duplicate object id '" + obj.id + "'");
        }
        catalog.push_back(std::move(obj));
    }
    return catalog;
}

std::vector<DailyObject> load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CatalogError("cannot open catalog file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_catalog(text.str());
}

const std::vector<DailyObject>& default_catalog() {
    static const std::vector<DailyObject> catalog = parse_catalog(embedded::default_catalog);
    return catalog;
}

const DailyObject* find_object(std::span<const DailyObject> catalog, std::string_view id) {
    for (const auto& obj : catalog) {
        if (obj.id == id) return &obj;
    }
    return nullptr;
}

}  // namespace qanalogy::analogy
