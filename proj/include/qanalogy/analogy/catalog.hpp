#ifndef QANALOGY_ANALOGY_CATALOG_HPP
#define QANALOGY_ANALOGY_CATALOG_HPP

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qanalogy/analogy/framework.hpp"

namespace qanalogy::analogy {

/// A physical object that may stand in for a concept. Properties describe
/// what the object can do; num_objects is the most copies available.
struct DailyObject {
    std::string id;
    std::string name;
    ObjectProperties properties;
    std::string description;

    friend bool operator==(const DailyObject&, const DailyObject&) = default;
};

struct DimensionCheck {
    std::string dimension;
    std::string required;
    std::string offered;
    bool satisfied = false;
};

struct ValidationReport {
    bool valid = false;
    std::vector<DimensionCheck> per_dimension;
};

/// Checks an object against the properties a concept requires.
///
/// Counts are satisfied by at least as many objects. Rotation and
/// translation are capabilities: a requirement of "no" is met by any object,
/// since a spinning coin can also sit still. A continuous object meets a
/// discrete requirement but not the converse.
ValidationReport validate_analogy(const Concept& qc, const DailyObject& object);

/// Catalog entries whose report is valid, in catalog order.
std::vector<DailyObject> suggest_objects(const Concept& qc, std::span<const DailyObject> catalog);

class CatalogError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses and validates a JSON catalog document. Throws CatalogError.
std::vector<DailyObject> parse_catalog(std::string_view json_text);
std::vector<DailyObject> load_catalog(const std::filesystem::path& path);

/// The catalog shipped as data/catalog.json, compiled in.
const std::vector<DailyObject>& default_catalog();

const DailyObject* find_object(std::span<const DailyObject> catalog, std::string_view id);

}  // namespace qanalogy::analogy

#endif  // QANALOGY_ANALOGY_CATALOG_HPP
