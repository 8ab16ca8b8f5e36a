#pragma once
#include <optional>
#include <string>
#include <vector>
#include <json.hpp>
#include "affsym/certify.hpp"
#include "affsym/conditions.hpp"
#include "affsym/symbolic_verifier.hpp"

namespace affsym {

using json = nlohmann::ordered_json;

json tool_info();
json tolerances_json(const Tolerances& tol);
json grid_json(const GridSpec& g);
json family_json(const FamilyInstance& inst);

// per-case component list {equation id, component, reduced polynomial, zero}
json verification_report(const std::vector<SymmetryCase>& cases, bool show_equations);
bool verification_passed(const json& report);

json certify_report(const FamilyInstance& inst, const GridSpec& grid, const Tolerances& tol,
                    const CertifySummary& summary, const std::vector<PointRecord>* points);

json condition_report(const FamilyInstance& inst, const GridSpec& grid, const Tolerances& tol,
                      const std::vector<std::pair<double, ConditionResult>>& results);

// CSV with header row, 17 significant digits
void write_mesh_csv(const std::string& path, const FamilyInstance& inst, const GridSpec& grid);
json mesh_json(const FamilyInstance& inst, const GridSpec& grid);

void write_classification_csv(const std::string& path,
                              const std::vector<ClassifyRecord>& records);

void write_text_file(const std::string& path, const std::string& content);

} // namespace affsym
