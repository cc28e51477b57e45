#pragma once

#include <json.hpp>

#include "narayana/baker_bounds.hpp"
#include "narayana/reduction.hpp"
#include "narayana/search.hpp"

namespace narayana {

// Wire format rule: every numeric value is a decimal string, never a binary
// float; keys are emitted sorted so identical runs serialize byte-identically.
using json = nlohmann::json;

json ball_to_json(const Ball& x);
json bounds_entry_to_json(Equation eq, const AbsoluteBoundsEntry& e);
json bounds_report_to_json(const AbsoluteBounds& bounds,
                           const DerivedConstants& consts);
json certificate_to_json(const DPCertificate& c);
json sweep_to_json(const SweepResult& r, bool include_certificates = true);
json eq2_solution_to_json(const Eq2Solution& s);
json eq3_solution_to_json(const Eq3Solution& s);
json solutions_to_json(const std::vector<Eq2Solution>& v);
json solutions_to_json(const std::vector<Eq3Solution>& v);
json diff_to_json(const TableDiff& d);

std::string eq2_solutions_to_csv(const std::vector<Eq2Solution>& v);
std::string eq3_solutions_to_csv(const std::vector<Eq3Solution>& v);
std::string diff_to_text(const TableDiff& d);

}  // namespace narayana
