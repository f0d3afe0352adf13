#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dpi/cfrac.hpp"
#include "dpi/fixed_point.hpp"
#include "dpi/ode.hpp"
#include "dpi/picard.hpp"

namespace dpi {

// All emitted files begin with a versioned header record so downstream figure
// scripts stay stable: CSV gets a "# dpitk-csv v1 <kind>" line, JSON a
// {"schema": "dpitk/<kind>/v1"} field.
inline constexpr const char* kCsvVersion = "dpitk-csv v1";
inline constexpr const char* kSchemaPrefix = "dpitk/";

struct CheckResult {
    std::string name;
    std::string parameters;
    double residual = 0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

std::string to_json(const VerifyReport& report);
VerifyReport verify_report_from_json(const std::string& json_text);

void write_bound_table_csv(std::ostream& os, const BoundTableQ& t);
void write_bound_table_csv(std::ostream& os, const BoundTableF& t);
std::string bound_table_json(const BoundTableF& t);
std::string bound_table_json(const BoundTableQ& t);

// Convergent table (k, P, Q, value, gap) at exact rational eps.
void write_convergents_csv(std::ostream& os, const BigRat& eps, int k_max);

// v_n table rows.
struct VnRow {
    int n;
    std::string v;         // decimal string at the working precision
    std::string residual;  // dP_I residual at this row ("" for edge rows)
};
void write_vn_csv(std::ostream& os, const std::vector<VnRow>& rows, double eps);
std::string vn_json(const std::vector<VnRow>& rows, double eps);

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, int samples,
                          const std::string& col1, const std::string& col2);

// Geometry documentation data: the phi action table and Cartan matrices.
std::string geometry_json();

} // namespace dpi
