#include "dpi/io.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace dpi {

using nlohmann::json;

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string to_json(const VerifyReport& report) {
    json j;
    j["schema"] = std::string(kSchemaPrefix) + "verify/v1";
    j["suite"] = report.suite;
    j["all_pass"] = report.all_pass();
    j["checks"] = json::array();
    for (const auto& c : report.checks)
        j["checks"].push_back({{"check_name", c.name},
                               {"parameters", c.parameters},
                               {"residual", c.residual},
                               {"pass", c.pass}});
    return j.dump(2);
}

VerifyReport verify_report_from_json(const std::string& text) {
    json j = json::parse(text);
    VerifyReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks")) {
        CheckResult cr;
        cr.name = c.at("check_name").get<std::string>();
        cr.parameters = c.at("parameters").get<std::string>();
        cr.residual = c.at("residual").get<double>();
        cr.pass = c.at("pass").get<bool>();
        r.checks.push_back(std::move(cr));
    }
    return r;
}

namespace {
template <typename Table, typename Fmt>
void write_table_csv(std::ostream& os, const Table& t, const std::string& eps_str, Fmt fmt) {
    os << "# " << kCsvVersion << " bounds eps=" << eps_str << "\n";
    os << "k,n,b,rho\n";
    for (int k = 0; k <= t.k_max; ++k)
        for (int n = 0; n <= t.n_max; ++n)
            os << k << "," << n << "," << fmt(t.b[k][n]) << "," << fmt(t.rho[k][n]) << "\n";
}

template <typename Table, typename Fmt>
std::string table_json(const Table& t, const std::string& eps_str, const char* mode, Fmt fmt) {
    json j;
    j["schema"] = std::string(kSchemaPrefix) + "bounds/v1";
    j["eps"] = eps_str;
    j["mode"] = mode;
    j["k_max"] = t.k_max;
    j["n_max"] = t.n_max;
    j["entries"] = json::array();
    for (int k = 0; k <= t.k_max; ++k)
        for (int n = 0; n <= t.n_max; ++n)
            j["entries"].push_back(
                {{"k", k}, {"n", n}, {"b", fmt(t.b[k][n])}, {"rho", fmt(t.rho[k][n])}});
    return j.dump(2);
}
} // namespace

void write_bound_table_csv(std::ostream& os, const BoundTableQ& t) {
    write_table_csv(os, t, t.eps.get_str(), [](const BigRat& q) { return q.get_str(); });
}

void write_bound_table_csv(std::ostream& os, const BoundTableF& t) {
    write_table_csv(os, t, t.eps.str(20), [](const HPReal& x) { return x.str(); });
}

std::string bound_table_json(const BoundTableF& t) {
    return table_json(t, t.eps.str(20), "floating", [](const HPReal& x) { return x.str(); });
}

std::string bound_table_json(const BoundTableQ& t) {
    return table_json(t, t.eps.get_str(), "exact_rational",
                      [](const BigRat& q) { return q.get_str(); });
}

void write_convergents_csv(std::ostream& os, const BigRat& eps, int k_max) {
    os << "# " << kCsvVersion << " cfrac eps=" << eps.get_str() << "\n";
    os << "k,P,Q,value,gap\n";
    auto f = SFraction::build(k_max);
    for (int k = 0; k <= k_max; ++k) {
        BigRat p = f.P[k].eval(eps), q = f.Q[k].eval(eps);
        BigRat val = p / q;
        std::string gap = "";
        if (k >= 1) gap = BigRat(convergent_gap(k, eps)).get_str();
        os << k << "," << p.get_str() << "," << q.get_str() << "," << val.get_str() << "," << gap
           << "\n";
    }
}

void write_vn_csv(std::ostream& os, const std::vector<VnRow>& rows, double eps) {
    os << "# " << kCsvVersion << " vn eps=" << eps << "\n";
    os << "n,v,residual\n";
    for (const auto& r : rows) os << r.n << "," << r.v << "," << r.residual << "\n";
}

std::string vn_json(const std::vector<VnRow>& rows, double eps) {
    json j;
    j["schema"] = std::string(kSchemaPrefix) + "vn/v1";
    j["eps"] = eps;
    j["rows"] = json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"n", r.n}, {"v", r.v}, {"residual", r.residual}});
    return j.dump(2);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, int samples,
                          const std::string& col1, const std::string& col2) {
    os << "# " << kCsvVersion << " trajectory\n";
    os << "t," << col1 << "," << col2 << "\n";
    double t0 = traj.t_begin(), t1 = traj.t_end();
    for (int i = 0; i < samples; ++i) {
        double t = t0 + (t1 - t0) * i / (samples - 1);
        auto y = traj.eval(t);
        os << t << "," << y[0] << "," << (y.size() > 1 ? y[1] : 0.0) << "\n";
    }
}

std::string geometry_json() {
    json j;
    j["schema"] = std::string(kSchemaPrefix) + "geometry/v1";
    const char* basis[10] = {"Hx", "Hy", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"};
    json action = json::array();
    for (int i = 0; i < 10; ++i) {
        PicardClass e;
        e.c[i] = 1;
        action.push_back({{"class", basis[i]},
                          {"push", phi_push(e).str()},
                          {"pull", phi_pull(e).str()}});
    }
    j["pic_action"] = action;
    auto add_roots = [&](RootKind kind, const char* name) {
        auto rs = roots(kind);
        json arr = json::array();
        for (const auto& r : rs) arr.push_back(r.str());
        j[name] = arr;
        j[std::string(name) + "_cartan"] = cartan_matrix(rs);
    };
    add_roots(RootKind::surface, "surface_roots");
    add_roots(RootKind::symmetry, "symmetry_roots");
    auto t3 = translation_check(3);
    j["phi3_translation"] = t3 ? json(*t3) : json(nullptr);
    j["kny_translation"] = kny_translation();
    j["sakai_translation"] = sakai_translation();
    return j.dump(2);
}

} // namespace dpi
