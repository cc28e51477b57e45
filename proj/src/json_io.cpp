#include "narayana/json_io.hpp"

#include <sstream>

namespace narayana {

namespace {

std::string z(const mpz_class& v) { return v.get_str(); }
std::string num(long v) { return std::to_string(v); }

}  // namespace

json ball_to_json(const Ball& x) {
    return json{{"mid", x.mid_str(40)}, {"rad", x.rad_str()}};
}

json bounds_entry_to_json(Equation eq, const AbsoluteBoundsEntry& e) {
    json j;
    j["b"] = num(e.b);
    j["equation"] = eq == Equation::eq3 ? "eq3" : "eq2";
    j["paper_ceiling_ok"] = e.paper_ceiling_ok;
    if (eq == Equation::eq3) {
        j["l1_max"] = z(e.l1_max);
        j["l2_max"] = z(e.l2_max);
        j["k_max"] = z(e.k_max);
    } else {
        j["m_max"] = z(e.m_max);
        j["n_max"] = z(e.n_max);
    }
    return j;
}

json bounds_report_to_json(const AbsoluteBounds& bounds, const DerivedConstants& c) {
    json j;
    j["equation"] = bounds.equation == Equation::eq3 ? "eq3" : "eq2";
    j["constants"] = json{{"matveev_factor", ball_to_json(c.matveev_factor)},
                          {"c3", ball_to_json(c.c3)},
                          {"C_l2", ball_to_json(c.C_l2)},
                          {"c1", ball_to_json(c.c1)},
                          {"C_n", ball_to_json(c.C_n)},
                          {"precision_bits", num(c.precision_bits)},
                          {"paper_ceilings_ok", c.paper_ceilings_ok},
                          {"paper_floors_ok", c.paper_floors_ok}};
    json per_base = json::array();
    for (const auto& [b, e] : bounds.per_base)
        per_base.push_back(bounds_entry_to_json(bounds.equation, e));
    j["per_base"] = per_base;
    return j;
}

json certificate_to_json(const DPCertificate& c) {
    json j;
    j["label"] = dp_label_name(c.key.label);
    j["b"] = num(c.key.b);
    if (c.key.label == DPLabel::eq3_l1 || c.key.label == DPLabel::eq3_l2)
        j["a"] = json::array({num(c.key.a1), num(c.key.a2)});
    else
        j["a"] = num(c.key.a1);
    if (c.key.l1 >= 0) j["l1"] = num(c.key.l1);
    if (c.key.m >= 0) j["m"] = num(c.key.m);
    j["tau_precision_bits"] = num(c.tau_precision_bits);
    j["M"] = z(c.M);
    j["A"] = num(c.A);
    j["B"] = c.B;
    j["attempts"] = num(c.attempts);
    if (c.fallback) {
        j["fallback"] = json{{"g", z(c.g)}, {"n_bound", num(c.n_bound)}};
    } else {
        j["q"] = z(c.q);
        j["p"] = z(c.p);
        j["epsilon"] = json{{"mid", c.epsilon_mid}, {"rad", c.epsilon_rad}};
        j["reduced_w"] = num(c.reduced_w);
    }
    return j;
}

json sweep_to_json(const SweepResult& r, bool include_certificates) {
    json j;
    j["equation"] = r.equation == Equation::eq3 ? "eq3" : "eq2";
    j["precision_bits"] = num(r.precision_bits);
    j["instances"] = num(static_cast<long>(r.instances));
    j["retried"] = num(static_cast<long>(r.retried));
    if (r.equation == Equation::eq3) {
        j["l1_max"] = num(r.l1_max);
        j["l2_max"] = num(r.l2_max);
        j["k_max"] = num(r.k_max);
        json by_b = json::object();
        for (const auto& [b, v] : r.l1_max_by_b) by_b[num(b)] = num(v);
        j["l1_max_by_b"] = by_b;
        by_b = json::object();
        for (const auto& [b, v] : r.l2_max_by_b) by_b[num(b)] = num(v);
        j["l2_max_by_b"] = by_b;
        by_b = json::object();
        for (const auto& [b, v] : r.k_cap_by_b) by_b[num(b)] = num(v);
        j["k_cap_by_b"] = by_b;
    } else {
        j["m_max"] = num(r.m_max);
        j["n_max"] = num(r.n_max);
        j["fallback_n_bound_max"] = num(r.fallback_n_bound_max);
        json by_b = json::object();
        for (const auto& [b, v] : r.m_max_by_b) by_b[num(b)] = num(v);
        j["m_max_by_b"] = by_b;
        by_b = json::object();
        for (const auto& [b, v] : r.n_max_by_b) by_b[num(b)] = num(v);
        j["n_max_by_b"] = by_b;
    }
    json fb = json::array();
    for (const auto& f : r.fallbacks)
        fb.push_back(json{{"b", num(f.b)},
                          {"a", num(f.a)},
                          {"m", num(f.m)},
                          {"g", z(f.g)},
                          {"n_bound", num(f.n_bound)}});
    j["fallbacks"] = fb;
    if (include_certificates) {
        json cs = json::array();
        for (const auto& c : r.certificates) cs.push_back(certificate_to_json(c));
        j["certificates"] = cs;
    }
    return j;
}

json eq2_solution_to_json(const Eq2Solution& s) {
    return json{{"n", num(s.n)}, {"m", num(s.m)}, {"l", num(s.l)},
                {"a", num(s.a)}, {"b", num(s.b)}, {"value", z(s.value)}};
}

json eq3_solution_to_json(const Eq3Solution& s) {
    return json{{"k", num(s.k)},   {"b", num(s.b)},   {"a1", num(s.a1)},
                {"a2", num(s.a2)}, {"l1", num(s.l1)}, {"l2", num(s.l2)},
                {"value", z(s.value)}};
}

json solutions_to_json(const std::vector<Eq2Solution>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(eq2_solution_to_json(s));
    return a;
}

json solutions_to_json(const std::vector<Eq3Solution>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(eq3_solution_to_json(s));
    return a;
}

json diff_to_json(const TableDiff& d) {
    json j;
    json arr = json::array();
    for (const auto& s : d.matched) arr.push_back(eq2_solution_to_json(s));
    j["matched"] = arr;
    arr = json::array();
    for (const auto& [t, s] : d.corrected)
        arr.push_back(json{{"paper", format_paper_tuple(t)},
                           {"derived", eq2_solution_to_json(s)}});
    j["corrected"] = arr;
    arr = json::array();
    for (const auto& s : d.missing_in_paper) arr.push_back(eq2_solution_to_json(s));
    j["missing_in_paper"] = arr;
    arr = json::array();
    for (const auto& t : d.missing_in_derived) arr.push_back(format_paper_tuple(t));
    j["missing_in_derived"] = arr;
    return j;
}

std::string eq2_solutions_to_csv(const std::vector<Eq2Solution>& v) {
    std::ostringstream os;
    os << "n,m,l,a,b,value\n";
    for (const auto& s : v)
        os << s.n << "," << s.m << "," << s.l << "," << s.a << "," << s.b << ","
           << s.value.get_str() << "\n";
    return os.str();
}

std::string eq3_solutions_to_csv(const std::vector<Eq3Solution>& v) {
    std::ostringstream os;
    os << "k,b,a1,a2,l1,l2,value\n";
    for (const auto& s : v)
        os << s.k << "," << s.b << "," << s.a1 << "," << s.a2 << "," << s.l1 << ","
           << s.l2 << "," << s.value.get_str() << "\n";
    return os.str();
}

std::string diff_to_text(const TableDiff& d) {
    std::ostringstream os;
    os << "table diff: " << d.matched.size() << " matched, " << d.corrected.size()
       << " corrected, " << d.missing_in_paper.size() << " missing_in_paper, "
       << d.missing_in_derived.size() << " missing_in_derived\n";
    if (!d.corrected.empty()) {
        os << "corrected rows:\n";
        for (const auto& [t, s] : d.corrected)
            os << "  " << format_paper_tuple(t) << " -> " << format_eq2_solution(s)
               << "\n";
    }
    if (!d.missing_in_paper.empty()) {
        os << "derived but not printed:\n";
        for (const auto& s : d.missing_in_paper)
            os << "  " << format_eq2_solution(s) << "\n";
    }
    if (!d.missing_in_derived.empty()) {
        os << "printed but not derived:\n";
        for (const auto& t : d.missing_in_derived)
            os << "  " << format_paper_tuple(t) << "\n";
    }
    return os.str();
}

}  // namespace narayana
