#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "narayana/repdigit.hpp"

namespace narayana {

// N_n N_m = a (b^l - 1)/(b - 1) with 3 <= m <= n, l >= 2.
struct Eq2Solution {
    long n, m, l;
    int a, b;
    mpz_class value;
    auto tuple() const { return std::tie(n, m, l, a, b); }
    bool operator<(const Eq2Solution& o) const { return tuple() < o.tuple(); }
    bool operator==(const Eq2Solution& o) const { return tuple() == o.tuple(); }
};

// N_k = R(a1,b,l1) * R(a2,b,l2) with 2 <= l1 <= l2.
struct Eq3Solution {
    long k;
    int b, a1, a2;
    long l1, l2;
    mpz_class value;
    auto tuple() const { return std::tie(k, b, a1, a2, l1, l2); }
    bool operator<(const Eq3Solution& o) const { return tuple() < o.tuple(); }
    bool operator==(const Eq3Solution& o) const { return tuple() == o.tuple(); }
};

// Exhaustive eq2 kernel: every (n, m, b) with 3 <= m <= n <= n_max,
// b_lo <= b <= b_hi, recognizing N_n N_m as a repdigit of length >= 2.
std::vector<Eq2Solution> solve_eq2(int b_lo, int b_hi, long n_max, int threads = 1);

// Exhaustive eq3 kernel over per-base k caps with length caps.
std::vector<Eq3Solution> solve_eq3(int b_lo, int b_hi,
                                   const std::map<int, long>& k_cap_by_b,
                                   long l1_cap, long l2_cap, int threads = 1);
// Convenience: uniform k cap.
std::vector<Eq3Solution> solve_eq3(int b_lo, int b_hi, long k_max, long l1_cap,
                                   long l2_cap, int threads = 1);

// Re-evaluates the defining equation through the digit expansion (not the
// search kernel's divisibility path).
bool verify_solution(const Eq2Solution& s);
bool verify_solution(const Eq3Solution& s);

// The published Theorem 2 table rows: most carry (n, m, l, a, b); a few are
// truncated to three entries in the source and are matched by (n, m) plus
// the third value appearing as either l or b.
struct PaperTuple {
    long n, m;
    long l = -1;
    int a = -1;
    int b = -1;
    bool truncated = false;
};

const std::vector<PaperTuple>& paper_eq2_table();
const std::vector<Eq3Solution>& paper_eq3_solutions();

struct TableDiff {
    std::vector<Eq2Solution> matched;  // paper tuple verified as printed
    // printed tuple (possibly truncated) -> derived solution with the same
    // (n, m, a, b) but corrected or completed fields
    std::vector<std::pair<PaperTuple, Eq2Solution>> corrected;
    std::vector<Eq2Solution> missing_in_paper;   // derived but not printed
    std::vector<PaperTuple> missing_in_derived;  // printed but not derived
};

TableDiff diff_against_paper_tables(const std::vector<Eq2Solution>& derived);

std::string format_eq2_solution(const Eq2Solution& s);
std::string format_paper_tuple(const PaperTuple& t);

}  // namespace narayana
