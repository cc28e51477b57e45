#include "narayana/search.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "narayana/narayana_core.hpp"

namespace narayana {

namespace {

template <typename Task>
void run_banded(long lo, long hi, int threads, Task&& task) {
    if (hi < lo) return;
    int workers = std::max(1, threads);
    std::atomic<long> next{lo};
    auto body = [&]() {
        for (;;) {
            long v = next.fetch_add(1);
            if (v > hi) break;
            task(v);
        }
    };
    if (workers == 1) {
        body();
        return;
    }
    std::vector<std::future<void>> fs;
    for (int t = 0; t < workers; ++t) fs.push_back(std::async(std::launch::async, body));
    for (auto& f : fs) f.get();
}

}  // namespace

std::vector<Eq2Solution> solve_eq2(int b_lo, int b_hi, long n_max, int threads) {
    if (b_lo < 2 || b_hi > 50 || b_lo > b_hi)
        throw std::domain_error("solve_eq2: base range within 2..50");
    if (n_max < 3) throw std::domain_error("solve_eq2: n_max >= 3");
    narayana_table().ensure(static_cast<std::size_t>(n_max));

    std::vector<std::vector<Eq2Solution>> bands(static_cast<std::size_t>(n_max) + 1);
    run_banded(3, n_max, threads, [&](long n) {
        const mpz_class& Nn = narayana_table().at_ready(static_cast<std::size_t>(n));
        std::vector<Eq2Solution>& out = bands[static_cast<std::size_t>(n)];
        for (long m = 3; m <= n; ++m) {
            mpz_class prod = Nn * narayana_table().at_ready(static_cast<std::size_t>(m));
            for (int b = b_lo; b <= b_hi; ++b) {
                auto r = as_repdigit(prod, b);
                if (r && r->second >= 2)
                    out.push_back(Eq2Solution{n, m, r->second, r->first, b, prod});
            }
        }
    });

    std::vector<Eq2Solution> all;
    for (auto& band : bands)
        all.insert(all.end(), band.begin(), band.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Eq3Solution> solve_eq3(int b_lo, int b_hi,
                                   const std::map<int, long>& k_cap_by_b, long l1_cap,
                                   long l2_cap, int threads) {
    if (b_lo < 2 || b_hi > 50 || b_lo > b_hi)
        throw std::domain_error("solve_eq3: base range within 2..50");
    long k_top = 3;
    for (int b = b_lo; b <= b_hi; ++b) {
        auto it = k_cap_by_b.find(b);
        if (it == k_cap_by_b.end()) throw std::domain_error("solve_eq3: missing k cap");
        k_top = std::max(k_top, it->second);
    }
    narayana_table().ensure(static_cast<std::size_t>(k_top));

    std::vector<std::vector<Eq3Solution>> bands(static_cast<std::size_t>(k_top) + 1);
    run_banded(3, k_top, threads, [&](long k) {
        const mpz_class& Nk = narayana_table().at_ready(static_cast<std::size_t>(k));
        if (Nk < 9) return;  // smallest two-repdigit product is [11]_2^2
        std::vector<Eq3Solution>& out = bands[static_cast<std::size_t>(k)];
        for (int b = b_lo; b <= b_hi; ++b) {
            if (k > k_cap_by_b.at(b)) continue;
            for (const RepdigitPair& f :
                 two_repdigit_factorizations(Nk, b, 2, l1_cap, l2_cap))
                out.push_back(Eq3Solution{k, b, f.a1, f.a2, f.l1, f.l2, Nk});
        }
    });

    std::vector<Eq3Solution> all;
    for (auto& band : bands)
        all.insert(all.end(), band.begin(), band.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Eq3Solution> solve_eq3(int b_lo, int b_hi, long k_max, long l1_cap,
                                   long l2_cap, int threads) {
    std::map<int, long> caps;
    for (int b = b_lo; b <= b_hi; ++b) caps[b] = k_max;
    return solve_eq3(b_lo, b_hi, caps, l1_cap, l2_cap, threads);
}

bool verify_solution(const Eq2Solution& s) {
    if (s.m < 3 || s.m > s.n || s.l < 2 || s.b < 2 || s.b > 50 || s.a < 1 ||
        s.a >= s.b)
        return false;
    mpz_class prod = narayana(static_cast<std::size_t>(s.n)) *
                     narayana(static_cast<std::size_t>(s.m));
    std::vector<int> digits = digits_in_base(prod, s.b);
    if (static_cast<long>(digits.size()) != s.l) return false;
    for (int d : digits)
        if (d != s.a) return false;
    return true;
}

bool verify_solution(const Eq3Solution& s) {
    if (s.k < 3 || s.b < 2 || s.a1 < 1 || s.a1 > s.a2 || s.a2 >= s.b || s.l1 < 2 ||
        s.l1 > s.l2)
        return false;
    mpz_class nk = narayana(static_cast<std::size_t>(s.k));
    mpz_class r1 = repdigit_value(s.a1, s.b, s.l1);
    if (!mpz_divisible_p(nk.get_mpz_t(), r1.get_mpz_t())) return false;
    mpz_class cof = nk / r1;
    std::vector<int> digits = digits_in_base(cof, s.b);
    if (static_cast<long>(digits.size()) != s.l2) return false;
    for (int d : digits)
        if (d != s.a2) return false;
    return true;
}

TableDiff diff_against_paper_tables(const std::vector<Eq2Solution>& derived) {
    TableDiff diff;
    std::vector<bool> claimed(derived.size(), false);

    for (const PaperTuple& t : paper_eq2_table()) {
        std::optional<std::size_t> exact, corrected;
        for (std::size_t i = 0; i < derived.size(); ++i) {
            const Eq2Solution& s = derived[i];
            if (s.n != t.n || s.m != t.m) continue;
            if (t.truncated) {
                // the lone printed value must appear as the length or base
                if (s.l == t.l || s.b == static_cast<int>(t.l)) corrected = i;
            } else if (s.a == t.a && s.b == t.b) {
                if (s.l == t.l)
                    exact = i;
                else
                    corrected = i;
            }
        }
        if (exact) {
            diff.matched.push_back(derived[*exact]);
            claimed[*exact] = true;
        } else if (corrected) {
            diff.corrected.emplace_back(t, derived[*corrected]);
            claimed[*corrected] = true;
        } else {
            diff.missing_in_derived.push_back(t);
        }
    }
    for (std::size_t i = 0; i < derived.size(); ++i)
        if (!claimed[i]) diff.missing_in_paper.push_back(derived[i]);
    return diff;
}

std::string format_eq2_solution(const Eq2Solution& s) {
    std::ostringstream os;
    os << "(" << s.n << "," << s.m << "," << s.l << "," << s.a << "," << s.b << ")";
    return os.str();
}

std::string format_paper_tuple(const PaperTuple& t) {
    std::ostringstream os;
    if (t.truncated)
        os << "(" << t.n << "," << t.m << "," << t.l << ")";
    else
        os << "(" << t.n << "," << t.m << "," << t.l << "," << t.a << "," << t.b << ")";
    return os.str();
}

}  // namespace narayana
