#include "narayana/search.hpp"

#include "narayana/narayana_core.hpp"

namespace narayana {

namespace {

// Theorem 2 table as printed, both blocks, row-major.  Two rows are
// truncated to three entries in the source; they are flagged below.
constexpr struct {
    long n, m, l;
    int a, b;
} kFull[] = {
    // first block (a = 1 throughout)
    {5, 3, 2, 1, 2},    {6, 3, 2, 1, 3},    {4, 4, 2, 1, 3},    {11, 9, 2, 1, 3},
    {7, 3, 2, 1, 5},    {6, 4, 2, 1, 7},    {10, 5, 2, 1, 7},   {8, 3, 2, 1, 8},
    {5, 5, 2, 1, 8},    {7, 4, 2, 1, 11},   {6, 5, 2, 1, 11},   {9, 3, 2, 1, 12},
    {19, 6, 2, 1, 13},  {6, 6, 2, 1, 15},   {8, 4, 2, 1, 17},   {7, 5, 2, 1, 17},
    {10, 3, 2, 1, 18},  {7, 6, 2, 1, 23},   {9, 4, 2, 1, 25},   {8, 5, 2, 1, 26},
    {11, 3, 2, 1, 27},  {8, 6, 2, 1, 35},   {7, 7, 2, 1, 35},   {10, 4, 2, 1, 37},
    {9, 5, 2, 1, 38},   {12, 3, 2, 1, 40},  {15, 10, 2, 1, 49},
    // second block
    {6, 4, 2, 2, 3},    {9, 4, 3, 2, 3},    {7, 4, 2, 2, 5},    {8, 4, 2, 3, 5},
    {6, 5, 2, 2, 5},    {7, 5, 2, 3, 5},    {7, 6, 2, 4, 5},    {11, 3, 2, 4, 6},
    {15, 3, 3, 3, 6},   {6, 6, 2, 2, 7},    {7, 6, 2, 3, 7},    {10, 7, 3, 2, 7},
    {10, 8, 3, 3, 7},   {8, 4, 2, 2, 8},    {7, 5, 2, 2, 8},    {8, 5, 2, 3, 8},
    {8, 6, 2, 4, 8},    {7, 7, 2, 4, 8},    {8, 7, 2, 6, 8},    {13, 3, 2, 6, 9},
    {11, 9, 3, 4, 9},   {13, 12, 4, 3, 9},  {14, 3, 2, 8, 10},  {13, 3, 2, 5, 11},
    {13, 4, 2, 10, 11}, {11, 5, 2, 7, 11},  {7, 6, 2, 2, 11},   {8, 6, 2, 3, 11},
    {7, 7, 2, 3, 11},   {11, 10, 3, 4, 11}, {9, 4, 2, 2, 12},   {9, 5, 2, 3, 12},
    {9, 6, 2, 4, 12},   {9, 7, 2, 6, 12},   {9, 8, 2, 9, 12},   {11, 3, 2, 2, 13},
    {11, 4, 2, 4, 13},  {11, 5, 2, 6, 13},  {11, 6, 2, 8, 13},  {11, 7, 2, 12, 13},
    {19, 11, 4, 7, 13}, {13, 3, 2, 4, 14},  {13, 4, 2, 8, 14},  {13, 5, 2, 12, 14},
    {14, 4, 2, 11, 15}, {11, 6, 2, 7, 15},  {16, 9, 3, 9, 16},  {13, 5, 2, 10, 17},
    {8, 6, 2, 2, 17},   {7, 7, 2, 2, 17},   {8, 7, 2, 3, 17},   {11, 8, 2, 14, 17},
    {10, 4, 2, 2, 18},  {10, 5, 2, 3, 18},  {10, 6, 2, 4, 18},  {10, 7, 2, 6, 18},
    {10, 8, 2, 9, 18},  {10, 9, 2, 13, 18}, {13, 3, 2, 3, 19},  {13, 4, 2, 6, 19},
    {13, 5, 2, 9, 19},  {13, 6, 2, 12, 19}, {13, 7, 2, 18, 19}, {16, 3, 2, 9, 20},
    {16, 4, 2, 18, 20}, {11, 5, 2, 4, 20},  {11, 7, 2, 8, 20},  {11, 8, 2, 12, 20},
    {14, 3, 2, 4, 21},  {14, 4, 2, 8, 21},  {14, 5, 2, 12, 21}, {14, 6, 2, 16, 21},
    {13, 4, 2, 5, 23},  {14, 5, 2, 11, 23}, {13, 6, 2, 10, 23}, {11, 7, 2, 7, 23},
    {13, 7, 2, 15, 23}, {14, 7, 2, 22, 23}, {9, 6, 2, 2, 25},   {9, 7, 2, 3, 25},
    {11, 9, 2, 14, 25}, {16, 3, 2, 7, 26},  {16, 4, 2, 14, 26}, {16, 5, 2, 21, 26},
    {8, 7, 2, 2, 26},   {8, 8, 2, 3, 26},   {13, 8, 2, 20, 26}, {11, 4, 2, 2, 27},
    {11, 5, 2, 3, 27},  {11, 6, 2, 4, 27},  {11, 7, 2, 6, 27},  {11, 8, 2, 9, 27},
    {11, 9, 2, 13, 27}, {11, 10, 2, 19, 27}, {18, 3, 2, 14, 28}, {13, 3, 2, 2, 29},
    {13, 4, 2, 4, 29},  {13, 5, 2, 6, 29},  {13, 6, 2, 8, 29},  {13, 7, 2, 12, 29},
    {13, 8, 2, 18, 29}, {13, 9, 2, 26, 29}, {14, 6, 2, 11, 31}, {14, 5, 2, 8, 32},
    {14, 7, 2, 16, 32}, {14, 8, 2, 24, 32}, {20, 19, 4, 14, 33}, {19, 3, 2, 17, 34},
    {13, 5, 2, 5, 35},  {16, 6, 2, 21, 35}, {13, 7, 2, 10, 35}, {11, 8, 2, 7, 35},
    {13, 8, 2, 15, 35}, {14, 8, 2, 22, 35}, {10, 6, 2, 2, 37},  {10, 7, 2, 3, 37},
    {11, 10, 2, 14, 37}, {13, 10, 2, 30, 37}, {9, 7, 2, 2, 38}, {9, 8, 2, 3, 38},
    {13, 9, 2, 20, 38}, {13, 4, 2, 3, 39},  {13, 6, 2, 6, 39},  {13, 7, 2, 9, 39},
    {12, 4, 2, 2, 40},  {12, 5, 2, 3, 40},  {12, 6, 2, 4, 40},  {12, 7, 2, 6, 40},
    {12, 8, 2, 9, 40},  {12, 9, 2, 13, 40}, {12, 10, 2, 19, 40}, {12, 11, 2, 28, 40},
    {16, 4, 2, 9, 41},  {11, 5, 2, 2, 41},  {18, 5, 2, 29, 41}, {16, 6, 2, 18, 41},
    {11, 7, 2, 4, 41},  {16, 7, 2, 27, 41}, {11, 8, 2, 6, 41},  {13, 11, 2, 40, 41},
    {15, 3, 2, 3, 42},  {15, 4, 2, 6, 42},  {15, 5, 2, 9, 42},  {15, 6, 2, 12, 42},
    {15, 7, 2, 18, 42}, {15, 8, 2, 27, 42}, {15, 9, 2, 39, 42}, {14, 3, 2, 2, 43},
    {14, 4, 2, 4, 43},  {14, 5, 2, 6, 43},  {14, 6, 2, 8, 43},  {14, 7, 2, 12, 43},
    {14, 8, 2, 18, 43}, {14, 9, 2, 26, 43}, {14, 10, 2, 38, 43}, {13, 5, 2, 4, 44},
    {13, 7, 2, 8, 44},  {13, 8, 2, 12, 44}, {20, 10, 3, 8, 45}, {13, 6, 2, 5, 47},
    {14, 7, 2, 11, 47}, {13, 11, 2, 35, 47}, {11, 11, 2, 16, 48}, {19, 5, 2, 35, 50},
};

// Truncated rows "(9,3,3)" and "(5,4,5)".
constexpr struct {
    long n, m, z;
} kTruncated[] = {
    {9, 3, 3},
    {5, 4, 5},
};

}  // namespace

const std::vector<PaperTuple>& paper_eq2_table() {
    static const std::vector<PaperTuple> table = [] {
        std::vector<PaperTuple> t;
        for (const auto& r : kFull)
            t.push_back(PaperTuple{r.n, r.m, r.l, r.a, r.b, false});
        for (const auto& r : kTruncated) {
            PaperTuple p;
            p.n = r.n;
            p.m = r.m;
            p.l = r.z;  // the lone value; matched as l or b
            p.truncated = true;
            t.push_back(p);
        }
        return t;
    }();
    return table;
}

const std::vector<Eq3Solution>& paper_eq3_solutions() {
    static const std::vector<Eq3Solution> sols = [] {
        std::vector<Eq3Solution> s;
        s.push_back(Eq3Solution{8, 2, 1, 1, 2, 2, narayana(8)});
        s.push_back(Eq3Solution{16, 2, 1, 1, 2, 6, narayana(16)});
        return s;
    }();
    return sols;
}

}  // namespace narayana
