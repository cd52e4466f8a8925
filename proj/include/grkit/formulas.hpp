#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grkit/bigint.hpp"

namespace grkit {

using GrValue = Int;

enum class CaseW { a1, a2, a3, a4 };
enum class CaseF { b1, b2, b3, b4, b5, b6, b7, b8 };

inline const char* to_string(CaseW c) {
    static const char* names[] = {"a1", "a2", "a3", "a4"};
    return names[int(c)];
}
inline const char* to_string(CaseF c) {
    static const char* names[] = {"b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8"};
    return names[int(c)];
}

inline bool w_in_domain(int k, int r) { return k >= 1 && r >= 0 && r <= k; }
inline bool f_in_domain(int k, int s, int r) {
    return k >= 1 && s >= 0 && r >= 0 && s + r <= k;
}

inline CaseW case_of_w(int k, int r) {
    if (!w_in_domain(k, r))
        throw error("w domain: need k >= 1, 0 <= r <= k");
    bool ke = (k - r) % 2 == 0, re = r % 2 == 0;
    if (ke && re) return CaseW::a1;
    if (!ke && re) return CaseW::a2;
    if (!ke && !re) return CaseW::a3;
    return CaseW::a4;
}

inline CaseF case_of_f(int k, int s, int r) {
    if (!f_in_domain(k, s, r))
        throw error("f domain: need k >= 1, s,r >= 0, s+r <= k");
    bool se = s % 2 == 0, re = r % 2 == 0, eq = (s + r == k);
    if (se && re) return eq ? CaseF::b1 : CaseF::b2;
    if (!se && re) return eq ? CaseF::b3 : CaseF::b4;
    if (!se && !re) return eq ? CaseF::b5 : CaseF::b6;
    return eq ? CaseF::b7 : CaseF::b8;
}

// GR_k((k-r)K3, rH) - 1 for H in {H1,H2}
inline Int w(int k, int r) {
    switch (case_of_w(k, r)) {
        case CaseW::a1: return ipow(5, (k - r) / 2) * ipow(17, r / 2);
        case CaseW::a2: return 2 * ipow(5, (k - r - 1) / 2) * ipow(17, r / 2);
        case CaseW::a3: return 8 * ipow(5, (k - r - 1) / 2) * ipow(17, (r - 1) / 2);
        case CaseW::a4: return 4 * ipow(5, (k - r) / 2) * ipow(17, (r - 1) / 2);
    }
    throw error("unreachable");
}

// GR_k((k-s-r)P3, sK3, rH3) - 1. Floor terms are exact rational floors, so the
// b1/b3/b8 formulas degenerate correctly at r = 0 resp. s = 0.
inline Int f(int k, int s, int r) {
    switch (case_of_f(k, s, r)) {
        case CaseF::b1: return ipow(5, s / 2) * floor_rat(21 * rpow(17, (r - 2) / 2));
        case CaseF::b2: return 2 * ipow(5, s / 2) * ipow(17, r / 2);
        case CaseF::b3: return ipow(5, (s - 1) / 2) * floor_rat(42 * rpow(17, (r - 2) / 2));
        case CaseF::b4: return 4 * ipow(5, (s - 1) / 2) * ipow(17, r / 2);
        case CaseF::b5: return 10 * ipow(5, (s - 1) / 2) * ipow(17, (r - 1) / 2);
        case CaseF::b6: return 16 * ipow(5, (s - 1) / 2) * ipow(17, (r - 1) / 2);
        case CaseF::b7: return 4 * ipow(5, s / 2) * ipow(17, (r - 1) / 2);
        case CaseF::b8: return floor_rat(32 * rpow(5, (s - 2) / 2)) * ipow(17, (r - 1) / 2);
    }
    throw error("unreachable");
}

inline Int gr_w(int k, int r) { return w(k, r) + 1; }
inline Int gr_f(int k, int s, int r) { return f(k, s, r) + 1; }

// GR_k(H) for H = H1/H2/H3; cross-checked against w(k,k)+1 resp. f(k,0,k)+1.
inline Int gr_main(int k, int h_index) {
    if (k < 1) throw error("gr_main: k >= 1 required");
    if (h_index < 1 || h_index > 3) throw error("gr_main: h index must be 1..3");
    Int r2 = h_index == 3 ? 22 : 18;
    Int v = k % 2 == 0 ? (r2 - 1) * ipow(17, (k - 2) / 2) + 1
                       : 4 * ipow(17, (k - 1) / 2) + 1;
    Int check = h_index == 3 ? gr_f(k, 0, k) : gr_w(k, k);
    if (v != check) throw error("gr_main: closed form disagrees with w/f");
    return v;
}

inline Int ramsey_constant(const std::string& name) {
    static const std::map<std::string, int> table = {
        {"R2(K3)", 6},   {"R(K3,K3)", 6},  {"R2(H1)", 18},  {"R2(H2)", 18},
        {"R2(H3)", 22},  {"R(K3,H1)", 9},  {"R(K3,H2)", 9}, {"R(K3,H3)", 11},
        {"R(K3,K4)", 9}, {"R(P3,K3)", 5},  {"R(P3,H3)", 7},
    };
    auto it = table.find(name);
    if (it == table.end()) throw error("unknown Ramsey constant '" + name + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// Tables 1 and 2: ratios of shifted functions to w(k,r) / f(k,s,r), with
// Table 2's sub-split cells conditioned on s or r of the base argument.
// ---------------------------------------------------------------------------

namespace tables {

struct Cell {
    enum Kind { Plain, SplitS, SplitR } kind;
    int n0, d0;  // plain value, or the value at s == lo / r == lo
    int lo;
    int n1, d1;  // value for s >= hi / r >= hi
    int hi;
};

constexpr Cell C(int n, int d) { return {Cell::Plain, n, d, 0, 0, 0, 0}; }
constexpr Cell SS(int s0, int n0, int d0, int s1, int n1, int d1) {
    return {Cell::SplitS, n0, d0, s0, n1, d1, s1};
}
constexpr Cell SR(int r0, int n0, int d0, int r1, int n1, int d1) {
    return {Cell::SplitR, n0, d0, r0, n1, d1, r1};
}

inline std::optional<Rat> lookup(const Cell& c, int s, int r) {
    switch (c.kind) {
        case Cell::Plain: return Rat(c.n0, c.d0);
        case Cell::SplitS:
            if (s == c.lo) return Rat(c.n0, c.d0);
            if (s >= c.hi) return Rat(c.n1, c.d1);
            return std::nullopt;
        case Cell::SplitR:
            if (r == c.lo) return Rat(c.n0, c.d0);
            if (r >= c.hi) return Rat(c.n1, c.d1);
            return std::nullopt;
    }
    return std::nullopt;
}

struct Row1 {
    const char* name;
    int dk, dr;
    Cell cells[4];  // a1..a4
};

inline const std::vector<Row1>& table1() {
    static const std::vector<Row1> rows = {
        {"w(k-1,r)", -1, 0, {C(2, 5), C(1, 2), C(1, 2), C(2, 5)}},
        {"w(k-2,r)", -2, 0, {C(1, 5), C(1, 5), C(1, 5), C(1, 5)}},
        {"w(k,r-1)", 0, -1, {C(8, 17), C(10, 17), C(5, 8), C(1, 2)}},
        {"w(k-1,r-1)", -1, -1, {C(4, 17), C(4, 17), C(1, 4), C(1, 4)}},
        {"w(k-2,r-1)", -2, -1, {C(8, 85), C(2, 17), C(1, 8), C(1, 10)}},
        {"w(k,r-2)", 0, -2, {C(5, 17), C(5, 17), C(5, 17), C(5, 17)}},
        {"w(k-1,r-2)", -1, -2, {C(2, 17), C(5, 34), C(5, 34), C(2, 17)}},
        {"w(k-2,r-2)", -2, -2, {C(1, 17), C(1, 17), C(1, 17), C(1, 17)}},
    };
    return rows;
}

struct Row2 {
    const char* name;
    int dk, ds, dr;
    Cell cells[8];  // b1..b8
};

inline const std::vector<Row2>& table2() {
    static const std::vector<Row2> rows = {
        {"f(k-1,s-1,r)", -1, -1, 0,
         {C(2, 5), C(2, 5), C(1, 2), C(1, 2), C(2, 5),
          SS(1, 3, 8, 3, 2, 5), C(1, 2), C(1, 2)}},
        {"f(k-2,s-2,r)", -2, -2, 0,
         {C(1, 5), C(1, 5), C(1, 5), C(1, 5), C(1, 5), C(1, 5), C(1, 5),
          SS(2, 3, 16, 4, 1, 5)}},
        {"f(k,s+1,r-1)", 0, 1, -1,
         {C(10, 21), C(8, 17), C(10, 21), C(8, 17),
          SR(1, 1, 2, 3, 21, 34), C(5, 8), SR(1, 1, 2, 3, 21, 34),
          SS(0, 2, 3, 2, 5, 8)}},
        {"f(k-1,s,r-1)", -1, 0, -1,
         {C(4, 21), SS(0, 3, 17, 2, 16, 85), C(5, 21), C(4, 17),
          SR(1, 1, 5, 3, 21, 85), C(1, 4), SR(1, 1, 4, 3, 21, 68),
          SS(0, 1, 3, 2, 5, 16)}},
        {"f(k,s,r-1)", 0, 0, -1,
         {SS(0, 2, 7, 2, 32, 105), SS(0, 3, 17, 2, 16, 85), C(8, 21), C(4, 17),
          C(2, 5), C(1, 4), C(1, 2), SS(0, 1, 3, 2, 5, 16)}},
        {"f(k-1,s-1,r-1)", -1, -1, -1,
         {C(16, 105), C(8, 85), SS(1, 1, 7, 3, 16, 105), SS(1, 3, 34, 3, 8, 85),
          C(1, 5), C(1, 8), C(1, 5), C(1, 8)}},
        {"f(k-2,s-1,r-1)", -2, -1, -1,
         {C(2, 21), C(8, 85), C(2, 21), SS(1, 3, 34, 3, 8, 85),
          SR(1, 1, 10, 3, 21, 170), C(1, 8), SR(1, 1, 10, 3, 21, 170), C(1, 8)}},
        {"f(k,s+2,r-2)", 0, 2, -2,
         {SR(2, 5, 21, 4, 5, 17), C(5, 17), SR(2, 5, 21, 4, 5, 17), C(5, 17),
          C(5, 17), C(5, 17), C(5, 17), SS(0, 16, 51, 2, 5, 17)}},
        {"f(k,s+1,r-2)", 0, 1, -2,
         {C(4, 21), C(2, 17), C(5, 21), C(5, 34), C(16, 85), C(2, 17), C(4, 17),
          SS(0, 8, 51, 2, 5, 34)}},
        {"f(k-1,s+1,r-2)", -1, 1, -2,
         {SR(2, 2, 21, 4, 2, 17), C(2, 17), SR(2, 5, 42, 4, 5, 34), C(5, 34),
          C(2, 17), C(2, 17), C(5, 34), SS(0, 8, 51, 2, 5, 34)}},
        {"f(k-2,s,r-2)", -2, 0, -2,
         {SR(2, 1, 21, 4, 1, 17), C(1, 17), SR(2, 1, 21, 4, 1, 17), C(1, 17),
          C(1, 17), C(1, 17), C(1, 17), C(1, 17)}},
        {"f(k-1,s,r-2)", -1, 0, -2,
         {C(2, 21), C(1, 17), C(2, 21), C(1, 17), C(8, 85), C(1, 17),
          SS(0, 3, 34, 2, 8, 85), C(1, 17)}},
        {"f(k,s,r-2)", 0, 0, -2,
         {C(2, 21), C(1, 17), C(2, 21), C(1, 17), C(8, 85), C(1, 17),
          SS(0, 3, 34, 2, 8, 85), C(1, 17)}},
    };
    return rows;
}

}  // namespace tables

// Returns w(k+dk, r+dr) / w(k,r) exactly and checks it against the Table 1
// cell for the case of (k,r); mismatch is a hard error.
inline Rat ratio_check_table1(const std::string& row_name, int k, int r) {
    for (const auto& row : tables::table1()) {
        if (row_name != row.name) continue;
        int kk = k + row.dk, rr = r + row.dr;
        if (!w_in_domain(kk, rr))
            throw error("table1: shifted argument out of domain");
        Rat got = Rat(w(kk, rr)) / Rat(w(k, r));
        auto want = tables::lookup(row.cells[int(case_of_w(k, r))], 0, r);
        if (!want) throw error("table1: no cell entry applies");
        if (got != *want)
            throw error("table1 mismatch at row " + row_name + " (k=" +
                        std::to_string(k) + ", r=" + std::to_string(r) + ")");
        return got;
    }
    throw error("table1: unknown row '" + row_name + "'");
}

inline Rat ratio_check_table2(const std::string& row_name, int k, int s, int r) {
    for (const auto& row : tables::table2()) {
        if (row_name != row.name) continue;
        int kk = k + row.dk, ss = s + row.ds, rr = r + row.dr;
        if (!f_in_domain(kk, ss, rr))
            throw error("table2: shifted argument out of domain");
        Rat got = Rat(f(kk, ss, rr)) / Rat(f(k, s, r));
        auto want = tables::lookup(row.cells[int(case_of_f(k, s, r))], s, r);
        if (!want) throw error("table2: no cell entry applies");
        if (got != *want)
            throw error("table2 mismatch at row " + row_name + " (k=" +
                        std::to_string(k) + ", s=" + std::to_string(s) +
                        ", r=" + std::to_string(r) + ")");
        return got;
    }
    throw error("table2: unknown row '" + row_name + "'");
}

// ---------------------------------------------------------------------------
// Inequality families (a), (b), (c). Chains are split into pairwise links;
// a link is checked when every shifted argument is in domain, else skipped.
// ---------------------------------------------------------------------------

struct SweepStats {
    long checked = 0, skipped = 0, failed = 0;
    void operator+=(const SweepStats& o) {
        checked += o.checked;
        skipped += o.skipped;
        failed += o.failed;
    }
};

namespace detail_ineq {

using Term = std::function<std::optional<Int>()>;
enum class Rel { Gt, Ge, Eq };

inline void chain(SweepStats& st, const std::vector<Term>& terms,
                  const std::vector<Rel>& rels) {
    std::vector<std::optional<Int>> vals;
    vals.reserve(terms.size());
    for (const auto& t : terms) vals.push_back(t());
    for (size_t i = 0; i < rels.size(); ++i) {
        const auto& a = vals[i];
        const auto& b = vals[i + 1];
        if (!a || !b) {
            ++st.skipped;
            continue;
        }
        bool ok = rels[i] == Rel::Gt ? (*a > *b)
                : rels[i] == Rel::Ge ? (*a >= *b)
                                     : (*a == *b);
        ++st.checked;
        if (!ok) ++st.failed;
    }
}

}  // namespace detail_ineq

inline SweepStats check_inequalities_detail(char family, int k, int s, int r) {
    using detail_ineq::Rel;
    using detail_ineq::Term;
    SweepStats st;
    auto CH = [&st](std::vector<Term> ts, std::vector<Rel> rs) {
        detail_ineq::chain(st, ts, rs);
    };

    if (family == 'a') {
        if (k < 3 || r < 1 || r > k)
            throw error("family (a) needs k >= 3 and 1 <= r <= k");
        auto W = [k, r](int dk, int dr) -> std::optional<Int> {
            if (!w_in_domain(k + dk, r + dr)) return std::nullopt;
            return w(k + dk, r + dr);
        };
        auto T = [&W](int c, int dk, int dr, Int add = 0) -> Term {
            return [&W, c, dk, dr, add]() -> std::optional<Int> {
                auto v = W(dk, dr);
                if (!v) return std::nullopt;
                return c * *v + add;
            };
        };
        auto S = [](std::vector<Term> ts) -> Term {
            return [ts]() -> std::optional<Int> {
                Int tot = 0;
                for (const auto& t : ts) {
                    auto v = t();
                    if (!v) return std::nullopt;
                    tot += *v;
                }
                return tot;
            };
        };
        Term lhs = [k, r]() -> std::optional<Int> { return w(k, r) + 1; };
        CH({lhs, T(3, -1, -1, r), T(1, -1, -1, k + 1)}, {Rel::Gt, Rel::Ge});
        CH({lhs, T(2, -1, 0), T(8, -2, -1), T(5, -2, -1, r), T(1, -1, 0, k)},
           {Rel::Gt, Rel::Ge, Rel::Ge, Rel::Ge});
        CH({lhs, T(5, -2, 0), T(17, -2, -2), T(12, -2, -2, r)},
           {Rel::Gt, Rel::Eq, Rel::Ge});
        CH({lhs, S({T(1, -1, -1), T(1, 0, -1)})}, {Rel::Gt});
        CH({lhs, S({T(2, -1, -2), T(1, 0, -1), T(1, -2, -2)}),
            S({T(1, 0, -2), T(2, -1, -1)}), S({T(1, -1, -2), T(1, -2, -2)}),
            T(3, -2, -2)},
           {Rel::Gt, Rel::Ge, Rel::Ge, Rel::Ge});
        return st;
    }

    auto F = [k, s, r](int dk, int ds, int dr) -> std::optional<Int> {
        if (!f_in_domain(k + dk, s + ds, r + dr)) return std::nullopt;
        return f(k + dk, s + ds, r + dr);
    };
    auto T = [&F](int c, int dk, int ds, int dr, Int add = 0) -> Term {
        return [&F, c, dk, ds, dr, add]() -> std::optional<Int> {
            auto v = F(dk, ds, dr);
            if (!v) return std::nullopt;
            return c * *v + add;
        };
    };
    auto S = [](std::vector<Term> ts) -> Term {
        return [ts]() -> std::optional<Int> {
            Int tot = 0;
            for (const auto& t : ts) {
                auto v = t();
                if (!v) return std::nullopt;
                tot += *v;
            }
            return tot;
        };
    };
    Term lhs = [k, s, r]() -> std::optional<Int> { return f(k, s, r) + 1; };

    if (family == 'b') {
        if (k < 3 || s + r < 1 || !f_in_domain(k, s, r))
            throw error("family (b) needs k >= 3 and s + r >= 1");
        CH({lhs, T(2, 0, 0, -1), T(1, 0, 0, -1, s + r + 1)}, {Rel::Gt, Rel::Ge});
        CH({lhs, T(2, -1, -1, 0), T(1, -1, -1, 0, s + r)}, {Rel::Gt, Rel::Ge});
        CH({lhs, T(3, -1, 0, -1), T(2, -1, 0, -1, r)}, {Rel::Gt, Rel::Ge});
        CH({lhs, T(8, -2, -1, -1), T(5, -2, -1, -1, r)}, {Rel::Gt, Rel::Ge});
        CH({lhs, S({T(1, -1, 0, -1), T(1, 0, 1, -1)})}, {Rel::Gt});
        CH({lhs, T(5, -2, -2, 0)}, {Rel::Gt});
        CH({lhs, T(5, -1, -1, -1)}, {Rel::Gt});
        return st;
    }

    if (family == 'c') {
        if (k < 3 || r < 2 || !f_in_domain(k, s, r))
            throw error("family (c) needs k >= 3 and r >= 2");
        auto MX = [](Term t, Int c) -> Term {
            return [t, c]() -> std::optional<Int> {
                auto v = t();
                if (!v) return std::nullopt;
                return *v > c ? *v : c;
            };
        };
        CH({lhs, S({T(1, -1, 1, -2), T(2, -1, 0, -1), [r] { return std::optional<Int>(r); }})},
           {Rel::Gt});
        CH({lhs, T(7, -1, 0, -2, r)}, {Rel::Gt});
        CH({lhs, T(17, -2, 0, -2), T(14, -2, 0, -2, r)}, {Rel::Gt, Rel::Ge});
        CH({lhs, S({T(2, -1, 0, -1), T(1, 0, 1, -2)})}, {Rel::Gt});
        CH({lhs, S({T(2, -1, 0, -1), T(1, 0, 2, -2)})}, {Rel::Gt});
        CH({lhs, S({T(4, -1, 0, -2), T(1, 0, 1, -1)})}, {Rel::Gt});
        // brace expansion: {A;B} + {C;D}
        {
            Term first[2] = {S({T(1, 0, 1, -2), T(1, 0, 0, -1)}),
                             S({T(1, -1, 1, -2), T(1, 0, 1, -1)})};
            Term second[2] = {T(3, -2, 0, -2), T(2, -1, 0, -2)};
            for (auto& a : first)
                for (auto& b : second) CH({lhs, S({a, b})}, {Rel::Gt});
        }
        CH({lhs, S({T(3, 0, 1, -2), T(1, -2, 0, -2), MX(T(1, -1, 0, -2), 4)})},
           {Rel::Gt});
        CH({lhs, S({T(3, -1, 1, -2), T(3, -1, 1, -2), T(1, -2, 0, -2)})}, {Rel::Gt});
        CH({lhs, S({T(3, -1, 1, -2), T(6, -2, 0, -2)})}, {Rel::Gt});
        CH({lhs, S({T(3, -1, 1, -2), T(11, -2, 0, -2), T(-1, -1, 1, -2)})}, {Rel::Gt});
        CH({lhs, S({T(3, -1, 1, -2), T(1, 0, 1, -2), T(4, -2, 0, -2)})}, {Rel::Gt});
        CH({lhs, S({T(3, -1, 1, -2), T(1, 0, 1, -2), T(1, -1, 1, -2), T(2, -2, 0, -2)})},
           {Rel::Gt});
        CH({lhs, S({T(3, -1, 1, -2), T(1, 0, 1, -2), T(2, -1, 0, -2), T(1, -2, 0, -2)})},
           {Rel::Gt});
        return st;
    }
    throw error("unknown inequality family");
}

inline bool check_inequalities(char family, int k, int s, int r) {
    return check_inequalities_detail(family, k, s, r).failed == 0;
}

// ---------------------------------------------------------------------------
// Appendix: per shifted function, a closed form in the base arguments for
// each case. hp(b,t) is b^(t/2); within a case t is always even.
// ---------------------------------------------------------------------------

namespace appendix {

inline Rat hp(int base, int twice) {
    if (twice % 2 != 0) throw error("appendix: half exponent not integral");
    return rpow(base, twice / 2);
}
inline Rat fq(const Rat& q) { return Rat(floor_rat(q)); }

using WForm = Rat (*)(int, int);
using FForm = Rat (*)(int, int, int);

struct WRow {
    const char* name;
    int dk, dr;
    WForm forms[4];
};
struct FRow {
    const char* name;
    int dk, ds, dr;
    FForm forms[8];
};

inline const std::vector<WRow>& w_rows() {
    static const std::vector<WRow> rows = {
        {"w(k-1,r)", -1, 0,
         {[](int k, int r) { return Rat(2, 5) * hp(5, k - r) * hp(17, r); },
          [](int k, int r) { return hp(5, k - r - 1) * hp(17, r); },
          [](int k, int r) { return 4 * hp(5, k - r - 1) * hp(17, r - 1); },
          [](int k, int r) { return Rat(8, 5) * hp(5, k - r) * hp(17, r - 1); }}},
        {"w(k-2,r)", -2, 0,
         {[](int k, int r) { return Rat(1, 5) * hp(5, k - r) * hp(17, r); },
          [](int k, int r) { return Rat(2, 5) * hp(5, k - r - 1) * hp(17, r); },
          [](int k, int r) { return Rat(8, 5) * hp(5, k - r - 1) * hp(17, r - 1); },
          [](int k, int r) { return Rat(4, 5) * hp(5, k - r) * hp(17, r - 1); }}},
        {"w(k,r-1)", 0, -1,
         {[](int k, int r) { return Rat(8, 17) * hp(5, k - r) * hp(17, r); },
          [](int k, int r) { return Rat(20, 17) * hp(5, k - r - 1) * hp(17, r); },
          [](int k, int r) { return 5 * hp(5, k - r - 1) * hp(17, r - 1); },
          [](int k, int r) { return 2 * hp(5, k - r) * hp(17, r - 1); }}},
        {"w(k-1,r-1)", -1, -1,
         {[](int k, int r) { return Rat(4, 17) * hp(5, k - r) * hp(17, r); },
          [](int k, int r) { return Rat(8, 17) * hp(5, k - r - 1) * hp(17, r); },
          [](int k, int r) { return 2 * hp(5, k - r - 1) * hp(17, r - 1); },
          [](int k, int r) { return hp(5, k - r) * hp(17, r - 1); }}},
        {"w(k-2,r-1)", -2, -1,
         {[](int k, int r) { return Rat(8, 85) * hp(5, k - r) * hp(17, r); },
          [](int k, int r) { return Rat(4, 17) * hp(5, k - r - 1) * hp(17, r); },
          [](int k, int r) { return hp(5, k - r - 1) * hp(17, r - 1); },
          [](int k, int r) { return Rat(2, 5) * hp(5, k - r) * hp(17, r - 1); }}},
        {"w(k,r-2)", 0, -2,
         {[](int k, int r) { return Rat(5, 17) * hp(5, k - r) * hp(17, r); },
          [](int k, int r) { return Rat(10, 17) * hp(5, k - r - 1) * hp(17, r); },
          [](int k, int r) { return Rat(40, 17) * hp(5, k - r - 1) * hp(17, r - 1); },
          [](int k, int r) { return Rat(20, 17) * hp(5, k - r) * hp(17, r - 1); }}},
        {"w(k-1,r-2)", -1, -2,
         {[](int k, int r) { return Rat(2, 17) * hp(5, k - r) * hp(17, r); },
          [](int k, int r) { return Rat(5, 17) * hp(5, k - r - 1) * hp(17, r); },
          [](int k, int r) { return Rat(20, 17) * hp(5, k - r - 1) * hp(17, r - 1); },
          [](int k, int r) { return Rat(8, 17) * hp(5, k - r) * hp(17, r - 1); }}},
        {"w(k-2,r-2)", -2, -2,
         {[](int k, int r) { return Rat(1, 17) * hp(5, k - r) * hp(17, r); },
          [](int k, int r) { return Rat(2, 17) * hp(5, k - r - 1) * hp(17, r); },
          [](int k, int r) { return Rat(8, 17) * hp(5, k - r - 1) * hp(17, r - 1); },
          [](int k, int r) { return Rat(4, 17) * hp(5, k - r) * hp(17, r - 1); }}},
    };
    return rows;
}

inline const std::vector<FRow>& f_rows() {
    static const std::vector<FRow> rows = {
        {"f(k-1,s-1,r)", -1, -1, 0,
         {[](int k, int s, int r) { return Rat(2, 5) * hp(5, s) * fq(21 * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(4, 5) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return hp(5, s - 1) * fq(21 * hp(17, r - 2)); },
          [](int k, int s, int r) { return 2 * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return 4 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return fq(Rat(32, 5) * hp(5, s - 1)) * hp(17, r - 1); },
          [](int k, int s, int r) { return 2 * hp(5, s) * hp(17, r - 1); },
          [](int k, int s, int r) { return 16 * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k-2,s-2,r)", -2, -2, 0,
         {[](int k, int s, int r) { return Rat(1, 5) * hp(5, s) * fq(21 * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(2, 5) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return Rat(1, 5) * hp(5, s - 1) * fq(42 * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(4, 5) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return 2 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(16, 5) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(4, 5) * hp(5, s) * hp(17, r - 1); },
          [](int k, int s, int r) { return fq(Rat(32, 5) * hp(5, s - 2)) * hp(17, r - 1); }}},
        {"f(k,s+1,r-1)", 0, 1, -1,
         {[](int k, int s, int r) { return 10 * hp(5, s) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return 20 * hp(5, s - 1) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(32, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return 5 * hp(5, s - 1) * fq(Rat(21, 17) * hp(17, r - 1)); },
          [](int k, int s, int r) { return 10 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return hp(5, s) * fq(Rat(42, 17) * hp(17, r - 1)); },
          [](int k, int s, int r) { return 20 * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k-1,s,r-1)", -1, 0, -1,
         {[](int k, int s, int r) { return 4 * hp(5, s) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(Rat(32, 5) * hp(5, s)) * hp(17, r); },
          [](int k, int s, int r) { return 10 * hp(5, s - 1) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return hp(5, s - 1) * fq(Rat(42, 17) * hp(17, r - 1)); },
          [](int k, int s, int r) { return 4 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return hp(5, s) * fq(Rat(21, 17) * hp(17, r - 1)); },
          [](int k, int s, int r) { return 10 * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k,s,r-1)", 0, 0, -1,
         {[](int k, int s, int r) { return fq(Rat(32, 5) * hp(5, s)) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(Rat(32, 5) * hp(5, s)) * hp(17, r); },
          [](int k, int s, int r) { return 16 * hp(5, s - 1) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return 4 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return 4 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return 2 * hp(5, s) * hp(17, r - 1); },
          [](int k, int s, int r) { return 10 * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k-1,s-1,r-1)", -1, -1, -1,
         {[](int k, int s, int r) { return Rat(16, 5) * hp(5, s) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(16, 85) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return fq(Rat(32, 5) * hp(5, s - 1)) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(Rat(32, 5) * hp(5, s - 1)) * hp(17, r); },
          [](int k, int s, int r) { return 2 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return 2 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(4, 5) * hp(5, s) * hp(17, r - 1); },
          [](int k, int s, int r) { return 4 * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k-2,s-1,r-1)", -2, -1, -1,
         {[](int k, int s, int r) { return 2 * hp(5, s) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(16, 85) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return 4 * hp(5, s - 1) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(Rat(32, 5) * hp(5, s - 1)) * hp(17, r); },
          [](int k, int s, int r) { return hp(5, s - 1) * fq(Rat(21, 17) * hp(17, r - 1)); },
          [](int k, int s, int r) { return 2 * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(1, 5) * hp(5, s) * fq(Rat(42, 17) * hp(17, r - 1)); },
          [](int k, int s, int r) { return 4 * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k,s+2,r-2)", 0, 2, -2,
         {[](int k, int s, int r) { return 5 * hp(5, s) * fq(Rat(21, 17) * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(10, 17) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return 5 * hp(5, s - 1) * fq(Rat(42, 17) * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(20, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return Rat(50, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(80, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(20, 17) * hp(5, s) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(160, 17) * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k,s+1,r-2)", 0, 1, -2,
         {[](int k, int s, int r) { return 4 * hp(5, s) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(4, 17) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return 10 * hp(5, s - 1) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(10, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return Rat(32, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(32, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(80, 17) * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k-1,s+1,r-2)", -1, 1, -2,
         {[](int k, int s, int r) { return hp(5, s) * fq(Rat(42, 17) * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(4, 17) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return 5 * hp(5, s - 1) * fq(Rat(21, 17) * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(10, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return Rat(20, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(32, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(10, 17) * hp(5, s) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(80, 17) * hp(5, s - 2) * hp(17, r - 1); }}},
        {"f(k-2,s,r-2)", -2, 0, -2,
         {[](int k, int s, int r) { return hp(5, s) * fq(Rat(21, 17) * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(2, 17) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return hp(5, s - 1) * fq(Rat(42, 17) * hp(17, r - 2)); },
          [](int k, int s, int r) { return Rat(4, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return Rat(10, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(4, 17) * hp(5, s) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(32 * hp(5, s - 2)) * hp(17, r - 1); }}},
        {"f(k,s,r-2)", 0, 0, -2,
         {[](int k, int s, int r) { return 2 * hp(5, s) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(2, 17) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return 4 * hp(5, s - 1) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(4, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(Rat(32, 5) * hp(5, s)) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(32 * hp(5, s - 2)) * hp(17, r - 1); }}},
        {"f(k-1,s,r-2)", -1, 0, -2,
         {[](int k, int s, int r) { return 2 * hp(5, s) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(2, 17) * hp(5, s) * hp(17, r); },
          [](int k, int s, int r) { return 4 * hp(5, s - 1) * hp(17, r - 2); },
          [](int k, int s, int r) { return Rat(4, 17) * hp(5, s - 1) * hp(17, r); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(16, 17) * hp(5, s - 1) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(Rat(32, 5) * hp(5, s)) * hp(17, r - 1); },
          [](int k, int s, int r) { return Rat(1, 17) * fq(32 * hp(5, s - 2)) * hp(17, r - 1); }}},
    };
    return rows;
}

}  // namespace appendix

struct AppendixReport {
    int checked = 0, skipped = 0;
    bool ok = true;
    std::vector<std::string> skipped_rows;
};

inline AppendixReport appendix_consistency(int k, int r) {
    CaseW c = case_of_w(k, r);
    AppendixReport rep;
    for (const auto& row : appendix::w_rows()) {
        int kk = k + row.dk, rr = r + row.dr;
        if (!w_in_domain(kk, rr)) {
            ++rep.skipped;
            rep.skipped_rows.push_back(row.name);
            continue;
        }
        Rat v = row.forms[int(c)](k, r);
        ++rep.checked;
        if (v != Rat(w(kk, rr))) rep.ok = false;
    }
    return rep;
}

inline AppendixReport appendix_consistency(int k, int s, int r) {
    CaseF c = case_of_f(k, s, r);
    AppendixReport rep;
    for (const auto& row : appendix::f_rows()) {
        int kk = k + row.dk, ss = s + row.ds, rr = r + row.dr;
        if (!f_in_domain(kk, ss, rr)) {
            ++rep.skipped;
            rep.skipped_rows.push_back(row.name);
            continue;
        }
        Rat v = row.forms[int(c)](k, s, r);
        ++rep.checked;
        if (v != Rat(f(kk, ss, rr))) rep.ok = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Full sweep used by `tables check` and the acceptance suite.
// ---------------------------------------------------------------------------

struct TablesCheckResult {
    SweepStats table1, table2, ineq_a, ineq_b, ineq_c, appendix_w, appendix_f;
    bool ok() const {
        return table1.failed == 0 && table2.failed == 0 && ineq_a.failed == 0 &&
               ineq_b.failed == 0 && ineq_c.failed == 0 &&
               appendix_w.failed == 0 && appendix_f.failed == 0;
    }
};

inline TablesCheckResult tables_check(int kmax) {
    if (kmax < 3) throw error("tables check needs kmax >= 3");
    TablesCheckResult res;
    for (int k = 3; k <= kmax; ++k) {
        for (int r = 0; r <= k; ++r) {
            Int wk = w(k, r);
            CaseW c = case_of_w(k, r);
            for (const auto& row : tables::table1()) {
                int kk = k + row.dk, rr = r + row.dr;
                if (!w_in_domain(kk, rr)) {
                    ++res.table1.skipped;
                    continue;
                }
                auto want = tables::lookup(row.cells[int(c)], 0, r);
                ++res.table1.checked;
                if (!want || Rat(w(kk, rr)) / Rat(wk) != *want) ++res.table1.failed;
            }
            if (r >= 1) res.ineq_a += check_inequalities_detail('a', k, 0, r);
            auto ar = appendix_consistency(k, r);
            res.appendix_w.checked += ar.checked;
            res.appendix_w.skipped += ar.skipped;
            if (!ar.ok) ++res.appendix_w.failed;
        }
        for (int s = 0; s <= k; ++s) {
            for (int r = 0; r + s <= k; ++r) {
                Int fk = f(k, s, r);
                CaseF c = case_of_f(k, s, r);
                for (const auto& row : tables::table2()) {
                    int kk = k + row.dk, ss = s + row.ds, rr = r + row.dr;
                    if (!f_in_domain(kk, ss, rr)) {
                        ++res.table2.skipped;
                        continue;
                    }
                    auto want = tables::lookup(row.cells[int(c)], s, r);
                    ++res.table2.checked;
                    if (!want || Rat(f(kk, ss, rr)) / Rat(fk) != *want)
                        ++res.table2.failed;
                }
                if (s + r >= 1) res.ineq_b += check_inequalities_detail('b', k, s, r);
                if (r >= 2) res.ineq_c += check_inequalities_detail('c', k, s, r);
                auto ar = appendix_consistency(k, s, r);
                res.appendix_f.checked += ar.checked;
                res.appendix_f.skipped += ar.skipped;
                if (!ar.ok) ++res.appendix_f.failed;
            }
        }
    }
    return res;
}

}  // namespace grkit
