#pragma once

// Closed-form Verma flags of atypical projective covers.
//
// table_flag(lambda) returns the full Verma flag of P_lambda for every
// atypical rho-shifted lambda = (a, b | c), organised by the sign pattern of
// (a, b) and the value of c.  The formulas are multiset sums of Sigma-chunks
// (sigma_sum) and explicit singleton Vermas; chunks are allowed to overlap,
// and overlapping contributions add up (the multiplicity-2 terms are real).
//
// table_case(lambda) exposes the branch taken, which the derivation engine
// reuses to pick its translation recipe.

#include <stdexcept>

#include "ospflag/flags.hpp"
#include "ospflag/weights.hpp"

namespace ospflag {

enum class TableCase {
    t31_11, t31_12, t31_13a, t31_13b, t31_14a, t31_14b,
    t31_21a, t31_21b, t31_22a, t31_22b, t31_23, t31_24,
    t31_31, t31_32,
    t32_11, t32_12, t32_13a, t32_13b, t32_13c, t32_14a, t32_14b,
    t32_21, t32_22, t32_23, t32_24,
    t32_31a, t32_31b, t32_32a, t32_32b,
    t33_11, t33_12, t33_13, t33_14,
    t33_21a, t33_21b, t33_21c, t33_22a, t33_22b, t33_23, t33_24,
    t33_31a, t33_31b, t33_32a, t33_32b,
    t34_11, t34_12, t34_13a, t34_13b, t34_14a, t34_14b,
    t34_21a, t34_21b, t34_22a, t34_22b,
    t34_23a, t34_23b, t34_23c, t34_24a, t34_24b, t34_24c,
    t34_31a, t34_31b, t34_32a, t34_32b,
};

inline const char* table_case_name(TableCase c) {
    switch (c) {
        case TableCase::t31_11: return "3.1(1.1)";
        case TableCase::t31_12: return "3.1(1.2)";
        case TableCase::t31_13a: return "3.1(1.3)";
        case TableCase::t31_13b: return "3.1(1.3 b=a-1)";
        case TableCase::t31_14a: return "3.1(1.4)";
        case TableCase::t31_14b: return "3.1(1.4 b=a-1)";
        case TableCase::t31_21a: return "3.1(2.1)";
        case TableCase::t31_21b: return "3.1(2.1 b=a+1)";
        case TableCase::t31_22a: return "3.1(2.2)";
        case TableCase::t31_22b: return "3.1(2.2 b=a+1)";
        case TableCase::t31_23: return "3.1(2.3)";
        case TableCase::t31_24: return "3.1(2.4)";
        case TableCase::t31_31: return "3.1(3.1)";
        case TableCase::t31_32: return "3.1(3.2)";
        case TableCase::t32_11: return "3.2(1.1)";
        case TableCase::t32_12: return "3.2(1.2)";
        case TableCase::t32_13a: return "3.2(1.3)";
        case TableCase::t32_13b: return "3.2(1.3 b=-1/2)";
        case TableCase::t32_13c: return "3.2(1.3 a=3/2,b=-1/2)";
        case TableCase::t32_14a: return "3.2(1.4)";
        case TableCase::t32_14b: return "3.2(1.4 b=-1/2)";
        case TableCase::t32_21: return "3.2(2.1)";
        case TableCase::t32_22: return "3.2(2.2)";
        case TableCase::t32_23: return "3.2(2.3)";
        case TableCase::t32_24: return "3.2(2.4)";
        case TableCase::t32_31a: return "3.2(3.1)";
        case TableCase::t32_31b: return "3.2(3.1 a=1/2)";
        case TableCase::t32_32a: return "3.2(3.2)";
        case TableCase::t32_32b: return "3.2(3.2 a=1/2)";
        case TableCase::t33_11: return "3.3(1.1)";
        case TableCase::t33_12: return "3.3(1.2)";
        case TableCase::t33_13: return "3.3(1.3)";
        case TableCase::t33_14: return "3.3(1.4)";
        case TableCase::t33_21a: return "3.3(2.1)";
        case TableCase::t33_21b: return "3.3(2.1 a=-1/2)";
        case TableCase::t33_21c: return "3.3(2.1 a=-1/2,b=3/2)";
        case TableCase::t33_22a: return "3.3(2.2)";
        case TableCase::t33_22b: return "3.3(2.2 a=-1/2)";
        case TableCase::t33_23: return "3.3(2.3)";
        case TableCase::t33_24: return "3.3(2.4)";
        case TableCase::t33_31a: return "3.3(3.1)";
        case TableCase::t33_31b: return "3.3(3.1 a=-1/2)";
        case TableCase::t33_32a: return "3.3(3.2)";
        case TableCase::t33_32b: return "3.3(3.2 a=-1/2)";
        case TableCase::t34_11: return "3.4(1.1)";
        case TableCase::t34_12: return "3.4(1.2)";
        case TableCase::t34_13a: return "3.4(1.3)";
        case TableCase::t34_13b: return "3.4(1.3 b=-1/2)";
        case TableCase::t34_14a: return "3.4(1.4)";
        case TableCase::t34_14b: return "3.4(1.4 b=-1/2)";
        case TableCase::t34_21a: return "3.4(2.1)";
        case TableCase::t34_21b: return "3.4(2.1 a=-1/2)";
        case TableCase::t34_22a: return "3.4(2.2)";
        case TableCase::t34_22b: return "3.4(2.2 a=-1/2)";
        case TableCase::t34_23a: return "3.4(2.3)";
        case TableCase::t34_23b: return "3.4(2.3 b=a-1)";
        case TableCase::t34_23c: return "3.4(2.3 b=a-1,a=-1/2)";
        case TableCase::t34_24a: return "3.4(2.4)";
        case TableCase::t34_24b: return "3.4(2.4 b=a-1)";
        case TableCase::t34_24c: return "3.4(2.4 b=a-1,a=-1/2)";
        case TableCase::t34_31a: return "3.4(3.1)";
        case TableCase::t34_31b: return "3.4(3.1 a=-1/2)";
        case TableCase::t34_32a: return "3.4(3.2)";
        case TableCase::t34_32b: return "3.4(3.2 a=-1/2)";
    }
    return "?";
}

// Branch classification.  Doubled coordinates throughout: A = 2a, etc.
inline TableCase table_case(const Weight& lam) {
    check(is_valid_weight(lam), "table_case expects an odd (shifted) weight");
    if (!is_atypical(lam))
        throw std::invalid_argument("ospflag: table_case is defined for atypical weights only");
    const int A = lam.da, B = lam.db, C = lam.dc;

    if (A > 0 && B > 0) {
        if (A == B) return C == A ? TableCase::t31_31 : TableCase::t31_32;
        if (A > B) {
            if (C == A) return TableCase::t31_11;
            if (C == -A) return TableCase::t31_12;
            if (C == B) return B == A - 2 ? TableCase::t31_13b : TableCase::t31_13a;
            return B == A - 2 ? TableCase::t31_14b : TableCase::t31_14a;  // C == -B
        }
        // B > A
        if (C == A) return B == A + 2 ? TableCase::t31_21b : TableCase::t31_21a;
        if (C == -A) return B == A + 2 ? TableCase::t31_22b : TableCase::t31_22a;
        if (C == B) return TableCase::t31_23;
        return TableCase::t31_24;  // C == -B
    }

    if (A > 0 && B < 0) {
        if (A == -B) {
            if (C == A) return A == 1 ? TableCase::t32_31b : TableCase::t32_31a;
            return A == 1 ? TableCase::t32_32b : TableCase::t32_32a;  // C == -A
        }
        if (A > -B) {
            if (C == A) return TableCase::t32_11;
            if (C == -A) return TableCase::t32_12;
            if (C == -B) {
                if (B < -1) return TableCase::t32_13a;
                return A == 3 ? TableCase::t32_13c : TableCase::t32_13b;  // b = -1/2
            }
            return B == -1 ? TableCase::t32_14b : TableCase::t32_14a;  // C == B
        }
        // -B > A
        if (C == A) return TableCase::t32_21;
        if (C == -A) return TableCase::t32_22;
        if (C == -B) return TableCase::t32_23;
        return TableCase::t32_24;  // C == B
    }

    if (A < 0 && B > 0) {
        if (B == -A) {
            if (C == -A) return A == -1 ? TableCase::t33_31b : TableCase::t33_31a;
            return A == -1 ? TableCase::t33_32b : TableCase::t33_32a;  // C == A
        }
        if (-A > B) {
            if (C == -A) return TableCase::t33_11;
            if (C == A) return TableCase::t33_12;
            if (C == B) return TableCase::t33_13;
            return TableCase::t33_14;  // C == -B
        }
        // B > -A
        if (C == -A) {
            if (A < -1) return TableCase::t33_21a;
            return B == 3 ? TableCase::t33_21c : TableCase::t33_21b;  // a = -1/2
        }
        if (C == A) return A == -1 ? TableCase::t33_22b : TableCase::t33_22a;
        if (C == B) return TableCase::t33_23;
        return TableCase::t33_24;  // C == -B
    }

    // A < 0, B < 0
    if (A == B) {
        if (C == -A) return A == -1 ? TableCase::t34_31b : TableCase::t34_31a;
        return A == -1 ? TableCase::t34_32b : TableCase::t34_32a;  // C == A
    }
    if (A < B) {
        if (C == -A) return TableCase::t34_11;
        if (C == A) return TableCase::t34_12;
        if (C == -B) return B == -1 ? TableCase::t34_13b : TableCase::t34_13a;
        return B == -1 ? TableCase::t34_14b : TableCase::t34_14a;  // C == B
    }
    // B < A
    if (C == -A) return A == -1 ? TableCase::t34_21b : TableCase::t34_21a;
    if (C == A) return A == -1 ? TableCase::t34_22b : TableCase::t34_22a;
    if (C == -B) {
        if (B < A - 2) return TableCase::t34_23a;
        return A == -1 ? TableCase::t34_23c : TableCase::t34_23b;  // b = a-1
    }
    if (B < A - 2) return TableCase::t34_24a;  // C == B
    return A == -1 ? TableCase::t34_24c : TableCase::t34_24b;
}

inline VermaFlag table_flag(const Weight& lam) {
    const TableCase tc = table_case(lam);
    const int A = lam.da, B = lam.db;
    VermaFlag out;
    const auto S = [&](int x, int y, int z) { out.add_flag(sigma_sum(Weight{x, y, z})); };
    const auto M = [&](int x, int y, int z) { out.add(Weight{x, y, z}); };

    switch (tc) {
        // --- region a > b > 0 -------------------------------------------
        case TableCase::t31_11:
            M(A, B, A), M(A + 2, B, A + 2);
            break;
        case TableCase::t31_12:
            M(A, B, -A), M(A, B, A), M(A + 2, B, -A - 2), M(A + 2, B, A + 2);
            break;
        case TableCase::t31_13a:
            M(A, B, B), M(A, B + 2, B + 2);
            break;
        case TableCase::t31_13b:
            M(A, A - 2, A - 2), M(A, A, A), M(A + 2, A, A + 2);
            break;
        case TableCase::t31_14a:
            M(A, B, -B), M(A, B, B), M(A, B + 2, -B - 2), M(A, B + 2, B + 2);
            break;
        case TableCase::t31_14b:
            M(A, A - 2, -A + 2), M(A, A - 2, A - 2), M(A, A, -A), M(A, A, A),
                M(A + 2, A, -A - 2), M(A + 2, A, A + 2);
            break;
        // --- region b > a > 0 -------------------------------------------
        case TableCase::t31_21a:
            M(A, B, A), M(B, A, A), M(A + 2, B, A + 2), M(B, A + 2, A + 2);
            break;
        case TableCase::t31_21b:
            M(A, A + 2, A), M(A + 2, A, A), M(A + 2, A + 2, A + 2);
            break;
        case TableCase::t31_22a:
            M(A, B, -A), M(A, B, A), M(B, A, -A), M(B, A, A), M(A + 2, B, -A - 2),
                M(A + 2, B, A + 2), M(B, A + 2, -A - 2), M(B, A + 2, A + 2);
            break;
        case TableCase::t31_22b:
            M(A, A + 2, -A), M(A, A + 2, A), M(A + 2, A, -A), M(A + 2, A, A),
                M(A + 2, A + 2, -A - 2), M(A + 2, A + 2, A + 2);
            break;
        case TableCase::t31_23:
            M(A, B, B), M(B, A, B), M(A, B + 2, B + 2), M(B + 2, A, B + 2);
            break;
        case TableCase::t31_24:
            S(A, B, -B), S(A, B + 2, -B - 2);
            break;
        // --- region a = b > 0 -------------------------------------------
        case TableCase::t31_31:
            M(A, A, A), M(A, A + 2, A + 2), M(A + 2, A, A + 2);
            break;
        case TableCase::t31_32:
            M(A, A, -A), M(A, A, A), M(A, A + 2, -A - 2), M(A, A + 2, A + 2),
                M(A + 2, A, -A - 2), M(A + 2, A, A + 2);
            break;
        // --- region a > 0 > b, a > |b| ----------------------------------
        case TableCase::t32_11:
            M(A, B, A), M(A, -B, A), M(A + 2, B, A + 2), M(A + 2, -B, A + 2);
            break;
        case TableCase::t32_12:
            M(A, B, -A), M(A, B, A), M(A, -B, -A), M(A, -B, A), M(A + 2, B, -A - 2),
                M(A + 2, B, A + 2), M(A + 2, -B, -A - 2), M(A + 2, -B, A + 2);
            break;
        case TableCase::t32_13a:
            M(A, B, -B), M(A, -B, -B), M(A, B + 2, -B - 2), M(A, -B - 2, -B - 2);
            break;
        case TableCase::t32_13b:
            M(A, -1, 1), M(A, 1, 1), M(A, 1, -1), M(A, 3, 3);
            break;
        case TableCase::t32_13c:
            M(3, -1, 1), M(3, 1, 1), M(3, 1, -1), M(3, 3, 3), M(5, 3, 5);
            break;
        case TableCase::t32_14a:
            M(A, B, B), M(A, B, -B), M(A, -B, B), M(A, -B, -B), M(A, B + 2, B + 2),
                M(A, B + 2, -B - 2), M(A, -B - 2, B + 2), M(A, -B - 2, -B - 2);
            break;
        case TableCase::t32_14b:
            S(A, -1, -1);
            break;
        // --- region a > 0 > b, |b| > a ----------------------------------
        case TableCase::t32_21:
            S(A, B, A), S(A + 2, B, A + 2);
            break;
        case TableCase::t32_22:
            S(A, B, -A), S(A + 2, B, -A - 2);
            break;
        case TableCase::t32_23:
            S(A, B, -B), S(A, B + 2, -B - 2);
            break;
        case TableCase::t32_24:
            S(A, B, B), S(A, B + 2, B + 2);
            break;
        // --- region a = -b > 0 ------------------------------------------
        case TableCase::t32_31a:
            M(A, -A, A), M(A, A, A), M(A, -A + 2, A - 2), M(A, A - 2, A - 2),
                M(A + 2, -A, A + 2), M(A + 2, A, A + 2);
            break;
        case TableCase::t32_31b:
            M(1, -1, 1), M(1, 1, 1), M(1, 1, -1), M(1, 3, 3), M(3, -1, 3), M(3, 1, -3),
                M(3, 1, 3), M(3, 1, 3), M(5, 1, 5);
            break;
        case TableCase::t32_32a:
            S(A, -A, -A), S(A, -A + 2, -A + 2), S(A + 2, -A, -A - 2);
            break;
        case TableCase::t32_32b:
            S(1, -1, -1), S(3, -1, -3);
            break;
        // --- region b > 0 > a, |a| > b ----------------------------------
        case TableCase::t33_11:
            S(A, B, -A), S(A + 2, B, -A - 2);
            break;
        case TableCase::t33_12:
            S(A, B, A), S(A + 2, B, A + 2);
            break;
        case TableCase::t33_13:
            S(A, B, B), S(A, B + 2, B + 2);
            break;
        case TableCase::t33_14:
            S(A, B, -B), S(A, B + 2, -B - 2);
            break;
        // --- region b > 0 > a, b > |a| ----------------------------------
        case TableCase::t33_21a:
            S(A, B, -A), S(A + 2, B, -A - 2);
            break;
        case TableCase::t33_21b:
            S(-1, B, 1), M(1, B, -1), M(B, 1, -1), M(3, B, 3), M(B, 3, 3);
            break;
        case TableCase::t33_21c:
            S(-1, 3, 1), M(1, 3, -1), M(3, 1, -1), M(3, 3, 3);
            break;
        case TableCase::t33_22a:
            S(A, B, A), S(A + 2, B, A + 2);
            break;
        case TableCase::t33_22b:
            S(-1, B, -1);
            break;
        case TableCase::t33_23:
            S(A, B, B), S(A, B + 2, B + 2);
            break;
        case TableCase::t33_24:
            S(A, B, -B), S(A, B + 2, -B - 2);
            break;
        // --- region b = -a > 0 ------------------------------------------
        case TableCase::t33_31a:
            S(A, -A, -A), M(-A, -A, -A), S(A, -A + 2, -A + 2), S(A + 2, -A, -A - 2);
            break;
        case TableCase::t33_31b:
            S(-1, 1, 1), M(1, 1, -1), S(-1, 3, 3);
            break;
        case TableCase::t33_32a:
            S(A, -A, A), M(-A, -A, A), M(-A, -A, -A), S(A, -A + 2, A - 2), S(A + 2, -A, A + 2);
            break;
        case TableCase::t33_32b:
            S(-1, 1, -1), M(1, 1, -1), M(1, 1, 1), S(-1, 3, -3);
            break;
        // --- region a < b < 0 -------------------------------------------
        case TableCase::t34_11:
            S(A, B, -A), S(A + 2, B, -A - 2);
            break;
        case TableCase::t34_12:
            S(A, B, A), S(A + 2, B, A + 2);
            break;
        case TableCase::t34_13a:
            S(A, B, -B), S(A, B + 2, -B - 2);
            break;
        case TableCase::t34_13b:
            S(A, -1, 1), S(-1, -A, 1), M(A, 1, -1), M(-1, -A, -1), M(1, A, -1), M(1, -A, -1),
                M(-A, -1, -1), M(-A, 1, -1), S(A, 3, 3);
            break;
        case TableCase::t34_14a:
            S(A, B, B), S(A, B + 2, B + 2);
            break;
        case TableCase::t34_14b:
            S(A, -1, -1);
            break;
        // --- region b < a < 0 -------------------------------------------
        case TableCase::t34_21a:
            S(A, B, -A), S(A + 2, B, -A - 2);
            break;
        case TableCase::t34_21b:
            S(-1, B, 1), M(-B, -1, 1), M(-B, 1, 1), M(1, B, -1), M(1, -B, -1), M(-B, -1, -1),
                M(-B, 1, -1), S(3, B, 3);
            break;
        case TableCase::t34_22a:
            S(A, B, A), S(A + 2, B, A + 2);
            break;
        case TableCase::t34_22b:
            S(-1, B, -1);
            break;
        case TableCase::t34_23a:
            S(A, B, -B), S(A, B + 2, -B - 2);
            break;
        case TableCase::t34_23b:
            S(A, A - 2, -A + 2), S(A + 2, A, -A - 2), S(A, A, -A), S(-A, A, -A);
            break;
        case TableCase::t34_23c:
            S(-1, -3, 3), M(3, -1, 3), M(3, 1, 3), S(-1, -1, 1), S(1, -1, -1);
            break;
        case TableCase::t34_24a:
            S(A, B, B), S(A, B + 2, B + 2);
            break;
        case TableCase::t34_24b:
            S(A, A - 2, A - 2), S(A + 2, A, A + 2), S(A, A, A), S(-A, A, A);
            break;
        case TableCase::t34_24c:
            S(-1, -3, -3), S(-1, -1, -1), S(1, -1, -1);
            break;
        // --- region a = b < 0 -------------------------------------------
        case TableCase::t34_31a:
            S(A, A, -A), S(A, A + 2, -A - 2);
            break;
        case TableCase::t34_31b:
            S(-1, -1, 1), M(1, 1, 1), M(-1, 1, -1), M(1, -1, -1), M(1, 1, -1), S(-1, 3, 3);
            break;
        case TableCase::t34_32a:
            S(A, A, A), S(A, A + 2, A + 2);
            break;
        case TableCase::t34_32b:
            S(-1, -1, -1);
            break;
    }

    check(out.mult(lam) == 1, "table flag must contain its own Verma exactly once");
    return out;
}

}  // namespace ospflag
