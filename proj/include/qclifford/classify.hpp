#pragma once

#include <string>
#include <utility>

#include "qclifford/quadspace.hpp"

namespace qcl {

// Ground field kind, by how -1 behaves: I = -1 is a square, II = -1 is a sum
// of two squares but not a square, III = neither (formally real).
enum class FieldType { I, II, III };

FieldType parse_field(const std::string& text);
std::string field_str(FieldType f);

// Extra tensor factor beyond the M(2,F) power: none, the quadratic extension
// F[i], or the quaternions H. Doubles as the base-ring tag for Lie types.
enum class TailFactor { NONE, GAUSS, QUAT };

// Associative algebra type: 2^{copies_log2} copies of M(2,F)^{tensor m2} (x)
// tail. The total F-dimension is always 2^{dim V}.
struct IsoType {
    int copies_log2 = 0;
    int m2 = 0;
    TailFactor tail = TailFactor::NONE;

    friend bool operator==(const IsoType& a, const IsoType& b) {
        return a.copies_log2 == b.copies_log2 && a.m2 == b.m2 && a.tail == b.tail;
    }
    friend bool operator!=(const IsoType& a, const IsoType& b) { return !(a == b); }
};

IsoType algebra_iso(const QuadClass& c, FieldType f);

int algebra_dim_log2(const IsoType& t);
unsigned long long algebra_dim(const IsoType& t); // throws past 2^62
std::string format_algebra(const IsoType& t);

// Lie algebra type: 2^{copies_log2} copies of family(size, base).
struct LieIsoType {
    enum class Family { GL, SL, SO, SP, SU };
    Family family = Family::SO;
    long long size = 1;
    TailFactor base = TailFactor::NONE;
    int copies_log2 = 0;

    friend bool operator==(const LieIsoType& a, const LieIsoType& b) {
        return a.family == b.family && a.size == b.size && a.base == b.base &&
               a.copies_log2 == b.copies_log2;
    }
    friend bool operator!=(const LieIsoType& a, const LieIsoType& b) { return !(a == b); }
};

// The two Lie algebras attached to a class: fixed points of the product
// structure (always a gl) and the bracket span of the anisotropic monomials.
struct LiePair {
    LieIsoType gvf;
    LieIsoType gvq;
};

LiePair lie_iso(const QuadClass& c, FieldType f);

unsigned long long lie_dim(const LieIsoType& t); // total over all copies; throws past 2^62
std::string format_lie(const LieIsoType& t);
std::string lie_family_str(LieIsoType::Family fam);
std::string tail_str(TailFactor t); // "none", "F[i]", "H"

// One-call pipelines: build the standard family graph, classify its quadratic
// space, and look up the algebra type. clifford_report takes the complete
// graph on p white + q black unit-label vertices (p + q >= 1); en_report
// takes the all-black E:n tree (n >= 6).
std::pair<QuadClass, IsoType> clifford_report(int p, int q, FieldType f);
std::pair<QuadClass, IsoType> en_report(int n, FieldType f);

} // namespace qcl
