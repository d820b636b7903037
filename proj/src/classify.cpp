// Lookup from quadratic-class invariants (n_bar, r, type) and the ground
// field kind to associative and Lie algebra types, with exact dimension
// formulas and canonical renderings.

#include "qclifford/classify.hpp"

#include <sstream>

#include "qclifford/errors.hpp"
#include "qclifford/graph.hpp"

namespace qcl {

FieldType parse_field(const std::string& text) {
    if (text == "I") return FieldType::I;
    if (text == "II") return FieldType::II;
    if (text == "III") return FieldType::III;
    throw input_error("field must be I, II, or III: '" + text + "'");
}

std::string field_str(FieldType f) {
    switch (f) {
        case FieldType::I: return "I";
        case FieldType::II: return "II";
        default: return "III";
    }
}

std::string tail_str(TailFactor t) {
    switch (t) {
        case TailFactor::NONE: return "none";
        case TailFactor::GAUSS: return "F[i]";
        default: return "H";
    }
}

namespace {

// A class is consistent when the nondegenerate kernel has the parity its type
// demands: even for +/- (a sum of planes, at least one for -), odd for 0
// (planes plus the anisotropic direction, which also lives in the radical, so
// r >= 1 there).
void require_consistent(const QuadClass& c) {
    const bool bad =
        c.n_bar < 0 || c.r < 0 ||
        (c.type == QType::ZERO && (c.n_bar % 2 == 0 || c.r < 1)) ||
        (c.type != QType::ZERO && c.n_bar % 2 == 1) ||
        (c.type == QType::MINUS && c.n_bar < 2);
    if (bad)
        throw input_error("inconsistent quadratic class: n=" + std::to_string(c.n_bar) +
                          " r=" + std::to_string(c.r) + " type=" +
                          std::string(1, qtype_char(c.type)));
}

} // namespace

IsoType algebra_iso(const QuadClass& c, FieldType f) {
    require_consistent(c);
    IsoType t;
    if (c.type == QType::ZERO) {
        // Odd kernel: the center grows. Over a type I field the extension
        // splits; otherwise a Gaussian factor survives and halves the copies.
        if (f == FieldType::I) {
            t.copies_log2 = c.r;
            t.m2 = (c.n_bar - 1) / 2;
            t.tail = TailFactor::NONE;
        } else {
            t.copies_log2 = c.r - 1;
            t.m2 = (c.n_bar - 1) / 2;
            t.tail = TailFactor::GAUSS;
        }
        return t;
    }
    // Even kernel: only a MINUS form over a type III field leaves quaternions.
    if (c.type == QType::MINUS && f == FieldType::III) {
        t.copies_log2 = c.r;
        t.m2 = (c.n_bar - 2) / 2;
        t.tail = TailFactor::QUAT;
    } else {
        t.copies_log2 = c.r;
        t.m2 = c.n_bar / 2;
        t.tail = TailFactor::NONE;
    }
    return t;
}

int algebra_dim_log2(const IsoType& t) {
    const int tail = t.tail == TailFactor::NONE ? 0 : (t.tail == TailFactor::GAUSS ? 1 : 2);
    return t.copies_log2 + 2 * t.m2 + tail;
}

unsigned long long algebra_dim(const IsoType& t) {
    const int log2 = algebra_dim_log2(t);
    if (log2 > 62) throw input_error("algebra dimension exceeds 2^62");
    return 1ull << log2;
}

namespace {

std::string copies_suffix(int copies_log2) {
    if (copies_log2 == 0) return "";
    if (copies_log2 > 62) return "^{2^" + std::to_string(copies_log2) + "}";
    return "^{" + std::to_string(1ull << copies_log2) + "}";
}

long long power_size(int log2) {
    if (log2 > 62) throw input_error("matrix size exceeds 2^62");
    return 1ll << log2;
}

} // namespace

std::string format_algebra(const IsoType& t) {
    std::ostringstream os;
    std::string body = "M(2,F)^{⊗" + std::to_string(t.m2) + "}";
    if (t.tail == TailFactor::GAUSS) body += " ⊗ F[i]";
    if (t.tail == TailFactor::QUAT) body += " ⊗ H";
    if (t.copies_log2 == 0) return body;
    os << "(" << body << ")" << copies_suffix(t.copies_log2);
    return os.str();
}

LiePair lie_iso(const QuadClass& c, FieldType f) {
    require_consistent(c);
    using Fam = LieIsoType::Family;
    LiePair out;
    if (c.type == QType::ZERO) {
        if (f == FieldType::I) {
            out.gvf = {Fam::GL, power_size((c.n_bar - 1) / 2), TailFactor::NONE, c.r};
            out.gvq = {Fam::SL, power_size((c.n_bar - 1) / 2), TailFactor::NONE, c.r};
        } else {
            out.gvf = {Fam::GL, power_size((c.n_bar - 1) / 2), TailFactor::GAUSS, c.r - 1};
            out.gvq = {Fam::SU, power_size((c.n_bar - 1) / 2), TailFactor::GAUSS, c.r - 1};
        }
        return out;
    }
    if (c.type == QType::MINUS && f == FieldType::III)
        out.gvf = {Fam::GL, power_size((c.n_bar - 2) / 2), TailFactor::QUAT, c.r};
    else
        out.gvf = {Fam::GL, power_size(c.n_bar / 2), TailFactor::NONE, c.r};

    if (c.type == QType::PLUS) {
        out.gvq = {Fam::SO, power_size(c.n_bar / 2), TailFactor::NONE, c.r};
    } else {
        switch (f) {
            case FieldType::I:
                out.gvq = {Fam::SP, power_size(c.n_bar / 2), TailFactor::NONE, c.r};
                break;
            case FieldType::II:
                out.gvq = {Fam::SO, power_size(c.n_bar / 2), TailFactor::NONE, c.r};
                break;
            default:
                out.gvq = {Fam::SP, power_size((c.n_bar - 2) / 2), TailFactor::QUAT, c.r};
        }
    }
    return out;
}

unsigned long long lie_dim(const LieIsoType& t) {
    using Fam = LieIsoType::Family;
    const unsigned long long k = (unsigned long long)t.size;
    if (t.size > (1ll << 31)) throw input_error("lie dimension exceeds 2^62");
    unsigned long long base = 0;
    switch (t.family) {
        case Fam::GL: {
            const int b = t.base == TailFactor::NONE ? 1 : (t.base == TailFactor::GAUSS ? 2 : 4);
            base = k * k * b;
            break;
        }
        case Fam::SL:
        case Fam::SU:
            base = k * k - 1;
            break;
        case Fam::SO:
            base = k * (k - 1) / 2;
            break;
        case Fam::SP:
            base = t.base == TailFactor::QUAT ? k * (2 * k + 1) : k * (k + 1) / 2;
            break;
    }
    if (t.copies_log2 > 62 || (t.copies_log2 > 0 && base > (1ull << (62 - t.copies_log2))))
        throw input_error("lie dimension exceeds 2^62");
    return base << t.copies_log2;
}

std::string lie_family_str(LieIsoType::Family fam) {
    using Fam = LieIsoType::Family;
    switch (fam) {
        case Fam::GL: return "gl";
        case Fam::SL: return "sl";
        case Fam::SO: return "so";
        case Fam::SP: return "sp";
        default: return "su";
    }
}

std::string format_lie(const LieIsoType& t) {
    std::ostringstream os;
    os << lie_family_str(t.family) << "(" << t.size;
    switch (t.base) {
        case TailFactor::NONE: os << ",F"; break;
        case TailFactor::GAUSS: os << ",F[i]"; break;
        case TailFactor::QUAT: os << ",H"; break;
    }
    os << ")" << copies_suffix(t.copies_log2);
    return os.str();
}

std::pair<QuadClass, IsoType> clifford_report(int p, int q, FieldType f) {
    if (p < 0 || q < 0 || p + q < 1) throw input_error("clifford_report needs p, q >= 0 with p + q >= 1");
    const ColoredGraph g =
        family_graph("Cl:" + std::to_string(p) + "," + std::to_string(q));
    const QuadClass c = classify_quadratic(build_space(g));
    return {c, algebra_iso(c, f)};
}

std::pair<QuadClass, IsoType> en_report(int n, FieldType f) {
    if (n < 6) throw input_error("en_report needs n >= 6");
    const ColoredGraph g = family_graph("E:" + std::to_string(n));
    const QuadClass c = classify_quadratic(build_space(g));
    return {c, algebra_iso(c, f)};
}

} // namespace qcl
