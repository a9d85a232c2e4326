#include "qwa/axioms.hpp"

#include <sstream>

namespace qwa {

const char* class_tag(AlgClass c) {
    switch (c) {
        case AlgClass::Be: return "be";
        case AlgClass::BoundedBe: return "bounded-be";
        case AlgClass::InvolutiveBe: return "involutive-be";
        case AlgClass::Bck: return "bck";
        case AlgClass::CommutativeBe: return "commutative-be";
        case AlgClass::Wajsberg: return "wajsberg";
        case AlgClass::MBe: return "m-be";
        case AlgClass::SAlgebra: return "s-algebra";
        case AlgClass::QmvOplus: return "qmv";
        case AlgClass::Pqmv: return "pqmv";
        case AlgClass::Qw: return "qw";
        case AlgClass::QuasiLinear: return "quasilinear";
    }
    return "?";
}

std::optional<AlgClass> class_from_tag(std::string_view tag) {
    for (AlgClass c : kAllClasses)
        if (tag == class_tag(c)) return c;
    return std::nullopt;
}

std::string format_report(const FiniteAlgebra& a, const ClassReport& r) {
    std::ostringstream out;
    out << "CLASS " << class_tag(r.cls) << ' ' << (r.pass ? "PASS" : "FAIL");
    if (!r.pass && r.witness) {
        out << " witness";
        for (const auto& [v, e] : r.witness->assign) out << ' ' << v << '=' << a.name(e);
        out << " axiom=" << r.witness->axiom;
    }
    if (!r.note.empty()) out << " (" << r.note << ")";
    return out.str();
}

namespace {

ClassReport pass_report(AlgClass c, std::string note = {}) {
    return ClassReport{c, true, std::nullopt, std::move(note)};
}

ClassReport fail_report(AlgClass c, Witness w, std::string note = {}) {
    return ClassReport{c, false, std::move(w), std::move(note)};
}

ClassReport contained_fail(AlgClass c, const ClassReport& prereq) {
    return ClassReport{c, false, prereq.witness,
                       std::string("containment: ") + class_tag(prereq.cls) + " failed"};
}

Witness w1(const char* axiom, Elem x) { return Witness{{{'x', x}}, axiom}; }
Witness w2(const char* axiom, Elem x, Elem y) { return Witness{{{'x', x}, {'y', y}}, axiom}; }
Witness w3(const char* axiom, Elem x, Elem y, Elem z) {
    return Witness{{{'x', x}, {'y', y}, {'z', z}}, axiom};
}

}  // namespace

ClassReport check_be(const FiniteAlgebra& a, CheckOptions) {
    const AlgClass c = AlgClass::Be;
    for (Elem x = 0; x < a.n; ++x)
        if (a.arrow(x, x) != a.one) return fail_report(c, w1("BE1", x));
    for (Elem x = 0; x < a.n; ++x)
        if (a.arrow(x, a.one) != a.one) return fail_report(c, w1("BE2", x));
    for (Elem x = 0; x < a.n; ++x)
        if (a.arrow(a.one, x) != x) return fail_report(c, w1("BE3", x));
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            for (Elem z = 0; z < a.n; ++z)
                if (a.arrow(x, a.arrow(y, z)) != a.arrow(y, a.arrow(x, z)))
                    return fail_report(c, w3("BE4", x, y, z));
    return pass_report(c);
}

ClassReport check_bounded(const FiniteAlgebra& a, CheckOptions opts) {
    const AlgClass c = AlgClass::BoundedBe;
    if (!opts.force) {
        ClassReport be = check_be(a);
        if (!be.pass) return contained_fail(c, be);
    }
    for (Elem x = 0; x < a.n; ++x)
        if (!a.leq(a.zero, x)) return fail_report(c, w1("bounded", x));
    return pass_report(c);
}

ClassReport check_involutive(const FiniteAlgebra& a, CheckOptions opts) {
    const AlgClass c = AlgClass::InvolutiveBe;
    if (!opts.force) {
        ClassReport b = check_bounded(a);
        if (!b.pass) return contained_fail(c, b);
    }
    for (Elem x = 0; x < a.n; ++x)
        if (a.star(a.star(x)) != x) return fail_report(c, w1("involution", x));
    return pass_report(c);
}

ClassReport check_bck(const FiniteAlgebra& a, CheckOptions opts) {
    const AlgClass c = AlgClass::Bck;
    if (!opts.force) {
        ClassReport be = check_be(a);
        if (!be.pass) return contained_fail(c, be);
    }
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            for (Elem z = 0; z < a.n; ++z)
                if (a.arrow(a.arrow(x, y), a.arrow(a.arrow(y, z), a.arrow(x, z))) != a.one)
                    return fail_report(c, w3("BCK1", x, y, z));
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            if (x != y && a.leq(x, y) && a.leq(y, x)) return fail_report(c, w2("BCK4", x, y));
    return pass_report(c);
}

ClassReport check_commutative(const FiniteAlgebra& a, CheckOptions opts) {
    const AlgClass c = AlgClass::CommutativeBe;
    if (!opts.force) {
        ClassReport be = check_be(a);
        if (!be.pass) return contained_fail(c, be);
    }
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            if (a.sup(x, y) != a.sup(y, x)) return fail_report(c, w2("comm", x, y));
    return pass_report(c);
}

ClassReport check_wajsberg(const FiniteAlgebra& a, CheckOptions) {
    const AlgClass c = AlgClass::Wajsberg;
    for (Elem x = 0; x < a.n; ++x)
        if (a.arrow(a.one, x) != x) return fail_report(c, w1("W1", x));
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            for (Elem z = 0; z < a.n; ++z)
                if (a.arrow(a.arrow(y, z), a.arrow(a.arrow(z, x), a.arrow(y, x))) != a.one)
                    return fail_report(c, w3("W2", x, y, z));
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            if (a.sup(x, y) != a.sup(y, x)) return fail_report(c, w2("W3", x, y));
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            if (a.arrow(a.arrow(a.star(x), a.star(y)), a.arrow(y, x)) != a.one)
                return fail_report(c, w2("W4", x, y));
    return pass_report(c);
}

ClassReport check_qw(const FiniteAlgebra& a, CheckOptions opts) {
    const AlgClass c = AlgClass::Qw;
    if (!opts.force) {
        ClassReport inv = check_involutive(a);
        if (!inv.pass) return contained_fail(c, inv);
    }
    ClassReport rep = pass_report(c);
    for (Elem x = 0; x < a.n && rep.pass; ++x)
        for (Elem y = 0; y < a.n && rep.pass; ++y)
            for (Elem z = 0; z < a.n && rep.pass; ++z) {
                Elem lhs = a.arrow(x, a.inf(a.inf(x, y), a.inf(z, x)));
                Elem rhs = a.inf(a.arrow(x, y), a.arrow(x, z));
                if (lhs != rhs) rep = fail_report(c, w3("QW", x, y, z));
            }
    // (QW) must agree with (QW1) & (QW2); a mismatch is an internal
    // consistency error worth shouting about.
    bool qw1 = true, qw2 = true;
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y) {
            if (a.arrow(x, a.inf(x, y)) != a.arrow(x, y)) qw1 = false;
            for (Elem z = 0; z < a.n; ++z)
                if (a.arrow(x, a.inf(y, a.inf(z, x))) != a.inf(a.arrow(x, y), a.arrow(x, z)))
                    qw2 = false;
        }
    if (rep.pass != (qw1 && qw2))
        rep.note = "internal consistency error: (QW) disagrees with (QW1)&(QW2)";
    return rep;
}

ClassReport check_pqmv(const FiniteAlgebra& a, CheckOptions opts) {
    const AlgClass c = AlgClass::Pqmv;
    if (!opts.force) {
        ClassReport inv = check_involutive(a);
        if (!inv.pass) return contained_fail(c, inv);
    }
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            for (Elem z = 0; z < a.n; ++z) {
                Elem sx = a.star(x);
                Elem lhs = a.prod(x, a.sup(a.sup(sx, y), a.sup(z, sx)));
                Elem rhs = a.sup(a.prod(x, y), a.prod(x, z));
                if (lhs != rhs) return fail_report(c, w3("Pqmv", x, y, z));
            }
    return pass_report(c);
}

ClassReport check_qmv_oplus(const FiniteAlgebra& a, CheckOptions opts) {
    const AlgClass c = AlgClass::QmvOplus;
    if (!opts.force) {
        ClassReport inv = check_involutive(a);
        if (!inv.pass) return contained_fail(c, inv);
    }
    for (Elem x = 0; x < a.n; ++x)
        for (Elem y = 0; y < a.n; ++y)
            for (Elem z = 0; z < a.n; ++z) {
                Elem sx = a.star(x);
                Elem lhs = a.oplus(x, a.infS(a.infS(sx, y), a.infS(z, sx)));
                Elem rhs = a.infS(a.oplus(x, y), a.oplus(x, z));
                if (lhs != rhs) return fail_report(c, w3("QMV", x, y, z));
            }
    return pass_report(c);
}

ClassReport check_m_be(const FiniteAlgebra& a, std::span<const Elem> p) {
    const AlgClass c = AlgClass::MBe;
    const int n = a.n;
    if ((int)p.size() != n * n) throw std::invalid_argument("prod table must be n*n");
    auto at = [&](Elem x, Elem y) { return p[x * n + y]; };
    const Elem z0 = a.star(a.one);  // 0 := 1*
    for (Elem x = 0; x < n; ++x)
        if (at(a.one, x) != x || at(x, a.one) != x) return fail_report(c, w1("PU", x));
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (at(x, y) != at(y, x)) return fail_report(c, w2("Pcomm", x, y));
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                if (at(x, at(y, z)) != at(at(x, y), z)) return fail_report(c, w3("Pass", x, y, z));
    for (Elem x = 0; x < n; ++x)
        if (at(x, z0) != z0) return fail_report(c, w1("m-L", x));
    for (Elem x = 0; x < n; ++x)
        if (at(x, a.star(x)) != z0) return fail_report(c, w1("m-Re", x));
    return pass_report(c);
}

ClassReport check_s_algebra(const FiniteAlgebra& a, std::span<const Elem> o) {
    const AlgClass c = AlgClass::SAlgebra;
    const int n = a.n;
    if ((int)o.size() != n * n) throw std::invalid_argument("oplus table must be n*n");
    auto at = [&](Elem x, Elem y) { return o[x * n + y]; };
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (at(x, y) != at(y, x)) return fail_report(c, w2("S1", x, y));
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                if (at(x, at(y, z)) != at(at(x, y), z)) return fail_report(c, w3("S2", x, y, z));
    for (Elem x = 0; x < n; ++x)
        if (at(x, a.star(x)) != a.one) return fail_report(c, w1("S3", x));
    for (Elem x = 0; x < n; ++x)
        if (at(x, a.zero) != x) return fail_report(c, w1("S4", x));
    for (Elem x = 0; x < n; ++x)
        if (a.star(a.star(x)) != x) return fail_report(c, w1("S5", x));
    if (a.star(a.zero) != a.one) return fail_report(c, Witness{{}, "S6"});
    for (Elem x = 0; x < n; ++x)
        if (at(x, a.one) != a.one) return fail_report(c, w1("S7", x));
    return pass_report(c);
}

ClassReport check_quasi_linear(const FiniteAlgebra& a, CheckOptions opts) {
    const AlgClass c = AlgClass::QuasiLinear;
    if (!opts.force) {
        ClassReport qw = check_qw(a);
        if (!qw.pass) return contained_fail(c, qw);
    }
    auto scan = [&](bool leqq_strict) -> std::optional<Witness> {
        for (Elem x = 0; x < a.n; ++x)
            for (Elem y = 0; y < a.n; ++y) {
                if (a.leqQ(x, y)) continue;
                bool below = leqq_strict ? a.leqQ(y, x) : a.leq(y, x);
                if (!(below && y != x)) return w2("quasilinear", x, y);
            }
        return std::nullopt;
    };
    auto primary = scan(opts.quasilinear_leqq_strict);
    auto alternate = scan(!opts.quasilinear_leqq_strict);
    ClassReport rep = primary ? fail_report(c, *primary) : pass_report(c);
    if (primary.has_value() != alternate.has_value()) {
        rep.note = std::string("alternate ") +
                   (opts.quasilinear_leqq_strict ? "strict-leq" : "strict-leqQ") +
                   " reading: " + (alternate ? "FAIL" : "PASS");
    }
    return rep;
}

ClassReport check_class(const FiniteAlgebra& a, AlgClass c, CheckOptions opts) {
    switch (c) {
        case AlgClass::Be: return check_be(a, opts);
        case AlgClass::BoundedBe: return check_bounded(a, opts);
        case AlgClass::InvolutiveBe: return check_involutive(a, opts);
        case AlgClass::Bck: return check_bck(a, opts);
        case AlgClass::CommutativeBe: return check_commutative(a, opts);
        case AlgClass::Wajsberg: return check_wajsberg(a, opts);
        case AlgClass::Qw: return check_qw(a, opts);
        case AlgClass::Pqmv: return check_pqmv(a, opts);
        case AlgClass::QmvOplus: return check_qmv_oplus(a, opts);
        case AlgClass::MBe: return check_m_be(a, tables_of(a)->prod);
        case AlgClass::SAlgebra: return check_s_algebra(a, tables_of(a)->oplus);
        case AlgClass::QuasiLinear: return check_quasi_linear(a, opts);
    }
    throw std::invalid_argument("unknown class");
}

bool passes(const FiniteAlgebra& a, AlgClass c) { return check_class(a, c).pass; }

std::vector<ClassReport> classify(const FiniteAlgebra& a, bool force) {
    std::vector<ClassReport> out;
    auto find = [&](AlgClass c) -> const ClassReport& {
        for (const auto& r : out)
            if (r.cls == c) return r;
        throw std::logic_error("classify ordering bug");
    };
    for (AlgClass c : kAllClasses) {
        if (force) {
            out.push_back(check_class(a, c, CheckOptions{.force = true}));
            continue;
        }
        // containment short-circuits, both directions
        auto propagate_fail = [&](AlgClass prereq) -> bool {
            const ClassReport& p = find(prereq);
            if (!p.pass) {
                out.push_back(contained_fail(c, p));
                return true;
            }
            return false;
        };
        switch (c) {
            case AlgClass::Be:
                out.push_back(check_be(a));
                continue;
            case AlgClass::BoundedBe:
            case AlgClass::Bck:
            case AlgClass::CommutativeBe:
            case AlgClass::Wajsberg:
                if (propagate_fail(AlgClass::Be)) continue;
                break;
            case AlgClass::InvolutiveBe:
                if (propagate_fail(AlgClass::BoundedBe)) continue;
                break;
            case AlgClass::Qw:
                if (propagate_fail(AlgClass::InvolutiveBe)) continue;
                if (find(AlgClass::Wajsberg).pass) {
                    out.push_back(pass_report(c, "containment: wajsberg"));
                    continue;
                }
                break;
            case AlgClass::Pqmv:
            case AlgClass::QmvOplus:
                if (propagate_fail(AlgClass::InvolutiveBe)) continue;
                if (find(AlgClass::Qw).pass) {
                    out.push_back(pass_report(c, "containment: qw"));
                    continue;
                }
                break;
            case AlgClass::MBe:
            case AlgClass::SAlgebra:
                break;  // self-contained table scans
            case AlgClass::QuasiLinear:
                if (propagate_fail(AlgClass::Qw)) continue;
                break;
        }
        out.push_back(check_class(a, c, CheckOptions{.force = true}));
    }
    return out;
}

}  // namespace qwa
