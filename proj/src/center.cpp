#include "qwa/center.hpp"

#include <sstream>

namespace qwa {

bool commutes(const FiniteAlgebra& a, Elem x, Elem y) { return a.inf(x, y) == a.inf(y, x); }

Subset wajsberg_center(const FiniteAlgebra& a) {
    Subset s = Subset::empty(a.n);
    for (Elem x = 0; x < a.n; ++x) {
        bool central = true;
        for (Elem y = 0; y < a.n && central; ++y)
            if (!commutes(a, x, y)) central = false;
        if (central) s.add(x);
    }
    return s;
}

Subset oml_center(const FiniteAlgebra& a) {
    Subset s = Subset::empty(a.n);
    for (Elem x = 0; x < a.n; ++x)
        if (a.arrow(a.star(x), x) == x) s.add(x);
    return s;
}

FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, const Subset& s) {
    auto elems = s.elements();
    const int m = (int)elems.size();
    if (!s.contains(a.zero) || !s.contains(a.one))
        throw std::invalid_argument("subset must contain zero and one");
    std::vector<Elem> to_sub(a.n, -1);
    for (int i = 0; i < m; ++i) to_sub[elems[i]] = i;
    for (Elem x : elems) {
        if (to_sub[a.star(x)] < 0)
            throw NotClosedError("*", x, -1,
                                 "not closed under *: " + a.name(x) + "* = " +
                                     a.name(a.star(x)) + " is outside the subset");
        for (Elem y : elems)
            if (to_sub[a.arrow(x, y)] < 0)
                throw NotClosedError("->", x, y,
                                     "not closed under ->: " + a.name(x) + " -> " + a.name(y) +
                                         " = " + a.name(a.arrow(x, y)) + " is outside the subset");
    }
    std::vector<std::string> names;
    for (Elem x : elems) names.push_back(a.names[x]);
    std::vector<Elem> imp(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) imp[i * m + j] = to_sub[a.arrow(elems[i], elems[j])];
    return make_algebra(m, std::move(names), std::move(imp), to_sub[a.one], to_sub[a.zero]);
}

std::string format_center_failure(const FiniteAlgebra& a, const CenterFailure& f) {
    std::ostringstream out;
    out << f.tag;
    if (!f.witness.empty()) {
        out << " witness";
        for (const auto& [v, e] : f.witness) out << ' ' << v << '=' << a.name(e);
    }
    return out.str();
}

namespace {

using WitnessVec = std::vector<std::pair<char, Elem>>;

void add_failure(CenterReport& rep, bool structural, const std::string& tag, WitnessVec w) {
    (structural ? rep.structure_ok : rep.closure_ok) = false;
    rep.failures.push_back(CenterFailure{tag, std::move(w)});
}

// closure of S under ->, * plus the designated constants; used by both centers
void check_closure(const FiniteAlgebra& a, const Subset& s, CenterReport& rep) {
    if (!s.contains(a.zero)) add_failure(rep, false, "contains-0", {});
    if (!s.contains(a.one)) add_failure(rep, false, "contains-1", {});
    auto elems = s.elements();
    for (Elem x : elems)
        if (!s.contains(a.star(x))) {
            add_failure(rep, false, "closed-star", {{'x', x}});
            break;
        }
    for (Elem x : elems) {
        for (Elem y : elems)
            if (!s.contains(a.arrow(x, y))) {
                add_failure(rep, false, "closed-arrow", {{'x', x}, {'y', y}});
                goto done_arrow;
            }
    }
done_arrow:;
}

}  // namespace

CenterReport verify_wajsberg_center(const FiniteAlgebra& a) {
    CenterReport rep;
    rep.center = wajsberg_center(a);
    check_closure(a, rep.center, rep);
    auto elems = rep.center.elements();
    bool meet_ok = true, join_ok = true;
    for (Elem x : elems)
        for (Elem y : elems) {
            if (meet_ok && !rep.center.contains(a.inf(x, y))) {
                add_failure(rep, false, "closed-meet", {{'x', x}, {'y', y}});
                meet_ok = false;
            }
            if (join_ok && !rep.center.contains(a.sup(x, y))) {
                add_failure(rep, false, "closed-join", {{'x', x}, {'y', y}});
                join_ok = false;
            }
        }
    if (!rep.closure_ok) {
        rep.structure_ok = false;
        return rep;
    }
    FiniteAlgebra sub = induced_subalgebra(a, rep.center);
    ClassReport w = check_wajsberg(sub);
    if (!w.pass) {
        WitnessVec wit;
        if (w.witness)
            for (auto [v, e] : w.witness->assign) wit.emplace_back(v, elems[e]);
        add_failure(rep, true, "wajsberg:" + (w.witness ? w.witness->axiom : "?"), std::move(wit));
    }
    return rep;
}

CenterReport verify_center_lattice(const FiniteAlgebra& a, bool bound_over_all) {
    CenterReport rep;
    rep.center = wajsberg_center(a);
    auto elems = rep.center.elements();
    std::vector<Elem> bounds =
        bound_over_all ? Subset::full(a.n).elements() : elems;

    bool upper_ok = true, least_ok = true, lower_ok = true, greatest_ok = true;
    for (Elem x : elems)
        for (Elem y : elems) {
            Elem j = a.sup(x, y), m = a.inf(x, y);
            if (upper_ok && !(a.leqQ(x, j) && a.leqQ(y, j))) {
                add_failure(rep, true, "lub-upper", {{'x', x}, {'y', y}});
                upper_ok = false;
            }
            if (lower_ok && !(a.leqQ(m, x) && a.leqQ(m, y))) {
                add_failure(rep, true, "glb-lower", {{'x', x}, {'y', y}});
                lower_ok = false;
            }
            for (Elem z : bounds) {
                if (least_ok && a.leqQ(x, z) && a.leqQ(y, z) && !a.leqQ(j, z)) {
                    add_failure(rep, true, "lub-least", {{'x', x}, {'y', y}, {'z', z}});
                    least_ok = false;
                }
                if (greatest_ok && a.leqQ(z, x) && a.leqQ(z, y) && !a.leqQ(z, m)) {
                    add_failure(rep, true, "glb-greatest", {{'x', x}, {'y', y}, {'z', z}});
                    greatest_ok = false;
                }
            }
        }

    bool d1_ok = true, d2_ok = true;
    for (Elem x : elems)
        for (Elem y : elems)
            for (Elem z : elems) {
                if (d1_ok && a.inf(x, a.sup(y, z)) != a.sup(a.inf(x, y), a.inf(x, z))) {
                    add_failure(rep, true, "distrib-meet-join", {{'x', x}, {'y', y}, {'z', z}});
                    d1_ok = false;
                }
                if (d2_ok && a.sup(x, a.inf(y, z)) != a.inf(a.sup(x, y), a.sup(x, z))) {
                    add_failure(rep, true, "distrib-join-meet", {{'x', x}, {'y', y}, {'z', z}});
                    d2_ok = false;
                }
            }
    return rep;
}

CenterReport verify_kleene_center(const FiniteAlgebra& a) {
    CenterReport rep;
    rep.center = wajsberg_center(a);
    auto elems = rep.center.elements();
    bool k1 = true, k2 = true, k3 = true, ann1 = true, ann2 = true;
    for (Elem x : elems) {
        if (k1 && a.star(a.star(x)) != x) {
            add_failure(rep, true, "K1", {{'x', x}});
            k1 = false;
        }
        for (Elem y : elems) {
            if (k2 && a.star(a.sup(x, y)) != a.inf(a.star(x), a.star(y))) {
                add_failure(rep, true, "K2", {{'x', x}, {'y', y}});
                k2 = false;
            }
            if (k3 && !a.leqQ(a.inf(x, a.star(x)), a.sup(y, a.star(y)))) {
                add_failure(rep, true, "K3", {{'x', x}, {'y', y}});
                k3 = false;
            }
            if (ann1 && a.inf(a.prod(a.star(x), y), a.prod(x, a.star(y))) != a.zero) {
                add_failure(rep, true, "zero-mixed-prod", {{'x', x}, {'y', y}});
                ann1 = false;
            }
            if (ann2 &&
                a.prod(a.inf(x, a.star(x)), a.inf(y, a.star(y))) != a.zero) {
                add_failure(rep, true, "zero-self-prod", {{'x', x}, {'y', y}});
                ann2 = false;
            }
        }
    }
    return rep;
}

LatticeView extract_lattice(const FiniteAlgebra& a, const Subset& s) {
    auto elems = s.elements();
    const int m = (int)elems.size();
    std::vector<Elem> to_sub(a.n, -1);
    for (int i = 0; i < m; ++i) to_sub[elems[i]] = i;
    LatticeView l;
    l.m = m;
    l.base = elems;
    for (Elem x : elems) l.names.push_back(a.names[x]);
    if (!s.contains(a.zero) || !s.contains(a.one))
        throw std::invalid_argument("subset must contain zero and one");
    l.zero = to_sub[a.zero];
    l.one = to_sub[a.one];
    l.meet.resize(m * m);
    l.join.resize(m * m);
    l.comp.resize(m);
    for (int i = 0; i < m; ++i) {
        Elem sx = a.star(elems[i]);
        if (to_sub[sx] < 0)
            throw NotClosedError("*", elems[i], -1,
                                 "not closed under *: " + a.name(elems[i]) + "* is outside");
        l.comp[i] = to_sub[sx];
        for (int j = 0; j < m; ++j) {
            Elem mv = a.infL(elems[i], elems[j]);
            Elem jv = a.supL(elems[i], elems[j]);
            if (to_sub[mv] < 0)
                throw NotClosedError("&&", elems[i], elems[j],
                                     "not closed under &&: value outside the subset");
            if (to_sub[jv] < 0)
                throw NotClosedError("||", elems[i], elems[j],
                                     "not closed under ||: value outside the subset");
            l.meet[i * m + j] = to_sub[mv];
            l.join[i * m + j] = to_sub[jv];
        }
    }
    return l;
}

std::optional<CenterFailure> ortholattice_check(const LatticeView& l) {
    const int m = l.m;
    auto fail = [](const char* tag, WitnessVec w) {
        return CenterFailure{tag, std::move(w)};
    };
    for (Elem x = 0; x < m; ++x) {
        if (l.meet_at(x, x) != x) return fail("Q1-idem-meet", {{'x', x}});
        if (l.join_at(x, x) != x) return fail("Q1-idem-join", {{'x', x}});
        if (l.meet_at(l.zero, x) != l.zero || l.meet_at(x, l.one) != x ||
            l.join_at(x, l.zero) != x || l.join_at(x, l.one) != l.one)
            return fail("Q1-bounds", {{'x', x}});
    }
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) {
            if (l.meet_at(x, y) != l.meet_at(y, x)) return fail("Q1-comm-meet", {{'x', x}, {'y', y}});
            if (l.join_at(x, y) != l.join_at(y, x)) return fail("Q1-comm-join", {{'x', x}, {'y', y}});
            if (l.meet_at(x, l.join_at(x, y)) != x) return fail("Q1-absorb-1", {{'x', x}, {'y', y}});
            if (l.join_at(x, l.meet_at(x, y)) != x) return fail("Q1-absorb-2", {{'x', x}, {'y', y}});
        }
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y)
            for (Elem z = 0; z < m; ++z) {
                if (l.meet_at(x, l.meet_at(y, z)) != l.meet_at(l.meet_at(x, y), z))
                    return fail("Q1-assoc-meet", {{'x', x}, {'y', y}, {'z', z}});
                if (l.join_at(x, l.join_at(y, z)) != l.join_at(l.join_at(x, y), z))
                    return fail("Q1-assoc-join", {{'x', x}, {'y', y}, {'z', z}});
            }
    for (Elem x = 0; x < m; ++x) {
        if (l.meet_at(x, l.comp[x]) != l.zero) return fail("Q2-meet", {{'x', x}});
        if (l.join_at(x, l.comp[x]) != l.one) return fail("Q2-join", {{'x', x}});
        if (l.comp[l.comp[x]] != x) return fail("Q4-involution", {{'x', x}});
    }
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) {
            if (l.comp[l.meet_at(x, y)] != l.join_at(l.comp[x], l.comp[y]))
                return fail("Q3-demorgan-meet", {{'x', x}, {'y', y}});
            if (l.comp[l.join_at(x, y)] != l.meet_at(l.comp[x], l.comp[y]))
                return fail("Q3-demorgan-join", {{'x', x}, {'y', y}});
        }
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y)
            if (l.le(x, y) && l.join_at(x, l.meet_at(l.comp[x], y)) != y)
                return fail("Q5-orthomodular", {{'x', x}, {'y', y}});
    return std::nullopt;
}

FiniteAlgebra oml_to_qw(const LatticeView& l) {
    if (auto f = ortholattice_check(l))
        throw NotOrthomodularError(*f, "input is not an orthomodular lattice (" + f->tag + ")");
    const int m = l.m;
    std::vector<Elem> imp(m * m);
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) imp[x * m + y] = l.join_at(l.comp[x], y);
    return make_algebra(m, l.names, std::move(imp), l.one, l.zero);
}

CenterReport verify_oml_center(const FiniteAlgebra& a) {
    CenterReport rep;
    rep.center = oml_center(a);
    check_closure(a, rep.center, rep);
    if (!rep.closure_ok) {
        rep.structure_ok = false;
        return rep;
    }
    auto elems = rep.center.elements();
    LatticeView l = extract_lattice(a, rep.center);  // closure above makes this safe

    // <=L coincides with <=Q on the orthocenter
    for (Elem x : elems)
        for (Elem y : elems)
            if (a.leqL(x, y) != a.leqQ(x, y)) {
                add_failure(rep, true, "leqL-eq-leqQ", {{'x', x}, {'y', y}});
                goto done_order;
            }
done_order:
    // || and && are the <=Q bounds within the orthocenter
    {
        bool lub_ok = true, glb_ok = true;
        for (Elem x : elems)
            for (Elem y : elems) {
                Elem j = a.supL(x, y), m2 = a.infL(x, y);
                if (lub_ok && !(a.leqQ(x, j) && a.leqQ(y, j))) {
                    add_failure(rep, true, "lub", {{'x', x}, {'y', y}});
                    lub_ok = false;
                }
                if (glb_ok && !(a.leqQ(m2, x) && a.leqQ(m2, y))) {
                    add_failure(rep, true, "glb", {{'x', x}, {'y', y}});
                    glb_ok = false;
                }
                for (Elem z : elems) {
                    if (lub_ok && a.leqQ(x, z) && a.leqQ(y, z) && !a.leqQ(j, z)) {
                        add_failure(rep, true, "lub", {{'x', x}, {'y', y}, {'z', z}});
                        lub_ok = false;
                    }
                    if (glb_ok && a.leqQ(z, x) && a.leqQ(z, y) && !a.leqQ(z, m2)) {
                        add_failure(rep, true, "glb", {{'x', x}, {'y', y}, {'z', z}});
                        glb_ok = false;
                    }
                }
            }
    }
    if (auto f = ortholattice_check(l)) {
        WitnessVec wit;
        for (auto [v, e] : f->witness) wit.emplace_back(v, l.base[e]);
        add_failure(rep, true, f->tag, std::move(wit));
    }
    return rep;
}

CenterReport verify_quasilinear_center(const FiniteAlgebra& a, CheckOptions opts) {
    CenterReport rep;
    rep.center = wajsberg_center(a);
    ClassReport ql = check_quasi_linear(a, opts);
    if (!ql.pass) {
        WitnessVec wit;
        if (ql.witness) wit = ql.witness->assign;
        add_failure(rep, true, "pre-quasilinear", std::move(wit));
        return rep;
    }
    auto elems = rep.center.elements();
    for (Elem x : elems)
        for (Elem y : elems)
            if (!a.leq(x, y) && !a.leq(y, x)) {
                add_failure(rep, true, "linear", {{'x', x}, {'y', y}});
                return rep;
            }
    return rep;
}

std::optional<std::array<Elem, 3>> latl_distributivity_witness(const FiniteAlgebra& a,
                                                               const Subset& s) {
    auto elems = s.elements();
    for (Elem x : elems)
        for (Elem y : elems)
            for (Elem z : elems)
                if (a.supL(x, a.infL(y, z)) != a.infL(a.supL(x, y), a.supL(x, z)))
                    return std::array<Elem, 3>{x, y, z};
    return std::nullopt;
}

std::string hasse_export(const FiniteAlgebra& a, OrderKind order, const Subset& s) {
    auto elems = s.elements();
    auto le = [&](Elem x, Elem y) {
        return order == OrderKind::Leq ? a.leq(x, y) : a.leqQ(x, y);
    };
    std::ostringstream out;
    for (Elem x : elems) out << "node " << a.name(x) << '\n';
    for (Elem x : elems)
        for (Elem y : elems) {
            if (x == y || !le(x, y)) continue;
            if (le(y, x)) continue;  // collapse preorder cycles rather than emit both arcs
            bool covering = true;
            for (Elem z : elems) {
                if (z == x || z == y) continue;
                if (le(x, z) && le(z, y) && !le(z, x) && !le(y, z)) {
                    covering = false;
                    break;
                }
            }
            if (covering) out << "edge " << a.name(x) << ' ' << a.name(y) << '\n';
        }
    return out.str();
}

}  // namespace qwa
