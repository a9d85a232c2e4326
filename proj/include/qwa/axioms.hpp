#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwa/algebra.hpp"

// Membership checks for the algebra classes, with deterministic first
// counterexamples: axioms are scanned in their numbered order, assignments in
// lexicographic index order (x outermost).

namespace qwa {

enum class AlgClass {
    Be,
    BoundedBe,
    InvolutiveBe,
    Bck,
    CommutativeBe,
    Wajsberg,
    MBe,
    SAlgebra,
    QmvOplus,
    Pqmv,
    Qw,
    QuasiLinear,
};

inline constexpr AlgClass kAllClasses[] = {
    AlgClass::Be,       AlgClass::BoundedBe, AlgClass::InvolutiveBe, AlgClass::Bck,
    AlgClass::CommutativeBe, AlgClass::Wajsberg,  AlgClass::Qw,           AlgClass::Pqmv,
    AlgClass::QmvOplus, AlgClass::MBe,       AlgClass::SAlgebra,     AlgClass::QuasiLinear,
};

const char* class_tag(AlgClass c);  // "be", "bounded-be", ...
std::optional<AlgClass> class_from_tag(std::string_view tag);

struct Witness {
    std::vector<std::pair<char, Elem>> assign;  // ('x', e), ('y', e), ('z', e)
    std::string axiom;                          // violated axiom tag, e.g. "BE3"
};

struct ClassReport {
    AlgClass cls;
    bool pass = false;
    std::optional<Witness> witness;  // present iff !pass
    std::string note;                // containment / alternate-reading remarks
};

// "CLASS qw PASS" / "CLASS wajsberg FAIL witness x=a y=c z=b axiom=W2"
std::string format_report(const FiniteAlgebra& a, const ClassReport& r);

struct CheckOptions {
    bool force = false;              // skip containment pre-checks, scan own axioms directly
    bool quasilinear_leqq_strict = false;  // read "y < x" as strict <=Q instead of strict <=
};

ClassReport check_be(const FiniteAlgebra& a, CheckOptions opts = {});
ClassReport check_bounded(const FiniteAlgebra& a, CheckOptions opts = {});
ClassReport check_involutive(const FiniteAlgebra& a, CheckOptions opts = {});
ClassReport check_bck(const FiniteAlgebra& a, CheckOptions opts = {});
ClassReport check_commutative(const FiniteAlgebra& a, CheckOptions opts = {});
ClassReport check_wajsberg(const FiniteAlgebra& a, CheckOptions opts = {});

// (QW) scan; also evaluates (QW1) and (QW2) and flags any disagreement with
// the (QW) verdict in the report note (never expected to fire).
ClassReport check_qw(const FiniteAlgebra& a, CheckOptions opts = {});
ClassReport check_pqmv(const FiniteAlgebra& a, CheckOptions opts = {});
ClassReport check_qmv_oplus(const FiniteAlgebra& a, CheckOptions opts = {});

// Checks over a caller-provided operation table (n*n row-major); star and the
// constants come from the carrier algebra.
ClassReport check_m_be(const FiniteAlgebra& a, std::span<const Elem> prod_table);
ClassReport check_s_algebra(const FiniteAlgebra& a, std::span<const Elem> oplus_table);

// Default reading: for all x, y either x <=Q y, or y <= x with y != x.
// The alternate strict-<=Q reading is always evaluated too; when the verdicts
// differ the note records the alternate result.
ClassReport check_quasi_linear(const FiniteAlgebra& a, CheckOptions opts = {});

// Dispatcher; MBe / SAlgebra run on the derived prod / oplus tables.
ClassReport check_class(const FiniteAlgebra& a, AlgClass c, CheckOptions opts = {});

bool passes(const FiniteAlgebra& a, AlgClass c);

// The whole hierarchy in kAllClasses order. With force=false containment
// short-circuits propagate the prerequisite's witness; with force=true every
// class scans its own axioms regardless.
std::vector<ClassReport> classify(const FiniteAlgebra& a, bool force = false);

}  // namespace qwa
