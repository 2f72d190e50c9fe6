//! Minimal crossing forms and numbers for family members.
//!
//! Every normalized parameter tuple falls into exactly one of twenty-seven
//! cases, checked in a fixed precedence order; the first matching guard
//! wins. Guards treat the first two rows as an unordered pair, so each is
//! tried against (p,q) and (q,p). A case carries the minimal form, the
//! number of strands moved to reach it, and the crossing number.
//!
//! Crossing numbers of named forms are computed after structural collapse
//! of degenerate parameters, which resolves every conditional "-1" in the
//! case formulas through the clasp sign rule: a pretzel with a unit row is
//! a clasp in disguise, and same-sign clasps save one crossing.

use crate::family::{FamilyParams, LinkClass};
use crate::Error;
use std::fmt;

/// Case identifiers in precedence order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub enum CaseId {
    #[serde(rename = "PQ_ZERO")]
    PqZero,
    #[serde(rename = "R_ZERO")]
    RZero,
    #[serde(rename = "R1_Q0")]
    R1Q0,
    #[serde(rename = "R1_PQ_NONZERO")]
    R1PqNonzero,
    #[serde(rename = "Q_ZERO")]
    QZero,
    #[serde(rename = "PQ_MINUS_ONE")]
    PqMinusOne,
    #[serde(rename = "PQ_ONE_S_ZERO")]
    PqOneSZero,
    #[serde(rename = "POS_Q_ONE_S_POS")]
    PosQOneSPos,
    #[serde(rename = "ONES_S_NEG")]
    OnesSNeg,
    #[serde(rename = "NEG_Q_NEG_ONE_S_POS")]
    NegQNegOneSPos,
    #[serde(rename = "NEG_NEG_S_NONPOS")]
    NegNegSNonpos,
    #[serde(rename = "BIG_BIG_S_ZERO")]
    BigBigSZero,
    #[serde(rename = "NEG_BIG_S_ZERO")]
    NegBigSZero,
    #[serde(rename = "UNIT_Q_S_ZERO")]
    UnitQSZero,
    #[serde(rename = "QS_MINUS_ONE")]
    QsMinusOne,
    #[serde(rename = "POS_Q_ONE_S_NEG")]
    PosQOneSNeg,
    #[serde(rename = "NEG_Q_ONE_S_NEG")]
    NegQOneSNeg,
    #[serde(rename = "POS_POS_S_ONE")]
    PosPosSOne,
    #[serde(rename = "NEG_POS_S_ONE")]
    NegPosSOne,
    #[serde(rename = "NEG_Q_ONE_S_BIG")]
    NegQOneSBig,
    #[serde(rename = "BIG_Q_NEG_ONE_S_NEG")]
    BigQNegOneSNeg,
    #[serde(rename = "BIG_Q_NEG_ONE_S_TWO")]
    BigQNegOneSTwo,
    #[serde(rename = "BIG_Q_NEG_ONE_S_BIG")]
    BigQNegOneSBig,
    #[serde(rename = "BOTH_BIG_S_NEG")]
    BothBigSNeg,
    #[serde(rename = "BOTH_BIG_S_BIG")]
    BothBigSBig,
    #[serde(rename = "NEG_Q_NEG_TWO_S_ONE")]
    NegQNegTwoSOne,
    #[serde(rename = "HARA_YAMAMOTO")]
    HaraYamamoto,
}

impl CaseId {
    pub fn name(self) -> &'static str {
        use CaseId::*;
        match self {
            PqZero => "PQ_ZERO",
            RZero => "R_ZERO",
            R1Q0 => "R1_Q0",
            R1PqNonzero => "R1_PQ_NONZERO",
            QZero => "Q_ZERO",
            PqMinusOne => "PQ_MINUS_ONE",
            PqOneSZero => "PQ_ONE_S_ZERO",
            PosQOneSPos => "POS_Q_ONE_S_POS",
            OnesSNeg => "ONES_S_NEG",
            NegQNegOneSPos => "NEG_Q_NEG_ONE_S_POS",
            NegNegSNonpos => "NEG_NEG_S_NONPOS",
            BigBigSZero => "BIG_BIG_S_ZERO",
            NegBigSZero => "NEG_BIG_S_ZERO",
            UnitQSZero => "UNIT_Q_S_ZERO",
            QsMinusOne => "QS_MINUS_ONE",
            PosQOneSNeg => "POS_Q_ONE_S_NEG",
            NegQOneSNeg => "NEG_Q_ONE_S_NEG",
            PosPosSOne => "POS_POS_S_ONE",
            NegPosSOne => "NEG_POS_S_ONE",
            NegQOneSBig => "NEG_Q_ONE_S_BIG",
            BigQNegOneSNeg => "BIG_Q_NEG_ONE_S_NEG",
            BigQNegOneSTwo => "BIG_Q_NEG_ONE_S_TWO",
            BigQNegOneSBig => "BIG_Q_NEG_ONE_S_BIG",
            BothBigSNeg => "BOTH_BIG_S_NEG",
            BothBigSBig => "BOTH_BIG_S_BIG",
            NegQNegTwoSOne => "NEG_Q_NEG_TWO_S_ONE",
            HaraYamamoto => "HARA_YAMAMOTO",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the minimal form is certified minimal.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    /// A named class whose crossing number is known exactly.
    NamedClass,
    /// A reduced alternating rearrangement of the member itself.
    ReducedAlternating,
    /// A reduced Montesinos rearrangement of the member itself.
    ReducedMontesinos,
    /// Minimal by the Hara-Yamamoto positive-braid criterion.
    HaraYamamoto,
    /// The unknot or unlink; crossing number zero.
    Trivial,
}

/// Minimal crossing data for one family member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalForm {
    pub case: CaseId,
    pub kind: FormKind,
    pub form: LinkClass,
    pub mcn: u32,
    pub strands_moved: u8,
}

/// Crossing number of a clasp with both parameters of magnitude at least
/// two. Same-sign clasps flype one crossing away; mixed signs do not.
pub fn mcn_clasp(r: i32, s: i32) -> Result<u32, Error> {
    if r.abs() <= 1 || s.abs() <= 1 {
        return Err(Error::ModelViolation(format!(
            "mcn_clasp requires |r|,|s| >= 2, got ({r},{s})"
        )));
    }
    let total = r.unsigned_abs() + s.unsigned_abs();
    Ok(if (r > 0) == (s > 0) { total - 1 } else { total })
}

/// Crossing number of any named-class value, degenerate parameters
/// collapsing first.
pub(crate) fn class_mcn(lc: &LinkClass) -> u32 {
    fn go(lc: &LinkClass) -> u32 {
        match lc {
            LinkClass::Unknot | LinkClass::Unlink2 => 0,
            LinkClass::Torus(n) => n.unsigned_abs(),
            LinkClass::Clasp(r, s) => mcn_clasp(*r, *s).expect("canonical clasp"),
            LinkClass::Pretzel(a, b, c) => pretzel_mcn(*a, *b, *c),
            LinkClass::ConnSum(l, r) => go(l) + go(r),
            LinkClass::PlusTrivial(inner) => go(inner),
            LinkClass::Family(_) => unreachable!("named forms only"),
        }
    }
    go(&lc.clone().canonical())
}

fn pretzel_mcn(a: i32, b: i32, c: i32) -> u32 {
    // Canonical pretzels have no zero rows and never a +1 alongside a -1.
    // A single unit row converts to a clasp, which may save one crossing.
    if let Some(i) = [a, b, c].iter().position(|x| x.abs() == 1) {
        let e = [a, b, c][i];
        let (x, y) = match i {
            0 => (b, c),
            1 => (a, c),
            _ => (a, b),
        };
        class_mcn(&LinkClass::Clasp(x + e, y + e))
    } else {
        a.unsigned_abs() + b.unsigned_abs() + c.unsigned_abs()
    }
}

/// One matched case: the identifier plus the (p,q) orientation that
/// satisfied its guard.
struct Match {
    case: CaseId,
    a: i32,
    b: i32,
}

fn dispatch(t: FamilyParams) -> Match {
    use CaseId::*;
    let FamilyParams { p, q, r, s } = t;
    debug_assert!(r >= 0 && p >= q, "dispatch wants normalized params");
    let m = |case, a, b| Match { case, a, b };
    let orient = [(p, q), (q, p)];

    if p == 0 && q == 0 {
        return m(PqZero, p, q);
    }
    if r == 0 {
        return m(RZero, p, q);
    }
    if r == 1 {
        for (a, b) in orient {
            if a != 0 && b == 0 {
                return m(R1Q0, a, b);
            }
        }
        return m(R1PqNonzero, p, q);
    }
    // r > 1 below.
    for (a, b) in orient {
        if a != 0 && b == 0 {
            return m(QZero, a, b);
        }
    }
    if p * q == -1 {
        return m(PqMinusOne, p, q);
    }
    if p * q == 1 && s == 0 {
        return m(PqOneSZero, p, q);
    }
    for (a, b) in orient {
        if a >= 1 && b == 1 && s > 0 {
            return m(PosQOneSPos, a, b);
        }
    }
    if p == 1 && q == 1 && s < 0 {
        return m(OnesSNeg, p, q);
    }
    for (a, b) in orient {
        if a <= -1 && b == -1 && s > 0 {
            return m(NegQNegOneSPos, a, b);
        }
    }
    if p < 0 && q < 0 && s <= 0 {
        return m(NegNegSNonpos, p, q);
    }
    if p > 1 && q > 1 && s == 0 {
        return m(BigBigSZero, p, q);
    }
    for (a, b) in orient {
        if a < -1 && b > 1 && s == 0 {
            return m(NegBigSZero, a, b);
        }
    }
    for (a, b) in orient {
        if a.abs() > 1 && b.abs() == 1 && s == 0 {
            return m(UnitQSZero, a, b);
        }
    }
    for (a, b) in orient {
        if b * s == -1 {
            return m(QsMinusOne, a, b);
        }
    }
    for (a, b) in orient {
        if a > 0 && b == 1 && s < 0 {
            return m(PosQOneSNeg, a, b);
        }
    }
    for (a, b) in orient {
        if a <= -2 && b == 1 && s <= -2 {
            return m(NegQOneSNeg, a, b);
        }
    }
    if p > 0 && q > 0 && s == 1 {
        return m(PosPosSOne, p, q);
    }
    for (a, b) in orient {
        if a < -1 && b > 0 && s == 1 {
            return m(NegPosSOne, a, b);
        }
    }
    for (a, b) in orient {
        if a < -1 && b == 1 && s > 1 {
            return m(NegQOneSBig, a, b);
        }
    }
    for (a, b) in orient {
        if a > 1 && b == -1 && s < 0 {
            return m(BigQNegOneSNeg, a, b);
        }
    }
    for (a, b) in orient {
        if a > 1 && b == -1 && s == 2 {
            return m(BigQNegOneSTwo, a, b);
        }
    }
    for (a, b) in orient {
        if a > 1 && b == -1 && s > 2 {
            return m(BigQNegOneSBig, a, b);
        }
    }
    if p.abs() > 1 && q.abs() > 1 && s < 0 {
        return m(BothBigSNeg, p, q);
    }
    if p.abs() > 1 && q.abs() > 1 && s > 1 {
        return m(BothBigSBig, p, q);
    }
    for (a, b) in orient {
        if a < -1 && b == -2 && s == 1 {
            return m(NegQNegTwoSOne, a, b);
        }
    }
    if p < -2 && q < -2 && s == 1 {
        return m(HaraYamamoto, p, q);
    }
    unreachable!("no case matched normalized {t}");
}

/// Which case a normalized tuple falls into.
pub fn classify_case(params: FamilyParams) -> CaseId {
    dispatch(params.normalize()).case
}

/// The minimal crossing form of a family member.
pub fn minimal_form(params: FamilyParams) -> MinimalForm {
    use CaseId::*;
    let t = params.normalize();
    let Match { case, a, b } = dispatch(t);
    let r = t.r;
    let s = t.s;
    // Named rows build a class and take its collapsed crossing number;
    // rearrangement rows keep the member itself and use the row formula.
    let named = |form: LinkClass| {
        let mcn = class_mcn(&form);
        (form.canonical(), mcn)
    };
    let own = |formula: i32| {
        assert!(formula >= 0, "negative crossing formula for {t}");
        (LinkClass::Family(t), formula as u32)
    };
    let (kind, strands, (form, mcn)) = match case {
        PqZero => (
            FormKind::NamedClass,
            0,
            named(LinkClass::plus_trivial(LinkClass::Clasp(r, s))),
        ),
        RZero => (FormKind::NamedClass, 0, named(LinkClass::Torus(a + b))),
        R1Q0 => (
            FormKind::NamedClass,
            0,
            named(LinkClass::connected_sum(
                LinkClass::Torus(a),
                LinkClass::Torus(s + 1),
            )),
        ),
        R1PqNonzero => (FormKind::NamedClass, 0, named(LinkClass::Pretzel(a, b, s + 1))),
        QZero => (
            FormKind::NamedClass,
            0,
            named(LinkClass::connected_sum(
                LinkClass::Torus(a),
                LinkClass::Clasp(r, s),
            )),
        ),
        PqMinusOne => (FormKind::NamedClass, 0, named(LinkClass::Torus(r))),
        PqOneSZero => (FormKind::NamedClass, 0, named(LinkClass::Clasp(2 * a, r))),
        PosQOneSPos => (FormKind::ReducedAlternating, 1, own(a + (r - 1) + (s - 1) + 2)),
        OnesSNeg => (FormKind::ReducedAlternating, 1, own(r + (-s - 1) + 2)),
        NegQNegOneSPos => (FormKind::ReducedAlternating, 2, own(-a + (r - 1) + (s - 2) + 2)),
        NegNegSNonpos => (FormKind::ReducedAlternating, 0, own(-a - b + r - s)),
        BigBigSZero => (FormKind::ReducedAlternating, 2, own((a - 1) + (b - 1) + (r - 2) + 2)),
        NegBigSZero => (FormKind::ReducedAlternating, 1, own(-a + (b - 1) + (r - 1) + 1)),
        UnitQSZero => (FormKind::NamedClass, 0, named(LinkClass::Clasp(r + b, a))),
        QsMinusOne => (FormKind::NamedClass, 1, named(LinkClass::Torus(r + a + s))),
        PosQOneSNeg => (FormKind::ReducedAlternating, 1, own(a + r + (-s - 1) + 1)),
        NegQOneSNeg => (FormKind::ReducedAlternating, 1, own((-a - 2) + r + (-s - 2) + 1)),
        PosPosSOne => (FormKind::ReducedAlternating, 1, own(a + b + (r - 1) + 1)),
        NegPosSOne => (FormKind::ReducedAlternating, 1, own((-a - 1) + b + (r - 1))),
        NegQOneSBig => (FormKind::ReducedAlternating, 2, own((-a - 1) + (r - 1) + (s - 1) + 2)),
        BigQNegOneSNeg => (FormKind::ReducedAlternating, 1, own((a - 1) + r - s + 1)),
        BigQNegOneSTwo => (FormKind::Trivial, 2, (LinkClass::Unknot, 0)),
        BigQNegOneSBig => (FormKind::ReducedAlternating, 3, own((a - 2) + (r - 1) + (s - 3) + 2)),
        BothBigSNeg => (FormKind::ReducedMontesinos, 0, own(a.abs() + b.abs() + r - s)),
        BothBigSBig => (
            FormKind::ReducedMontesinos,
            1,
            own(a.abs() + b.abs() + (r - 1) + (s - 1) + 1),
        ),
        NegQNegTwoSOne => (FormKind::NamedClass, 1, named(LinkClass::Pretzel(a, 2, r - 1))),
        HaraYamamoto => (FormKind::HaraYamamoto, 1, own(-a + (-b - 1) + (r - 1))),
    };
    let kind = if mcn == 0 { FormKind::Trivial } else { kind };
    MinimalForm {
        case,
        kind,
        form,
        mcn,
        strands_moved: strands,
    }
}

/// Minimal crossing number of a family member.
pub fn mcn(params: FamilyParams) -> u32 {
    minimal_form(params).mcn
}

/// The named subfamily a parameter tuple degenerates to, or the member
/// itself when no degeneracy pattern applies.
pub fn subfamily_of(params: FamilyParams) -> LinkClass {
    let mf = minimal_form(params);
    match mf.kind {
        FormKind::NamedClass | FormKind::Trivial => mf.form,
        _ => LinkClass::Family(params.normalize()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: i32, q: i32, r: i32, s: i32) -> FamilyParams {
        FamilyParams::new(p, q, r, s)
    }

    #[test]
    fn classify_pins() {
        assert_eq!(classify_case(fp(0, 0, 4, 3)), CaseId::PqZero);
        assert_eq!(classify_case(fp(-3, -3, 4, 1)), CaseId::HaraYamamoto);
        assert_eq!(classify_case(fp(3, 2, 0, 5)), CaseId::RZero);
    }

    #[test]
    fn clasp_pins() {
        assert_eq!(mcn_clasp(5, -2).unwrap(), 7);
        assert_eq!(mcn_clasp(3, 2).unwrap(), 4);
        assert_eq!(mcn_clasp(7, -2).unwrap(), 9);
        assert!(mcn_clasp(1, 5).is_err());
        assert!(mcn_clasp(4, 0).is_err());
    }

    #[test]
    fn minimal_form_pins() {
        let hy = minimal_form(fp(-3, -3, 4, 1));
        assert_eq!(hy.case, CaseId::HaraYamamoto);
        assert_eq!(hy.mcn, 8);

        let cs = minimal_form(fp(2, 0, 3, -2));
        assert_eq!(
            cs.form,
            LinkClass::connected_sum(LinkClass::Torus(2), LinkClass::Clasp(3, -2))
        );
        assert_eq!(cs.mcn, 7);

        let cl = minimal_form(fp(1, 1, 3, 0));
        assert_eq!(cl.form, LinkClass::Clasp(2, 3));
        assert_eq!(cl.mcn, 4);

        let tv = minimal_form(fp(2, -1, 2, 2));
        assert_eq!(tv.kind, FormKind::Trivial);
        assert_eq!(tv.mcn, 0);
    }

    #[test]
    fn mcn_pins() {
        assert_eq!(mcn(fp(0, 0, 5, -2)), 7);
        assert_eq!(mcn(fp(3, 3, 1, 0)), 7);
        assert_eq!(mcn(fp(0, 0, 0, 0)), 0);
    }

    #[test]
    fn total_and_bounded_small_sweep() {
        for p in -6..=6 {
            for q in -6..=6 {
                for r in 0..=6 {
                    for s in -6..=6 {
                        let t = fp(p, q, r, s).normalize();
                        if !t.is_normalized() {
                            continue;
                        }
                        let mf = minimal_form(t);
                        assert!(
                            mf.mcn <= t.raw_crossings(),
                            "{t}: mcn {} exceeds raw {}",
                            mf.mcn,
                            t.raw_crossings()
                        );
                        assert!(mf.strands_moved <= 3, "{t}");
                        assert_eq!(mf.kind == FormKind::Trivial, mf.mcn == 0, "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn mirror_invariant_small_sweep() {
        for p in -5..=5 {
            for q in -5..=5 {
                for r in -5..=5 {
                    for s in -5..=5 {
                        let t = fp(p, q, r, s);
                        assert_eq!(
                            mcn(t.normalize()),
                            mcn(t.mirror().normalize()),
                            "mirror mcn differs at {t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subfamily_projections() {
        assert_eq!(subfamily_of(fp(2, 3, 0, 5)), LinkClass::Torus(5));
        assert_eq!(
            subfamily_of(fp(0, 0, 4, 3)),
            LinkClass::plus_trivial(LinkClass::Clasp(4, 3))
        );
        assert_eq!(subfamily_of(fp(1, -1, 5, 0)), LinkClass::Torus(5));
        assert_eq!(
            subfamily_of(fp(-3, -3, 4, 1)),
            LinkClass::Family(fp(-3, -3, 4, 1))
        );
    }

    #[test]
    fn unit_pretzel_rows_convert_to_clasps() {
        // K(3,1,3) = C(4,4) saves a crossing; mixed signs do not.
        assert_eq!(class_mcn(&LinkClass::Pretzel(3, 3, 1)), 7);
        assert_eq!(class_mcn(&LinkClass::Pretzel(2, 3, 3)), 8);
        assert_eq!(class_mcn(&LinkClass::Pretzel(2, -3, -1)), 5);
        assert_eq!(class_mcn(&LinkClass::Pretzel(2, 3, -1)), 0);
        assert_eq!(class_mcn(&LinkClass::Pretzel(1, -1, 4)), 0);
    }
}
