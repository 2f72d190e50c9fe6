//! Enumeration of distinct family members by minimal crossing number.
//!
//! The sweep walks every normalized parameter tuple with
//! |p| + |q| + r + |s| <= n + 6, keeps the tuples whose crossing number is
//! exactly n, and deduplicates by the fingerprint of each tuple's minimal
//! form. The slack of six absorbs the strand moves that separate a raw
//! tuple from its minimal form; a closure test elsewhere checks that
//! widening the ball further changes nothing.
//!
//! Counts are of link types: mirror pairs are identified by the
//! fingerprint itself and the trivial knot and links (crossing number
//! zero) are never requested here, since callers enumerate n >= 1.

use crate::family::FamilyParams;
use crate::fingerprint::Fingerprint;
use crate::mcn::{mcn, minimal_form};
use crate::tangle;
use crate::Error;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::collections::BTreeSet;

/// Hard ceiling on the enumerable crossing number.
pub const ENUMERATE_MAX: u32 = 16;

/// One row of the growth table.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CountReport {
    /// Crossing number this row counts.
    pub n: u32,
    /// Normalized tuples inside the sweep ball whose crossing number is n.
    pub raw_tuples: u64,
    /// Distinct fingerprints among their minimal forms.
    pub distinct: u64,
    /// The theorem's ceiling, 96 n^3.
    pub bound: u64,
    /// distinct / n^3 in lowest terms.
    pub ratio_num: u64,
    /// Denominator of the reduced ratio.
    pub ratio_den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    if a == 0 {
        1
    } else {
        a
    }
}

fn check_n(n: u32) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::Parse("crossing number must be positive".into()));
    }
    if n > ENUMERATE_MAX {
        return Err(Error::SizeLimit {
            what: "enumeration crossing number".into(),
            limit: ENUMERATE_MAX as u64,
            actual: n as u64,
        });
    }
    Ok(())
}

/// All normalized tuples with |p| + |q| + r + |s| <= budget.
fn sweep_ball(budget: i32) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for p in -budget..=budget {
        for q in -(budget - p.abs())..=(budget - p.abs()) {
            let left = budget - p.abs() - q.abs();
            for r in 0..=left {
                for s in -(left - r)..=(left - r) {
                    let t = FamilyParams::new(p, q, r, s);
                    if t.is_normalized() {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Tuples at crossing number n in the sweep ball, with the fingerprint of
/// each tuple's minimal form. Parallel over tuples; the result is sorted
/// by tuple so the schedule cannot leak into the output.
fn survey(n: u32) -> Result<Vec<(FamilyParams, Fingerprint)>, Error> {
    check_n(n)?;
    let ball = sweep_ball(n as i32 + 6);
    let mut hits: Vec<(FamilyParams, Fingerprint)> = crate::thread_pool().install(|| {
        ball.into_par_iter()
            .filter(|t| mcn(*t) == n)
            .map(|t| {
                let form = minimal_form(t).form;
                (t, tangle::class_fingerprint(&form))
            })
            .collect()
    });
    hits.sort_by_key(|(t, _)| *t);
    Ok(hits)
}

/// Distinct family members with crossing number exactly n.
///
/// Deduplication is by fingerprint of the minimal form. Two tuples may
/// only share a fingerprint if their minimal forms agree on component
/// count; a clash is reported as a model violation rather than absorbed,
/// since it would mean either a bad table entry or a fingerprint
/// collision.
pub fn enumerate_mcn(n: u32) -> Result<BTreeSet<Fingerprint>, Error> {
    let hits = survey(n)?;
    let mut seen: BTreeMap<Fingerprint, FamilyParams> = BTreeMap::new();
    for (t, fp) in hits {
        if let Some(first) = seen.get(&fp) {
            let a = minimal_form(*first).form.component_count();
            let b = minimal_form(t).form.component_count();
            if a != b {
                return Err(Error::ModelViolation(format!(
                    "tuples {first} and {t} share a fingerprint but have {a} and {b} components"
                )));
            }
        } else {
            seen.insert(fp, t);
        }
    }
    Ok(seen.into_keys().collect())
}

/// Growth table for crossing numbers 2..=n_max.
///
/// Each row enforces the ceiling distinct <= 96 n^3 and the floor
/// distinct >= 1 (the (2,n) torus links alone guarantee it); a violation
/// of either is an error, not a warning. A fingerprint appearing at two
/// different crossing numbers is likewise an error: equal fingerprints
/// must mean equal links, and a link has one crossing number.
pub fn count_report(n_max: u32) -> Result<Vec<CountReport>, Error> {
    check_n(n_max.max(1))?;
    let mut rows = Vec::new();
    let mut first_seen: BTreeMap<Fingerprint, u32> = BTreeMap::new();
    for n in 2..=n_max {
        let hits = survey(n)?;
        let raw_tuples = hits.len() as u64;
        let mut set = BTreeSet::new();
        for (t, fp) in hits {
            if let Some(&m) = first_seen.get(&fp) {
                if m != n {
                    return Err(Error::ModelViolation(format!(
                        "fingerprint of {t} counted at crossing numbers {m} and {n}"
                    )));
                }
            } else {
                first_seen.insert(fp.clone(), n);
            }
            set.insert(fp);
        }
        let distinct = set.len() as u64;
        let n3 = (n as u64).pow(3);
        let bound = 96 * n3;
        if distinct > bound {
            return Err(Error::ModelViolation(format!(
                "{distinct} distinct members at crossing number {n} exceeds the bound {bound}"
            )));
        }
        if distinct == 0 {
            return Err(Error::ModelViolation(format!(
                "no members at crossing number {n}; the (2,{n}) torus link is one"
            )));
        }
        let g = gcd(distinct, n3);
        rows.push(CountReport {
            n,
            raw_tuples,
            distinct,
            bound,
            ratio_num: distinct / g,
            ratio_den: n3 / g,
        });
    }
    Ok(rows)
}

/// CSV projection of the growth table.
pub fn count_csv(rows: &[CountReport]) -> String {
    let mut out = String::from("n,raw_tuples,distinct,bound,ratio_num,ratio_den\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n, r.raw_tuples, r.distinct, r.bound, r.ratio_num, r.ratio_den
        ));
    }
    out
}
