//! Mirror-identified link fingerprints and name lookup.
//!
//! A fingerprint is the component count together with a canonical Jones
//! polynomial: the least polynomial, under a fixed total order, over all
//! component orientation choices and the mirror image. Links the family
//! treats as equal (mirror pairs, reoriented components) thus hash equal,
//! which is what the deduplication and identification passes need.
//! Fingerprint equality is a strong practical equality test at these sizes,
//! not a theorem; the reference table's collision check guards the usage.

use crate::diagram::Diagram;
use crate::family::LinkClass;
use crate::laurent::Laurent;
use crate::Error;
use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fingerprint {
    components: usize,
    jones: Laurent,
}

impl Fingerprint {
    pub fn of_diagram(d: &Diagram) -> Result<Self, Error> {
        let mut best: Option<Laurent> = None;
        for j in d.jones_all_orientations()? {
            for cand in [j.mirror(), j] {
                best = Some(match best {
                    None => cand,
                    Some(b) => {
                        if cand.cmp_canonical(&b) == Ordering::Less {
                            cand
                        } else {
                            b
                        }
                    }
                });
            }
        }
        Ok(Fingerprint {
            components: d.component_count(),
            jones: best.expect("at least one orientation"),
        })
    }

    pub fn of_class(lc: &LinkClass) -> Result<Self, Error> {
        Self::of_diagram(&lc.diagram())
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Canonical Jones polynomial in x = t^(1/4) (exponents scaled by 4).
    pub fn jones(&self) -> &Laurent {
        &self.jones
    }

    pub fn jones_terms(&self) -> Vec<(i32, i64)> {
        self.jones.terms().collect()
    }

    pub(crate) fn from_parts(components: usize, jones: Laurent) -> Self {
        Fingerprint { components, jones }
    }
}

impl PartialOrd for Fingerprint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fingerprint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.components
            .cmp(&other.components)
            .then_with(|| self.jones.cmp_canonical(&other.jones))
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "components={}, V={}",
            self.components,
            self.jones.display_quarter_t()
        )
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RawEntry {
    name: String,
    expr: String,
    components: usize,
    jones: Vec<(i32, i64)>,
}

struct RefEntry {
    name: String,
    fp: Fingerprint,
}

const REFERENCE_JSON: &str = include_str!("../data/reference_table.json");

/// Names and constructor expressions of the links in the reference table.
/// Order is the regeneration order of the data file.
pub(crate) const REFERENCE_LINKS: &[(&str, &str)] = &[
    ("unknot", "unknot"),
    ("unlink", "unlink"),
    ("Hopf", "T(2,2)"),
    ("3_1", "T(2,3)"),
    ("4_1", "K(2,1,1)"),
    ("5_1", "T(2,5)"),
    ("5_2", "C(3,-2)"),
    ("6_1", "C(4,-2)"),
    ("7_1", "T(2,7)"),
    ("7_2", "C(5,-2)"),
    ("7_4", "K(3,3,1)"),
    ("8_1", "C(6,-2)"),
    ("9_1", "T(2,9)"),
    ("9_2", "C(7,-2)"),
    ("9_5", "K(5,3,1)"),
    ("10_1", "C(8,-2)"),
    ("T(2,4)", "T(2,4)"),
    ("T(2,6)", "T(2,6)"),
    ("T(2,8)", "T(2,8)"),
    ("T(2,10)", "T(2,10)"),
    ("T(2,11)", "T(2,11)"),
    ("T(2,12)", "T(2,12)"),
    ("C(9,-2)", "C(9,-2)"),
    ("C(10,-2)", "C(10,-2)"),
];

fn reference_table() -> &'static [RefEntry] {
    static TABLE: OnceLock<Vec<RefEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let raw: Vec<RawEntry> =
            serde_json::from_str(REFERENCE_JSON).expect("reference table parses");
        let mut entries = Vec::with_capacity(raw.len());
        for e in raw {
            let lc: LinkClass = e
                .expr
                .parse()
                .unwrap_or_else(|err| panic!("reference entry {}: {err}", e.name));
            let fp = Fingerprint::of_class(&lc)
                .unwrap_or_else(|err| panic!("reference entry {}: {err}", e.name));
            assert_eq!(
                fp.components, e.components,
                "reference entry {}: stored component count is stale",
                e.name
            );
            assert_eq!(
                fp.jones_terms(),
                e.jones,
                "reference entry {}: stored polynomial is stale",
                e.name
            );
            entries.push(RefEntry { name: e.name, fp });
        }
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                assert!(
                    entries[i].fp != entries[j].fp,
                    "reference table collision: {} and {}",
                    entries[i].name,
                    entries[j].name
                );
            }
        }
        entries
    })
}

/// Looks a fingerprint up in the reference table.
pub fn identify(fp: &Fingerprint) -> Option<&'static str> {
    reference_table()
        .iter()
        .find(|e| &e.fp == fp)
        .map(|e| e.name.as_str())
}

/// Fingerprints a class and looks it up.
pub fn identify_class(lc: &LinkClass) -> Result<Option<&'static str>, Error> {
    Ok(identify(&Fingerprint::of_class(lc)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn mirror_pairs_share_fingerprints() {
        for (a, b) in [(3, -3), (5, -5), (4, -4), (2, -2)] {
            let fa = Fingerprint::of_diagram(&construct::torus_diagram(a)).unwrap();
            let fb = Fingerprint::of_diagram(&construct::torus_diagram(b)).unwrap();
            assert_eq!(fa, fb, "torus {a} vs {b}");
        }
    }

    #[test]
    fn orientation_flips_share_fingerprints() {
        // same underlying curves, traversal order scrambled by relabeling:
        // fingerprints of a diagram and its connect-reordered PD agree
        let d = construct::torus_diagram(4);
        let d2 = Diagram::from_pd_string(&d.to_pd_string()).unwrap();
        assert_eq!(
            Fingerprint::of_diagram(&d).unwrap(),
            Fingerprint::of_diagram(&d2).unwrap()
        );
    }

    #[test]
    fn distinct_links_get_distinct_fingerprints() {
        let t3 = Fingerprint::of_diagram(&construct::torus_diagram(3)).unwrap();
        let t5 = Fingerprint::of_diagram(&construct::torus_diagram(5)).unwrap();
        let f8 = Fingerprint::of_diagram(&construct::pretzel_diagram(2, 1, 1)).unwrap();
        assert_ne!(t3, t5);
        assert_ne!(t3, f8);
        assert_ne!(t5, f8);
    }

    #[test]
    fn unknot_unlink_fingerprints() {
        let unknot = Fingerprint::of_class(&LinkClass::Unknot).unwrap();
        assert_eq!(unknot.components(), 1);
        assert_eq!(unknot.jones(), &Laurent::one());
        let unlink = Fingerprint::of_class(&LinkClass::Unlink2).unwrap();
        assert_eq!(unlink.components(), 2);
        // V(two-component unlink) = -t^(1/2) - t^(-1/2)
        assert_eq!(
            unlink.jones(),
            &Laurent::from_terms([(2, -1), (-2, -1)])
        );
    }

    #[test]
    fn connected_sum_jones_multiplies() {
        // with a deterministic orientation on each factor, the Jones
        // polynomial of a sum is the product of the factors'
        let a = construct::torus_diagram(3);
        let b = construct::pretzel_diagram(2, 1, 1);
        let sum = construct::connected_sum(&a, &b);
        assert_eq!(
            sum.jones().unwrap(),
            a.jones().unwrap().mul(&b.jones().unwrap())
        );
    }

    #[test]
    fn reference_table_is_current() {
        let table = reference_table();
        assert_eq!(table.len(), REFERENCE_LINKS.len(), "regenerate the data file");
        for (entry, (name, _)) in table.iter().zip(REFERENCE_LINKS) {
            assert_eq!(entry.name, *name);
        }
    }

    /// Rebuilds data/reference_table.json from REFERENCE_LINKS. The loader
    /// cross-checks every stored polynomial at startup, so a stale file
    /// fails loudly rather than silently misidentifying links.
    #[test]
    #[ignore]
    fn regenerate_reference_table() {
        let entries: Vec<RawEntry> = REFERENCE_LINKS
            .iter()
            .map(|(name, expr)| {
                let lc: LinkClass = expr.parse().unwrap();
                let fp = Fingerprint::of_class(&lc).unwrap();
                RawEntry {
                    name: (*name).into(),
                    expr: (*expr).into(),
                    components: fp.components,
                    jones: fp.jones_terms(),
                }
            })
            .collect();
        let json = serde_json::to_string_pretty(&entries).unwrap();
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/reference_table.json");
        std::fs::write(path, json + "\n").unwrap();
    }
}
