//! Product predictions for site-specific recombination.
//!
//! A recombinase acting on a small circular substrate yields products
//! drawn from a short menu of link classes. The menu depends only on the
//! substrate (unknot, unlink, or a (2,m) torus link) and on the
//! recombinase family (tyrosine or serine). Torus substrates open up the
//! whole four-row product family, with the row sum p+q pinned to the
//! substrate's crossing count on the branch whose synapse keeps both
//! inherited crossing rows.

use crate::family::{FamilyParams, LinkClass};
use crate::fingerprint::{identify, Fingerprint};
use crate::Error;
use std::fmt;

/// Circular DNA substrate, one recombination site per component.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Substrate {
    Unknot,
    Unlink,
    /// (2,m) torus knot or link, m >= 1.
    Torus2(i32),
}

impl Substrate {
    pub fn torus2(m: i32) -> Result<Substrate, Error> {
        if m < 1 {
            return Err(Error::ModelViolation(format!(
                "torus substrate needs m >= 1, got {m}"
            )));
        }
        Ok(Substrate::Torus2(m))
    }
}

impl fmt::Display for Substrate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Substrate::Unknot => write!(f, "unknot"),
            Substrate::Unlink => write!(f, "unlink"),
            Substrate::Torus2(m) => write!(f, "T(2,{m})"),
        }
    }
}

/// Recombinase family; serine enzymes may act processively.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecombinaseFamily {
    Tyrosine,
    Serine { rounds: u32 },
}

impl RecombinaseFamily {
    pub fn serine(rounds: u32) -> Result<RecombinaseFamily, Error> {
        if rounds < 1 {
            return Err(Error::ModelViolation(
                "serine recombination needs at least one round".into(),
            ));
        }
        Ok(RecombinaseFamily::Serine { rounds })
    }
}

impl fmt::Display for RecombinaseFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecombinaseFamily::Tyrosine => write!(f, "tyrosine"),
            RecombinaseFamily::Serine { rounds } => write!(f, "serine(rounds={rounds})"),
        }
    }
}

/// Shape of one predicted product pattern.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternShape {
    /// T(2,n) for any integer n.
    TorusRow,
    /// C(2,n) for any integer n.
    ClaspTwoRow,
    /// C(p,q) for any integers p, q.
    ClaspAny,
    /// Exactly the Hopf link.
    Hopf,
    /// Any member F(p,q,r,s) of the product family.
    FamilyAll,
}

/// A product pattern with free integer parameters plus an optional
/// constraint tying them to the substrate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub struct ProductPattern {
    pub shape: PatternShape,
    /// Constraint p+q = m inherited from a torus substrate; applies to
    /// the synapse branch that keeps both substrate crossing rows.
    pub pq_sum: Option<i32>,
}

impl ProductPattern {
    fn plain(shape: PatternShape) -> ProductPattern {
        ProductPattern {
            shape,
            pq_sum: None,
        }
    }

    /// Number of free integer parameters.
    pub fn arity(&self) -> usize {
        match self.shape {
            PatternShape::Hopf => 0,
            PatternShape::TorusRow | PatternShape::ClaspTwoRow => 1,
            PatternShape::ClaspAny => 2,
            PatternShape::FamilyAll => 4,
        }
    }

    /// Fills the free parameters with concrete values.
    pub fn instantiate(&self, args: &[i32]) -> Result<LinkClass, Error> {
        if args.len() != self.arity() {
            return Err(Error::ModelViolation(format!(
                "pattern {self} takes {} parameters, got {}",
                self.arity(),
                args.len()
            )));
        }
        Ok(match self.shape {
            PatternShape::TorusRow => LinkClass::Torus(args[0]),
            PatternShape::ClaspTwoRow => LinkClass::Clasp(2, args[0]),
            PatternShape::ClaspAny => LinkClass::Clasp(args[0], args[1]),
            PatternShape::Hopf => LinkClass::Torus(2),
            PatternShape::FamilyAll => {
                if let Some(m) = self.pq_sum {
                    if args[0] + args[1] != m {
                        return Err(Error::ModelViolation(format!(
                            "pattern {self} requires p+q={m}, got p={} q={}",
                            args[0], args[1]
                        )));
                    }
                }
                LinkClass::Family(FamilyParams::new(args[0], args[1], args[2], args[3]))
            }
        })
    }
}

impl fmt::Display for ProductPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            PatternShape::TorusRow => write!(f, "T(2,n)"),
            PatternShape::ClaspTwoRow => write!(f, "C(2,n)"),
            PatternShape::ClaspAny => write!(f, "C(p,q)"),
            PatternShape::Hopf => write!(f, "T(2,2)"),
            PatternShape::FamilyAll => match self.pq_sum {
                Some(m) => write!(f, "F(p,q,r,s) with p+q={m}"),
                None => write!(f, "F(p,q,r,s)"),
            },
        }
    }
}

/// The predicted non-trivial products for one substrate and recombinase.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct ProductPrediction {
    pub substrate: Substrate,
    pub recombinase: RecombinaseFamily,
    pub patterns: Vec<ProductPattern>,
    /// Caveat that narrows no pattern but records what the model knows
    /// beyond the shapes.
    pub note: Option<&'static str>,
}

const SERINE_NOTE: &str = "one crossing row carries the processive round count, \
possibly merged with one inherited substrate crossing";

/// Non-trivial products for a substrate and recombinase family.
pub fn predict_products(sub: Substrate, rec: RecombinaseFamily) -> ProductPrediction {
    use PatternShape::*;
    let patterns = match (sub, rec) {
        (Substrate::Unknot, RecombinaseFamily::Tyrosine) => {
            vec![ProductPattern::plain(TorusRow), ProductPattern::plain(ClaspTwoRow)]
        }
        (Substrate::Unlink, RecombinaseFamily::Tyrosine) => vec![ProductPattern::plain(Hopf)],
        (Substrate::Unknot, RecombinaseFamily::Serine { .. }) => {
            vec![ProductPattern::plain(TorusRow), ProductPattern::plain(ClaspAny)]
        }
        (Substrate::Unlink, RecombinaseFamily::Serine { .. }) => {
            vec![ProductPattern::plain(TorusRow)]
        }
        (Substrate::Torus2(m), _) => vec![ProductPattern {
            shape: FamilyAll,
            pq_sum: Some(m),
        }],
    };
    let note = match rec {
        RecombinaseFamily::Serine { .. } => Some(SERINE_NOTE),
        RecombinaseFamily::Tyrosine => None,
    };
    ProductPrediction {
        substrate: sub,
        recombinase: rec,
        patterns,
        note,
    }
}

/// The classes a product with minimal crossing number m+1 can take when
/// the substrate is T(2,m).
pub fn theorem_mcn_products(m: i32) -> Result<Vec<LinkClass>, Error> {
    if m < 1 {
        return Err(Error::ModelViolation(format!(
            "substrate crossing count must be positive, got {m}"
        )));
    }
    // m = 1 collapses: the only product one crossing heavier than its
    // substrate bound allows is the figure eight.
    if m == 1 {
        return Ok(vec![LinkClass::Pretzel(2, 1, 1)]);
    }
    let mut out = vec![LinkClass::Torus(m + 1), LinkClass::Clasp(-2, m - 1)];
    for s in 1..=m / 2 {
        out.push(LinkClass::Pretzel(s, m - s, 1));
    }
    Ok(out)
}

/// Names of the possible Xer recombination products with the given
/// minimal crossing number, the substrate being T(2,mcn-1).
///
/// Classes absent from the name table keep their grammar string.
pub fn xer_application(product_mcn: i32, knots_only: bool) -> Result<Vec<String>, Error> {
    if product_mcn < 2 {
        return Err(Error::ModelViolation(format!(
            "product mcn must be at least 2, got {product_mcn}"
        )));
    }
    let classes = theorem_mcn_products(product_mcn - 1)?;
    let mut seen: Vec<(Fingerprint, String)> = Vec::new();
    for lc in classes {
        if knots_only && lc.component_count() != 1 {
            continue;
        }
        let fp = Fingerprint::of_class(&lc)?;
        if seen.iter().any(|(f, _)| f == &fp) {
            continue;
        }
        let name = identify(&fp)
            .map(str::to_owned)
            .unwrap_or_else(|| lc.clone().canonical().to_string());
        seen.push((fp, name));
    }
    let mut names: Vec<String> = seen.into_iter().map(|(_, n)| n).collect();
    names.sort();
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unlink_tyrosine_gives_only_the_hopf_link() {
        let p = predict_products(Substrate::Unlink, RecombinaseFamily::Tyrosine);
        assert_eq!(p.patterns.len(), 1);
        assert_eq!(p.patterns[0].shape, PatternShape::Hopf);
        assert_eq!(
            p.patterns[0].instantiate(&[]).unwrap(),
            LinkClass::Torus(2)
        );
    }

    #[test]
    fn unlink_serine_gives_the_torus_row() {
        let rec = RecombinaseFamily::serine(3).unwrap();
        let p = predict_products(Substrate::Unlink, rec);
        assert_eq!(p.patterns.len(), 1);
        assert_eq!(p.patterns[0].shape, PatternShape::TorusRow);
        assert!(p.note.is_some());
    }

    #[test]
    fn torus_substrate_pins_the_row_sum() {
        let sub = Substrate::torus2(5).unwrap();
        let p = predict_products(sub, RecombinaseFamily::Tyrosine);
        assert_eq!(p.patterns.len(), 1);
        assert_eq!(p.patterns[0].pq_sum, Some(5));
        assert!(p.patterns[0].instantiate(&[2, 3, 4, 1]).is_ok());
        assert!(p.patterns[0].instantiate(&[2, 2, 4, 1]).is_err());
    }

    #[test]
    fn theorem_products_m6() {
        let got = theorem_mcn_products(6).unwrap();
        assert_eq!(
            got,
            vec![
                LinkClass::Torus(7),
                LinkClass::Clasp(-2, 5),
                LinkClass::Pretzel(1, 5, 1),
                LinkClass::Pretzel(2, 4, 1),
                LinkClass::Pretzel(3, 3, 1),
            ]
        );
    }

    #[test]
    fn theorem_edge_cases() {
        assert_eq!(
            theorem_mcn_products(1).unwrap(),
            vec![LinkClass::Pretzel(2, 1, 1)]
        );
        assert!(theorem_mcn_products(0).is_err());
    }

    #[test]
    fn xer_product_names() {
        assert_eq!(xer_application(7, true).unwrap(), ["7_1", "7_2", "7_4"]);
        assert_eq!(xer_application(9, true).unwrap(), ["9_1", "9_2", "9_5"]);
        assert_eq!(xer_application(4, true).unwrap(), ["4_1"]);
    }
}
