//! Laurent polynomials in one variable with exact integer coefficients.
//!
//! The Kauffman bracket lives in the variable `A` with integer exponents.
//! The Jones polynomial is expressed in `t = A^-4`, so its exponents are
//! quarter-integers; we store them as integer multiples of 1/4 (an exponent
//! `e` here means `t^(e/4)`). Everything stays in integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;

/// Sparse Laurent polynomial: exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    // invariant: no zero coefficients stored
    terms: BTreeMap<i32, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::mono(1, 0)
    }

    /// The monomial `coef * x^exp`.
    pub fn mono(coef: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exp, coef);
        }
        Laurent { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Laurent::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: i32, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry.checked_add(coef).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (&e, &c) in &self.terms {
            out.add_term(e, c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i32) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Mirror image: negate every exponent (`x -> x^-1`).
    pub fn mirror(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// max_exp - min_exp, or 0 for the zero polynomial.
    pub fn span(&self) -> i32 {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Substitute `x -> x^k` (exponent scaling; `k` must be nonzero).
    pub fn inflate(&self, k: i32) -> Laurent {
        assert!(k != 0);
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (e * k, c)).collect(),
        }
    }

    /// Deterministic total order: compare the ascending term lists
    /// lexicographically. Used to pick canonical representatives.
    pub fn cmp_canonical(&self, other: &Laurent) -> std::cmp::Ordering {
        let a: Vec<(i32, i64)> = self.terms().collect();
        let b: Vec<(i32, i64)> = other.terms().collect();
        a.cmp(&b)
    }

    /// Render with exponents interpreted as quarter powers of `t`
    /// (exponent 4 means `t`, -10 means `t^(-5/2)`).
    pub fn display_quarter_t(&self) -> String {
        self.render("t", 4)
    }

    /// Render as a polynomial in the named variable with exponents as stored.
    pub fn display_var(&self, var: &str) -> String {
        self.render(var, 1)
    }

    fn render(&self, var: &str, denom: i32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let power = if e == 0 {
                String::new()
            } else {
                let g = gcd(e.abs(), denom);
                let (num, den) = (e / g, denom / g);
                if den == 1 {
                    if num == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{num}")
                    }
                } else {
                    format!("{var}^({num}/{den})")
                }
            };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        out
    }
}

fn gcd(a: i32, b: i32) -> i32 {
    let (mut a, mut b) = (a.abs(), b.abs());
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

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent[{}]", self.display_var("x"))
    }
}
