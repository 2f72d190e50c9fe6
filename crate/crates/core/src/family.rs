//! The product family F(p,q,r,s) and the named link classes it contains.
//!
//! Mirror images count as the same link type throughout. Parameter
//! canonicalization prefers r >= 0, then p >= q; residual mirror ties are
//! broken toward the tuple whose first differing entry is larger, so
//! familiar classes keep positive parameters (T(2,7), not T(2,-7)).

use crate::construct;
use crate::diagram::Diagram;
use crate::Error;
use std::fmt;

/// The four signed twist parameters of a family member.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize)]
pub struct FamilyParams {
    pub p: i32,
    pub q: i32,
    pub r: i32,
    pub s: i32,
}

impl FamilyParams {
    pub fn new(p: i32, q: i32, r: i32, s: i32) -> Self {
        FamilyParams { p, q, r, s }
    }

    pub fn mirror(self) -> Self {
        FamilyParams::new(-self.p, -self.q, -self.r, -self.s)
    }

    /// Canonical representative of the mirror/row-swap orbit: r >= 0,
    /// then p >= q; when r = 0 the tuple is compared against its reordered
    /// negation and the larger one kept.
    pub fn normalize(self) -> Self {
        let mut t = if self.r < 0 { self.mirror() } else { self };
        if t.p < t.q {
            std::mem::swap(&mut t.p, &mut t.q);
        }
        if t.r == 0 {
            let mut m = t.mirror();
            if m.p < m.q {
                std::mem::swap(&mut m.p, &mut m.q);
            }
            if (m.p, m.q, m.r, m.s) > (t.p, t.q, t.r, t.s) {
                t = m;
            }
        }
        t
    }

    pub fn is_normalized(self) -> bool {
        self == self.normalize()
    }

    /// Crossing count of the raw four-row diagram.
    pub fn raw_crossings(self) -> u32 {
        self.p.unsigned_abs() + self.q.unsigned_abs() + self.r.unsigned_abs()
            + self.s.unsigned_abs()
    }

    pub fn diagram(self) -> Diagram {
        construct::family_diagram(self.p, self.q, self.r, self.s)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.p, self.q, self.r, self.s)
    }
}

/// A link presented by one of the family's named subclasses, a composite
/// of them, or raw family parameters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LinkClass {
    Unknot,
    Unlink2,
    Torus(i32),
    Clasp(i32, i32),
    Pretzel(i32, i32, i32),
    ConnSum(Box<LinkClass>, Box<LinkClass>),
    PlusTrivial(Box<LinkClass>),
    Family(FamilyParams),
}

use LinkClass::*;

/// Both pretzel forms of a clasp region: (K(r+1,-1,s+1), K(r-1,1,s-1)).
/// Rejects |r| <= 1 or |s| <= 1, where the equivalence does not apply.
pub fn clasp_to_pretzel(r: i32, s: i32) -> Result<(LinkClass, LinkClass), Error> {
    if r.abs() <= 1 || s.abs() <= 1 {
        return Err(Error::ModelViolation(format!(
            "clasp rewrite needs |r| > 1 and |s| > 1, got ({r},{s})"
        )));
    }
    Ok((Pretzel(r + 1, -1, s + 1), Pretzel(r - 1, 1, s - 1)))
}

impl LinkClass {
    pub fn connected_sum(a: LinkClass, b: LinkClass) -> LinkClass {
        ConnSum(Box::new(a), Box::new(b))
    }

    pub fn plus_trivial(a: LinkClass) -> LinkClass {
        PlusTrivial(Box::new(a))
    }

    pub fn mirror(&self) -> LinkClass {
        match self {
            Unknot => Unknot,
            Unlink2 => Unlink2,
            Torus(n) => Torus(-n),
            Clasp(r, s) => Clasp(-r, -s),
            Pretzel(a, b, c) => Pretzel(-a, -b, -c),
            ConnSum(l, r) => ConnSum(Box::new(l.mirror()), Box::new(r.mirror())),
            PlusTrivial(x) => PlusTrivial(Box::new(x.mirror())),
            Family(fp) => Family(fp.mirror()),
        }
    }

    /// Number of circle components. Closed forms for named classes; family
    /// parameters delegate to a diagram trace.
    pub fn component_count(&self) -> usize {
        match self {
            Unknot => 1,
            Unlink2 => 2,
            Torus(n) => match n.unsigned_abs() {
                0 => 2,
                1 => 1,
                k if k % 2 == 0 => 2,
                _ => 1,
            },
            Clasp(r, s) => {
                if r.abs() <= 1 || s.abs() <= 1 {
                    self.clone().canonical().component_count()
                } else if r.abs() % 2 == 1 && s.abs() % 2 == 1 {
                    2
                } else {
                    1
                }
            }
            Pretzel(a, b, c) => {
                let odd = [*a, *b, *c].iter().filter(|x| **x % 2 != 0).count();
                match odd {
                    0 => 3,
                    1 => 2,
                    _ => 1,
                }
            }
            ConnSum(l, r) => l.component_count() + r.component_count() - 1,
            PlusTrivial(x) => x.component_count() + 1,
            Family(fp) => fp.diagram().component_count(),
        }
    }

    /// Builds a planar diagram presenting this class.
    pub fn diagram(&self) -> Diagram {
        match self {
            Unknot => Diagram::from_pd_string("O").unwrap(),
            Unlink2 => Diagram::from_pd_string("O\nO").unwrap(),
            Torus(n) => construct::torus_diagram(*n),
            Clasp(r, s) => construct::clasp_diagram(*r, *s),
            Pretzel(a, b, c) => construct::pretzel_diagram(*a, *b, *c),
            ConnSum(l, r) => construct::connected_sum(&l.diagram(), &r.diagram()),
            PlusTrivial(x) => construct::with_free_loop(&x.diagram()),
            Family(fp) => fp.diagram(),
        }
    }

    /// Structural normal form plus mirror identification.
    ///
    /// Structural rules: degenerate torus/clasp/pretzel parameters collapse
    /// to simpler classes, connected sums flatten and sort with trivial
    /// factors removed, a disjoint trivial circle is kept as the outermost
    /// wrapper, and family parameters normalize. The mirror image is then
    /// identified by keeping whichever of the two normal forms has the
    /// larger parameter sequence.
    pub fn canonical(self) -> LinkClass {
        let a = self.structural();
        let b = self.mirror().structural();
        let (mut sa, mut sb) = (Vec::new(), Vec::new());
        a.param_seq(&mut sa);
        b.param_seq(&mut sb);
        if sb > sa {
            b
        } else {
            a
        }
    }

    fn structural(&self) -> LinkClass {
        match self {
            Unknot => Unknot,
            Unlink2 => Unlink2,
            Torus(0) => Unlink2,
            Torus(n) if n.abs() == 1 => Unknot,
            Torus(n) => Torus(*n),
            Clasp(r, s) => match (*r, *s) {
                // a clasp with no clasp crossings unwinds completely; other
                // degenerate values collapse one twist into the other row
                (_, 0) | (0, _) => Unknot,
                (1, s) => Torus(s - 1).structural(),
                (-1, s) => Torus(s + 1).structural(),
                (r, 1) => Torus(r - 1).structural(),
                (r, -1) => Torus(r + 1).structural(),
                (r, s) => Clasp(r, s),
            },
            Pretzel(a, b, c) => {
                let nz: Vec<i32> = [*a, *b, *c].into_iter().filter(|x| *x != 0).collect();
                match nz.len() {
                    0 => PlusTrivial(Box::new(Unlink2)),
                    1 => PlusTrivial(Box::new(Torus(nz[0]))).structural(),
                    2 => ConnSum(
                        Box::new(Torus(nz[0])),
                        Box::new(Torus(nz[1])),
                    )
                    .structural(),
                    // opposite unit rows annihilate the third row entirely
                    _ if nz.contains(&1) && nz.contains(&-1) => Unknot,
                    _ => Pretzel(*a, *b, *c),
                }
            }
            ConnSum(_, _) | PlusTrivial(_) => {
                let mut factors = Vec::new();
                let mut trivial_circles = 0usize;
                self.collect_factors(&mut factors, &mut trivial_circles);
                let mut flat = Vec::new();
                for f in factors {
                    match f.structural() {
                        Unknot => {}
                        Unlink2 => trivial_circles += 1,
                        PlusTrivial(inner) => {
                            trivial_circles += 1;
                            match *inner {
                                Unknot => {}
                                other => flat.push(other),
                            }
                        }
                        ConnSum(l, r) => {
                            // already structural, so only flatten
                            let mut stack = vec![*l, *r];
                            while let Some(x) = stack.pop() {
                                match x {
                                    ConnSum(l2, r2) => {
                                        stack.push(*l2);
                                        stack.push(*r2);
                                    }
                                    other => flat.push(other),
                                }
                            }
                        }
                        other => flat.push(other),
                    }
                }
                flat.sort();
                let mut out = match flat.len() {
                    0 => Unknot,
                    _ => {
                        let mut it = flat.into_iter();
                        let first = it.next().unwrap();
                        it.fold(first, |acc, x| {
                            ConnSum(Box::new(acc), Box::new(x))
                        })
                    }
                };
                for _ in 0..trivial_circles {
                    out = if out == Unknot {
                        Unlink2
                    } else {
                        PlusTrivial(Box::new(out))
                    };
                }
                out
            }
            Family(fp) => Family(fp.normalize()),
        }
    }

    fn collect_factors(&self, factors: &mut Vec<LinkClass>, circles: &mut usize) {
        match self {
            ConnSum(l, r) => {
                l.collect_factors(factors, circles);
                r.collect_factors(factors, circles);
            }
            PlusTrivial(x) => {
                *circles += 1;
                x.collect_factors(factors, circles);
            }
            other => factors.push(other.clone()),
        }
    }

    /// Flattened parameter sequence for mirror tie-breaking. Shapes of a
    /// value and its mirror agree, so comparing sequences is sound.
    fn param_seq(&self, out: &mut Vec<i64>) {
        match self {
            Unknot | Unlink2 => {}
            Torus(n) => out.push(*n as i64),
            Clasp(r, s) => out.extend([*r as i64, *s as i64]),
            Pretzel(a, b, c) => out.extend([*a as i64, *b as i64, *c as i64]),
            ConnSum(l, r) => {
                l.param_seq(out);
                r.param_seq(out);
            }
            PlusTrivial(x) => x.param_seq(out),
            Family(fp) => out.extend([fp.p as i64, fp.q as i64, fp.r as i64, fp.s as i64]),
        }
    }
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unknot => write!(f, "unknot"),
            Unlink2 => write!(f, "unlink"),
            Torus(n) => write!(f, "T(2,{n})"),
            Clasp(r, s) => write!(f, "C({r},{s})"),
            Pretzel(a, b, c) => write!(f, "K({a},{b},{c})"),
            ConnSum(l, r) => write!(f, "{l}#{r}"),
            PlusTrivial(x) => write!(f, "{x}+O"),
            Family(fp) => write!(f, "F({},{},{},{})", fp.p, fp.q, fp.r, fp.s),
        }
    }
}

/// Recursive-descent parser for the class grammar:
/// expr := sum ("+" "O")* ; sum := atom ("#" atom)* ;
/// atom := "unknot" | "unlink" | "T(2,n)" | "C(r,s)" | "K(a,b,c)" | "F(p,q,r,s)"
struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), Error> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected '{tok}' at byte {} of link expression",
                self.pos
            )))
        }
    }

    fn int(&mut self) -> Result<i32, Error> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let end = rest
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+')))
            .map(|(i, c)| i + c.len_utf8())
            .last()
            .unwrap_or(0);
        let text = &rest[..end];
        let n = text
            .parse::<i32>()
            .map_err(|_| Error::Parse(format!("expected integer at byte {}", self.pos)))?;
        self.pos += end;
        Ok(n)
    }

    fn int_args(&mut self, count: usize) -> Result<Vec<i32>, Error> {
        self.expect("(")?;
        let mut args = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.expect(",")?;
            }
            args.push(self.int()?);
        }
        self.expect(")")?;
        Ok(args)
    }

    fn atom(&mut self) -> Result<LinkClass, Error> {
        self.skip_ws();
        if self.eat("unknot") {
            return Ok(Unknot);
        }
        if self.eat("unlink") {
            return Ok(Unlink2);
        }
        if self.eat("T") {
            let args = self.int_args(2)?;
            if args[0] != 2 {
                return Err(Error::Parse(format!(
                    "only 2-strand torus links are in the family, got T({},{})",
                    args[0], args[1]
                )));
            }
            return Ok(Torus(args[1]));
        }
        if self.eat("C") {
            let args = self.int_args(2)?;
            return Ok(Clasp(args[0], args[1]));
        }
        if self.eat("K") {
            let args = self.int_args(3)?;
            return Ok(Pretzel(args[0], args[1], args[2]));
        }
        if self.eat("F") {
            let args = self.int_args(4)?;
            return Ok(Family(FamilyParams::new(args[0], args[1], args[2], args[3])));
        }
        Err(Error::Parse(format!(
            "expected a link class at byte {}",
            self.pos
        )))
    }

    fn expr(&mut self) -> Result<LinkClass, Error> {
        let mut acc = self.atom()?;
        while self.eat("#") {
            let rhs = self.atom()?;
            acc = ConnSum(Box::new(acc), Box::new(rhs));
        }
        while self.eat("+") {
            self.expect("O")?;
            acc = PlusTrivial(Box::new(acc));
        }
        self.skip_ws();
        Ok(acc)
    }
}

impl std::str::FromStr for LinkClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser::new(s);
        let lc = p.expr()?;
        if p.pos != s.len() {
            return Err(Error::Parse(format!(
                "trailing input at byte {} of link expression",
                p.pos
            )));
        }
        Ok(lc)
    }
}
