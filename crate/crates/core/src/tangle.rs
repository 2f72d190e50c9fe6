//! Fast bracket evaluation for diagrams built from two-strand twist rows.
//!
//! Every structural class here (torus rows, two-row rational pieces,
//! pretzels, the four-row family, their connected sums) is a planar closure
//! of a handful of twist regions. Inside the Temperley-Lieb algebra a twist
//! region collapses to a two-term combination of the horizontal and
//! vertical smoothings, so the whole bracket is a sum over one binary
//! choice per region instead of one per crossing. That turns the 2^c state
//! sum into a 2^regions contraction and makes sweeping tens of thousands of
//! large tuples feasible.
//!
//! This module must agree with the slow state sum exactly; the tests at the
//! bottom compare both paths over parameter sweeps. The state sum stays the
//! oracle of record, this path is the workhorse.

use crate::diagram::jones_from_bracket;
use crate::family::{FamilyParams, LinkClass};
use crate::fingerprint::Fingerprint;
use crate::laurent::Laurent;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Orientation of a twist row: V stacks its crossings vertically (strands
/// enter top and bottom), H chains them horizontally (strands enter left
/// and right).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Kind {
    V,
    H,
}

/// One twist region: a row of |n| crossings, sign(n) fixing handedness.
pub(crate) type Region = (Kind, i32);

/// A diagram description: twist regions plus a perfect matching on region
/// corners. Region k owns corners 4k..4k+4 in the order tl, tr, bl, br
/// (for H rows read lt, rt, lb, rb). The matching arcs must embed in the
/// plane; callers transcribe them from the verified diagram builders.
pub(crate) struct Closure {
    pub regions: Vec<Region>,
    pub pairs: Vec<(u8, u8)>,
}

fn delta() -> Laurent {
    Laurent::from_terms([(2, -1), (-2, -1)])
}

/// Bracket vector of a twist row in the basis ([0], [inf]), where [0] is
/// the horizontal smoothing (tl-tr, bl-br) and [inf] the vertical one
/// (tl-bl, tr-br).
fn row_vector(kind: Kind, n: i32) -> (Laurent, Laurent) {
    // Single-crossing vectors follow the builder's slot conventions: a
    // positive V crossing opens to the vertical smoothing under the
    // A-smoothing, a positive H crossing to the horizontal one.
    let (x0, xi) = match (kind, n >= 0) {
        (Kind::V, true) => (Laurent::mono(1, -1), Laurent::mono(1, 1)),
        (Kind::V, false) => (Laurent::mono(1, 1), Laurent::mono(1, -1)),
        (Kind::H, true) => (Laurent::mono(1, 1), Laurent::mono(1, -1)),
        (Kind::H, false) => (Laurent::mono(1, -1), Laurent::mono(1, 1)),
    };
    let d = delta();
    // V rows compose by stacking, H rows by chaining; the two rules are
    // mirror images of each other in the (0, inf) basis.
    let (mut a, mut b) = match kind {
        Kind::V => (Laurent::zero(), Laurent::one()),
        Kind::H => (Laurent::one(), Laurent::zero()),
    };
    for _ in 0..n.unsigned_abs() {
        match kind {
            Kind::V => {
                // [0][0] = delta [0], [0][inf] = [inf][0] = [0], [inf][inf] = [inf]
                let na = a
                    .mul(&x0)
                    .mul(&d)
                    .add(&a.mul(&xi))
                    .add(&b.mul(&x0));
                let nb = b.mul(&xi);
                a = na;
                b = nb;
            }
            Kind::H => {
                // [0][0] = [0], [0][inf] = [inf][0] = [inf], [inf][inf] = delta [inf]
                let nb = b
                    .mul(&xi)
                    .mul(&d)
                    .add(&b.mul(&x0))
                    .add(&a.mul(&xi));
                let na = a.mul(&x0);
                a = na;
                b = nb;
            }
        }
    }
    (a, b)
}

/// Corner reached from `c` by following its region strand: twist rows send
/// a strand straight through when the crossing count is even and across
/// when it is odd.
fn strand_mate(kind: Kind, n: i32, corner: u8) -> u8 {
    let odd = n.unsigned_abs() % 2 == 1;
    match (kind, odd) {
        // V even: tl-bl, tr-br; V odd: tl-br, tr-bl
        (Kind::V, false) => corner ^ 2,
        (Kind::V, true) => 3 - corner,
        // H even: lt-rt, lb-rb; H odd: lt-rb, lb-rt
        (Kind::H, false) => corner ^ 1,
        (Kind::H, true) => 3 - corner,
    }
}

/// Walk direction implied by entering a region at `corner`: +1 for the
/// reference direction (downward for V, rightward for H), -1 against it.
fn entry_dir(kind: Kind, corner: u8) -> i64 {
    let with_flow = match kind {
        Kind::V => corner < 2,         // entered from the top
        Kind::H => corner % 2 == 0,    // entered from the left
    };
    if with_flow {
        1
    } else {
        -1
    }
}

struct Trace {
    components: usize,
    /// Crossing-sign sum over regions whose two passes share a component.
    self_writhe: i64,
    /// Per component pair, the crossing-sign sum under reference
    /// orientations; flipping one component negates its pairs.
    pair_writhe: Vec<((u32, u32), i64)>,
}

/// Region crossing signs under given pass orientations. Both kinds follow
/// the same rule: parallel passes through a positive row give positive
/// crossings. Verified against the diagram writhe in the oracle tests.
fn region_sign(n: i32, d1: i64, d2: i64) -> i64 {
    n as i64 * d1 * d2
}

fn trace(c: &Closure) -> Trace {
    let np = c.regions.len() * 4;
    let mut mate = vec![0u8; np];
    for &(a, b) in &c.pairs {
        mate[a as usize] = b;
        mate[b as usize] = a;
    }
    let mut comp = vec![u32::MAX; np];
    let mut dir_of_pass: Vec<Vec<(u32, i64)>> = vec![Vec::new(); c.regions.len()];
    let mut n_comp = 0u32;
    for start in 0..np as u8 {
        if comp[start as usize] != u32::MAX {
            continue;
        }
        let id = n_comp;
        n_comp += 1;
        let mut at = start;
        loop {
            let k = (at / 4) as usize;
            let (kind, n) = c.regions[k];
            let out = (at & !3) | strand_mate(kind, n, at & 3);
            comp[at as usize] = id;
            comp[out as usize] = id;
            dir_of_pass[k].push((id, entry_dir(kind, at & 3)));
            at = mate[out as usize];
            if at == start {
                break;
            }
        }
    }
    let mut self_writhe = 0i64;
    let mut pairs: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for (k, passes) in dir_of_pass.iter().enumerate() {
        debug_assert_eq!(passes.len(), 2, "every region carries two strands");
        let ((c1, d1), (c2, d2)) = (passes[0], passes[1]);
        let s = region_sign(c.regions[k].1, d1, d2);
        if c1 == c2 {
            self_writhe += s;
        } else {
            *pairs.entry((c1.min(c2), c1.max(c2))).or_insert(0) += s;
        }
    }
    Trace {
        components: n_comp as usize,
        self_writhe,
        pair_writhe: pairs.into_iter().collect(),
    }
}

/// Kauffman bracket of the closure, normalized so one circle is 1.
fn bracket(c: &Closure) -> Laurent {
    let nr = c.regions.len();
    let np = nr * 4;
    let vectors: Vec<(Laurent, Laurent)> =
        c.regions.iter().map(|&(k, n)| row_vector(k, n)).collect();
    let d = delta();
    // delta^j, up to the largest possible loop count
    let mut dpow = vec![Laurent::one()];
    for j in 1..=np / 2 {
        dpow.push(dpow[j - 1].mul(&d));
    }
    let mut total = Laurent::zero();
    let mut uf = vec![0u8; np];
    for choice in 0u32..1 << nr {
        let mut coef = Laurent::one();
        for (k, (a, b)) in vectors.iter().enumerate() {
            let c = if choice >> k & 1 == 0 { a } else { b };
            if c.is_zero() {
                coef = Laurent::zero();
                break;
            }
            coef = coef.mul(c);
        }
        if coef.is_zero() {
            continue;
        }
        for (i, slot) in uf.iter_mut().enumerate() {
            *slot = i as u8;
        }
        fn find(uf: &mut [u8], x: u8) -> u8 {
            let mut r = x;
            while uf[r as usize] != r {
                r = uf[r as usize];
            }
            let mut c = x;
            while uf[c as usize] != r {
                let next = uf[c as usize];
                uf[c as usize] = r;
                c = next;
            }
            r
        }
        let union = |uf: &mut [u8], a: u8, b: u8| {
            let (ra, rb) = (find(uf, a), find(uf, b));
            if ra != rb {
                uf[ra as usize] = rb;
            }
        };
        for k in 0..nr as u8 {
            let base = 4 * k;
            if choice >> k & 1 == 0 {
                union(&mut uf, base, base + 1);
                union(&mut uf, base + 2, base + 3);
            } else {
                union(&mut uf, base, base + 2);
                union(&mut uf, base + 1, base + 3);
            }
        }
        for &(a, b) in &c.pairs {
            union(&mut uf, a, b);
        }
        let loops = (0..np as u8).filter(|&i| find(&mut uf, i) == i).count();
        total = total.add(&coef.mul(&dpow[loops - 1]));
    }
    total
}

/// Mirror-identified fingerprint of the closure: least canonical Jones
/// over all component orientations and the mirror, plus component count.
/// Agrees with `Fingerprint::of_diagram` on the corresponding diagram.
pub(crate) fn fingerprint(c: &Closure) -> Fingerprint {
    let br = bracket(c);
    let tr = trace(c);
    let k = tr.components;
    let flips = if k <= 1 { 1u32 } else { 1u32 << (k - 1) };
    let mut best: Option<Laurent> = None;
    for mask in 0..flips {
        let eps = |i: u32| -> i64 {
            if i == 0 || mask >> (i - 1) & 1 == 0 {
                1
            } else {
                -1
            }
        };
        let w = tr.self_writhe
            + tr.pair_writhe
                .iter()
                .map(|&((a, b), s)| s * eps(a) * eps(b))
                .sum::<i64>();
        let j = jones_from_bracket(&br, w);
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
    Fingerprint::from_parts(k, best.expect("at least one orientation"))
}

/// Appends `add`'s regions and pairs onto `acc`, renumbering corners.
fn append(acc: &mut Closure, add: Closure) -> u8 {
    let shift = (acc.regions.len() * 4) as u8;
    acc.regions.extend(add.regions);
    acc.pairs
        .extend(add.pairs.iter().map(|&(a, b)| (a + shift, b + shift)));
    shift
}

/// Splices `add` into `acc` as a connected summand: one closure arc on
/// each side is cut and the four ends are bridged. Which arcs are cut only
/// moves the sum along its components; the bracket and component count are
/// unchanged, which is all the fingerprint sees.
fn connect(acc: &mut Closure, add: Closure) {
    let (a1, b1) = acc.pairs.pop().expect("summand closures have arcs");
    let shift = acc.regions.len() as u8 * 4;
    let (a2, b2) = add.pairs[0];
    acc.regions.extend(add.regions);
    acc.pairs
        .extend(add.pairs[1..].iter().map(|&(a, b)| (a + shift, b + shift)));
    acc.pairs.push((a1, a2 + shift));
    acc.pairs.push((b1, b2 + shift));
}

fn torus_closure(n: i32) -> Closure {
    Closure {
        regions: vec![(Kind::V, n)],
        pairs: vec![(0, 2), (1, 3)],
    }
}

/// Side closure of the two-row rational piece, matching `clasp_diagram`:
/// V row stacked above the H row, bottoms joined to the H row's top ports,
/// outer corners closed around the sides.
fn clasp_closure(r: i32, s: i32) -> Closure {
    Closure {
        regions: vec![(Kind::V, r), (Kind::H, s)],
        pairs: vec![(2, 4), (3, 5), (0, 6), (1, 7)],
    }
}

fn pretzel_closure(a: i32, b: i32, c: i32) -> Closure {
    let mut pairs = Vec::new();
    for i in 0..3u8 {
        let j = (i + 1) % 3;
        pairs.push((4 * i + 1, 4 * j)); // tr_i - tl_j
        pairs.push((4 * i + 3, 4 * j + 2)); // br_i - bl_j
    }
    Closure {
        regions: vec![(Kind::V, a), (Kind::V, b), (Kind::V, c)],
        pairs,
    }
}

/// One crossing-free circle: a zero row with top corners joined and bottom
/// corners joined. Not `torus_closure(0)`, which closes the sides and yields
/// the two-component unlink.
fn circle_closure() -> Closure {
    Closure {
        regions: vec![(Kind::V, 0)],
        pairs: vec![(0, 1), (2, 3)],
    }
}

fn class_closure(lc: &LinkClass) -> Closure {
    match lc {
        LinkClass::Unknot => Closure {
            regions: vec![(Kind::V, 0)],
            pairs: vec![(0, 1), (2, 3)],
        },
        LinkClass::Unlink2 => torus_closure(0),
        LinkClass::Torus(n) => torus_closure(*n),
        LinkClass::Clasp(r, s) => clasp_closure(*r, *s),
        LinkClass::Pretzel(a, b, c) => pretzel_closure(*a, *b, *c),
        LinkClass::Family(t) => crate::construct::family_closure(t),
        LinkClass::ConnSum(l, r) => {
            let mut acc = class_closure(l);
            connect(&mut acc, class_closure(r));
            acc
        }
        LinkClass::PlusTrivial(inner) => {
            let mut acc = class_closure(inner);
            append(&mut acc, circle_closure());
            acc
        }
    }
}

/// Fingerprint of a structural class without the 2^c state sum. Exact;
/// agrees with `Fingerprint::of_class` (tested below), but stays fast for
/// the 20-crossing forms the enumeration sweep produces.
pub(crate) fn class_fingerprint(lc: &LinkClass) -> Fingerprint {
    fingerprint(&class_closure(&lc.clone().canonical()))
}

/// Fast fingerprint of the raw family diagram for `t`.
pub(crate) fn family_fingerprint(t: &FamilyParams) -> Fingerprint {
    fingerprint(&crate::construct::family_closure(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slow(lc: &LinkClass) -> Fingerprint {
        Fingerprint::of_class(lc).expect("oracle within size limit")
    }

    #[test]
    fn unknot_and_unlink_match_oracle() {
        assert_eq!(class_fingerprint(&LinkClass::Unknot), slow(&LinkClass::Unknot));
        assert_eq!(
            class_fingerprint(&LinkClass::Unlink2),
            slow(&LinkClass::Unlink2)
        );
    }

    #[test]
    fn torus_rows_match_oracle() {
        for n in -7..=7 {
            let lc = LinkClass::Torus(n);
            assert_eq!(class_fingerprint(&lc), slow(&lc), "T(2,{n})");
        }
    }

    #[test]
    fn clasp_pieces_match_oracle() {
        for r in -4..=4 {
            for s in -4..=4 {
                let lc = LinkClass::Clasp(r, s);
                assert_eq!(class_fingerprint(&lc), slow(&lc), "C({r},{s})");
            }
        }
    }

    #[test]
    fn pretzels_match_oracle() {
        for a in -3..=3i32 {
            for b in -3..=3i32 {
                for c in -3..=3i32 {
                    let lc = LinkClass::Pretzel(a, b, c);
                    assert_eq!(class_fingerprint(&lc), slow(&lc), "K({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn sums_and_free_loops_match_oracle() {
        let cases = [
            LinkClass::connected_sum(LinkClass::Torus(3), LinkClass::Torus(4)),
            LinkClass::connected_sum(LinkClass::Torus(-2), LinkClass::Clasp(3, -2)),
            LinkClass::connected_sum(LinkClass::Torus(2), LinkClass::Torus(2)),
            LinkClass::plus_trivial(LinkClass::Clasp(4, 3)),
            LinkClass::plus_trivial(LinkClass::Torus(5)),
        ];
        for lc in cases {
            assert_eq!(class_fingerprint(&lc), slow(&lc), "{lc:?}");
        }
    }

    #[test]
    fn family_tuples_match_oracle() {
        for p in -2..=2 {
            for q in -2..=2 {
                for r in 0..=3 {
                    for s in -2..=2 {
                        let t = FamilyParams::new(p, q, r, s);
                        let fast = family_fingerprint(&t);
                        let d = crate::construct::family_diagram(p, q, r, s);
                        let slow = Fingerprint::of_diagram(&d).unwrap();
                        assert_eq!(fast, slow, "F({p},{q},{r},{s})");
                    }
                }
            }
        }
    }

    // Offline search scaffolding below: exhaustive sweep of the hookless
    // closures of four twist rows, rerun over the fast bracket path.

    /// Component counts forced by the subfamily identities; these depend
    /// only on row parities, never on handedness.
    const COMP_CHECKS: &[([i32; 4], usize)] = &[
        ([0, 0, 0, 0], 2),
        ([1, 1, 1, 1], 1),
        ([1, 0, 0, 0], 1),
        ([0, 1, 0, 0], 1),
        ([1, 1, 0, 0], 2),
        ([2, 3, 0, 0], 1),
        ([2, 2, 0, 0], 2),
        ([0, 0, 1, 0], 2),
        ([0, 0, 0, 1], 2),
        ([0, 0, 1, 1], 3),
        ([0, 0, 2, 1], 2),
        ([0, 0, 1, 2], 2),
        ([0, 0, 2, 2], 2),
        ([0, 0, 2, -2], 2),
        ([0, 0, 2, 3], 2),
        ([0, 0, 3, 3], 3),
        ([0, 0, 3, 2], 2),
        ([0, 0, 4, 2], 2),
        ([1, -1, 1, 1], 1),
        ([1, -1, 2, 0], 2),
        ([1, -1, 3, 2], 1),
        ([1, -1, 2, 2], 2),
        ([1, -1, 0, 2], 2),
        ([2, 0, 2, 2], 2),
        ([3, 0, 1, -1], 2),
        ([2, 0, 1, -1], 3),
        ([2, 0, 1, 2], 2),
        ([0, 1, 1, 1], 2),
        ([2, 2, 1, 2], 2),
        ([2, 3, 1, 2], 1),
        ([1, 1, 1, -1], 1),
        ([1, 1, 1, 0], 1),
        ([1, 1, 2, 0], 2),
        ([1, 1, 3, 0], 1),
        ([2, 3, 0, 2], 1),
        ([2, 3, 0, -3], 1),
        ([1, 0, 0, 3], 1),
        ([3, 0, 3, 2], 1),
        ([1, 1, 0, 5], 2),
    ];

    /// Identity battery: parameter tuple plus the class it must reproduce.
    fn battery() -> Vec<([i32; 4], Fingerprint)> {
        use LinkClass::*;
        let items: Vec<([i32; 4], LinkClass)> = vec![
            ([1, 1, 1, 0], Pretzel(1, 1, 1)),
            ([1, -1, 1, 2], Unknot),
            ([0, 0, 2, 2], LinkClass::plus_trivial(Clasp(2, 2))),
            ([1, 1, 1, 1], Pretzel(1, 1, 2)),
            ([2, 3, 0, 2], Torus(5)),
            ([1, 1, 3, 0], Clasp(2, 3)),
            ([0, 0, 3, 2], LinkClass::plus_trivial(Clasp(3, 2))),
            ([0, 0, 3, -2], LinkClass::plus_trivial(Clasp(3, -2))),
            ([1, -1, 3, 2], Torus(3)),
            ([2, 0, 1, 2], LinkClass::connected_sum(Torus(2), Torus(3))),
            ([3, 0, 1, -1], LinkClass::plus_trivial(Torus(3))),
            (
                [2, 0, 3, -2],
                LinkClass::connected_sum(Torus(2), Clasp(3, -2)),
            ),
            ([2, 3, 0, -3], Torus(5)),
            ([1, -1, 4, -2], Torus(4)),
            ([2, 3, 1, 2], Pretzel(2, 3, 3)),
            ([2, -3, 1, -2], Pretzel(2, -3, -1)),
        ];
        items
            .into_iter()
            .map(|(ps, lc)| (ps, class_fingerprint(&lc)))
            .collect()
    }

    fn comps16(mt: &[u8; 16], ext: &[u8; 16], want: usize) -> bool {
        const FULL: u16 = u16::MAX;
        let mut seen: u16 = 0;
        let mut comps = 0;
        while seen != FULL {
            let start = (!seen).trailing_zeros() as u8;
            comps += 1;
            if comps > want {
                return false;
            }
            let mut e = start;
            loop {
                seen |= 1 << e;
                let f = mt[e as usize];
                seen |= 1 << f;
                e = ext[f as usize];
                if e == start {
                    break;
                }
            }
        }
        comps == want
    }

    fn comps_n<const N: usize>(mt: &[u8; N], ext: &[u8; N], want: usize) -> bool {
        let full: u32 = (1u32 << N) - 1;
        let mut seen: u32 = 0;
        let mut comps = 0;
        while seen != full {
            let start = (!seen).trailing_zeros() as u8;
            comps += 1;
            if comps > want {
                return false;
            }
            let mut e = start;
            loop {
                seen |= 1 << e;
                let f = mt[e as usize];
                seen |= 1 << f;
                e = ext[f as usize];
                if e == start {
                    break;
                }
            }
        }
        comps == want
    }

    /// Parity mate tables for the component pre-filter, deduplicated.
    fn mate_tables16() -> Vec<([u8; 16], usize)> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for &(ps, want) in COMP_CHECKS {
            let key: Vec<bool> = ps.iter().map(|v| v & 1 != 0).collect();
            if !seen.insert(key) {
                continue;
            }
            let mut mt = [0u8; 16];
            for k in 0..4u8 {
                let odd = ps[k as usize] & 1 != 0;
                for c in 0..4u8 {
                    mt[(k * 4 + c) as usize] = k * 4 + if odd { 3 - c } else { c ^ 2 };
                }
            }
            out.push((mt, want));
        }
        out
    }

    fn family_candidate(ps: [i32; 4], pairs: &[(u8, u8)]) -> Closure {
        Closure {
            regions: ps.iter().map(|&v| (Kind::V, v)).collect(),
            pairs: pairs.to_vec(),
        }
    }

    fn enumerate_matchings_n(
        n_pts: u8,
        used: &mut u32,
        pairs: &mut Vec<(u8, u8)>,
        f: &mut impl FnMut(&[(u8, u8)]),
    ) {
        let full = (1u32 << n_pts) - 1;
        if *used == full {
            f(pairs);
            return;
        }
        let i = (!*used).trailing_zeros() as u8;
        *used |= 1 << i;
        for j in (i + 1)..n_pts {
            if *used & (1 << j) != 0 {
                continue;
            }
            *used |= 1 << j;
            pairs.push((i, j));
            enumerate_matchings_n(n_pts, used, pairs, f);
            pairs.pop();
            *used &= !(1 << j);
        }
        *used &= !(1 << i);
    }

    fn enumerate_matchings(used: &mut u16, pairs: &mut Vec<(u8, u8)>, f: &mut impl FnMut(&[(u8, u8)])) {
        let mut u32used = *used as u32;
        enumerate_matchings_n(16, &mut u32used, pairs, f);
    }

    #[test]
    fn comp_filter_agrees_with_trace() {
        // pseudo-random but deterministic matchings
        let mut state = 0x243f6a8885a308d3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let mut left: Vec<u8> = (0..16).collect();
            let mut pairs = Vec::new();
            while left.len() > 1 {
                let a = left.remove(0);
                let b = left.remove((next() % left.len() as u64) as usize);
                pairs.push((a, b));
            }
            let mut ext = [0u8; 16];
            for &(a, b) in &pairs {
                ext[a as usize] = b;
                ext[b as usize] = a;
            }
            for mask in 0..16u32 {
                let ps = [
                    (mask & 1) as i32,
                    (mask >> 1 & 1) as i32,
                    (mask >> 2 & 1) as i32,
                    (mask >> 3 & 1) as i32,
                ];
                let c = family_candidate(ps, &pairs);
                let want = trace(&c).components as usize;
                let mut mt = [0u8; 16];
                for k in 0..4u8 {
                    let odd = ps[k as usize] & 1 != 0;
                    for cnr in 0..4u8 {
                        mt[(k * 4 + cnr) as usize] =
                            k * 4 + if odd { 3 - cnr } else { cnr ^ 2 };
                    }
                }
                assert!(comps16(&mt, &ext, want), "{ps:?} {pairs:?}");
            }
        }
    }

    #[test]
    #[ignore = "offline sweep, minutes of runtime; run with --ignored --nocapture"]
    fn four_region_search() {
        let tables = mate_tables16();
        let targets = battery();
        let mut best_score = 0usize;
        let mut best: Vec<(u8, u8)> = Vec::new();
        let mut survivors: Vec<Vec<(u8, u8)>> = Vec::new();
        let mut comp_pass = 0u64;
        let mut total = 0u64;

        let mut used: u16 = 0;
        let mut pairs: Vec<(u8, u8)> = Vec::with_capacity(8);
        enumerate_matchings(&mut used, &mut pairs, &mut |m| {
            total += 1;
            let mut ext = [0u8; 16];
            for &(a, b) in m {
                ext[a as usize] = b;
                ext[b as usize] = a;
            }
            if !tables.iter().all(|(mt, want)| comps16(mt, &ext, *want)) {
                return;
            }
            comp_pass += 1;
            let mut score = 0usize;
            let mut mask = 0u32;
            for (i, (ps, want)) in targets.iter().enumerate() {
                if &fingerprint(&family_candidate(*ps, m)) == want {
                    score += 1;
                    mask |= 1 << i;
                }
            }
            if score > best_score {
                best_score = score;
                best = m.to_vec();
                println!("new best {best_score}/{} mask {mask:016b}: {best:?}", targets.len());
            }
            if score == targets.len() {
                survivors.push(m.to_vec());
            }
        });

        println!("total {total}, comp pass {comp_pass}, survivors {}", survivors.len());
        for s in survivors.iter().take(40) {
            println!("  survivor {s:?}");
        }
        if survivors.is_empty() && !best.is_empty() {
            for (ps, want) in &targets {
                let got = fingerprint(&family_candidate(*ps, &best));
                let ok = &got == want;
                println!("  best {:?} ok={ok}", ps);
            }
        }
        assert!(!survivors.is_empty(), "no hookless four-region closure matched");
    }

    /// Single extra crossing beside the four rows. The subfamily identities
    /// alone gate the survivors; the two non-identity probes are reported per
    /// survivor but do not reject.
    #[test]
    #[ignore = "offline sweep, minutes of runtime; run with --ignored --nocapture"]
    fn five_region_search() {
        const SOFT: [[i32; 4]; 2] = [[1, 1, 3, 0], [2, 0, 3, -2]];
        let tables: Vec<([u8; 20], usize)> = mate_tables16()
            .into_iter()
            .map(|(mt, want)| {
                let mut m = [0u8; 20];
                m[..16].copy_from_slice(&mt);
                for c in 0..4u8 {
                    m[(16 + c) as usize] = 16 + (3 - c);
                }
                (m, want)
            })
            .collect();
        let full = battery();
        let targets: Vec<([i32; 4], Fingerprint)> = full
            .iter()
            .filter(|(ps, _)| !SOFT.contains(ps))
            .cloned()
            .collect();
        let soft: Vec<([i32; 4], Fingerprint)> = full
            .iter()
            .filter(|(ps, _)| SOFT.contains(ps))
            .cloned()
            .collect();

        let hook_candidate = |ps: [i32; 4], pairs: &[(u8, u8)]| -> Closure {
            let mut regions: Vec<(Kind, i32)> = ps.iter().map(|&v| (Kind::V, v)).collect();
            regions.push((Kind::V, 1));
            Closure { regions, pairs: pairs.to_vec() }
        };

        let mut best_score = 0usize;
        let mut best: Vec<(u8, u8)> = Vec::new();
        let mut survivors: Vec<Vec<(u8, u8)>> = Vec::new();
        let mut comp_pass = 0u64;
        let mut total = 0u64;

        let mut used: u32 = 0;
        let mut pairs: Vec<(u8, u8)> = Vec::with_capacity(10);
        enumerate_matchings_n(20, &mut used, &mut pairs, &mut |m| {
            total += 1;
            // a self-paired hook is a kink: reduces to the hookless space
            if m.iter().any(|&(a, b)| a >= 16 && b >= 16) {
                return;
            }
            let mut ext = [0u8; 20];
            for &(a, b) in m {
                ext[a as usize] = b;
                ext[b as usize] = a;
            }
            if !tables.iter().all(|(mt, want)| comps_n(mt, &ext, *want)) {
                return;
            }
            comp_pass += 1;
            let mut score = 0usize;
            for (ps, want) in targets.iter() {
                if &fingerprint(&hook_candidate(*ps, m)) != want {
                    break;
                }
                score += 1;
            }
            if score > best_score {
                best_score = score;
                best = m.to_vec();
                println!("new best {best_score}/{}: {best:?}", targets.len());
            }
            if score == targets.len() {
                let soft_mask: Vec<bool> = soft
                    .iter()
                    .map(|(ps, want)| &fingerprint(&hook_candidate(*ps, m)) == want)
                    .collect();
                println!("SURVIVOR {m:?} soft {soft_mask:?}");
                survivors.push(m.to_vec());
            }
        });

        println!("total {total}, comp pass {comp_pass}, survivors {}", survivors.len());
        if survivors.is_empty() && !best.is_empty() {
            for (ps, want) in &targets {
                let got = fingerprint(&hook_candidate(*ps, &best));
                println!("  best {:?} ok={}", ps, &got == want);
            }
        }
        assert!(!survivors.is_empty(), "no single-hook five-region closure matched");
    }
}
