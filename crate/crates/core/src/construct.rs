//! Diagram templates: twist rows, their closures (torus, pretzel, clasp),
//! and the four-row product family.
//!
//! Twist rows are built from signed parameters; a zero row degenerates to
//! two parallel pass-through strands. The `Net` wrapper resolves such
//! pass-throughs: constructions wire abstract nodes, and chains of
//! terminals collapse to direct arcs (or free loops) when the diagram is
//! finished.

use crate::diagram::{port, Builder, Diagram, Port};

/// A wiring node: a concrete crossing port or a pass-through terminal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Node {
    Port(Port),
    Term(u32),
}

/// Diagram builder over nodes. Ports attach exactly one wire, terminals
/// exactly two; `finish` contracts terminal chains to arcs and all-terminal
/// cycles to free loops.
pub(crate) struct Net {
    builder: Builder,
    wires: Vec<(Node, Node)>,
    n_terms: u32,
}

impl Net {
    pub fn new() -> Self {
        Net {
            builder: Builder::new(),
            wires: Vec::new(),
            n_terms: 0,
        }
    }

    pub fn crossing(&mut self) -> usize {
        self.builder.add_crossing()
    }

    pub fn crossing_count(&self) -> usize {
        self.builder.crossing_count()
    }

    pub fn term(&mut self) -> Node {
        self.n_terms += 1;
        Node::Term(self.n_terms - 1)
    }

    pub fn wire(&mut self, a: Node, b: Node) {
        self.wires.push((a, b));
    }

    pub fn finish(self) -> Diagram {
        let mut builder = self.builder;
        // adjacency per terminal (each must be wired exactly twice)
        let mut term_adj: Vec<Vec<usize>> = vec![Vec::new(); self.n_terms as usize];
        let mut port_wire: std::collections::HashMap<Port, usize> = Default::default();
        for (i, &(a, b)) in self.wires.iter().enumerate() {
            for node in [a, b] {
                match node {
                    Node::Term(t) => term_adj[t as usize].push(i),
                    Node::Port(p) => {
                        let old = port_wire.insert(p, i);
                        assert!(old.is_none(), "port wired twice");
                    }
                }
            }
        }
        assert!(
            term_adj.iter().all(|w| w.len() == 2),
            "every terminal needs exactly two wires"
        );
        let other_end = |i: usize, from: Node| -> Node {
            let (a, b) = self.wires[i];
            if a == from {
                b
            } else {
                a
            }
        };
        let mut used = vec![false; self.wires.len()];
        for (&p, &w0) in port_wire.iter() {
            if used[w0] {
                continue;
            }
            used[w0] = true;
            let mut prev = Node::Port(p);
            let mut cur = other_end(w0, prev);
            while let Node::Term(t) = cur {
                let &w = term_adj[t as usize]
                    .iter()
                    .find(|&&w| !used[w])
                    .expect("terminal chain broken");
                used[w] = true;
                prev = cur;
                cur = other_end(w, prev);
            }
            let Node::Port(q) = cur else { unreachable!() };
            builder.join(p, q);
        }
        // leftover wires form closed terminal cycles: one free loop each
        for i in 0..self.wires.len() {
            if used[i] {
                continue;
            }
            builder.add_free_loop();
            used[i] = true;
            let (start, mut cur) = self.wires[i];
            while cur != start {
                let Node::Term(t) = cur else {
                    unreachable!("cycle through a port")
                };
                let &w = term_adj[t as usize]
                    .iter()
                    .find(|&&w| !used[w])
                    .expect("cycle walk broken");
                used[w] = true;
                cur = other_end(w, cur);
            }
        }
        builder.finish()
    }
}

/// Boundary nodes of a vertical twist row: TL TR on top, BL BR below.
#[derive(Clone, Copy)]
pub(crate) struct VRow {
    pub tl: Node,
    pub tr: Node,
    pub bl: Node,
    pub br: Node,
}

/// Boundary nodes of a horizontal twist row: Lt Lb on the left, Rt Rb on
/// the right.
#[derive(Clone, Copy)]
pub(crate) struct HRow {
    pub lt: Node,
    pub lb: Node,
    pub rt: Node,
    pub rb: Node,
}

/// A column of |n| crossings between two vertical strands, sign(n) fixing
/// the handedness. Crossing i's lower ports join crossing i+1's upper
/// ports; the row's ports are the first crossing's top and last crossing's
/// bottom.
pub(crate) fn v_row(net: &mut Net, n: i32) -> VRow {
    let k = n.unsigned_abs() as usize;
    if k == 0 {
        let (tl, tr, bl, br) = (net.term(), net.term(), net.term(), net.term());
        net.wire(tl, bl);
        net.wire(tr, br);
        return VRow { tl, tr, bl, br };
    }
    // positive: slots ccw from bottom-left are (bl, br, tr, tl), understrand
    // bl -> tr; negative: (tl, bl, br, tr), understrand tl -> br
    let slot_of = |c: usize, role: usize| -> Node {
        // roles: 0 = bl, 1 = br, 2 = tr, 3 = tl
        let s = if n > 0 { role } else { (role + 1) % 4 };
        Node::Port(port(c, s))
    };
    let cs: Vec<usize> = (0..k).map(|_| net.crossing()).collect();
    for i in 0..k - 1 {
        net.wire(slot_of(cs[i], 0), slot_of(cs[i + 1], 3)); // bl_i - tl_{i+1}
        net.wire(slot_of(cs[i], 1), slot_of(cs[i + 1], 2)); // br_i - tr_{i+1}
    }
    VRow {
        tl: slot_of(cs[0], 3),
        tr: slot_of(cs[0], 2),
        bl: slot_of(cs[k - 1], 0),
        br: slot_of(cs[k - 1], 1),
    }
}

/// A row of |n| crossings between two horizontal strands. Crossing i's
/// right ports join crossing i+1's left ports; the row's ports are the
/// first crossing's left and last crossing's right.
pub(crate) fn h_row(net: &mut Net, n: i32) -> HRow {
    let k = n.unsigned_abs() as usize;
    if k == 0 {
        let (lt, lb, rt, rb) = (net.term(), net.term(), net.term(), net.term());
        net.wire(lt, rt);
        net.wire(lb, rb);
        return HRow { lt, lb, rt, rb };
    }
    // positive: slots ccw from left-top are (lt, lb, rb, rt), understrand
    // lt -> rb; negative: (lb, rb, rt, lt), understrand lb -> rt
    let slot_of = |c: usize, role: usize| -> Node {
        // roles: 0 = lt, 1 = lb, 2 = rb, 3 = rt
        let s = if n > 0 { role } else { (role + 3) % 4 };
        Node::Port(port(c, s))
    };
    let cs: Vec<usize> = (0..k).map(|_| net.crossing()).collect();
    for i in 0..k - 1 {
        net.wire(slot_of(cs[i], 3), slot_of(cs[i + 1], 0)); // rt_i - lt_{i+1}
        net.wire(slot_of(cs[i], 2), slot_of(cs[i + 1], 1)); // rb_i - lb_{i+1}
    }
    HRow {
        lt: slot_of(cs[0], 0),
        lb: slot_of(cs[0], 1),
        rt: slot_of(cs[k - 1], 3),
        rb: slot_of(cs[k - 1], 2),
    }
}

/// Trace closure of a vertical row: top ports join bottom ports around the
/// sides. Gives the (2,n) torus link; n = 0 yields two free loops.
pub fn torus_diagram(n: i32) -> Diagram {
    let mut net = Net::new();
    let v = v_row(&mut net, n);
    net.wire(v.tl, v.bl);
    net.wire(v.tr, v.br);
    net.finish()
}

/// Cyclic closure of three vertical rows: tops chained left to right and
/// wrapped, likewise bottoms. Zero rows degenerate to pass-throughs, so
/// e.g. one zero parameter produces a connected-sum diagram.
pub fn pretzel_diagram(a: i32, b: i32, c: i32) -> Diagram {
    let mut net = Net::new();
    let rows = [
        v_row(&mut net, a),
        v_row(&mut net, b),
        v_row(&mut net, c),
    ];
    for i in 0..3 {
        let j = (i + 1) % 3;
        net.wire(rows[i].tr, rows[j].tl);
        net.wire(rows[i].br, rows[j].bl);
    }
    net.finish()
}

/// Corner nodes of the two-row rational piece, in order NW, NE, SW, SE.
type Corners = [Node; 4];

/// Candidate wiring of the two-row piece: which row endpoints become the
/// four outer corners, how the remaining four endpoints pair up, and how
/// parameter signs map to row handedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct YWiring {
    /// Endpoint index per corner (NW, NE, SW, SE). Endpoints 0..4 are
    /// V.TL, V.TR, V.BL, V.BR; endpoints 4..8 are H.Lt, H.Rt, H.Lb, H.Rb.
    pub corners: [u8; 4],
    /// Pairing of the four leftover endpoints in ascending index order:
    /// 0 = (01)(23), 1 = (02)(13), 2 = (03)(12).
    pub internal: u8,
    /// Negate the vertical-row parameter before building.
    pub flip_v: bool,
    /// Negate the horizontal-row parameter before building.
    pub flip_h: bool,
}

/// Frozen wiring: vertical row stacked above the horizontal row, its
/// bottom ports joined to the horizontal row's outer top ports.
pub(crate) const Y_WIRING: YWiring = YWiring {
    corners: [0, 1, 6, 7], // NW = V.TL, NE = V.TR, SW = H.Lb, SE = H.Rb
    internal: 1,           // V.BL - H.Lt, V.BR - H.Rt
    flip_v: false,
    flip_h: false,
};

pub(crate) fn y_tangle(net: &mut Net, r: i32, s: i32, w: &YWiring) -> Corners {
    let v = v_row(net, if w.flip_v { -r } else { r });
    let h = h_row(net, if w.flip_h { -s } else { s });
    let ends = [v.tl, v.tr, v.bl, v.br, h.lt, h.rt, h.lb, h.rb];
    let corners = w.corners.map(|i| ends[i as usize]);
    let rest: Vec<Node> = (0..8u8)
        .filter(|i| !w.corners.contains(i))
        .map(|i| ends[i as usize])
        .collect();
    let (x, y) = match w.internal {
        0 => ((0, 1), (2, 3)),
        1 => ((0, 2), (1, 3)),
        _ => ((0, 3), (1, 2)),
    };
    net.wire(rest[x.0], rest[x.1]);
    net.wire(rest[y.0], rest[y.1]);
    [corners[0], corners[1], corners[2], corners[3]]
}

pub(crate) fn clasp_diagram_with(r: i32, s: i32, w: &YWiring) -> Diagram {
    let mut net = Net::new();
    let [nw, ne, sw, se] = y_tangle(&mut net, r, s, w);
    net.wire(nw, sw);
    net.wire(ne, se);
    net.finish()
}

/// Side closure of the two-row rational piece.
pub fn clasp_diagram(r: i32, s: i32) -> Diagram {
    clasp_diagram_with(r, s, &Y_WIRING)
}

pub(crate) fn family_diagram_with(
    p: i32,
    q: i32,
    r: i32,
    s: i32,
    w: &YWiring,
) -> (Diagram, [std::ops::Range<usize>; 4]) {
    let mut net = Net::new();
    let start_p = net.crossing_count();
    let vp = v_row(&mut net, p);
    let start_q = net.crossing_count();
    let vq = v_row(&mut net, q);
    let start_r = net.crossing_count();
    // row ranges only make sense for the frozen stacked wiring, where the
    // vertical row is built before the horizontal one
    let [nw, ne, sw, se] = y_tangle(&mut net, r, s, w);
    let start_s = start_r + r.unsigned_abs() as usize;
    let end_s = start_s + s.unsigned_abs() as usize;
    net.wire(vp.tr, vq.tl);
    net.wire(vp.br, vq.bl);
    net.wire(vq.tr, nw);
    net.wire(vq.br, sw);
    net.wire(vp.tl, ne);
    net.wire(vp.bl, se);
    (
        net.finish(),
        [
            start_p..start_q,
            start_q..start_r,
            start_r..start_s,
            start_s..end_s,
        ],
    )
}

/// The raw four-row family diagram for parameters (p, q, r, s).
pub fn family_diagram(p: i32, q: i32, r: i32, s: i32) -> Diagram {
    family_diagram_with(p, q, r, s, &Y_WIRING).0
}

/// Twist-region description of the same link `family_diagram` builds, for
/// the fast bracket path. Must stay wired in lockstep with the diagram
/// builder; the tangle tests compare the two over a parameter sweep.
pub(crate) fn family_closure(t: &crate::family::FamilyParams) -> crate::tangle::Closure {
    use crate::tangle::Kind;
    crate::tangle::Closure {
        // regions: V(p) 0-3, V(q) 4-7, V(r) 8-11, H(s) 12-15
        regions: vec![
            (Kind::V, t.p),
            (Kind::V, t.q),
            (Kind::V, t.r),
            (Kind::H, t.s),
        ],
        pairs: vec![
            (10, 12), // V(r).bl - H(s).lt
            (11, 13), // V(r).br - H(s).rt
            (1, 4),   // V(p).tr - V(q).tl
            (3, 6),   // V(p).br - V(q).bl
            (5, 8),   // V(q).tr - V(r).tl
            (7, 14),  // V(q).br - H(s).lb
            (0, 9),   // V(p).tl - V(r).tr
            (2, 15),  // V(p).bl - H(s).rb
        ],
    }
}

/// The family diagram plus the crossing-index range of each row, in
/// parameter order.
pub fn family_diagram_rows(
    p: i32,
    q: i32,
    r: i32,
    s: i32,
) -> (Diagram, [std::ops::Range<usize>; 4]) {
    family_diagram_with(p, q, r, s, &Y_WIRING)
}

/// Connected sum of two diagrams, splicing at each factor's first arc.
pub fn connected_sum(a: &Diagram, b: &Diagram) -> Diagram {
    a.splice(0, b, 0)
}

/// The diagram plus one disjoint trivial circle.
pub fn with_free_loop(d: &Diagram) -> Diagram {
    let text = d.to_pd_string() + "O\n";
    Diagram::from_pd_string(&text).expect("adding a free loop preserves validity")
}

mod family_search {
    //! Template selection for the product family diagram. A candidate
    //! template is six twist regions joined by a perfect matching on their
    //! twenty-four endpoints: the four parameter rows p, q, r, s plus two
    //! single-crossing hook regions that stay fixed as the parameters vary.
    //! Published minimal crossing counts never include the hooks, so in a
    //! valid template they cancel by a type II move once the neighbouring
    //! rows empty. Two independent hooks are required rather than one
    //! extra twist region: the figure threads a parameter row through the
    //! bigon of a cancelling pair, and a pair split by a row is not a
    //! twist region (a same-sign pair is a clasp; clasps and lone hooks
    //! were searched exhaustively without a match).
    //!
    //! A horizontal row is a vertical row with relabeled endpoints and a
    //! mirrored sign, both absorbed by the matching and the sign sweep,
    //! and a single crossing with free endpoint attachment realises either
    //! hand, so the hook regions carry fixed sign +1.
    //!
    //! Three entry points, all ignored by default. `spec_probe` scores the
    //! hookless rational-block backbone for diagnostics, `insertion_search`
    //! splices the two hooks into that backbone every possible way, and
    //! `full_search` sweeps every six-region matching. Run with e.g.
    //! `cargo test --release -p recomb-knots --lib family_search::insertion_search -- --ignored --nocapture`.
    use super::*;
    use crate::fingerprint::Fingerprint;
    use rayon::prelude::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    const N_PTS: u8 = 24;
    const N_PAIRS: usize = 12;

    fn fp(d: &Diagram) -> Fingerprint {
        Fingerprint::of_diagram(d).expect("search diagrams stay within bracket limits")
    }

    /// Regions 0..6 carry p, q, r, s and the two hooks; endpoint 4k+c is
    /// region k's corner (c: 0 = tl, 1 = tr, 2 = bl, 3 = br).
    fn build(params: [i32; 4], signs: [i32; 3], m: &[(u8, u8)]) -> Diagram {
        let mut net = Net::new();
        let rows = [
            v_row(&mut net, params[0]),
            v_row(&mut net, params[1] * signs[0]),
            v_row(&mut net, params[2] * signs[1]),
            v_row(&mut net, params[3] * signs[2]),
            v_row(&mut net, 1),
            v_row(&mut net, 1),
        ];
        let node = |e: u8| {
            let row = &rows[(e / 4) as usize];
            match e % 4 {
                0 => row.tl,
                1 => row.tr,
                2 => row.bl,
                _ => row.br,
            }
        };
        for &(a, b) in m {
            net.wire(node(a), node(b));
        }
        net.finish()
    }

    /// Per-check endpoint mates. A twist region connects its endpoints by
    /// strand parity (even count: tl-bl and tr-br, odd: tl-br and tr-bl);
    /// hooks are always odd. Components of the diagram are then cycles of
    /// the 2-regular graph formed by mates plus matching edges.
    fn mate_tables() -> Vec<[u8; 24]> {
        COMP_CHECKS
            .iter()
            .map(|&(ps, _)| {
                let mut mt = [0u8; 24];
                for k in 0..6u8 {
                    let odd = if k < 4 { ps[k as usize] & 1 != 0 } else { true };
                    for c in 0..4u8 {
                        mt[(k * 4 + c) as usize] = k * 4 + if odd { 3 - c } else { c ^ 2 };
                    }
                }
                mt
            })
            .collect()
    }

    fn comps_match(mt: &[u8; 24], ext: &[u8; 24], want: usize) -> bool {
        const FULL: u32 = (1 << 24) - 1;
        let mut seen = 0u32;
        let mut comps = 0;
        while seen != FULL {
            let start = (!seen & FULL).trailing_zeros() as u8;
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

    /// Hookless backbones for the targeted search, as eight-wire matchings
    /// on the parameter endpoints. Both are numerator closures of the
    /// tangle sum of vertical row p, vertical row q, and a two-row
    /// rational block; the horizontal s row is the s region rotated a
    /// quarter turn (tl,tr,bl,br read from regions 14,12,15,13).
    const SPEC_BACKBONES: &[(&str, [(u8, u8); 8])] = &[
        // best hookless wiring from the four-region sweep; passes every
        // battery item except the r = 1 corners and two sums
        (
            "group-a",
            [
                (0, 4),
                (1, 8),
                (2, 6),
                (3, 12),
                (5, 10),
                (7, 13),
                (9, 14),
                (11, 15),
            ],
        ),
        // s twists horizontal, then r twists applied to the bottom pair
        (
            "s-then-r",
            [
                (0, 12),
                (1, 4),
                (2, 11),
                (3, 6),
                (5, 14),
                (7, 10),
                (8, 15),
                (9, 13),
            ],
        ),
        // r twists vertical, then s twists applied to the right column
        (
            "r-then-s",
            [
                (0, 12),
                (1, 4),
                (2, 13),
                (3, 6),
                (5, 8),
                (7, 10),
                (9, 14),
                (11, 15),
            ],
        ),
    ];

    /// Splices a one-crossing region (endpoints base..base+4) into two
    /// distinct wires of `backbone`: the over strand (tl-br) into one, the
    /// under strand (bl-tr) into the other, in all orientations. A hook
    /// with both strands on a single wire is a type I kink and is skipped.
    fn insertions(backbone: &[(u8, u8)], base: u8) -> Vec<Vec<(u8, u8)>> {
        let (tl, tr, bl, br) = (base, base + 1, base + 2, base + 3);
        let mut out = Vec::new();
        for i in 0..backbone.len() {
            for j in 0..backbone.len() {
                if i == j {
                    continue;
                }
                let (x, y) = backbone[i];
                let (u, v) = backbone[j];
                for &(a1, a2) in &[(tl, br), (br, tl)] {
                    for &(b1, b2) in &[(bl, tr), (tr, bl)] {
                        let mut m: Vec<(u8, u8)> = backbone
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| *k != i && *k != j)
                            .map(|(_, &w)| w)
                            .collect();
                        m.extend_from_slice(&[(x, a1), (a2, y), (u, b1), (b2, v)]);
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// Pads a hookless backbone to twelve pairs by pushing each hook into
    /// a wire as a type I kink, which leaves every link unchanged.
    fn kink_pad(backbone: &[(u8, u8); 8]) -> Vec<(u8, u8)> {
        let mut m: Vec<(u8, u8)> = backbone[2..].to_vec();
        let (x0, y0) = backbone[0];
        let (x1, y1) = backbone[1];
        m.extend_from_slice(&[
            (x0, 16),
            (17, y0),
            (18, 19),
            (x1, 20),
            (21, y1),
            (22, 23),
        ]);
        m
    }

    /// Battery item names, index-aligned with `battery_targets`. Ordered so
    /// the most selective checks run first under early exit.
    const FP_BATTERY: &[&str] = &[
        "F(1,1,1,0)=K(1,1,1)",
        "F(1,-1,1,2)=unknot",
        "F(0,0,2,2)=C(2,2)+O",
        "F(1,1,1,1)=K(1,1,2)",
        "F(2,3,0,2)=T(2,5)",
        "F(1,1,3,0)=C(2,3)",
        "F(0,0,3,2)=C(3,2)+O",
        "F(0,0,3,-2)=C(3,-2)+O",
        "F(1,-1,3,2)=T(2,3)",
        "F(2,0,1,2)=T(2,2)#T(2,3)",
        "F(3,0,1,-1)=T(2,3)+O",
        "F(2,0,3,-2)=T(2,2)#C(3,-2)",
        "F(2,3,0,-3)=T(2,5)",
        "F(1,-1,4,-2)=T(2,4)",
        "F(2,3,1,2)=K(2,3,3)",
        "F(2,-3,1,-2)=K(2,-3,-1)",
    ];

    fn battery_targets() -> Vec<([i32; 4], Fingerprint)> {
        vec![
            ([1, 1, 1, 0], fp(&pretzel_diagram(1, 1, 1))),
            ([1, -1, 1, 2], fp(&torus_diagram(1))),
            ([0, 0, 2, 2], fp(&with_free_loop(&pretzel_diagram(1, 1, 1)))),
            ([1, 1, 1, 1], fp(&pretzel_diagram(1, 1, 2))),
            ([2, 3, 0, 2], fp(&torus_diagram(5))),
            ([1, 1, 3, 0], fp(&pretzel_diagram(1, 1, 2))),
            ([0, 0, 3, 2], fp(&with_free_loop(&pretzel_diagram(2, 1, 1)))),
            ([0, 0, 3, -2], fp(&with_free_loop(&pretzel_diagram(2, 1, -3)))),
            ([1, -1, 3, 2], fp(&torus_diagram(3))),
            (
                [2, 0, 1, 2],
                fp(&connected_sum(&torus_diagram(2), &torus_diagram(3))),
            ),
            ([3, 0, 1, -1], fp(&with_free_loop(&torus_diagram(3)))),
            (
                [2, 0, 3, -2],
                fp(&connected_sum(&torus_diagram(2), &pretzel_diagram(2, 1, -3))),
            ),
            ([2, 3, 0, -3], fp(&torus_diagram(5))),
            ([1, -1, 4, -2], fp(&torus_diagram(4))),
            ([2, 3, 1, 2], fp(&pretzel_diagram(2, 3, 3))),
            ([2, -3, 1, -2], fp(&pretzel_diagram(2, -3, -1))),
        ]
    }

    fn battery_score(
        targets: &[([i32; 4], Fingerprint)],
        signs: [i32; 3],
        m: &[(u8, u8)],
        stop_early: bool,
    ) -> (usize, Vec<bool>) {
        let mut results = Vec::with_capacity(targets.len());
        let mut score = 0;
        for (params, want) in targets {
            let ok = &fp(&build(*params, signs, m)) == want;
            results.push(ok);
            if ok {
                score += 1;
            } else if stop_early {
                break;
            }
        }
        (score, results)
    }

    fn failures(targets: &[([i32; 4], Fingerprint)], signs: [i32; 3], m: &[(u8, u8)]) -> Vec<&'static str> {
        let (_, detail) = battery_score(targets, signs, m, false);
        FP_BATTERY
            .iter()
            .zip(&detail)
            .filter(|(_, ok)| !**ok)
            .map(|(n, _)| *n)
            .collect()
    }

    /// Two fixed leading pairs per task, enough granularity for rayon.
    /// Prefixes violating the hook canonicalisation rules are dropped here
    /// because the recursion only checks pairs it generates itself.
    fn matching_tasks() -> Vec<Vec<(u8, u8)>> {
        const HOOK_A: u32 = 0x000F_0000;
        const HOOK_B: u32 = 0x00F0_0000;
        let canonical = |used: u32, b: u8| {
            let a_new = used & HOOK_A == 0;
            if a_new && (b == 18 || b == 19 || (b >= 20 && used & HOOK_B == 0)) {
                return false;
            }
            !(used & HOOK_B == 0 && (b == 22 || b == 23))
        };
        let mut tasks = Vec::new();
        for b1 in 1..N_PTS {
            if !canonical(1, b1) {
                continue;
            }
            let mut used = 1u32 | (1 << b1);
            let a2 = (1..N_PTS).find(|&i| used & (1 << i) == 0).unwrap();
            used |= 1 << a2;
            for b2 in a2 + 1..N_PTS {
                if used & (1 << b2) != 0 || !canonical(used, b2) {
                    continue;
                }
                tasks.push(vec![(0, b1), (a2, b2)]);
            }
        }
        tasks
    }

    fn for_each_matching(prefix: &[(u8, u8)], mut f: impl FnMut(&[(u8, u8); N_PAIRS])) {
        const HOOK_A: u32 = 0x000F_0000;
        const HOOK_B: u32 = 0x00F0_0000;
        fn rec(
            depth: usize,
            used: u32,
            pairs: &mut [(u8, u8); N_PAIRS],
            f: &mut impl FnMut(&[(u8, u8); N_PAIRS]),
        ) {
            if depth == N_PAIRS {
                f(pairs);
                return;
            }
            let a = (0..N_PTS).find(|&i| used & (1 << i) == 0).unwrap();
            for b in a + 1..N_PTS {
                if used & (1 << b) != 0 {
                    continue;
                }
                // a hook wired to itself is a kink or unrealisable; lone
                // hook searches already covered kinks
                if a >= 16 && b / 4 == a / 4 {
                    continue;
                }
                // canonicalisation: the two hooks are interchangeable and
                // each is invariant under a 180-degree turn, so demand the
                // first contact lands on hook A and on each hook's first
                // two points. Conjugate matchings build isomorphic
                // diagrams, so skipping them loses nothing.
                if a < 16 {
                    let a_new = used & HOOK_A == 0;
                    if a_new && (b == 18 || b == 19 || (b >= 20 && used & HOOK_B == 0)) {
                        continue;
                    }
                    if used & HOOK_B == 0 && (b == 22 || b == 23) {
                        continue;
                    }
                }
                pairs[depth] = (a, b);
                rec(depth + 1, used | (1 << a) | (1 << b), pairs, f);
            }
        }
        let mut used = 0u32;
        let mut pairs = [(0u8, 0u8); N_PAIRS];
        for (i, &p) in prefix.iter().enumerate() {
            used |= (1 << p.0) | (1 << p.1);
            pairs[i] = p;
        }
        rec(prefix.len(), used, &mut pairs, &mut f);
    }

    const SIGN_SPACE: [[i32; 3]; 8] = [
        [1, 1, 1],
        [1, 1, -1],
        [1, -1, 1],
        [1, -1, -1],
        [-1, 1, 1],
        [-1, 1, -1],
        [-1, -1, 1],
        [-1, -1, -1],
    ];

    #[test]
    #[ignore]
    fn debug_probe() {
        let refs = [
            ("trefoil+O", fp(&with_free_loop(&pretzel_diagram(1, 1, 1)))),
            ("fig8+O", fp(&with_free_loop(&pretzel_diagram(1, 1, 2)))),
            ("T(2,4)+O", fp(&with_free_loop(&torus_diagram(4)))),
            ("T(2,2)+O", fp(&with_free_loop(&torus_diagram(2)))),
            ("unknot+O", fp(&with_free_loop(&torus_diagram(1)))),
            ("b(5,2)+O", fp(&with_free_loop(&pretzel_diagram(2, 1, 2)))),
            ("unlink3", fp(&with_free_loop(&torus_diagram(0)))),
        ];
        for (name, backbone) in SPEC_BACKBONES {
            let m = kink_pad(backbone);
            for signs in SIGN_SPACE {
                let got = fp(&build([0, 0, 2, 2], signs, &m));
                let label = refs
                    .iter()
                    .find(|(_, f)| *f == got)
                    .map_or("unrecognised", |(n, _)| n);
                println!("{name} signs {signs:?}: F(0,0,2,2) = {label}");
            }
        }
    }

    #[test]
    #[ignore]
    fn spec_probe() {
        let targets = battery_targets();
        for (name, backbone) in SPEC_BACKBONES {
            let m = kink_pad(backbone);
            for signs in SIGN_SPACE {
                let (score, _) = battery_score(&targets, signs, &m, false);
                println!(
                    "{name} signs {signs:?}: {score}/{} fails {:?}",
                    targets.len(),
                    failures(&targets, signs, &m)
                );
            }
        }
    }

    #[test]
    #[ignore]
    fn insertion_search() {
        let targets = battery_targets();
        for (name, backbone) in SPEC_BACKBONES {
            let m10s = insertions(backbone, 16);
            let n = m10s.len();
            let counter = AtomicUsize::new(0);
            let results: Vec<(usize, [i32; 3], Vec<(u8, u8)>, Vec<([i32; 3], Vec<(u8, u8)>)>)> =
                m10s.par_iter()
                    .map(|m10| {
                        let mut best = (0, [1, 1, 1], Vec::new());
                        let mut survivors = Vec::new();
                        for m12 in insertions(m10, 20) {
                            for signs in SIGN_SPACE {
                                let (score, _) = battery_score(&targets, signs, &m12, true);
                                if score == targets.len() {
                                    survivors.push((signs, m12.clone()));
                                }
                                if score > best.0 {
                                    best = (score, signs, m12.clone());
                                }
                            }
                        }
                        let done = counter.fetch_add(1, Ordering::Relaxed) + 1;
                        if done % 16 == 0 || done == n {
                            println!("{name}: {done}/{n} outer insertions");
                        }
                        (best.0, best.1, best.2, survivors)
                    })
                    .collect();
            let mut survivors: Vec<&([i32; 3], Vec<(u8, u8)>)> = Vec::new();
            let mut best: Option<&(usize, [i32; 3], Vec<(u8, u8)>, _)> = None;
            for entry in &results {
                survivors.extend(&entry.3);
                if best.map_or(true, |b| entry.0 > b.0) {
                    best = Some(entry);
                }
            }
            println!("{name}: {} survivors", survivors.len());
            for (signs, m) in survivors.iter().take(40) {
                println!("{name} survivor: signs {signs:?} matching {m:?}");
            }
            if survivors.is_empty() {
                if let Some((score, signs, m, _)) = best {
                    println!("{name}: best score {score} signs {signs:?} matching {m:?}");
                    if !m.is_empty() {
                        println!("{name}: failures {:?}", failures(&targets, *signs, m));
                    }
                }
            }
        }
    }

    #[derive(Default)]
    struct SearchAcc {
        passers: u64,
        best_score: usize,
        best: Option<([i32; 3], Vec<(u8, u8)>)>,
        survivors: Vec<([i32; 3], Vec<(u8, u8)>)>,
    }

    impl SearchAcc {
        fn merge(mut self, other: SearchAcc) -> SearchAcc {
            self.passers += other.passers;
            if other.best_score > self.best_score {
                self.best_score = other.best_score;
                self.best = other.best;
            }
            self.survivors.extend(other.survivors);
            self
        }
    }

    /// Blind search over all closure matchings. Sign gauges need no sweep
    /// here: reflecting one region's attachment order mirrors exactly that
    /// region's crossings, and those reflected matchings are all in the
    /// space already.
    #[test]
    #[ignore]
    fn full_search() {
        let targets = battery_targets();
        let mts = mate_tables();
        let mut tasks = matching_tasks();
        if let Ok(n) = std::env::var("SEARCH_TASKS").map(|v| v.parse().unwrap()) {
            tasks.truncate(n);
        }
        let n_tasks = tasks.len();
        let counter = AtomicUsize::new(0);
        let started = std::time::Instant::now();
        let swap_pq = |x: u8| if x < 8 { x ^ 4 } else { x };
        let acc = tasks
            .par_iter()
            .map(|prefix| {
                let mut acc = SearchAcc::default();
                for_each_matching(prefix, |m| {
                    let mut ext = [0u8; 24];
                    for &(a, b) in m {
                        ext[a as usize] = b;
                        ext[b as usize] = a;
                    }
                    // the first two rows play interchangeable roles, so
                    // keep one representative per swap pair
                    if ext[0] > swap_pq(ext[4]) {
                        return;
                    }
                    // two or more direct wires close the hooks into a
                    // two-crossing tangle, covered by earlier searches
                    if (16..20).filter(|&i| ext[i as usize] >= 20).count() >= 2 {
                        return;
                    }
                    if !COMP_CHECKS
                        .iter()
                        .zip(&mts)
                        .all(|(&(_, want), mt)| comps_match(mt, &ext, want))
                    {
                        return;
                    }
                    acc.passers += 1;
                    let signs = [1, 1, 1];
                    let (score, _) = battery_score(&targets, signs, m, true);
                    if score == targets.len() {
                        acc.survivors.push((signs, m.to_vec()));
                        println!("survivor: {m:?}");
                    }
                    if score > acc.best_score {
                        acc.best_score = score;
                        acc.best = Some((signs, m.to_vec()));
                    }
                });
                let done = counter.fetch_add(1, Ordering::Relaxed) + 1;
                if done % 4 == 0 || done == n_tasks {
                    let secs = started.elapsed().as_secs();
                    println!("full search: {done}/{n_tasks} tasks, {secs}s elapsed");
                }
                acc
            })
            .reduce(SearchAcc::default, SearchAcc::merge);
        println!("{} matchings passed components", acc.passers);
        println!("{} survivors", acc.survivors.len());
        for (signs, m) in acc.survivors.iter().take(40) {
            println!("survivor: signs {signs:?} matching {m:?}");
        }
        if let Some((signs, m)) = &acc.best {
            println!(
                "best score {} signs {signs:?} matching {m:?}",
                acc.best_score
            );
            println!("failures {:?}", failures(&targets, *signs, m));
        }
        assert!(!acc.survivors.is_empty(), "no six-region template matched");
    }

    /// Rerun of the six-region sweep with two corrections: the battery keeps
    /// only the subfamily identities (the two clasp-sector probes moved to a
    /// soft report), and matchings wiring the hooks to each other in series
    /// stay in scope, since those realise a two-crossing hook that no other
    /// sweep covers. Scoring goes through the fast bracket path.
    #[test]
    #[ignore]
    fn full_search_fast() {
        use crate::tangle::{fingerprint as t_fp, Closure as TClosure, Kind as TKind};
        const SOFT: [[i32; 4]; 2] = [[1, 1, 3, 0], [2, 0, 3, -2]];
        let all = battery_targets();
        let targets: Vec<([i32; 4], Fingerprint)> = all
            .iter()
            .filter(|(ps, _)| !SOFT.contains(ps))
            .cloned()
            .collect();
        let soft: Vec<([i32; 4], Fingerprint)> = all
            .iter()
            .filter(|(ps, _)| SOFT.contains(ps))
            .cloned()
            .collect();
        let cand = |ps: [i32; 4], m: &[(u8, u8)]| TClosure {
            regions: vec![
                (TKind::V, ps[0]),
                (TKind::V, ps[1]),
                (TKind::V, ps[2]),
                (TKind::V, ps[3]),
                (TKind::V, 1),
                (TKind::V, 1),
            ],
            pairs: m.to_vec(),
        };

        let mts = mate_tables();
        let mut tasks = matching_tasks();
        if let Ok(n) = std::env::var("SEARCH_TASKS").map(|v| v.parse().unwrap()) {
            tasks.truncate(n);
        }
        let n_tasks = tasks.len();
        let counter = AtomicUsize::new(0);
        let started = std::time::Instant::now();
        let swap_pq = |x: u8| if x < 8 { x ^ 4 } else { x };
        let acc = tasks
            .par_iter()
            .map(|prefix| {
                let mut acc = SearchAcc::default();
                for_each_matching(prefix, |m| {
                    let mut ext = [0u8; 24];
                    for &(a, b) in m {
                        ext[a as usize] = b;
                        ext[b as usize] = a;
                    }
                    if ext[0] > swap_pq(ext[4]) {
                        return;
                    }
                    if !COMP_CHECKS
                        .iter()
                        .zip(&mts)
                        .all(|(&(_, want), mt)| comps_match(mt, &ext, want))
                    {
                        return;
                    }
                    acc.passers += 1;
                    let mut score = 0usize;
                    for (ps, want) in &targets {
                        if &t_fp(&cand(*ps, m)) != want {
                            break;
                        }
                        score += 1;
                    }
                    if score == targets.len() {
                        let soft_mask: Vec<bool> = soft
                            .iter()
                            .map(|(ps, want)| &t_fp(&cand(*ps, m)) == want)
                            .collect();
                        println!("survivor: {m:?} soft {soft_mask:?}");
                        acc.survivors.push(([1, 1, 1], m.to_vec()));
                    }
                    if score > acc.best_score {
                        acc.best_score = score;
                        acc.best = Some(([1, 1, 1], m.to_vec()));
                    }
                });
                let done = counter.fetch_add(1, Ordering::Relaxed) + 1;
                if done % 4 == 0 || done == n_tasks {
                    let secs = started.elapsed().as_secs();
                    println!("fast search: {done}/{n_tasks} tasks, {secs}s elapsed");
                }
                acc
            })
            .reduce(SearchAcc::default, SearchAcc::merge);
        println!("{} matchings passed components", acc.passers);
        println!("{} survivors", acc.survivors.len());
        for (_, m) in acc.survivors.iter().take(40) {
            println!("survivor: {m:?}");
        }
        if let Some((_, m)) = &acc.best {
            println!("best score {} matching {m:?}", acc.best_score);
            for (ps, want) in &targets {
                let ok = &t_fp(&cand(*ps, m)) == want;
                println!("  best {ps:?} ok={ok}");
            }
        }
        assert!(!acc.survivors.is_empty(), "no six-region template matched");
    }
}

#[cfg(test)]
mod template_search {
    //! Exhaustive selection of the two-row piece's wiring. Run with
    //! `cargo test --release -p recomb-knots --lib template_search -- --ignored --nocapture`;
    //! the winner is frozen into Y_WIRING and the battery kept as
    //! regression tests elsewhere.
    use super::*;
    use crate::fingerprint::Fingerprint;

    fn fp(d: &Diagram) -> Fingerprint {
        Fingerprint::of_diagram(d).expect("battery diagrams stay small")
    }

    fn passes_components(w: &YWiring) -> bool {
        [
            (2, 2, 1),
            (3, 3, 2),
            (2, 3, 1),
            (3, 2, 1),
            (2, -2, 1),
            (3, -3, 2),
            (4, 1, 1),
        ]
        .iter()
        .all(|&(r, s, n)| clasp_diagram_with(r, s, w).component_count() == n)
    }

    fn passes_planarity(w: &YWiring) -> bool {
        for r in -3..=3 {
            for s in -3..=3 {
                if !clasp_diagram_with(r, s, w).is_planar() {
                    return false;
                }
            }
        }
        for p in -2..=2 {
            for q in -2..=2 {
                for r in 0..=3 {
                    for s in -2..=2 {
                        if !family_diagram_with(p, q, r, s, w).0.is_planar() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    const BATTERY: &[&str] = &[
        "C(2,2)=K(1,1,1)",
        "C(3,2)=K(2,1,1)",
        "C(2,3)=K(1,1,2)",
        "C(2,-2)=K(1,1,-3)",
        "C(-2,-2)=K(-1,-1,-1)",
        "C(4,1)=T(2,3)",
        "F(2,3,0,2)=T(2,5)",
        "F(2,3,0,-3)=T(2,5)",
        "F(2,0,1,2)=T(2,2)#T(2,3)",
        "F(2,3,1,2)=K(2,3,3)",
        "F(2,-3,1,-2)=K(2,-3,-1)",
        "F(1,-1,3,2)=T(2,3)",
        "F(1,-1,4,-2)=T(2,4)",
        "F(0,0,3,2)=C(3,2)+O",
        "F(2,0,3,-2)=T(2,2)#C(3,-2)",
        "F(-2,-3,3,-2) alt+red",
        "F(-2,-2,2,0) alt",
        "C(3,-2) alt",
        "C(3,2) not alt",
    ];

    fn battery_results(w: &YWiring) -> Vec<bool> {
        let clasp = |r, s| clasp_diagram_with(r, s, w);
        let family = |p, q, r, s| family_diagram_with(p, q, r, s, w).0;
        let fp_checks = [
            (clasp(2, 2), pretzel_diagram(1, 1, 1)),
            (clasp(3, 2), pretzel_diagram(2, 1, 1)),
            (clasp(2, 3), pretzel_diagram(1, 1, 2)),
            (clasp(2, -2), pretzel_diagram(1, 1, -3)),
            (clasp(-2, -2), pretzel_diagram(-1, -1, -1)),
            (clasp(4, 1), torus_diagram(3)),
            (family(2, 3, 0, 2), torus_diagram(5)),
            (family(2, 3, 0, -3), torus_diagram(5)),
            (
                family(2, 0, 1, 2),
                connected_sum(&torus_diagram(2), &torus_diagram(3)),
            ),
            (family(2, 3, 1, 2), pretzel_diagram(2, 3, 3)),
            (family(2, -3, 1, -2), pretzel_diagram(2, -3, -1)),
            (family(1, -1, 3, 2), torus_diagram(3)),
            (family(1, -1, 4, -2), torus_diagram(4)),
            (family(0, 0, 3, 2), with_free_loop(&clasp(3, 2))),
            (
                family(2, 0, 3, -2),
                connected_sum(&torus_diagram(2), &clasp(3, -2)),
            ),
        ];
        let mut out: Vec<bool> = fp_checks
            .iter()
            .map(|(got, want)| fp(got) == fp(want))
            .collect();
        let raw_alt = family(-2, -3, 3, -2);
        out.push(raw_alt.is_alternating() && raw_alt.is_reduced());
        out.push(family(-2, -2, 2, 0).is_alternating());
        out.push(clasp(3, -2).is_alternating());
        out.push(!clasp(3, 2).is_alternating());
        out
    }

    fn passes_fingerprints(w: &YWiring) -> bool {
        battery_results(w).into_iter().all(|b| b)
    }

    #[test]
    #[ignore]
    fn template_search() {
        let mut survivors = Vec::new();
        let mut comps_pass = 0usize;
        let mut planar_pass = 0usize;
        let mut item_pass = vec![0usize; BATTERY.len()];
        let mut best_score = 0usize;
        let mut best: Option<(YWiring, Vec<bool>)> = None;
        for a in 0..8u8 {
            for b in 0..8u8 {
                for c in 0..8u8 {
                    for d in 0..8u8 {
                        let corners = [a, b, c, d];
                        if corners[1..].iter().enumerate().any(|(i, x)| {
                            corners[..=i].contains(x)
                        }) {
                            continue;
                        }
                        for internal in 0..3u8 {
                            for flips in 0..4u8 {
                                let w = YWiring {
                                    corners,
                                    internal,
                                    flip_v: flips & 1 != 0,
                                    flip_h: flips & 2 != 0,
                                };
                                if !passes_components(&w) {
                                    continue;
                                }
                                comps_pass += 1;
                                if !passes_planarity(&w) {
                                    continue;
                                }
                                planar_pass += 1;
                                let results = battery_results(&w);
                                let n_ok = results.iter().filter(|b| **b).count();
                                for (i, ok) in results.iter().enumerate() {
                                    if *ok {
                                        item_pass[i] += 1;
                                    }
                                }
                                if n_ok > best_score {
                                    best_score = n_ok;
                                    best = Some((w, results.clone()));
                                }
                                if results.into_iter().all(|b| b) {
                                    println!("survivor: {w:?}");
                                    survivors.push(w);
                                }
                            }
                        }
                    }
                }
            }
        }
        println!(
            "components filter passed: {comps_pass}; planar: {planar_pass}; full survivors: {}",
            survivors.len()
        );
        for (name, n) in BATTERY.iter().zip(item_pass.iter()) {
            println!("  item pass {n:4}  {name}");
        }
        if let Some((w, results)) = &best {
            println!("best candidate ({best_score}/{}): {w:?}", BATTERY.len());
            for (name, ok) in BATTERY.iter().zip(results.iter()) {
                if !ok {
                    println!("  best fails: {name}");
                }
            }
        }
        assert!(!survivors.is_empty(), "no wiring satisfies the battery");
        let min = survivors
            .iter()
            .min_by_key(|w| (w.corners, w.internal, w.flip_v, w.flip_h))
            .unwrap();
        println!("lexicographically least survivor: {min:?}");
        println!("currently frozen: {Y_WIRING:?}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Laurent;

    #[test]
    fn torus_basics() {
        let unlink = torus_diagram(0);
        assert_eq!(unlink.crossing_count(), 0);
        assert_eq!(unlink.component_count(), 2);

        let unknot = torus_diagram(1);
        assert_eq!(unknot.component_count(), 1);
        assert_eq!(unknot.jones().unwrap(), Laurent::one());

        let hopf = torus_diagram(2);
        assert_eq!(hopf.component_count(), 2);
        assert!(hopf.is_planar());
        assert!(hopf.is_alternating());
        assert!(hopf.is_reduced());

        for n in -6..=6i32 {
            let d = torus_diagram(n);
            assert!(d.is_planar(), "torus {n} not planar");
            let expect = match n.unsigned_abs() {
                0 => 2,
                1 => 1,
                k if k % 2 == 0 => 2,
                _ => 1,
            };
            assert_eq!(d.component_count(), expect, "torus {n} components");
        }
    }

    #[test]
    fn hopf_bracket() {
        // 2-crossing closure: bracket is -A^4 - A^-4 for one handedness
        let b = torus_diagram(2).kauffman_bracket().unwrap();
        let expected = Laurent::from_terms([(4, -1), (-4, -1)]);
        assert!(
            b == expected || b == expected.mirror(),
            "unexpected Hopf bracket {b:?}"
        );
    }

    #[test]
    fn trefoil_jones_up_to_mirror() {
        // V(trefoil) = -t^-4 + t^-3 + t^-1 (or its mirror); exponents
        // stored as quarter powers scaled by 4
        let j = torus_diagram(3).jones().unwrap();
        let trefoil = Laurent::from_terms([(-16, -1), (-12, 1), (-4, 1)]);
        assert!(
            j == trefoil || j == trefoil.mirror(),
            "unexpected trefoil Jones {j:?}"
        );
    }

    #[test]
    fn pretzel_basics() {
        for (a, b, c, comps) in [
            (1, 1, 1, 1),
            (2, 1, 1, 1),
            (3, 3, 1, 1),
            (2, 2, 2, 3),
            (2, 2, 1, 2),
            (2, 2, 0, 3),
            (0, 0, 0, 3),
            (0, 0, 5, 2),
            (-2, 3, 1, 1),
        ] {
            let d = pretzel_diagram(a, b, c);
            assert!(d.is_planar(), "pretzel ({a},{b},{c}) not planar");
            assert_eq!(
                d.component_count(),
                comps,
                "pretzel ({a},{b},{c}) components"
            );
        }
        // all-positive pretzel diagrams alternate
        assert!(pretzel_diagram(2, 3, 2).is_alternating());
        assert!(pretzel_diagram(1, 1, 1).is_alternating());
        assert!(pretzel_diagram(-2, -1, -3).is_alternating());
    }

    #[test]
    fn trefoil_matches_pretzel_111() {
        let t = torus_diagram(3).jones().unwrap();
        let k = pretzel_diagram(1, 1, 1).jones().unwrap();
        assert!(t == k || t == k.mirror());
    }

    #[test]
    fn figure_eight_jones() {
        // K(2,1,1): V = t^-2 - t^-1 + 1 - t + t^2 (amphichiral)
        let j = pretzel_diagram(2, 1, 1).jones().unwrap();
        let expected =
            Laurent::from_terms([(-8, 1), (-4, -1), (0, 1), (4, -1), (8, 1)]);
        assert_eq!(j, expected);
        assert_eq!(j, j.mirror());
    }

    #[test]
    fn clasp_components() {
        for (r, s, comps) in [
            (2, 2, 1),
            (3, 3, 2),
            (2, 3, 1),
            (3, 2, 1),
            (2, -2, 1),
            (3, -3, 2),
            (0, 4, 1),
            (4, 0, 1),
            (4, 1, 1),
            (4, -1, 1),
        ] {
            let d = clasp_diagram(r, s);
            assert!(d.is_planar(), "clasp ({r},{s}) not planar");
            assert_eq!(d.component_count(), comps, "clasp ({r},{s}) components");
        }
    }

    #[test]
    fn family_zero_is_unlink() {
        let d = family_diagram(0, 0, 0, 0);
        assert_eq!(d.crossing_count(), 0);
        // closure strands plus the trivial circle from the empty rational piece
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn family_planar_on_small_sweep() {
        for p in -3..=3 {
            for q in -3..=3 {
                for r in 0..=3 {
                    for s in -3..=3 {
                        let d = family_diagram(p, q, r, s);
                        assert!(d.is_planar(), "family ({p},{q},{r},{s}) not planar");
                    }
                }
            }
        }
    }

    #[test]
    fn connected_sum_of_hopfs() {
        let hopf = torus_diagram(2);
        let d = connected_sum(&hopf, &hopf);
        assert!(d.is_planar());
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.crossing_count(), 4);
    }

    #[test]
    fn free_loop_addition() {
        let d = with_free_loop(&torus_diagram(3));
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.free_loop_count(), 1);
    }
}
