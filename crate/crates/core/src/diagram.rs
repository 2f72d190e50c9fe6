//! Planar link diagrams (PD codes) and the Kauffman bracket / Jones oracle.
//!
//! A crossing stores the four incident arcs counterclockwise. Slot 0 and
//! slot 2 carry the understrand, slots 1 and 3 the overstrand. With that
//! convention the bracket needs no orientation data at all: the A-smoothing
//! joins slots (0,3) and (1,2), the B-smoothing joins (0,1) and (2,3).
//!
//! Orientations are only needed for the writhe. We orient each component
//! deterministically (forward = the traversal containing its lowest port),
//! and a crossing is positive exactly when its understrand and overstrand
//! are traversed in matching slot order (0->2 with 1->3, or 2->0 with 3->1).

use crate::laurent::Laurent;
use crate::Error;

/// Hard cap on crossings for the 2^c bracket state sum.
pub const BRACKET_MAX_CROSSINGS: usize = 24;

/// A port is one of the four slots of a crossing: `4 * crossing + slot`.
pub type Port = u32;

#[derive(Clone, Debug)]
pub struct Diagram {
    /// crossings[c][slot] = arc id; arcs are dense 0..n_arcs, each id
    /// appearing exactly twice over all slots.
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
    /// joins[port] = the port at the other end of that arc.
    joins: Vec<Port>,
}

/// Incremental diagram assembly: allocate crossings, then join ports.
#[derive(Clone, Debug, Default)]
pub struct Builder {
    joins: Vec<Option<Port>>,
    free_loops: usize,
}

impl Builder {
    pub fn new() -> Self {
        Builder::default()
    }

    /// Adds a crossing and returns its index.
    pub fn add_crossing(&mut self) -> usize {
        let c = self.joins.len() / 4;
        self.joins.extend([None; 4]);
        c
    }

    pub fn add_free_loop(&mut self) {
        self.free_loops += 1;
    }

    /// Connects two ports with an arc. Both must be unused ports of
    /// already-allocated crossings.
    pub fn join(&mut self, a: Port, b: Port) {
        assert!(a != b, "an arc cannot join a port to itself");
        assert!(
            self.joins[a as usize].is_none() && self.joins[b as usize].is_none(),
            "port joined twice"
        );
        self.joins[a as usize] = Some(b);
        self.joins[b as usize] = Some(a);
    }

    pub fn crossing_count(&self) -> usize {
        self.joins.len() / 4
    }

    pub fn finish(self) -> Diagram {
        let joins: Vec<Port> = self
            .joins
            .iter()
            .map(|j| j.expect("dangling port: every slot must be joined"))
            .collect();
        let n_cross = joins.len() / 4;
        let mut arc_of = vec![u32::MAX; joins.len()];
        let mut next_arc = 0u32;
        for p in 0..joins.len() {
            if arc_of[p] == u32::MAX {
                arc_of[p] = next_arc;
                arc_of[joins[p] as usize] = next_arc;
                next_arc += 1;
            }
        }
        let crossings = (0..n_cross)
            .map(|c| [0, 1, 2, 3].map(|s| arc_of[4 * c + s]))
            .collect();
        Diagram {
            crossings,
            free_loops: self.free_loops,
            joins,
        }
    }
}

pub fn port(crossing: usize, slot: usize) -> Port {
    debug_assert!(slot < 4);
    (4 * crossing + slot) as Port
}

impl Diagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loop_count(&self) -> usize {
        self.free_loops
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// The port at the far end of the arc leaving `p`.
    pub fn mate(&self, p: Port) -> Port {
        self.joins[p as usize]
    }

    /// The port where the strand entering at `p` leaves its crossing
    /// (slot 0 <-> 2, slot 1 <-> 3).
    fn through(p: Port) -> Port {
        p ^ 2
    }

    fn n_ports(&self) -> usize {
        self.joins.len()
    }

    /// Builds a diagram directly from PD-style crossing tuples: each entry
    /// lists the four arc labels counterclockwise (understrand on slots 0,2).
    /// Labels may be arbitrary, but each must occur exactly twice.
    pub fn from_crossing_tuples(tuples: &[[u32; 4]], free_loops: usize) -> Result<Diagram, Error> {
        let mut first_seen: std::collections::HashMap<u32, Port> = Default::default();
        let mut builder = Builder::new();
        for _ in tuples {
            builder.add_crossing();
        }
        for _ in 0..free_loops {
            builder.add_free_loop();
        }
        for (c, tuple) in tuples.iter().enumerate() {
            for (s, &label) in tuple.iter().enumerate() {
                let p = port(c, s);
                match first_seen.entry(label) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(p);
                    }
                    std::collections::hash_map::Entry::Occupied(o) => {
                        let q = *o.get();
                        if q == u32::MAX {
                            return Err(Error::InvalidDiagram(format!(
                                "arc label {label} appears more than twice"
                            )));
                        }
                        builder.join(q, p);
                        *o.into_mut() = u32::MAX;
                    }
                }
            }
        }
        if let Some((label, _)) = first_seen.iter().find(|(_, &p)| p != u32::MAX) {
            return Err(Error::InvalidDiagram(format!(
                "arc label {label} appears only once"
            )));
        }
        Ok(builder.finish())
    }

    /// Number of circle components (strand tracing plus free loops).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n_ports()];
        let mut orbits = 0usize;
        for start in 0..self.n_ports() as Port {
            if seen[start as usize] {
                continue;
            }
            orbits += 1;
            let mut p = start;
            while !seen[p as usize] {
                seen[p as usize] = true;
                p = self.mate(Self::through(p));
            }
        }
        debug_assert!(orbits % 2 == 0);
        orbits / 2 + self.free_loops
    }

    /// Component index for every port (free loops not included).
    fn port_components(&self) -> (Vec<u32>, usize) {
        let mut comp = vec![u32::MAX; self.n_ports()];
        let mut n = 0u32;
        for start in 0..self.n_ports() as Port {
            if comp[start as usize] != u32::MAX {
                continue;
            }
            // mark both traversal directions with the same component id
            let mut p = start;
            while comp[p as usize] == u32::MAX {
                comp[p as usize] = n;
                let out = Self::through(p);
                comp[out as usize] = n;
                p = self.mate(out);
            }
            n += 1;
        }
        (comp, n as usize)
    }

    /// Forward orbit of each component: the traversal containing the
    /// component's lowest port defines its orientation.
    fn forward_ports(&self) -> Vec<bool> {
        let mut forward = vec![false; self.n_ports()];
        let mut visited = vec![false; self.n_ports()];
        for start in 0..self.n_ports() as Port {
            if visited[start as usize] {
                continue;
            }
            // the orbit through `start`; `start` is the lowest unvisited port,
            // hence the lowest of its component, so this orbit is forward
            let mut p = start;
            loop {
                visited[p as usize] = true;
                forward[p as usize] = true;
                let out = Self::through(p);
                visited[out as usize] = true;
                p = self.mate(out);
                if p == start {
                    break;
                }
            }
        }
        forward
    }

    /// Writhe decomposition for orientation sweeps: crossings within one
    /// component contribute a fixed sum; crossings between two components
    /// flip sign with either component's orientation.
    /// Returns (self_writhe, pair contributions keyed by component pair).
    pub fn writhe_parts(&self) -> (i64, Vec<((u32, u32), i64)>) {
        let (comp, _) = self.port_components();
        let forward = self.forward_ports();
        let mut self_w = 0i64;
        let mut pairs: std::collections::BTreeMap<(u32, u32), i64> = Default::default();
        for c in 0..self.crossing_count() {
            let under_in = port(c, 0);
            let over_in = port(c, 1);
            let sign = if forward[under_in as usize] == forward[over_in as usize] {
                1i64
            } else {
                -1i64
            };
            let (cu, co) = (comp[under_in as usize], comp[over_in as usize]);
            if cu == co {
                self_w += sign;
            } else {
                let key = (cu.min(co), cu.max(co));
                *pairs.entry(key).or_insert(0) += sign;
            }
        }
        (self_w, pairs.into_iter().collect())
    }

    /// Writhe under the deterministic orientation.
    pub fn writhe(&self) -> i64 {
        let (s, pairs) = self.writhe_parts();
        s + pairs.iter().map(|(_, w)| w).sum::<i64>()
    }

    /// Number of link components crossing-traced (excludes free loops).
    pub fn traced_component_count(&self) -> usize {
        self.port_components().1
    }

    /// Face orbits of the rotation system. Returns (number of faces,
    /// face id per corner) where corner (c, s) lies between slots s and s+1.
    fn faces(&self) -> (usize, Vec<[u32; 4]>) {
        let n = self.n_ports();
        let mut corner_face = vec![[u32::MAX; 4]; self.crossing_count()];
        let mut face_of_arrival = vec![u32::MAX; n];
        let mut n_faces = 0u32;
        for start in 0..n as Port {
            if face_of_arrival[start as usize] != u32::MAX {
                continue;
            }
            let mut p = start;
            loop {
                face_of_arrival[p as usize] = n_faces;
                let c = (p / 4) as usize;
                let s = (p % 4) as usize;
                corner_face[c][s] = n_faces;
                let next = port(c, (s + 1) % 4);
                p = self.mate(next);
                if p == start {
                    break;
                }
            }
            n_faces += 1;
        }
        (n_faces as usize, corner_face)
    }

    /// True when every connected piece of the underlying 4-valent graph
    /// embeds in the sphere (Euler characteristic check via face counting).
    /// Free loops are trivially planar and ignored.
    pub fn is_planar(&self) -> bool {
        if self.crossing_count() == 0 {
            return true;
        }
        let (_, corner_face) = self.faces();
        // group crossings into connected pieces via arcs
        let mut piece = (0..self.crossing_count() as u32).collect::<Vec<_>>();
        fn find(piece: &mut Vec<u32>, x: u32) -> u32 {
            let mut root = x;
            while piece[root as usize] != root {
                root = piece[root as usize];
            }
            let mut cur = x;
            while piece[cur as usize] != root {
                let next = piece[cur as usize];
                piece[cur as usize] = root;
                cur = next;
            }
            root
        }
        for p in 0..self.n_ports() as Port {
            let a = p / 4;
            let b = self.mate(p) / 4;
            let (ra, rb) = (find(&mut piece, a), find(&mut piece, b));
            if ra != rb {
                piece[ra as usize] = rb;
            }
        }
        let mut v_count: std::collections::HashMap<u32, i64> = Default::default();
        for c in 0..self.crossing_count() as u32 {
            *v_count.entry(find(&mut piece, c)).or_insert(0) += 1;
        }
        // count faces per piece (every face touches only one piece)
        let mut f_count: std::collections::HashMap<u32, i64> = Default::default();
        let mut seen_face: std::collections::HashMap<u32, ()> = Default::default();
        for c in 0..self.crossing_count() {
            let root = find(&mut piece, c as u32);
            for s in 0..4 {
                let f = corner_face[c][s];
                if seen_face.insert(f, ()).is_none() {
                    *f_count.entry(root).or_insert(0) += 1;
                }
            }
        }
        // per piece: V - E + F = 2 with E = 2V
        v_count
            .iter()
            .all(|(root, &v)| v - 2 * v + f_count.get(root).copied().unwrap_or(0) == 2)
    }

    /// A crossing is nugatory when two opposite corners share a face
    /// (equivalently, a simple circle meets the diagram only there).
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        if self.crossing_count() == 0 {
            return vec![];
        }
        let (_, corner_face) = self.faces();
        (0..self.crossing_count())
            .filter(|&c| {
                corner_face[c][0] == corner_face[c][2] || corner_face[c][1] == corner_face[c][3]
            })
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    /// Walks every component and checks that crossing passes alternate
    /// under/over cyclically.
    pub fn is_alternating(&self) -> bool {
        let mut visited = vec![false; self.n_ports()];
        for start in 0..self.n_ports() as Port {
            if visited[start as usize] {
                continue;
            }
            let mut p = start;
            let mut parities = Vec::new();
            loop {
                visited[p as usize] = true;
                visited[Self::through(p) as usize] = true;
                parities.push(p % 2 == 0); // slots 0,2: under pass
                p = self.mate(Self::through(p));
                if p == start {
                    break;
                }
            }
            if parities.len() > 1 || self.traced_component_count() > 0 {
                let n = parities.len();
                for i in 0..n {
                    if parities[i] == parities[(i + 1) % n] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Sequences of (crossing, is_under) along each component's forward
    /// traversal. Used for region-structure checks.
    pub fn component_passes(&self) -> Vec<Vec<(usize, bool)>> {
        let mut visited = vec![false; self.n_ports()];
        let mut out = Vec::new();
        for start in 0..self.n_ports() as Port {
            if visited[start as usize] {
                continue;
            }
            let mut p = start;
            let mut passes = Vec::new();
            loop {
                visited[p as usize] = true;
                visited[Self::through(p) as usize] = true;
                passes.push(((p / 4) as usize, p % 2 == 0));
                p = self.mate(Self::through(p));
                if p == start {
                    break;
                }
            }
            out.push(passes);
        }
        out
    }

    /// Kauffman bracket by the 2^c state sum. Exact integer arithmetic in
    /// the variable A; deterministic and schedule-independent.
    pub fn kauffman_bracket(&self) -> Result<Laurent, Error> {
        let c = self.crossing_count();
        if c > BRACKET_MAX_CROSSINGS {
            return Err(Error::SizeLimit {
                what: "bracket state sum crossings".into(),
                limit: BRACKET_MAX_CROSSINGS as u64,
                actual: c as u64,
            });
        }
        // delta^k expansions with delta = -A^2 - A^-2:
        // delta^k = (-1)^k * sum_j C(k,j) A^(2k-4j)
        let max_loops = c + 1 + self.free_loops;
        let mut delta_pow: Vec<Vec<(i32, i64)>> = Vec::with_capacity(max_loops + 1);
        delta_pow.push(vec![(0, 1)]);
        for k in 1..=max_loops {
            let prev = &delta_pow[k - 1];
            let mut next: std::collections::BTreeMap<i32, i64> = Default::default();
            for &(e, co) in prev {
                *next.entry(e + 2).or_insert(0) -= co;
                *next.entry(e - 2).or_insert(0) -= co;
            }
            delta_pow.push(next.into_iter().collect());
        }

        if c == 0 {
            // bracket of k free loops = delta^(k-1); empty diagram -> 1
            let k = self.free_loops;
            let terms = if k == 0 {
                vec![(0, 1)]
            } else {
                delta_pow[k - 1].clone()
            };
            return Ok(Laurent::from_terms(terms));
        }

        let offset = (3 * c + 2) as i32;
        let width = 2 * offset as usize + 1;
        let n_states: u64 = 1u64 << c;

        let accumulate = |range: std::ops::Range<u64>| -> Vec<i64> {
            let mut acc = vec![0i64; width];
            let mut stamp = vec![0u64; self.n_ports()];
            for state in range.clone() {
                let tag = state + 1;
                let mut loops = 0usize;
                for p0 in 0..self.n_ports() as Port {
                    if stamp[p0 as usize] == tag {
                        continue;
                    }
                    loops += 1;
                    let mut p = p0;
                    while stamp[p as usize] != tag {
                        stamp[p as usize] = tag;
                        let cr = (p / 4) as usize;
                        let s = p % 4;
                        // A joins slots (0,3),(1,2); B joins (0,1),(2,3)
                        let mate_slot = if state >> cr & 1 == 0 {
                            3 - s
                        } else {
                            s ^ 1
                        };
                        let q = port(cr, mate_slot as usize);
                        stamp[q as usize] = tag;
                        p = self.mate(q);
                    }
                }
                let b = state.count_ones() as i32;
                let exp_shift = c as i32 - 2 * b;
                for &(e, co) in &delta_pow[loops + self.free_loops - 1] {
                    let idx = (e + exp_shift + offset) as usize;
                    acc[idx] = acc[idx].checked_add(co).expect("bracket overflow");
                }
            }
            acc
        };

        let acc = if c >= 14 {
            let n_chunks = 64u64;
            let chunk = n_states.div_ceil(n_chunks);
            let ranges: Vec<std::ops::Range<u64>> = (0..n_chunks)
                .map(|i| (i * chunk).min(n_states)..((i + 1) * chunk).min(n_states))
                .filter(|r| !r.is_empty())
                .collect();
            crate::thread_pool().install(|| {
                use rayon::prelude::*;
                ranges
                    .into_par_iter()
                    .map(accumulate)
                    .reduce(
                        || vec![0i64; width],
                        |mut a, b| {
                            for (x, y) in a.iter_mut().zip(b) {
                                *x = x.checked_add(y).expect("bracket overflow");
                            }
                            a
                        },
                    )
            })
        } else {
            accumulate(0..n_states)
        };

        Ok(Laurent::from_terms(
            acc.iter()
                .enumerate()
                .filter(|(_, &co)| co != 0)
                .map(|(i, &co)| (i as i32 - offset, co)),
        ))
    }

    /// Jones polynomial under the deterministic orientation, expressed in
    /// x = t^(1/4) (exponents are quarter powers of t scaled by 4).
    pub fn jones(&self) -> Result<Laurent, Error> {
        let bracket = self.kauffman_bracket()?;
        Ok(jones_from_bracket(&bracket, self.writhe()))
    }

    /// Jones polynomials over all 2^(k-1) component orientation choices
    /// (component 0 fixed). The bracket is computed once; only the writhe
    /// changes with orientation.
    pub fn jones_all_orientations(&self) -> Result<Vec<Laurent>, Error> {
        let bracket = self.kauffman_bracket()?;
        let (self_w, pairs) = self.writhe_parts();
        let k = self.traced_component_count();
        let flips = if k <= 1 { 1u32 } else { 1u32 << (k - 1) };
        let mut out = Vec::with_capacity(flips as usize);
        for mask in 0..flips {
            // component 0 keeps orientation; component i flips when bit i-1 set
            let eps = |i: u32| -> i64 {
                if i == 0 || mask >> (i - 1) & 1 == 0 {
                    1
                } else {
                    -1
                }
            };
            let w = self_w
                + pairs
                    .iter()
                    .map(|&((a, b), s)| s * eps(a) * eps(b))
                    .sum::<i64>();
            out.push(jones_from_bracket(&bracket, w));
        }
        Ok(out)
    }

    /// Serializes as PD text: one "X(a,b,c,d)" line per crossing and one
    /// "O" line per free loop.
    pub fn to_pd_string(&self) -> String {
        let mut out = String::new();
        for t in &self.crossings {
            out.push_str(&format!("X({},{},{},{})\n", t[0], t[1], t[2], t[3]));
        }
        for _ in 0..self.free_loops {
            out.push_str("O\n");
        }
        out
    }

    pub fn from_pd_string(text: &str) -> Result<Diagram, Error> {
        let mut tuples = Vec::new();
        let mut free_loops = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line == "O" {
                free_loops += 1;
                continue;
            }
            let inner = line
                .strip_prefix("X(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| {
                    Error::Parse(format!("line {}: expected X(a,b,c,d) or O", lineno + 1))
                })?;
            let nums: Result<Vec<u32>, _> =
                inner.split(',').map(|f| f.trim().parse::<u32>()).collect();
            let nums =
                nums.map_err(|e| Error::Parse(format!("line {}: {}", lineno + 1, e)))?;
            if nums.len() != 4 {
                return Err(Error::Parse(format!(
                    "line {}: crossing needs exactly four arcs",
                    lineno + 1
                )));
            }
            tuples.push([nums[0], nums[1], nums[2], nums[3]]);
        }
        Diagram::from_crossing_tuples(&tuples, free_loops)
    }

    /// Inserts a Reidemeister I kink on the arc leaving `p`, returning the
    /// new diagram. `positive` selects the kink's crossing sign.
    pub fn r1_insert(&self, p: Port, positive: bool) -> Diagram {
        let q = self.mate(p);
        let mut b = self.rebuilder_excluding(&[(p, q)]);
        let n = b.add_crossing();
        if positive {
            // strand runs 0 -> 2, loop joins slots 1,2... loop on (1,2)
            // means strand enters slot 0, exits slot 3
            b.join(p, port(n, 0));
            b.join(port(n, 1), port(n, 2));
            b.join(port(n, 3), q);
        } else {
            b.join(p, port(n, 0));
            b.join(port(n, 2), port(n, 3));
            b.join(port(n, 1), q);
        }
        b.finish()
    }

    /// Inserts a Reidemeister II push of the arc at `pa` over the arc at
    /// `pb`; the two arcs must border a common face for the result to stay
    /// planar (the caller verifies with `is_planar`).
    pub fn r2_insert(&self, pa: Port, pb: Port, flip: bool) -> Diagram {
        let qa = self.mate(pa);
        let qb = self.mate(pb);
        let mut b = self.rebuilder_excluding(&[(pa, qa), (pb, qb)]);
        let u = b.add_crossing();
        let v = b.add_crossing();
        // strand A goes over both new crossings: slots 1 -> 3 twice
        b.join(pa, port(u, 1));
        b.join(port(u, 3), port(v, 1));
        b.join(port(v, 3), qa);
        // strand B goes under both; two slot orders, one of which is planar
        if !flip {
            b.join(pb, port(v, 0));
            b.join(port(v, 2), port(u, 0));
            b.join(port(u, 2), qb);
        } else {
            b.join(pb, port(u, 0));
            b.join(port(u, 2), port(v, 0));
            b.join(port(v, 2), qb);
        }
        b.finish()
    }

    /// All ports, for move-site selection in tests.
    pub fn ports(&self) -> impl Iterator<Item = Port> + '_ {
        0..self.n_ports() as Port
    }

    /// Two directed arcs bordering a common face, as (port, port) pairs of
    /// their arrival ends, for every face with at least two distinct arcs.
    pub fn coface_arc_pairs(&self) -> Vec<(Port, Port)> {
        if self.crossing_count() == 0 {
            return vec![];
        }
        let n = self.n_ports();
        let mut face_of_arrival = vec![u32::MAX; n];
        let mut n_faces = 0u32;
        for start in 0..n as Port {
            if face_of_arrival[start as usize] != u32::MAX {
                continue;
            }
            let mut p = start;
            loop {
                face_of_arrival[p as usize] = n_faces;
                let c = (p / 4) as usize;
                let s = (p % 4) as usize;
                p = self.mate(port(c, (s + 1) % 4));
                if p == start {
                    break;
                }
            }
            n_faces += 1;
        }
        let mut by_face: Vec<Vec<Port>> = vec![Vec::new(); n_faces as usize];
        for p in 0..n as Port {
            by_face[face_of_arrival[p as usize] as usize].push(p);
        }
        let mut out = Vec::new();
        for ports in by_face {
            for i in 0..ports.len() {
                for j in (i + 1)..ports.len() {
                    // skip the two ends of one arc
                    if self.mate(ports[i]) != ports[j] {
                        out.push((ports[i], ports[j]));
                    }
                }
            }
        }
        out
    }

    /// Connected sum: cuts the arc leaving `pa` in `self` and the arc
    /// leaving `pb` in `other`, cross-joining the ends.
    pub fn splice(&self, pa: Port, other: &Diagram, pb: Port) -> Diagram {
        if self.crossing_count() == 0 {
            // factor is a split union of free loops: summing into one of
            // them leaves the other diagram unchanged
            let mut b = other.rebuilder_excluding(&[]);
            for _ in 0..self.free_loops.saturating_sub(1) {
                b.add_free_loop();
            }
            return b.finish();
        }
        if other.crossing_count() == 0 {
            let mut b = self.rebuilder_excluding(&[]);
            for _ in 0..other.free_loops.saturating_sub(1) {
                b.add_free_loop();
            }
            return b.finish();
        }
        let qa = self.mate(pa);
        let qb = other.mate(pb);
        let shift = self.n_ports() as Port;
        let mut b = Builder::new();
        for _ in 0..self.crossing_count() + other.crossing_count() {
            b.add_crossing();
        }
        for _ in 0..self.free_loops + other.free_loops {
            b.add_free_loop();
        }
        for p in 0..self.n_ports() as Port {
            let q = self.mate(p);
            if q > p && (p, q) != (pa.min(qa), pa.max(qa)) {
                b.join(p, q);
            }
        }
        for p in 0..other.n_ports() as Port {
            let q = other.mate(p);
            if q > p && (p, q) != (pb.min(qb), pb.max(qb)) {
                b.join(p + shift, q + shift);
            }
        }
        b.join(pa, pb + shift);
        b.join(qa, qb + shift);
        b.finish()
    }

    /// A builder preloaded with this diagram minus the listed arcs.
    fn rebuilder_excluding(&self, cut: &[(Port, Port)]) -> Builder {
        let mut b = Builder::new();
        for _ in 0..self.crossing_count() {
            b.add_crossing();
        }
        for _ in 0..self.free_loops {
            b.add_free_loop();
        }
        let is_cut = |p: Port, q: Port| {
            cut.iter()
                .any(|&(a, bq)| (a.min(bq), a.max(bq)) == (p.min(q), p.max(q)))
        };
        for p in 0..self.n_ports() as Port {
            let q = self.mate(p);
            if q > p && !is_cut(p, q) {
                b.join(p, q);
            }
        }
        b
    }
}

/// (-A)^(-3w) * bracket, re-expressed in x = t^(1/4) = A^(-1).
pub(crate) fn jones_from_bracket(bracket: &Laurent, writhe: i64) -> Laurent {
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let shift = (-3 * writhe) as i32;
    bracket.shift(shift).scale(sign).mirror()
}
