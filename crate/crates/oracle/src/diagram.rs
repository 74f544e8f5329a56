//! Rotation-system representation of directed A2 webs in a disk.
//!
//! An edge `e` owns the half-edge pair `(2e, 2e+1)` and is directed from the
//! attachment of `2e` (tail) to the attachment of `2e+1` (head). Each vertex
//! stores its incident half-edges in counterclockwise rotation order; the
//! disk boundary stores its half-edges in clockwise order around the interior,
//! which reads left to right when the boundary is unrolled into a line with
//! the web hanging below it. Faces are the orbits of the map sending a
//! half-edge to the rotation successor of its twin, with the boundary treated
//! as a single vertex at infinity; a component is planar exactly when its
//! Euler count comes out to 2, and `validate` checks this.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::OracleError;

/// Half-edge id. `twin(h) = h ^ 1`; even ids are tails, odd ids heads.
pub type Half = usize;

#[inline]
pub fn twin(h: Half) -> Half {
    h ^ 1
}

/// True when the half-edge is its edge's head (the edge points at it).
#[inline]
pub fn is_head(h: Half) -> bool {
    h & 1 == 1
}

/// Vertex kinds. Clasp boxes are transient: evaluation expands them away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// Trivalent vertex with all three edges pointing in.
    Sink,
    /// Trivalent vertex with all three edges pointing out.
    Source,
    /// 4-valent crossing; strands occupy rotation slots (0,2) and (1,3).
    /// `over_first` marks strand (0,2) as the over strand.
    Crossing { over_first: bool },
    /// Clasp on an `n`-strand cable. Rotation lists one side then the other,
    /// so strand `i` joins slot `i` to slot `2n-1-i`.
    Clasp { n: usize },
    /// Double clasp on an antiparallel pair of cables of widths `a` and `b`.
    /// Rotation: a-side-1, b-side-1, then side 2 of both groups reversed, so
    /// a-strand `i` joins slot `i` to slot `2(a+b)-1-i` and b-strand `j` joins
    /// slot `a+j` to slot `a+2b-1-j`.
    DoubleClasp { a: usize, b: usize },
}

impl VertexKind {
    pub fn arity(&self) -> usize {
        match *self {
            VertexKind::Sink | VertexKind::Source => 3,
            VertexKind::Crossing { .. } => 4,
            VertexKind::Clasp { n } => 2 * n,
            VertexKind::DoubleClasp { a, b } => 2 * (a + b),
        }
    }
}

/// Where a half-edge currently lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attach {
    Vert(usize),
    Bnd,
    /// Allocated but not yet placed (only during construction/rewrites).
    Loose,
    Dead,
}

/// Outcome of a single splice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fused {
    /// The two loose halves were two ends of one edge: a free circle closed.
    Circle,
    /// The strands were joined and the surviving half sits where the far end
    /// of the deleted edge used to sit.
    Spliced,
    /// The far end of the deleted edge was itself loose; `new` now plays the
    /// role `old` played in any pending splice list.
    Renamed { old: Half, new: Half },
}

#[derive(Debug, Clone)]
struct Vertex {
    kind: VertexKind,
    rot: Vec<Half>,
}

/// A directed web with boundary, possibly containing crossings and clasp
/// boxes. Cheap to clone; rewriting branches clone freely.
#[derive(Debug, Clone, Default)]
pub struct WebDiagram {
    verts: Vec<Option<Vertex>>,
    attach: Vec<Attach>,
    boundary: Vec<Half>,
}

impl WebDiagram {
    pub fn new() -> Self {
        WebDiagram::default()
    }

    /// Allocates a fresh edge, returning `(tail, head)`, both loose.
    pub fn alloc_edge(&mut self) -> (Half, Half) {
        let t = self.attach.len();
        self.attach.push(Attach::Loose);
        self.attach.push(Attach::Loose);
        (t, t + 1)
    }

    /// Installs a vertex whose rotation is the given CCW half-edge list.
    pub fn add_vertex(&mut self, kind: VertexKind, rot: Vec<Half>) -> usize {
        assert_eq!(rot.len(), kind.arity(), "vertex arity mismatch");
        let vid = self.verts.len();
        for &h in &rot {
            assert_eq!(self.attach[h], Attach::Loose, "half-edge {h} already placed");
            self.attach[h] = Attach::Vert(vid);
        }
        self.verts.push(Some(Vertex { kind, rot }));
        vid
    }

    /// Appends loose half-edges to the boundary, in order.
    pub fn push_boundary(&mut self, stubs: &[Half]) {
        for &h in stubs {
            assert_eq!(self.attach[h], Attach::Loose, "half-edge {h} already placed");
            self.attach[h] = Attach::Bnd;
            self.boundary.push(h);
        }
    }

    pub fn boundary(&self) -> &[Half] {
        &self.boundary
    }

    pub fn attach_of(&self, h: Half) -> Attach {
        self.attach[h]
    }

    pub fn kind(&self, vid: usize) -> Option<VertexKind> {
        self.verts.get(vid).and_then(|v| v.as_ref()).map(|v| v.kind)
    }

    pub fn rotation(&self, vid: usize) -> &[Half] {
        &self.verts[vid].as_ref().expect("dead vertex").rot
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.verts.len()).filter(|&v| self.verts[v].is_some())
    }

    pub fn live_halves(&self) -> impl Iterator<Item = Half> + '_ {
        (0..self.attach.len()).filter(|&h| !matches!(self.attach[h], Attach::Dead | Attach::Loose))
    }

    pub fn vertex_count(&self) -> usize {
        self.live_vertices().count()
    }

    /// True for the fully reduced closed diagram: nothing left at all.
    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
            && self.verts.iter().all(|v| v.is_none())
            && self
                .attach
                .iter()
                .all(|&a| matches!(a, Attach::Dead))
    }

    pub fn find_vertex(&self, pred: impl Fn(VertexKind) -> bool) -> Option<usize> {
        self.live_vertices()
            .find(|&v| pred(self.verts[v].as_ref().unwrap().kind))
    }

    // ------------------------------------------------------------------
    // Whole-diagram operations
    // ------------------------------------------------------------------

    /// The reflection across the boundary line: rotations reverse, every edge
    /// flips direction, sinks and sources swap, crossings change sign, and the
    /// boundary keeps its order with each stub's parity flipped.
    pub fn mirrored(&self) -> WebDiagram {
        let mut out = WebDiagram {
            verts: Vec::with_capacity(self.verts.len()),
            attach: vec![Attach::Dead; self.attach.len()],
            boundary: Vec::new(),
        };
        for v in &self.verts {
            out.verts.push(v.as_ref().map(|vert| {
                let kind = match vert.kind {
                    VertexKind::Sink => VertexKind::Source,
                    VertexKind::Source => VertexKind::Sink,
                    VertexKind::Crossing { over_first } => {
                        VertexKind::Crossing { over_first: !over_first }
                    }
                    k => k,
                };
                let rot: Vec<Half> = vert.rot.iter().rev().map(|&h| twin(h)).collect();
                Vertex { kind, rot }
            }));
        }
        let placements: Vec<(Half, usize)> = out
            .verts
            .iter()
            .enumerate()
            .filter_map(|(vid, v)| v.as_ref().map(|vert| (vid, vert)))
            .flat_map(|(vid, vert)| vert.rot.iter().map(move |&h| (h, vid)))
            .collect();
        for (h, vid) in placements {
            out.attach[h] = Attach::Vert(vid);
        }
        out.boundary = self.boundary.iter().map(|&h| twin(h)).collect();
        for &h in &out.boundary {
            out.attach[h] = Attach::Bnd;
        }
        out
    }

    /// Disjointly copies another diagram into this one, returning the offset
    /// added to the other diagram's half-edge ids. The copied boundary stubs
    /// come in loose, ready to be fused.
    pub fn absorb_loose(&mut self, other: &WebDiagram) -> usize {
        let off = self.attach.len();
        let voff = self.verts.len();
        for a in &other.attach {
            self.attach.push(match a {
                Attach::Vert(v) => Attach::Vert(v + voff),
                Attach::Bnd => Attach::Loose,
                Attach::Loose => Attach::Loose,
                Attach::Dead => Attach::Dead,
            });
        }
        for v in &other.verts {
            self.verts.push(v.as_ref().map(|vert| Vertex {
                kind: vert.kind,
                rot: vert.rot.iter().map(|&h| h + off).collect(),
            }));
        }
        off
    }

    /// Detaches all boundary stubs, leaving them loose; returns the former
    /// boundary in order.
    pub fn release_boundary(&mut self) -> Vec<Half> {
        let old = std::mem::take(&mut self.boundary);
        for &h in &old {
            self.attach[h] = Attach::Loose;
        }
        old
    }

    // ------------------------------------------------------------------
    // Rewriting primitives
    // ------------------------------------------------------------------

    /// Removes a vertex, leaving its half-edges loose for rewiring.
    pub fn dissolve_vertex(&mut self, vid: usize) -> (VertexKind, Vec<Half>) {
        let v = self.verts[vid].take().expect("dissolving dead vertex");
        for &h in &v.rot {
            self.attach[h] = Attach::Loose;
        }
        (v.kind, v.rot)
    }

    /// Deletes an edge given either of its halves. Both halves must be loose.
    pub fn kill_edge(&mut self, h: Half) {
        assert_eq!(self.attach[h], Attach::Loose);
        assert_eq!(self.attach[twin(h)], Attach::Loose);
        self.attach[h] = Attach::Dead;
        self.attach[twin(h)] = Attach::Dead;
    }

    /// Splices the strands ending in loose halves `x` and `y` into one edge.
    /// Exactly one of the two must be a head.
    pub fn fuse(&mut self, x: Half, y: Half) -> Fused {
        assert_eq!(self.attach[x], Attach::Loose, "fuse: {x} not loose");
        assert_eq!(self.attach[y], Attach::Loose, "fuse: {y} not loose");
        assert_ne!(is_head(x), is_head(y), "fuse: direction clash at {x},{y}");
        if twin(x) == y {
            self.attach[x] = Attach::Dead;
            self.attach[y] = Attach::Dead;
            return Fused::Circle;
        }
        let ty = twin(y);
        // x takes over ty's slot; y's edge disappears.
        let out = match self.attach[ty] {
            Attach::Vert(v) => {
                let rot = &mut self.verts[v].as_mut().unwrap().rot;
                let i = rot.iter().position(|&h| h == ty).expect("rotation slot");
                rot[i] = x;
                self.attach[x] = Attach::Vert(v);
                Fused::Spliced
            }
            Attach::Bnd => {
                let i = self.boundary.iter().position(|&h| h == ty).expect("boundary slot");
                self.boundary[i] = x;
                self.attach[x] = Attach::Bnd;
                Fused::Spliced
            }
            Attach::Loose => {
                // ty awaits a later splice in the same rewrite; x stays loose
                // and stands in for it from now on.
                Fused::Renamed { old: ty, new: x }
            }
            Attach::Dead => panic!("fuse into a dead half-edge"),
        };
        self.attach[y] = Attach::Dead;
        self.attach[ty] = Attach::Dead;
        out
    }

    /// Splices a whole batch of pending pairs, chasing renames. Returns the
    /// number of free circles formed.
    pub fn fuse_all(&mut self, mut pairs: Vec<(Half, Half)>) -> usize {
        let mut circles = 0;
        while let Some((a, b)) = pairs.pop() {
            match self.fuse(a, b) {
                Fused::Circle => circles += 1,
                Fused::Spliced => {}
                Fused::Renamed { old, new } => {
                    for p in pairs.iter_mut() {
                        if p.0 == old {
                            p.0 = new;
                        }
                        if p.1 == old {
                            p.1 = new;
                        }
                    }
                }
            }
        }
        circles
    }

    // ------------------------------------------------------------------
    // Faces
    // ------------------------------------------------------------------

    /// Successor of `h` in its face orbit: the rotation successor of `twin(h)`
    /// at the attachment of `twin(h)` (boundary acts as one vertex).
    fn face_next(&self, h: Half) -> Half {
        let t = twin(h);
        match self.attach[t] {
            Attach::Vert(v) => {
                let rot = &self.verts[v].as_ref().unwrap().rot;
                let i = rot.iter().position(|&x| x == t).expect("rotation slot");
                rot[(i + 1) % rot.len()]
            }
            Attach::Bnd => {
                let i = self.boundary.iter().position(|&x| x == t).expect("boundary slot");
                self.boundary[(i + 1) % self.boundary.len()]
            }
            _ => panic!("face walk through detached half-edge {t}"),
        }
    }

    /// All faces as half-edge orbits. Each live half-edge lies in exactly one.
    pub fn faces(&self) -> Vec<Vec<Half>> {
        let mut seen = vec![false; self.attach.len()];
        let mut out = Vec::new();
        for h in self.live_halves() {
            if seen[h] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = h;
            loop {
                orbit.push(cur);
                seen[cur] = true;
                cur = self.face_next(cur);
                if cur == h {
                    break;
                }
            }
            out.push(orbit);
        }
        out
    }

    /// Rebuilds the arena without dead edges and dissolved vertices. Rewrite
    /// chains allocate and kill freely, and children inherit the parent's
    /// arena, so periodic compaction keeps scans and clones proportional to
    /// the live diagram.
    pub fn compact(&mut self) {
        let ne = self.attach.len() / 2;
        let mut edge_map: Vec<usize> = vec![usize::MAX; ne];
        let mut live_edges = 0usize;
        for e in 0..ne {
            let dead = matches!(self.attach[2 * e], Attach::Dead);
            debug_assert_eq!(dead, matches!(self.attach[2 * e + 1], Attach::Dead));
            if !dead {
                edge_map[e] = live_edges;
                live_edges += 1;
            }
        }
        let live_verts = self.verts.iter().filter(|v| v.is_some()).count();
        if live_edges == ne && live_verts == self.verts.len() {
            return;
        }
        let mut vert_map: Vec<usize> = vec![usize::MAX; self.verts.len()];
        let mut next_v = 0usize;
        for (v, slot) in self.verts.iter().enumerate() {
            if slot.is_some() {
                vert_map[v] = next_v;
                next_v += 1;
            }
        }
        let remap = |h: Half| -> Half { 2 * edge_map[h / 2] + (h & 1) };
        let mut attach = vec![Attach::Dead; 2 * live_edges];
        for h in 0..self.attach.len() {
            match self.attach[h] {
                Attach::Dead => {}
                Attach::Vert(v) => attach[remap(h)] = Attach::Vert(vert_map[v]),
                other => attach[remap(h)] = other,
            }
        }
        let verts = self
            .verts
            .drain(..)
            .flatten()
            .map(|mut vx| {
                for r in vx.rot.iter_mut() {
                    *r = remap(*r);
                }
                Some(vx)
            })
            .collect();
        for b in self.boundary.iter_mut() {
            *b = remap(*b);
        }
        self.attach = attach;
        self.verts = verts;
    }

    /// The corners of a face orbit: attachment of each member's twin.
    pub fn face_corners(&self, orbit: &[Half]) -> Vec<Attach> {
        orbit.iter().map(|&h| self.attach[twin(h)]).collect()
    }

    // ------------------------------------------------------------------
    // Validation
    // ------------------------------------------------------------------

    /// Structural and planarity checks; used liberally in debug paths.
    pub fn validate(&self) -> Result<(), OracleError> {
        let fail = |m: String| Err(OracleError::Invalid(m));
        // Attachment table agrees with rotations/boundary, each exactly once.
        let mut placed: HashMap<Half, usize> = HashMap::new();
        for v in self.live_vertices() {
            let vert = self.verts[v].as_ref().unwrap();
            if vert.rot.len() != vert.kind.arity() {
                return fail(format!("vertex {v} arity"));
            }
            for &h in &vert.rot {
                *placed.entry(h).or_insert(0) += 1;
                if self.attach[h] != Attach::Vert(v) {
                    return fail(format!("half {h} attach table disagrees with vertex {v}"));
                }
            }
        }
        for &h in &self.boundary {
            *placed.entry(h).or_insert(0) += 1;
            if self.attach[h] != Attach::Bnd {
                return fail(format!("half {h} attach table disagrees with boundary"));
            }
        }
        for h in 0..self.attach.len() {
            let expected = match self.attach[h] {
                Attach::Dead => 0,
                Attach::Loose => return fail(format!("loose half {h} in finished diagram")),
                _ => 1,
            };
            if placed.get(&h).copied().unwrap_or(0) != expected {
                return fail(format!("half {h} placed wrong number of times"));
            }
            // Edges are all-or-nothing.
            let alive = |a: Attach| !matches!(a, Attach::Dead);
            if alive(self.attach[h]) != alive(self.attach[twin(h)]) {
                return fail(format!("edge of half {h} half-dead"));
            }
        }
        // Direction constraints per vertex kind.
        for v in self.live_vertices() {
            let vert = self.verts[v].as_ref().unwrap();
            let heads: Vec<bool> = vert.rot.iter().map(|&h| is_head(h)).collect();
            match vert.kind {
                VertexKind::Sink => {
                    if !heads.iter().all(|&b| b) {
                        return fail(format!("sink {v} has an outgoing edge"));
                    }
                }
                VertexKind::Source => {
                    if heads.iter().any(|&b| b) {
                        return fail(format!("source {v} has an incoming edge"));
                    }
                }
                VertexKind::Crossing { .. } => {
                    for s in 0..2 {
                        if heads[s] == heads[s + 2] {
                            return fail(format!("crossing {v} strand {s} not through-flowing"));
                        }
                    }
                }
                VertexKind::Clasp { n } => {
                    for i in 0..n {
                        if heads[i] != heads[0] || heads[2 * n - 1 - i] == heads[0] {
                            return fail(format!("clasp {v} flow not uniform"));
                        }
                    }
                }
                VertexKind::DoubleClasp { a, b } => {
                    let m = 2 * (a + b);
                    for i in 0..a {
                        if heads[i] != heads[0] || heads[m - 1 - i] == heads[0] {
                            return fail(format!("double clasp {v} a-flow not uniform"));
                        }
                    }
                    for j in 0..b {
                        if heads[a + j] == heads[0] || heads[a + 2 * b - 1 - j] != heads[0] {
                            return fail(format!("double clasp {v} b-flow not antiparallel"));
                        }
                    }
                }
            }
        }
        // Flow across the boundary is conserved mod 3.
        let ins = self.boundary.iter().filter(|&&h| is_head(h)).count() as i64;
        let outs = self.boundary.len() as i64 - ins;
        if (ins - outs).rem_euclid(3) != 0 {
            return fail(format!("boundary flow {ins} in / {outs} out not divisible by 3"));
        }
        // Planarity: every connected component has Euler count 2, with the
        // boundary counting as one vertex of its component.
        self.check_genus()
    }

    fn check_genus(&self) -> Result<(), OracleError> {
        // Union-find over nodes: vertices plus (if present) one boundary node.
        let nv = self.verts.len();
        let node = |a: Attach| -> usize {
            match a {
                Attach::Vert(v) => v,
                Attach::Bnd => nv,
                _ => panic!("dangling edge in genus check"),
            }
        };
        let mut parent: Vec<usize> = (0..=nv).collect();
        fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut edge_count: HashMap<usize, i64> = HashMap::new();
        let mut halves_by_comp: HashMap<usize, Vec<Half>> = HashMap::new();
        for h in self.live_halves() {
            if h & 1 == 0 {
                let (a, b) = (node(self.attach[h]), node(self.attach[twin(h)]));
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        for h in self.live_halves() {
            let r = find(&mut parent, node(self.attach[h]));
            halves_by_comp.entry(r).or_default().push(h);
            if h & 1 == 0 {
                *edge_count.entry(r).or_insert(0) += 1;
            }
        }
        // Count faces per component.
        let mut face_count: HashMap<usize, i64> = HashMap::new();
        for orbit in self.faces() {
            let r = find(&mut parent, node(self.attach[orbit[0]]));
            *face_count.entry(r).or_insert(0) += 1;
        }
        // Count nodes per component (only nodes that carry at least one edge,
        // plus isolated live vertices are impossible: every kind has arity>0).
        let mut node_count: HashMap<usize, i64> = HashMap::new();
        for v in self.live_vertices() {
            let r = find(&mut parent, v);
            *node_count.entry(r).or_insert(0) += 1;
        }
        if !self.boundary.is_empty() {
            let r = find(&mut parent, nv);
            *node_count.entry(r).or_insert(0) += 1;
        }
        for (&comp, &vcnt) in &node_count {
            let e = edge_count.get(&comp).copied().unwrap_or(0);
            let f = face_count.get(&comp).copied().unwrap_or(0);
            // A single component on the sphere: V - E + F = 2.
            if vcnt - e + f != 2 {
                return Err(OracleError::Invalid(format!(
                    "component not planar: V={vcnt} E={e} F={f}"
                )));
            }
        }
        Ok(())
    }

    // ------------------------------------------------------------------
    // Canonical encoding
    // ------------------------------------------------------------------

    /// Canonical key for like-term collection: equal keys exactly when the
    /// diagrams are isomorphic as boundary-anchored embedded directed webs.
    pub fn canonical_key(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("b{};", self.boundary.len()));
        let mut visited: HashSet<Half> = HashSet::new();
        let mut labels: HashMap<usize, (usize, usize)> = HashMap::new(); // vid -> (label, arrival slot)
        let mut next_label = 0usize;
        let mut queue: VecDeque<Half> = self.boundary.iter().copied().collect();
        self.encode_walk(&mut out, &mut visited, &mut labels, &mut next_label, &mut queue);
        // Closed components unreachable from the boundary: minimal encoding
        // over starting darts, then sorted for determinism.
        let mut comps: Vec<String> = Vec::new();
        let mut remaining: Vec<Half> = self
            .live_halves()
            .filter(|h| !visited.contains(h))
            .collect();
        remaining.sort_unstable();
        let mut comp_seen: HashSet<Half> = HashSet::new();
        for &start in &remaining {
            if comp_seen.contains(&start) {
                continue;
            }
            // Collect this component's darts by undirected reachability.
            let comp = self.component_darts(start);
            for &h in &comp {
                comp_seen.insert(h);
            }
            let mut best: Option<String> = None;
            for &s in &comp {
                let mut enc = String::new();
                let mut vis = HashSet::new();
                let mut lab = HashMap::new();
                let mut nl = 0usize;
                let mut q = VecDeque::from([s]);
                self.encode_walk(&mut enc, &mut vis, &mut lab, &mut nl, &mut q);
                if best.as_ref().map_or(true, |b| enc < *b) {
                    best = Some(enc);
                }
            }
            comps.push(best.unwrap());
        }
        comps.sort();
        for c in comps {
            out.push_str("|");
            out.push_str(&c);
        }
        out
    }

    fn component_darts(&self, start: Half) -> Vec<Half> {
        let mut seen = HashSet::new();
        let mut stack = vec![start];
        while let Some(h) = stack.pop() {
            if !seen.insert(h) {
                continue;
            }
            stack.push(twin(h));
            if let Attach::Vert(v) = self.attach[h] {
                for &x in &self.verts[v].as_ref().unwrap().rot {
                    stack.push(x);
                }
            }
        }
        let mut v: Vec<Half> = seen.into_iter().collect();
        v.sort_unstable();
        v
    }

    fn encode_walk(
        &self,
        out: &mut String,
        visited: &mut HashSet<Half>,
        labels: &mut HashMap<usize, (usize, usize)>,
        next_label: &mut usize,
        queue: &mut VecDeque<Half>,
    ) {
        while let Some(h) = queue.pop_front() {
            if !visited.insert(h) {
                continue;
            }
            out.push(if is_head(h) { 'i' } else { 'o' });
            let t = twin(h);
            match self.attach[t] {
                Attach::Bnd => {
                    let i = self.boundary.iter().position(|&x| x == t).unwrap();
                    out.push_str(&format!("B{i};"));
                }
                Attach::Vert(v) => {
                    let rot = &self.verts[v].as_ref().unwrap().rot;
                    let slot = rot.iter().position(|&x| x == t).unwrap();
                    if let Some(&(label, arr)) = labels.get(&v) {
                        let rel = (slot + rot.len() - arr) % rot.len();
                        out.push_str(&format!("V{label}r{rel};"));
                    } else {
                        let label = *next_label;
                        *next_label += 1;
                        labels.insert(v, (label, slot));
                        let kind = match self.verts[v].as_ref().unwrap().kind {
                            VertexKind::Sink => "k".to_string(),
                            VertexKind::Source => "q".to_string(),
                            VertexKind::Crossing { over_first } => {
                                // Arrival-on-over-strand is invariant under
                                // rotating the presentation; over_first alone
                                // is not.
                                let on_over = (slot % 2 == 0) == over_first;
                                format!("x{}", if on_over { 1 } else { 0 })
                            }
                            VertexKind::Clasp { n } => format!("c{n}"),
                            VertexKind::DoubleClasp { a, b } => format!("d{a}.{b}"),
                        };
                        out.push_str(&format!("N{label}{kind};"));
                        for i in 1..=rot.len() {
                            queue.push_back(rot[(slot + i) % rot.len()]);
                        }
                    }
                }
                _ => panic!("encoding a diagram with detached half-edges"),
            }
        }
    }
}

// ----------------------------------------------------------------------
// Small construction helpers shared by builders and tests
// ----------------------------------------------------------------------

/// Builds a diagram consisting of `arcs[i] = (from, to)` boundary arcs on
/// `stubs` boundary positions: each arc is one edge directed from position
/// `from` to position `to`. Positions must partition `0..stubs`.
pub fn arcs_diagram(stubs: usize, arcs: &[(usize, usize)]) -> WebDiagram {
    let mut d = WebDiagram::new();
    let mut slots: Vec<Option<Half>> = vec![None; stubs];
    for &(from, to) in arcs {
        let (t, h) = d.alloc_edge();
        assert!(slots[from].is_none() && slots[to].is_none(), "arc positions clash");
        slots[from] = Some(t);
        slots[to] = Some(h);
    }
    let order: Vec<Half> = slots
        .into_iter()
        .map(|s| s.expect("arcs must cover all boundary positions"))
        .collect();
    d.push_boundary(&order);
    d
}
