//! The rewriting engine: clasp-box expansion, crossing resolution, and
//! elliptic face reduction.
//!
//! Rewrites fire in a fixed order on each worklist entry: clasp boxes expand
//! by their defining recursions, then crossings resolve by the skein relation,
//! then faces reduce. Free circles are absorbed as factors of [3] the moment a
//! splice closes one, bigons contribute [2], and internal square faces split
//! into their two planar reconnections with coefficient 1 each. A diagram
//! joins the result once no rule applies; closed diagrams always reduce to the
//! empty diagram because a closed web has an internal face of fewer than six
//! sides whenever it has any vertices at all.

use a2rep_core::scalar::{qbinom, qint};
use a2rep_core::RatFunc;

use crate::diagram::{is_head, twin, Attach, Half, VertexKind, WebDiagram};
use crate::skein::SkeinElement;
use crate::{Budget, OracleError};

/// Fully reduces a diagram to a combination of non-elliptic webs.
pub fn evaluate(diagram: WebDiagram, budget: &mut Budget) -> Result<SkeinElement, OracleError> {
    evaluate_scaled(RatFunc::one(), diagram, budget)
}

/// Fully reduces `coeff * diagram`.
pub fn evaluate_scaled(
    coeff: RatFunc,
    diagram: WebDiagram,
    budget: &mut Budget,
) -> Result<SkeinElement, OracleError> {
    let mut out = SkeinElement::zero();
    let mut work: Vec<(RatFunc, WebDiagram)> = vec![(coeff, diagram)];
    while let Some((c, mut d)) = work.pop() {
        budget.step()?;
        if c.is_zero() {
            continue;
        }
        d.compact();
        if let Some(vid) = d
            .find_vertex(|k| matches!(k, VertexKind::Clasp { .. } | VertexKind::DoubleClasp { .. }))
        {
            expand_box(&mut work, c, d, vid);
            continue;
        }
        if let Some(vid) = d.find_vertex(|k| matches!(k, VertexKind::Crossing { .. })) {
            resolve_crossing(&mut work, c, d, vid);
            continue;
        }
        // Flat web: drain non-branching face rewrites in place, stacking only
        // at branch points.
        let mut c = c;
        loop {
            match reduce_one_face(&mut d, budget)? {
                FaceStep::Rewrote(factor) => {
                    c = &c * &factor;
                }
                FaceStep::Branched(branches) => {
                    for (factor, nd) in branches {
                        work.push((&c * &factor, nd));
                    }
                    break;
                }
                FaceStep::Done => {
                    debug_assert!(d.validate().is_ok(), "irreducible term fails validation");
                    out.add_term(c, d);
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Reduces every term of an element.
pub fn evaluate_element(
    element: SkeinElement,
    budget: &mut Budget,
) -> Result<SkeinElement, OracleError> {
    let mut out = SkeinElement::zero();
    for (c, d) in element.iter() {
        out.add(evaluate_scaled(c.clone(), d.clone(), budget)?);
    }
    Ok(out)
}

/// Multiplies in the loop value [3] for each closed circle.
pub(crate) fn with_circles(factor: &RatFunc, circles: usize) -> RatFunc {
    let mut f = factor.clone();
    let loop_value = RatFunc::from_poly(qint(3));
    for _ in 0..circles {
        f = &f * &loop_value;
    }
    f
}

// ----------------------------------------------------------------------
// Clasp boxes
// ----------------------------------------------------------------------

fn expand_box(work: &mut Vec<(RatFunc, WebDiagram)>, c: RatFunc, d: WebDiagram, vid: usize) {
    match d.kind(vid).expect("live vertex") {
        VertexKind::Clasp { n } => expand_clasp(work, c, d, vid, n),
        VertexKind::DoubleClasp { a, b } => expand_double_clasp(work, c, d, vid, a, b),
        _ => unreachable!(),
    }
}

/// Side views of a box rotation: `side1[i]` pairs with `side2[i]`.
fn clasp_sides(rot: &[Half], n: usize) -> (Vec<Half>, Vec<Half>) {
    let side1 = rot[..n].to_vec();
    let side2: Vec<Half> = (0..n).map(|i| rot[2 * n - 1 - i]).collect();
    (side1, side2)
}

/// Allocates an edge running along (`along = true`) or against the cable
/// flow, where `forward` means strands run side1 -> side2; returns the halves
/// ordered (upstream, downstream) with respect to the connection itself.
fn flow_edge(d: &mut WebDiagram, forward: bool, along: bool) -> (Half, Half) {
    let (t, h) = d.alloc_edge();
    if along == forward {
        (t, h)
    } else {
        (h, t)
    }
}

/// Expands one clasp box by the recursion
/// `P(n) = P(n-1) (x) 1  -  ([n-1]/[n]) (P(n-1) (x) 1) H (P(n-1) (x) 1)`,
/// with `H` the hook turning back the last two strands and `P(1)` a plain
/// strand.
fn expand_clasp(
    work: &mut Vec<(RatFunc, WebDiagram)>,
    c: RatFunc,
    mut d: WebDiagram,
    vid: usize,
    n: usize,
) {
    let (_, rot) = d.dissolve_vertex(vid);
    let (s1, s2) = clasp_sides(&rot, n);
    if n == 1 {
        let circles = d.fuse_all(vec![(s1[0], s2[0])]);
        work.push((with_circles(&c, circles), d));
        return;
    }
    let forward = is_head(s1[0]);

    // Identity term: clasp on the first n-1 strands, last strand straight.
    {
        let mut d1 = d.clone();
        let mut rot1: Vec<Half> = s1[..n - 1].to_vec();
        rot1.extend(s2[..n - 1].iter().rev());
        d1.add_vertex(VertexKind::Clasp { n: n - 1 }, rot1);
        let circles = d1.fuse_all(vec![(s1[n - 1], s2[n - 1])]);
        work.push((with_circles(&c, circles), d1));
    }

    // Hook term.
    {
        let mut d2 = d;
        // Pass-through edges between the two sub-clasps for strands 0..n-3.
        let pass: Vec<(Half, Half)> = (0..n - 2).map(|_| flow_edge(&mut d2, forward, true)).collect();
        // Strand n-2 from the first sub-clasp into the hook, the hook's
        // internal return edge (which runs from the emitting vertex back to
        // the absorbing one, against the cable flow), and strand n-2 onward
        // to the second sub-clasp.
        let (a_up, a_dn) = flow_edge(&mut d2, forward, true);
        let (i_arr, i_ret) = flow_edge(&mut d2, forward, false);
        let (b_up, b_dn) = flow_edge(&mut d2, forward, true);

        // First sub-clasp: outer side takes the parent's side-1 halves.
        let mut rot_c1: Vec<Half> = s1[..n - 1].to_vec();
        let mut inner1: Vec<Half> = pass.iter().map(|&(u, _)| u).collect();
        inner1.push(a_up);
        rot_c1.extend(inner1.iter().rev());
        d2.add_vertex(VertexKind::Clasp { n: n - 1 }, rot_c1);

        // Second sub-clasp: outer side takes the parent's side-2 halves.
        let mut rot_c2: Vec<Half> = pass.iter().map(|&(_, v)| v).collect();
        rot_c2.push(b_dn);
        rot_c2.extend(s2[..n - 1].iter().rev());
        d2.add_vertex(VertexKind::Clasp { n: n - 1 }, rot_c2);

        // The absorbing vertex sits upstream: it takes the internal edge, the
        // hook feed, and the parent's last strand, counterclockwise; the
        // emitting vertex returns the last strand and the internal edge.
        let (absorb, emit) = if forward {
            (VertexKind::Sink, VertexKind::Source)
        } else {
            (VertexKind::Source, VertexKind::Sink)
        };
        d2.add_vertex(absorb, vec![i_arr, a_dn, s1[n - 1]]);
        d2.add_vertex(emit, vec![s2[n - 1], b_up, i_ret]);

        let ratio = RatFunc::new(qint(n as i64 - 1), qint(n as i64));
        work.push((-&(&c * &ratio), d2));
    }
}

/// Expands one double-clasp box by its defining alternating sum: for each
/// `k`, single clasps on all four port groups, `k` nested turn-backs on each
/// side between the adjacent cable flanks, and the remaining strands passing
/// straight through, weighted by `(-1)^k [a;k][b;k] / [a+b+1;k]`.
fn expand_double_clasp(
    work: &mut Vec<(RatFunc, WebDiagram)>,
    c: RatFunc,
    mut d: WebDiagram,
    vid: usize,
    a: usize,
    b: usize,
) {
    let (_, rot) = d.dissolve_vertex(vid);
    let m = 2 * (a + b);
    let a1: Vec<Half> = rot[..a].to_vec();
    let b1: Vec<Half> = rot[a..a + b].to_vec();
    let a2: Vec<Half> = (0..a).map(|i| rot[m - 1 - i]).collect();
    let b2: Vec<Half> = (0..b).map(|j| rot[a + 2 * b - 1 - j]).collect();
    // Forward: the a-cable runs side1 -> side2, the b-cable side2 -> side1.
    let forward = is_head(a1[0]);

    for k in 0..=a.min(b) {
        let mut dk = d.clone();
        // Inner halves of the four clasps, indexed by strand.
        let mut ia1: Vec<Half> = vec![usize::MAX; a];
        let mut ia2: Vec<Half> = vec![usize::MAX; a];
        let mut ib1: Vec<Half> = vec![usize::MAX; b];
        let mut ib2: Vec<Half> = vec![usize::MAX; b];
        // Straight a-strands.
        for (i, slot) in ia1.iter_mut().take(a - k).enumerate() {
            let (u, v) = flow_edge(&mut dk, forward, true);
            *slot = u;
            ia2[i] = v;
        }
        // Straight b-strands (the b-cable runs side2 -> side1).
        for j in k..b {
            let (u, v) = flow_edge(&mut dk, forward, true);
            ib2[j] = u;
            ib1[j] = v;
        }
        // Turn-backs: the flanks where the two cables meet are a-strand a-1
        // and b-strand 0, with deeper pairs nesting outward.
        for s in 0..k {
            let (u, v) = flow_edge(&mut dk, forward, true);
            ia1[a - 1 - s] = u;
            ib1[s] = v;
            let (u, v) = flow_edge(&mut dk, forward, true);
            ib2[s] = u;
            ia2[a - 1 - s] = v;
        }

        let add_clasp = |dk: &mut WebDiagram, outer_first: bool, outer: &[Half], inner: &[Half]| {
            let n = outer.len();
            let mut r: Vec<Half> = Vec::with_capacity(2 * n);
            if outer_first {
                r.extend_from_slice(outer);
                r.extend(inner.iter().rev());
            } else {
                r.extend_from_slice(inner);
                r.extend(outer.iter().rev());
            }
            dk.add_vertex(VertexKind::Clasp { n }, r);
        };
        add_clasp(&mut dk, true, &a1, &ia1);
        add_clasp(&mut dk, false, &a2, &ia2);
        add_clasp(&mut dk, true, &b1, &ib1);
        add_clasp(&mut dk, false, &b2, &ib2);

        let num = &qbinom(a as i64, k as i64) * &qbinom(b as i64, k as i64);
        let coeff = RatFunc::new(num, qbinom(a as i64 + b as i64 + 1, k as i64));
        let signed = if k % 2 == 1 { -&(&c * &coeff) } else { &c * &coeff };
        work.push((signed, dk));
    }
}

// ----------------------------------------------------------------------
// Crossings
// ----------------------------------------------------------------------

/// Resolves one crossing. With both incoming strands entering at cyclically
/// adjacent rotation slots `p, p+1`, the crossing is positive exactly when the
/// over strand enters at `p`; a positive crossing resolves to
/// `v^2 (smoothing) - v^{-1} (vertex pair)` and a negative one to
/// `v^{-2} (smoothing) - v (vertex pair)`.
fn resolve_crossing(work: &mut Vec<(RatFunc, WebDiagram)>, c: RatFunc, mut d: WebDiagram, vid: usize) {
    let (kind, rot) = d.dissolve_vertex(vid);
    let over_first = match kind {
        VertexKind::Crossing { over_first } => over_first,
        _ => unreachable!(),
    };
    let p = (0..4)
        .find(|&p| is_head(rot[p]) && is_head(rot[(p + 1) % 4]))
        .expect("crossing has adjacent incoming slots");
    let positive = (p % 2 == 0) == over_first;
    let (c_smooth, c_pair) = if positive {
        (RatFunc::v_pow(2), -&RatFunc::v_pow(-1))
    } else {
        (RatFunc::v_pow(-2), -&RatFunc::v_pow(1))
    };

    // Smoothing: in at p joins out at p+3, in at p+1 joins out at p+2.
    {
        let mut ds = d.clone();
        let circles = ds.fuse_all(vec![
            (rot[p], rot[(p + 3) % 4]),
            (rot[(p + 1) % 4], rot[(p + 2) % 4]),
        ]);
        work.push((with_circles(&(&c * &c_smooth), circles), ds));
    }

    // Vertex pair: a sink absorbs both incoming strands, a source emits both
    // outgoing ones, joined by an internal edge from source to sink.
    {
        let (i_tail, i_head) = d.alloc_edge();
        d.add_vertex(VertexKind::Sink, vec![i_head, rot[p], rot[(p + 1) % 4]]);
        d.add_vertex(
            VertexKind::Source,
            vec![rot[(p + 2) % 4], rot[(p + 3) % 4], i_tail],
        );
        work.push((&c * &c_pair, d));
    }
}

// ----------------------------------------------------------------------
// Elliptic faces
// ----------------------------------------------------------------------

enum FaceStep {
    Rewrote(RatFunc),
    Branched(Vec<(RatFunc, WebDiagram)>),
    Done,
}

fn corner_vertex(d: &WebDiagram, h: Half) -> Option<usize> {
    match d.attach_of(twin(h)) {
        Attach::Vert(v) => Some(v),
        _ => None,
    }
}

fn is_internal(d: &WebDiagram, orbit: &[Half]) -> bool {
    orbit.iter().all(|&h| corner_vertex(d, h).is_some())
}

fn reduce_one_face(d: &mut WebDiagram, budget: &mut Budget) -> Result<FaceStep, OracleError> {
    let faces = d.faces();
    for orbit in &faces {
        if orbit.len() == 1 && is_internal(d, orbit) {
            return Err(OracleError::Invalid("monogon face in a directed web".into()));
        }
    }
    if let Some(orbit) = faces.iter().find(|o| o.len() == 2 && is_internal(d, o)) {
        budget.step()?;
        let factor = rewrite_bigon(d, orbit)?;
        return Ok(FaceStep::Rewrote(factor));
    }
    if let Some(orbit) = faces.iter().find(|o| o.len() == 4 && is_internal(d, o)) {
        budget.step()?;
        let parts = rewrite_square(d, orbit)?;
        return Ok(FaceStep::Branched(parts));
    }
    Ok(FaceStep::Done)
}

/// Removes a bigon face: both corner vertices and both parallel edges vanish
/// and the external strands splice, contributing a factor of [2].
fn rewrite_bigon(d: &mut WebDiagram, orbit: &[Half]) -> Result<RatFunc, OracleError> {
    let (h1, h2) = (orbit[0], orbit[1]);
    let va = corner_vertex(d, h1).expect("internal face");
    let vb = corner_vertex(d, h2).expect("internal face");
    if va == vb {
        return Err(OracleError::Invalid("degenerate bigon corners".into()));
    }
    let kinds = (d.kind(va).unwrap(), d.kind(vb).unwrap());
    if !matches!(
        kinds,
        (VertexKind::Sink, VertexKind::Source) | (VertexKind::Source, VertexKind::Sink)
    ) {
        return Err(OracleError::Invalid("bigon corners are not sink/source".into()));
    }
    let face_halves = [h1, twin(h1), h2, twin(h2)];
    let (_, rot_a) = d.dissolve_vertex(va);
    let (_, rot_b) = d.dissolve_vertex(vb);
    d.kill_edge(h1);
    d.kill_edge(h2);
    let xa = *rot_a
        .iter()
        .find(|h| !face_halves.contains(h))
        .expect("bigon corner external");
    let xb = *rot_b
        .iter()
        .find(|h| !face_halves.contains(h))
        .expect("bigon corner external");
    let circles = d.fuse_all(vec![(xa, xb)]);
    Ok(with_circles(&RatFunc::from_poly(qint(2)), circles))
}

/// Splits an internal square face into its two planar reconnections. Both
/// carry coefficient 1 (times [3] for any circle the reconnection closes).
fn rewrite_square(
    d: &WebDiagram,
    orbit: &[Half],
) -> Result<Vec<(RatFunc, WebDiagram)>, OracleError> {
    let corners: Vec<usize> = orbit
        .iter()
        .map(|&h| corner_vertex(d, h).expect("internal face"))
        .collect();
    let mut uniq = corners.clone();
    uniq.sort_unstable();
    uniq.dedup();
    if uniq.len() != 4 {
        return Err(OracleError::Invalid("square face with repeated corner".into()));
    }
    let mut edges: Vec<usize> = orbit.iter().map(|&h| h / 2).collect();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != 4 {
        return Err(OracleError::Invalid("square face with repeated edge".into()));
    }
    let face_halves: Vec<Half> = orbit.iter().flat_map(|&h| [h, twin(h)]).collect();

    let smooth = |pairing: [(usize, usize); 2]| -> Result<(RatFunc, WebDiagram), OracleError> {
        let mut nd = d.clone();
        let mut externals: Vec<Half> = Vec::with_capacity(4);
        for &v in &corners {
            let (_, rot) = nd.dissolve_vertex(v);
            externals.push(
                *rot.iter()
                    .find(|h| !face_halves.contains(h))
                    .expect("square corner external"),
            );
        }
        for &h in orbit {
            nd.kill_edge(h);
        }
        let pairs: Vec<(Half, Half)> = pairing
            .iter()
            .map(|&(i, j)| (externals[i], externals[j]))
            .collect();
        let circles = nd.fuse_all(pairs);
        Ok((with_circles(&RatFunc::one(), circles), nd))
    };

    Ok(vec![smooth([(0, 1), (2, 3)])?, smooth([(1, 2), (3, 0)])?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::with_limit(100_000)
    }

    fn qq(p: a2rep_core::LaurentPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    /// Closed `n`-clasp loops evaluate to [n+1][n+2]/[2].
    #[test]
    fn closed_clasp_loops_give_quantum_dimensions() {
        let mut d1 = WebDiagram::new();
        let (t, h) = d1.alloc_edge();
        d1.add_vertex(VertexKind::Clasp { n: 1 }, vec![h, t]);
        d1.validate().unwrap();
        let got = evaluate(d1, &mut budget()).unwrap().scalar().unwrap();
        assert_eq!(got, qq(qint(3)));

        let mut d2 = WebDiagram::new();
        let (t0, h0) = d2.alloc_edge();
        let (t1, h1) = d2.alloc_edge();
        d2.add_vertex(VertexKind::Clasp { n: 2 }, vec![h0, h1, t1, t0]);
        d2.validate().unwrap();
        let got = evaluate(d2, &mut budget()).unwrap().scalar().unwrap();
        assert_eq!(got, RatFunc::new(&qint(3) * &qint(4), qint(2)));
    }

    /// The theta web: one bigon, then a circle.
    #[test]
    fn theta_web_value() {
        let mut d = WebDiagram::new();
        let (t0, h0) = d.alloc_edge();
        let (t1, h1) = d.alloc_edge();
        let (t2, h2) = d.alloc_edge();
        d.add_vertex(VertexKind::Source, vec![t0, t1, t2]);
        d.add_vertex(VertexKind::Sink, vec![h2, h1, h0]);
        d.validate().unwrap();
        let got = evaluate(d, &mut budget()).unwrap().scalar().unwrap();
        assert_eq!(got, qq(&qint(2) * &qint(3)));
    }

    /// Two stacked sink/source pairs closed up: the middle bigon pops first
    /// and the rest is a theta, for [2]^2 [3] in total.
    #[test]
    fn stacked_pair_closure_value() {
        let mut d = WebDiagram::new();
        let (a0, a1) = d.alloc_edge(); // u1 -> s1
        let (p0, p1) = d.alloc_edge(); // u1 -> s2
        let (q0, q1) = d.alloc_edge(); // u1 -> s2
        let (b0, b1) = d.alloc_edge(); // u2 -> s2
        let (r0, r1) = d.alloc_edge(); // u2 -> s1, wrapping left
        let (w0, w1) = d.alloc_edge(); // u2 -> s1, wrapping right
        d.add_vertex(VertexKind::Sink, vec![w1, a1, r1]); // s1
        d.add_vertex(VertexKind::Source, vec![q0, p0, a0]); // u1
        d.add_vertex(VertexKind::Sink, vec![b1, p1, q1]); // s2
        d.add_vertex(VertexKind::Source, vec![w0, r0, b0]); // u2
        d.validate().unwrap();
        let got = evaluate(d, &mut budget()).unwrap().scalar().unwrap();
        assert_eq!(got, qq(&(&qint(2) * &qint(2)) * &qint(3)));
    }

    /// The directed cube has only square faces; smoothing any one of them
    /// leaves a bigon cascade, giving 2 [2]^2 [3].
    #[test]
    fn cube_reduces_through_square_faces() {
        let mut d = WebDiagram::new();
        let (c12t, c12h) = d.alloc_edge(); // T1 -> T2
        let (c32t, c32h) = d.alloc_edge(); // T3 -> T2
        let (c34t, c34h) = d.alloc_edge(); // T3 -> T4
        let (c14t, c14h) = d.alloc_edge(); // T1 -> T4
        let (d21t, d21h) = d.alloc_edge(); // B2 -> B1
        let (d23t, d23h) = d.alloc_edge(); // B2 -> B3
        let (d43t, d43h) = d.alloc_edge(); // B4 -> B3
        let (d41t, d41h) = d.alloc_edge(); // B4 -> B1
        let (v1t, v1h) = d.alloc_edge(); // T1 -> B1
        let (v2t, v2h) = d.alloc_edge(); // B2 -> T2
        let (v3t, v3h) = d.alloc_edge(); // T3 -> B3
        let (v4t, v4h) = d.alloc_edge(); // B4 -> T4
        // Outer square T1..T4, inner square B1..B4, verticals between.
        d.add_vertex(VertexKind::Source, vec![c12t, c14t, v1t]); // T1
        d.add_vertex(VertexKind::Sink, vec![c12h, v2h, c32h]); // T2
        d.add_vertex(VertexKind::Source, vec![c32t, v3t, c34t]); // T3
        d.add_vertex(VertexKind::Sink, vec![c34h, v4h, c14h]); // T4
        d.add_vertex(VertexKind::Sink, vec![d21h, v1h, d41h]); // B1
        d.add_vertex(VertexKind::Source, vec![v2t, d21t, d23t]); // B2
        d.add_vertex(VertexKind::Sink, vec![d23h, d43h, v3h]); // B3
        d.add_vertex(VertexKind::Source, vec![d43t, d41t, v4t]); // B4
        d.validate().unwrap();
        let got = evaluate(d, &mut budget()).unwrap().scalar().unwrap();
        let four = qq(&(&qint(2) * &qint(2)) * &qint(3));
        assert_eq!(got, &four + &four);
    }

    /// Cable of width 2 through a clasp, on four boundary points. Boundary
    /// order is clockwise around the interior: bottom right-to-left, then top
    /// left-to-right.
    fn clasped_cable(boxes: usize) -> WebDiagram {
        let mut d = WebDiagram::new();
        let (s0t, mut lo0) = d.alloc_edge();
        let (s1t, mut lo1) = d.alloc_edge();
        for _ in 0..boxes {
            let (u0t, u0h) = d.alloc_edge();
            let (u1t, u1h) = d.alloc_edge();
            d.add_vertex(VertexKind::Clasp { n: 2 }, vec![lo0, lo1, u1t, u0t]);
            lo0 = u0h;
            lo1 = u1h;
        }
        // Cap the cable with loose-to-boundary stubs: reuse the running heads.
        let mut dd = d;
        dd.push_boundary(&[s1t, s0t]);
        // Top heads enter the boundary after the bottom tails.
        let b = [lo0, lo1];
        dd.push_boundary(&[b[0], b[1]]);
        dd
    }

    /// Stacked clasps equal a single clasp.
    #[test]
    fn stacked_clasps_are_idempotent() {
        let one = clasped_cable(1);
        one.validate().unwrap();
        let two = clasped_cable(2);
        two.validate().unwrap();
        let e1 = evaluate(one, &mut budget()).unwrap();
        let e2 = evaluate(two, &mut budget()).unwrap();
        assert_eq!(e1.len(), 2);
        assert!(e1.equals(&e2));
    }

    /// A trivalent vertex merging two adjacent cable strands kills the clasp.
    #[test]
    fn clasp_annihilates_adjacent_merge() {
        let mut d = WebDiagram::new();
        let (s0t, s0h) = d.alloc_edge();
        let (s1t, s1h) = d.alloc_edge();
        let (u0t, u0h) = d.alloc_edge();
        let (u1t, u1h) = d.alloc_edge();
        let (lt, lh) = d.alloc_edge();
        d.add_vertex(VertexKind::Clasp { n: 2 }, vec![s0h, s1h, u1t, u0t]);
        d.add_vertex(VertexKind::Sink, vec![lh, u0h, u1h]);
        d.push_boundary(&[s1t, s0t, lt]);
        d.validate().unwrap();
        let got = evaluate(d, &mut budget()).unwrap();
        assert!(got.is_zero());
    }

    /// A turn-back between the antiparallel cables kills the double clasp.
    #[test]
    fn double_clasp_annihilates_turn_back() {
        let mut d = WebDiagram::new();
        let (et, eh) = d.alloc_edge(); // turn-back arc on side 1
        let (gat, gah) = d.alloc_edge(); // a-cable out to boundary
        let (gbt, gbh) = d.alloc_edge(); // b-cable in from boundary
        d.add_vertex(VertexKind::DoubleClasp { a: 1, b: 1 }, vec![eh, et, gbh, gat]);
        d.push_boundary(&[gah, gbt]);
        d.validate().unwrap();
        let got = evaluate(d, &mut budget()).unwrap();
        assert!(got.is_zero());
    }

    /// The engine refuses to run past its budget.
    #[test]
    fn budget_stops_evaluation() {
        let mut d = WebDiagram::new();
        let (t0, h0) = d.alloc_edge();
        let (t1, h1) = d.alloc_edge();
        let (t2, h2) = d.alloc_edge();
        d.add_vertex(VertexKind::Source, vec![t0, t1, t2]);
        d.add_vertex(VertexKind::Sink, vec![h2, h1, h0]);
        let mut tiny = Budget::with_limit(1);
        match evaluate(d, &mut tiny) {
            Err(OracleError::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
