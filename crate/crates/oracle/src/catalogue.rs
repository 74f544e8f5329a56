//! Hand built closed diagrams exercising the framed Reidemeister moves.
//!
//! Evaluation consumes crossings by resolving them into flat webs, so framed
//! isotopy invariance is a theorem about the resolution rule rather than a
//! rewrite of the system itself. The diagrams here pin it down at desk
//! scale: a loop with two cancelling kinks, and a circle slid across a
//! trivalent vertex while staying the over strand throughout. Braid closures
//! related by the second and third moves live in the braid tests.

use crate::diagram::{VertexKind, WebDiagram};

/// A single unknotted loop carrying one positive and one negative kink. The
/// framing units cancel, so evaluation must return the bare loop value.
pub fn opposite_kinks_loop() -> WebDiagram {
    let mut d = WebDiagram::new();
    let (l1t, l1h) = d.alloc_edge(); // small loop at the first kink
    let (l2t, l2h) = d.alloc_edge(); // small loop at the second kink
    let (m1t, m1h) = d.alloc_edge(); // main line, first to second crossing
    let (m2t, m2h) = d.alloc_edge(); // main line, second back to first
    d.add_vertex(VertexKind::Crossing { over_first: false }, vec![l1h, l1t, m1t, m2h]);
    d.add_vertex(VertexKind::Crossing { over_first: true }, vec![l2h, l2t, m2t, m1h]);
    d
}

/// A theta graph with a free circle passing over each of its three edges
/// once. The circle lifts off, leaving the theta times a plain loop.
pub fn circle_over_theta() -> WebDiagram {
    let mut d = WebDiagram::new();
    let (a1t, a1h) = d.alloc_edge(); // top edge, source side
    let (a2t, a2h) = d.alloc_edge(); // top edge, sink side
    let (b1t, b1h) = d.alloc_edge(); // middle edge, source side
    let (b2t, b2h) = d.alloc_edge(); // middle edge, sink side
    let (c1t, c1h) = d.alloc_edge(); // bottom edge, source side
    let (c2t, c2h) = d.alloc_edge(); // bottom edge, sink side
    let (s1t, s1h) = d.alloc_edge(); // circle, between top and middle
    let (s2t, s2h) = d.alloc_edge(); // circle, between middle and bottom
    let (rt, rh) = d.alloc_edge(); // circle, return arc around the sink
    d.add_vertex(VertexKind::Source, vec![b1t, a1t, c1t]);
    d.add_vertex(VertexKind::Sink, vec![a2h, b2h, c2h]);
    // The circle runs through the odd slots of each crossing, so keeping it
    // on top means the slot zero strand stays under.
    d.add_vertex(VertexKind::Crossing { over_first: false }, vec![a2t, rh, a1h, s1t]);
    d.add_vertex(VertexKind::Crossing { over_first: false }, vec![b2t, s1h, b1h, s2t]);
    d.add_vertex(VertexKind::Crossing { over_first: false }, vec![c2t, s2h, c1h, rt]);
    d
}

/// The previous diagram after sliding the circle across the source vertex:
/// its crossings with the top and middle edges trade for a second crossing
/// with the bottom one. Evaluation must not notice the difference.
pub fn circle_over_theta_slid() -> WebDiagram {
    let mut d = WebDiagram::new();
    let (at, ah) = d.alloc_edge(); // top edge, now uncrossed
    let (bt, bh) = d.alloc_edge(); // middle edge, now uncrossed
    let (c1t, c1h) = d.alloc_edge(); // bottom edge, source to first crossing
    let (c2t, c2h) = d.alloc_edge(); // bottom edge, between the crossings
    let (c3t, c3h) = d.alloc_edge(); // bottom edge, second crossing to sink
    let (g1t, g1h) = d.alloc_edge(); // circle, between the crossings
    let (g2t, g2h) = d.alloc_edge(); // circle, the long way round
    d.add_vertex(VertexKind::Source, vec![bt, at, c1t]);
    d.add_vertex(VertexKind::Sink, vec![ah, bh, c3h]);
    d.add_vertex(VertexKind::Crossing { over_first: true }, vec![g1t, c1h, g2h, c2t]);
    d.add_vertex(VertexKind::Crossing { over_first: false }, vec![c3t, g1h, c2h, g2t]);
    d
}

// ----------------------------------------------------------------------
// Tests
// ----------------------------------------------------------------------
