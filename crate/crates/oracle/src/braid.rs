//! Gluing braid words onto webs, one crossing vertex at a time.
//!
//! A braider holds a web together with its dangling top ends, listed left to
//! right. Each elementary crossing consumes two adjacent ends and dangles two
//! fresh ones, so a braid word builds up bottom to top, leftmost letter first.
//! Generators act on cables by the usual block schedule: every strand of the
//! left cable walks across every strand of the right one. The pure braid
//! generator on cables `i < j` is the conjugate `s_{j-1}^{-1} ... s_{i+1}^{-1}
//! s_i^2 s_{i+1} ... s_{j-1}`, and a trace closure fuses each top end back
//! onto its bottom partner.

use crate::diagram::{is_head, Half, VertexKind, WebDiagram};

/// A web with released top ends that braid letters can be glued onto.
pub struct Braider {
    d: WebDiagram,
    top: Vec<Half>,
    bottom: Vec<Half>,
}

impl Braider {
    /// Starts from an open web, releasing its boundary as the working top.
    pub fn on_web(mut w: WebDiagram) -> Braider {
        let top = w.release_boundary();
        Braider { d: w, top, bottom: Vec::new() }
    }

    /// Starts from `m` bare upward strands with loose ends on both sides.
    pub fn strands(m: usize) -> Braider {
        let mut d = WebDiagram::new();
        let mut top = Vec::with_capacity(m);
        let mut bottom = Vec::with_capacity(m);
        for _ in 0..m {
            let (t, h) = d.alloc_edge();
            bottom.push(t);
            top.push(h);
        }
        Braider { d, top, bottom }
    }

    /// Number of dangling top ends.
    pub fn width(&self) -> usize {
        self.top.len()
    }

    /// Glues one crossing over the ends at slots `s`, `s + 1`. The rotation
    /// reads counterclockwise from the southeast port, and `over_first` marks
    /// the strand entering at the right end as the over strand.
    pub fn cross(&mut self, s: usize, over_first: bool) {
        let sw = self.top[s];
        let se = self.top[s + 1];
        let (t1, h1) = self.d.alloc_edge();
        let (ne, up_right) = if is_head(sw) { (t1, h1) } else { (h1, t1) };
        let (t2, h2) = self.d.alloc_edge();
        let (nw, up_left) = if is_head(se) { (t2, h2) } else { (h2, t2) };
        self.d.add_vertex(VertexKind::Crossing { over_first }, vec![se, ne, nw, sw]);
        self.top[s] = up_left;
        self.top[s + 1] = up_right;
    }

    /// The elementary braid letter on strands `l`, `l + 1` (1-based); the
    /// positive letter takes the left strand over the right one.
    pub fn sigma(&mut self, l: usize, positive: bool) {
        self.cross(l - 1, !positive);
    }

    /// The braid letter on width-`w` cables `c`, `c + 1` (1-based).
    pub fn sigma_cable(&mut self, c: usize, w: usize, positive: bool) {
        assert!(w > 0 && c >= 1 && (c + 1) * w <= self.top.len());
        let p = (c - 1) * w;
        for a in 0..w {
            for t in 0..w {
                self.cross(p + w - 1 - a + t, !positive);
            }
        }
    }

    /// The pure braid generator (or its inverse) twisting width-`w` cables
    /// `i < j` around each other.
    pub fn pure_twist(&mut self, i: usize, j: usize, w: usize, positive: bool) {
        assert!(1 <= i && i < j && j * w <= self.top.len());
        for c in (i + 1..j).rev() {
            self.sigma_cable(c, w, false);
        }
        self.sigma_cable(i, w, positive);
        self.sigma_cable(i, w, positive);
        for c in i + 1..j {
            self.sigma_cable(c, w, true);
        }
    }

    /// Reattaches the current top as the boundary and returns the open web.
    /// Only meaningful when the braider started from a web.
    pub fn finish(mut self) -> WebDiagram {
        assert!(self.bottom.is_empty(), "bare strands must be closed, not finished");
        let top = std::mem::take(&mut self.top);
        self.d.push_boundary(&top);
        self.d
    }

    /// Trace closure: fuses top end `i` back onto bottom end `i`, returning
    /// the closed web and the number of free circles that fell out.
    pub fn close(mut self) -> (WebDiagram, usize) {
        assert_eq!(self.top.len(), self.bottom.len());
        let pairs: Vec<(Half, Half)> =
            self.top.drain(..).zip(self.bottom.drain(..)).collect();
        let circles = self.d.fuse_all(pairs);
        (self.d, circles)
    }
}

// ----------------------------------------------------------------------
// Tests
// ----------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::{evaluate, with_circles};
    use crate::Budget;
    use a2rep_core::scalar::qint;
    use a2rep_core::RatFunc;

    fn budget() -> Budget {
        Budget::with_limit(100_000)
    }

    fn close_value(b: Braider) -> RatFunc {
        let (d, circles) = b.close();
        let e = evaluate(d, &mut budget()).unwrap();
        &e.scalar().expect("closed web must reduce to a scalar")
            * &with_circles(&RatFunc::one(), circles)
    }

    #[test]
    fn empty_word_closes_to_circles() {
        let three = RatFunc::from_poly(qint(3));
        assert_eq!(close_value(Braider::strands(1)), three);
        let b = Braider::strands(3);
        assert_eq!(close_value(b), three.pow(3));
    }

    #[test]
    fn positive_kink_carries_the_framing_unit() {
        // Closing a single positive letter on two strands leaves a once
        // twisted unknot, a plain circle up to the framing unit v^8.
        let mut b = Braider::strands(2);
        b.sigma(1, true);
        assert_eq!(close_value(b), &RatFunc::v_pow(8) * &RatFunc::from_poly(qint(3)));
    }

    #[test]
    fn negative_kink_carries_the_inverse_unit() {
        let mut b = Braider::strands(2);
        b.sigma(1, false);
        assert_eq!(close_value(b), &RatFunc::v_pow(-8) * &RatFunc::from_poly(qint(3)));
    }

    #[test]
    fn cancelling_letters_close_to_two_circles() {
        let mut b = Braider::strands(2);
        b.sigma(1, true);
        b.sigma(1, false);
        assert_eq!(close_value(b), RatFunc::from_poly(qint(3)).pow(2));
    }
}
