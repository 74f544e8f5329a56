//! Construction of clasped basis webs and the closed webs that pin the
//! trivalent coefficients.
//!
//! The boundary of a disk carries `2k` cables of `n` strands with alternating
//! orientation. A snake triangulation of the `2k`-gon places one long chord
//! inside the next, and the basis web of a label vector hangs one box on every
//! edge: a clasp on each boundary cable and on each odd chord, and a double
//! clasp of matching width on each even chord. Inside every triangle the
//! strands run as plain nested arcs: `n - j` turn-backs between the two legs,
//! `j` strands from the inbound leg into the chord, and `j` back out to the
//! outbound leg. The same local wiring with two or four junctions produces
//! the closed theta and tetrahedron webs used to cross-check coefficient
//! formulas.

use a2rep_core::RatFunc;

use crate::braid::Braider;
use crate::diagram::{Half, VertexKind, WebDiagram};
use crate::pair::coordinates;
use crate::reduce::evaluate;
use crate::{Budget, OracleError};

// ----------------------------------------------------------------------
// Box builders
// ----------------------------------------------------------------------

/// A clasp box on a cable of `n` strands: `entry` lists the dangling ends on
/// the side the cable flows into, `exit` the far side, both strand-aligned.
struct ClaspCable {
    entry: Vec<Half>,
    exit: Vec<Half>,
}

fn clasp_cable(d: &mut WebDiagram, n: usize) -> ClaspCable {
    let mut s1 = Vec::with_capacity(n);
    let mut entry = Vec::with_capacity(n);
    for _ in 0..n {
        let (t, h) = d.alloc_edge();
        s1.push(h);
        entry.push(t);
    }
    let mut s2 = Vec::with_capacity(n);
    let mut exit = Vec::with_capacity(n);
    for _ in 0..n {
        let (t, h) = d.alloc_edge();
        s2.push(t);
        exit.push(h);
    }
    let mut rot = s1;
    rot.extend(s2.into_iter().rev());
    d.add_vertex(VertexKind::Clasp { n }, rot);
    ClaspCable { entry, exit }
}

/// A double clasp on an antiparallel pair of width-`j` cables running between
/// a lower and an upper region. The `a` column flows upward, the `b` column
/// downward; `abs_first` puts the `b` column on the left, so that each side
/// reads absorbing ports before emitting ones counterclockwise.
struct PairPorts {
    lo_abs: Vec<Half>,
    lo_em: Vec<Half>,
    up_abs: Vec<Half>,
    up_em: Vec<Half>,
    abs_first: bool,
}

impl PairPorts {
    /// Ports counterclockwise for the region above: `(absorbing, emitting)`.
    fn upper(&self) -> (Vec<Half>, Vec<Half>) {
        (self.up_abs.clone(), self.up_em.clone())
    }

    /// Ports counterclockwise for the region below.
    fn lower(&self) -> (Vec<Half>, Vec<Half>) {
        let mut abs = self.lo_abs.clone();
        let mut em = self.lo_em.clone();
        abs.reverse();
        em.reverse();
        (abs, em)
    }
}

fn pair_cable(d: &mut WebDiagram, j: usize, abs_first: bool) -> PairPorts {
    let mut a_lo_box = Vec::new();
    let mut a_up_box = Vec::new();
    let mut b_lo_box = Vec::new();
    let mut b_up_box = Vec::new();
    let mut ports = PairPorts {
        lo_abs: Vec::new(),
        lo_em: Vec::new(),
        up_abs: Vec::new(),
        up_em: Vec::new(),
        abs_first,
    };
    for _ in 0..j {
        let (t, h) = d.alloc_edge();
        a_lo_box.push(h);
        ports.lo_abs.push(t);
        let (t2, h2) = d.alloc_edge();
        a_up_box.push(t2);
        ports.up_em.push(h2);
        let (t3, h3) = d.alloc_edge();
        b_up_box.push(h3);
        ports.up_abs.push(t3);
        let (t4, h4) = d.alloc_edge();
        b_lo_box.push(t4);
        ports.lo_em.push(h4);
    }
    if j > 0 {
        let (first_lo, second_lo, second_up, first_up) = if abs_first {
            (b_lo_box, a_lo_box, a_up_box, b_up_box)
        } else {
            (a_lo_box, b_lo_box, b_up_box, a_up_box)
        };
        let mut rot = first_lo;
        rot.extend(second_lo);
        rot.extend(second_up.into_iter().rev());
        rot.extend(first_up.into_iter().rev());
        d.add_vertex(VertexKind::DoubleClasp { a: j, b: j }, rot);
    }
    ports
}

/// An odd-chord clasp between an enclosed upper region and an outer lower
/// one, with the dangling ends already listed counterclockwise for each side.
struct OddChord {
    upper: Vec<Half>,
    upper_in: bool,
    lower: Vec<Half>,
    lower_in: bool,
}

fn odd_chord(d: &mut WebDiagram, n: usize, flow_up: bool) -> OddChord {
    let c = clasp_cable(d, n);
    let rev = |mut v: Vec<Half>| {
        v.reverse();
        v
    };
    if flow_up {
        OddChord { upper: c.exit, upper_in: true, lower: rev(c.entry), lower_in: false }
    } else {
        OddChord { upper: rev(c.entry), upper_in: false, lower: c.exit, lower_in: true }
    }
}

// ----------------------------------------------------------------------
// Triangle wiring
// ----------------------------------------------------------------------

/// Fuses the nested arc families of one triangle. The blocks `l1`, `l2`,
/// chord follow each other counterclockwise; exactly one leg flows in. With
/// the second leg inbound the chord must read absorbing ports first, with the
/// first leg inbound the emitting ports come first; either way the matching
/// is the unique planar one.
fn wire_triangle(
    d: &mut WebDiagram,
    l1: &[Half],
    l1_in: bool,
    l2: &[Half],
    l2_in: bool,
    ch_abs: &[Half],
    ch_em: &[Half],
    abs_first: bool,
) {
    let n = l1.len();
    let j = ch_abs.len();
    assert_eq!(l2.len(), n);
    assert_eq!(ch_em.len(), j);
    assert!(j <= n);
    assert_ne!(l1_in, l2_in, "triangle legs must carry opposite flows");
    let mut join = |x: Half, y: Half| {
        let f = d.fuse(x, y);
        assert!(matches!(f, crate::diagram::Fused::Spliced), "triangle arcs splice");
    };
    if l2_in {
        assert!(abs_first || j == 0, "chord group order clashes with leg order");
        let (o, i) = (l1, l2);
        for s in 0..j {
            join(i[n - 1 - s], ch_abs[s]);
        }
        for s in 0..j {
            join(ch_em[j - 1 - s], o[s]);
        }
        for r in 0..n - j {
            join(o[n - 1 - r], i[r]);
        }
    } else {
        assert!(!abs_first || j == 0, "chord group order clashes with leg order");
        let (i, o) = (l1, l2);
        for s in 0..j {
            join(ch_abs[j - 1 - s], i[s]);
        }
        for s in 0..j {
            join(o[n - 1 - s], ch_em[s]);
        }
        for r in 0..n - j {
            join(i[n - 1 - r], o[r]);
        }
    }
}

// ----------------------------------------------------------------------
// Basis webs
// ----------------------------------------------------------------------

/// Builds the clasped basis web for label vector `js` over the snake
/// triangulation of the `2k`-gon with boundary cables of width `n`.
///
/// Boundary stubs run cable by cable, `n` per cable, odd cables flowing out
/// and even ones flowing in. Even chord `m` carries a double clasp of width
/// `js[m]`, odd chords a full clasp; every triangle of the triangulation has
/// exactly one even-chord side.
pub fn build_basis_web(n: usize, k: usize, js: &[usize]) -> Result<WebDiagram, OracleError> {
    assert!(n >= 1, "cable width must be positive");
    assert!(k >= 2, "need at least four boundary cables");
    assert_eq!(js.len(), k - 1, "one label per even chord");
    if let Some(&bad) = js.iter().find(|&&j| j > n) {
        return Err(OracleError::Invalid(format!(
            "chord label {bad} exceeds cable width {n}"
        )));
    }
    let mut d = WebDiagram::new();
    let rev = |mut v: Vec<Half>| {
        v.reverse();
        v
    };

    // Boundary cables 1..=2k, stubs appended in order: (ports, flows_in).
    let mut cables: Vec<(Vec<Half>, bool)> = vec![(Vec::new(), false)];
    for i in 1..=2 * k {
        let c = clasp_cable(&mut d, n);
        if i % 2 == 1 {
            // Outbound: interior entry absorbs, stubs are heads.
            d.push_boundary(&c.exit);
            cables.push((rev(c.entry), false));
        } else {
            // Inbound: stubs are tails, interior exit emits. The entry list
            // is built right to left so the rotation stays counterclockwise.
            d.push_boundary(&rev(c.entry));
            cables.push((c.exit, true));
        }
    }

    // Even chords 0..k-1 (labels) and odd chords 0..k-2 (full cables),
    // nesting outward; parities of the snake fix every arrangement.
    let evens: Vec<PairPorts> = (0..k - 1)
        .map(|m| pair_cable(&mut d, js[m], (k + m) % 2 == 0))
        .collect();
    let odds: Vec<OddChord> =
        (0..k.saturating_sub(2)).map(|m| odd_chord(&mut d, n, (k + m) % 2 == 0)).collect();

    // Innermost ear: cables k+1 and k against the first chord's upper side.
    {
        let (abs, em) = evens[0].upper();
        let (l1, l1_in) = (&cables[k + 1].0, cables[k + 1].1);
        let (l2, l2_in) = (&cables[k].0, cables[k].1);
        wire_triangle(&mut d, l1, l1_in, l2, l2_in, &abs, &em, evens[0].abs_first);
    }
    // Middle triangles between consecutive chords.
    for c in 0..(2 * k).saturating_sub(4) {
        if c % 2 == 0 {
            let m = c / 2;
            let (abs, em) = evens[m].lower();
            let (l1, l1_in) = (&cables[k - 1 - m].0, cables[k - 1 - m].1);
            wire_triangle(
                &mut d,
                l1,
                l1_in,
                &odds[m].upper,
                odds[m].upper_in,
                &abs,
                &em,
                evens[m].abs_first,
            );
        } else {
            let m = (c - 1) / 2;
            let (abs, em) = evens[m + 1].upper();
            let (l1, l1_in) = (&cables[k + 2 + m].0, cables[k + 2 + m].1);
            wire_triangle(
                &mut d,
                l1,
                l1_in,
                &odds[m].lower,
                odds[m].lower_in,
                &abs,
                &em,
                evens[m + 1].abs_first,
            );
        }
    }
    // Outermost ear: cables 1 and 2k against the last chord's lower side.
    {
        let (abs, em) = evens[k - 2].lower();
        let (l1, l1_in) = (&cables[1].0, cables[1].1);
        let (l2, l2_in) = (&cables[2 * k].0, cables[2 * k].1);
        wire_triangle(&mut d, l1, l1_in, l2, l2_in, &abs, &em, evens[k - 2].abs_first);
    }

    d.validate().map_err(|e| OracleError::Invalid(format!("basis web: {e}")))?;
    Ok(d)
}

/// All label vectors for `(n, k)` in lexicographic order, first chord most
/// significant; the column and row order of every matrix built here.
pub fn basis_labels(n: usize, k: usize) -> Vec<Vec<usize>> {
    let dim = (n + 1).pow((k - 1) as u32);
    (0..dim)
        .map(|mut idx| {
            let mut js = vec![0; k - 1];
            for slot in (0..k - 1).rev() {
                js[slot] = idx % (n + 1);
                idx /= n + 1;
            }
            js
        })
        .collect()
}

/// The full basis family for `(n, k)` in label order.
pub fn basis_family(n: usize, k: usize) -> Result<Vec<WebDiagram>, OracleError> {
    basis_labels(n, k).iter().map(|js| build_basis_web(n, k, js)).collect()
}

// ----------------------------------------------------------------------
// Closed coefficient webs
// ----------------------------------------------------------------------

/// The closed theta web: two junctions joined by two clasped `n`-cables and
/// one double-clasped `(i, i)` pair.
pub fn theta_web(n: usize, i: usize) -> Result<WebDiagram, OracleError> {
    assert!(n >= 1 && i <= n);
    let mut d = WebDiagram::new();
    let rev = |mut v: Vec<Half>| {
        v.reverse();
        v
    };
    let l = clasp_cable(&mut d, n); // flows upward: entry below, exit above
    let r = clasp_cable(&mut d, n); // flows downward: entry above, exit below
    let m = pair_cable(&mut d, i, true);
    // A junction walks each box side against the box's own rotation, so it
    // sees entry ends reversed and exit ends straight.
    {
        let (abs, em) = m.upper();
        wire_triangle(&mut d, &rev(r.entry.clone()), false, &l.exit, true, &abs, &em, true);
    }
    {
        let (abs, em) = m.lower();
        wire_triangle(&mut d, &rev(l.entry.clone()), false, &r.exit, true, &abs, &em, true);
    }
    d.validate().map_err(|e| OracleError::Invalid(format!("theta web: {e}")))?;
    Ok(d)
}

/// The closed tetrahedron web: inner junction pair joined by an `(i, i)`
/// chord, outer pair by a `(j, j)` chord, and four clasped `n`-cables in a
/// cycle between them.
pub fn tet_web(n: usize, i: usize, j: usize) -> Result<WebDiagram, OracleError> {
    assert!(n >= 1 && i <= n && j <= n);
    let mut d = WebDiagram::new();
    let rev = |mut v: Vec<Half>| {
        v.reverse();
        v
    };
    // Cables around the cycle a -> c -> b -> d -> a.  Each junction walks a
    // box side against the box's own rotation, so entry ends arrive reversed
    // and exit ends straight.
    let ac = clasp_cable(&mut d, n);
    let cb = clasp_cable(&mut d, n);
    let bd = clasp_cable(&mut d, n);
    let da = clasp_cable(&mut d, n);
    let ab = pair_cable(&mut d, i, false); // upper ports face junction a
    let cd = pair_cable(&mut d, j, true); // upper ports face junction c
    {
        let (abs, em) = ab.upper();
        wire_triangle(&mut d, &da.exit, true, &rev(ac.entry.clone()), false, &abs, &em, false);
    }
    {
        let (abs, em) = cd.upper();
        wire_triangle(&mut d, &rev(cb.entry.clone()), false, &ac.exit, true, &abs, &em, true);
    }
    {
        let (abs, em) = ab.lower();
        wire_triangle(&mut d, &cb.exit, true, &rev(bd.entry.clone()), false, &abs, &em, false);
    }
    {
        let (abs, em) = cd.lower();
        wire_triangle(&mut d, &rev(da.entry.clone()), false, &bd.exit, true, &abs, &em, true);
    }
    d.validate().map_err(|e| OracleError::Invalid(format!("tetrahedron web: {e}")))?;
    Ok(d)
}

// ----------------------------------------------------------------------
// Generator matrices by rewriting
// ----------------------------------------------------------------------

/// The matrix of the pure braid generator on cables `gi < gj` in the clasped
/// basis, computed purely by rewriting: glue the braid word onto each basis
/// web, reduce, and read coordinates back off through the Gram matrix.
/// Row index is the target label, column index the source label.
pub fn oracle_generator_matrix(
    n: usize,
    k: usize,
    gi: usize,
    gj: usize,
    positive: bool,
    budget: &mut Budget,
) -> Result<Vec<Vec<RatFunc>>, OracleError> {
    assert!(1 <= gi && gi < gj && gj <= 2 * k);
    let basis = basis_family(n, k)?;
    let dim = basis.len();
    let mut cols = Vec::with_capacity(dim);
    for b in &basis {
        let mut braider = Braider::on_web(b.clone());
        braider.pure_twist(gi, gj, n, positive);
        let acted = braider.finish();
        let reduced = evaluate(acted, budget)?;
        cols.push(coordinates(&basis, &reduced, budget)?);
    }
    Ok((0..dim).map(|r| (0..dim).map(|c| cols[c][r].clone()).collect()).collect())
}

// ----------------------------------------------------------------------
// Tests
// ----------------------------------------------------------------------
