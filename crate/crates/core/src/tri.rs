//! Colored triangulations of the disk with 2k marked boundary points.
//!
//! The marked points are q_0, ..., q_{2k-1} in cyclic order. A triangulation
//! here is a maximal non-crossing chord system (2k-3 chords) in which no
//! chord cuts off a single boundary edge and no face is bounded by three
//! chords, together with a proper coloring: colors biject onto
//! {0, ..., 2k-4}, the chord colored 0 is short (cuts off one marked point),
//! and the two chords of any face carrying exactly two have consecutive
//! colors. Such colorings order the chords into the zigzag pattern the basis
//! webs are patched over.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Validation and manipulation errors for colored triangulations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriError {
    #[error("need k >= 2, got k = {0}")]
    KTooSmall(usize),
    #[error("expected {expected} chords for 2k = {points} points, got {got}")]
    WrongChordCount { expected: usize, got: usize, points: usize },
    #[error("chord endpoint {0} out of range for {1} points")]
    OutOfRange(usize, usize),
    #[error("chord ({0}, {1}) is isotopic to a boundary edge")]
    BoundaryChord(usize, usize),
    #[error("chords ({0}, {1}) and ({2}, {3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("chords form an internal triangle on vertices ({0}, {1}, {2})")]
    ChordTriangle(usize, usize, usize),
    #[error("chord colored 0 is ({0}, {1}), which is not short")]
    ZeroNotShort(usize, usize),
    #[error("face ({0}, {1}, {2}) carries chords colored {3} and {4}, not consecutive")]
    NonConsecutiveColors(usize, usize, usize, usize, usize),
    #[error("no flip: chord colored {color} has no admissible quadrilateral")]
    FlipInadmissible { color: usize },
    #[error("flip of color {color} leaves the proper coloring class: {reason}")]
    FlipLeavesClass { color: usize, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
}

/// A colored triangulation; `chords[c]` is the chord colored c, endpoints
/// normalized to a < b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredTriangulation {
    k: usize,
    chords: Vec<(usize, usize)>,
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// True when {c, d} separates a from b on the circle of `points` vertices.
fn crosses(x: (usize, usize), y: (usize, usize)) -> bool {
    let (a, b) = x;
    let (c, d) = y;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |p: usize| a < p && p < b;
    inside(c) != inside(d)
}

impl ColoredTriangulation {
    /// Builds and validates from (a, b, color) triples.
    pub fn new(k: usize, triples: &[(usize, usize, usize)]) -> Result<Self, TriError> {
        if k < 2 {
            return Err(TriError::KTooSmall(k));
        }
        let points = 2 * k;
        let expected = 2 * k - 3;
        if triples.len() != expected {
            return Err(TriError::WrongChordCount { expected, got: triples.len(), points });
        }
        let mut chords = vec![None; expected];
        for &(a, b, c) in triples {
            if a >= points {
                return Err(TriError::OutOfRange(a, points));
            }
            if b >= points {
                return Err(TriError::OutOfRange(b, points));
            }
            if c >= expected {
                return Err(TriError::Parse(format!(
                    "color {c} out of range 0..{expected}"
                )));
            }
            if chords[c].is_some() {
                return Err(TriError::Parse(format!("color {c} used twice")));
            }
            chords[c] = Some(norm(a, b));
        }
        let chords: Vec<(usize, usize)> = chords.into_iter().map(|o| o.unwrap()).collect();
        let t = ColoredTriangulation { k, chords };
        t.validate()?;
        Ok(t)
    }

    /// Number of marked points is 2k.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> usize {
        2 * self.k
    }

    /// The chord colored c.
    pub fn chord(&self, c: usize) -> (usize, usize) {
        self.chords[c]
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    /// Cyclic gap cut off by a chord: min distance around the circle.
    fn span(&self, (a, b): (usize, usize)) -> usize {
        let d = b - a;
        d.min(2 * self.k - d)
    }

    /// A chord is short when it cuts off exactly one marked point.
    pub fn is_short(&self, c: usize) -> bool {
        self.span(self.chords[c]) == 2
    }

    fn validate(&self) -> Result<(), TriError> {
        let points = 2 * self.k;
        for &(a, b) in &self.chords {
            if self.span((a, b)) < 2 {
                return Err(TriError::BoundaryChord(a, b));
            }
        }
        for (i, &x) in self.chords.iter().enumerate() {
            for &y in &self.chords[i + 1..] {
                if x == y {
                    return Err(TriError::Parse(format!(
                        "duplicate chord ({}, {})",
                        x.0, x.1
                    )));
                }
                if crosses(x, y) {
                    return Err(TriError::Crossing(x.0, x.1, y.0, y.1));
                }
            }
        }
        // No face bounded by three chords.
        let set: BTreeSet<(usize, usize)> = self.chords.iter().copied().collect();
        for &(a, b) in &set {
            for v in 0..points {
                if v == a || v == b {
                    continue;
                }
                if set.contains(&norm(a, v)) && set.contains(&norm(b, v)) {
                    let mut t = [a, b, v];
                    t.sort_unstable();
                    return Err(TriError::ChordTriangle(t[0], t[1], t[2]));
                }
            }
        }
        // Coloring: chord 0 short; two-chord faces have consecutive colors.
        if !self.is_short(0) {
            let (a, b) = self.chords[0];
            return Err(TriError::ZeroNotShort(a, b));
        }
        for (x, y, z) in self.faces() {
            let mut cols = Vec::new();
            for (u, v) in [(x, y), (y, z), (x, z)] {
                if let Some(c) = self.color_of(norm(u, v)) {
                    cols.push(c);
                }
            }
            if cols.len() == 2 {
                let (c1, c2) = (cols[0].min(cols[1]), cols[0].max(cols[1]));
                if c2 - c1 != 1 {
                    return Err(TriError::NonConsecutiveColors(x, y, z, c1, c2));
                }
            }
        }
        Ok(())
    }

    fn color_of(&self, chord: (usize, usize)) -> Option<usize> {
        self.chords.iter().position(|&c| c == chord)
    }

    fn is_edge(&self, a: usize, b: usize) -> bool {
        let s = self.span(norm(a, b));
        s == 1 || self.chords.contains(&norm(a, b))
    }

    /// Triangle faces as sorted vertex triples. In a maximal non-crossing
    /// chord system every pairwise-connected triple bounds a face.
    pub fn faces(&self) -> Vec<(usize, usize, usize)> {
        let points = 2 * self.k;
        let mut out = Vec::new();
        for x in 0..points {
            for y in x + 1..points {
                if !self.is_edge(x, y) {
                    continue;
                }
                for z in y + 1..points {
                    if self.is_edge(y, z) && self.is_edge(x, z) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        debug_assert_eq!(out.len(), 2 * self.k - 2, "face count");
        out
    }

    /// Replaces the chord colored c by the opposite diagonal of the
    /// quadrilateral formed by its two faces, keeping the color, and
    /// revalidates.
    pub fn flip(&self, c: usize) -> Result<Self, TriError> {
        let (a, b) = self.chords[c];
        let mut thirds = Vec::new();
        for (x, y, z) in self.faces() {
            let verts = [x, y, z];
            if verts.contains(&a) && verts.contains(&b) {
                let third = verts.into_iter().find(|&v| v != a && v != b).unwrap();
                thirds.push(third);
            }
        }
        if thirds.len() != 2 {
            return Err(TriError::FlipInadmissible { color: c });
        }
        let mut chords = self.chords.clone();
        chords[c] = norm(thirds[0], thirds[1]);
        let t = ColoredTriangulation { k: self.k, chords };
        t.validate().map_err(|e| TriError::FlipLeavesClass {
            color: c,
            reason: e.to_string(),
        })?;
        Ok(t)
    }

    /// Rotates every marked point by m steps: q_i -> q_{i+m}.
    pub fn rotate(&self, m: usize) -> Self {
        let points = 2 * self.k;
        let chords = self
            .chords
            .iter()
            .map(|&(a, b)| norm((a + m) % points, (b + m) % points))
            .collect();
        ColoredTriangulation { k: self.k, chords }
    }

    /// Serializes as a header line `points <2k>` followed by one `a b c` line
    /// per chord in color order.
    pub fn to_text(&self) -> String {
        let mut s = format!("points {}\n", 2 * self.k);
        for (c, &(a, b)) in self.chords.iter().enumerate() {
            s.push_str(&format!("{a} {b} {c}\n"));
        }
        s
    }

    /// Parses the [`to_text`](Self::to_text) format; `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Self, TriError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| TriError::Parse("empty input".into()))?;
        let points: usize = header
            .strip_prefix("points")
            .ok_or_else(|| TriError::Parse(format!("expected `points <2k>`, got {header:?}")))?
            .trim()
            .parse()
            .map_err(|e| TriError::Parse(format!("bad point count: {e}")))?;
        if points % 2 != 0 || points < 4 {
            return Err(TriError::Parse(format!(
                "point count must be an even number >= 4, got {points}"
            )));
        }
        let mut triples = Vec::new();
        for line in lines {
            let nums: Result<Vec<usize>, _> =
                line.split_whitespace().map(|w| w.parse()).collect();
            let nums = nums.map_err(|e| TriError::Parse(format!("bad chord line {line:?}: {e}")))?;
            if nums.len() != 3 {
                return Err(TriError::Parse(format!(
                    "chord line needs `a b color`, got {line:?}"
                )));
            }
            triples.push((nums[0], nums[1], nums[2]));
        }
        ColoredTriangulation::new(points / 2, &triples)
    }
}

impl fmt::Display for ColoredTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// The standard zigzag triangulation the representation matrices are written
/// in: even color 2m joins q_{k-1-m} and q_{k+1+m}, odd color 2m+1 joins
/// q_{k+1+m} and q_{k-2-m}.
pub fn t0(k: usize) -> ColoredTriangulation {
    assert!(k >= 2, "t0 needs k >= 2");
    let mut triples = Vec::new();
    for m in 0..=(k as i64 - 2) as usize {
        triples.push((k - 1 - m, k + 1 + m, 2 * m));
    }
    for m in 0..k.saturating_sub(2) {
        triples.push((k + 1 + m, k - 2 - m, 2 * m + 1));
    }
    ColoredTriangulation::new(k, &triples).expect("t0 is valid")
}

/// Flip word (colors, in application order) realizing a one-step rotation:
/// applying these flips to t0(k) yields rotate(t0(k), 1).
pub fn rotation_flip_word(k: usize) -> Vec<usize> {
    let mut word: Vec<usize> = (0..2 * k - 3).filter(|c| c % 2 == 1).collect();
    word.extend((0..2 * k - 3).filter(|c| c % 2 == 0));
    word
}

/// Exhaustive list of valid colored triangulations at desk scale (tests
/// only; grows like a Catalan number times the colorings).
pub fn enumerate_valid(k: usize) -> Vec<ColoredTriangulation> {
    let points = 2 * k;
    let n_chords = 2 * k - 3;
    // All candidate chords (span >= 2).
    let mut cands = Vec::new();
    for a in 0..points {
        for b in a + 1..points {
            let d = b - a;
            let span = d.min(points - d);
            if span >= 2 {
                cands.push((a, b));
            }
        }
    }
    // Choose non-crossing maximal systems, then try all color assignments.
    let mut systems = Vec::new();
    let mut current: Vec<(usize, usize)> = Vec::new();
    fn rec(
        cands: &[(usize, usize)],
        start: usize,
        need: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if current.len() == need {
            out.push(current.clone());
            return;
        }
        if cands.len() - start < need - current.len() {
            return;
        }
        for i in start..cands.len() {
            let c = cands[i];
            if current.iter().all(|&x| !crosses(x, c)) {
                current.push(c);
                rec(cands, i + 1, need, current, out);
                current.pop();
            }
        }
    }
    rec(&cands, 0, n_chords, &mut current, &mut systems);

    let mut out = Vec::new();
    let colors: Vec<usize> = (0..n_chords).collect();
    for sys in systems {
        for perm in permutations(&colors) {
            let triples: Vec<(usize, usize, usize)> = sys
                .iter()
                .zip(&perm)
                .map(|(&(a, b), &c)| (a, b, c))
                .collect();
            if let Ok(t) = ColoredTriangulation::new(k, &triples) {
                out.push(t);
            }
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t0_small_cases() {
        let t2 = t0(2);
        assert_eq!(t2.chords(), &[(1, 3)]);
        let t3 = t0(3);
        assert_eq!(t3.chords(), &[(2, 4), (1, 4), (1, 5)]);
        for k in 2..=6 {
            t0(k); // construction validates
        }
    }

    #[test]
    fn faces_and_shortness() {
        let t3 = t0(3);
        assert_eq!(t3.faces().len(), 4);
        assert!(t3.is_short(0));
        assert!(t3.is_short(2 * 3 - 4)); // the other fan end
        assert!(!t3.is_short(1));
    }

    #[test]
    fn flip_examples() {
        let t2 = t0(2);
        let f = t2.flip(0).unwrap();
        assert_eq!(f.chords(), &[(0, 2)]);
        assert_eq!(f, t2.rotate(1));

        let t3 = t0(3);
        let f0 = t3.flip(0).unwrap();
        assert_eq!(f0.chords(), &[(1, 3), (1, 4), (1, 5)]);
        // Flip is an involution on the underlying chords.
        assert_eq!(f0.flip(0).unwrap(), t3);
    }

    #[test]
    fn invalid_inputs_rejected() {
        // Boundary-isotopic chord.
        assert!(matches!(
            ColoredTriangulation::new(2, &[(0, 1, 0)]),
            Err(TriError::BoundaryChord(0, 1))
        ));
        // Crossing chords.
        let r = ColoredTriangulation::new(3, &[(0, 2, 0), (1, 3, 1), (3, 5, 2)]);
        assert!(matches!(r, Err(TriError::Crossing(..))));
        // Chord triangle (take the 3-fan q0-q2, q2-q4, q0-q4 on the hexagon).
        let r = ColoredTriangulation::new(3, &[(0, 2, 0), (2, 4, 1), (0, 4, 2)]);
        assert!(matches!(r, Err(TriError::ChordTriangle(0, 2, 4))));
        // Color 0 not short.
        let r = ColoredTriangulation::new(3, &[(1, 4, 0), (2, 4, 1), (1, 5, 2)]);
        assert!(matches!(r, Err(TriError::ZeroNotShort(1, 4))));
        // Non-consecutive colors across a two-chord face.
        let r = ColoredTriangulation::new(3, &[(2, 4, 0), (1, 5, 1), (1, 4, 2)]);
        assert!(matches!(r, Err(TriError::NonConsecutiveColors(..))));
    }

    #[test]
    fn rotation_flip_word_realizes_rotation() {
        for k in 2..=5 {
            let mut t = t0(k);
            for c in rotation_flip_word(k) {
                t = t.flip(c).unwrap_or_else(|e| panic!("k={k}, flip {c}: {e}"));
            }
            assert_eq!(t, t0(k).rotate(1), "k = {k}");
        }
    }

    #[test]
    fn text_roundtrip() {
        for k in 2..=4 {
            let t = t0(k);
            let s = t.to_text();
            assert_eq!(ColoredTriangulation::from_text(&s).unwrap(), t);
        }
        let with_comments = "# standard k=2\npoints 4\n1 3 0 # the one chord\n";
        assert_eq!(
            ColoredTriangulation::from_text(with_comments).unwrap(),
            t0(2)
        );
    }

    #[test]
    fn flip_transitivity_small() {
        for k in 2..=4 {
            let all = enumerate_valid(k);
            assert!(all.contains(&t0(k)));
            // BFS over admissible flips from t0.
            let mut seen = vec![t0(k)];
            let mut queue = vec![t0(k)];
            while let Some(t) = queue.pop() {
                for c in 0..2 * k - 3 {
                    if let Ok(f) = t.flip(c) {
                        if !seen.contains(&f) {
                            seen.push(f.clone());
                            queue.push(f);
                        }
                    }
                }
            }
            seen.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
            let mut all_sorted = all;
            all_sorted.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
            all_sorted.dedup();
            assert_eq!(seen.len(), all_sorted.len(), "k = {k}");
            assert_eq!(seen, all_sorted, "k = {k}");
        }
    }
}
