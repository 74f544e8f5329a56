//! The bilinear pairing on open webs and the Gram-matrix machinery built on
//! top of it.
//!
//! Two webs with the same boundary signature pair by reflecting the first
//! across the boundary line and gluing stub to stub; the resulting closed web
//! evaluates to a scalar. Expanding bilinearly gives the pairing of skein
//! elements, Gram matrices of basis families, and coordinates of an arbitrary
//! element with respect to a basis whose Gram matrix is invertible. The linear
//! solve is a plain fraction-wise Gaussian elimination kept local to this
//! module so that the oracle shares no matrix code with anything it is used to
//! check.

use a2rep_core::RatFunc;

use crate::diagram::WebDiagram;
use crate::reduce::{evaluate_scaled, with_circles};
use crate::skein::SkeinElement;
use crate::{Budget, OracleError};

/// Closes `x` against `y` (mirror of `x` on top, `y` below, stub `i` fused to
/// stub `i`) and evaluates the resulting closed web to a scalar.
pub fn pair_diagrams(
    x: &WebDiagram,
    y: &WebDiagram,
    budget: &mut Budget,
) -> Result<RatFunc, OracleError> {
    if x.boundary().len() != y.boundary().len() {
        return Err(OracleError::BoundaryMismatch(format!(
            "pairing webs with {} and {} boundary stubs",
            x.boundary().len(),
            y.boundary().len()
        )));
    }
    let mut glued = x.mirrored();
    let top = glued.release_boundary();
    let off = glued.absorb_loose(y);
    let bottom: Vec<_> = y.boundary().iter().map(|&h| h + off).collect();
    let circles = glued.fuse_all(top.into_iter().zip(bottom).collect());
    let value = evaluate_scaled(with_circles(&RatFunc::one(), circles), glued, budget)?;
    value
        .scalar()
        .ok_or_else(|| OracleError::Invalid("closed pairing left a non-empty web".into()))
}

/// The bilinear extension of [`pair_diagrams`] to skein elements.
pub fn pair_elements(
    x: &SkeinElement,
    y: &SkeinElement,
    budget: &mut Budget,
) -> Result<RatFunc, OracleError> {
    let mut acc = RatFunc::zero();
    for (cx, dx) in x.iter() {
        for (cy, dy) in y.iter() {
            let p = pair_diagrams(dx, dy, budget)?;
            acc = &acc + &(&(cx * cy) * &p);
        }
    }
    Ok(acc)
}

/// All pairwise pairings of a family of webs, row `i` column `j` holding
/// the pairing of `basis[i]` with `basis[j]`.
pub fn gram_matrix(
    basis: &[WebDiagram],
    budget: &mut Budget,
) -> Result<Vec<Vec<RatFunc>>, OracleError> {
    let mut g = Vec::with_capacity(basis.len());
    for row in basis {
        let mut r = Vec::with_capacity(basis.len());
        for col in basis {
            r.push(pair_diagrams(row, col, budget)?);
        }
        g.push(r);
    }
    Ok(g)
}

/// Coordinates of `target` in the given basis: solves `G c = y` where `G` is
/// the Gram matrix and `y` pairs each basis web against `target`.
pub fn coordinates(
    basis: &[WebDiagram],
    target: &SkeinElement,
    budget: &mut Budget,
) -> Result<Vec<RatFunc>, OracleError> {
    let g = gram_matrix(basis, budget)?;
    let mut y = Vec::with_capacity(basis.len());
    for row in basis {
        let mut acc = RatFunc::zero();
        for (c, d) in target.iter() {
            let p = pair_diagrams(row, d, budget)?;
            acc = &acc + &(c * &p);
        }
        y.push(acc);
    }
    solve(g, y)
}

/// Solves the square system `a x = b` by Gaussian elimination with exact
/// division, failing on a singular matrix.
pub fn solve(mut a: Vec<Vec<RatFunc>>, mut b: Vec<RatFunc>) -> Result<Vec<RatFunc>, OracleError> {
    let n = a.len();
    assert_eq!(b.len(), n);
    for row in &a {
        assert_eq!(row.len(), n);
    }
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(OracleError::SingularGram)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip().map_err(|_| OracleError::SingularGram)?;
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                }
                b[r] = &b[r] - &(&f * &b[col]);
            }
        }
    }
    Ok(b)
}

// ----------------------------------------------------------------------
// Tests
// ----------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::arcs_diagram;
    use a2rep_core::scalar::qint;
    use a2rep_core::LaurentPoly;

    fn budget() -> Budget {
        Budget::with_limit(100_000)
    }

    fn qq(p: LaurentPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    #[test]
    fn cup_pairs_to_a_circle_count() {
        // One cup with two stubs; pairing it with itself closes into a circle.
        let cup = arcs_diagram(2, &[(0, 1)]);
        let v = pair_diagrams(&cup, &cup, &mut budget()).unwrap();
        assert_eq!(v, qq(qint(3)));
    }

    #[test]
    fn nested_and_crossing_arc_pairings() {
        // Four stubs with alternating directions: nested arcs against
        // themselves give two circles, against the split pattern a single one.
        let nested = arcs_diagram(4, &[(0, 3), (2, 1)]);
        let split = arcs_diagram(4, &[(0, 1), (2, 3)]);
        let three = qq(qint(3));
        assert_eq!(
            pair_diagrams(&nested, &nested, &mut budget()).unwrap(),
            &three * &three
        );
        assert_eq!(pair_diagrams(&nested, &split, &mut budget()).unwrap(), three);
    }

    #[test]
    fn pairing_rejects_mismatched_boundaries() {
        let cup = arcs_diagram(2, &[(0, 1)]);
        let quad = arcs_diagram(4, &[(0, 1), (2, 3)]);
        assert!(matches!(
            pair_diagrams(&cup, &quad, &mut budget()),
            Err(OracleError::BoundaryMismatch(_))
        ));
    }

    #[test]
    fn solver_inverts_a_small_system() {
        let two = qq(qint(2));
        let three = qq(qint(3));
        // [[0, 2], [3, 1]] x = [2, 4]  =>  x = [(4 - 1)/3, 1] = [1, 1].
        let a = vec![
            vec![RatFunc::zero(), two.clone()],
            vec![three.clone(), RatFunc::one()],
        ];
        let b = vec![two, &three + &RatFunc::one()];
        let x = solve(a, b).unwrap();
        assert!(x[0].is_one());
        assert!(x[1].is_one());
    }

    #[test]
    fn solver_reports_singular_systems() {
        let one = RatFunc::one();
        let a = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        let b = vec![one.clone(), one];
        assert!(matches!(solve(a, b), Err(OracleError::SingularGram)));
    }
}
