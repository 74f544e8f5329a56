//! Closed evaluations of small clasped A2 webs.
//!
//! The web of two clasps of weight (i, j) closed into a loop evaluates to
//! [`delta`]; a pair of transversal clasp vertices closed up gives the theta
//! value [`theta`] (with an independent summation form [`theta_sum`]); the
//! clasped tetrahedron gives [`tet`]; and the two recoupling coefficients
//! [`sixj_square`] and [`sixj_mixed`] are the ratios of those evaluations that
//! change the triangulation a basis web is patched over. Twist coefficients
//! are the framing monomials picked up by full twists on cables.
//!
//! All values live in Q(v), v = q^(1/6), and are memoized.

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;
use thiserror::Error;

use crate::scalar::{qbinom, qint, LaurentPoly, RatFunc};

/// Sign of a twist or braid power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// Errors from recoupling evaluations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpiderError {
    /// A recoupling denominator (a tetrahedron value) vanished.
    #[error("zero denominator in mixed recoupling at (n={n}, s={s}, t={t})")]
    ZeroTet { n: i64, s: i64, t: i64 },
}

fn rf(p: LaurentPoly) -> RatFunc {
    RatFunc::from_poly(p)
}

fn qb(n: i64, k: i64) -> RatFunc {
    rf(qbinom(n, k))
}

static DELTA_CACHE: Lazy<Mutex<HashMap<(i64, i64), RatFunc>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static THETA_CACHE: Lazy<Mutex<HashMap<(i64, i64), RatFunc>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static TET_CACHE: Lazy<Mutex<HashMap<(i64, i64, i64), RatFunc>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Loop value of the clasped unknot with weight (i, j):
/// [i+1][j+1][i+j+2] / [2].
pub fn delta(i: i64, j: i64) -> RatFunc {
    assert!(i >= 0 && j >= 0, "delta needs i, j >= 0, got ({i}, {j})");
    if let Some(hit) = DELTA_CACHE.lock().unwrap().get(&(i, j)) {
        return hit.clone();
    }
    let num = &(&qint(i + 1) * &qint(j + 1)) * &qint(i + j + 2);
    let val = RatFunc::new(num, qint(2));
    DELTA_CACHE.lock().unwrap().insert((i, j), val.clone());
    val
}

/// Theta value by its summation form: the (n, i) transversal pair expanded
/// into turn-back terms. Independent route kept for cross-checking the closed
/// product form.
pub fn theta_sum(n: i64, i: i64) -> RatFunc {
    assert!(0 <= i && i <= n, "theta needs 0 <= i <= n, got ({n}, {i})");
    let mut acc = RatFunc::zero();
    let d_n0_sq = delta(n, 0).pow(2);
    for k in 0..=i {
        let coeff = &qb(i, k).pow(2) / &qb(2 * i + 1, k);
        let term = &coeff * &(&d_n0_sq / &delta(n - i + k, 0));
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Theta value in closed product form:
/// ([n+i+2; 2i+2] / [n; i]^2) * delta(i, i).
pub fn theta(n: i64, i: i64) -> RatFunc {
    assert!(0 <= i && i <= n, "theta needs 0 <= i <= n, got ({n}, {i})");
    if let Some(hit) = THETA_CACHE.lock().unwrap().get(&(n, i)) {
        return hit.clone();
    }
    let val = &(&qb(n + i + 2, 2 * i + 2) / &qb(n, i).pow(2)) * &delta(i, i);
    THETA_CACHE.lock().unwrap().insert((n, i), val.clone());
    val
}

/// Clasped tetrahedron value for weights (n, i, j); symmetric in i and j.
pub fn tet(n: i64, i: i64, j: i64) -> RatFunc {
    assert!(
        0 <= i && i <= n && 0 <= j && j <= n,
        "tet needs 0 <= i, j <= n, got ({n}, {i}, {j})"
    );
    if let Some(hit) = TET_CACHE.lock().unwrap().get(&(n, i, j)) {
        return hit.clone();
    }
    let th = theta(n, j);
    let mut acc = RatFunc::zero();
    for k in (i + j - n).max(0)..=i {
        let num = &qb(i, k).pow(2) * &(&qb(n - j, i - k) * &qb(n + j + 2, i - k));
        let den = &qb(2 * i + 1, k) * &qb(n, i - k).pow(2);
        let term = &(&num / &den) * &th;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    TET_CACHE.lock().unwrap().insert((n, i, j), acc.clone());
    acc
}

/// Recoupling coefficient between double-clasped labels: the weight with
/// which the (j, j)-labeled basis web appears when an (i, i)-labeled one is
/// patched over the flipped diagonal.
pub fn sixj_square(n: i64, i: i64, j: i64) -> RatFunc {
    let th = theta(n, j);
    &(&tet(n, i, j) * &delta(j, j)) / &th.pow(2)
}

/// Recoupling coefficient across an odd chord: relates the two single-clasp
/// patchings with neighbor labels s and t. Errors when the tetrahedron value
/// in its denominator vanishes.
pub fn sixj_mixed(n: i64, s: i64, t: i64) -> Result<RatFunc, SpiderError> {
    let den = &delta(n, 0) * &tet(n, s, t);
    if den.is_zero() {
        return Err(SpiderError::ZeroTet { n, s, t });
    }
    Ok(&(&theta(n, s) * &theta(n, t)) / &den)
}

/// Framing monomial of a full twist on an n-cable against a j-labeled double
/// clasp: v^(sign * (4(n^2+3n) - 6(j^2+2j))).
pub fn twist_coeff(n: i64, j: i64, sign: Sign) -> RatFunc {
    assert!(0 <= j && j <= n, "twist needs 0 <= j <= n, got ({n}, {j})");
    RatFunc::v_pow(sign.factor() * (4 * (n * n + 3 * n) - 6 * (j * j + 2 * j)))
}

/// Framing monomial of a full twist on the two legs of a j-labeled double
/// clasp alone: v^(sign * 6(j^2+2j)).
pub fn clasp_twist_coeff(j: i64, sign: Sign) -> RatFunc {
    assert!(j >= 0, "clasp twist needs j >= 0, got {j}");
    RatFunc::v_pow(sign.factor() * 6 * (j * j + 2 * j))
}

// ---- Verification routines used by the CLI and the acceptance gate ----

/// The (n+1) x (n+1) recoupling matrix F with F[j][i] = sixj_square(n, i, j).
pub fn recoupling_matrix(n: i64) -> Vec<Vec<RatFunc>> {
    (0..=n)
        .map(|j| (0..=n).map(|i| sixj_square(n, i, j)).collect())
        .collect()
}

/// Checks F^2 = I for the recoupling matrix at weight n.
pub fn recoupling_involution_holds(n: i64) -> bool {
    let f = recoupling_matrix(n);
    let m = (n + 1) as usize;
    for r in 0..m {
        for c in 0..m {
            let mut acc = RatFunc::zero();
            for l in 0..m {
                acc = &acc + &(&f[r][l] * &f[l][c]);
            }
            let want = if r == c { RatFunc::one() } else { RatFunc::zero() };
            if acc != want {
                return false;
            }
        }
    }
    true
}

/// Checks the transport identity tying the two recoupling coefficients
/// together:
///
/// theta(n,t)/delta(n,0) = sixj_mixed(n,s,t) * sixj_square(n,t,s) * theta(n,s)/delta(s,s).
///
/// The square coefficient carries source label t and target label s; with the
/// arguments the other way around the identity is false already at
/// (n,s,t) = (1,0,1).
pub fn proof_identity_holds(n: i64, s: i64, t: i64) -> Result<bool, SpiderError> {
    let lhs = &theta(n, t) / &delta(n, 0);
    let rhs = &(&sixj_mixed(n, s, t)? * &sixj_square(n, t, s))
        * &(&theta(n, s) / &delta(s, s));
    Ok(lhs == rhs)
}
