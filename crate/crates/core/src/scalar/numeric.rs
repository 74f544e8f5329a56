//! Floating-point evaluation of exact scalars at a complex point.

use num_complex::Complex64;

use super::{LaurentPoly, RatFunc, ScalarError};

/// Evaluates a Laurent polynomial at v, returning the value together with the
/// sum of |coeff| * |v|^e used as a conditioning scale for pole detection.
fn eval_laurent(p: &LaurentPoly, v: Complex64) -> (Complex64, f64) {
    let mut value = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for (e, c) in p.terms() {
        let cf = rational_to_f64(c);
        let pw = v.powi(*e as i32);
        value += pw * cf;
        scale += pw.norm() * cf.abs();
    }
    (value, scale)
}

fn rational_to_f64(r: &super::Rational) -> f64 {
    // Exact-to-float via string parsing would lose big values; ratio of
    // rounded big ints keeps the magnitude right for the sizes in play.
    let n = bigint_to_f64(r.numer());
    let d = bigint_to_f64(r.denom());
    n / d
}

fn bigint_to_f64(b: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::INFINITY)
}

/// Evaluates num/den at v. Fails with [`ScalarError::Pole`] when the
/// denominator vanishes there (relative to its coefficient scale).
pub fn eval_ratfunc(f: &RatFunc, v: Complex64) -> Result<Complex64, ScalarError> {
    if v.norm() == 0.0 {
        // v = 0 is outside the Laurent domain whenever negative powers occur.
        return Err(ScalarError::Pole);
    }
    let (num, _) = eval_laurent(f.num(), v);
    let (den, den_scale) = eval_laurent(f.den(), v);
    if den.norm() <= 1e-10 * den_scale.max(1e-300) {
        return Err(ScalarError::Pole);
    }
    Ok(num / den)
}
