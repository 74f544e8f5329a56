//! Sparse Laurent polynomials in one variable v with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat, Rational};

/// A Laurent polynomial in v over Q.
///
/// Invariants: `terms` is sorted by strictly ascending exponent and holds no
/// zero coefficient. The zero polynomial is the empty term list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(rat(1), 0)
    }

    /// c * v^e (the zero polynomial when c = 0).
    pub fn monomial(c: Rational, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// v^e.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(rat(1), e)
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging and
    /// dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut acc: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in pairs {
            if c.is_zero() {
                continue;
            }
            let entry = acc.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                acc.remove(&e);
            }
        }
        LaurentPoly { terms: acc.into_iter().collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    /// Lowest exponent; None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    /// Highest exponent; None for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, e: i64) -> Rational {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Multiplies by v^d.
    pub fn shifted(&self, d: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + d, c.clone())).collect(),
        }
    }

    /// Multiplies every coefficient by c.
    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// The bar involution v -> v^-1.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i64, Rational)> =
            self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a rational point (used by tests; v = 1 recovers classical
    /// limits). Negative exponents require t != 0.
    pub fn eval_rational(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                pow_rat(t, *e as u64)
            } else {
                pow_rat(&t.recip(), (-e) as u64)
            };
            acc += c * p;
        }
        acc
    }

    /// Exact division; None when `self` is not a multiple of `d`.
    ///
    /// Both operands are treated as Laurent polynomials, so the quotient may
    /// carry the difference of the leading shifts.
    pub fn checked_div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Reduce to ordinary polynomial division on the shifted parts.
        let a_shift = self.min_exp().unwrap();
        let d_shift = d.min_exp().unwrap();
        let a = self.shifted(-a_shift);
        let b = d.shifted(-d_shift);
        let (q, r) = poly_div_rem(&a, &b);
        if r.is_zero() {
            Some(q.shifted(a_shift - d_shift))
        } else {
            None
        }
    }

    /// Gcd as ordinary polynomials of the unit-normalized parts, returned with
    /// lowest exponent 0 and trailing coefficient 1. v^k units are quotiented
    /// away, so gcd of two monomials is 1.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return normalize_trailing(other.shifted(-other.min_exp().unwrap_or(0)));
        }
        if other.is_zero() {
            return normalize_trailing(self.shifted(-self.min_exp().unwrap_or(0)));
        }
        let a = int_primitive(&self.shifted(-self.min_exp().unwrap()));
        let b = int_primitive(&other.shifted(-other.min_exp().unwrap()));
        let g = int_poly_gcd(a, b);
        let poly = LaurentPoly::from_terms(
            g.into_iter()
                .enumerate()
                .map(|(e, c)| (e as i64, Rational::from_integer(c))),
        );
        normalize_trailing(poly)
    }
}

/// Scales so the lowest-exponent coefficient is 1 (identity on zero).
fn normalize_trailing(p: LaurentPoly) -> LaurentPoly {
    match p.terms.first() {
        None => p,
        Some((_, c)) => {
            let inv = c.recip();
            p.scaled(&inv)
        }
    }
}

fn pow_rat(t: &Rational, mut k: u64) -> Rational {
    let mut base = t.clone();
    let mut acc = Rational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Quotient and remainder of ordinary polynomial division (inputs must have
/// min_exp >= 0).
fn poly_div_rem(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    debug_assert!(a.min_exp().unwrap_or(0) >= 0 && b.min_exp().unwrap_or(0) >= 0);
    let db = b.max_exp().expect("division by zero polynomial");
    let lead_b = b.coeff(db);
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero();
    while !rem.is_zero() && rem.max_exp().unwrap() >= db {
        let da = rem.max_exp().unwrap();
        let c = rem.coeff(da) / &lead_b;
        let t = LaurentPoly::monomial(c, da - db);
        rem = &rem - &(&t * b);
        quot = &quot + &t;
    }
    (quot, rem)
}

/// Clears denominators and removes integer content; dense coefficients from
/// exponent 0 upward. Input must have min_exp = 0 (or be zero).
fn int_primitive(p: &LaurentPoly) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let deg = p.max_exp().unwrap() as usize;
    let mut lcm = BigInt::one();
    for (_, c) in p.terms() {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let mut dense = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.terms() {
        dense[*e as usize] = c.numer() * (&lcm / c.denom());
    }
    let mut content = BigInt::zero();
    for c in &dense {
        content = num_integer::gcd(content, c.clone());
    }
    if !content.is_zero() && !content.is_one() {
        for c in dense.iter_mut() {
            *c = &*c / &content;
        }
    }
    dense
}

fn deg_of(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    match deg_of(&p) {
        None => Vec::new(),
        Some(d) => {
            p.truncate(d + 1);
            p
        }
    }
}

fn primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &p {
        content = num_integer::gcd(content, c.clone());
    }
    if !content.is_zero() && !content.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &content;
        }
    }
    p
}

/// Primitive pseudo-remainder sequence gcd over Z[x]; result is primitive.
fn int_poly_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    a = trim(a);
    b = trim(b);
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(trim(r));
    }
    if let Some(d) = deg_of(&a) {
        if a[d].signum() == BigInt::from(-1) {
            for c in a.iter_mut() {
                *c = -&*c;
            }
        }
    }
    primitive_part(a)
}

/// Pseudo-remainder: rem(lc(b)^m * a, b) over Z for some m, which is all the
/// primitive PRS needs since the primitive part is taken right after.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = deg_of(b).expect("pseudo_rem by zero");
    let lb = b[db].clone();
    let mut r = a.to_vec();
    loop {
        let dr = match deg_of(&r) {
            None => return Vec::new(),
            Some(d) => d,
        };
        if dr < db {
            return trim(r);
        }
        let lr = r[dr].clone();
        // r := lb * r - lr * x^(dr-db) * b
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for i in 0..=db {
            r[dr - db + i] = &r[dr - db + i] - &lr * &b[i];
        }
        r = trim(r);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        // Merge two sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &rhs.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ea, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().cloned());
        LaurentPoly { terms: out }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea + eb;
                let entry = acc.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    acc.remove(&e);
                }
            }
        }
        LaurentPoly { terms: acc.into_iter().collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest exponent first, the way humans read them.
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            match (*e, coeff_is_one) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{}*v", mag)?,
                (_, true) => write!(f, "v^{}", e)?,
                (_, false) => write!(f, "{}*v^{}", mag, e)?,
            }
        }
        Ok(())
    }
}
