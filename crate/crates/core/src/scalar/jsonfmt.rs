//! JSON shape for scalars: a rational function serializes as
//! `{"num": {"<exp>": "<p>/<q>", ...}, "den": {...}}` with exponents as
//! decimal string keys in ascending order and coefficients always written
//! with an explicit denominator. Parsing accepts plain integers too.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::Rational;

/// "p/q" with the denominator always spelled out.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts "p/q" or a bare integer "p".
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

struct PolyMap<'a>(&'a LaurentPoly);

impl Serialize for PolyMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.terms().len()))?;
        for (e, c) in self.0.terms() {
            map.serialize_entry(&e.to_string(), &rational_string(c))?;
        }
        map.end()
    }
}

struct PolyMapde;

impl<'de> Visitor<'de> for PolyMapde {
    type Value = LaurentPoly;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "a map from exponent strings to rational strings")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
        let mut terms = Vec::new();
        while let Some((k, v)) = access.next_entry::<String, String>()? {
            let e: i64 = k
                .trim()
                .parse()
                .map_err(|err| serde::de::Error::custom(format!("bad exponent {k:?}: {err}")))?;
            let c = parse_rational(&v).map_err(serde::de::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

fn deserialize_poly<'de, D: Deserializer<'de>>(d: D) -> Result<LaurentPoly, D::Error> {
    d.deserialize_map(PolyMapde)
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", &PolyMap(self.num()))?;
        st.serialize_field("den", &PolyMap(self.den()))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(deserialize_with = "deserialize_poly")]
            num: LaurentPoly,
            #[serde(deserialize_with = "deserialize_poly")]
            den: LaurentPoly,
        }
        let raw = Raw::deserialize(d)?;
        if raw.den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator polynomial"));
        }
        // Re-canonicalize: serialized input need not be reduced.
        Ok(RatFunc::new(raw.num, raw.den))
    }
}
