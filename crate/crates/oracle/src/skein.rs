//! Formal linear combinations of web diagrams with rational-function
//! coefficients, collected up to boundary-anchored diagram isomorphism.

use std::collections::BTreeMap;

use a2rep_core::RatFunc;

use crate::diagram::WebDiagram;

/// A finite sum of distinct diagrams. Terms are keyed by canonical encoding,
/// kept sorted for deterministic iteration, and zero coefficients are pruned.
#[derive(Debug, Clone, Default)]
pub struct SkeinElement {
    terms: BTreeMap<String, (RatFunc, WebDiagram)>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        SkeinElement::default()
    }

    pub fn from_term(coeff: RatFunc, diagram: WebDiagram) -> Self {
        let mut s = SkeinElement::zero();
        s.add_term(coeff, diagram);
        s
    }

    pub fn add_term(&mut self, coeff: RatFunc, diagram: WebDiagram) {
        if coeff.is_zero() {
            return;
        }
        let key = diagram.canonical_key();
        match self.terms.get_mut(&key) {
            Some((c, _)) => {
                let sum = &*c + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(key, (coeff, diagram));
            }
        }
    }

    pub fn add(&mut self, other: SkeinElement) {
        for (_, (c, d)) in other.terms {
            self.add_term(c, d);
        }
    }

    pub fn scale(&mut self, s: &RatFunc) {
        if s.is_zero() {
            self.terms.clear();
            return;
        }
        for (c, _) in self.terms.values_mut() {
            *c = &*c * s;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RatFunc, &WebDiagram)> {
        self.terms.values().map(|(c, d)| (c, d))
    }

    /// For a fully reduced closed element: the scalar it equals. Returns
    /// `None` when any surviving diagram is non-empty.
    pub fn scalar(&self) -> Option<RatFunc> {
        if self.terms.is_empty() {
            return Some(RatFunc::zero());
        }
        if self.terms.len() == 1 {
            let (c, d) = self.terms.values().next().unwrap();
            if d.is_empty() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Structural equality of collected elements: same diagrams, same
    /// coefficients.
    pub fn equals(&self, other: &SkeinElement) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms
            .iter()
            .zip(other.terms.iter())
            .all(|((ka, (ca, _)), (kb, (cb, _)))| ka == kb && ca == cb)
    }
}
