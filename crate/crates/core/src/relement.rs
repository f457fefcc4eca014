//! The free abelian group R generated by isomorphism classes of finite
//! disjoint unions of snake graphs, band graphs and single-edge graphs.
//!
//! An element is a formal sum of signed terms; each term is a multiset of
//! components. Equality is multiset equality of canonical encodings, and
//! addition cancels opposite-sign equal terms.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Band, EdgeGraph, Label, Sign, Snake};

/// One connected component of a term: a snake graph, a band graph or a
/// single-edge graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component<L: Label> {
    Snake(Snake<L>),
    Band(Band<L>),
    Edge(EdgeGraph<L>),
}

impl<L: Label> Component<L> {
    /// Canonical encoding of the isomorphism class.
    pub fn canonical(&self) -> String {
        match self {
            Component::Snake(g) => format!("s:{}", g.canonical_word()),
            Component::Band(b) => format!("o:{}", b.canonical_encoding()),
            Component::Edge(e) => format!("e:{}", e.label.describe()),
        }
    }

    pub fn tile_count(&self) -> usize {
        match self {
            Component::Snake(g) => g.d(),
            Component::Band(b) => b.d(),
            Component::Edge(_) => 0,
        }
    }
}

/// A term of an element of R: a sign and a disjoint union of components,
/// stored as a sorted multiset of canonical encodings alongside the
/// components themselves.
#[derive(Debug, Clone)]
pub struct Term<L: Label> {
    pub sign: Sign,
    pub components: Vec<Component<L>>,
}

impl<L: Label> Term<L> {
    pub fn new(sign: Sign, components: Vec<Component<L>>) -> Term<L> {
        Term { sign, components }
    }

    /// Canonical multiset key for the disjoint union (ignoring the sign).
    pub fn key(&self) -> Vec<String> {
        let mut k: Vec<String> = self.components.iter().map(|c| c.canonical()).collect();
        k.sort();
        k
    }
}

/// An element of the group R: a formal sum of terms. The zero element is
/// the empty sum.
#[derive(Debug, Clone, Default)]
pub struct RElement<L: Label> {
    terms: Vec<Term<L>>,
}

impl<L: Label> RElement<L> {
    pub fn zero() -> RElement<L> {
        RElement { terms: Vec::new() }
    }

    pub fn from_term(sign: Sign, components: Vec<Component<L>>) -> RElement<L> {
        RElement { terms: vec![Term::new(sign, components)] }
    }

    pub fn terms(&self) -> &[Term<L>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().is_empty()
    }

    /// Multiset of (key, net multiplicity), dropping zero multiplicities.
    fn reduced(&self) -> BTreeMap<Vec<String>, i64> {
        let mut m: BTreeMap<Vec<String>, i64> = BTreeMap::new();
        for t in &self.terms {
            *m.entry(t.key()).or_insert(0) += t.sign.0 as i64;
        }
        m.retain(|_, v| *v != 0);
        m
    }

    pub fn add(&self, other: &RElement<L>) -> RElement<L> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        RElement { terms }
    }

    pub fn negate(&self) -> RElement<L> {
        RElement {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.sign.flip(), t.components.clone()))
                .collect(),
        }
    }

    /// Disjoint union: the product distributing over the formal sum.
    pub fn union(&self, other: &RElement<L>) -> RElement<L> {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let mut comps = a.components.clone();
                comps.extend(b.components.iter().cloned());
                terms.push(Term::new(a.sign * b.sign, comps));
            }
        }
        RElement { terms }
    }
}

impl<L: Label> PartialEq for RElement<L> {
    fn eq(&self, other: &Self) -> bool {
        self.reduced() == other.reduced()
    }
}

impl<L: Label> Eq for RElement<L> {}

impl<L: Label> fmt::Display for RElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let red = self.reduced();
        if red.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, mult) in red {
            let sign = if mult >= 0 { "+" } else { "-" };
            let mag = mult.abs();
            if !first || mult < 0 {
                write!(f, " {sign} ")?;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", key.join(" | "))?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{SnakeGraph, Step};

    fn snake(word: &str) -> Component<()> {
        let steps: Vec<Step> = word.chars().map(|c| Step::from_letter(c).unwrap()).collect();
        Component::Snake(SnakeGraph::from_steps(&steps))
    }

    #[test]
    fn cancellation() {
        let g = RElement::from_term(Sign::PLUS, vec![snake("RU")]);
        assert!(g.add(&g.negate()).is_zero());
        assert_eq!(g.negate().negate(), g);
        assert_eq!(g.add(&RElement::zero()), g);
    }

    #[test]
    fn reversal_terms_cancel() {
        // [RU] and [UR] are isomorphic, so their difference is zero.
        let a = RElement::from_term(Sign::PLUS, vec![snake("RU")]);
        let b = RElement::from_term(Sign::PLUS, vec![snake("UR")]);
        assert!(a.add(&b.negate()).is_zero());
    }

    #[test]
    fn union_distributes_signs() {
        let a = RElement::from_term(Sign::MINUS, vec![snake("R")]);
        let b = RElement::from_term(Sign::MINUS, vec![snake("U")]);
        let u = a.union(&b);
        assert_eq!(u.terms().len(), 1);
        assert_eq!(u.terms()[0].sign, Sign::PLUS);
        assert_eq!(u.terms()[0].components.len(), 2);
    }
}
