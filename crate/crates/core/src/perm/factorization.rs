use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

use super::cycle::{Cycle, Permutation};
use super::typevec::{HeadTailProfile, TypeVector};

/// An ordered product of cycles with ambient size `n`.  Factors are stored
/// left to right as written; the rightmost factor acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    n: usize,
    factors: Vec<Cycle>,
}

impl Factorization {
    pub fn new(n: usize, factors: Vec<Cycle>) -> Result<Self> {
        for c in &factors {
            if c.max_element() > n {
                return Err(Error::ElementOutOfRange {
                    element: c.max_element(),
                    n,
                });
            }
        }
        Ok(Factorization { n, factors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Cycle] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The composite permutation; the empty product is the identity.
    pub fn evaluate(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for c in self.factors.iter().rev() {
            p.apply_cycle(c);
        }
        p
    }

    pub fn type_of(&self) -> TypeVector {
        let mut tv = TypeVector::zero();
        for c in &self.factors {
            tv.increment(c.len());
        }
        tv
    }

    /// True iff this evaluates to (1 2 ... n) and the type weight meets the
    /// lower bound n-1 with equality.
    pub fn is_minimal_ncycle_factorization(&self) -> bool {
        self.type_of().weight() == self.n.saturating_sub(1) && self.evaluate().is_n_cycle()
    }

    /// Factor multiset, in sorted order.
    pub fn factor_multiset(&self) -> Vec<Cycle> {
        let mut m = self.factors.clone();
        m.sort();
        m
    }

    /// Lexicographically least word in the commutation class, under the
    /// (length, element list) order on cycles.  Greedy: repeatedly emit the
    /// least remaining factor that commutes with everything remaining to
    /// its left.
    pub fn canonical_form(&self) -> Factorization {
        let mut remaining: Vec<Cycle> = self.factors.clone();
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..remaining.len() {
                if remaining[..i].iter().all(|c| commute(c, &remaining[i])) {
                    match best {
                        Some(b) if remaining[b] <= remaining[i] => {}
                        _ => best = Some(i),
                    }
                }
            }
            let i = best.expect("position 0 is always movable");
            out.push(remaining.remove(i));
        }
        Factorization {
            n: self.n,
            factors: out,
        }
    }

    /// Same commutation class.
    pub fn equivalent(&self, other: &Factorization) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }

    /// Heads (factors movable to the leftmost position), tails (movable to
    /// the rightmost position) and their length profile.
    ///
    /// Requires a minimal factorization of the n-cycle.
    pub fn heads_and_tails(&self) -> Result<(BTreeSet<Cycle>, BTreeSet<Cycle>, HeadTailProfile)> {
        if !self.is_minimal_ncycle_factorization() {
            return Err(Error::NotMinimalNCycle(self.n));
        }
        let mut heads = BTreeSet::new();
        let mut tails = BTreeSet::new();
        for i in 0..self.factors.len() {
            if self.factors[..i].iter().all(|c| commute(c, &self.factors[i])) {
                heads.insert(self.factors[i].clone());
            }
            if self.factors[i + 1..].iter().all(|c| commute(c, &self.factors[i])) {
                tails.insert(self.factors[i].clone());
            }
        }
        let mut profile = HeadTailProfile::default();
        for c in &heads {
            profile.add_head(c.len());
        }
        for c in &tails {
            profile.add_tail(c.len());
        }
        Ok((heads, tails, profile))
    }
}

/// Semantic commutation test: the two products are equal as permutations.
pub fn commute(a: &Cycle, b: &Cycle) -> bool {
    let n = a.max_element().max(b.max_element());
    (1..=n).all(|k| a.apply(b.apply(k)) == b.apply(a.apply(k)))
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.factors {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::text::parse_factorization;

    fn fact(s: &str, n: usize) -> Factorization {
        parse_factorization(s, n).unwrap()
    }

    #[test]
    fn section1_example_evaluates_to_4_cycle() {
        let f = fact("(3 4)(1 2)(2 4)", 4);
        assert!(f.evaluate().is_n_cycle());
        assert_eq!(f.evaluate().cycle_notation(), "(1 2 3 4)");
    }

    #[test]
    fn fig2_product_evaluates_to_4_cycle() {
        let f = fact("(3 4)(1 2 4)", 4);
        assert!(f.evaluate().is_n_cycle());
    }

    #[test]
    fn empty_product_is_identity() {
        let f = Factorization::new(3, vec![]).unwrap();
        assert_eq!(f.evaluate(), Permutation::identity(3));
        assert_eq!(f.type_of(), TypeVector::zero());
    }

    #[test]
    fn type_of_counts_by_length() {
        let f = fact("(3 4)(1 2)(2 4)", 4);
        assert_eq!(f.type_of(), TypeVector::from_counts([(2, 3)]));
        let g = fact("(4 5)(2 3 5)(1 5 6 8)(6 7)", 8);
        assert_eq!(g.type_of(), TypeVector::from_counts([(2, 2), (3, 1), (4, 1)]));
    }

    #[test]
    fn minimality() {
        assert!(fact("(3 4)(1 2)(2 4)", 4).is_minimal_ncycle_factorization());
        assert!(!fact("(1 2)(1 2)(1 2)", 2).is_minimal_ncycle_factorization());
        assert!(fact("(1 3)(1 2)", 3).is_minimal_ncycle_factorization());
        // weight matches but product is not the n-cycle
        assert!(!fact("(1 2)(1 2)", 3).is_minimal_ncycle_factorization());
    }

    #[test]
    fn commute_is_semantic() {
        let c = |s: &[usize]| Cycle::new(s).unwrap();
        assert!(commute(&c(&[1, 2]), &c(&[3, 4])));
        assert!(!commute(&c(&[1, 2]), &c(&[2, 4])));
        let s = c(&[1, 2, 3]);
        assert!(commute(&s, &s));
        // powers of a common cycle commute despite shared support
        assert!(commute(&c(&[1, 2, 3]), &c(&[1, 3, 2])));
    }

    #[test]
    fn equivalent_factorizations_share_canonical_form() {
        let f1 = fact("(3 4)(1 2)(2 4)", 4);
        let f2 = fact("(1 2)(3 4)(2 4)", 4);
        assert_eq!(f1.canonical_form(), f2.canonical_form());
        assert!(f1.equivalent(&f2));
        assert_eq!(f1.canonical_form().evaluate(), f1.evaluate());
    }

    #[test]
    fn canonical_form_fixed_points() {
        let single = fact("(1 2)", 2);
        assert_eq!(single.canonical_form(), single);
        let rigid = fact("(1 3)(1 2)", 3);
        assert_eq!(rigid.canonical_form(), rigid);
    }

    #[test]
    fn inequivalent_words_detected() {
        let f1 = fact("(1 3)(1 2)", 3);
        let f2 = fact("(2 3)(1 3)", 3);
        assert!(!f1.equivalent(&f2));
        assert!(f1.equivalent(&f1));
    }

    #[test]
    fn heads_and_tails_of_section1_example() {
        let f = fact("(3 4)(1 2)(2 4)", 4);
        let (heads, tails, profile) = f.heads_and_tails().unwrap();
        let c = |s: &[usize]| Cycle::new(s).unwrap();
        assert_eq!(heads, BTreeSet::from([c(&[1, 2]), c(&[3, 4])]));
        assert_eq!(tails, BTreeSet::from([c(&[2, 4])]));
        assert_eq!(profile.h_count(2), 2);
        assert_eq!(profile.t_count(2), 1);
    }

    #[test]
    fn heads_and_tails_small_cases() {
        let f = fact("(1 3)(1 2)", 3);
        let (heads, tails, _) = f.heads_and_tails().unwrap();
        let c = |s: &[usize]| Cycle::new(s).unwrap();
        assert_eq!(heads, BTreeSet::from([c(&[1, 3])]));
        assert_eq!(tails, BTreeSet::from([c(&[1, 2])]));

        let single = fact("(1 2)", 2);
        let (heads, tails, profile) = single.heads_and_tails().unwrap();
        assert_eq!(heads, tails);
        assert_eq!(profile.h_count(2), 1);
        assert_eq!(profile.t_count(2), 1);
    }

    #[test]
    fn heads_and_tails_requires_minimal() {
        let f = fact("(1 2)(1 2)(1 2)", 2);
        assert_eq!(f.heads_and_tails().unwrap_err(), Error::NotMinimalNCycle(2));
    }
}
