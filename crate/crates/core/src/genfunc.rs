//! Exact truncated power series in the variables x_j (marking j-cycle
//! factors, weight j-1), u_j (marking heads) and v_j (marking tails), and
//! the fixed-point recursions whose coefficients count inequivalent
//! minimal factorizations, plain or refined by head/tail profile.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::perm::{HeadTailProfile, TypeVector};
use crate::{Coeff, Int};

/// A monomial in x_j, u_j, v_j with j >= 2; exponent vectors are indexed
/// by j-2 and kept free of trailing zeros so equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    u: Vec<u32>,
    v: Vec<u32>,
}

fn bump(exps: &mut Vec<u32>, j: usize, by: u32) {
    assert!(j >= 2, "variable index must be at least 2");
    if exps.len() < j - 1 {
        exps.resize(j - 1, 0);
    }
    exps[j - 2] += by;
}

fn trim(exps: &mut Vec<u32>) {
    while exps.last() == Some(&0) {
        exps.pop();
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn x_var(j: usize) -> Self {
        let mut m = Monomial::default();
        bump(&mut m.x, j, 1);
        m
    }

    pub fn u_var(j: usize) -> Self {
        let mut m = Monomial::default();
        bump(&mut m.u, j, 1);
        m
    }

    pub fn v_var(j: usize) -> Self {
        let mut m = Monomial::default();
        bump(&mut m.v, j, 1);
        m
    }

    pub fn from_alpha(alpha: &TypeVector) -> Self {
        let mut m = Monomial::default();
        for (j, c) in alpha.iter() {
            bump(&mut m.x, j, c as u32);
        }
        m
    }

    /// x exponents from `alpha`, u exponents from the head counts, v
    /// exponents from the tail counts.
    pub fn with_profile(alpha: &TypeVector, profile: &HeadTailProfile) -> Self {
        let mut m = Monomial::from_alpha(alpha);
        for (j, c) in profile.heads() {
            bump(&mut m.u, j, c as u32);
        }
        for (j, c) in profile.tails() {
            bump(&mut m.v, j, c as u32);
        }
        m
    }

    /// Weight of the x part: x_j carries weight j-1, u and v carry none.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1) * e as usize)
            .sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let join = |a: &[u32], b: &[u32]| {
            let mut out = vec![0; a.len().max(b.len())];
            for (i, &e) in a.iter().enumerate() {
                out[i] += e;
            }
            for (i, &e) in b.iter().enumerate() {
                out[i] += e;
            }
            out
        };
        Monomial {
            x: join(&self.x, &other.x),
            u: join(&self.u, &other.u),
            v: join(&self.v, &other.v),
        }
    }

    pub fn swap_uv(&self) -> Monomial {
        Monomial {
            x: self.x.clone(),
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }

    pub fn drop_uv(&self) -> Monomial {
        Monomial {
            x: self.x.clone(),
            u: Vec::new(),
            v: Vec::new(),
        }
    }

    pub fn alpha(&self) -> TypeVector {
        TypeVector::from_counts(
            self.x
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i + 2, e as usize)),
        )
    }

    pub fn profile(&self) -> HeadTailProfile {
        let mut p = HeadTailProfile::default();
        for (i, &e) in self.u.iter().enumerate() {
            for _ in 0..e {
                p.add_head(i + 2);
            }
        }
        for (i, &e) in self.v.iter().enumerate() {
            for _ in 0..e {
                p.add_tail(i + 2);
            }
        }
        p
    }

    /// True iff every u_j and v_j exponent is bounded by the matching x_j
    /// exponent (a profile never exceeds the type).
    pub fn is_profile_bounded(&self) -> bool {
        let le = |a: &[u32], b: &[u32]| {
            a.iter()
                .enumerate()
                .all(|(i, &e)| e <= b.get(i).copied().unwrap_or(0))
        };
        le(&self.u, &self.x) && le(&self.v, &self.x)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, exps) in [("x", &self.x), ("u", &self.u), ("v", &self.v)] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{}{}", name, i + 2)),
                    _ => parts.push(format!("{}{}^{}", name, i + 2, e)),
                }
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Exact power series truncated at a fixed total x-weight; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries<C: Coeff> {
    trunc: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MultiSeries<C> {
    pub fn zero(trunc: usize) -> Self {
        MultiSeries {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::term(trunc, Monomial::one(), C::one())
    }

    pub fn term(trunc: usize, mono: Monomial, coeff: C) -> Self {
        let mut s = Self::zero(trunc);
        s.insert(mono, coeff);
        s
    }

    pub fn x(j: usize, trunc: usize) -> Self {
        Self::term(trunc, Monomial::x_var(j), C::one())
    }

    pub fn u(j: usize, trunc: usize) -> Self {
        Self::term(trunc, Monomial::u_var(j), C::one())
    }

    pub fn v(j: usize, trunc: usize) -> Self {
        Self::term(trunc, Monomial::v_var(j), C::one())
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, mut mono: Monomial, coeff: C) {
        if mono.weight() > self.trunc || coeff.is_zero() {
            return;
        }
        trim(&mut mono.x);
        trim(&mut mono.u);
        trim(&mut mono.v);
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, mono: &Monomial) -> C {
        self.terms.get(mono).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of the pure x monomial of `alpha`.
    pub fn coefficient_alpha(&self, alpha: &TypeVector) -> C {
        self.coefficient(&Monomial::from_alpha(alpha))
    }

    pub fn coefficient_profile(&self, alpha: &TypeVector, profile: &HeadTailProfile) -> C {
        self.coefficient(&Monomial::with_profile(alpha, profile))
    }

    /// All terms whose x part equals `alpha`, keyed by the u/v profile.
    pub fn profile_slice(&self, alpha: &TypeVector) -> BTreeMap<HeadTailProfile, C> {
        self.terms
            .iter()
            .filter(|(m, _)| m.alpha() == *alpha)
            .map(|(m, c)| (m.profile(), c.clone()))
            .collect()
    }

    pub fn swap_uv(&self) -> Self {
        let mut out = Self::zero(self.trunc);
        for (m, c) in &self.terms {
            out.insert(m.swap_uv(), c.clone());
        }
        out
    }

    /// Substitutes u_j = v_j = 1 for every j.
    pub fn subst_uv_one(&self) -> Self {
        let mut out = Self::zero(self.trunc);
        for (m, c) in &self.terms {
            out.insert(m.drop_uv(), c.clone());
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(self.trunc);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(
            self.trunc, other.trunc,
            "series truncation weights must match"
        );
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "truncation_weight": self.trunc,
            "terms": self
                .terms
                .iter()
                .map(|(m, c)| serde_json::json!({
                    "monomial": m.to_string(),
                    "coeff": format!("{c}"),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

impl<C: Coeff> Add for &MultiSeries<C> {
    type Output = MultiSeries<C>;

    fn add(self, rhs: Self) -> MultiSeries<C> {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &MultiSeries<C> {
    type Output = MultiSeries<C>;

    fn sub(self, rhs: Self) -> MultiSeries<C> {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            let mut neg = C::zero();
            neg -= c.clone();
            out.insert(m.clone(), neg);
        }
        out
    }
}

impl<C: Coeff> Mul for &MultiSeries<C> {
    type Output = MultiSeries<C>;

    fn mul(self, rhs: Self) -> MultiSeries<C> {
        self.check_compatible(rhs);
        let mut out = MultiSeries::zero(self.trunc);
        for (ma, ca) in &self.terms {
            let wa = ma.weight();
            for (mb, cb) in &rhs.terms {
                if wa + mb.weight() > self.trunc {
                    continue;
                }
                out.insert(ma.times(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for MultiSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by_key(|(m, _)| (m.weight(), (*m).clone()));
        for (i, (m, c)) in sorted.into_iter().enumerate() {
            let coeff = format!("{c}");
            let (sign, coeff) = match coeff.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff),
            };
            if i == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mono = m.to_string();
            match (coeff.as_str(), mono.as_str()) {
                (_, "1") => write!(f, "{coeff}")?,
                ("1", _) => write!(f, "{mono}")?,
                _ => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Highest variable index worth tracking at truncation `w`: x_j has
/// weight j-1.
fn jmax(w: usize) -> usize {
    w + 1
}

/// The counting series: fixed point of xi = 1 + x_2 xi^3 + x_3 xi^5 + ...
/// The coefficient of the monomial of `alpha` is the number of
/// inequivalent minimal factorizations of that type.
pub fn xi_series<C: Coeff>(w: usize) -> MultiSeries<C> {
    let one = MultiSeries::one(w);
    let mut xi = one.clone();
    for _ in 0..=w {
        let mut next = one.clone();
        for j in 2..=jmax(w) {
            next = &next + &(&MultiSeries::x(j, w) * &xi.pow(2 * j - 1));
        }
        xi = next;
    }
    xi
}

/// Joint fixed point of f = 1 + sum_j x_j (f^j - 1 + v_j) fhat^{j-1} with
/// fhat the u<->v swap of f.  In f the u variables mark heads not counting
/// the top vertex and the v variables mark tails.
pub fn f_series<C: Coeff>(w: usize) -> (MultiSeries<C>, MultiSeries<C>) {
    let one = MultiSeries::one(w);
    let mut f = one.clone();
    for _ in 0..=w {
        let fh = f.swap_uv();
        let mut next = one.clone();
        for j in 2..=jmax(w) {
            let inner = &(&f.pow(j) - &one) + &MultiSeries::v(j, w);
            next = &next + &(&MultiSeries::x(j, w) * &(&inner * &fh.pow(j - 1)));
        }
        f = next;
    }
    let fh = f.swap_uv();
    (f, fh)
}

/// Profile-refined counting series: the coefficient of
/// x^alpha u^h v^t is the number of classes of type alpha with head
/// profile h and tail profile t.
///
/// Both closed forms, g = f - sum_j x_j (1 - u_j) f^j and
/// g = f fhat - sum_j x_j (f fhat)^j, are computed and must agree.  They
/// mark the one-vertex tree -- whose single vertex is simultaneously a
/// head and a tail -- with u_j + v_j - 1 instead of the joint marker
/// u_j v_j, so the difference x_j (1 - u_j)(1 - v_j) is added back for
/// every singleton type.
pub fn g_series<C: Coeff>(w: usize) -> MultiSeries<C> {
    let (g, alt) = g_series_forms(w);
    assert_eq!(g, alt, "the two closed forms must agree");
    g
}

/// Both closed forms of the profile series, each with the singleton
/// correction applied; they must agree coefficient-wise.
pub fn g_series_forms<C: Coeff>(w: usize) -> (MultiSeries<C>, MultiSeries<C>) {
    let one = MultiSeries::one(w);
    let (f, fh) = f_series::<C>(w);

    let mut g1 = f.clone();
    for j in 2..=jmax(w) {
        let marked = &one - &MultiSeries::u(j, w);
        g1 = &g1 - &(&MultiSeries::x(j, w) * &(&marked * &f.pow(j)));
    }

    let ffh = &f * &fh;
    let mut g2 = ffh.clone();
    for j in 2..=jmax(w) {
        g2 = &g2 - &(&MultiSeries::x(j, w) * &ffh.pow(j));
    }

    let mut correction = MultiSeries::zero(w);
    for j in 2..=jmax(w) {
        let cu = &one - &MultiSeries::u(j, w);
        let cv = &one - &MultiSeries::v(j, w);
        correction = &correction + &(&MultiSeries::x(j, w) * &(&cu * &cv));
    }
    (&g1 + &correction, &g2 + &correction)
}

/// Alternating coefficient sum at weight n against the n-th Catalan
/// number; the two returned values must be equal.
pub fn catalan_check(n: usize, xi: &MultiSeries<Int>) -> Result<(Int, Int)> {
    if n < 1 || n > xi.truncation() {
        return Err(Error::ExceedsTruncation(n, xi.truncation()));
    }
    let mut lhs = Int::from(0);
    for alpha in TypeVector::all_with_weight(n) {
        let c = xi.coefficient_alpha(&alpha);
        if (alpha.size() + n) % 2 == 0 {
            lhs += c;
        } else {
            lhs -= c;
        }
    }
    let rhs = binomial(Int::from(2 * n), Int::from(n)) / Int::from(n + 1);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{count_by_profile, count_trees};

    type S = MultiSeries<Int>;

    fn a(counts: &[(usize, usize)]) -> TypeVector {
        TypeVector::from_counts(counts.iter().copied())
    }

    #[test]
    fn arithmetic_truncates() {
        let s = &S::one(1) + &S::x(2, 1);
        let sq = &s * &s;
        let mut expected = S::one(1);
        expected.insert(Monomial::x_var(2), Int::from(2));
        assert_eq!(sq, expected);
        assert_eq!(&sq * &S::one(1), sq);
    }

    #[test]
    fn binomial_cube() {
        let s = &S::one(3) + &S::x(2, 3);
        let cube = s.pow(3);
        assert_eq!(cube.coefficient_alpha(&TypeVector::zero()), Int::from(1));
        assert_eq!(cube.coefficient_alpha(&a(&[(2, 1)])), Int::from(3));
        assert_eq!(cube.coefficient_alpha(&a(&[(2, 2)])), Int::from(3));
        assert_eq!(cube.coefficient_alpha(&a(&[(2, 3)])), Int::from(1));
    }

    #[test]
    fn xi_matches_tree_counts() {
        let xi = xi_series::<Int>(4);
        assert_eq!(xi.coefficient_alpha(&a(&[(2, 1)])), Int::from(1));
        assert_eq!(xi.coefficient_alpha(&a(&[(2, 2)])), Int::from(3));
        assert_eq!(xi.coefficient_alpha(&a(&[(2, 3)])), Int::from(12));
        assert_eq!(xi.coefficient_alpha(&a(&[(2, 1), (3, 1)])), Int::from(8));
        for w in 1..=4 {
            for alpha in TypeVector::all_with_weight(w) {
                assert_eq!(xi.coefficient_alpha(&alpha), count_trees(&alpha));
            }
        }
    }

    #[test]
    fn catalan_small_values() {
        let xi = xi_series::<Int>(5);
        assert_eq!(catalan_check(1, &xi).unwrap(), (Int::from(1), Int::from(1)));
        assert_eq!(catalan_check(3, &xi).unwrap(), (Int::from(5), Int::from(5)));
        assert_eq!(
            catalan_check(5, &xi).unwrap(),
            (Int::from(42), Int::from(42))
        );
        assert!(catalan_check(6, &xi).is_err());
    }

    #[test]
    fn f_base_cases() {
        let (f0, _) = f_series::<Int>(0);
        assert_eq!(f0, S::one(0));
        let (f, fh) = f_series::<Int>(2);
        assert_eq!(f.swap_uv(), fh);
        // single transposition: one tail, no head below the top vertex
        assert_eq!(
            f.coefficient(&Monomial::x_var(2).times(&Monomial::v_var(2))),
            Int::from(1)
        );
        assert_eq!(f.coefficient(&Monomial::x_var(2)), Int::from(0));
    }

    #[test]
    fn g_single_transposition_is_head_and_tail() {
        let g = g_series::<Int>(2);
        let x2u2v2 = Monomial::x_var(2)
            .times(&Monomial::u_var(2))
            .times(&Monomial::v_var(2));
        assert_eq!(g.coefficient(&x2u2v2), Int::from(1));
        assert_eq!(g.coefficient(&Monomial::x_var(2)), Int::from(0));
        assert_eq!(
            g.coefficient(&Monomial::x_var(2).times(&Monomial::u_var(2))),
            Int::from(0)
        );
    }

    #[test]
    fn g_matches_profile_counts() {
        let g = g_series::<Int>(3);
        for w in 1..=3 {
            for alpha in TypeVector::all_with_weight(w) {
                let got = g.profile_slice(&alpha);
                let want = count_by_profile(&alpha);
                assert_eq!(got, want, "profile mismatch at {alpha}");
            }
        }
    }

    #[test]
    fn g_symmetries() {
        let g = g_series::<Int>(3);
        assert_eq!(g.swap_uv(), g);
        assert_eq!(g.subst_uv_one(), xi_series::<Int>(3));
    }

    #[test]
    fn profile_exponents_bounded_by_type() {
        let (f, fh) = f_series::<Int>(3);
        let g = g_series::<Int>(3);
        for s in [&f, &fh, &g] {
            assert!(s.terms().all(|(m, _)| m.is_profile_bounded()));
        }
    }

    #[test]
    fn display_sorted_by_weight() {
        let xi = xi_series::<Int>(2);
        assert_eq!(xi.to_string(), "1 + x2 + x3 + 3*x2^2");
        let m = Monomial::x_var(2)
            .times(&Monomial::x_var(2))
            .times(&Monomial::u_var(3));
        assert_eq!(m.to_string(), "x2^2*u3");
    }

    #[test]
    fn json_dump_shape() {
        let xi = xi_series::<Int>(1);
        let v = xi.to_json();
        assert_eq!(v["truncation_weight"], 1);
        let terms = v["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[1]["monomial"], "x2");
        assert_eq!(terms[1]["coeff"], "1");
    }
}
