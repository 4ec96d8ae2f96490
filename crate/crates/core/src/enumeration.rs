//! Exhaustive generation and counting of the bijection trees, plus the
//! independent brute-force oracle over words of increasing cycles.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::perm::{Cycle, Factorization, HeadTailProfile, TypeVector};
use crate::tree::{Node, PlaneTree};
use crate::{Coeff, Int};

/// Default refusal threshold for the brute-force oracle.
pub const DEFAULT_ORACLE_CAP: usize = 7;

/// All plane trees with degree census `alpha`, each exactly once, ordered
/// by top-vertex degree and then recursive composition order.
pub fn enumerate_trees(alpha: &TypeVector) -> Vec<PlaneTree> {
    enumerate_nodes(alpha)
        .into_iter()
        .map(|node| PlaneTree::new(node).expect("generated nodes are valid"))
        .collect()
}

fn enumerate_nodes(alpha: &TypeVector) -> Vec<Node> {
    if alpha.is_zero() {
        return vec![Node::Leaf];
    }
    let mut out = Vec::new();
    for (j, count) in alpha.iter() {
        if count == 0 {
            continue;
        }
        let rem = alpha
            .checked_sub(&TypeVector::unit(j))
            .expect("count checked above");
        for comp in rem.compositions(2 * j - 1) {
            let choices: Vec<Vec<Node>> = comp.iter().map(enumerate_nodes).collect();
            cartesian(&choices, &mut Vec::new(), &mut |children| {
                out.push(Node::Internal(children.to_vec()));
            });
        }
    }
    out
}

fn cartesian(choices: &[Vec<Node>], prefix: &mut Vec<Node>, emit: &mut impl FnMut(&[Node])) {
    if prefix.len() == choices.len() {
        emit(prefix);
        return;
    }
    for c in &choices[prefix.len()] {
        prefix.push(c.clone());
        cartesian(choices, prefix, emit);
        prefix.pop();
    }
}

/// Memoized structural counter for the trees of a given type: splitting at
/// the top vertex of degree 2j leaves 2j-1 ordered subtrees whose types
/// sum to alpha - e_j.
pub struct TreeCounter<C: Coeff> {
    totals: Mutex<HashMap<TypeVector, C>>,
    parts: Mutex<HashMap<(usize, TypeVector), C>>,
}

impl<C: Coeff> Default for TreeCounter<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> TreeCounter<C> {
    pub fn new() -> Self {
        TreeCounter {
            totals: Mutex::new(HashMap::new()),
            parts: Mutex::new(HashMap::new()),
        }
    }

    pub fn count(&self, alpha: &TypeVector) -> C {
        if alpha.is_zero() {
            return C::one();
        }
        if let Some(c) = self.totals.lock().unwrap().get(alpha) {
            return c.clone();
        }
        let mut total = C::zero();
        for (j, count) in alpha.iter() {
            if count == 0 {
                continue;
            }
            let rem = alpha.checked_sub(&TypeVector::unit(j)).unwrap();
            total += self.ordered_sum(2 * j - 1, &rem);
        }
        self.totals
            .lock()
            .unwrap()
            .insert(alpha.clone(), total.clone());
        total
    }

    /// Sum over ordered m-tuples of types adding up to `beta` of the
    /// product of their tree counts.
    fn ordered_sum(&self, m: usize, beta: &TypeVector) -> C {
        if m == 0 {
            return if beta.is_zero() { C::one() } else { C::zero() };
        }
        let key = (m, beta.clone());
        if let Some(c) = self.parts.lock().unwrap().get(&key) {
            return c.clone();
        }
        let mut total = C::zero();
        for gamma in beta.sub_vectors() {
            let rest = beta.checked_sub(&gamma).unwrap();
            total += self.count(&gamma) * self.ordered_sum(m - 1, &rest);
        }
        self.parts.lock().unwrap().insert(key, total.clone());
        total
    }
}

/// Number of inequivalent minimal factorizations of type `alpha`.
pub fn count_trees(alpha: &TypeVector) -> Int {
    TreeCounter::<Int>::new().count(alpha)
}

/// Exhaustive oracle: every word of increasing cycles on {1..n} with type
/// `alpha`, filtered to products equal to (1 2 ... n) and grouped by
/// commutation class.  Returns the sorted canonical representatives.
pub fn brute_force_classes(alpha: &TypeVector, n: usize) -> Result<Vec<Factorization>> {
    brute_force_classes_capped(alpha, n, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_classes_capped(
    alpha: &TypeVector,
    n: usize,
    cap: usize,
) -> Result<Vec<Factorization>> {
    if n > cap {
        return Err(Error::OracleTooLarge { n, cap });
    }
    if alpha.weight() + 1 != n {
        return Ok(Vec::new());
    }
    if alpha.is_zero() {
        // n = 1: the empty product is the unique factorization of (1)
        return Ok(vec![Factorization::new(1, Vec::new())?]);
    }

    let mut cycles_by_len: BTreeMap<usize, Vec<Cycle>> = BTreeMap::new();
    for (j, _) in alpha.iter() {
        let mut cycles = Vec::new();
        let mut subset = Vec::new();
        subsets(1, n, j, &mut subset, &mut cycles);
        cycles_by_len.insert(j, cycles);
    }

    let mut remaining: BTreeMap<usize, usize> = alpha.iter().collect();
    let mut word: Vec<Cycle> = Vec::new();
    let mut classes: BTreeSet<Factorization> = BTreeSet::new();
    search(
        n,
        alpha.size(),
        &cycles_by_len,
        &mut remaining,
        &mut word,
        &mut classes,
    );
    Ok(classes.into_iter().collect())
}

fn subsets(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Cycle>) {
    if left == 0 {
        out.push(Cycle::new(cur).unwrap());
        return;
    }
    for k in start..=n.saturating_sub(left - 1) {
        cur.push(k);
        subsets(k + 1, n, left - 1, cur, out);
        cur.pop();
    }
}

fn search(
    n: usize,
    total: usize,
    cycles_by_len: &BTreeMap<usize, Vec<Cycle>>,
    remaining: &mut BTreeMap<usize, usize>,
    word: &mut Vec<Cycle>,
    classes: &mut BTreeSet<Factorization>,
) {
    if word.len() == total {
        let f = Factorization::new(n, word.clone()).unwrap();
        if f.evaluate().is_n_cycle() {
            classes.insert(f.canonical_form());
        }
        return;
    }
    let lengths: Vec<usize> = remaining
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&j, _)| j)
        .collect();
    for j in lengths {
        *remaining.get_mut(&j).unwrap() -= 1;
        for c in &cycles_by_len[&j] {
            word.push(c.clone());
            search(n, total, cycles_by_len, remaining, word, classes);
            word.pop();
        }
        *remaining.get_mut(&j).unwrap() += 1;
    }
}

/// Buckets the trees of type `alpha` by their head/tail profile.
pub fn count_by_profile(alpha: &TypeVector) -> BTreeMap<HeadTailProfile, Int> {
    let mut out: BTreeMap<HeadTailProfile, Int> = BTreeMap::new();
    for tree in enumerate_trees(alpha) {
        *out.entry(tree.tree_profile()).or_default() += 1;
    }
    out
}
