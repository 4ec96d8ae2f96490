use std::collections::BTreeMap;
use std::fmt;

/// Sparse type vector: `counts[j]` is the number of j-cycle factors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector {
    counts: BTreeMap<usize, usize>,
}

impl TypeVector {
    pub fn zero() -> Self {
        TypeVector::default()
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut tv = TypeVector::zero();
        for (j, c) in counts {
            assert!(j >= 2, "type vector indices start at 2");
            if c > 0 {
                *tv.counts.entry(j).or_insert(0) += c;
            }
        }
        tv
    }

    /// Single unit vector e_j.
    pub fn unit(j: usize) -> Self {
        TypeVector::from_counts([(j, 1)])
    }

    pub fn get(&self, j: usize) -> usize {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of factors, |alpha|.
    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    /// Weight <alpha> = sum (j-1) alpha_j.
    pub fn weight(&self) -> usize {
        self.counts.iter().map(|(&j, &c)| (j - 1) * c).sum()
    }

    pub fn increment(&mut self, j: usize) {
        assert!(j >= 2);
        *self.counts.entry(j).or_insert(0) += 1;
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&j, &c)| (j, c))
    }

    /// Componentwise subtraction; None if any component would go negative.
    pub fn checked_sub(&self, other: &TypeVector) -> Option<TypeVector> {
        let mut out = self.clone();
        for (j, c) in other.iter() {
            let have = out.get(j);
            if have < c {
                return None;
            }
            if have == c {
                out.counts.remove(&j);
            } else {
                out.counts.insert(j, have - c);
            }
        }
        Some(out)
    }

    pub fn add(&self, other: &TypeVector) -> TypeVector {
        let mut out = self.clone();
        for (j, c) in other.iter() {
            *out.counts.entry(j).or_insert(0) += c;
        }
        out
    }

    /// All componentwise sub-vectors, in a fixed lexicographic order.
    pub fn sub_vectors(&self) -> Vec<TypeVector> {
        let keys: Vec<(usize, usize)> = self.iter().collect();
        let mut out = Vec::new();
        let mut cur = TypeVector::zero();
        fn rec(keys: &[(usize, usize)], i: usize, cur: &mut TypeVector, out: &mut Vec<TypeVector>) {
            if i == keys.len() {
                out.push(cur.clone());
                return;
            }
            let (j, max) = keys[i];
            for c in 0..=max {
                if c > 0 {
                    cur.counts.insert(j, c);
                }
                rec(keys, i + 1, cur, out);
            }
            cur.counts.remove(&j);
        }
        rec(&keys, 0, &mut cur, &mut out);
        out
    }

    /// Ordered decompositions of `self` into `parts` componentwise summands.
    pub fn compositions(&self, parts: usize) -> Vec<Vec<TypeVector>> {
        if parts == 0 {
            return if self.is_zero() { vec![vec![]] } else { vec![] };
        }
        if parts == 1 {
            return vec![vec![self.clone()]];
        }
        let mut out = Vec::new();
        for first in self.sub_vectors() {
            let rest = self.checked_sub(&first).unwrap();
            for mut tail in rest.compositions(parts - 1) {
                let mut comp = Vec::with_capacity(parts);
                comp.push(first.clone());
                comp.append(&mut tail);
                out.push(comp);
            }
        }
        out
    }

    /// All type vectors with weight exactly `w`, smallest parts first.
    pub fn all_with_weight(w: usize) -> Vec<TypeVector> {
        // Distribute weight over parts of size j-1 for j = 2, 3, ...
        fn rec(w: usize, min_j: usize, cur: &mut TypeVector, out: &mut Vec<TypeVector>) {
            if w == 0 {
                out.push(cur.clone());
                return;
            }
            for j in min_j..=(w + 1) {
                if j - 1 > w {
                    break;
                }
                *cur.counts.entry(j).or_insert(0) += 1;
                rec(w - (j - 1), j, cur, out);
                let c = cur.counts.get_mut(&j).unwrap();
                *c -= 1;
                if *c == 0 {
                    cur.counts.remove(&j);
                }
            }
        }
        let mut out = Vec::new();
        rec(w, 2, &mut TypeVector::zero(), &mut out);
        out
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "a2=0");
        }
        let mut first = true;
        for (j, c) in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "a{j}={c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Head and tail counts by cycle length.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeadTailProfile {
    pub h: BTreeMap<usize, usize>,
    pub t: BTreeMap<usize, usize>,
}

impl HeadTailProfile {
    pub fn h_count(&self, j: usize) -> usize {
        self.h.get(&j).copied().unwrap_or(0)
    }

    pub fn t_count(&self, j: usize) -> usize {
        self.t.get(&j).copied().unwrap_or(0)
    }

    pub fn total_heads(&self) -> usize {
        self.h.values().sum()
    }

    pub fn total_tails(&self) -> usize {
        self.t.values().sum()
    }

    pub fn add_head(&mut self, j: usize) {
        *self.h.entry(j).or_insert(0) += 1;
    }

    pub fn add_tail(&mut self, j: usize) {
        *self.t.entry(j).or_insert(0) += 1;
    }

    pub fn heads(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.h.iter().map(|(&j, &c)| (j, c))
    }

    pub fn tails(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.t.iter().map(|(&j, &c)| (j, c))
    }
}

impl fmt::Display for HeadTailProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (&j, &c) in &self.h {
            parts.push(format!("h{j}={c}"));
        }
        for (&j, &c) in &self.t {
            parts.push(format!("t{j}={c}"));
        }
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_and_weight() {
        let a = TypeVector::from_counts([(2, 2), (3, 1), (4, 1)]);
        assert_eq!(a.size(), 4);
        assert_eq!(a.weight(), 2 + 2 + 3);
        assert_eq!(TypeVector::zero().size(), 0);
        assert_eq!(TypeVector::zero().weight(), 0);
    }

    #[test]
    fn compositions_cover_all_splits() {
        let a = TypeVector::from_counts([(2, 2)]);
        let comps = a.compositions(3);
        // distribute 2 identical items over 3 ordered slots: C(4,2) = 6
        assert_eq!(comps.len(), 6);
        for comp in &comps {
            let sum = comp.iter().fold(TypeVector::zero(), |acc, p| acc.add(p));
            assert_eq!(sum, a);
        }
    }

    #[test]
    fn all_with_weight_enumerates_partitions() {
        // weight 3: a2=3 | a2=1,a3=1 | a4=1
        let all = TypeVector::all_with_weight(3);
        assert_eq!(all.len(), 3);
        for a in &all {
            assert_eq!(a.weight(), 3);
        }
        assert_eq!(TypeVector::all_with_weight(0), vec![TypeVector::zero()]);
    }
}
