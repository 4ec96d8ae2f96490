use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A cyclic permutation of a subset of `{1..n}`, stored with its smallest
/// element first (the rotation is fixed, the cyclic order is preserved).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    elements: Vec<usize>,
}

impl Cycle {
    /// Builds a cycle from its elements in cyclic order, rotating so that
    /// the smallest element comes first.
    pub fn new(elements: &[usize]) -> Result<Self> {
        if elements.len() < 2 {
            return Err(Error::TooFewElements(elements.len()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &e in elements {
            if e == 0 {
                return Err(Error::NonpositiveElement);
            }
            if !seen.insert(e) {
                return Err(Error::DuplicateElement(e));
            }
        }
        let min_pos = elements
            .iter()
            .enumerate()
            .min_by_key(|(_, &e)| e)
            .map(|(i, _)| i)
            .unwrap();
        let mut rotated = Vec::with_capacity(elements.len());
        for i in 0..elements.len() {
            rotated.push(elements[(min_pos + i) % elements.len()]);
        }
        Ok(Cycle { elements: rotated })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Largest element moved by the cycle.
    pub fn max_element(&self) -> usize {
        *self.elements.iter().max().unwrap()
    }

    /// True iff the element list ascends from its minimum.
    pub fn is_increasing(&self) -> bool {
        self.elements.windows(2).all(|w| w[0] < w[1])
    }

    /// Image of `point` under the cycle.
    pub fn apply(&self, point: usize) -> usize {
        match self.elements.iter().position(|&e| e == point) {
            Some(i) => self.elements[(i + 1) % self.elements.len()],
            None => point,
        }
    }
}

// Total order used for trace-monoid canonicalization: by length, then by
// the (min-first) element list.
impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A permutation of `{1..n}`, stored as the image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    n: usize,
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            n,
            images: (1..=n).collect(),
        }
    }

    /// The full cycle (1 2 ... n).
    pub fn n_cycle(n: usize) -> Self {
        Permutation {
            n,
            images: (1..=n).map(|k| k % n + 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    /// Left-multiplies by a cycle: `self <- c * self`.
    pub(crate) fn apply_cycle(&mut self, c: &Cycle) {
        for img in self.images.iter_mut() {
            *img = c.apply(*img);
        }
    }

    pub fn is_n_cycle(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == (i + 1) % self.n + 1)
    }

    /// Cycle notation, fixed points omitted; identity prints as "id".
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.n];
        let mut out = String::new();
        for start in 1..=self.n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            out.push('(');
            let mut k = start;
            let mut first = true;
            loop {
                if !first {
                    out.push(' ');
                }
                out.push_str(&k.to_string());
                seen[k - 1] = true;
                first = false;
                k = self.apply(k);
                if k == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}
