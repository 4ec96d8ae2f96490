//! Rooted plane trees whose root is a leaf and whose internal vertices have
//! even degree 2j, j >= 2.  These are the bijection images of minimal
//! n-cycle factorizations: a degree-2j vertex stands for a j-cycle factor
//! and the 2n leaves read h1, t1, h2, t2, ... counterclockwise from the
//! root.

pub(crate) mod graph;
mod io;

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{HeadTailProfile, TypeVector};

pub use io::tree_to_dot;

/// A vertex below the root: either a leaf or an internal vertex with its
/// children in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf,
    Internal(Vec<Node>),
}

impl Node {
    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf)
    }

    fn check(&self) -> Result<()> {
        match self {
            Node::Leaf => Ok(()),
            Node::Internal(children) => {
                // degree 2j with j >= 2 means children + parent = 2j
                if children.len() < 3 || children.len() % 2 == 0 {
                    return Err(Error::InvalidTree(format!(
                        "internal vertex has degree {}, expected even degree >= 4",
                        children.len() + 1
                    )));
                }
                children.iter().try_for_each(Node::check)
            }
        }
    }

    fn count_leaves(&self) -> usize {
        match self {
            Node::Leaf => 1,
            Node::Internal(children) => children.iter().map(Node::count_leaves).sum(),
        }
    }

    fn degree_census(&self, tv: &mut TypeVector) {
        if let Node::Internal(children) = self {
            tv.increment((children.len() + 1) / 2);
            for c in children {
                c.degree_census(tv);
            }
        }
    }
}

/// A rooted plane tree.  The root is a distinguished leaf with a single
/// edge down to `root_child`; the bare tree (`root_child` a leaf) is the
/// image of the empty factorization of the 1-cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    root_child: Node,
}

/// Leaf tag: heads mark where a point's line ends, tails where it starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LeafKind {
    H,
    T,
}

impl LeafKind {
    pub(crate) fn flip(self) -> LeafKind {
        match self {
            LeafKind::H => LeafKind::T,
            LeafKind::T => LeafKind::H,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeafLabel {
    pub kind: LeafKind,
    pub index: usize,
}

impl fmt::Display for LeafLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            LeafKind::H => 'h',
            LeafKind::T => 't',
        };
        write!(f, "{}{}", k, self.index)
    }
}

/// Label of the i-th leaf in counterclockwise boundary order (root first):
/// h1, t1, h2, t2, ...
pub(crate) fn label_at(position: usize) -> LeafLabel {
    if position % 2 == 0 {
        LeafLabel {
            kind: LeafKind::H,
            index: position / 2 + 1,
        }
    } else {
        LeafLabel {
            kind: LeafKind::T,
            index: (position + 1) / 2,
        }
    }
}

/// The boundary leaves of a tree paired with their alternating h/t labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafLabeling {
    labels: Vec<LeafLabel>,
}

impl LeafLabeling {
    pub fn labels(&self) -> &[LeafLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl PlaneTree {
    pub fn new(root_child: Node) -> Result<Self> {
        root_child.check()?;
        Ok(PlaneTree { root_child })
    }

    /// The tree with two leaves and no internal vertex (n = 1).
    pub fn bare() -> Self {
        PlaneTree {
            root_child: Node::Leaf,
        }
    }

    pub fn root_child(&self) -> &Node {
        &self.root_child
    }

    /// Total number of leaves, the root included.  Always 2(<alpha> + 1).
    pub fn leaf_count(&self) -> usize {
        1 + self.root_child.count_leaves()
    }

    /// n such that the tree has 2n leaves.
    pub fn ambient_size(&self) -> usize {
        self.leaf_count() / 2
    }

    /// Counts internal vertices by half-degree j.
    pub fn degree_census(&self) -> TypeVector {
        let mut tv = TypeVector::zero();
        self.root_child.degree_census(&mut tv);
        tv
    }

    /// True iff the degree census matches `alpha` and the leaf count is
    /// 2(<alpha> + 1).
    pub fn validate(&self, alpha: &TypeVector) -> bool {
        self.degree_census() == *alpha && self.leaf_count() == 2 * (alpha.weight() + 1)
    }

    /// Leaves in counterclockwise boundary order (root first) with their
    /// alternating labels h1, t1, h2, t2, ...
    pub fn boundary_leaves(&self) -> Result<LeafLabeling> {
        let count = self.leaf_count();
        if count % 2 != 0 {
            return Err(Error::InvalidTree(format!("odd leaf count {count}")));
        }
        Ok(LeafLabeling {
            labels: (0..count).map(label_at).collect(),
        })
    }

    /// Head/tail profile read off the tree: a degree-2j vertex is a tail if
    /// all j of its t-slots hold leaves, a head if all j h-slots do (the
    /// root leaf counts as a free h-edge of the top vertex).
    pub fn tree_profile(&self) -> HeadTailProfile {
        graph::TreeGraph::from_tree(self).profile()
    }
}
