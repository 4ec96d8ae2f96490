//! Working representation of a plane tree as an adjacency arena with
//! counterclockwise-ordered neighbor lists, labeled leaves and typed edge
//! slots.  Around every internal vertex the 2j edge slots alternate h and
//! t counterclockwise; the slot holding the path to the root of the whole
//! tree is an h-slot of the top vertex.

use crate::error::{Error, Result};
use crate::perm::HeadTailProfile;

use super::{label_at, LeafKind, LeafLabel, Node, PlaneTree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum VertKind {
    Leaf(LeafLabel),
    Internal,
}

#[derive(Debug, Clone)]
pub(crate) struct Vert {
    pub kind: VertKind,
    /// Neighbors in counterclockwise cyclic order; for internal vertices
    /// built from a tree the parent sits at position 0.
    pub nbrs: Vec<usize>,
    /// Slot kinds parallel to `nbrs` (internal vertices only).
    pub slots: Vec<LeafKind>,
    pub alive: bool,
}

impl Vert {
    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, VertKind::Leaf(_))
    }

    pub fn label(&self) -> Option<LeafLabel> {
        match self.kind {
            VertKind::Leaf(l) => Some(l),
            VertKind::Internal => None,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct TreeGraph {
    pub verts: Vec<Vert>,
    pub root: usize,
    pub n: usize,
}

impl TreeGraph {
    pub fn from_tree(tree: &PlaneTree) -> Self {
        let n = tree.ambient_size();
        let mut g = TreeGraph {
            verts: Vec::new(),
            root: 0,
            n,
        };
        let root = g.push(VertKind::Leaf(label_at(0)));
        let mut next_leaf = 1usize;
        let child = g.build(tree.root_child(), root, LeafKind::H, &mut next_leaf);
        g.verts[root].nbrs.push(child);
        debug_assert_eq!(next_leaf, 2 * n);
        g
    }

    fn push(&mut self, kind: VertKind) -> usize {
        self.verts.push(Vert {
            kind,
            nbrs: Vec::new(),
            slots: Vec::new(),
            alive: true,
        });
        self.verts.len() - 1
    }

    /// `edge_kind` is the slot kind of the parent edge as seen from the
    /// vertex being built; it flips across every internal edge.
    fn build(&mut self, node: &Node, parent: usize, edge_kind: LeafKind, next_leaf: &mut usize) -> usize {
        match node {
            Node::Leaf => {
                let label = label_at(*next_leaf);
                *next_leaf += 1;
                // a leaf's label kind equals the slot kind at its internal
                // neighbor, which is the flip of the kind seen from the leaf
                assert_eq!(label.kind, edge_kind.flip());
                let id = self.push(VertKind::Leaf(label));
                self.verts[id].nbrs.push(parent);
                id
            }
            Node::Internal(children) => {
                let id = self.push(VertKind::Internal);
                self.verts[id].nbrs.push(parent);
                self.verts[id].slots.push(edge_kind);
                for i in 1..=children.len() {
                    let slot = if i % 2 == 1 { edge_kind.flip() } else { edge_kind };
                    self.verts[id].slots.push(slot);
                    let child = self.build(&children[i - 1], id, slot.flip(), next_leaf);
                    self.verts[id].nbrs.push(child);
                }
                id
            }
        }
    }

    pub fn internal_ids(&self) -> Vec<usize> {
        (0..self.verts.len())
            .filter(|&v| self.verts[v].alive && !self.verts[v].is_leaf())
            .collect()
    }

    /// Half-degree j of an internal vertex.
    pub fn half_degree(&self, v: usize) -> usize {
        self.verts[v].nbrs.len() / 2
    }

    /// True iff every t-slot (resp. h-slot) of `v` holds a living leaf.
    pub fn slots_free(&self, v: usize, kind: LeafKind) -> bool {
        let vert = &self.verts[v];
        vert.nbrs
            .iter()
            .zip(&vert.slots)
            .filter(|(_, &s)| s == kind)
            .all(|(&u, _)| self.verts[u].is_leaf())
    }

    pub fn profile(&self) -> HeadTailProfile {
        let mut p = HeadTailProfile::default();
        for v in self.internal_ids() {
            let j = self.half_degree(v);
            if self.slots_free(v, LeafKind::T) {
                p.add_tail(j);
            }
            if self.slots_free(v, LeafKind::H) {
                p.add_head(j);
            }
        }
        p
    }

    /// Indices of the (leaf) neighbors in the t-slots of `v`.
    pub fn t_slot_leaf_indices(&self, v: usize) -> Vec<usize> {
        let vert = &self.verts[v];
        vert.nbrs
            .iter()
            .zip(&vert.slots)
            .filter(|(_, &s)| s == LeafKind::T)
            .map(|(&u, _)| {
                let label = self.verts[u].label().expect("t-slot neighbor must be a leaf");
                debug_assert_eq!(label.kind, LeafKind::T);
                label.index
            })
            .collect()
    }

    /// The point index that the edge in slot `s` of `v` contracts to when
    /// polygons are shrunk and the t_j / h_{j+1} leaf pairs are merged into
    /// circle points: follow the counterclockwise-next slot until a leaf.
    pub fn inherited_index(&self, v: usize, s: usize) -> usize {
        let (mut v, mut s) = (v, s);
        loop {
            let u = self.verts[v].nbrs[s];
            match self.verts[u].kind {
                VertKind::Leaf(label) => return label.index,
                VertKind::Internal => {
                    let p = self.verts[u]
                        .nbrs
                        .iter()
                        .position(|&w| w == v)
                        .expect("edge endpoints are mutual neighbors");
                    v = u;
                    s = (p + 1) % self.verts[u].nbrs.len();
                }
            }
        }
    }

    /// Closed boundary walk from the root: every edge once per direction.
    pub fn euler_tour(&self) -> Vec<(usize, usize)> {
        let mut tour = Vec::new();
        let top = self.verts[self.root].nbrs[0];
        self.tour_rec(top, self.root, &mut tour);
        tour
    }

    fn tour_rec(&self, v: usize, parent: usize, tour: &mut Vec<(usize, usize)>) {
        tour.push((parent, v));
        if !self.verts[v].is_leaf() {
            let deg = self.verts[v].nbrs.len();
            let p = self.verts[v].nbrs.iter().position(|&w| w == parent).unwrap();
            for i in 1..deg {
                self.tour_rec(self.verts[v].nbrs[(p + i) % deg], v, tour);
            }
        }
        tour.push((v, parent));
    }

    /// Rebuilds the nested representation, rooted at the leaf `self.root`.
    pub fn to_plane_tree(&self) -> Result<PlaneTree> {
        let root = &self.verts[self.root];
        if root.nbrs.len() != 1 {
            return Err(Error::InvalidTree("root must have degree 1".into()));
        }
        let mut visited = vec![false; self.verts.len()];
        visited[self.root] = true;
        let node = self.node_rec(root.nbrs[0], self.root, &mut visited)?;
        if visited.iter().zip(&self.verts).any(|(&vis, v)| v.alive && !vis) {
            return Err(Error::InvalidTree("graph is not connected".into()));
        }
        PlaneTree::new(node)
    }

    fn node_rec(&self, v: usize, parent: usize, visited: &mut Vec<bool>) -> Result<Node> {
        if visited[v] {
            return Err(Error::InvalidTree("graph contains a cycle".into()));
        }
        visited[v] = true;
        if self.verts[v].is_leaf() {
            return Ok(Node::Leaf);
        }
        let deg = self.verts[v].nbrs.len();
        let p = self.verts[v]
            .nbrs
            .iter()
            .position(|&w| w == parent)
            .ok_or_else(|| Error::InvalidTree("asymmetric adjacency".into()))?;
        let mut children = Vec::with_capacity(deg - 1);
        for i in 1..deg {
            children.push(self.node_rec(self.verts[v].nbrs[(p + i) % deg], v, visited)?);
        }
        Ok(Node::Internal(children))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_graph() {
        let tree = PlaneTree::new(Node::Internal(vec![
            Node::Leaf,
            Node::Internal(vec![Node::Leaf; 3]),
            Node::Leaf,
        ]))
        .unwrap();
        let g = TreeGraph::from_tree(&tree);
        assert_eq!(g.to_plane_tree().unwrap(), tree);
    }

    #[test]
    fn euler_tour_uses_each_edge_twice() {
        let tree = PlaneTree::new(Node::Internal(vec![
            Node::Internal(vec![Node::Leaf; 5]),
            Node::Leaf,
            Node::Leaf,
        ]))
        .unwrap();
        let g = TreeGraph::from_tree(&tree);
        let tour = g.euler_tour();
        let mut seen = std::collections::HashMap::new();
        for &step in &tour {
            *seen.entry(step).or_insert(0) += 1;
        }
        assert!(seen.values().all(|&c| c == 1));
        let edges = g.verts.iter().map(|v| v.nbrs.len()).sum::<usize>() / 2;
        assert_eq!(tour.len(), 2 * edges);
    }
}
