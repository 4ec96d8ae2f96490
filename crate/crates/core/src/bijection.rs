//! The bijection between inequivalent minimal factorizations of the
//! n-cycle and rooted plane trees: the forward direction merges free head
//! edges right to left, the inverse repeatedly deletes a vertex whose
//! t-slots are all leaves and reads the factor off the leaf indices.

use crate::error::{Error, Result};
use crate::perm::{Cycle, Factorization};
use crate::tree::graph::{TreeGraph, Vert, VertKind};
use crate::tree::{LeafKind, LeafLabel, PlaneTree};

/// Builds the plane tree of a minimal factorization of (1 2 ... n).
///
/// Factors are processed right to left; each factor (k1 ... km) merges the
/// current free head edges of k1, ..., km into a new degree-2m vertex whose
/// counterclockwise edge order interleaves a new outgoing (head) edge and
/// the consumed incoming edge per element.  The root is the final free
/// head of 1.  Equivalent factorizations produce identical trees.
pub fn factorization_to_tree(f: &Factorization) -> Result<PlaneTree> {
    if !f.is_minimal_ncycle_factorization() {
        return Err(Error::NotMinimalNCycle(f.n()));
    }
    let n = f.n();
    let mut verts: Vec<Vert> = Vec::new();
    let push = |verts: &mut Vec<Vert>, kind: VertKind| -> usize {
        verts.push(Vert {
            kind,
            nbrs: Vec::new(),
            slots: Vec::new(),
            alive: true,
        });
        verts.len() - 1
    };

    // one free head and one free tail per point, initially a bare edge
    let mut free_head = vec![0usize; n + 1];
    for k in 1..=n {
        let t = push(
            &mut verts,
            VertKind::Leaf(LeafLabel {
                kind: LeafKind::T,
                index: k,
            }),
        );
        let h = push(
            &mut verts,
            VertKind::Leaf(LeafLabel {
                kind: LeafKind::H,
                index: k,
            }),
        );
        verts[t].nbrs.push(h);
        verts[h].nbrs.push(t);
        free_head[k] = h;
    }

    for factor in f.factors().iter().rev() {
        let v = push(&mut verts, VertKind::Internal);
        for &k in factor.elements() {
            let new_head = push(
                &mut verts,
                VertKind::Leaf(LeafLabel {
                    kind: LeafKind::H,
                    index: k,
                }),
            );
            verts[new_head].nbrs.push(v);
            let old_head = free_head[k];
            let attach = verts[old_head].nbrs[0];
            let pos = verts[attach]
                .nbrs
                .iter()
                .position(|&w| w == old_head)
                .expect("consumed head is a neighbor of its attachment");
            verts[attach].nbrs[pos] = v;
            verts[old_head].alive = false;
            verts[v].nbrs.push(new_head);
            verts[v].slots.push(LeafKind::H);
            verts[v].nbrs.push(attach);
            verts[v].slots.push(LeafKind::T);
            free_head[k] = new_head;
        }
    }

    let g = TreeGraph {
        verts,
        root: free_head[1],
        n,
    };
    let tree = g.to_plane_tree()?;
    debug_assert!(tree.validate(&f.type_of()));
    Ok(tree)
}

/// Inverts the bijection: repeatedly deletes a vertex all of whose t-slots
/// hold leaves, emitting the t-leaf indices as the next factor from the
/// right.  Ties are broken by the smallest minimal t-index; the output is
/// returned in canonical form.
pub fn tree_to_factorization(tree: &PlaneTree) -> Result<Factorization> {
    tree_to_factorization_with(tree, |_| 0)
}

/// Same inversion with a caller-supplied choice among eligible vertices
/// (`eligible` is sorted by minimal t-index).  Any choice rule produces an
/// equivalent factorization.
fn tree_to_factorization_with(
    tree: &PlaneTree,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Result<Factorization> {
    let mut g = TreeGraph::from_tree(tree);
    let n = g.n;
    let mut emitted: Vec<Cycle> = Vec::new();
    loop {
        let mut eligible: Vec<(usize, usize)> = g
            .internal_ids()
            .into_iter()
            .filter(|&v| g.slots_free(v, LeafKind::T))
            .map(|v| {
                let min_idx = *g.t_slot_leaf_indices(v).iter().min().unwrap();
                (min_idx, v)
            })
            .collect();
        if eligible.is_empty() {
            assert!(
                g.internal_ids().is_empty(),
                "pigeonhole guarantees an eligible vertex while internal vertices remain"
            );
            break;
        }
        eligible.sort();
        let ids: Vec<usize> = eligible.iter().map(|&(_, v)| v).collect();
        let v = ids[pick(&ids)];
        emitted.push(delete_vertex(&mut g, v));
    }
    emitted.reverse();
    let f = Factorization::new(n, emitted)?.canonical_form();
    assert!(
        f.is_minimal_ncycle_factorization(),
        "inversion of a valid tree must yield a minimal n-cycle factorization"
    );
    Ok(f)
}

/// Removes `v`, returning its factor.  Leaf edges vanish; edges to other
/// vertices are cut in half and the new leaf inherits the label of the
/// counterclockwise-next leaf around `v`.
fn delete_vertex(g: &mut TreeGraph, v: usize) -> Cycle {
    let indices = g.t_slot_leaf_indices(v);
    // Lemma: read counterclockwise from its smallest entry, the factor is
    // increasing, so the sorted indices give the cyclic order.
    let mut sorted = indices.clone();
    sorted.sort_unstable();
    debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));

    let deg = g.verts[v].nbrs.len();
    for i in 0..deg {
        let u = g.verts[v].nbrs[i];
        if g.verts[u].is_leaf() {
            g.verts[u].alive = false;
            continue;
        }
        // internal edges at an eligible vertex sit in h-slots; the next
        // slot counterclockwise is a t-slot and holds a leaf
        debug_assert_eq!(g.verts[v].slots[i], LeafKind::H);
        let next = g.verts[v].nbrs[(i + 1) % deg];
        let label = g.verts[next].label().expect("slot after an h-slot holds a leaf");
        debug_assert_eq!(label.kind, LeafKind::T);
        let new_leaf = g.verts.len();
        g.verts.push(Vert {
            kind: VertKind::Leaf(LeafLabel {
                kind: LeafKind::T,
                index: label.index,
            }),
            nbrs: vec![u],
            slots: Vec::new(),
            alive: true,
        });
        let pos = g.verts[u].nbrs.iter().position(|&w| w == v).unwrap();
        g.verts[u].nbrs[pos] = new_leaf;
    }
    g.verts[v].alive = false;
    Cycle::new(&sorted).expect("factors have at least two distinct elements")
}

/// The closed boundary walk labels t1, h2, t2, ..., hn, tn, h1.
pub fn boundary_walk(tree: &PlaneTree) -> Result<Vec<LeafLabel>> {
    let labeling = tree.boundary_leaves()?;
    let mut walk: Vec<LeafLabel> = labeling.labels()[1..].to_vec();
    walk.push(labeling.labels()[0]);
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::text::parse_factorization;
    use crate::tree::Node;

    fn fact(s: &str, n: usize) -> Factorization {
        parse_factorization(s, n).unwrap()
    }

    #[test]
    fn single_transposition_tree_is_degree4_star() {
        let tree = factorization_to_tree(&fact("(1 2)", 2)).unwrap();
        assert_eq!(
            tree,
            PlaneTree::new(Node::Internal(vec![Node::Leaf; 3])).unwrap()
        );
    }

    #[test]
    fn fig3_construction() {
        // (3 4)(2 4)(1 4): chain of three degree-4 vertices hanging off the
        // merge of 4's successive head edges.
        let tree = factorization_to_tree(&fact("(3 4)(2 4)(1 4)", 4)).unwrap();
        let v3 = Node::Internal(vec![Node::Leaf, Node::Leaf, Node::Leaf]);
        let v2 = Node::Internal(vec![Node::Leaf, Node::Leaf, v3]);
        let v1 = Node::Internal(vec![Node::Leaf, v2, Node::Leaf]);
        assert_eq!(tree, PlaneTree::new(v1).unwrap());
    }

    #[test]
    fn equivalent_words_produce_identical_trees() {
        let t1 = factorization_to_tree(&fact("(3 4)(1 2)(2 4)", 4)).unwrap();
        let t2 = factorization_to_tree(&fact("(1 2)(3 4)(2 4)", 4)).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn non_minimal_input_rejected() {
        assert_eq!(
            factorization_to_tree(&fact("(1 2)(1 2)(1 2)", 2)).unwrap_err(),
            Error::NotMinimalNCycle(2)
        );
    }

    #[test]
    fn star_inverts_to_single_transposition() {
        let star = PlaneTree::new(Node::Internal(vec![Node::Leaf; 3])).unwrap();
        assert_eq!(tree_to_factorization(&star).unwrap(), fact("(1 2)", 2));
    }

    #[test]
    fn bare_tree_inverts_to_empty_product() {
        let f = tree_to_factorization(&PlaneTree::bare()).unwrap();
        assert_eq!(f.n(), 1);
        assert!(f.is_empty());
    }

    #[test]
    fn roundtrip_on_worked_example() {
        let f = fact("(1 3)(1 2)", 3);
        let tree = factorization_to_tree(&f).unwrap();
        assert_eq!(tree.leaf_count(), 6);
        assert_eq!(tree_to_factorization(&tree).unwrap(), f.canonical_form());
    }

    #[test]
    fn roundtrip_on_long_cycles() {
        for text in ["(3 4)(1 2 4)", "(4 5)(2 3 5)(1 5 6 8)(6 7)", "(1 4 5)(1 2)(2 3)"] {
            let n = text
                .split(|c: char| !c.is_ascii_digit())
                .filter_map(|s| s.parse::<usize>().ok())
                .max()
                .unwrap();
            let f = fact(text, n);
            let tree = factorization_to_tree(&f).unwrap();
            assert_eq!(tree_to_factorization(&tree).unwrap(), f.canonical_form());
        }
    }

    #[test]
    fn any_deletion_choice_is_equivalent() {
        let f = fact("(4 5)(2 3 5)(1 5 6 8)(6 7)", 8);
        let tree = factorization_to_tree(&f).unwrap();
        let reference = tree_to_factorization(&tree).unwrap();
        // cycle through deterministic-but-varied choices with a tiny LCG
        let mut state = 0x2545f4914f6cdd1du64;
        for _ in 0..10 {
            let out = tree_to_factorization_with(&tree, |ids| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                (state >> 33) as usize % ids.len()
            })
            .unwrap();
            assert!(out.equivalent(&reference));
            assert_eq!(out, reference); // canonical form is unique
        }
    }

    #[test]
    fn walk_order_and_edge_census() {
        let star = PlaneTree::new(Node::Internal(vec![Node::Leaf; 3])).unwrap();
        let walk: Vec<String> = boundary_walk(&star).unwrap().iter().map(|l| l.to_string()).collect();
        assert_eq!(walk, ["t1", "h2", "t2", "h1"]);

        let f = fact("(3 4)(1 2)(2 4)", 4);
        let tree = factorization_to_tree(&f).unwrap();
        let g = crate::tree::graph::TreeGraph::from_tree(&tree);
        let tour = g.euler_tour();
        let mut census = std::collections::HashMap::new();
        for &(a, b) in &tour {
            *census.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        assert!(census.values().all(|&c| c == 2));
    }

    #[test]
    fn tree_profile_matches_heads_and_tails() {
        use crate::enumeration::enumerate_trees;
        use crate::perm::TypeVector;
        for w in 1..=4 {
            for alpha in TypeVector::all_with_weight(w) {
                for tree in enumerate_trees(&alpha) {
                    let f = tree_to_factorization(&tree).unwrap();
                    let (_, _, profile) = f.heads_and_tails().unwrap();
                    assert_eq!(tree.tree_profile(), profile, "at {alpha}");
                }
            }
        }
    }

    #[test]
    fn emitted_factors_are_increasing() {
        let f = fact("(4 5)(2 3 5)(1 5 6 8)(6 7)", 8);
        let tree = factorization_to_tree(&f).unwrap();
        let out = tree_to_factorization(&tree).unwrap();
        assert!(out.factors().iter().all(|c| c.is_increasing()));
    }
}
