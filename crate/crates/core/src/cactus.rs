//! Cycles drawn as convex inscribed polygons on a circle.  A multiset of
//! cycles can be arranged into a minimal factorization of (1 2 ... n)
//! exactly when the drawing is a cactus: every point covered, every cycle
//! increasing, polygons pairwise noncrossing, and the touching structure
//! connected and tree-like.  Cutting the circle arcs and shrinking
//! polygons turns a cactus into the plane tree of the factorization.

use std::collections::BTreeMap;

use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bijection;
use crate::error::{Error, Result};
use crate::perm::{Cycle, Factorization};
use crate::tree::graph::{TreeGraph, Vert, VertKind};
use crate::tree::{LeafKind, LeafLabel, PlaneTree};

/// A validated cactus: `polygons` are increasing cycles on 1..=n, sorted,
/// pairwise noncrossing, covering every point, with a connected tree-like
/// touching structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cactus {
    n: usize,
    polygons: Vec<Cycle>,
}

impl Cactus {
    pub fn new(n: usize, mut polygons: Vec<Cycle>) -> Result<Self> {
        check_arrangeable(&polygons, n)?;
        polygons.sort();
        Ok(Cactus { n, polygons })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn polygons(&self) -> &[Cycle] {
        &self.polygons
    }
}

/// True iff the inscribed polygons of `a` and `b` can be drawn inside the
/// circle of `n` points without crossing (touching at shared points is
/// fine).  This holds exactly when one polygon fits inside a single face
/// cut out by the other: either its points are a subset of the other's,
/// or they all lie in one closed arc between consecutive points of the
/// other.
pub fn is_noncrossing(a: &Cycle, b: &Cycle, n: usize) -> Result<bool> {
    for c in [a, b] {
        if !c.is_increasing() {
            return Err(Error::NotIncreasing(c.to_string()));
        }
        if c.max_element() > n {
            return Err(Error::ElementOutOfRange {
                element: c.max_element(),
                n,
            });
        }
    }
    Ok(fits_in_face(a, b, n) || fits_in_face(b, a, n))
}

fn fits_in_face(outer: &Cycle, inner: &Cycle, n: usize) -> bool {
    let a = outer.elements();
    let b = inner.elements();
    if b.iter().all(|e| a.contains(e)) {
        return true;
    }
    (0..a.len()).any(|i| {
        let lo = a[i];
        let hi = a[(i + 1) % a.len()];
        b.iter().all(|&e| in_closed_arc(lo, hi, e, n))
    })
}

/// Membership in the closed counterclockwise arc from `lo` to `hi`.
fn in_closed_arc(lo: usize, hi: usize, e: usize, _n: usize) -> bool {
    if lo <= hi {
        lo <= e && e <= hi
    } else {
        e >= lo || e <= hi
    }
}

/// Decides whether the multiset can be ordered into a minimal
/// factorization of (1 2 ... n), reporting the first violated condition:
/// (1) every point covered, (2) every cycle increasing, (3) pairwise
/// noncrossing, (4) connected touching structure with the size identity
/// 1 + sum(|c| - 1) = n.
pub fn check_arrangeable(cycles: &[Cycle], n: usize) -> Result<()> {
    let fail = |condition: u8, detail: String| Error::NotArrangeable { condition, detail };
    if n == 0 {
        return Err(fail(1, "there are no points to cover".into()));
    }
    if n == 1 {
        return if cycles.is_empty() {
            Ok(())
        } else {
            Err(fail(
                1,
                "every cycle has an element outside 1..=1".into(),
            ))
        };
    }

    let mut covered = vec![false; n + 1];
    for c in cycles {
        for &e in c.elements() {
            if e > n {
                return Err(fail(1, format!("element {e} of {c} is outside 1..={n}")));
            }
            covered[e] = true;
        }
    }
    if let Some(j) = (1..=n).find(|&j| !covered[j]) {
        return Err(fail(1, format!("point {j} is not covered by any cycle")));
    }

    for c in cycles {
        if !c.is_increasing() {
            return Err(fail(2, format!("{c} is not increasing")));
        }
    }

    for (i, a) in cycles.iter().enumerate() {
        for b in &cycles[i + 1..] {
            if !is_noncrossing(a, b, n)? {
                return Err(fail(3, format!("{a} and {b} cross")));
            }
        }
    }

    // union-find over the points touched by each cycle
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for c in cycles {
        let first = c.elements()[0];
        for &e in &c.elements()[1..] {
            let (a, b) = (find(&mut parent, first), find(&mut parent, e));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 1);
    if let Some(j) = (2..=n).find(|&j| find(&mut parent, j) != root) {
        return Err(fail(
            4,
            format!("the touching structure is disconnected: point {j} is separated from point 1"),
        ));
    }
    let total: usize = 1 + cycles.iter().map(|c| c.len() - 1).sum::<usize>();
    if total != n {
        return Err(fail(
            4,
            format!("size identity fails: 1 + sum(|c| - 1) = {total}, expected {n}"),
        ));
    }
    Ok(())
}

pub fn is_arrangeable(cycles: &[Cycle], n: usize) -> bool {
    check_arrangeable(cycles, n).is_ok()
}

/// Orders an arrangeable multiset into the (unique) equivalence class of
/// minimal factorizations with these factors, in canonical form.
pub fn arrange(cycles: &[Cycle], n: usize) -> Result<Factorization> {
    let cactus = Cactus::new(n, cycles.to_vec())?;
    let tree = cactus_to_tree(&cactus)?;
    let f = bijection::tree_to_factorization(&tree)?;
    debug_assert!(f.evaluate().is_n_cycle());
    debug_assert_eq!(sorted_multiset(f.factors()), sorted_multiset(cycles));
    Ok(f)
}

fn sorted_multiset(cycles: &[Cycle]) -> Vec<Cycle> {
    let mut v = cycles.to_vec();
    v.sort();
    v
}

/// Cuts every circle arc in half (the ends become the leaves t_j and
/// h_{j+1}), separates the polygon corners meeting at each point, and
/// shrinks every polygon to an internal vertex; the result is the plane
/// tree of the factorization class, rooted at h_1.
pub fn cactus_to_tree(cactus: &Cactus) -> Result<PlaneTree> {
    let n = cactus.n;
    let polys = &cactus.polygons;
    let mut verts: Vec<Vert> = Vec::new();
    // leaves first: t_j at 2(j-1), h_j at 2(j-1)+1
    for j in 1..=n {
        for kind in [LeafKind::T, LeafKind::H] {
            verts.push(Vert {
                kind: VertKind::Leaf(LeafLabel { kind, index: j }),
                nbrs: vec![usize::MAX],
                slots: Vec::new(),
                alive: true,
            });
        }
    }
    let t_leaf = |j: usize| 2 * (j - 1);
    let h_leaf = |j: usize| 2 * (j - 1) + 1;
    let poly_base = verts.len();
    for p in polys {
        let m = p.len();
        verts.push(Vert {
            kind: VertKind::Internal,
            nbrs: vec![usize::MAX; 2 * m],
            slots: [LeafKind::H, LeafKind::T].repeat(m),
            alive: true,
        });
    }

    // polygons touching each point, ordered by how far counterclockwise
    // their nearest other corner sits; noncrossing makes these reaches
    // pairwise disjoint, so the order is well defined
    let mut at_point: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (pi, p) in polys.iter().enumerate() {
        for &e in p.elements() {
            at_point[e].push(pi);
        }
    }
    let reach = |pi: usize, j: usize| {
        polys[pi]
            .elements()
            .iter()
            .filter(|&&e| e != j)
            .map(|&e| (e + n - j) % n)
            .min()
            .expect("cycles have at least two elements")
    };

    // the separated corners at point j form a path from the h_j arc end
    // to the t_j arc end, the farthest-reaching polygon first; each
    // corner's previous neighbor fills its h-slot, the next its t-slot
    for j in 1..=n {
        at_point[j].sort_by_key(|&pi| std::cmp::Reverse(reach(pi, j)));
        let corner_slot = |pi: usize, j: usize| {
            let idx = polys[pi]
                .elements()
                .binary_search(&j)
                .expect("polygon is incident to the point");
            2 * idx
        };
        let mut chain: Vec<usize> = vec![h_leaf(j)];
        chain.extend(at_point[j].iter().map(|&pi| poly_base + pi));
        chain.push(t_leaf(j));
        for w in chain.windows(2) {
            let (a, b) = (w[0], w[1]);
            if verts[a].is_leaf() {
                verts[a].nbrs[0] = b;
            } else {
                let s = corner_slot(a - poly_base, j);
                verts[a].nbrs[s + 1] = b;
            }
            if verts[b].is_leaf() {
                verts[b].nbrs[0] = a;
            } else {
                let s = corner_slot(b - poly_base, j);
                verts[b].nbrs[s] = a;
            }
        }
    }
    debug_assert!(verts.iter().all(|v| !v.nbrs.contains(&usize::MAX)));

    let g = TreeGraph {
        verts,
        root: h_leaf(1),
        n,
    };
    let tree = g.to_plane_tree()?;
    debug_assert!({
        let mut alpha = crate::perm::TypeVector::zero();
        for p in polys {
            alpha.increment(p.len());
        }
        tree.validate(&alpha)
    });
    Ok(tree)
}

/// Inflates every internal vertex back into a polygon: each t-slot edge
/// of a vertex contracts to the circle point whose index the slot
/// inherits, and those points are the polygon's corners.
pub fn tree_to_cactus(tree: &PlaneTree) -> Result<Cactus> {
    let g = TreeGraph::from_tree(tree);
    let mut polygons = Vec::new();
    for v in g.internal_ids() {
        let deg = g.verts[v].nbrs.len();
        let mut corners: Vec<usize> = (0..deg)
            .filter(|&s| g.verts[v].slots[s] == LeafKind::T)
            .map(|s| g.inherited_index(v, s))
            .collect();
        corners.sort_unstable();
        polygons.push(Cycle::new(&corners)?);
    }
    Cactus::new(g.n, polygons)
}

/// Type of each internal vertex per the counterclockwise boundary walk
/// from the root: a vertex first reached right after a t-leaf is of type
/// h, otherwise of type t.  Equivalent to flipping the slot kind of the
/// vertex's parent edge.
#[allow(dead_code)]
pub(crate) fn walk_types(g: &TreeGraph) -> BTreeMap<usize, LeafKind> {
    let mut types = BTreeMap::new();
    let mut last = match g.verts[g.root].kind {
        VertKind::Leaf(l) => l.kind,
        VertKind::Internal => unreachable!("root is a leaf"),
    };
    for (_, b) in g.euler_tour() {
        match g.verts[b].kind {
            VertKind::Leaf(l) => last = l.kind,
            VertKind::Internal => {
                types.entry(b).or_insert_with(|| last.flip());
            }
        }
    }
    types
}

#[derive(Serialize, Deserialize)]
struct CactusRepr {
    n: usize,
    polygons: Vec<Vec<usize>>,
}

impl Serialize for Cactus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CactusRepr {
            n: self.n,
            polygons: self
                .polygons
                .iter()
                .map(|p| p.elements().to_vec())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cactus {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CactusRepr::deserialize(deserializer)?;
        let polygons = repr
            .polygons
            .iter()
            .map(|p| Cycle::new(p))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Cactus::new(repr.n, polygons).map_err(de::Error::custom)
    }
}

/// DOT rendering of the inscribed drawing: circle points pinned
/// counterclockwise on the unit circle, one edge per polygon side (a
/// transposition contributes its side twice).
pub fn cactus_to_dot(cactus: &Cactus) -> String {
    let n = cactus.n;
    let mut out = String::from("graph cactus {\n  node [shape=circle];\n");
    for j in 1..=n {
        let angle = 2.0 * std::f64::consts::PI * (j as f64 - 1.0) / n as f64;
        out.push_str(&format!(
            "  p{j} [label=\"{j}\", pos=\"{:.3},{:.3}!\"];\n",
            angle.cos(),
            angle.sin()
        ));
    }
    for p in &cactus.polygons {
        let e = p.elements();
        for i in 0..e.len() {
            let (a, b) = (e[i], e[(i + 1) % e.len()]);
            out.push_str(&format!("  p{a} -- p{b};\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_trees;
    use crate::perm::text::{parse_factorization, parse_multiset};
    use crate::perm::TypeVector;

    fn cyc(elems: &[usize]) -> Cycle {
        Cycle::new(elems).unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert!(!is_noncrossing(&cyc(&[1, 3]), &cyc(&[2, 4]), 4).unwrap());
        assert!(is_noncrossing(&cyc(&[1, 5, 6, 8]), &cyc(&[2, 3, 5]), 8).unwrap());
        let a = cyc(&[1, 3, 5]);
        assert!(is_noncrossing(&a, &a, 6).unwrap());
        // one shared point with the other point strictly inside a far gap
        assert!(!is_noncrossing(&cyc(&[1, 2, 4]), &cyc(&[1, 3]), 4).unwrap());
        // nesting through shared points only
        assert!(is_noncrossing(&cyc(&[1, 2, 3, 4]), &cyc(&[1, 3]), 4).unwrap());
        assert!(is_noncrossing(&cyc(&[1, 2]), &cyc(&[1, 2, 3]), 3).unwrap());
        assert_eq!(
            is_noncrossing(&cyc(&[1, 4, 2]), &cyc(&[1, 2]), 4).unwrap_err(),
            Error::NotIncreasing("(1 4 2)".into())
        );
    }

    fn condition_of(cycles: &[Cycle], n: usize) -> Option<u8> {
        match check_arrangeable(cycles, n) {
            Ok(()) => None,
            Err(Error::NotArrangeable { condition, .. }) => Some(condition),
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn arrangeability_worked_examples() {
        let crossing = parse_multiset("{(1 4 5),(1 3),(2 4)}").unwrap();
        assert_eq!(condition_of(&crossing, 5), Some(3));
        let looping = parse_multiset("{(1 4 5),(1 2 3),(3 4)}").unwrap();
        assert_eq!(condition_of(&looping, 5), Some(4));
        let good = parse_multiset("{(1 4 5),(1 2),(2 3)}").unwrap();
        assert_eq!(condition_of(&good, 5), None);
    }

    #[test]
    fn arrangeability_edge_cases() {
        assert!(is_arrangeable(&[], 1));
        assert!(!is_arrangeable(&[], 2));
        assert_eq!(condition_of(&[cyc(&[1, 2]), cyc(&[3, 4])], 4), Some(4));
        assert_eq!(condition_of(&[cyc(&[1, 2]), cyc(&[1, 2])], 2), Some(4));
        assert_eq!(condition_of(&[cyc(&[1, 2])], 3), Some(1));
        assert_eq!(condition_of(&[cyc(&[1, 4, 2]), cyc(&[2, 3])], 4), Some(2));
        assert_eq!(condition_of(&[cyc(&[1, 5])], 4), Some(1));
    }

    #[test]
    fn cover_equivalent_to_size_identity_when_tree_like() {
        // connected, increasing, noncrossing, acyclic touch structure:
        // covering every point and the size identity hold or fail together
        let cases: Vec<(Vec<Cycle>, usize)> = vec![
            (vec![cyc(&[1, 2]), cyc(&[2, 3])], 4),
            (vec![cyc(&[1, 2]), cyc(&[2, 3]), cyc(&[3, 4])], 4),
            (vec![cyc(&[1, 2, 3]), cyc(&[3, 4, 5])], 5),
            (vec![cyc(&[1, 2, 3])], 5),
        ];
        for (cycles, n) in cases {
            let covered = {
                let mut seen = vec![false; n + 1];
                for c in &cycles {
                    for &e in c.elements() {
                        seen[e] = true;
                    }
                }
                (1..=n).all(|j| seen[j])
            };
            let size_ok = 1 + cycles.iter().map(|c| c.len() - 1).sum::<usize>() == n;
            assert_eq!(covered, size_ok, "at {cycles:?} n={n}");
        }
    }

    #[test]
    fn arrange_trivial_and_worked() {
        let f = arrange(&[cyc(&[1, 2])], 2).unwrap();
        assert_eq!(f, parse_factorization("(1 2)", 2).unwrap());

        let cycles = parse_multiset("{(1 4 5),(1 2),(2 3)}").unwrap();
        let f = arrange(&cycles, 5).unwrap();
        let reference = parse_factorization("(1 4 5)(1 2)(2 3)", 5).unwrap();
        assert!(f.equivalent(&reference));
        assert!(f.evaluate().is_n_cycle());
    }

    #[test]
    fn arrange_large_worked_example() {
        let cycles = parse_multiset("{(1 5 6 8),(2 3 5),(4 5),(6 7)}").unwrap();
        let f = arrange(&cycles, 8).unwrap();
        let reference = parse_factorization("(4 5)(2 3 5)(1 5 6 8)(6 7)", 8).unwrap();
        assert!(f.equivalent(&reference));
    }

    #[test]
    fn arrange_rejects_with_diagnosis() {
        let cycles = parse_multiset("{(1 4 5),(1 3),(2 4)}").unwrap();
        match arrange(&cycles, 5) {
            Err(Error::NotArrangeable { condition: 3, .. }) => {}
            other => panic!("expected crossing diagnosis, got {other:?}"),
        }
    }

    #[test]
    fn single_polygon_becomes_one_vertex() {
        let cactus = Cactus::new(4, vec![cyc(&[1, 2, 3, 4])]).unwrap();
        let tree = cactus_to_tree(&cactus).unwrap();
        assert_eq!(tree.degree_census(), TypeVector::from_counts([(4, 1)]));
        assert_eq!(tree.leaf_count(), 8);
        assert_eq!(tree_to_cactus(&tree).unwrap(), cactus);
    }

    #[test]
    fn transposition_star_roundtrip() {
        let cactus = Cactus::new(2, vec![cyc(&[1, 2])]).unwrap();
        let tree = cactus_to_tree(&cactus).unwrap();
        assert_eq!(tree.leaf_count(), 4);
        assert_eq!(tree_to_cactus(&tree).unwrap(), cactus);
    }

    #[test]
    fn exhaustive_roundtrip_small_weights() {
        for w in 0..=3 {
            for alpha in TypeVector::all_with_weight(w) {
                for tree in enumerate_trees(&alpha) {
                    let cactus = tree_to_cactus(&tree).unwrap();
                    assert_eq!(cactus_to_tree(&cactus).unwrap(), tree, "at {alpha}");
                    let f = bijection::tree_to_factorization(&tree).unwrap();
                    assert_eq!(
                        cactus.polygons().to_vec(),
                        sorted_multiset(f.factors()),
                        "at {alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn walk_typing_matches_parent_slot() {
        let f = parse_factorization("(4 5)(2 3 5)(1 5 6 8)(6 7)", 8).unwrap();
        let tree = bijection::factorization_to_tree(&f).unwrap();
        let g = TreeGraph::from_tree(&tree);
        let types = walk_types(&g);
        assert_eq!(types.len(), g.internal_ids().len());
        for (&v, &ty) in &types {
            assert_eq!(ty, g.verts[v].slots[0].flip());
        }
    }

    #[test]
    fn cactus_json_roundtrip() {
        let cactus = Cactus::new(5, parse_multiset("{(1 4 5),(1 2),(2 3)}").unwrap()).unwrap();
        let json = serde_json::to_string(&cactus).unwrap();
        assert_eq!(json, r#"{"n":5,"polygons":[[1,2],[2,3],[1,4,5]]}"#);
        let back: Cactus = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cactus);
        let bad: std::result::Result<Cactus, _> =
            serde_json::from_str(r#"{"n":4,"polygons":[[1,3],[2,4]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn dot_pins_circle_points() {
        let cactus = Cactus::new(2, vec![cyc(&[1, 2])]).unwrap();
        let dot = cactus_to_dot(&cactus);
        assert!(dot.contains("p1 [label=\"1\", pos=\"1.000,0.000!\"]"));
        assert_eq!(dot.matches("p1 -- p2").count() + dot.matches("p2 -- p1").count(), 2);
    }
}
