//! Tree interchange: JSON (a leaf is the string "leaf", an internal vertex
//! a list of children, the whole tree `{"root_child": ...}`) and DOT export
//! with leaf labels.

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::{Node, PlaneTree};

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Node::Leaf => serializer.serialize_str("leaf"),
            Node::Internal(children) => {
                let mut seq = serializer.serialize_seq(Some(children.len()))?;
                for c in children {
                    seq.serialize_element(c)?;
                }
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Node {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct NodeVisitor;

        impl<'de> Visitor<'de> for NodeVisitor {
            type Value = Node;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("the string \"leaf\" or a list of child nodes")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Node, E> {
                if v == "leaf" {
                    Ok(Node::Leaf)
                } else {
                    Err(E::custom(format!("unknown node tag {v:?}")))
                }
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Node, A::Error> {
                let mut children = Vec::new();
                while let Some(c) = seq.next_element()? {
                    children.push(c);
                }
                Ok(Node::Internal(children))
            }
        }

        deserializer.deserialize_any(NodeVisitor)
    }
}

#[derive(Serialize, Deserialize)]
struct TreeRepr {
    root_child: Node,
}

impl Serialize for PlaneTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TreeRepr {
            root_child: self.root_child().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PlaneTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TreeRepr::deserialize(deserializer)?;
        PlaneTree::new(repr.root_child).map_err(de::Error::custom)
    }
}

/// Renders the tree in DOT, leaves labeled h1, t1, ...
pub fn tree_to_dot(tree: &PlaneTree) -> String {
    let g = super::graph::TreeGraph::from_tree(tree);
    let mut out = String::from("graph planetree {\n  node [shape=circle];\n");
    for (id, v) in g.verts.iter().enumerate() {
        match v.label() {
            Some(label) => out.push_str(&format!(
                "  v{id} [label=\"{label}\", shape=plaintext];\n"
            )),
            None => out.push_str(&format!("  v{id} [label=\"\"];\n")),
        }
    }
    for (id, v) in g.verts.iter().enumerate() {
        for &u in &v.nbrs {
            if id < u {
                out.push_str(&format!("  v{id} -- v{u};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}
