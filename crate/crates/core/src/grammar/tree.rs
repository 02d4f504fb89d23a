//! Derivation trees.
//!
//! A derivation tree records one node per symbol occurrence per generation.
//! Reading the nodes at depth `t` left to right recovers generation `t`.
//! Stumps repeat as unary chains; erasing symbols are leaves flagged as
//! denoting the empty string.

use std::fmt::Write as _;

use super::derive::{derive_with, DeriveOptions};
use super::symbol::{Symbol, SymbolString};
use super::{GrammarError, LGrammar};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub symbol: Symbol,
    pub generation: usize,
    pub children: Vec<NodeId>,
    /// The symbol rewrites to the empty string; the node is a leaf that
    /// stands for nothing in later generations.
    pub erased: bool,
    /// Produced by the atomize tree operation, never by derivation.
    pub atom: bool,
}

/// An ordered tree (forest, when the axiom has several symbols) over
/// arena-allocated nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTree {
    nodes: Vec<TreeNode>,
    roots: Vec<NodeId>,
    depth: usize,
}

impl DerivationTree {
    pub(crate) fn from_raw(nodes: Vec<TreeNode>, roots: Vec<NodeId>, depth: usize) -> Self {
        DerivationTree {
            nodes,
            roots,
            depth,
        }
    }

    pub fn node(&self, id: NodeId) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// The nodes at exactly `depth`, left to right, as a string.
    pub fn frontier(&self, depth: usize) -> SymbolString {
        let mut out = Vec::new();
        for &root in &self.roots {
            self.collect_at_depth(root, 0, depth, &mut out);
        }
        SymbolString::new(out).with_generation(depth)
    }

    fn collect_at_depth(&self, id: NodeId, level: usize, target: usize, out: &mut Vec<Symbol>) {
        let node = &self.nodes[id];
        if level == target {
            out.push(node.symbol.clone());
            return;
        }
        for &child in &node.children {
            self.collect_at_depth(child, level + 1, target, out);
        }
    }

    /// The leaves, left to right. On a freshly derived tree this is the
    /// final generation with erased leaves dropped along the way.
    pub fn leaves(&self) -> SymbolString {
        let mut out = Vec::new();
        for &root in &self.roots {
            self.collect_leaves(root, &mut out);
        }
        SymbolString::new(out)
    }

    fn collect_leaves(&self, id: NodeId, out: &mut Vec<Symbol>) {
        let node = &self.nodes[id];
        if node.children.is_empty() {
            out.push(node.symbol.clone());
        } else {
            for &child in &node.children {
                self.collect_leaves(child, out);
            }
        }
    }

    /// Resolves a path of child indices starting with the root index.
    pub fn resolve_path(&self, path: &[usize]) -> Option<NodeId> {
        let (&root_index, rest) = path.split_first()?;
        let mut id = *self.roots.get(root_index)?;
        for &child_index in rest {
            id = *self.nodes[id].children.get(child_index)?;
        }
        Some(id)
    }

    pub fn parent_of(&self, id: NodeId) -> Option<NodeId> {
        self.nodes.iter().position(|n| n.children.contains(&id))
    }

    /// Indented text rendering, one node per line.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for &root in &self.roots {
            self.render_node(root, 0, &mut out);
        }
        out
    }

    fn render_node(&self, id: NodeId, indent: usize, out: &mut String) {
        let node = &self.nodes[id];
        let marker = if node.erased { " (erases)" } else { "" };
        let _ = writeln!(out, "{}{}{}", "  ".repeat(indent), node.symbol, marker);
        for &child in &node.children {
            self.render_node(child, indent + 1, out);
        }
    }
}

/// Builds the depth-`n` derivation tree. Node count equals the sum of the
/// generation lengths.
pub fn derive_tree(grammar: &LGrammar, n: usize) -> Result<DerivationTree, GrammarError> {
    derive_tree_with(grammar, n, &DeriveOptions::default())
}

pub fn derive_tree_with(
    grammar: &LGrammar,
    n: usize,
    options: &DeriveOptions,
) -> Result<DerivationTree, GrammarError> {
    let derivation = derive_with(grammar, n, options)?;
    let mut nodes: Vec<TreeNode> = Vec::new();
    let mut roots: Vec<NodeId> = Vec::new();

    // One layer of node ids per generation, in string order.
    let mut previous_layer: Vec<NodeId> = Vec::new();
    for (t, generation) in derivation.generations().iter().enumerate() {
        let mut layer = Vec::with_capacity(generation.len());
        for symbol in generation.iter() {
            let id = nodes.len();
            nodes.push(TreeNode {
                symbol: symbol.clone(),
                generation: t,
                children: Vec::new(),
                erased: grammar.is_erasing(symbol),
                atom: false,
            });
            layer.push(id);
        }
        if t == 0 {
            roots = layer.clone();
        } else {
            // Attach this layer under the previous one: each parent takes
            // as many children as its body produced.
            let mut cursor = 0usize;
            for &parent in &previous_layer {
                let parent_symbol = nodes[parent].symbol.clone();
                let arity = match grammar.production(&parent_symbol) {
                    Some(p) => p.rhs().len(),
                    None => 1,
                };
                let children: Vec<NodeId> = layer[cursor..cursor + arity].to_vec();
                cursor += arity;
                nodes[parent].children = children;
            }
            debug_assert_eq!(cursor, layer.len());
        }
        previous_layer = layer;
    }

    Ok(DerivationTree::from_raw(nodes, roots, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_grammar;

    fn s(text: &str) -> SymbolString {
        SymbolString::from_text(text).unwrap()
    }

    #[test]
    fn fib_tree_node_count_and_frontier() {
        let fib = parse_grammar("axiom: 0\n0 -> 1\n1 -> 0 1\n").unwrap();
        let tree = derive_tree(&fib, 3).unwrap();
        // 1 + 1 + 2 + 3 nodes over the four generations.
        assert_eq!(tree.node_count(), 7);
        assert_eq!(tree.frontier(3), s("101"));
    }

    #[test]
    fn xor_tree_is_complete_binary() {
        let xor = parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 0\n").unwrap();
        let tree = derive_tree(&xor, 2).unwrap();
        assert_eq!(tree.frontier(2), s("0110"));
        assert_eq!(tree.node_count(), 1 + 2 + 4);
        for id in 0..tree.node_count() {
            let node = tree.node(id);
            assert!(node.children.len() == 2 || node.generation == 2);
        }
    }

    #[test]
    fn zero_depth_tree_is_a_single_root() {
        let fib = parse_grammar("axiom: 0\n0 -> 1\n1 -> 0 1\n").unwrap();
        let tree = derive_tree(&fib, 0).unwrap();
        assert_eq!(tree.node_count(), 1);
        assert!(tree.node(tree.roots()[0]).children.is_empty());
    }

    #[test]
    fn every_frontier_matches_its_generation() {
        let efib1 = parse_grammar("axiom: 0\n0 -> 1 e\n1 -> 0 1\ne -> ~\n").unwrap();
        let tree = derive_tree(&efib1, 6).unwrap();
        let d = crate::grammar::derive(&efib1, 6).unwrap();
        for t in 0..=6 {
            assert_eq!(
                &tree.frontier(t),
                &d.generations()[t],
                "frontier at depth {t}"
            );
        }
    }

    #[test]
    fn stumps_form_unary_chains() {
        let g = parse_grammar("axiom: 0\n0 -> 0 q\n").unwrap();
        let tree = derive_tree(&g, 3).unwrap();
        // Frontier: 0 q q q; the first q sits under a chain of q nodes.
        assert_eq!(tree.frontier(3), s("0qqq"));
        let path_to_q = tree.resolve_path(&[0, 1]).unwrap();
        assert_eq!(tree.node(path_to_q).children.len(), 1);
    }

    #[test]
    fn multi_symbol_axioms_build_forests() {
        let g = parse_grammar("axiom: 0 1\n0 -> 0 1\n1 -> 1 0\n").unwrap();
        let tree = derive_tree(&g, 2).unwrap();
        assert_eq!(tree.roots().len(), 2);
        assert_eq!(tree.frontier(0), s("01"));
        assert_eq!(tree.frontier(2), s("01101001"));
        assert_eq!(tree.node_count(), 2 + 4 + 8);
        assert!(tree.resolve_path(&[1, 0]).is_some());
        assert!(tree.resolve_path(&[2]).is_none());
    }

    #[test]
    fn erasing_nodes_are_marked_leaves() {
        let efib1 = parse_grammar("axiom: 0\n0 -> 1 e\n1 -> 0 1\ne -> ~\n").unwrap();
        let tree = derive_tree(&efib1, 2).unwrap();
        let erased: Vec<_> = tree.nodes().iter().filter(|n| n.erased).collect();
        assert!(!erased.is_empty());
        assert!(erased.iter().all(|n| n.children.is_empty()));
    }
}
