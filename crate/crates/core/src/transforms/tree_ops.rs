//! Surgery on derivation trees: collapse, percolate, pruning of
//! non-branching nodes, and atomization of sister spans.
//!
//! These operate on the recorded tree, a representational object — the
//! derivation itself has already happened and is not re-run.

use crate::grammar::{DerivationTree, NodeId, Symbol, TreeNode};

use super::TransformError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeOp {
    /// Delete a child `0` under a branching `0`; its non-empty sister
    /// subtree takes the pair's place. The path selects the child.
    Collapse { path: Vec<usize> },
    /// Replace a branching `0` that immediately dominates `(0, x)` by the
    /// non-empty subtree `x`. The path selects the branching node.
    Percolate { path: Vec<usize> },
    /// Splice out a non-branching node adjacent to or immediately
    /// dominating an atomized node.
    UPrune { path: Vec<usize> },
    /// Replace `children[start..end]` of the selected node by a single
    /// bracketed constituent node.
    Atomize {
        parent_path: Vec<usize>,
        start: usize,
        end: usize,
    },
}

pub fn tree_transform(
    tree: &DerivationTree,
    op: &TreeOp,
) -> Result<DerivationTree, TransformError> {
    let mut nodes: Vec<TreeNode> = tree.nodes().to_vec();
    let mut roots: Vec<NodeId> = tree.roots().to_vec();

    match op {
        TreeOp::Collapse { path } => collapse(tree, &mut nodes, path)?,
        TreeOp::Percolate { path } => percolate(tree, &mut nodes, &mut roots, path)?,
        TreeOp::UPrune { path } => u_prune(tree, &mut nodes, &mut roots, path)?,
        TreeOp::Atomize {
            parent_path,
            start,
            end,
        } => atomize(tree, &mut nodes, parent_path, *start, *end)?,
    }

    Ok(compact(&nodes, &roots))
}

fn resolve(tree: &DerivationTree, path: &[usize]) -> Result<NodeId, TransformError> {
    tree.resolve_path(path)
        .ok_or_else(|| TransformError::InvalidSelector {
            path: path.to_vec(),
        })
}

fn is_zero(node: &TreeNode) -> bool {
    node.symbol.as_str() == "0"
}

fn collapse(
    tree: &DerivationTree,
    nodes: &mut [TreeNode],
    path: &[usize],
) -> Result<(), TransformError> {
    let child = resolve(tree, path)?;
    if path.len() < 2 {
        return Err(TransformError::NotApplicable(
            "a root has no dominating node".into(),
        ));
    }
    let parent = resolve(tree, &path[..path.len() - 1])?;
    if !is_zero(&nodes[child]) || !is_zero(&nodes[parent]) {
        return Err(TransformError::NotApplicable(
            "collapse wants a 0 immediately dominated by a branching 0".into(),
        ));
    }
    if nodes[parent].children.len() != 2 {
        return Err(TransformError::NotApplicable(
            "the dominating 0 must branch into a pair".into(),
        ));
    }
    let sister = *nodes[parent]
        .children
        .iter()
        .find(|&&c| c != child)
        .expect("a pair has a second member");
    if nodes[sister].erased {
        return Err(TransformError::EmptySister);
    }
    nodes[parent].children = vec![sister];
    Ok(())
}

fn percolate(
    tree: &DerivationTree,
    nodes: &mut [TreeNode],
    roots: &mut [NodeId],
    path: &[usize],
) -> Result<(), TransformError> {
    let target = resolve(tree, path)?;
    if !is_zero(&nodes[target]) || nodes[target].children.len() != 2 {
        return Err(TransformError::NotApplicable(
            "percolate wants a branching 0 over a pair".into(),
        ));
    }
    let children = nodes[target].children.clone();
    let zero_child = *children
        .iter()
        .find(|&&c| is_zero(&nodes[c]))
        .ok_or_else(|| TransformError::NotApplicable("no 0 among the children".into()))?;
    let carried = *children.iter().find(|&&c| c != zero_child).expect("pair");
    if nodes[carried].erased {
        return Err(TransformError::EmptySister);
    }

    if path.len() == 1 {
        roots[path[0]] = carried;
    } else {
        let parent = resolve(tree, &path[..path.len() - 1])?;
        let slot = nodes[parent]
            .children
            .iter()
            .position(|&c| c == target)
            .expect("target is its parent's child");
        nodes[parent].children[slot] = carried;
    }
    Ok(())
}

fn u_prune(
    tree: &DerivationTree,
    nodes: &mut [TreeNode],
    roots: &mut [NodeId],
    path: &[usize],
) -> Result<(), TransformError> {
    let target = resolve(tree, path)?;
    if nodes[target].children.len() != 1 {
        return Err(TransformError::NotApplicable(
            "only non-branching nodes can be pruned".into(),
        ));
    }
    let child = nodes[target].children[0];

    let dominates_atom = nodes[child].atom;
    let adjacent_atom = if path.len() >= 2 {
        let parent = resolve(tree, &path[..path.len() - 1])?;
        nodes[parent]
            .children
            .iter()
            .any(|&c| c != target && nodes[c].atom)
    } else {
        false
    };
    if !dominates_atom && !adjacent_atom {
        return Err(TransformError::NotApplicable(
            "pruning applies adjacent to or immediately dominating an atomized node".into(),
        ));
    }

    if path.len() == 1 {
        roots[path[0]] = child;
    } else {
        let parent = resolve(tree, &path[..path.len() - 1])?;
        let slot = nodes[parent]
            .children
            .iter()
            .position(|&c| c == target)
            .expect("target is its parent's child");
        nodes[parent].children[slot] = child;
    }
    Ok(())
}

fn atomize(
    tree: &DerivationTree,
    nodes: &mut Vec<TreeNode>,
    parent_path: &[usize],
    start: usize,
    end: usize,
) -> Result<(), TransformError> {
    let parent = resolve(tree, parent_path)?;
    let len = nodes[parent].children.len();
    if start >= end || end > len {
        return Err(TransformError::InvalidSpan { start, end, len });
    }
    let span: Vec<NodeId> = nodes[parent].children[start..end].to_vec();
    if span.iter().any(|&c| nodes[c].erased) {
        return Err(TransformError::EmptySister);
    }

    let label: String = {
        let inner: String = span.iter().map(|&c| nodes[c].symbol.as_str()).collect();
        format!("[{inner}]")
    };
    let symbol = Symbol::new(&label).expect("bracketed labels are valid symbol names");
    let children: Vec<NodeId> = span
        .iter()
        .flat_map(|&c| nodes[c].children.clone())
        .collect();
    let generation = nodes[span[0]].generation;

    let atom_id = nodes.len();
    nodes.push(TreeNode {
        symbol,
        generation,
        children,
        erased: false,
        atom: true,
    });
    nodes[parent].children.splice(start..end, [atom_id]);
    Ok(())
}

/// Rebuilds a clean arena holding only the nodes reachable from the roots.
fn compact(nodes: &[TreeNode], roots: &[NodeId]) -> DerivationTree {
    let mut order: Vec<NodeId> = Vec::new();
    let mut new_id = vec![usize::MAX; nodes.len()];

    fn visit(id: NodeId, nodes: &[TreeNode], order: &mut Vec<NodeId>, new_id: &mut [usize]) {
        if new_id[id] != usize::MAX {
            return;
        }
        new_id[id] = order.len();
        order.push(id);
        for &child in &nodes[id].children {
            visit(child, nodes, order, new_id);
        }
    }
    for &root in roots {
        visit(root, nodes, &mut order, &mut new_id);
    }

    let mut depth = 0usize;
    let compacted: Vec<TreeNode> = order
        .iter()
        .map(|&old| {
            let mut node = nodes[old].clone();
            node.children = node.children.iter().map(|&c| new_id[c]).collect();
            node
        })
        .collect();

    // Depth by traversal, since surgery may have changed levels.
    fn measure(id: NodeId, level: usize, nodes: &[TreeNode], depth: &mut usize) {
        *depth = (*depth).max(level);
        for &child in &nodes[id].children {
            measure(child, level + 1, nodes, depth);
        }
    }
    let new_roots: Vec<NodeId> = roots.iter().map(|&r| new_id[r]).collect();
    for &root in &new_roots {
        measure(root, 0, &compacted, &mut depth);
    }

    DerivationTree::from_raw(compacted, new_roots, depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{derive_tree, parse_grammar};

    /// 0(0, 1): a branching 0 over a 0 and a 1, via 0 -> 0 1 at depth 1.
    fn fragment() -> DerivationTree {
        let g = parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 0\n").unwrap();
        derive_tree(&g, 1).unwrap()
    }

    /// 0(0, e) with e erasing.
    fn fragment_with_empty_sister() -> DerivationTree {
        let g = parse_grammar("axiom: 0\n0 -> 0 e\ne -> ~\n").unwrap();
        derive_tree(&g, 1).unwrap()
    }

    #[test]
    fn collapse_leaves_the_sister_alone_under_the_parent() {
        let out = tree_transform(&fragment(), &TreeOp::Collapse { path: vec![0, 0] }).unwrap();
        let root = out.node(out.roots()[0]);
        assert_eq!(root.symbol.as_str(), "0");
        assert_eq!(root.children.len(), 1);
        assert_eq!(out.node(root.children[0]).symbol.as_str(), "1");
        assert_eq!(out.node_count(), 2);
    }

    #[test]
    fn percolate_replaces_the_branching_zero_by_the_carried_child() {
        let out = tree_transform(&fragment(), &TreeOp::Percolate { path: vec![0] }).unwrap();
        assert_eq!(out.node_count(), 1);
        assert_eq!(out.node(out.roots()[0]).symbol.as_str(), "1");
        assert_eq!(out.depth(), 0);
    }

    #[test]
    fn empty_sisters_block_both_operations() {
        let tree = fragment_with_empty_sister();
        assert!(matches!(
            tree_transform(&tree, &TreeOp::Collapse { path: vec![0, 0] }),
            Err(TransformError::EmptySister)
        ));
        assert!(matches!(
            tree_transform(&tree, &TreeOp::Percolate { path: vec![0] }),
            Err(TransformError::EmptySister)
        ));
    }

    #[test]
    fn atomize_shrinks_the_frontier_by_the_span() {
        let tree = fragment();
        let out = tree_transform(
            &tree,
            &TreeOp::Atomize {
                parent_path: vec![0],
                start: 0,
                end: 2,
            },
        )
        .unwrap();
        let root = out.node(out.roots()[0]);
        assert_eq!(root.children.len(), 1);
        let atom = out.node(root.children[0]);
        assert_eq!(atom.symbol.as_str(), "[01]");
        assert!(atom.atom);
        assert_eq!(tree.frontier(1).len() - 1, out.frontier(1).len());
    }

    #[test]
    fn u_prune_wants_an_atom_nearby() {
        // Build 0(0(...), 1(...)) at depth 2, atomize under the left child,
        // then prune the now unary left child.
        let g = parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 0\n").unwrap();
        let tree = derive_tree(&g, 2).unwrap();
        let refused = tree_transform(&tree, &TreeOp::UPrune { path: vec![0, 0] });
        assert!(matches!(refused, Err(TransformError::NotApplicable(_))));

        let atomized = tree_transform(
            &tree,
            &TreeOp::Atomize {
                parent_path: vec![0, 0],
                start: 0,
                end: 2,
            },
        )
        .unwrap();
        let pruned = tree_transform(&atomized, &TreeOp::UPrune { path: vec![0, 0] }).unwrap();
        // The unary 0 is gone; the atom hangs directly under the root.
        let root = pruned.node(pruned.roots()[0]);
        assert_eq!(pruned.node(root.children[0]).symbol.as_str(), "[01]");
    }

    #[test]
    fn untouched_regions_are_identical() {
        let g = parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 0\n").unwrap();
        let tree = derive_tree(&g, 3).unwrap();
        let out = tree_transform(
            &tree,
            &TreeOp::Collapse {
                path: vec![0, 0, 0],
            },
        )
        .unwrap();
        // The right subtree of the root (the 1-side) is untouched: same
        // frontier contribution.
        let right_before = tree.resolve_path(&[0, 1]).unwrap();
        let right_after = out.resolve_path(&[0, 1]).unwrap();
        assert_eq!(
            render_subtree(&tree, right_before),
            render_subtree(&out, right_after),
            "complement of the selected region must not change"
        );
        assert_ne!(out.frontier(3), tree.frontier(3));
    }

    fn render_subtree(tree: &DerivationTree, id: crate::grammar::NodeId) -> String {
        let node = tree.node(id);
        let children: Vec<String> = node
            .children
            .iter()
            .map(|&c| render_subtree(tree, c))
            .collect();
        format!("{}({})", node.symbol, children.join(","))
    }

    #[test]
    fn invalid_selectors_are_reported() {
        assert!(matches!(
            tree_transform(&fragment(), &TreeOp::Collapse { path: vec![0, 7] }),
            Err(TransformError::InvalidSelector { .. })
        ));
        assert!(matches!(
            tree_transform(
                &fragment(),
                &TreeOp::Atomize {
                    parent_path: vec![0],
                    start: 1,
                    end: 1
                }
            ),
            Err(TransformError::InvalidSpan { .. })
        ));
    }
}
