//! Pruning constituent chunks out of rule bodies.

use crate::analysis::is_fib_constituent;
use crate::grammar::{LGrammar, Production, Symbol, SymbolString};
use crate::mappings::MappingExpr;

use super::TransformError;

/// Excises `chunk` from the body of `target` at `position`.
///
/// The chunk must actually occur there and must be a natural Fibonacci
/// constituent: a generation, or — with `allow_mappings` — an admitted
/// mirror/negative image of one. Everything else in the grammar is left
/// untouched.
pub fn prune_rule(
    grammar: &LGrammar,
    target: &Symbol,
    chunk: &SymbolString,
    position: usize,
    allow_mappings: bool,
) -> Result<LGrammar, TransformError> {
    let (pruned, _) = prune_rule_with_evidence(grammar, target, chunk, position, allow_mappings)?;
    Ok(pruned)
}

/// Like [`prune_rule`], also returning which generation and mapping
/// justified the chunk.
pub fn prune_rule_with_evidence(
    grammar: &LGrammar,
    target: &Symbol,
    chunk: &SymbolString,
    position: usize,
    allow_mappings: bool,
) -> Result<(LGrammar, (usize, MappingExpr)), TransformError> {
    let constituent =
        is_fib_constituent(chunk, allow_mappings).map_err(|e| TransformError::NotConstituent {
            chunk: chunk.render(),
            detail: format!(" ({e})"),
        })?;
    if !constituent.yes {
        return Err(TransformError::NotConstituent {
            chunk: chunk.render(),
            detail: String::new(),
        });
    }

    let production = grammar
        .production(target)
        .ok_or_else(|| TransformError::NoSuchRule {
            symbol: target.as_str().to_string(),
        })?;
    let rhs = production.rhs();
    let occurs = position + chunk.len() <= rhs.len()
        && rhs[position..position + chunk.len()] == *chunk.symbols();
    if !occurs {
        return Err(TransformError::NotPresent {
            chunk: chunk.render(),
            rule: target.as_str().to_string(),
            position,
        });
    }

    let mut new_rhs = rhs.to_vec();
    new_rhs.drain(position..position + chunk.len());
    let productions = grammar
        .productions()
        .iter()
        .map(|p| {
            if p.lhs() == target {
                Production::new(target.clone(), new_rhs.clone())
            } else {
                p.clone()
            }
        })
        .collect();
    let pruned = LGrammar::from_parts(grammar.axiom().to_vec(), productions)
        .expect("pruning preserves well-formedness");
    let evidence = (
        constituent
            .generation
            .expect("constituent match carries its generation"),
        constituent
            .mapping
            .expect("constituent match carries its mapping"),
    );
    Ok((pruned, evidence))
}
