//! Subcommand implementations. Each returns the final rendering (text or
//! JSON) or a classified error.

use std::io::Read;

use serde_json::{json, Value};

use lspace_core::analysis::{
    count_profile, decompose_self_referential, fib_legal_generation, ratio_profiles_equal,
    repetition_stats, DecompositionKind,
};
use lspace_core::automata::{ca_run, Boundary, CAState, RuleTable};
use lspace_core::classifier::{
    classify, detect_frustration, rule_format, Asymmetry, AxiomRule, CountingMode, Family,
    FrustrationVerdict, NonAxiomRule, RewriteRule,
};
use lspace_core::golden;
use lspace_core::grammar::{
    derive_sequential_grammar, derive_tree_with, derive_with, parse_grammar,
    parse_sequential_grammar, DerivationTree, DeriveOptions, LGrammar, NodeId, Symbol,
    SymbolString, DEFAULT_LENGTH_CAP,
};
use lspace_core::mappings::{apply_expr, Involution, MappingExpr};
use lspace_core::transforms::{
    expand_generations, prune_rule, reduce_to_minimal, tree_transform, ExpansionSpec,
    ReductionOutcome, ReductionStep, ReductionTarget, TreeOp,
};

use crate::{AnalyzeReport, BoundaryArg, Cli, Command};

pub enum CliError {
    /// Runtime/domain failure: exit 1.
    Domain(String),
    /// Malformed flag values: exit 2.
    Usage(String),
    /// The reproduce table had failures: printed to stdout, exit 1.
    ChecksFailed(String),
}

impl From<lspace_core::grammar::GrammarError> for CliError {
    fn from(e: lspace_core::grammar::GrammarError) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let options = derive_options(cli)?;
    match &cli.command {
        Command::Derive(args) => derive_cmd(cli, args, &options),
        Command::DeriveSeq(args) => derive_seq_cmd(cli, args),
        Command::Tree(args) => tree_cmd(cli, args, &options),
        Command::Map(args) => map_cmd(cli, args),
        Command::Classify(args) => classify_cmd(cli, args),
        Command::Format(args) => format_cmd(cli, args),
        Command::Frustration(args) => frustration_cmd(cli, args),
        Command::Analyze(args) => analyze_cmd(cli, args, &options),
        Command::Transform(args) => transform_cmd(cli, args, &options),
        Command::Equiv(args) => equiv_cmd(cli, args),
        Command::Ca(args) => ca_cmd(cli, args),
        Command::Reproduce => reproduce_cmd(cli),
    }
}

fn derive_options(cli: &Cli) -> Result<DeriveOptions, CliError> {
    let from_env = match std::env::var("LSPACE_LENGTH_CAP") {
        Ok(text) => Some(text.parse::<usize>().map_err(|_| {
            CliError::Usage(format!(
                "LSPACE_LENGTH_CAP must be an integer, got `{text}`"
            ))
        })?),
        Err(_) => None,
    };
    let length_cap = cli.length_cap.or(from_env).unwrap_or(DEFAULT_LENGTH_CAP);
    Ok(DeriveOptions { length_cap })
}

fn load_grammar(path: &str) -> Result<LGrammar, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read `{path}`: {e}")))?;
    parse_grammar(&text).map_err(|e| CliError::Domain(format!("{path}: {e}")))
}

fn parse_symbol(text: &str) -> Result<Symbol, CliError> {
    Symbol::new(text).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_string(text: &str) -> Result<SymbolString, CliError> {
    SymbolString::from_text(text).map_err(|e| CliError::Usage(e.to_string()))
}

fn render(cli: &Cli, value: Value, text: String) -> Result<String, CliError> {
    if cli.json {
        serde_json::to_string_pretty(&value)
            .map_err(|e| CliError::Domain(format!("serialization: {e}")))
    } else {
        Ok(text)
    }
}

// ---------------------------------------------------------------------------
// derive / derive-seq / tree
// ---------------------------------------------------------------------------

fn derive_cmd(
    cli: &Cli,
    args: &crate::DeriveArgs,
    options: &DeriveOptions,
) -> Result<String, CliError> {
    let grammar = load_grammar(&args.file)?;
    let derivation =
        derive_with(&grammar, args.gens, options).map_err(|e| CliError::Domain(e.to_string()))?;
    let rows: Vec<String> = derivation
        .generations()
        .iter()
        .map(SymbolString::render)
        .collect();
    let value = json!({ "generations": rows });
    render(cli, value, rows.join("\n"))
}

fn derive_seq_cmd(cli: &Cli, args: &crate::DeriveSeqArgs) -> Result<String, CliError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Domain(format!("cannot read `{}`: {e}", args.file)))?;
    let grammar = parse_sequential_grammar(&text)
        .map_err(|e| CliError::Domain(format!("{}: {e}", args.file)))?;
    let derivation = derive_sequential_grammar(&grammar, args.steps);
    let rows: Vec<String> = derivation
        .forms()
        .iter()
        .map(SymbolString::render)
        .collect();
    let value = json!({
        "forms": rows,
        "halted": derivation.halted(),
        "truncated": derivation.truncated(),
    });
    let mut text = rows.join("\n");
    if derivation.truncated() {
        text.push_str("\n(truncated by step limit)");
    }
    render(cli, value, text)
}

fn tree_json(tree: &DerivationTree, id: NodeId) -> Value {
    let node = tree.node(id);
    json!({
        "symbol": node.symbol.as_str(),
        "generation": node.generation,
        "erased": node.erased,
        "atom": node.atom,
        "children": node.children.iter().map(|&c| tree_json(tree, c)).collect::<Vec<_>>(),
    })
}

fn tree_to_value(tree: &DerivationTree) -> Value {
    json!({
        "depth": tree.depth(),
        "node_count": tree.node_count(),
        "roots": tree.roots().iter().map(|&r| tree_json(tree, r)).collect::<Vec<_>>(),
    })
}

fn tree_cmd(
    cli: &Cli,
    args: &crate::TreeArgs,
    options: &DeriveOptions,
) -> Result<String, CliError> {
    let grammar = load_grammar(&args.file)?;
    let tree = derive_tree_with(&grammar, args.gens, options)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    render(
        cli,
        tree_to_value(&tree),
        tree.render_ascii().trim_end().to_string(),
    )
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

fn parse_involution(spec: Option<&str>) -> Result<Involution, CliError> {
    match spec {
        None => Ok(Involution::binary()),
        Some(text) => {
            let mut pairs = Vec::new();
            for part in text.split(',') {
                let (a, b) = part
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(format!("`{part}` is not `sym=sym`")))?;
                pairs.push((parse_symbol(a.trim())?, parse_symbol(b.trim())?));
            }
            Involution::from_pairs(&pairs).map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

fn map_cmd(cli: &Cli, args: &crate::MapArgs) -> Result<String, CliError> {
    let expr = MappingExpr::parse(&args.expr).map_err(|e| CliError::Usage(e.to_string()))?;
    let involution = parse_involution(args.involution.as_deref())?;

    let mut input = String::new();
    std::io::stdin()
        .read_to_string(&mut input)
        .map_err(|e| CliError::Domain(format!("reading stdin: {e}")))?;
    let string = parse_string(input.trim_end_matches(['\n', '\r'])).map_err(|e| match e {
        CliError::Usage(m) => CliError::Domain(m),
        other => other,
    })?;

    let image =
        apply_expr(expr, &string, &involution).map_err(|e| CliError::Domain(e.to_string()))?;
    let value = json!({
        "expr": expr.to_string(),
        "input": string.render(),
        "output": image.render(),
    });
    render(cli, value, image.render())
}

// ---------------------------------------------------------------------------
// classify / format / frustration
// ---------------------------------------------------------------------------

fn classify_cmd(cli: &Cli, args: &crate::ClassifyArgs) -> Result<String, CliError> {
    let grammar = load_grammar(&args.file)?;
    let mode = CountingMode {
        index_counts_stumps: args.count_stumps,
        containment_includes_stumps: !args.containment_excludes_stumps,
    };
    let report = classify(&grammar, mode);

    let asymmetry = match report.asymmetry {
        Asymmetry::None => "none",
        Asymmetry::Weak => "weak",
        Asymmetry::Strong => "strong",
    };
    let value = json!({
        "symmetric": report.symmetric,
        "asymmetry": asymmetry,
        "strong_term": report.strong_term.as_ref().map(|s| s.as_str()),
        "weak_term": report.weak_term.as_ref().map(|s| s.as_str()),
        "remainder": report.remainder.as_ref().map(SymbolString::render),
        "remainder_is_fib_constituent": report.remainder_is_fib_constituent,
        "exhaustive": report.exhaustive,
        "mode": {
            "index_counts_stumps": mode.index_counts_stumps,
            "containment_includes_stumps": mode.containment_includes_stumps,
        },
    });

    let mut lines = vec![
        format!("symmetric:  {}", report.symmetric),
        format!("asymmetry:  {asymmetry}"),
        format!("exhaustive: {}", report.exhaustive),
    ];
    if let (Some(weak), Some(strong)) = (&report.weak_term, &report.strong_term) {
        lines.push(format!("weak term:   {weak}"));
        lines.push(format!("strong term: {strong}"));
    }
    if let Some(remainder) = &report.remainder {
        let constituent = match report.remainder_is_fib_constituent {
            Some(true) => " (a Fib constituent)",
            Some(false) => " (not a Fib constituent)",
            None => "",
        };
        lines.push(format!("remainder:   {}{constituent}", remainder.render()));
    }
    lines.push(format!(
        "mode: index_counts_stumps={} containment_includes_stumps={}",
        mode.index_counts_stumps, mode.containment_includes_stumps
    ));
    render(cli, value, lines.join("\n"))
}

fn format_cmd(cli: &Cli, args: &crate::FormatArgs) -> Result<String, CliError> {
    let grammar = load_grammar(&args.file)?;
    let format = rule_format(&grammar).map_err(|e| CliError::Domain(e.to_string()))?;
    let axiom_rule = match format.axiom_rule {
        AxiomRule::I => "i",
        AxiomRule::Ii => "ii",
        AxiomRule::Iii => "iii",
    };
    let nonaxiom_rule = match format.nonaxiom_rule {
        NonAxiomRule::Iv => "iv",
        NonAxiomRule::V => "v",
        NonAxiomRule::Vi => "vi",
    };
    let family = match format.family {
        Family::Fib => "Fib",
        Family::Xor => "XOR",
        Family::Feigenbaum => "Feigenbaum",
        Family::TrivialAlternation => "trivial-alternation",
        Family::FibMappable => "fib-mappable",
        Family::Degenerate => "degenerate",
    };
    let value = json!({
        "axiom_rule": axiom_rule,
        "nonaxiom_rule": nonaxiom_rule,
        "family": family,
    });
    render(
        cli,
        value,
        format!("axiom rule ({axiom_rule}), non-axiom rule ({nonaxiom_rule}): family {family}"),
    )
}

fn frustration_cmd(cli: &Cli, args: &crate::FrustrationArgs) -> Result<String, CliError> {
    let rules = args
        .rules
        .iter()
        .map(|spec| {
            let (lhs, rhs) = spec
                .split_once("->")
                .ok_or_else(|| CliError::Usage(format!("`{spec}` is not `LHS->RHS`")))?;
            Ok(RewriteRule {
                lhs: parse_string(lhs.trim())?,
                rhs: parse_string(rhs.trim())?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let sample = parse_string(&args.sample)?;
    let report = detect_frustration(&rules, &sample, args.bound);

    let verdict = match report.verdict {
        FrustrationVerdict::Frustrated => "frustrated",
        FrustrationVerdict::NotFrustrated => "not-frustrated",
        FrustrationVerdict::NotApplicable => "not-applicable",
    };
    let value = json!({
        "verdict": verdict,
        "sample": report.sample.render(),
        "matches": report.matches.iter().map(|m| json!({
            "rule": m.rule, "start": m.start, "len": m.len,
        })).collect::<Vec<_>>(),
        "conflicts": report.conflicts,
        "distinct_tilings": report.distinct_tilings,
        "enumeration_truncated": report.enumeration_truncated,
    });
    let text = format!(
        "verdict: {verdict}\nmatches: {}\nconflicts: {}\ndistinct maximal tilings: {}{}",
        report.matches.len(),
        report.conflicts.len(),
        report.distinct_tilings,
        if report.enumeration_truncated {
            " (truncated)"
        } else {
            ""
        },
    );
    render(cli, value, text)
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn analyze_cmd(
    cli: &Cli,
    args: &crate::AnalyzeArgs,
    options: &DeriveOptions,
) -> Result<String, CliError> {
    let grammar = load_grammar(&args.file)?;
    match args.report {
        AnalyzeReport::Growth => {
            let profile = count_profile(&grammar, args.gens);
            let rows: Vec<Value> = profile
                .generations
                .iter()
                .map(|g| {
                    let counts: serde_json::Map<String, Value> = g
                        .counts
                        .iter()
                        .map(|(s, c)| (s.as_str().to_string(), Value::String(c.to_string())))
                        .collect();
                    json!({
                        "generation": g.generation,
                        "total": g.total.to_string(),
                        "counts": counts,
                    })
                })
                .collect();
            let text = profile
                .generations
                .iter()
                .map(|g| {
                    let counts: Vec<String> =
                        g.counts.iter().map(|(s, c)| format!("{s}:{c}")).collect();
                    format!("g{}\ttotal {}\t{}", g.generation, g.total, counts.join(" "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            render(
                cli,
                json!({ "report": "growth", "generations": rows }),
                text,
            )
        }
        AnalyzeReport::Legality => {
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for t in 0..=args.gens {
                let report = fib_legal_generation(&grammar, t)
                    .map_err(|e| CliError::Domain(e.to_string()))?;
                rows.push(json!({
                    "generation": t,
                    "legal": report.legal,
                    "violations": report.violations.iter().map(|v| json!({
                        "ngram": v.ngram, "position": v.position,
                    })).collect::<Vec<_>>(),
                }));
                let detail = if report.legal {
                    "legal".to_string()
                } else {
                    let v = &report.violations[0];
                    format!("ILLEGAL: {} at {}", v.ngram, v.position)
                };
                lines.push(format!("g{t}\t{detail}"));
            }
            render(
                cli,
                json!({ "report": "legality", "generations": rows }),
                lines.join("\n"),
            )
        }
        AnalyzeReport::Decompose => {
            let derivation = derive_with(&grammar, args.gens, options)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let involution = Involution::binary();
            let decomposition = decompose_self_referential(&derivation, args.gens, &involution)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            match decomposition {
                Some(d) => {
                    let kind = match d.kind {
                        DecompositionKind::Perfect => "perfect",
                        DecompositionKind::Partial => "partial",
                    };
                    let segments: Vec<Value> = d
                        .segments
                        .iter()
                        .map(|(i, e)| json!({ "generation": i, "mapping": e.to_string() }))
                        .collect();
                    let text = format!(
                        "g{} = {}  ({kind})",
                        d.target,
                        d.segments
                            .iter()
                            .map(|(i, e)| match e {
                                MappingExpr::Id => format!("g{i}"),
                                other => format!("{other}(g{i})"),
                            })
                            .collect::<Vec<_>>()
                            .join(" ++ ")
                    );
                    render(
                        cli,
                        json!({
                            "report": "decompose",
                            "target": d.target,
                            "kind": kind,
                            "segments": segments,
                        }),
                        text,
                    )
                }
                None => render(
                    cli,
                    json!({ "report": "decompose", "target": args.gens, "kind": "none" }),
                    format!(
                        "g{} admits no decomposition into earlier generations",
                        args.gens
                    ),
                ),
            }
        }
        AnalyzeReport::Repetition => {
            let derivation = derive_with(&grammar, args.gens, options)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let target = derivation.last();
            let max_period = target.len() / 2;
            let stats = repetition_stats(target, max_period)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let witness = stats.witness.as_ref().map(|w| {
                json!({
                    "factor": w.factor.render(),
                    "position": w.position,
                    "period": w.period,
                })
            });
            let value = json!({
                "report": "repetition",
                "generation": args.gens,
                "length": target.len(),
                "max_period": max_period,
                "max_exponent": stats.max_exponent.to_string(),
                "has_cube": stats.has_cube,
                "witness": witness,
            });
            let text = format!(
                "g{} (length {}): max exponent {} over periods <= {}, cube: {}",
                args.gens,
                target.len(),
                stats.max_exponent,
                max_period,
                stats.has_cube,
            );
            render(cli, value, text)
        }
    }
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

fn grammar_to_value(grammar: &LGrammar) -> Value {
    json!({
        "axiom": grammar.axiom().iter().map(Symbol::as_str).collect::<Vec<_>>(),
        "rules": grammar.productions().iter().map(|p| json!({
            "lhs": p.lhs().as_str(),
            "rhs": p.rhs().iter().map(Symbol::as_str).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn parse_expand_entry(entry: &str) -> Result<(String, Vec<usize>), CliError> {
    let (symbol, list) = entry
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("`{entry}` is not `SYM=GEN[,GEN...]`")))?;
    let indices = list
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("`{t}` is not a generation index")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((symbol.trim().to_string(), indices))
}

fn transform_cmd(
    cli: &Cli,
    args: &crate::TransformArgs,
    options: &DeriveOptions,
) -> Result<String, CliError> {
    let chosen = [
        args.expand.is_some(),
        args.prune.is_some(),
        args.reduce.is_some(),
        args.tree_op.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if chosen != 1 {
        return Err(CliError::Usage(
            "choose exactly one of --expand, --prune, --reduce, --tree-op".into(),
        ));
    }

    if let Some(entries) = &args.expand {
        let mut zero = None;
        let mut one = None;
        for entry in entries {
            let (symbol, indices) = parse_expand_entry(entry)?;
            match symbol.as_str() {
                "0" => zero = Some(indices),
                "1" => one = Some(indices),
                other => {
                    return Err(CliError::Usage(format!(
                        "expansion bodies are defined for `0` and `1`, not `{other}`"
                    )))
                }
            }
        }
        let (Some(zero), Some(one)) = (zero, one) else {
            return Err(CliError::Usage(
                "--expand needs both `0=...` and `1=...`".into(),
            ));
        };
        let expansion = expand_generations(&ExpansionSpec { zero, one })
            .map_err(|e| CliError::Domain(e.to_string()))?;
        let value = json!({
            "grammar": grammar_to_value(&expansion.grammar),
            "skip": expansion.skip,
            "preservation": {
                "preserved": expansion.preservation.preserved,
                "generations_checked": expansion.preservation.generations_checked,
                "per_symbol": expansion.preservation.per_symbol.iter().map(|(s, ok)| json!({
                    "symbol": s.as_str(), "fibonacci": ok,
                })).collect::<Vec<_>>(),
                "total": expansion.preservation.total,
            },
        });
        let text = format!(
            "{}skip: {}\nfibonacci-preserving: {}",
            expansion.grammar, expansion.skip, expansion.preservation.preserved
        );
        return render(cli, value, text);
    }

    if let Some(spec) = &args.prune {
        let grammar = load_grammar(&args.file)?;
        let (rule, rest) = spec
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("`{spec}` is not `RULE:CHUNK@POS`")))?;
        let (chunk, position) = rest
            .split_once('@')
            .ok_or_else(|| CliError::Usage(format!("`{spec}` is not `RULE:CHUNK@POS`")))?;
        let position = position
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("`{position}` is not a position")))?;
        let pruned = prune_rule(
            &grammar,
            &parse_symbol(rule)?,
            &parse_string(chunk)?,
            position,
            !args.no_mappings,
        )
        .map_err(|e| CliError::Domain(e.to_string()))?;
        return render(
            cli,
            json!({ "grammar": grammar_to_value(&pruned) }),
            pruned.to_string().trim_end().to_string(),
        );
    }

    if let Some(target) = &args.reduce {
        let grammar = load_grammar(&args.file)?;
        let target = match target.as_str() {
            "fib" => ReductionTarget::MinimalFib,
            "xor" => ReductionTarget::MinimalXor,
            other => {
                return Err(CliError::Usage(format!(
                    "`{other}` is not a target (fib or xor)"
                )))
            }
        };
        let outcome = reduce_to_minimal(&grammar, target, args.bound, !args.no_mappings);
        return match outcome {
            ReductionOutcome::Proved(proof) => {
                let steps: Vec<Value> = proof
                    .steps
                    .iter()
                    .map(|step| match step {
                        ReductionStep::Prune {
                            rule,
                            chunk,
                            position,
                            mapping,
                            generation,
                        } => {
                            json!({
                                "kind": "prune",
                                "rule": rule.as_str(),
                                "chunk": chunk.render(),
                                "position": position,
                                "mapping": mapping.to_string(),
                                "generation": generation,
                            })
                        }
                        ReductionStep::RemoveConstant { symbol } => json!({
                            "kind": "remove-constant",
                            "symbol": symbol.as_str(),
                        }),
                    })
                    .collect();
                let value = json!({
                    "reduced": true,
                    "steps": steps,
                    "result": grammar_to_value(&proof.result),
                });
                let mut lines: Vec<String> = proof
                    .steps
                    .iter()
                    .map(|step| match step {
                        ReductionStep::Prune {
                            rule,
                            chunk,
                            position,
                            mapping,
                            ..
                        } => format!(
                            "prune {} from body of {} at {} ({} reading)",
                            chunk.render(),
                            rule,
                            position,
                            mapping
                        ),
                        ReductionStep::RemoveConstant { symbol } => {
                            format!("remove constant {symbol}")
                        }
                    })
                    .collect();
                lines.push(format!("reduced in {} steps", proof.steps.len()));
                render(cli, value, lines.join("\n"))
            }
            ReductionOutcome::Exhausted { visited, bound_hit } => {
                let value = json!({
                    "reduced": false,
                    "visited": visited,
                    "bound_hit": bound_hit,
                });
                render(
                    cli,
                    value,
                    format!(
                        "no reduction found ({visited} grammars explored{})",
                        if bound_hit {
                            ", bound hit"
                        } else {
                            ", space exhausted"
                        }
                    ),
                )
            }
        };
    }

    // --tree-op
    let op_name = args.tree_op.as_deref().expect("checked above");
    let path = args
        .path
        .as_deref()
        .ok_or_else(|| CliError::Usage("--tree-op needs --path".into()))?
        .split('.')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad path index `{t}`")))
        })
        .collect::<Result<Vec<usize>, _>>()?;
    let op = match op_name {
        "collapse" => TreeOp::Collapse { path },
        "percolate" => TreeOp::Percolate { path },
        "u-prune" => TreeOp::UPrune { path },
        "atomize" => {
            let span = args
                .span
                .as_deref()
                .ok_or_else(|| CliError::Usage("atomize needs --span START..END".into()))?;
            let (start, end) = span
                .split_once("..")
                .ok_or_else(|| CliError::Usage(format!("`{span}` is not `START..END`")))?;
            let start = start
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad span start `{start}`")))?;
            let end = end
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad span end `{end}`")))?;
            TreeOp::Atomize {
                parent_path: path,
                start,
                end,
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "`{other}` is not a tree operation (collapse, percolate, u-prune, atomize)"
            )))
        }
    };
    let grammar = load_grammar(&args.file)?;
    let tree = derive_tree_with(&grammar, args.gens, options)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let transformed = tree_transform(&tree, &op).map_err(|e| CliError::Domain(e.to_string()))?;
    render(
        cli,
        tree_to_value(&transformed),
        transformed.render_ascii().trim_end().to_string(),
    )
}

// ---------------------------------------------------------------------------
// equiv / ca / reproduce
// ---------------------------------------------------------------------------

fn equiv_cmd(cli: &Cli, args: &crate::EquivArgs) -> Result<String, CliError> {
    let left = load_grammar(&args.left)?;
    let right = load_grammar(&args.right)?;
    let (a, b) = args
        .pair
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("`{}` is not `SYM,SYM`", args.pair)))?;
    let pair = (parse_symbol(a.trim())?, parse_symbol(b.trim())?);
    let cmp = ratio_profiles_equal(&left, &right, (&pair.0, &pair.1), args.gens)
        .map_err(|e| CliError::Domain(e.to_string()))?;

    let ratios = |profile: &lspace_core::analysis::RatioProfile| -> Vec<Value> {
        profile
            .ratios
            .iter()
            .map(|r| match r {
                Some(ratio) => Value::String(ratio.to_string()),
                None => Value::Null,
            })
            .collect()
    };
    let value = json!({
        "equal": cmp.equal,
        "first_difference": cmp.first_difference,
        "pair": [pair.0.as_str(), pair.1.as_str()],
        "left": ratios(&cmp.left),
        "right": ratios(&cmp.right),
    });
    let mut lines = vec![format!(
        "ratio {}:{} over generations 1..={}: {}",
        pair.0,
        pair.1,
        args.gens,
        if cmp.equal { "equal" } else { "different" }
    )];
    for t in 1..=args.gens {
        let show = |r: &Option<lspace_core::analysis::ExactRatio>| match r {
            Some(ratio) => ratio.to_string(),
            None => "-".to_string(),
        };
        lines.push(format!(
            "t={t}\t{}\t{}",
            show(&cmp.left.ratios[t]),
            show(&cmp.right.ratios[t])
        ));
    }
    render(cli, value, lines.join("\n"))
}

fn ca_cmd(cli: &Cli, args: &crate::CaArgs) -> Result<String, CliError> {
    let table =
        RuleTable::from_bits_str(&args.table).map_err(|e| CliError::Usage(e.to_string()))?;
    let boundary = match args.boundary {
        BoundaryArg::Periodic => Boundary::Periodic,
        BoundaryArg::Zero => Boundary::FixedZero,
    };
    let state = CAState::from_bits_str(&args.state, boundary)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<String> = ca_run(&table, &state, args.steps)
        .iter()
        .map(|s| s.to_string())
        .collect();
    let value = json!({ "table": table.to_string(), "rows": rows });
    render(cli, value, rows.join("\n"))
}

fn reproduce_cmd(cli: &Cli) -> Result<String, CliError> {
    let results = golden::run_all();
    let failed: Vec<&golden::CheckResult> = results.iter().filter(|r| !r.passed).collect();

    if cli.json {
        let value = json!({
            "passed": results.len() - failed.len(),
            "failed": failed.len(),
            "checks": results.iter().map(|r| json!({
                "name": r.name, "passed": r.passed, "detail": r.detail,
            })).collect::<Vec<_>>(),
        });
        let rendered = serde_json::to_string_pretty(&value)
            .map_err(|e| CliError::Domain(format!("serialization: {e}")))?;
        if failed.is_empty() {
            return Ok(rendered);
        }
        return Err(CliError::ChecksFailed(rendered));
    }

    let mut lines: Vec<String> = results
        .iter()
        .map(|r| format!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name))
        .collect();
    lines.push(format!("{} checks, {} failed", results.len(), failed.len()));
    for f in &failed {
        lines.push(format!("  {}: {}", f.name, f.detail));
    }
    let rendered = lines.join("\n");
    if failed.is_empty() {
        Ok(rendered)
    } else {
        Err(CliError::ChecksFailed(rendered))
    }
}
