//! The full pipeline (algebra, bimodule, lattice, verdicts, checks) and its
//! JSON and DOT renderings. Both renderings are byte-deterministic.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::auslander::{build_algebra, build_ext_bimodule, ExtBimodule};
use crate::category_file::CategoryFile;
use crate::error::Result;
use crate::exactness::{
    atoms_are_socle_lines, boolean_check, closed_flags, closed_hasse, join_discrepancies,
    run_oracles, BooleanCheck, Closedness, CompositionBudget, CompositionKind, JoinDiscrepancies,
    OracleOptions, Side,
};
use crate::lattice::{enumerate_submodules_with, EnumerationOptions, Strategy, SubmoduleLattice};
use crate::quiver::Category;

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub budget: u128,
    pub oracles: bool,
    pub composition_depth: usize,
    /// Modularity is skipped above this many nodes (the check is cubic).
    pub modularity_limit: usize,
    /// How many join-discrepancy witnesses a report keeps.
    pub keep_witnesses: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            budget: crate::lattice::DEFAULT_BUDGET,
            oracles: true,
            composition_depth: CompositionBudget::default().depth,
            modularity_limit: 5_000,
            keep_witnesses: 16,
        }
    }
}

pub struct Analysis {
    pub category: Category,
    pub metadata: std::collections::BTreeMap<String, serde_json::Value>,
    pub bimodule: ExtBimodule,
    pub lattice: SubmoduleLattice,
    pub closedness: Closedness,
    pub modular: Option<std::result::Result<(), crate::lattice::ModularityWitness>>,
    pub boolean: BooleanCheck,
    pub atoms_ok: bool,
    pub joins: JoinDiscrepancies,
    pub options: AnalysisOptions,
}

pub fn analyze_file(file: &CategoryFile, opts: AnalysisOptions) -> Result<Analysis> {
    let mut a = analyze(&file.to_category()?, opts)?;
    a.metadata = file.metadata.clone();
    Ok(a)
}

pub fn analyze(category: &Category, opts: AnalysisOptions) -> Result<Analysis> {
    let alg = build_algebra(category)?;
    let bimodule = build_ext_bimodule(alg)?;
    let lattice = enumerate_submodules_with(
        &bimodule,
        EnumerationOptions {
            budget: opts.budget,
            force_general: false,
        },
    )?;
    let mut closedness = closed_flags(&lattice, &bimodule)?;
    if opts.oracles {
        run_oracles(
            &lattice,
            &bimodule,
            &mut closedness,
            OracleOptions {
                middle_exact: true,
                composition: true,
                budget: CompositionBudget {
                    depth: opts.composition_depth,
                    ..Default::default()
                },
            },
        )?;
    }
    let modular = (lattice.len() <= opts.modularity_limit).then(|| lattice.is_modular());
    let boolean = boolean_check(&lattice, &bimodule, &closedness)?;
    let atoms_ok = atoms_are_socle_lines(&lattice, &bimodule);
    let joins = join_discrepancies(&lattice, &closedness, opts.keep_witnesses)?;
    Ok(Analysis {
        category: category.clone(),
        metadata: Default::default(),
        bimodule,
        lattice,
        closedness,
        modular,
        boolean,
        atoms_ok,
        joins,
        options: opts,
    })
}

/// `e3`, `2e0+e4`, or `0`.
pub fn vector_label(v: &[u32]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(k, &x)| {
            if x == 1 {
                format!("e{k}")
            } else {
                format!("{x}e{k}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub category: CategorySummary,
    pub bimodule: BimoduleSummary,
    pub lattice: LatticeSummary,
    pub closed: ClosedSummary,
    pub checks: ChecksSummary,
    pub conventions: Conventions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategorySummary {
    pub field: u32,
    pub vertices: usize,
    pub arrows: Vec<String>,
    pub indecomposables: Vec<ObjectSummary>,
    pub metadata: std::collections::BTreeMap<String, serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectSummary {
    pub index: usize,
    pub name: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleSummary {
    pub algebra_dim: usize,
    pub radical_dim: usize,
    pub radical_nilpotency: usize,
    pub global_dim: usize,
    pub blocks: Vec<BlockSummary>,
    /// `coordinates[k]` names global coordinate `e{k}`.
    pub coordinates: Vec<String>,
    pub socle_dim: usize,
    pub socle_basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub c: String,
    pub a: String,
    pub dim: usize,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub strategy: Strategy,
    pub node_count: usize,
    pub hasse_edge_count: usize,
    pub bottom: usize,
    pub top: usize,
    pub atoms: Vec<usize>,
    pub nodes: Vec<NodeSummary>,
    pub hasse: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSummary {
    pub index: usize,
    pub dim: usize,
    /// Coordinates where some basis vector is nonzero.
    pub support: Vec<usize>,
    /// RREF basis; omitted for coordinate lattices, where it is the unit vectors of `support`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<u32>>>,
    pub generators: Vec<String>,
    pub socle_support: Vec<usize>,
    pub closed: bool,
    pub maximal_with_socle: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub middle_exact: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub middle_exact_witness: Option<MiddleExactEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composition_witness: Option<CompositionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiddleExactEntry {
    pub test_object: String,
    pub sequence: String,
    pub side: Side,
    pub kernel_dim: usize,
    pub image_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionEntry {
    pub kind: CompositionKind,
    pub first: String,
    pub second: String,
    pub via_object: String,
    pub via_basis_index: usize,
    pub missing: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedSummary {
    pub count: usize,
    pub nodes: Vec<usize>,
    pub hasse: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksSummary {
    /// `pass`, `fail` or `skipped`
    pub modular: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modular_witness: Option<(usize, usize, usize)>,
    pub boolean: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boolean_failure: Option<String>,
    pub socle_lines: Vec<String>,
    pub atoms_are_socle_lines: bool,
    /// `agree`, `disagree` or `skipped`
    pub middle_exact_agreement: String,
    pub composition_agreement: String,
    pub disagreements: Vec<usize>,
    pub join_pairs_checked: usize,
    pub join_below_closed_join: bool,
    pub join_discrepancy_count: usize,
    pub join_discrepancies: Vec<JoinEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinEntry {
    pub left: usize,
    pub right: usize,
    pub join: usize,
    pub closed_join: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub basis_order: String,
    pub scalars: String,
    pub middle_exact_truncation: String,
    pub composition_budget: String,
    pub closedness: String,
}

impl Analysis {
    pub fn report(&self) -> Report {
        let b = &self.bimodule;
        let alg = b.algebra();
        let l = &self.lattice;
        let cl = &self.closedness;
        let name = |i: usize| alg.name(i).to_string();
        let category = CategorySummary {
            field: self.category.field.modulus(),
            vertices: self.category.quiver.vertex_count(),
            arrows: self
                .category
                .quiver
                .arrows()
                .iter()
                .map(|a| format!("{}: {} -> {}", a.name, a.source + 1, a.target + 1))
                .collect(),
            indecomposables: (0..alg.len())
                .map(|i| ObjectSummary {
                    index: i,
                    name: name(i),
                    dims: alg.object(i).dims().to_vec(),
                })
                .collect(),
            metadata: self.metadata.clone(),
        };
        let bimodule = BimoduleSummary {
            algebra_dim: alg.dim(),
            radical_dim: alg.radical_basis().len(),
            radical_nilpotency: alg.radical_nilpotency(),
            global_dim: b.global_dim(),
            blocks: b
                .nonzero_blocks()
                .map(|blk| BlockSummary {
                    c: name(blk.c),
                    a: name(blk.a),
                    dim: blk.dim(),
                    offset: blk.offset,
                })
                .collect(),
            coordinates: (0..b.global_dim()).map(|k| b.coord_label(k)).collect(),
            socle_dim: b.socle().dim(),
            socle_basis: b
                .socle()
                .vectors()
                .iter()
                .map(|v| vector_label(v))
                .collect(),
        };
        let coordinate = l.strategy() == Strategy::Coordinate;
        let nodes = (0..l.len())
            .map(|i| {
                let node = l.node(i);
                let v = &cl.verdicts[i];
                NodeSummary {
                    index: i,
                    dim: node.dim(),
                    support: node.support(),
                    basis: (!coordinate).then(|| node.space().vectors()),
                    generators: l.generators(b, i).iter().map(|g| vector_label(g)).collect(),
                    socle_support: cl.socle(i).support(),
                    closed: v.closed,
                    maximal_with_socle: v.maximal_with_socle,
                    middle_exact: v.middle_exact_ok,
                    middle_exact_witness: v.middle_exact_witness.as_ref().map(|w| {
                        MiddleExactEntry {
                            test_object: name(w.x),
                            sequence: vector_label(&w.sequence),
                            side: w.side,
                            kernel_dim: w.kernel_dim,
                            image_dim: w.image_dim,
                        }
                    }),
                    composition_witness: v.composition.as_ref().and_then(|c| c.as_ref()).map(|w| {
                        CompositionEntry {
                            kind: w.kind,
                            first: vector_label(&w.first),
                            second: vector_label(&w.second),
                            via_object: name(w.via.0),
                            via_basis_index: w.via.1,
                            missing: vector_label(&w.missing),
                        }
                    }),
                }
            })
            .collect();
        let lattice = LatticeSummary {
            strategy: l.strategy(),
            node_count: l.len(),
            hasse_edge_count: l.hasse().len(),
            bottom: l.bottom(),
            top: l.top(),
            atoms: l.atoms(),
            nodes,
            hasse: l.hasse().to_vec(),
        };
        let closed_nodes = cl.closed_nodes();
        let closed = ClosedSummary {
            count: closed_nodes.len(),
            nodes: closed_nodes,
            hasse: closed_hasse(l, cl),
        };
        let (me, co, disagreements) = self.agreement();
        let checks = ChecksSummary {
            modular: match &self.modular {
                None => "skipped".into(),
                Some(Ok(())) => "pass".into(),
                Some(Err(_)) => "fail".into(),
            },
            modular_witness: match &self.modular {
                Some(Err(w)) => Some((w.r, w.s, w.t)),
                _ => None,
            },
            boolean: self.boolean.ok,
            boolean_failure: self.boolean.failure.clone(),
            socle_lines: self.boolean.lines.iter().map(|v| vector_label(v)).collect(),
            atoms_are_socle_lines: self.atoms_ok,
            middle_exact_agreement: me,
            composition_agreement: co,
            disagreements,
            join_pairs_checked: self.joins.pairs_checked,
            join_below_closed_join: self.joins.all_below,
            join_discrepancy_count: self.joins.count,
            join_discrepancies: self
                .joins
                .witnesses
                .iter()
                .map(|&(left, right, join, closed_join)| JoinEntry {
                    left,
                    right,
                    join,
                    closed_join,
                })
                .collect(),
        };
        let conventions = Conventions {
            basis_order: "global coordinates e{k} list Peirce blocks Ext1(C,A) ordered by (C index, A index), then the block's Ext basis".into(),
            scalars: "an Ext basis vector is the class of a cocycle P1 -> A supported on one non-pivot coordinate of the coboundary space; relations between classes hold up to the nonzero scalars visible in the action matrices".into(),
            middle_exact_truncation: "test objects range over the listed indecomposables and test sequences over RREF basis classes of each Peirce block of the node".into(),
            composition_budget: format!(
                "classes: block basis of the node closed under algebra basis actions to depth {}; pairs: second inflation pushed out (or first deflation pulled back) along each Hom basis element",
                self.options.composition_depth
            ),
            closedness: "a node is closed iff it is the largest node with its socle".into(),
        };
        Report {
            tool: "wexlat".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            category,
            bimodule,
            lattice,
            closed,
            checks,
            conventions,
        }
    }

    /// Agreement of both oracles with the closed flags, and the nodes where some oracle disagrees.
    pub fn agreement(&self) -> (String, String, Vec<usize>) {
        let vs = &self.closedness.verdicts;
        if !self.options.oracles {
            return ("skipped".into(), "skipped".into(), Vec::new());
        }
        let me_bad: Vec<usize> = vs
            .iter()
            .filter(|v| v.middle_exact_ok != Some(v.closed))
            .map(|v| v.node)
            .collect();
        let co_bad: Vec<usize> = vs
            .iter()
            .filter(|v| v.composition.as_ref().map(|c| c.is_none()) != Some(v.closed))
            .map(|v| v.node)
            .collect();
        let word = |bad: &[usize]| if bad.is_empty() { "agree" } else { "disagree" }.to_string();
        let mut all: Vec<usize> = me_bad.iter().chain(&co_bad).copied().collect();
        all.sort_unstable();
        all.dedup();
        (word(&me_bad), word(&co_bad), all)
    }

    /// Graphviz source; `closed_only` restricts to the closed nodes and their covers.
    pub fn dot(&self, closed_only: bool) -> String {
        let b = &self.bimodule;
        let l = &self.lattice;
        let cl = &self.closedness;
        let (nodes, edges) = if closed_only {
            (cl.closed_nodes(), closed_hasse(l, cl))
        } else {
            ((0..l.len()).collect::<Vec<_>>(), l.hasse().to_vec())
        };
        let mut s = String::new();
        let _ = writeln!(
            s,
            "// {} nodes, {} covers{}",
            nodes.len(),
            edges.len(),
            if closed_only {
                ", closed nodes only"
            } else {
                ""
            }
        );
        for k in 0..b.global_dim() {
            let _ = writeln!(s, "// e{k} = {}", b.coord_label(k));
        }
        s.push_str("digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse];\n");
        let mut by_dim: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &i in &nodes {
            by_dim.entry(l.dim(i)).or_default().push(i);
            let gens: Vec<String> = l.generators(b, i).iter().map(|g| vector_label(g)).collect();
            let label = if gens.is_empty() {
                "0".to_string()
            } else {
                gens.join(",")
            };
            let style = if cl.is_closed(i) && !closed_only {
                ", peripheries=2"
            } else {
                ""
            };
            let style = if closed_only {
                ", peripheries=2"
            } else {
                style
            };
            let _ = writeln!(s, "  n{i} [label=\"{label}\"{style}];");
        }
        for (d, group) in &by_dim {
            let ids: Vec<String> = group.iter().map(|i| format!("n{i};")).collect();
            let _ = writeln!(s, "  {{ rank=same; {} }} // dim {d}", ids.join(" "));
        }
        for (x, y) in edges {
            let _ = writeln!(s, "  n{x} -> n{y};");
        }
        s.push_str("}\n");
        s
    }
}

impl Report {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(vector_label(&[0, 0]), "0");
        assert_eq!(vector_label(&[0, 1, 2]), "e1+2e2");
    }

    #[test]
    fn a3_report_shape() {
        let f = CategoryFile::type_a(3, "RR", 2).unwrap();
        let a = analyze_file(&f, AnalysisOptions::default()).unwrap();
        let r = a.report();
        assert_eq!(r.lattice.node_count, 13);
        assert_eq!(r.closed.count, 8);
        assert_eq!(r.checks.modular, "pass");
        assert_eq!(r.checks.middle_exact_agreement, "agree");
        assert_eq!(r.checks.composition_agreement, "agree");
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        let dot = a.dot(true);
        assert_eq!(dot.matches(" -> ").count(), 12);
    }
}
