//! Property suites over a computed bimodule and lattice, shared by the `verify`
//! command and the test suites. Each returns a [`CheckResult`] carrying the first
//! failing case.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::auslander::ExtBimodule;
use crate::error::Result;
use crate::exactness::{
    basis_classes, class_of_vector, components_first, components_second, SequenceCache,
};
use crate::field::all_vectors;
use crate::homalg::{
    baer_sum, baer_sum_oracle, ext_space, pullback_into, pullback_seq, pushout_into, pushout_seq,
    realize, yoneda_class, yoneda_class_in, ExtClass, ShortExactSeq,
};
use crate::lattice::SubmoduleLattice;
use crate::quiver::{cokernel, kernel, DirectSum, Projective};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl CheckResult {
    fn new(name: &str, cases: usize, failure: Option<String>) -> Self {
        Self {
            name: name.into(),
            passed: failure.is_none(),
            cases,
            failure,
        }
    }
}

fn first_failure(results: Vec<Option<String>>) -> Option<String> {
    results.into_iter().flatten().next()
}

/// Every basis class of every block: `yoneda_class(realize(ε)) = ε`.
pub fn check_roundtrip(b: &ExtBimodule) -> Result<CheckResult> {
    let cases: Vec<(usize, usize)> = b
        .nonzero_blocks()
        .flat_map(|blk| (0..blk.dim()).map(move |k| (blk.c * b.algebra().len() + blk.a, k)))
        .collect();
    let fails = cases
        .par_iter()
        .map(|&(ix, k)| {
            let blk = &b.blocks()[ix];
            let e = ExtClass::basis(blk.space.clone(), k);
            let back = yoneda_class_in(&realize(&e)?, &blk.space)?;
            Ok((back != e).then(|| format!("{}#{k}", b.coord_label(blk.offset))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckResult::new(
        "roundtrip",
        cases.len(),
        first_failure(fails),
    ))
}

/// `baer_sum` against the sequence-level oracle. All pairs of a block are
/// tested when there are at most `cap` of them, otherwise a seeded sample of `cap`.
pub fn check_baer(b: &ExtBimodule, seed: u64, cap: usize) -> Result<CheckResult> {
    let f = b.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for (ix, blk) in b.blocks().iter().enumerate() {
        if blk.dim() == 0 {
            continue;
        }
        let elems: Vec<Vec<u32>> = all_vectors(f, blk.dim()).collect();
        let mut pairs: Vec<(usize, usize)> = (0..elems.len())
            .flat_map(|i| (0..elems.len()).map(move |j| (i, j)))
            .collect();
        if pairs.len() > cap {
            pairs.shuffle(&mut rng);
            pairs.truncate(cap);
        }
        for (i, j) in pairs {
            cases.push((ix, elems[i].clone(), elems[j].clone()));
        }
    }
    let fails = cases
        .par_iter()
        .map(|(ix, x, y)| {
            let blk = &b.blocks()[*ix];
            let e1 = ExtClass::new(blk.space.clone(), x.clone())?;
            let e2 = ExtClass::new(blk.space.clone(), y.clone())?;
            let fast = baer_sum(&e1, &e2)?;
            let slow = baer_sum_oracle(&e1, &e2)?;
            Ok((fast != slow).then(|| format!("{}: {x:?} + {y:?}", b.coord_label(blk.offset))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckResult::new("baer", cases.len(), first_failure(fails)))
}

/// Sequence-level pushouts and pullbacks along algebra basis morphisms have the
/// classes computed on cocycles.
pub fn check_realization(b: &ExtBimodule) -> Result<CheckResult> {
    let alg = b.algebra();
    let n = alg.len();
    let mut cases = Vec::new();
    for h in 0..alg.dim() {
        let e = alg.basis()[h];
        for x in 0..n {
            for k in 0..b.block(x, e.source).dim() {
                cases.push((h, true, x, k));
            }
            for k in 0..b.block(e.target, x).dim() {
                cases.push((h, false, x, k));
            }
        }
    }
    let fails = cases
        .par_iter()
        .map(|&(h, push, x, k)| {
            let e = alg.basis()[h];
            let m = alg.morphism(h);
            if push {
                let src = b.block(x, e.source);
                let tgt = b.block(x, e.target);
                let eps = ExtClass::basis(src.space.clone(), k);
                let (s, _) = pushout_seq(&realize(&eps)?, m)?;
                let ok = yoneda_class_in(&s, &tgt.space)? == pushout_into(m, &eps, &tgt.space)?;
                Ok((!ok).then(|| {
                    format!(
                        "pushout of {} along basis {h}",
                        b.coord_label(src.offset + k)
                    )
                }))
            } else {
                let src = b.block(e.target, x);
                let tgt = b.block(e.source, x);
                let eps = ExtClass::basis(src.space.clone(), k);
                let (s, _) = pullback_seq(&realize(&eps)?, m)?;
                let ok =
                    yoneda_class_in(&s, &tgt.space)? == pullback_into(m, &eps, &tgt.space, None)?;
                Ok((!ok).then(|| {
                    format!(
                        "pullback of {} along basis {h}",
                        b.coord_label(src.offset + k)
                    )
                }))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckResult::new(
        "realization",
        cases.len(),
        first_failure(fails),
    ))
}

/// `a_* c^* ε = c^* a_* ε` for all basis triples, through the homological operations.
pub fn check_bifunctor(b: &ExtBimodule) -> Result<CheckResult> {
    let alg = b.algebra();
    let mut cases = Vec::new();
    for ai in 0..alg.dim() {
        for ci in 0..alg.dim() {
            let (ea, ec) = (alg.basis()[ai], alg.basis()[ci]);
            for k in 0..b.block(ec.target, ea.source).dim() {
                cases.push((ai, ci, k));
            }
        }
    }
    let fails = cases
        .par_iter()
        .map(|&(ai, ci, k)| {
            let (ea, ec) = (alg.basis()[ai], alg.basis()[ci]);
            let (a, c) = (alg.morphism(ai), alg.morphism(ci));
            let start = b.block(ec.target, ea.source);
            let eps = ExtClass::basis(start.space.clone(), k);
            let mid1 = &b.block(ec.source, ea.source).space;
            let mid2 = &b.block(ec.target, ea.target).space;
            let end = &b.block(ec.source, ea.target).space;
            let x = pushout_into(a, &pullback_into(c, &eps, mid1, None)?, end)?;
            let y = pullback_into(c, &pushout_into(a, &eps, mid2)?, end, None)?;
            Ok((x != y).then(|| {
                format!(
                    "basis elements {ai}, {ci} on {}",
                    b.coord_label(start.offset + k)
                )
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckResult::new(
        "bifunctor",
        cases.len(),
        first_failure(fails),
    ))
}

/// `Ext¹(P(v), X_i) = 0` for every vertex projective, built from paths.
pub fn check_projective_vanishing(b: &ExtBimodule) -> Result<CheckResult> {
    let alg = b.algebra();
    let q = alg.object(0).quiver().clone();
    let mut cases = 0;
    let mut failure = None;
    for v in 0..q.vertex_count() {
        let p = Projective::new(&q, alg.field(), v).rep;
        for i in 0..alg.len() {
            cases += 1;
            let d = ext_space(&p, alg.object(i))?.dim();
            if d != 0 && failure.is_none() {
                failure = Some(format!("dim Ext1(P({}), {}) = {d}", v + 1, alg.name(i)));
            }
        }
    }
    Ok(CheckResult::new("projective", cases, failure))
}

/// Module laws of the action matrices: idempotents, products, and left/right commutation.
pub fn check_module_laws(b: &ExtBimodule) -> Result<CheckResult> {
    let alg = b.algebra();
    let d = alg.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|x| (0..d).map(move |y| (x, y))).collect();
    let fails: Vec<Option<String>> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let xy = alg.product(x, y);
            if b.left_of(&xy) != b.left(x).mul(b.left(y)) {
                return Some(format!("left action of {x}·{y}"));
            }
            if b.right_of(&xy) != b.right(y).mul(b.right(x)) {
                return Some(format!("right action of {x}·{y}"));
            }
            if b.left(x).mul(b.right(y)) != b.right(y).mul(b.left(x)) {
                return Some(format!("left {x} and right {y} do not commute"));
            }
            None
        })
        .collect();
    let mut failure = first_failure(fails);
    let f = b.field();
    let g = b.global_dim();
    let mut one_l = crate::field::Matrix::zeros(f, g, g);
    let mut one_r = one_l.clone();
    for i in 0..alg.len() {
        one_l = one_l.add(&b.left_of(&alg.idempotent(i)));
        one_r = one_r.add(&b.right_of(&alg.idempotent(i)));
    }
    let id = crate::field::Matrix::identity(f, g);
    if failure.is_none() && (one_l != id || one_r != id) {
        failure = Some("idempotents do not sum to the identity action".into());
    }
    Ok(CheckResult::new("module", pairs.len() + 1, failure))
}

/// Conclusions of the obscure axiom for one sequence `0 → X_a → B → X_c → 0`:
/// the classes of `(m, g): X_a → B ⊕ X_w` and `(d, g): B ⊕ X_w → X_c` for basis `g`.
fn obscure_facts(
    b: &ExtBimodule,
    seqs: &SequenceCache,
    v: &[u32],
) -> Result<Vec<(String, Vec<Vec<u32>>)>> {
    let alg = b.algebra();
    let blk = b.single_block(v).expect("single block");
    let s = seqs.get(b, v)?;
    let mut out = Vec::new();
    for w in 0..alg.len() {
        let ds = DirectSum::of(&[s.b.clone(), alg.object(w).clone()])?;
        for (k, g) in alg.hom(blk.a, w).basis().iter().enumerate() {
            let i = ds.pair(&[s.i.clone(), g.clone()])?;
            let (_, q, _) = cokernel(&i)?;
            let eps = yoneda_class(&ShortExactSeq::new(i, q)?)?;
            out.push((
                format!("monic (m, g) through {} (g #{k})", alg.name(w)),
                components_first(b, &eps, blk.a)?,
            ));
        }
        for (k, g) in alg.hom(w, blk.c).basis().iter().enumerate() {
            let d = ds.copair(&[s.d.clone(), g.clone()])?;
            let (_, incl) = kernel(&d)?;
            let eps = yoneda_class(&ShortExactSeq::new(incl, d)?)?;
            out.push((
                format!("epic (d, g) from {} (g #{k})", alg.name(w)),
                components_second(b, &eps, blk.c)?,
            ));
        }
    }
    Ok(out)
}

/// Spot check of the obscure axiom on every node: if `m = pr ∘ (m, g)` is an
/// `N`-inflation then so is `(m, g)`, and dually for deflations.
pub fn check_obscure(b: &ExtBimodule, l: &SubmoduleLattice) -> Result<CheckResult> {
    let seqs = SequenceCache::default();
    let mut facts: HashMap<Vec<u32>, Arc<Vec<(String, Vec<Vec<u32>>)>>> = HashMap::new();
    let mut keys: Vec<Vec<u32>> = Vec::new();
    let nodes: Vec<_> = (0..l.len()).map(|i| l.node(i)).collect();
    for n in &nodes {
        for v in basis_classes(n, b) {
            if !facts.contains_key(&v) && !keys.contains(&v) {
                keys.push(v);
            }
        }
    }
    let computed = keys
        .par_iter()
        .map(|v| obscure_facts(b, &seqs, v).map(Arc::new))
        .collect::<Result<Vec<_>>>()?;
    facts.extend(keys.into_iter().zip(computed));
    let mut cases = 0;
    for (i, n) in nodes.iter().enumerate() {
        for v in basis_classes(n, b) {
            for (what, concl) in facts[&v].iter() {
                cases += 1;
                if concl.iter().any(|c| !n.contains(c)) {
                    let label = b.coord_label(b.single_block(&v).expect("single block").offset);
                    return Ok(CheckResult::new(
                        "obscure",
                        cases,
                        Some(format!("node {i}, sequence {label}: {what}")),
                    ));
                }
            }
        }
    }
    Ok(CheckResult::new("obscure", cases, None))
}

/// The class of the global basis coordinate `coord`.
pub fn basis_class(b: &ExtBimodule, coord: usize) -> Result<ExtClass> {
    let blk = b.block_of(coord);
    let v = b.global_vector(blk.c, blk.a, &{
        let mut e = vec![0; blk.dim()];
        e[coord - blk.offset] = 1;
        e
    });
    class_of_vector(b, &v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auslander::{build_algebra, build_ext_bimodule};
    use crate::field::PrimeField;
    use crate::lattice::enumerate_submodules;
    use crate::quiver::type_a_category;

    #[test]
    fn suites_pass_on_a3() {
        let c = type_a_category(3, "RL", PrimeField::new(3).unwrap()).unwrap();
        let b = build_ext_bimodule(build_algebra(&c).unwrap()).unwrap();
        let l = enumerate_submodules(&b).unwrap();
        for r in [
            check_roundtrip(&b).unwrap(),
            check_baer(&b, 7, 100).unwrap(),
            check_realization(&b).unwrap(),
            check_bifunctor(&b).unwrap(),
            check_projective_vanishing(&b).unwrap(),
            check_module_laws(&b).unwrap(),
            check_obscure(&b, &l).unwrap(),
        ] {
            assert!(r.passed && r.cases > 0, "{r:?}");
        }
    }

    #[test]
    fn basis_class_lookup() {
        let c = type_a_category(3, "RR", PrimeField::new(2).unwrap()).unwrap();
        let b = build_ext_bimodule(build_algebra(&c).unwrap()).unwrap();
        for k in 0..b.global_dim() {
            assert!(!basis_class(&b, k).unwrap().is_zero());
        }
    }
}
