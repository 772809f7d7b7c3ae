//! Closed sub-bimodules: the authoritative socle-maximality decision, two
//! independent oracles (middle exactness, closure under composition), the
//! closed join, and the boolean structure of the closed nodes.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::auslander::{ExtBimodule, ExtBlock};
use crate::error::{Error, Result};
use crate::field::{normalize_leading, Matrix, Subspace};
use crate::homalg::{
    ext_space_with, presentation, pullback_into, pullback_seq, pushout_into, pushout_seq, realize,
    yoneda_class, ExtClass, ExtSpace, ShortExactSeq,
};
use crate::lattice::{SubBimodule, SubmoduleLattice};
use crate::quiver::{cokernel, compose, hom_space, kernel, RepMorphism};

/// Nodes sharing one socle, and the largest of them.
#[derive(Clone, Debug)]
pub struct SocleClass {
    pub socle: SubBimodule,
    pub members: Vec<usize>,
    pub maximal: usize,
}

#[derive(Clone, Debug)]
pub struct ClosednessVerdict {
    pub node: usize,
    pub closed: bool,
    pub socle_class: usize,
    pub maximal_with_socle: usize,
    /// `None` when the oracle was not run.
    pub middle_exact_ok: Option<bool>,
    pub middle_exact_witness: Option<MiddleExactWitness>,
    /// `None` when the search was not run; `Some(None)` when it found nothing.
    pub composition: Option<Option<CompositionWitness>>,
}

/// The closedness decision for every node of a complete lattice.
#[derive(Clone, Debug)]
pub struct Closedness {
    pub verdicts: Vec<ClosednessVerdict>,
    pub classes: Vec<SocleClass>,
}

impl Closedness {
    pub fn is_closed(&self, i: usize) -> bool {
        self.verdicts[i].closed
    }

    pub fn closed_nodes(&self) -> Vec<usize> {
        self.verdicts
            .iter()
            .filter(|v| v.closed)
            .map(|v| v.node)
            .collect()
    }

    pub fn socle(&self, i: usize) -> &SubBimodule {
        &self.classes[self.verdicts[i].socle_class].socle
    }
}

/// Groups nodes by socle; the unique maximum of each group is closed.
pub fn closed_flags(l: &SubmoduleLattice, b: &ExtBimodule) -> Result<Closedness> {
    let n = l.len();
    let soc_mask = b.socle().vectors().iter().try_fold(0u128, |m, v| {
        let sup: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
        (sup.len() == 1).then(|| m | 1 << sup[0])
    });
    let mut groups: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    let mut group_socle: HashMap<Vec<u32>, SubBimodule> = HashMap::new();
    let socles: Vec<(Vec<u32>, Option<SubBimodule>)> = (0..n)
        .into_par_iter()
        .map(|i| match (l.mask(i), soc_mask) {
            (Some(m), Some(sm)) => {
                let s = m & sm;
                (s.to_le_bytes().iter().map(|&x| x as u32).collect(), None)
            }
            _ => {
                let s = SubBimodule::from_subspace(b.socle_of(l.node(i).space()));
                (s.basis().data().to_vec(), Some(s))
            }
        })
        .collect();
    let mut order = Vec::new();
    for (i, (key, s)) in socles.into_iter().enumerate() {
        if !groups.contains_key(&key) {
            order.push(key.clone());
        }
        groups.entry(key.clone()).or_default().push(i);
        if let Some(s) = s {
            group_socle.entry(key).or_insert(s);
        }
    }
    let mut classes = Vec::with_capacity(order.len());
    let mut verdicts: Vec<Option<ClosednessVerdict>> = vec![None; n];
    for key in order {
        let members = groups.remove(&key).expect("grouped");
        let maximal = *members
            .iter()
            .max_by_key(|&&i| (l.dim(i), std::cmp::Reverse(i)))
            .expect("nonempty");
        if let Some(&bad) = members.iter().find(|&&i| !l.leq(i, maximal)) {
            return Err(Error::Structural(format!(
                "nodes {bad} and {maximal} share a socle but neither contains the other"
            )));
        }
        let socle = match group_socle.remove(&key) {
            Some(s) => s,
            None => SubBimodule::from_subspace(b.socle_of(l.node(maximal).space())),
        };
        let class = classes.len();
        for &i in &members {
            verdicts[i] = Some(ClosednessVerdict {
                node: i,
                closed: i == maximal,
                socle_class: class,
                maximal_with_socle: maximal,
                middle_exact_ok: None,
                middle_exact_witness: None,
                composition: None,
            });
        }
        classes.push(SocleClass {
            socle,
            members,
            maximal,
        });
    }
    Ok(Closedness {
        verdicts: verdicts
            .into_iter()
            .map(|v| v.expect("every node grouped"))
            .collect(),
        classes,
    })
}

/// `N ∩ Ext¹(X_c, X_a)` in local block coordinates.
pub fn block_part(n: &SubBimodule, blk: &ExtBlock) -> Subspace {
    let f = n.space().field();
    let rows: Vec<Vec<u32>> = n
        .space()
        .vectors()
        .into_iter()
        .map(|v| v[blk.range()].to_vec())
        .collect();
    Subspace::span(f, blk.dim(), &rows)
}

/// Global vectors of the RREF bases of every nonzero block of `N`.
pub fn basis_classes(n: &SubBimodule, b: &ExtBimodule) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for blk in b.nonzero_blocks() {
        for local in block_part(n, blk).vectors() {
            out.push(b.global_vector(blk.c, blk.a, &local));
        }
    }
    out
}

/// The class in `B` of a single-block global vector.
pub fn class_of_vector(b: &ExtBimodule, v: &[u32]) -> Result<ExtClass> {
    let blk = b
        .single_block(v)
        .ok_or_else(|| Error::Validation("vector is not supported on one Peirce block".into()))?;
    ExtClass::new(blk.space.clone(), v[blk.range()].to_vec())
}

/// Components `ι_r^* ε ∈ Ext¹(X_{k_r}, X_a)` of `ε ∈ Ext¹(K, X_a)` through a decomposition of `K`.
pub fn components_first(b: &ExtBimodule, eps: &ExtClass, a: usize) -> Result<Vec<Vec<u32>>> {
    let dec = b.algebra().decompose(eps.space.c())?;
    dec.summands
        .iter()
        .zip(&dec.inclusions)
        .map(|(&k, iota)| {
            let blk = b.block(k, a);
            let cls = pullback_into(iota, eps, &blk.space, None)?;
            Ok(b.global_vector(k, a, &cls.coords))
        })
        .collect()
}

/// Components `(π_r)_* ε ∈ Ext¹(X_c, X_{k_r})` of `ε ∈ Ext¹(X_c, K)`.
pub fn components_second(b: &ExtBimodule, eps: &ExtClass, c: usize) -> Result<Vec<Vec<u32>>> {
    let dec = b.algebra().decompose(eps.space.a())?;
    dec.summands
        .iter()
        .zip(&dec.projections)
        .map(|(&k, pi)| {
            let blk = b.block(c, k);
            let cls = pushout_into(pi, eps, &blk.space)?;
            Ok(b.global_vector(c, k, &cls.coords))
        })
        .collect()
}

/// Realized sequences of single-block vectors, shared between oracles.
#[derive(Default)]
pub struct SequenceCache {
    seqs: Mutex<HashMap<Vec<u32>, Arc<ShortExactSeq>>>,
}

impl SequenceCache {
    pub fn get(&self, b: &ExtBimodule, v: &[u32]) -> Result<Arc<ShortExactSeq>> {
        if let Some(s) = self.seqs.lock().expect("cache lock").get(v) {
            return Ok(s.clone());
        }
        let s = Arc::new(realize(&class_of_vector(b, v)?)?);
        self.seqs
            .lock()
            .expect("cache lock")
            .insert(v.to_vec(), s.clone());
        Ok(s)
    }
}

/// Which six-term sequence failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `N(X, A) → N(X, B) → N(X, C)`
    Covariant,
    /// `N(C, X) → N(B, X) → N(A, X)`
    Contravariant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiddleExactWitness {
    /// Test object index.
    pub x: usize,
    /// Global vector of the sequence class.
    pub sequence: Vec<u32>,
    pub side: Side,
    pub kernel_dim: usize,
    pub image_dim: usize,
}

struct PerObject {
    cov_in: Matrix,
    cov_out: Matrix,
    cov_gens: Vec<(usize, Matrix)>,
    con_in: Matrix,
    con_out: Matrix,
    con_gens: Vec<(usize, Matrix)>,
}

struct SequenceData {
    c: usize,
    a: usize,
    per_x: Vec<PerObject>,
}

fn action_matrix(
    rows: usize,
    source: &Arc<ExtSpace>,
    mut act: impl FnMut(&ExtClass) -> Result<ExtClass>,
) -> Result<Matrix> {
    let f = source.a().field();
    let mut m = Matrix::zeros(f, rows, source.dim());
    for k in 0..source.dim() {
        let out = act(&ExtClass::basis(source.clone(), k))?;
        for (r, &x) in out.coords.iter().enumerate() {
            m.set(r, k, x);
        }
    }
    Ok(m)
}

/// Exactness of the truncated six-term sequences at `N(X, B)` and `N(B, X)`.
///
/// `X` ranges over the indecomposables and the sequences over basis classes
/// of the Peirce blocks of `N`. The test is decided by ranks: for
/// `0 → X_a → B → X_c → 0`, `N(X, B)` is the sum of `h_* N(X, X_l)` over a basis
/// of `Hom(X_l, B)`, and dually for `N(B, X)`.
pub struct MiddleExactOracle<'a> {
    b: &'a ExtBimodule,
    seqs: Arc<SequenceCache>,
    data: Mutex<HashMap<Vec<u32>, Arc<SequenceData>>>,
}

impl<'a> MiddleExactOracle<'a> {
    pub fn new(b: &'a ExtBimodule, seqs: Arc<SequenceCache>) -> Self {
        Self {
            b,
            seqs,
            data: Mutex::new(HashMap::new()),
        }
    }

    fn data(&self, v: &[u32]) -> Result<Arc<SequenceData>> {
        if let Some(d) = self.data.lock().expect("cache lock").get(v) {
            return Ok(d.clone());
        }
        let d = Arc::new(self.build(v)?);
        self.data
            .lock()
            .expect("cache lock")
            .insert(v.to_vec(), d.clone());
        Ok(d)
    }

    fn build(&self, v: &[u32]) -> Result<SequenceData> {
        let b = self.b;
        let alg = b.algebra();
        let n = alg.len();
        let blk = b.single_block(v).expect("basis class in one block");
        let (c, a) = (blk.c, blk.a);
        let seq = self.seqs.get(b, v)?;
        let pres_b = presentation(&seq.b)?;
        let homs_in: Vec<_> = (0..n)
            .map(|l| hom_space(alg.object(l), &seq.b))
            .collect::<Result<_>>()?;
        let homs_out: Vec<_> = (0..n)
            .map(|l| hom_space(&seq.b, alg.object(l)))
            .collect::<Result<_>>()?;
        let per_x = (0..n)
            .into_par_iter()
            .map(|x| {
                let ext_xb = ext_space_with(alg.presentation(x), &seq.b)?;
                let ext_bx = ext_space_with(&pres_b, alg.object(x))?;
                let cov_in = action_matrix(ext_xb.dim(), &b.block(x, a).space, |e| {
                    pushout_into(&seq.i, e, &ext_xb)
                })?;
                let tgt = &b.block(x, c).space;
                let cov_out = action_matrix(tgt.dim(), &ext_xb, |e| pushout_into(&seq.d, e, tgt))?;
                let mut cov_gens = Vec::new();
                let mut con_gens = Vec::new();
                for l in 0..n {
                    let src = &b.block(x, l).space;
                    if src.dim() > 0 {
                        for h in homs_in[l].basis() {
                            let m =
                                action_matrix(ext_xb.dim(), src, |e| pushout_into(h, e, &ext_xb))?;
                            cov_gens.push((l, m));
                        }
                    }
                    let src = &b.block(l, x).space;
                    if src.dim() > 0 {
                        for h in homs_out[l].basis() {
                            let m = action_matrix(ext_bx.dim(), src, |e| {
                                pullback_into(h, e, &ext_bx, None)
                            })?;
                            con_gens.push((l, m));
                        }
                    }
                }
                let con_in = action_matrix(ext_bx.dim(), &b.block(c, x).space, |e| {
                    pullback_into(&seq.d, e, &ext_bx, None)
                })?;
                let tgt = &b.block(a, x).space;
                let con_out =
                    action_matrix(tgt.dim(), &ext_bx, |e| pullback_into(&seq.i, e, tgt, None))?;
                Ok(PerObject {
                    cov_in,
                    cov_out,
                    cov_gens,
                    con_in,
                    con_out,
                    con_gens,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SequenceData { c, a, per_x })
    }

    /// Computes the data of every single-coordinate class up front.
    pub fn prepare(&self, vectors: &[Vec<u32>]) -> Result<()> {
        vectors
            .par_iter()
            .try_for_each(|v| self.data(v).map(|_| ()))
    }

    pub fn check(&self, n: &SubBimodule) -> Result<Option<MiddleExactWitness>> {
        let b = self.b;
        let parts: Vec<Subspace> = b.blocks().iter().map(|blk| block_part(n, blk)).collect();
        let nl = b.algebra().len();
        let part = |c: usize, a: usize| &parts[c * nl + a];
        for v in basis_classes(n, b) {
            let d = self.data(&v)?;
            for (x, po) in d.per_x.iter().enumerate() {
                let f = b.field();
                let nxb = span_images(f, &po.cov_gens, po.cov_in.rows(), |l| part(x, l));
                let image = part(x, d.a).image(&po.cov_in);
                let ker = nxb.kernel_of(&po.cov_out);
                if !nxb.contains_subspace(&image) || !ker.contains_subspace(&image) {
                    return Err(Error::Internal("six-term sequence is not a complex".into()));
                }
                if ker.dim() != image.dim() {
                    return Ok(Some(MiddleExactWitness {
                        x,
                        sequence: v,
                        side: Side::Covariant,
                        kernel_dim: ker.dim(),
                        image_dim: image.dim(),
                    }));
                }
                let nbx = span_images(f, &po.con_gens, po.con_in.rows(), |l| part(l, x));
                let image = part(d.c, x).image(&po.con_in);
                let ker = nbx.kernel_of(&po.con_out);
                if !nbx.contains_subspace(&image) || !ker.contains_subspace(&image) {
                    return Err(Error::Internal("six-term sequence is not a complex".into()));
                }
                if ker.dim() != image.dim() {
                    return Ok(Some(MiddleExactWitness {
                        x,
                        sequence: v,
                        side: Side::Contravariant,
                        kernel_dim: ker.dim(),
                        image_dim: image.dim(),
                    }));
                }
            }
        }
        Ok(None)
    }
}

fn span_images<'s>(
    f: crate::field::PrimeField,
    gens: &[(usize, Matrix)],
    rows: usize,
    part: impl Fn(usize) -> &'s Subspace,
) -> Subspace {
    let mut s = Subspace::zero(f, rows);
    for (l, m) in gens {
        s = s.sum(&part(*l).image(m));
    }
    s
}

/// `true` iff no witness is found; see [`MiddleExactOracle`].
pub fn middle_exact_check(
    n: &SubBimodule,
    b: &ExtBimodule,
) -> Result<(bool, Option<MiddleExactWitness>)> {
    let w = MiddleExactOracle::new(b, Arc::default()).check(n)?;
    Ok((w.is_none(), w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompositionKind {
    /// `A ↣ B ↣ E'`: the second inflation is the pushout of another sequence along `h: X_k → B`.
    Inflation,
    /// `E' ↠ B ↠ C`: the first deflation is the pullback of another sequence along `h: B → X_k`.
    Deflation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionWitness {
    pub kind: CompositionKind,
    pub first: Vec<u32>,
    pub second: Vec<u32>,
    /// `h` as `(k, local index in the Hom basis)`.
    pub via: (usize, usize),
    /// A component of the composite's class outside `N`.
    pub missing: Vec<u32>,
}

#[derive(Clone, Debug)]
struct Fact {
    kind: CompositionKind,
    via: (usize, usize),
    conclusions: Vec<Vec<u32>>,
}

/// Search budget for [`CompositionOracle`].
#[derive(Clone, Copy, Debug)]
pub struct CompositionBudget {
    /// Rounds of algebra actions applied to the basis classes.
    pub depth: usize,
    /// Cap on the number of candidate pairs examined per node.
    pub max_pairs: usize,
}

impl Default for CompositionBudget {
    fn default() -> Self {
        Self {
            depth: 2,
            max_pairs: 100_000,
        }
    }
}

/// Searches for composable pairs of `N`-inflations (or `N`-deflations) whose
/// composite is not admissible. A composite's class lives in `Ext¹(K, X_a)` or
/// `Ext¹(X_c, K)` with `K` decomposable; membership is tested componentwise.
pub struct CompositionOracle<'a> {
    b: &'a ExtBimodule,
    budget: CompositionBudget,
    seqs: Arc<SequenceCache>,
    facts: Mutex<HashMap<(Vec<u32>, Vec<u32>), Arc<Vec<Fact>>>>,
}

impl<'a> CompositionOracle<'a> {
    pub fn new(b: &'a ExtBimodule, budget: CompositionBudget, seqs: Arc<SequenceCache>) -> Self {
        Self {
            b,
            budget,
            seqs,
            facts: Mutex::new(HashMap::new()),
        }
    }

    /// Basis classes of `N` and their images under algebra basis actions, up to the depth budget.
    pub fn candidates(&self, n: &SubBimodule) -> Vec<Vec<u32>> {
        let b = self.b;
        let f = b.field();
        let mut seen: Vec<Vec<u32>> = Vec::new();
        let mut layer = basis_classes(n, b);
        for v in &layer {
            seen.push(normalize_leading(f, v));
        }
        for _ in 0..self.budget.depth {
            let mut next = Vec::new();
            for v in &layer {
                for m in b.action_matrices() {
                    let w = m.mul_vec(v);
                    if w.iter().all(|&x| x == 0) || b.single_block(&w).is_none() {
                        continue;
                    }
                    let w = normalize_leading(f, &w);
                    if !seen.contains(&w) {
                        seen.push(w.clone());
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        seen.sort();
        seen
    }

    fn facts(&self, v1: &[u32], v2: &[u32]) -> Result<Arc<Vec<Fact>>> {
        let key = (v1.to_vec(), v2.to_vec());
        if let Some(f) = self.facts.lock().expect("cache lock").get(&key) {
            return Ok(f.clone());
        }
        let facts = Arc::new(self.compute_facts(v1, v2)?);
        self.facts
            .lock()
            .expect("cache lock")
            .insert(key, facts.clone());
        Ok(facts)
    }

    fn compute_facts(&self, v1: &[u32], v2: &[u32]) -> Result<Vec<Fact>> {
        let b = self.b;
        let alg = b.algebra();
        let blk1 = b.single_block(v1).expect("single block");
        let blk2 = b.single_block(v2).expect("single block");
        let s1 = self.seqs.get(b, v1)?;
        let s2 = self.seqs.get(b, v2)?;
        let mut out = Vec::new();

        let k = blk2.a;
        let hom = hom_space(alg.object(k), &s1.b)?;
        for (local, h) in hom.basis().iter().enumerate() {
            let (pushed, _) = pushout_seq(&s2, h)?;
            let m = compose(&pushed.i, &s1.i)?;
            let (_, q, _) = cokernel(&m)?;
            let s = ShortExactSeq::new(m, q)?;
            let eps = yoneda_class(&s)?;
            let conclusions = components_first(b, &eps, blk1.a)?;
            out.push(Fact {
                kind: CompositionKind::Inflation,
                via: (k, local),
                conclusions,
            });
        }

        let k = blk2.c;
        let hom = hom_space(&s1.b, alg.object(k))?;
        for (local, h) in hom.basis().iter().enumerate() {
            let (pulled, _) = pullback_seq(&s2, h)?;
            let d = compose(&s1.d, &pulled.d)?;
            let (_, incl) = kernel(&d)?;
            let s = ShortExactSeq::new(incl, d)?;
            let eps = yoneda_class(&s)?;
            let conclusions = components_second(b, &eps, blk1.c)?;
            out.push(Fact {
                kind: CompositionKind::Deflation,
                via: (k, local),
                conclusions,
            });
        }
        Ok(out)
    }

    /// Computes the facts for every ordered pair of the given classes up front.
    pub fn prepare(&self, vectors: &[Vec<u32>]) -> Result<()> {
        let pairs: Vec<(usize, usize)> = (0..vectors.len())
            .flat_map(|i| (0..vectors.len()).map(move |j| (i, j)))
            .collect();
        pairs
            .par_iter()
            .try_for_each(|&(i, j)| self.facts(&vectors[i], &vectors[j]).map(|_| ()))
    }

    pub fn search(&self, n: &SubBimodule) -> Result<Option<CompositionWitness>> {
        let cands = self.candidates(n);
        let mut examined = 0;
        for v1 in &cands {
            for v2 in &cands {
                if examined >= self.budget.max_pairs {
                    return Ok(None);
                }
                examined += 1;
                for fact in self.facts(v1, v2)?.iter() {
                    if let Some(miss) = fact.conclusions.iter().find(|c| !n.contains(c)) {
                        return Ok(Some(CompositionWitness {
                            kind: fact.kind,
                            first: v1.clone(),
                            second: v2.clone(),
                            via: fact.via,
                            missing: miss.clone(),
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}

pub fn composition_counterexample(
    n: &SubBimodule,
    b: &ExtBimodule,
    budget: CompositionBudget,
) -> Result<Option<CompositionWitness>> {
    CompositionOracle::new(b, budget, Arc::default()).search(n)
}

/// Which oracles [`run_oracles`] evaluates.
#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub middle_exact: bool,
    pub composition: bool,
    pub budget: CompositionBudget,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            middle_exact: true,
            composition: true,
            budget: CompositionBudget::default(),
        }
    }
}

/// Fills the oracle fields of every verdict.
pub fn run_oracles(
    l: &SubmoduleLattice,
    b: &ExtBimodule,
    cl: &mut Closedness,
    opts: OracleOptions,
) -> Result<()> {
    let seqs: Arc<SequenceCache> = Arc::default();
    let me = MiddleExactOracle::new(b, seqs.clone());
    let co = CompositionOracle::new(b, opts.budget, seqs);
    if l.mask(0).is_some() {
        let units: Vec<Vec<u32>> = (0..b.global_dim())
            .map(|k| {
                b.global_vector(
                    b.block_of(k).c,
                    b.block_of(k).a,
                    &unit(b.block_of(k).dim(), k - b.block_of(k).offset),
                )
            })
            .collect();
        if opts.middle_exact {
            me.prepare(&units)?;
        }
        if opts.composition {
            co.prepare(&units)?;
        }
    }
    let results: Vec<(
        Option<Option<MiddleExactWitness>>,
        Option<Option<CompositionWitness>>,
    )> = (0..l.len())
        .into_par_iter()
        .map(|i| {
            let node = l.node(i);
            let m = if opts.middle_exact {
                Some(me.check(&node)?)
            } else {
                None
            };
            let c = if opts.composition {
                Some(co.search(&node)?)
            } else {
                None
            };
            Ok((m, c))
        })
        .collect::<Result<_>>()?;
    for (v, (m, c)) in cl.verdicts.iter_mut().zip(results) {
        if let Some(w) = m {
            v.middle_exact_ok = Some(w.is_none());
            v.middle_exact_witness = w;
        }
        v.composition = c;
    }
    Ok(())
}

fn unit(n: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[k] = 1;
    v
}

/// Smallest closed node above both closed nodes: the meet of every closed node containing them.
pub fn closed_join(l: &SubmoduleLattice, cl: &Closedness, i: usize, j: usize) -> Result<usize> {
    if !cl.is_closed(i) || !cl.is_closed(j) {
        return Err(Error::Validation(format!(
            "closed_join of non-closed nodes {i}, {j}"
        )));
    }
    let mut acc = l.top();
    for k in cl.closed_nodes() {
        if l.leq(i, k) && l.leq(j, k) {
            acc = l.meet(acc, k);
        }
    }
    if !cl.is_closed(acc) {
        return Err(Error::Structural(format!(
            "meet of closed nodes above {i} and {j} is not closed"
        )));
    }
    Ok(acc)
}

/// Hasse covers of the closed nodes under the induced order, as node-index pairs.
pub fn closed_hasse(l: &SubmoduleLattice, cl: &Closedness) -> Vec<(usize, usize)> {
    let closed = cl.closed_nodes();
    let mut edges = Vec::new();
    for &i in &closed {
        let above: Vec<usize> = closed
            .iter()
            .copied()
            .filter(|&k| k != i && l.leq(i, k))
            .collect();
        for &u in &above {
            if !above.iter().any(|&v| v != u && l.leq(v, u)) {
                edges.push((i, u));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// Pairs of closed nodes whose join in the full lattice is strictly below their closed join.
#[derive(Clone, Debug, Default)]
pub struct JoinDiscrepancies {
    pub pairs_checked: usize,
    pub all_below: bool,
    pub count: usize,
    /// `(i, j, join, closed_join)`, first few in index order.
    pub witnesses: Vec<(usize, usize, usize, usize)>,
}

pub fn join_discrepancies(
    l: &SubmoduleLattice,
    cl: &Closedness,
    keep: usize,
) -> Result<JoinDiscrepancies> {
    let closed = cl.closed_nodes();
    let rows: Vec<Vec<(usize, usize, usize, usize)>> = closed
        .par_iter()
        .enumerate()
        .map(|(a, &i)| {
            let mut out = Vec::new();
            for &j in &closed[a + 1..] {
                out.push((i, j, l.join(i, j), closed_join(l, cl, i, j)?));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut rep = JoinDiscrepancies {
        all_below: true,
        ..Default::default()
    };
    for (i, j, w, e) in rows.into_iter().flatten() {
        rep.pairs_checked += 1;
        rep.all_below &= l.leq(w, e);
        if w != e {
            rep.count += 1;
            if rep.witnesses.len() < keep {
                rep.witnesses.push((i, j, w, e));
            }
        }
    }
    Ok(rep)
}

/// Outcome of [`boolean_check`].
#[derive(Clone, Debug)]
pub struct BooleanCheck {
    pub ok: bool,
    pub closed_count: usize,
    pub socle_dim: usize,
    /// Global vectors spanning the socle lines, one per block meeting the socle.
    pub lines: Vec<Vec<u32>>,
    /// Whether the closed join of the atoms below each closed node recovers it.
    pub reconstruction_ok: bool,
    pub failure: Option<String>,
}

/// `|closed| = 2^dim soc B`, and `N ↦ {lines in soc N}` is an order isomorphism onto subsets of lines.
pub fn boolean_check(
    l: &SubmoduleLattice,
    b: &ExtBimodule,
    cl: &Closedness,
) -> Result<BooleanCheck> {
    let soc = b.socle();
    let closed = cl.closed_nodes();
    let mut out = BooleanCheck {
        ok: false,
        closed_count: closed.len(),
        socle_dim: soc.dim(),
        lines: Vec::new(),
        reconstruction_ok: false,
        failure: None,
    };
    let socb = SubBimodule::from_subspace(soc.clone());
    for blk in b.nonzero_blocks() {
        let part = block_part(&socb, blk);
        match part.dim() {
            0 => {}
            1 => out
                .lines
                .push(b.global_vector(blk.c, blk.a, part.basis().row(0))),
            d => {
                out.failure = Some(format!("socle meets a block in dimension {d}"));
                return Ok(out);
            }
        }
    }
    if out.lines.len() != soc.dim() || out.lines.len() > 127 {
        out.failure = Some("socle is not the sum of its block lines".into());
        return Ok(out);
    }
    if closed.len() as u128 != 1u128 << out.lines.len() {
        out.failure = Some(format!(
            "{} closed nodes but 2^{} expected",
            closed.len(),
            out.lines.len()
        ));
        return Ok(out);
    }
    let phi: Vec<u128> = closed
        .iter()
        .map(|&i| {
            let s = cl.socle(i);
            out.lines
                .iter()
                .enumerate()
                .filter(|(_, v)| s.contains(v))
                .fold(0u128, |m, (k, _)| m | 1 << k)
        })
        .collect();
    for (&i, &m) in closed.iter().zip(&phi) {
        if m.count_ones() as usize != cl.socle(i).dim() {
            out.failure = Some(format!("socle of node {i} is not spanned by lines"));
            return Ok(out);
        }
    }
    let mut sorted = phi.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != closed.len() {
        out.failure = Some("two closed nodes have the same socle lines".into());
        return Ok(out);
    }
    for (a, &i) in closed.iter().enumerate() {
        for (c, &j) in closed.iter().enumerate() {
            if l.leq(i, j) != (phi[a] & !phi[c] == 0) {
                out.failure = Some(format!(
                    "order of nodes {i}, {j} differs from their socle lines"
                ));
                return Ok(out);
            }
        }
    }
    let atom_of: HashMap<u128, usize> = closed
        .iter()
        .zip(&phi)
        .filter(|(_, m)| m.count_ones() == 1)
        .map(|(&i, &m)| (m, i))
        .collect();
    let mut recon = true;
    for (&i, &m) in closed.iter().zip(&phi) {
        let mut acc = l.bottom();
        for k in 0..out.lines.len() {
            if m >> k & 1 == 1 {
                acc = closed_join(l, cl, acc, atom_of[&(1u128 << k)])?;
            }
        }
        recon &= acc == i;
    }
    out.reconstruction_ok = recon;
    out.ok = recon;
    if !recon {
        out.failure = Some("closed join of atoms does not recover a closed node".into());
    }
    Ok(out)
}

/// Whether the atoms of the full lattice are exactly the socle lines.
pub fn atoms_are_socle_lines(l: &SubmoduleLattice, b: &ExtBimodule) -> bool {
    let soc = b.socle();
    let atoms = l.atoms();
    atoms.len() == soc.dim()
        && atoms.iter().all(|&i| {
            let n = l.node(i);
            n.dim() == 1
                && soc.contains_subspace(n.space())
                && b.single_block(n.basis().row(0)).is_some()
        })
}

/// Sequence `0 → A → Y → coker i → 0` for a monic `i`.
pub fn sequence_of_monic(i: &RepMorphism) -> Result<ShortExactSeq> {
    let (_, q, _) = cokernel(i)?;
    ShortExactSeq::new(i.clone(), q)
}

/// Sequence `0 → ker d → Y → C → 0` for an epic `d`.
pub fn sequence_of_epic(d: &RepMorphism) -> Result<ShortExactSeq> {
    let (_, incl) = kernel(d)?;
    ShortExactSeq::new(incl, d.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auslander::{build_algebra, build_ext_bimodule};
    use crate::field::PrimeField;
    use crate::lattice::enumerate_submodules;
    use crate::quiver::type_a_category;

    fn setup(p: u32, n: usize, o: &str) -> (ExtBimodule, SubmoduleLattice) {
        let c = type_a_category(n, o, PrimeField::new(p).unwrap()).unwrap();
        let b = build_ext_bimodule(build_algebra(&c).unwrap()).unwrap();
        let l = enumerate_submodules(&b).unwrap();
        (b, l)
    }

    #[test]
    fn a3_closed_count_and_boolean() {
        let (b, l) = setup(2, 3, "RR");
        let cl = closed_flags(&l, &b).unwrap();
        assert_eq!(cl.closed_nodes().len(), 8);
        let bc = boolean_check(&l, &b, &cl).unwrap();
        assert!(bc.ok, "{:?}", bc.failure);
        assert!(atoms_are_socle_lines(&l, &b));
        let jd = join_discrepancies(&l, &cl, 4).unwrap();
        assert!(jd.all_below && jd.count > 0);
        assert_eq!(closed_hasse(&l, &cl).len(), 12);
    }

    #[test]
    fn socle_of_node_is_intersection() {
        let (b, l) = setup(3, 3, "RL");
        let cl = closed_flags(&l, &b).unwrap();
        for i in 0..l.len() {
            let n = l.node(i);
            let direct = b.socle_of(n.space());
            assert_eq!(&direct, &n.space().intersection(b.socle()));
            assert_eq!(cl.socle(i).space(), &direct);
        }
    }

    #[test]
    fn oracles_agree_on_a3() {
        for o in ["RR", "RL", "LR", "LL"] {
            let (b, l) = setup(2, 3, o);
            let mut cl = closed_flags(&l, &b).unwrap();
            run_oracles(&l, &b, &mut cl, OracleOptions::default()).unwrap();
            for v in &cl.verdicts {
                assert_eq!(
                    v.middle_exact_ok,
                    Some(v.closed),
                    "{o} node {} {:?}",
                    v.node,
                    l.node(v.node)
                );
                assert_eq!(
                    v.composition.as_ref().unwrap().is_none(),
                    v.closed,
                    "{o} node {}",
                    v.node
                );
            }
        }
    }

    #[test]
    fn zero_bimodule() {
        let (b, l) = setup(2, 1, "");
        let cl = closed_flags(&l, &b).unwrap();
        assert_eq!(cl.closed_nodes(), vec![0]);
        let (ok, _) = middle_exact_check(&l.node(0), &b).unwrap();
        assert!(ok);
        assert!(
            composition_counterexample(&l.node(0), &b, CompositionBudget::default())
                .unwrap()
                .is_none()
        );
    }
}
