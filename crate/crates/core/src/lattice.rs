//! Sub-bimodules of `B` and the lattice they form under `∩` and `+`.
//!
//! Two enumerators are provided. The general one adjoins every vector of `B`
//! to every node and closes under the action; since `close(N + v) = N + ⟨v⟩`,
//! the cyclic submodules `⟨v⟩` are computed once per vector and then added to
//! each node. The coordinate enumerator applies when every Peirce block has
//! dimension at most one: every sub-bimodule is then spanned by basis vectors,
//! and nodes are stored as coordinate masks.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::auslander::ExtBimodule;
use crate::error::{Error, Result};
use crate::field::{all_vectors, Matrix, PrimeField, Subspace};

/// Default cap on `p^dim B` for the general enumerator, and on the node count.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A sub-bimodule of `B`, held as a canonical RREF subspace of global coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubBimodule {
    space: Subspace,
}

impl std::fmt::Debug for SubBimodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubBimodule{:?}", self.support())
    }
}

impl SubBimodule {
    /// Wraps a subspace; does not check action closure (see [`SubBimodule::is_action_closed`]).
    pub fn from_subspace(space: Subspace) -> Self {
        Self { space }
    }

    pub fn zero(field: PrimeField, g: usize) -> Self {
        Self::from_subspace(Subspace::zero(field, g))
    }

    pub fn full(field: PrimeField, g: usize) -> Self {
        Self::from_subspace(Subspace::full(field, g))
    }

    /// Span of the given global coordinates.
    pub fn from_coords(
        field: PrimeField,
        g: usize,
        coords: impl IntoIterator<Item = usize>,
    ) -> Self {
        let vs: Vec<Vec<u32>> = coords
            .into_iter()
            .map(|k| {
                let mut v = vec![0; g];
                v[k] = 1;
                v
            })
            .collect();
        Self::from_subspace(Subspace::span(field, g, &vs))
    }

    fn from_mask(field: PrimeField, g: usize, mask: u128) -> Self {
        Self::from_coords(field, g, (0..g).filter(|&k| mask >> k & 1 == 1))
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> &Matrix {
        self.space.basis()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.space.contains(v)
    }

    pub fn contains_coord(&self, k: usize) -> bool {
        let mut v = vec![0; self.ambient_dim()];
        v[k] = 1;
        self.contains(&v)
    }

    pub fn is_subset_of(&self, other: &SubBimodule) -> bool {
        other.space.contains_subspace(&self.space)
    }

    /// Columns on which some basis vector is nonzero.
    pub fn support(&self) -> Vec<usize> {
        let b = self.basis();
        (0..b.cols())
            .filter(|&c| (0..b.rows()).any(|r| b.get(r, c) != 0))
            .collect()
    }

    /// The set of coordinates, if the subspace is spanned by coordinate vectors.
    pub fn coordinate_set(&self) -> Option<Vec<usize>> {
        let s = self.support();
        (s.len() == self.dim()).then_some(s)
    }

    pub fn meet(&self, other: &SubBimodule) -> Result<SubBimodule> {
        self.check_same(other)?;
        Ok(Self::from_subspace(self.space.intersection(&other.space)))
    }

    pub fn join(&self, other: &SubBimodule) -> Result<SubBimodule> {
        self.check_same(other)?;
        Ok(Self::from_subspace(self.space.sum(&other.space)))
    }

    fn check_same(&self, other: &SubBimodule) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() || self.space.field() != other.space.field() {
            return Err(Error::Dimension(
                "sub-bimodules of different bimodules".into(),
            ));
        }
        Ok(())
    }

    /// Whether every action matrix maps the subspace into itself.
    pub fn is_action_closed(&self, b: &ExtBimodule) -> bool {
        b.action_matrices().all(|m| {
            self.space
                .vectors()
                .iter()
                .all(|v| self.space.contains(&m.mul_vec(v)))
        })
    }

    /// Canonical order: dimension, then the row-major basis entries.
    pub fn canonical_cmp(&self, other: &SubBimodule) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.basis().data().cmp(other.basis().data()))
    }
}

/// Sparse columns of the action matrices, zero matrices dropped.
struct SparseActions {
    mats: Vec<Vec<Vec<(usize, u32)>>>,
}

impl SparseActions {
    fn new(b: &ExtBimodule) -> Self {
        let g = b.global_dim();
        let mut seen = HashSet::new();
        let mats = b
            .action_matrices()
            .filter(|m| !m.is_zero() && seen.insert((*m).clone()))
            .map(|m| {
                (0..g)
                    .map(|c| {
                        (0..g)
                            .filter_map(|r| {
                                let x = m.get(r, c);
                                (x != 0).then_some((r, x))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self { mats }
    }

    fn apply(&self, field: PrimeField, m: usize, v: &[u32]) -> Option<Vec<u32>> {
        let mut out = vec![0; v.len()];
        let mut nonzero = false;
        for (c, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(r, a) in &self.mats[m][c] {
                out[r] = field.add(out[r], field.mul(a, x));
                nonzero = true;
            }
        }
        (nonzero && out.iter().any(|&x| x != 0)).then_some(out)
    }

    /// Smallest action-closed subspace containing `start` and `extra`.
    fn close(&self, field: PrimeField, start: &Subspace, extra: &[Vec<u32>]) -> Subspace {
        let mut space = start.clone();
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in extra {
            if !space.contains(v) {
                space = space.with_vector(v);
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for m in 0..self.mats.len() {
                if let Some(w) = self.apply(field, m, &v) {
                    if !space.contains(&w) {
                        space = space.with_vector(&w);
                        queue.push(w);
                    }
                }
            }
        }
        space
    }
}

/// Fixpoint closure of the span of `vectors` under all actions.
pub fn generated_submodule(b: &ExtBimodule, vectors: &[Vec<u32>]) -> SubBimodule {
    let f = b.field();
    let start = Subspace::zero(f, b.global_dim());
    SubBimodule::from_subspace(SparseActions::new(b).close(f, &start, vectors))
}

/// Which enumerator produced a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Coordinate,
    General,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerationOptions {
    pub budget: u128,
    /// Use the general enumerator even when the coordinate one applies.
    pub force_general: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            force_general: false,
        }
    }
}

#[derive(Clone, Debug)]
enum Nodes {
    Masks(Vec<u128>),
    Spaces(Vec<SubBimodule>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    Mask(u128),
    Basis(Vec<u32>),
}

/// The complete lattice of sub-bimodules; node 0 is the zero submodule and the last node is `B`.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    field: PrimeField,
    global_dim: usize,
    nodes: Nodes,
    dims: Vec<usize>,
    index: HashMap<Key, usize>,
    hasse: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    strategy: Strategy,
    reach: Option<Vec<u128>>,
}

/// `r ≤ s` with `s ∧ (r ∨ t) ≠ r ∨ (s ∧ t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularityWitness {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

pub fn enumerate_submodules(b: &ExtBimodule) -> Result<SubmoduleLattice> {
    enumerate_submodules_with(b, EnumerationOptions::default())
}

pub fn enumerate_submodules_with(
    b: &ExtBimodule,
    opts: EnumerationOptions,
) -> Result<SubmoduleLattice> {
    if !opts.force_general && b.is_multiplicity_free() && b.global_dim() <= 128 {
        enumerate_coordinate(b, opts.budget)
    } else {
        enumerate_general(b, opts.budget)
    }
}

fn enumerate_coordinate(b: &ExtBimodule, budget: u128) -> Result<SubmoduleLattice> {
    let g = b.global_dim();
    let mut reach: Vec<u128> = (0..g).map(|k| 1u128 << k).collect();
    for m in b.action_matrices() {
        for k in 0..g {
            for j in 0..g {
                if m.get(j, k) != 0 {
                    reach[k] |= 1 << j;
                }
            }
        }
    }
    loop {
        let mut changed = false;
        for k in 0..g {
            let mut r = reach[k];
            for j in 0..g {
                if r >> j & 1 == 1 {
                    r |= reach[j];
                }
            }
            if r != reach[k] {
                reach[k] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut seen: HashSet<u128> = HashSet::from([0]);
    let mut stack = vec![0u128];
    while let Some(s) = stack.pop() {
        for (k, &r) in reach.iter().enumerate() {
            if s >> k & 1 == 0 {
                let t = s | r;
                if seen.insert(t) {
                    if seen.len() as u128 > budget {
                        return Err(Error::Budget(format!("more than {budget} sub-bimodules")));
                    }
                    stack.push(t);
                }
            }
        }
    }
    let mut masks: Vec<u128> = seen.into_iter().collect();
    masks.sort_by(|&x, &y| mask_cmp(x, y));
    let index: HashMap<Key, usize> = masks
        .iter()
        .enumerate()
        .map(|(i, &m)| (Key::Mask(m), i))
        .collect();

    let covers: Vec<Vec<usize>> = masks
        .par_iter()
        .map(|&s| {
            let mut out = Vec::new();
            for (k, &rk) in reach.iter().enumerate() {
                if s >> k & 1 == 1 {
                    continue;
                }
                let t = s | rk;
                // t is minimal iff adjoining any of its new coordinates regenerates t
                let fresh = t & !s;
                let minimal = (0..g)
                    .filter(|&j| fresh >> j & 1 == 1)
                    .all(|j| s | reach[j] == t);
                if minimal && (0..k).all(|j| s >> j & 1 == 1 || s | reach[j] != t) {
                    out.push(index[&Key::Mask(t)]);
                }
            }
            out.sort_unstable();
            out
        })
        .collect();
    let dims = masks.iter().map(|m| m.count_ones() as usize).collect();
    Ok(SubmoduleLattice::assemble(
        b.field(),
        g,
        Nodes::Masks(masks),
        dims,
        index,
        covers,
        Strategy::Coordinate,
    )
    .with_reach(reach))
}

/// Order on masks agreeing with [`SubBimodule::canonical_cmp`] of the spanned subspaces.
fn mask_cmp(x: u128, y: u128) -> Ordering {
    x.count_ones().cmp(&y.count_ones()).then_with(|| {
        // rows are unit vectors in increasing coordinate order; e_i > e_j as entries iff i < j
        let (mut a, mut b) = (x, y);
        while a != 0 {
            let (i, j) = (a.trailing_zeros(), b.trailing_zeros());
            if i != j {
                return j.cmp(&i);
            }
            a &= a - 1;
            b &= b - 1;
        }
        Ordering::Equal
    })
}

fn enumerate_general(b: &ExtBimodule, budget: u128) -> Result<SubmoduleLattice> {
    let f = b.field();
    let g = b.global_dim();
    let total = (f.modulus() as u128).checked_pow(g as u32);
    match total {
        Some(t) if t <= budget => {}
        _ => {
            return Err(Error::Budget(format!(
                "p^dim B = {}^{g} exceeds the budget {budget}",
                f.modulus()
            )))
        }
    }
    let actions = SparseActions::new(b);
    let zero = Subspace::zero(f, g);
    let vectors: Vec<Vec<u32>> = all_vectors(f, g)
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect();
    let cyclic: Vec<Subspace> = vectors
        .par_iter()
        .map(|v| actions.close(f, &zero, std::slice::from_ref(v)))
        .collect();
    let mut distinct: Vec<Subspace> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for c in cyclic {
        if seen_cyclic.insert(c.basis().data().to_vec()) {
            distinct.push(c);
        }
    }

    let mut found: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut spaces = vec![zero.clone()];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new()];
    found.insert(zero.basis().data().to_vec(), 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let results: Vec<Vec<Subspace>> = frontier
            .par_iter()
            .map(|&i| {
                let s = &spaces[i];
                let mut out: Vec<Subspace> = Vec::new();
                let mut local = HashSet::new();
                for c in &distinct {
                    if s.contains_subspace(c) {
                        continue;
                    }
                    let t = s.sum(c);
                    if local.insert(t.basis().data().to_vec()) {
                        out.push(t);
                    }
                }
                out
            })
            .collect();
        let mut next = Vec::new();
        for (&i, outs) in frontier.iter().zip(results) {
            for t in outs {
                let key = t.basis().data().to_vec();
                let j = match found.get(&key) {
                    Some(&j) => j,
                    None => {
                        let j = spaces.len();
                        if j as u128 >= budget {
                            return Err(Error::Budget(format!("more than {budget} sub-bimodules")));
                        }
                        found.insert(key, j);
                        spaces.push(t);
                        succ.push(Vec::new());
                        next.push(j);
                        j
                    }
                };
                succ[i].push(j);
            }
        }
        frontier = next;
    }

    let mut order: Vec<usize> = (0..spaces.len()).collect();
    let nodes: Vec<SubBimodule> = spaces.into_iter().map(SubBimodule::from_subspace).collect();
    order.sort_by(|&x, &y| nodes[x].canonical_cmp(&nodes[y]));
    let mut rank = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let covers: Vec<Vec<usize>> = order
        .par_iter()
        .map(|&old| {
            let cands = &succ[old];
            let mut out: Vec<usize> = cands
                .iter()
                .filter(|&&y| {
                    !cands
                        .iter()
                        .any(|&z| z != y && nodes[z].is_subset_of(&nodes[y]))
                })
                .map(|&y| rank[y])
                .collect();
            out.sort_unstable();
            out
        })
        .collect();
    let mut sorted: Vec<Option<SubBimodule>> = nodes.into_iter().map(Some).collect();
    let nodes: Vec<SubBimodule> = order.iter().map(|&o| sorted[o].take().unwrap()).collect();
    let index = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (Key::Basis(n.basis().data().to_vec()), i))
        .collect();
    let dims = nodes.iter().map(SubBimodule::dim).collect();
    Ok(SubmoduleLattice::assemble(
        f,
        g,
        Nodes::Spaces(nodes),
        dims,
        index,
        covers,
        Strategy::General,
    ))
}

impl SubmoduleLattice {
    fn assemble(
        field: PrimeField,
        global_dim: usize,
        nodes: Nodes,
        dims: Vec<usize>,
        index: HashMap<Key, usize>,
        up: Vec<Vec<usize>>,
        strategy: Strategy,
    ) -> Self {
        let hasse = up
            .iter()
            .enumerate()
            .flat_map(|(i, ys)| ys.iter().map(move |&j| (i, j)))
            .collect();
        Self {
            field,
            global_dim,
            nodes,
            dims,
            index,
            hasse,
            up,
            strategy,
            reach: None,
        }
    }

    fn with_reach(mut self, reach: Vec<u128>) -> Self {
        self.reach = Some(reach);
        self
    }

    /// An irredundant generating set of node `i`, as global vectors.
    ///
    /// For coordinate lattices these are the coordinates not reached from any
    /// other coordinate of the node; otherwise RREF rows are taken greedily and
    /// redundant ones dropped.
    pub fn generators(&self, b: &ExtBimodule, i: usize) -> Vec<Vec<u32>> {
        let g = self.global_dim;
        let unit = |k: usize| {
            let mut v = vec![0; g];
            v[k] = 1;
            v
        };
        if let (Some(m), Some(reach)) = (self.mask(i), &self.reach) {
            return (0..g)
                .filter(|&k| m >> k & 1 == 1)
                .filter(|&k| !(0..g).any(|j| j != k && m >> j & 1 == 1 && reach[j] >> k & 1 == 1))
                .map(unit)
                .collect();
        }
        let node = self.node(i);
        let mut gens: Vec<Vec<u32>> = Vec::new();
        let mut cur = SubBimodule::zero(self.field, g);
        for v in node.space().vectors() {
            if !cur.contains(&v) {
                gens.push(v);
                cur = generated_submodule(b, &gens);
            }
        }
        let mut k = 0;
        while k < gens.len() {
            let mut rest = gens.clone();
            rest.remove(k);
            if generated_submodule(b, &rest) == node {
                gens = rest;
            } else {
                k += 1;
            }
        }
        gens
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn global_dim(&self) -> usize {
        self.global_dim
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The node as a subspace (materialized for coordinate lattices).
    pub fn node(&self, i: usize) -> SubBimodule {
        match &self.nodes {
            Nodes::Masks(m) => SubBimodule::from_mask(self.field, self.global_dim, m[i]),
            Nodes::Spaces(s) => s[i].clone(),
        }
    }

    /// Coordinate mask of a node, for coordinate lattices.
    pub fn mask(&self, i: usize) -> Option<u128> {
        match &self.nodes {
            Nodes::Masks(m) => Some(m[i]),
            Nodes::Spaces(_) => None,
        }
    }

    pub fn index_of(&self, n: &SubBimodule) -> Option<usize> {
        if let Nodes::Masks(_) = self.nodes {
            let coords = n.coordinate_set()?;
            let mask = coords.iter().fold(0u128, |m, &k| m | 1 << k);
            return self.index.get(&Key::Mask(mask)).copied();
        }
        self.index
            .get(&Key::Basis(n.basis().data().to_vec()))
            .copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        match &self.nodes {
            Nodes::Masks(m) => m[i] & !m[j] == 0,
            Nodes::Spaces(s) => s[i].is_subset_of(&s[j]),
        }
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        match &self.nodes {
            Nodes::Masks(m) => self.index[&Key::Mask(m[i] & m[j])],
            Nodes::Spaces(s) => {
                let x = s[i].meet(&s[j]).expect("same bimodule");
                self.index[&Key::Basis(x.basis().data().to_vec())]
            }
        }
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        match &self.nodes {
            Nodes::Masks(m) => self.index[&Key::Mask(m[i] | m[j])],
            Nodes::Spaces(s) => {
                let x = s[i].join(&s[j]).expect("same bimodule");
                self.index[&Key::Basis(x.basis().data().to_vec())]
            }
        }
    }

    /// Cover relations `(lower, upper)`, sorted.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// Nodes covering `i`.
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn atoms(&self) -> Vec<usize> {
        if self.len() == 1 {
            return Vec::new();
        }
        self.up[self.bottom()].clone()
    }

    /// Exhaustive check over all `r ≤ s` and all `t`.
    pub fn is_modular(&self) -> Result<(), ModularityWitness> {
        let n = self.len();
        if let Nodes::Masks(m) = &self.nodes {
            let hit = (0..n).into_par_iter().find_map_first(|r| {
                for s in 0..n {
                    if m[r] & !m[s] != 0 {
                        continue;
                    }
                    for t in 0..n {
                        if m[s] & (m[r] | m[t]) != m[r] | (m[s] & m[t]) {
                            return Some(ModularityWitness { r, s, t });
                        }
                    }
                }
                None
            });
            return hit.map_or(Ok(()), Err);
        }
        let meet: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| self.meet(i, j)).collect())
            .collect();
        let join: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| self.join(i, j)).collect())
            .collect();
        modular_witness(n, |r, s| meet[r][s] == r, &meet, &join).map_or(Ok(()), Err)
    }

    /// The abstract order with meet and join tables.
    pub fn to_order(&self) -> OrderLattice {
        let n = self.len();
        OrderLattice {
            leq: (0..n)
                .map(|i| (0..n).map(|j| self.leq(i, j)).collect())
                .collect(),
            meet: (0..n)
                .map(|i| (0..n).map(|j| self.meet(i, j)).collect())
                .collect(),
            join: (0..n)
                .map(|i| (0..n).map(|j| self.join(i, j)).collect())
                .collect(),
        }
    }
}

fn modular_witness(
    n: usize,
    leq: impl Fn(usize, usize) -> bool + Sync,
    meet: &[Vec<usize>],
    join: &[Vec<usize>],
) -> Option<ModularityWitness> {
    (0..n).into_par_iter().find_map_first(|r| {
        for s in 0..n {
            if !leq(r, s) {
                continue;
            }
            for t in 0..n {
                if meet[s][join[r][t]] != join[r][meet[s][t]] {
                    return Some(ModularityWitness { r, s, t });
                }
            }
        }
        None
    })
}

/// A finite lattice given by its order, with derived meet and join tables.
#[derive(Clone, Debug)]
pub struct OrderLattice {
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl OrderLattice {
    /// Builds the lattice from a partial order; fails if some pair lacks a meet or a join.
    pub fn from_order(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| leq(i, j)).collect())
            .collect();
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::Validation("order is not reflexive".into()));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::Validation("order is not antisymmetric".into()));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::Validation("order is not transitive".into()));
                    }
                }
            }
        }
        let bound = |i: usize, j: usize, lower: bool| -> Result<usize> {
            let cands: Vec<usize> = (0..n)
                .filter(|&k| {
                    if lower {
                        leq[k][i] && leq[k][j]
                    } else {
                        leq[i][k] && leq[j][k]
                    }
                })
                .collect();
            cands
                .iter()
                .copied()
                .find(|&k| {
                    cands
                        .iter()
                        .all(|&c| if lower { leq[c][k] } else { leq[k][c] })
                })
                .ok_or_else(|| {
                    Error::Validation(format!(
                        "no {} of {i} and {j}",
                        if lower { "meet" } else { "join" }
                    ))
                })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                meet[i][j] = bound(i, j, true)?;
                join[i][j] = bound(i, j, false)?;
            }
        }
        Ok(Self { leq, meet, join })
    }

    /// The pentagon `0 < a < c < 1`, `0 < b < 1`.
    pub fn pentagon() -> Self {
        let up = [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)];
        Self::from_order(5, |i, j| i == j || reachable(&up, i, j)).expect("pentagon is a lattice")
    }

    /// The diamond `M3`: modular but not distributive.
    pub fn diamond() -> Self {
        Self::from_order(5, |i, j| i == j || i == 0 || j == 4).expect("diamond is a lattice")
    }

    pub fn chain(n: usize) -> Self {
        Self::from_order(n, |i, j| i <= j).expect("chains are lattices")
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j
                    && self.leq[i][j]
                    && !(0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j])
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_modular(&self) -> Result<(), ModularityWitness> {
        modular_witness(self.len(), |r, s| self.leq[r][s], &self.meet, &self.join)
            .map_or(Ok(()), Err)
    }
}

fn reachable(edges: &[(usize, usize)], from: usize, to: usize) -> bool {
    let mut stack = vec![from];
    let mut seen = HashSet::new();
    while let Some(x) = stack.pop() {
        if x == to {
            return true;
        }
        if seen.insert(x) {
            stack.extend(edges.iter().filter(|e| e.0 == x).map(|e| e.1));
        }
    }
    false
}
