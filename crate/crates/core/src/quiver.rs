//! Quivers, their representations over `F_p`, and morphism spaces.
//!
//! Vertices are numbered from 1 in every external format and from 0 internally.
//! A representation assigns a vector space `F_p^{dim(v)}` to each vertex and a
//! `dim(target) × dim(source)` matrix to each arrow.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Matrix, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    /// 0-based source vertex.
    pub source: usize,
    /// 0-based target vertex.
    pub target: usize,
}

/// A finite acyclic quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Validates arrow endpoints, name uniqueness and acyclicity.
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::Validation(
                "a quiver needs at least one vertex".into(),
            ));
        }
        let mut names = std::collections::HashSet::new();
        for a in &arrows {
            if a.source >= vertices || a.target >= vertices {
                return Err(Error::Validation(format!(
                    "arrow {} has an endpoint outside 1..={vertices}",
                    a.name
                )));
            }
            if !names.insert(a.name.as_str()) {
                return Err(Error::Validation(format!(
                    "duplicate arrow name {}",
                    a.name
                )));
            }
        }
        let q = Self { vertices, arrows };
        q.topological_order()?;
        Ok(q)
    }

    /// Type `A_n` with the given orientation: character `k` is `R` for `k → k+1`
    /// and `L` for `k+1 → k`.
    pub fn type_a(n: usize, orientation: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("type A needs n >= 1".into()));
        }
        if orientation.chars().count() != n - 1 {
            return Err(Error::Validation(format!(
                "orientation for A_{n} must have length {}, got {:?}",
                n - 1,
                orientation
            )));
        }
        let mut arrows = Vec::with_capacity(n - 1);
        for (k, ch) in orientation.chars().enumerate() {
            let (source, target) = match ch {
                'R' | 'r' => (k, k + 1),
                'L' | 'l' => (k + 1, k),
                other => {
                    return Err(Error::Validation(format!(
                        "orientation character {other:?} is neither L nor R"
                    )))
                }
            };
            arrows.push(Arrow {
                name: format!("a{}", k + 1),
                source,
                target,
            });
        }
        Self::new(n, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Kahn's algorithm; errors on a cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertices];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertices);
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.push(a.target);
                }
            }
        }
        if order.len() != self.vertices {
            return Err(Error::Validation("quiver has an oriented cycle".into()));
        }
        Ok(order)
    }

    /// All paths (as arrow sequences) starting at `v`, trivial path first, in DFS order.
    pub fn paths_from(&self, v: usize) -> Vec<(Vec<usize>, usize)> {
        let mut out = vec![(Vec::new(), v)];
        let mut stack = vec![(Vec::new(), v)];
        while let Some((path, end)) = stack.pop() {
            for (ai, a) in self.arrows.iter().enumerate().rev() {
                if a.source == end {
                    let mut p = path.clone();
                    p.push(ai);
                    out.push((p.clone(), a.target));
                    stack.push((p, a.target));
                }
            }
        }
        out
    }
}

/// A representation of a quiver over `F_p`.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.dims)
    }
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        field: PrimeField,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::Validation(format!(
                "dimension vector has {} entries for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Validation(format!(
                "{} arrow matrices for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::Validation(format!(
                    "matrix for arrow {} is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
            if m.field() != field {
                return Err(Error::Validation(format!(
                    "matrix for arrow {} is over a different field",
                    a.name
                )));
            }
        }
        Ok(Self {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: PrimeField) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        Self {
            quiver,
            field,
            dims,
            maps,
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn same_quiver(&self, other: &Representation) -> bool {
        self.field == other.field
            && (Arc::ptr_eq(&self.quiver, &other.quiver) || *self.quiver == *other.quiver)
    }

    fn check_same_quiver(&self, other: &Representation) -> Result<()> {
        if self.same_quiver(other) {
            Ok(())
        } else {
            Err(Error::Validation(
                "representations live over different quivers or fields".into(),
            ))
        }
    }

    /// The linear map along a path (arrow sequence).
    pub fn path_map(&self, start: usize, path: &[usize]) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dims[start]);
        for &a in path {
            m = self.maps[a].mul(&m);
        }
        m
    }
}

/// Interval module of type `A_n` supported on `[lo, hi]` (0-based, inclusive).
pub fn interval_rep(
    quiver: &Arc<Quiver>,
    field: PrimeField,
    lo: usize,
    hi: usize,
) -> Representation {
    let inside = |v: usize| v >= lo && v <= hi;
    let dims = (0..quiver.vertex_count())
        .map(|v| usize::from(inside(v)))
        .collect::<Vec<_>>();
    let maps = quiver
        .arrows()
        .iter()
        .map(|a| {
            if inside(a.source) && inside(a.target) {
                Matrix::identity(field, 1)
            } else {
                Matrix::zeros(field, dims[a.target], dims[a.source])
            }
        })
        .collect();
    Representation::new(quiver.clone(), field, dims, maps).expect("interval shapes are consistent")
}

/// A finite list of named objects over one quiver: the indecomposables of a
/// representation-finite category.
#[derive(Clone, Debug)]
pub struct Category {
    pub field: PrimeField,
    pub quiver: Arc<Quiver>,
    pub names: Vec<String>,
    pub objects: Vec<Arc<Representation>>,
}

impl Category {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Name used for the interval `[i, j]` (1-based) in generated type-A categories.
pub fn interval_name(i: usize, j: usize) -> String {
    format!("[{i},{j}]")
}

/// The `n(n+1)/2` interval modules of `A_n` with the given orientation,
/// ordered lexicographically by `(i, j)`.
pub fn type_a_category(n: usize, orientation: &str, field: PrimeField) -> Result<Category> {
    let quiver = Arc::new(Quiver::type_a(n, orientation)?);
    let mut names = Vec::new();
    let mut objects = Vec::new();
    for i in 0..n {
        for j in i..n {
            names.push(interval_name(i + 1, j + 1));
            objects.push(Arc::new(interval_rep(&quiver, field, i, j)));
        }
    }
    Ok(Category {
        field,
        quiver,
        names,
        objects,
    })
}

/// A morphism of representations: one matrix per vertex, intertwining the arrow maps.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMorphism {
    source: Arc<Representation>,
    target: Arc<Representation>,
    comps: Vec<Matrix>,
}

impl fmt::Debug for RepMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMorphism {:?} -> {:?}", self.source, self.target)?;
        for (v, m) in self.comps.iter().enumerate() {
            write!(f, "\n vertex {}: {:?}", v + 1, m.row_vectors())?;
        }
        Ok(())
    }
}

impl RepMorphism {
    /// Validates shapes and the intertwining relation on every arrow.
    pub fn new(
        source: Arc<Representation>,
        target: Arc<Representation>,
        comps: Vec<Matrix>,
    ) -> Result<Self> {
        source.check_same_quiver(&target)?;
        let m = Self::new_unchecked(source, target, comps)?;
        for (ai, a) in m.source.quiver.arrows().iter().enumerate() {
            let lhs = m.comps[a.target].mul(m.source.map(ai));
            let rhs = m.target.map(ai).mul(&m.comps[a.source]);
            if lhs != rhs {
                return Err(Error::Validation(format!(
                    "components do not intertwine along arrow {}",
                    a.name
                )));
            }
        }
        Ok(m)
    }

    /// Checks shapes only.
    pub(crate) fn new_unchecked(
        source: Arc<Representation>,
        target: Arc<Representation>,
        comps: Vec<Matrix>,
    ) -> Result<Self> {
        if comps.len() != source.dims.len() {
            return Err(Error::Dimension("wrong number of vertex components".into()));
        }
        for (v, c) in comps.iter().enumerate() {
            if c.rows() != target.dims[v] || c.cols() != source.dims[v] {
                return Err(Error::Dimension(format!(
                    "component at vertex {} is {}x{}, expected {}x{}",
                    v + 1,
                    c.rows(),
                    c.cols(),
                    target.dims[v],
                    source.dims[v]
                )));
            }
        }
        Ok(Self {
            source,
            target,
            comps,
        })
    }

    pub fn zero(source: Arc<Representation>, target: Arc<Representation>) -> Self {
        let f = source.field;
        let comps = (0..source.dims.len())
            .map(|v| Matrix::zeros(f, target.dims[v], source.dims[v]))
            .collect();
        Self {
            source,
            target,
            comps,
        }
    }

    pub fn identity(object: Arc<Representation>) -> Self {
        let f = object.field;
        let comps = object
            .dims
            .iter()
            .map(|&d| Matrix::identity(f, d))
            .collect();
        Self {
            source: object.clone(),
            target: object,
            comps,
        }
    }

    pub fn source(&self) -> &Arc<Representation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation> {
        &self.target
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    pub fn comp(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }

    pub fn field(&self) -> PrimeField {
        self.source.field
    }

    /// `self ∘ f` (first `f`, then `self`).
    pub fn after(&self, f: &RepMorphism) -> Result<RepMorphism> {
        compose(self, f)
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.add(b))
            .collect();
        Self {
            comps,
            ..self.clone()
        }
    }

    pub fn scale(&self, s: u32) -> RepMorphism {
        Self {
            comps: self.comps.iter().map(|c| c.scale(s)).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    /// Concatenation of the row-major vertex components.
    pub fn flatten(&self) -> Vec<u32> {
        self.comps
            .iter()
            .flat_map(|c| c.data().iter().copied())
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.comps
            .iter()
            .all(|c| c.is_square() && c.rank() == c.rows())
    }

    pub fn inverse(&self) -> Option<RepMorphism> {
        let comps = self
            .comps
            .iter()
            .map(Matrix::inverse)
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            source: self.target.clone(),
            target: self.source.clone(),
            comps,
        })
    }

    /// Same components, reinterpreted between representations with equal structure.
    pub fn retarget(
        &self,
        source: Arc<Representation>,
        target: Arc<Representation>,
    ) -> Result<RepMorphism> {
        Self::new_unchecked(source, target, self.comps.clone())
    }
}

/// `g ∘ f`.
pub fn compose(g: &RepMorphism, f: &RepMorphism) -> Result<RepMorphism> {
    if !Arc::ptr_eq(&f.target, &g.source) && *f.target != *g.source {
        return Err(Error::Dimension(
            "cannot compose: target of the first map is not the source of the second".into(),
        ));
    }
    let comps = g
        .comps
        .iter()
        .zip(&f.comps)
        .map(|(gc, fc)| gc.mul(fc))
        .collect();
    Ok(RepMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        comps,
    })
}

/// The space of all morphisms `source → target`, with a fixed basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Arc<Representation>,
    target: Arc<Representation>,
    basis: Vec<RepMorphism>,
    /// Flattened positions that carry the coordinates (free columns of the constraint system).
    free: Vec<usize>,
}

impl HomSpace {
    pub fn source(&self) -> &Arc<Representation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation> {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RepMorphism] {
        &self.basis
    }

    pub fn flat_len(&self) -> usize {
        (0..self.source.dims.len())
            .map(|v| self.source.dims[v] * self.target.dims[v])
            .sum()
    }

    /// Linear combination of the basis.
    pub fn element(&self, coords: &[u32]) -> RepMorphism {
        assert_eq!(
            coords.len(),
            self.dim(),
            "coordinate vector has the wrong length"
        );
        let mut m = RepMorphism::zero(self.source.clone(), self.target.clone());
        for (c, b) in coords.iter().zip(&self.basis) {
            if *c != 0 {
                m = m.add(&b.scale(*c));
            }
        }
        m
    }

    /// Coordinates of `f` in the basis; errors if `f` is not an intertwiner of this space.
    pub fn coords(&self, f: &RepMorphism) -> Result<Vec<u32>> {
        self.coords_of_flat(&f.flatten())
    }

    pub fn coords_of_flat(&self, flat: &[u32]) -> Result<Vec<u32>> {
        if flat.len() != self.flat_len() {
            return Err(Error::Dimension(
                "morphism has the wrong shape for this Hom space".into(),
            ));
        }
        let coords: Vec<u32> = self.free.iter().map(|&i| flat[i]).collect();
        if self.element(&coords).flatten() != flat {
            return Err(Error::Internal(
                "morphism is not in the span of the Hom basis".into(),
            ));
        }
        Ok(coords)
    }

    /// Finds `x` in this space with `post ∘ x ∘ pre = rhs` (either side optional).
    pub fn solve_composite(
        &self,
        post: Option<&RepMorphism>,
        pre: Option<&RepMorphism>,
        rhs: &RepMorphism,
    ) -> Result<Option<RepMorphism>> {
        let images = self
            .basis
            .iter()
            .map(|b| {
                let mut x = b.clone();
                if let Some(pre) = pre {
                    x = compose(&x, pre)?;
                }
                if let Some(post) = post {
                    x = compose(post, &x)?;
                }
                Ok(x.flatten())
            })
            .collect::<Result<Vec<_>>>()?;
        let target = rhs.flatten();
        let f = self.source.field;
        if images.first().is_some_and(|v| v.len() != target.len()) {
            return Err(Error::Dimension(
                "right-hand side has the wrong shape".into(),
            ));
        }
        if images.is_empty() {
            return Ok(target.iter().all(|&x| x == 0).then(|| self.element(&[])));
        }
        let system = Matrix::from_row_vectors(f, target.len(), &images).transpose();
        Ok(system.solve(&target)?.map(|x| self.element(&x)))
    }
}

/// All intertwiners `source → target`: the kernel of the stacked relations
/// `comp(v)·M(a) − N(a)·comp(u) = 0`, one block per arrow `a: u → v`.
pub fn hom_space(source: &Arc<Representation>, target: &Arc<Representation>) -> Result<HomSpace> {
    source.check_same_quiver(target)?;
    let f = source.field;
    let q = source.quiver.clone();
    let n = q.vertex_count();
    let mut offsets = Vec::with_capacity(n);
    let mut total = 0;
    for v in 0..n {
        offsets.push(total);
        total += source.dims[v] * target.dims[v];
    }
    // index of comp(v)[r][c]
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * source.dims[v] + c;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (u, v) = (a.source, a.target);
        let ms = source.map(ai);
        let nt = target.map(ai);
        for r in 0..target.dims[v] {
            for c in 0..source.dims[u] {
                let mut row = vec![0u32; total];
                for k in 0..source.dims[v] {
                    let coeff = ms.get(k, c);
                    if coeff != 0 {
                        let i = var(v, r, k);
                        row[i] = f.add(row[i], coeff);
                    }
                }
                for k in 0..target.dims[u] {
                    let coeff = nt.get(r, k);
                    if coeff != 0 {
                        let i = var(u, k, c);
                        row[i] = f.sub(row[i], coeff);
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_row_vectors(f, total, &rows);
    let (_, pivots) = system.rref();
    let free = crate::field::free_columns(total, &pivots);
    let kernel = system.kernel_basis();
    let basis = (0..kernel.rows())
        .map(|k| {
            let flat = kernel.row(k);
            let comps = (0..n)
                .map(|v| {
                    let len = source.dims[v] * target.dims[v];
                    Matrix::from_vec(
                        f,
                        target.dims[v],
                        source.dims[v],
                        flat[offsets[v]..offsets[v] + len].to_vec(),
                    )
                })
                .collect();
            RepMorphism {
                source: source.clone(),
                target: target.clone(),
                comps,
            }
        })
        .collect();
    Ok(HomSpace {
        source: source.clone(),
        target: target.clone(),
        basis,
        free,
    })
}

/// A biproduct `⊕ X_k` with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub sum: Arc<Representation>,
    pub summands: Vec<Arc<Representation>>,
    pub injections: Vec<RepMorphism>,
    pub projections: Vec<RepMorphism>,
    /// Per summand, per vertex: offset of the summand's block.
    pub offsets: Vec<Vec<usize>>,
}

impl DirectSum {
    /// Block-diagonal sum of `summands` (at least one).
    pub fn of(summands: &[Arc<Representation>]) -> Result<Self> {
        let first = summands
            .first()
            .ok_or_else(|| Error::Validation("direct sum of no objects".into()))?;
        for s in &summands[1..] {
            first.check_same_quiver(s)?;
        }
        let f = first.field;
        let q = first.quiver.clone();
        let n = q.vertex_count();
        let mut offsets = Vec::with_capacity(summands.len());
        let mut dims = vec![0; n];
        for s in summands {
            offsets.push(dims.clone());
            for v in 0..n {
                dims[v] += s.dims[v];
            }
        }
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                for (s, off) in summands.iter().zip(&offsets) {
                    m.paste(off[a.target], off[a.source], s.map(ai));
                }
                m
            })
            .collect();
        let sum = Arc::new(Representation::new(q, f, dims.clone(), maps)?);
        let mut injections = Vec::new();
        let mut projections = Vec::new();
        for (s, off) in summands.iter().zip(&offsets) {
            let inj = (0..n)
                .map(|v| {
                    let mut m = Matrix::zeros(f, dims[v], s.dims[v]);
                    m.paste(off[v], 0, &Matrix::identity(f, s.dims[v]));
                    m
                })
                .collect::<Vec<_>>();
            let proj = inj.iter().map(Matrix::transpose).collect();
            injections.push(RepMorphism {
                source: s.clone(),
                target: sum.clone(),
                comps: inj,
            });
            projections.push(RepMorphism {
                source: sum.clone(),
                target: s.clone(),
                comps: proj,
            });
        }
        Ok(Self {
            sum,
            summands: summands.to_vec(),
            injections,
            projections,
            offsets,
        })
    }

    /// The morphism `⊕ X_k → Y` with the given components `X_k → Y`.
    pub fn copair(&self, parts: &[RepMorphism]) -> Result<RepMorphism> {
        let target = parts
            .first()
            .map(|p| p.target.clone())
            .ok_or_else(|| Error::Validation("empty copairing".into()))?;
        let mut out = RepMorphism::zero(self.sum.clone(), target);
        for (p, proj) in parts.iter().zip(&self.projections) {
            out = out.add(&compose(p, proj)?);
        }
        Ok(out)
    }

    /// The morphism `Y → ⊕ X_k` with the given components `Y → X_k`.
    pub fn pair(&self, parts: &[RepMorphism]) -> Result<RepMorphism> {
        let source = parts
            .first()
            .map(|p| p.source.clone())
            .ok_or_else(|| Error::Validation("empty pairing".into()))?;
        let mut out = RepMorphism::zero(source, self.sum.clone());
        for (p, inj) in parts.iter().zip(&self.injections) {
            out = out.add(&compose(inj, p)?);
        }
        Ok(out)
    }
}

/// `M ⊕ N` with injections and projections.
pub fn direct_sum(m: &Arc<Representation>, n: &Arc<Representation>) -> Result<DirectSum> {
    DirectSum::of(&[m.clone(), n.clone()])
}

/// `f ⊕ g : A ⊕ A' → B ⊕ B'` between given sums.
pub fn morphism_sum(
    f: &RepMorphism,
    g: &RepMorphism,
    source: &DirectSum,
    target: &DirectSum,
) -> Result<RepMorphism> {
    let a = compose(&target.injections[0], &compose(f, &source.projections[0])?)?;
    let b = compose(&target.injections[1], &compose(g, &source.projections[1])?)?;
    Ok(a.add(&b))
}

/// Vertexwise kernel of `f` as a subrepresentation, with its inclusion.
pub fn kernel(f: &RepMorphism) -> Result<(Arc<Representation>, RepMorphism)> {
    let src = &f.source;
    let field = src.field;
    let q = src.quiver.clone();
    let incl: Vec<Matrix> = f
        .comps
        .iter()
        .map(|c| c.kernel_basis().transpose())
        .collect();
    let dims: Vec<usize> = incl.iter().map(Matrix::cols).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let image = src.map(ai).mul(&incl[a.source]);
            let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
            for c in 0..image.cols() {
                let col: Vec<u32> = (0..image.rows()).map(|r| image.get(r, c)).collect();
                let x = incl[a.target]
                    .solve(&col)?
                    .ok_or_else(|| Error::Internal("kernel is not a subrepresentation".into()))?;
                for (r, val) in x.into_iter().enumerate() {
                    m.set(r, c, val);
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    let k = Arc::new(Representation::new(q, field, dims, maps)?);
    let iota = RepMorphism::new_unchecked(k.clone(), src.clone(), incl)?;
    Ok((k, iota))
}

/// Vertexwise cokernel of `f` with the quotient map and a vertexwise linear section.
///
/// The quotient coordinates at each vertex are the non-pivot coordinates of the
/// reduced image, so `section` is not a morphism of representations in general.
pub fn cokernel(f: &RepMorphism) -> Result<(Arc<Representation>, RepMorphism, Vec<Matrix>)> {
    use crate::field::Subspace;
    let tgt = &f.target;
    let field = tgt.field;
    let q = tgt.quiver.clone();
    let n = q.vertex_count();
    let mut quot = Vec::with_capacity(n);
    let mut section = Vec::with_capacity(n);
    for v in 0..n {
        let image = Subspace::row_space(&f.comps[v].transpose());
        let comp = image.complement_columns();
        let dim = tgt.dims[v];
        let mut qm = Matrix::zeros(field, comp.len(), dim);
        for j in 0..dim {
            let mut e = vec![0; dim];
            e[j] = 1;
            let red = image.reduce(&e);
            for (r, &c) in comp.iter().enumerate() {
                qm.set(r, j, red[c]);
            }
        }
        let mut sm = Matrix::zeros(field, dim, comp.len());
        for (r, &c) in comp.iter().enumerate() {
            sm.set(c, r, 1);
        }
        quot.push(qm);
        section.push(sm);
    }
    let dims: Vec<usize> = quot.iter().map(Matrix::rows).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| quot[a.target].mul(tgt.map(ai)).mul(&section[a.source]))
        .collect();
    let c = Arc::new(Representation::new(q, field, dims, maps)?);
    let qmor = RepMorphism::new_unchecked(tgt.clone(), c.clone(), quot)?;
    Ok((c, qmor, section))
}

/// The map `B' → Z` induced on a cokernel `q: B → B'` by `g: B → Z` with `g` vanishing on the image.
pub fn induced_from_cokernel(
    g: &RepMorphism,
    q: &RepMorphism,
    section: &[Matrix],
) -> Result<RepMorphism> {
    let comps = g
        .comps
        .iter()
        .zip(section)
        .map(|(gc, s)| gc.mul(s))
        .collect();
    RepMorphism::new(q.target.clone(), g.target.clone(), comps)
}

/// Projective indecomposable `P(v)`: basis at `w` is the set of paths `v ⇝ w`.
#[derive(Clone, Debug)]
pub struct Projective {
    pub vertex: usize,
    pub rep: Arc<Representation>,
    /// path (arrow sequence) → (end vertex, basis index at the end vertex)
    index: HashMap<Vec<usize>, (usize, usize)>,
    /// per vertex, the paths in basis order
    pub paths: Vec<Vec<Vec<usize>>>,
}

impl Projective {
    pub fn new(quiver: &Arc<Quiver>, field: PrimeField, v: usize) -> Self {
        let n = quiver.vertex_count();
        let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        let mut index = HashMap::new();
        for (p, end) in quiver.paths_from(v) {
            index.insert(p.clone(), (end, paths[end].len()));
            paths[end].push(p);
        }
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
                for (c, p) in paths[a.source].iter().enumerate() {
                    let mut ext = p.clone();
                    ext.push(ai);
                    let (_, r) = index[&ext];
                    m.set(r, c, 1);
                }
                m
            })
            .collect();
        let rep = Arc::new(
            Representation::new(quiver.clone(), field, dims, maps).expect("path module shapes"),
        );
        Self {
            vertex: v,
            rep,
            index,
            paths,
        }
    }

    /// Basis position `(end vertex, index)` of a path starting at this vertex.
    pub fn position(&self, path: &[usize]) -> Option<(usize, usize)> {
        self.index.get(path).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn a3() -> Category {
        type_a_category(3, "RR", f2()).unwrap()
    }

    fn obj<'a>(c: &'a Category, name: &str) -> &'a Arc<Representation> {
        &c.objects[c.index_of(name).unwrap()]
    }

    #[test]
    fn type_a_counts() {
        assert_eq!(a3().len(), 6);
        assert_eq!(type_a_category(1, "", f2()).unwrap().len(), 1);
        assert_eq!(type_a_category(4, "RLR", f2()).unwrap().len(), 10);
        assert!(type_a_category(3, "R", f2()).is_err());
        assert!(type_a_category(3, "RX", f2()).is_err());
    }

    #[test]
    fn cycle_rejected() {
        let arrows = vec![
            Arrow {
                name: "x".into(),
                source: 0,
                target: 1,
            },
            Arrow {
                name: "y".into(),
                source: 1,
                target: 0,
            },
        ];
        assert!(Quiver::new(2, arrows).is_err());
    }

    #[test]
    fn intervals_are_bricks() {
        for orient in ["RR", "RL", "LR", "LL"] {
            let c = type_a_category(3, orient, f2()).unwrap();
            for m in &c.objects {
                assert_eq!(hom_space(m, m).unwrap().dim(), 1);
            }
        }
    }

    #[test]
    fn hom_examples_a3() {
        let c = a3();
        // usual names for 1→2→3: P3=[3,3], P2=[2,3], P1=[1,3], S2=[2,2], I2=[1,2], S1=[1,1]
        let p3 = obj(&c, "[3,3]");
        let p2 = obj(&c, "[2,3]");
        let s1 = obj(&c, "[1,1]");
        assert_eq!(hom_space(p3, p2).unwrap().dim(), 1);
        assert_eq!(hom_space(s1, p3).unwrap().dim(), 0);
        assert_eq!(hom_space(p2, p3).unwrap().dim(), 0);
    }

    #[test]
    fn compose_examples() {
        let c = a3();
        let (p3, p2, s2, i2, s1) = (
            obj(&c, "[3,3]"),
            obj(&c, "[2,3]"),
            obj(&c, "[2,2]"),
            obj(&c, "[1,2]"),
            obj(&c, "[1,1]"),
        );
        let a = hom_space(p3, p2).unwrap().basis()[0].clone();
        let cm = hom_space(p2, s2).unwrap().basis()[0].clone();
        assert!(compose(&cm, &a).unwrap().is_zero());
        let id = RepMorphism::identity(p2.clone());
        assert_eq!(compose(&id, &a).unwrap(), a);
        let e = hom_space(s2, i2).unwrap().basis()[0].clone();
        let fm = hom_space(i2, s1).unwrap().basis()[0].clone();
        // S2 → I2 → S1 vanishes, but each factor is nonzero
        assert!(!e.is_zero() && !fm.is_zero());
        assert!(compose(&fm, &e).unwrap().is_zero());
        assert!(compose(&a, &cm).is_err());
    }

    #[test]
    fn direct_sum_biproduct() {
        let c = a3();
        let p1 = obj(&c, "[1,3]");
        let s2 = obj(&c, "[2,2]");
        let ds = direct_sum(p1, s2).unwrap();
        assert_eq!(ds.sum.dims(), &[1, 2, 1]);
        for k in 0..2 {
            let pi = compose(&ds.projections[k], &ds.injections[k]).unwrap();
            assert_eq!(pi, RepMorphism::identity(ds.summands[k].clone()));
        }
        assert!(compose(&ds.projections[1], &ds.injections[0])
            .unwrap()
            .is_zero());
        let sum = compose(&ds.injections[0], &ds.projections[0])
            .unwrap()
            .add(&compose(&ds.injections[1], &ds.projections[1]).unwrap());
        assert_eq!(sum, RepMorphism::identity(ds.sum.clone()));

        let zero = Arc::new(Representation::zero(c.quiver.clone(), c.field));
        let ds0 = direct_sum(p1, &zero).unwrap();
        assert!(ds0.injections[0].is_iso());
    }

    #[test]
    fn hom_additive_in_biproducts() {
        let c = type_a_category(3, "RL", f2()).unwrap();
        for m in &c.objects {
            for m2 in &c.objects {
                let ds = direct_sum(m, m2).unwrap();
                for n in &c.objects {
                    let lhs = hom_space(&ds.sum, n).unwrap().dim();
                    let rhs = hom_space(m, n).unwrap().dim() + hom_space(m2, n).unwrap().dim();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn projective_shapes() {
        let c = a3();
        let p = Projective::new(&c.quiver, c.field, 0);
        assert_eq!(p.rep.dims(), &[1, 1, 1]);
        let p = Projective::new(&c.quiver, c.field, 2);
        assert_eq!(p.rep.dims(), &[0, 0, 1]);
        let rl = type_a_category(3, "RL", f2()).unwrap();
        let p = Projective::new(&rl.quiver, rl.field, 1);
        assert_eq!(p.rep.dims(), &[0, 1, 0]);
    }

    #[test]
    fn kernel_and_cokernel() {
        let c = a3();
        let p2 = obj(&c, "[2,3]");
        let s2 = obj(&c, "[2,2]");
        let cm = hom_space(p2, s2).unwrap().basis()[0].clone();
        let (k, iota) = kernel(&cm).unwrap();
        assert_eq!(k.dims(), &[0, 0, 1]);
        assert!(compose(&cm, &iota).unwrap().is_zero());
        let (q, qm, _) = cokernel(&iota).unwrap();
        assert_eq!(q.dims(), &[0, 1, 0]);
        assert!(RepMorphism::new(qm.source().clone(), q.clone(), qm.comps().to_vec()).is_ok());
    }
}
