//! JSON category files: a quiver, a prime, and a list of named indecomposables
//! with integer arrow matrices (reduced mod `p` on load).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Matrix, PrimeField};
use crate::quiver::{type_a_category, Arrow, Category, Quiver, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    /// 1-based vertex
    pub source: usize,
    /// 1-based vertex
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndecomposableSpec {
    pub name: String,
    pub dims: Vec<usize>,
    /// Arrow name → row-major matrix of shape `dims[target] × dims[source]`.
    /// May be omitted when one of the two dimensions is zero.
    #[serde(default)]
    pub matrices: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub field: u32,
    pub quiver: QuiverSpec,
    pub indecomposables: Vec<IndecomposableSpec>,
    #[serde(default)]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

impl CategoryFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("category files serialize");
        s.push('\n');
        s
    }

    /// Type-A category file; the orientation string has one `R`/`L` per arrow.
    pub fn type_a(n: usize, orientation: &str, p: u32) -> Result<Self> {
        let cat = type_a_category(n, orientation, PrimeField::new(p)?)?;
        let mut meta = BTreeMap::new();
        meta.insert("family".into(), serde_json::json!("type-A"));
        meta.insert("n".into(), serde_json::json!(n));
        meta.insert("orientation".into(), serde_json::json!(orientation));
        Ok(Self::from_category(&cat, meta))
    }

    pub fn from_category(cat: &Category, metadata: BTreeMap<String, serde_json::Value>) -> Self {
        let q = &cat.quiver;
        let arrows = q
            .arrows()
            .iter()
            .map(|a| ArrowSpec {
                name: a.name.clone(),
                source: a.source + 1,
                target: a.target + 1,
            })
            .collect();
        let indecomposables = cat
            .names
            .iter()
            .zip(&cat.objects)
            .map(|(name, obj)| {
                let matrices = q
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| obj.dim(a.source) > 0 && obj.dim(a.target) > 0)
                    .map(|(ai, a)| {
                        let rows = obj
                            .map(ai)
                            .row_vectors()
                            .into_iter()
                            .map(|r| r.into_iter().map(i64::from).collect())
                            .collect();
                        (a.name.clone(), rows)
                    })
                    .collect();
                IndecomposableSpec {
                    name: name.clone(),
                    dims: obj.dims().to_vec(),
                    matrices,
                }
            })
            .collect();
        Self {
            field: cat.field.modulus(),
            quiver: QuiverSpec {
                vertices: q.vertex_count(),
                arrows,
            },
            indecomposables,
            metadata,
        }
    }

    pub fn to_category(&self) -> Result<Category> {
        self.to_category_over(self.field)
    }

    /// Reads the integer matrices modulo `p`, which may differ from the file's field.
    pub fn to_category_over(&self, p: u32) -> Result<Category> {
        let field = PrimeField::new(p)?;
        let nv = self.quiver.vertices;
        let arrows = self
            .quiver
            .arrows
            .iter()
            .map(|a| {
                if a.source == 0 || a.target == 0 || a.source > nv || a.target > nv {
                    return Err(Error::Validation(format!(
                        "arrow {} has an endpoint outside 1..={nv}",
                        a.name
                    )));
                }
                Ok(Arrow {
                    name: a.name.clone(),
                    source: a.source - 1,
                    target: a.target - 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let quiver = Arc::new(Quiver::new(nv, arrows)?);
        let mut names = Vec::new();
        let mut objects = Vec::new();
        for spec in &self.indecomposables {
            if names.contains(&spec.name) {
                return Err(Error::Validation(format!("duplicate name {}", spec.name)));
            }
            if spec.dims.len() != nv {
                return Err(Error::Validation(format!(
                    "{}: {} dimensions for {nv} vertices",
                    spec.name,
                    spec.dims.len()
                )));
            }
            for key in spec.matrices.keys() {
                if quiver.arrow_index(key).is_none() {
                    return Err(Error::Validation(format!(
                        "{}: unknown arrow {key}",
                        spec.name
                    )));
                }
            }
            let maps = quiver
                .arrows()
                .iter()
                .map(|a| {
                    let (r, c) = (spec.dims[a.target], spec.dims[a.source]);
                    match spec.matrices.get(&a.name) {
                        Some(rows) => {
                            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                                return Err(Error::Validation(format!(
                                    "{}: matrix of {} must be {r}x{c}",
                                    spec.name, a.name
                                )));
                            }
                            Matrix::from_rows(field, c, rows)
                        }
                        None if r == 0 || c == 0 => Ok(Matrix::zeros(field, r, c)),
                        None => Err(Error::Validation(format!(
                            "{}: missing matrix for arrow {}",
                            spec.name, a.name
                        ))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let rep = Representation::new(quiver.clone(), field, spec.dims.clone(), maps)
                .map_err(|e| Error::Validation(format!("{}: {e}", spec.name)))?;
            names.push(spec.name.clone());
            objects.push(Arc::new(rep));
        }
        if objects.is_empty() {
            return Err(Error::Validation("no indecomposables listed".into()));
        }
        Ok(Category {
            field,
            quiver,
            names,
            objects,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_roundtrip() {
        let f = CategoryFile::type_a(3, "RL", 2).unwrap();
        assert_eq!(f.indecomposables.len(), 6);
        let back = CategoryFile::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
        let c = back.to_category().unwrap();
        assert_eq!(c.len(), 6);
        let c5 = back.to_category_over(5).unwrap();
        assert_eq!(c5.field.modulus(), 5);
    }

    #[test]
    fn rejects_bad_input() {
        let mut f = CategoryFile::type_a(2, "R", 2).unwrap();
        f.indecomposables[1].name = f.indecomposables[0].name.clone();
        assert!(matches!(f.to_category(), Err(Error::Validation(_))));

        let mut f = CategoryFile::type_a(2, "R", 2).unwrap();
        f.quiver.arrows[0].target = 3;
        assert!(f.to_category().is_err());

        let mut f = CategoryFile::type_a(2, "R", 2).unwrap();
        let m = f
            .indecomposables
            .iter_mut()
            .find(|s| !s.matrices.is_empty())
            .unwrap();
        m.matrices.insert("a1".into(), vec![vec![1, 1]]);
        assert!(f.to_category().is_err());

        assert!(CategoryFile::from_json("{\"field\": 2}").is_err());
        let f = CategoryFile::type_a(2, "R", 2).unwrap();
        assert!(f.to_category_over(4).is_err());
    }

    #[test]
    fn entries_are_reduced() {
        let mut f = CategoryFile::type_a(2, "R", 3).unwrap();
        let m = f
            .indecomposables
            .iter_mut()
            .find(|s| !s.matrices.is_empty())
            .unwrap();
        m.matrices.insert("a1".into(), vec![vec![4]]);
        let name = m.name.clone();
        let c = f.to_category().unwrap();
        let k = c.names.iter().position(|n| n == &name).unwrap();
        assert_eq!(c.objects[k].map(0).get(0, 0), 1);
    }
}
