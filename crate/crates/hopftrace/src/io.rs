//! File formats: complexes, discrete vector fields, simplicial maps, and
//! group actions, all JSON with canonical ordering so that emitted files
//! diff and hash stably.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::{ComplexHandle, SimplicialComplex};
use crate::dvf::DiscreteVectorField;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};

/// Complex file: maximal simplices as vertex-id lists; the downward closure
/// is computed on load. `vertices`, when present, labels ids `0..n`.
#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub maximal_simplices: Vec<Vec<u64>>,
}

impl ComplexFile {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let maximal_simplices: Vec<Vec<u64>> = k
            .maximal_simplices()
            .iter()
            .map(|s| s.vertices().iter().map(|v| v.0).collect())
            .collect();
        // labels are positional, so only emit them for contiguous ids
        let contiguous = k.vertices().enumerate().all(|(i, v)| v.0 == i as u64);
        let vertices = if contiguous {
            k.labels().map(|labels| {
                k.vertices()
                    .map(|v| labels.get(&v).cloned().unwrap_or_else(|| v.to_string()))
                    .collect()
            })
        } else {
            None
        };
        ComplexFile {
            vertices,
            maximal_simplices,
        }
    }

    pub fn into_complex(self) -> Result<ComplexHandle> {
        if self.maximal_simplices.is_empty() {
            return Err(Error::Parse(
                "complex file lists no maximal simplices".into(),
            ));
        }
        for s in &self.maximal_simplices {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != s.len() {
                return Err(Error::Parse(format!("simplex {s:?} repeats a vertex")));
            }
        }
        let k = match &self.vertices {
            None => SimplicialComplex::from_maximal(&self.maximal_simplices),
            Some(labels) => {
                let map: BTreeMap<Vertex, String> = labels
                    .iter()
                    .enumerate()
                    .map(|(i, l)| (Vertex(i as u64), l.clone()))
                    .collect();
                for s in &self.maximal_simplices {
                    for &v in s {
                        if v as usize >= labels.len() {
                            return Err(Error::Parse(format!(
                                "vertex {v} out of range of the {} labels",
                                labels.len()
                            )));
                        }
                    }
                }
                SimplicialComplex::with_labels(
                    self.maximal_simplices
                        .iter()
                        .map(|vs| Simplex::from_ids(vs.iter().copied())),
                    map,
                )
            }
        };
        Ok(k)
    }
}

/// Vector field file: pairs `[α, β]` as vertex-id lists, `[]` being `∅`.
#[derive(Debug, Serialize, Deserialize)]
pub struct DvfFile {
    pub pairs: Vec<(Vec<u64>, Vec<u64>)>,
}

impl DvfFile {
    pub fn from_field(v: &DiscreteVectorField) -> Self {
        let pairs = v
            .pairs()
            .map(|(a, b)| {
                (
                    a.vertices().iter().map(|v| v.0).collect(),
                    b.vertices().iter().map(|v| v.0).collect(),
                )
            })
            .collect();
        DvfFile { pairs }
    }

    pub fn into_field(self, complex: ComplexHandle) -> Result<DiscreteVectorField> {
        let pairs: Vec<(Simplex, Simplex)> = self
            .pairs
            .into_iter()
            .map(|(a, b)| (Simplex::from_ids(a), Simplex::from_ids(b)))
            .collect();
        DiscreteVectorField::new(complex, pairs)
            .map_err(|v| Error::Parse(format!("invalid discrete vector field: {v}")))
    }
}

/// Simplicial map file: vertex id to vertex id.
#[derive(Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub vertex_map: BTreeMap<u64, u64>,
}

impl MapFile {
    pub fn from_map(f: &crate::simplicial_map::SimplicialMap) -> Self {
        MapFile {
            vertex_map: f.vertex_map().iter().map(|(a, b)| (a.0, b.0)).collect(),
        }
    }

    pub fn into_map(
        self,
        source: ComplexHandle,
        target: ComplexHandle,
    ) -> Result<crate::simplicial_map::SimplicialMap> {
        let vm: BTreeMap<Vertex, Vertex> = self
            .vertex_map
            .into_iter()
            .map(|(a, b)| (Vertex(a), Vertex(b)))
            .collect();
        crate::simplicial_map::SimplicialMap::new(source, target, vm)
    }
}

/// Group action file: the prime and the generator permutation.
#[derive(Debug, Serialize, Deserialize)]
pub struct ActionFile {
    pub p: u64,
    pub generator: BTreeMap<u64, u64>,
}

impl ActionFile {
    pub fn from_action(a: &crate::action::GroupAction) -> Self {
        ActionFile {
            p: a.order(),
            generator: a.generator().iter().map(|(v, w)| (v.0, w.0)).collect(),
        }
    }

    pub fn into_action(self, complex: ComplexHandle) -> Result<crate::action::GroupAction> {
        let generator: BTreeMap<Vertex, Vertex> = self
            .generator
            .into_iter()
            .map(|(a, b)| (Vertex(a), Vertex(b)))
            .collect();
        crate::action::GroupAction::new(complex, self.p, generator)
    }
}

/// Canonical serialization: two-space pretty JSON with a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_canonical_json(value)?)?;
    Ok(())
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        Error::Parse(format!(
            "{} at {} line {} column {}",
            e,
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

pub fn load_complex(path: &Path) -> Result<ComplexHandle> {
    parse_json::<ComplexFile>(path)?.into_complex()
}

pub fn load_dvf(path: &Path, complex: ComplexHandle) -> Result<DiscreteVectorField> {
    parse_json::<DvfFile>(path)?.into_field(complex)
}

pub fn load_map(
    path: &Path,
    source: ComplexHandle,
    target: ComplexHandle,
) -> Result<crate::simplicial_map::SimplicialMap> {
    parse_json::<MapFile>(path)?.into_map(source, target)
}

pub fn load_action(path: &Path, complex: ComplexHandle) -> Result<crate::action::GroupAction> {
    parse_json::<ActionFile>(path)?.into_action(complex)
}

/// `sha256:<hex>` digest of a file, for report provenance.
pub fn file_digest(path: &Path) -> Result<String> {
    use sha2::{Digest, Sha256};
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("sha256:{:x}", hasher.finalize()))
}
