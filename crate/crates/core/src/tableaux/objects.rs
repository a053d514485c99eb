//! Uniform listing of the enumerable objects, each with its weight.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{
    enumerate_compatible, enumerate_composition_tableaux, enumerate_key_skylines,
    enumerate_particle_tableaux, enumerate_pipe_dreams, enumerate_ssyt, kohnert_closure, BoxDiagram,
};
use crate::combinat::{reduced_words, Partition, Permutation, WeakComposition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    /// Reduced pipe dreams of a permutation.
    PipeDreams,
    /// Kohnert diagrams of a Rothe diagram.
    RotheKohnert,
    /// Reduced words with compatible sequences.
    Compatible,
    /// Kohnert diagrams of a left-justified composition diagram.
    Kohnert,
    /// Semistandard Young tableaux of a partition shape.
    Ssyt,
    /// Semistandard composition tableaux.
    CompositionTableaux,
    /// Particle tableaux.
    Particles,
    /// Key semi-skyline fillings.
    Skylines,
}

impl ObjectKind {
    pub const ALL: [ObjectKind; 8] = [
        ObjectKind::PipeDreams,
        ObjectKind::RotheKohnert,
        ObjectKind::Compatible,
        ObjectKind::Kohnert,
        ObjectKind::Ssyt,
        ObjectKind::CompositionTableaux,
        ObjectKind::Particles,
        ObjectKind::Skylines,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::PipeDreams => "pipedreams",
            ObjectKind::RotheKohnert => "rothe-kohnert",
            ObjectKind::Compatible => "compatible",
            ObjectKind::Kohnert => "kohnert",
            ObjectKind::Ssyt => "ssyt",
            ObjectKind::CompositionTableaux => "tableaux",
            ObjectKind::Particles => "particles",
            ObjectKind::Skylines => "skylines",
        }
    }

    /// Whether the kind is indexed by a permutation rather than a
    /// composition or partition.
    pub fn takes_permutation(self) -> bool {
        matches!(
            self,
            ObjectKind::PipeDreams | ObjectKind::RotheKohnert | ObjectKind::Compatible
        )
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ObjectKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "object",
                name: s.to_string(),
            })
    }
}

/// One enumerated object in its text form, with its weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedObject {
    pub object: String,
    pub weight: WeakComposition,
}

impl fmt::Display for WeightedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weight.entries().iter().map(u32::to_string).collect();
        write!(f, "{}\t{}", w.join(","), self.object)
    }
}

fn weighted<T: fmt::Display>(items: Vec<T>, weight: impl Fn(&T) -> WeakComposition) -> Vec<WeightedObject> {
    items
        .iter()
        .map(|t| WeightedObject {
            object: t.to_string(),
            weight: weight(t),
        })
        .collect()
}

/// Objects of `kind` for the permutation `p` that use only the first `n`
/// variables (default: the size of `p`), weights of length `n`.
pub fn enumerate_for_permutation(
    kind: ObjectKind,
    p: &Permutation,
    n: Option<usize>,
) -> Result<Vec<WeightedObject>> {
    let n = n.unwrap_or(p.size());
    let m = n.max(p.size());
    let out = match kind {
        ObjectKind::PipeDreams => weighted(enumerate_pipe_dreams(p), |d| d.weight(m)),
        ObjectKind::RotheKohnert => {
            weighted(kohnert_closure(&BoxDiagram::rothe(p)), |d| d.weight(m))
        }
        ObjectKind::Compatible => {
            let mut out = Vec::new();
            for alpha in reduced_words(p) {
                for beta in enumerate_compatible(&alpha) {
                    let mut w = vec![0u32; m];
                    for &b in beta.entries() {
                        w[b as usize - 1] += 1;
                    }
                    out.push(WeightedObject {
                        object: format!("{alpha} {beta}"),
                        weight: WeakComposition::new(w),
                    });
                }
            }
            out
        }
        _ => {
            return Err(Error::ObjectIndexMismatch {
                object: kind.name(),
                expected: "composition or partition",
            })
        }
    };
    Ok(out
        .into_iter()
        .filter(|o| o.weight.entries()[n..].iter().all(|&x| x == 0))
        .map(|o| WeightedObject {
            weight: o.weight.trimmed().padded(n),
            ..o
        })
        .collect())
}

/// Objects of `kind` for the composition or partition written in `index`.
/// Weights have length `n`, defaulting to the index length.
pub fn enumerate_for_index(kind: ObjectKind, index: &str, n: Option<usize>) -> Result<Vec<WeightedObject>> {
    if kind == ObjectKind::Ssyt {
        let shape: Partition = index.parse()?;
        let n = n.unwrap_or(shape.len());
        let tableaux = enumerate_ssyt(&shape, &Partition::empty(), n as u32);
        return Ok(weighted(tableaux, |t| t.weight(n)));
    }
    let a: WeakComposition = index.parse()?;
    let n = n.unwrap_or(a.len());
    if a.trimmed().len() > n {
        return Err(Error::NTooSmall {
            index: a.to_string(),
            n,
        });
    }
    let out = match kind {
        ObjectKind::Kohnert => {
            weighted(kohnert_closure(&BoxDiagram::of_composition(&a)), |d| d.weight(n))
        }
        ObjectKind::CompositionTableaux => weighted(enumerate_composition_tableaux(&a), |t| t.weight(n)),
        ObjectKind::Particles => weighted(enumerate_particle_tableaux(&a), |t| t.weight(n)),
        ObjectKind::Skylines => weighted(enumerate_key_skylines(&a), |t| t.weight(n)),
        _ => {
            return Err(Error::ObjectIndexMismatch {
                object: kind.name(),
                expected: "permutation",
            });
        }
    };
    Ok(out)
}
