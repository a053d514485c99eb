//! Enumeration of the combinatorial objects behind each basis.

mod compatible;
mod composition;
mod kohnert;
mod pipe_dream;
mod objects;
mod ssyt;
mod words;

pub use compatible::{enumerate_compatible, is_compatible};
pub use composition::{
    enumerate_composition_tableaux, enumerate_key_skylines, enumerate_particle_tableaux,
    is_inversion, CompositionTableau,
};
pub use kohnert::{kohnert_closure, BoxDiagram};
pub use objects::{enumerate_for_index, enumerate_for_permutation, ObjectKind, WeightedObject};
pub use pipe_dream::{enumerate_pipe_dreams, PipeDream};
pub use ssyt::{enumerate_ssyt, enumerate_ssyt_with_content, is_yamanouchi_word, Ssyt};
pub use words::{descent_composition, runs};
