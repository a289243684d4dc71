//! Presentations, abelianization, right-angled Artin groups and typing words.

pub mod presentation;
pub mod raag;
pub mod snf;
pub mod typing;
pub mod word;

pub use presentation::{
    dimer_presentation, glide_presentation, pi1_spanning_tree, tietze_reduce, Presentation,
};
pub use raag::RaagSpec;
pub use snf::{abelianization, Abelianization};
pub use typing::{typing_word, u_word, GlideLoop, Orientation};
pub use word::{Letter, Word};
