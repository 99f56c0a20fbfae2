//! Finite Kripke semantics: models, forcing, and bounded counter-model search.

mod forcing;
mod model;
mod search;

pub use forcing::{entails_in_model, forces, Forcing};
pub use model::{KripkeError, KripkeModel, ValidationReport, Violation};
pub use search::{countermodel_search, enumerate_models, models_on, posets, Poset};
