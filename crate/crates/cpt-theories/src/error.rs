use thiserror::Error;

#[derive(Debug, Error)]
pub enum TheoryError {
    #[error("a theory needs at least one generator")]
    Empty,
    #[error("generators must share one symbol space and mode: {0}")]
    Mismatch(String),
    #[error("monomial support {support} exceeds the cap of {cap}")]
    SupportTooLarge { support: usize, cap: usize },
    #[error(transparent)]
    Algebra(#[from] cpt_algebra::AlgebraError),
    #[error(transparent)]
    Action(#[from] cpt_actions::ActionError),
    #[error(transparent)]
    Rep(#[from] cpt_reps::RepError),
    #[error(transparent)]
    Lorentz(#[from] cpt_lorentz::LorentzError),
}
