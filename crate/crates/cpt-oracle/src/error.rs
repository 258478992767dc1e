use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("odd field symbol {0} has no classical value")]
    OddSymbol(String),
    #[error("field has {found} components, the symbol space needs {expected}")]
    Shape { expected: usize, found: usize },
    #[error(transparent)]
    Action(#[from] cpt_actions::ActionError),
}
