use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("tableaux {first} and {second} have the same content sequence; the parameters are not semisimple")]
    ContentCollision { first: String, second: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ξ must be invertible")]
    XiNotInvertible,
    #[error("this operation needs {0} parameters")]
    WrongMode(&'static str),
    #[error("unsupported size: {0}")]
    Unsupported(String),
    #[error("the {name} elements span a space of rank {rank}, not {dim}")]
    NotABasis {
        name: &'static str,
        rank: usize,
        dim: usize,
    },
    #[error(transparent)]
    Core(#[from] specht_core::Error),
}
