use thiserror::Error;

/// Errors shared across the crate; variants carry the witness data named by
/// the operation that produced them.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("structure-constant table does not match carrier rank {expected}: got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("element index {idx} out of range for carrier of order {order}")]
    ElementOutOfRange { idx: usize, order: usize },

    #[error("basis product ({i},{j}) has additive order incompatible with the carrier")]
    BilinearityBroken { i: usize, j: usize },

    #[error("multiplication not associative on basis triple ({i},{j},{l})")]
    NonAssociative { i: usize, j: usize, l: usize },

    #[error("claimed unity fails on basis element {basis}")]
    NotUnity { basis: usize },

    #[error("order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("bimodule axiom `{axiom}` fails on basis tuple {tuple:?}")]
    AxiomViolation { axiom: &'static str, tuple: Vec<usize> },

    #[error("operation requires a nonzero rng")]
    ZeroRng,

    #[error("rng is not a minimal bimodule-rng (witness subrng of size {witness_size})")]
    NotMinimal { witness_size: usize },

    #[error("trivial extension requires zero internal product; basis pair ({i},{j}) has a nonzero product")]
    NonzeroSquare { i: usize, j: usize },

    #[error("map is not a bimodule-rng homomorphism")]
    NotAHom,

    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),

    #[error("no ideal satisfying the hypotheses (nonzero, trivial intersection with the base)")]
    NoSuchIdeal,

    #[error("base ring is not prime")]
    NotPrimeBase,

    #[error("embedding is not a minimal extension")]
    NotMinimalExtension,

    #[error("extension is not central")]
    NotCentral,

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown catalog constructor `{0}`")]
    UnknownConstructor(String),

    #[error("bad catalog parameters: {0}")]
    BadParams(String),

    #[error("embedding map is not a unital ring embedding: {0}")]
    BadEmbedding(&'static str),
}
