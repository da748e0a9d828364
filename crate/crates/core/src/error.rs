use thiserror::Error;

/// Input rejections. Every variant corresponds to a violated hypothesis, never
/// to an internal failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("requires n ≥ 1 (n = 0 is a product surface)")]
    ProductSurface,

    #[error("pushforward requires alpha ≥ 0, got alpha = {0} (dualize first)")]
    NegativeAlpha(i64),

    #[error("degree {got} outside the supported range [{min}, {max}]")]
    DegreeOutOfRange { got: i64, min: i64, max: i64 },

    #[error("scroll cohomology requires a rank-3 bundle, got rank {0}")]
    RankMismatch(usize),

    #[error("cohomology index {got} outside 0..={max}")]
    IndexOutOfRange { got: u8, max: u8 },

    #[error("not a very ample class: {0}")]
    NotVeryAmple(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
