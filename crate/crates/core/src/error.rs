use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Usage(String),
    #[error("group order {order} exceeds the enumeration bound {bound} (raise SPINWEYL_MAX_GROUP_ORDER or pass --force)")]
    BoundExceeded { order: u128, bound: u128 },
    #[error("{what} is refused without {flag}")]
    Refused { what: String, flag: &'static str },
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("element is not in Pin(V) up to scale")]
    NotPin,
    #[error("Clifford elements belong to different bases")]
    BasisMismatch,
    #[error("spin character snapping failed: {0}")]
    Snap(String),
    #[error("character table computation failed: {0}")]
    Table(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("character is not irreducible")]
    NotIrreducible,
    #[error("verification mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
