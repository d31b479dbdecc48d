use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("the zero label has no dimension")]
    ZeroLabel,
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {weight:?} has length {len}, expected genus {genus}")]
    WrongLength { weight: Vec<i64>, len: usize, genus: u32 },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("character engine budget exceeded: genus {genus} > {max}")]
    BudgetExceeded { genus: u32, max: u32 },
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("highest weight {0:?} is not of the form i*w1 + w_j")]
    NotAHook(Vec<i64>),
    #[error("multiplicity overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("both factors carry non-scalar representation coefficients")]
    BothSidesVirtual,
    #[error("u^{n} lies beyond the truncation u^{trunc}")]
    OutOfTruncation { n: u32, trunc: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("genus 0 is handled by the closed form for the sphere, not the series")]
    GenusZero,
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("genus 0 with n = 1 is outside the range where the model computes UConf_n")]
    Genus0N1Unsupported,
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for OracleError {
    fn from(e: std::io::Error) -> Self {
        OracleError::Io(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Repr(#[from] ReprError),
}
