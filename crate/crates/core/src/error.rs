use thiserror::Error;

/// Errors raised by the workbench.
///
/// Structural problems with a table are kept apart from axiom failures: an
/// algebra that fails the cycloid law is still a well-formed [`MagmaTable`],
/// and [`check_axioms`](crate::check_axioms) reports that through an
/// [`AxiomReport`](crate::AxiomReport), not through this type.
///
/// [`MagmaTable`]: crate::MagmaTable
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("table has {rows} rows but size is {size}")]
    RowCount { size: usize, rows: usize },
    #[error("row {row} has {len} entries but size is {size}")]
    RowLength { row: usize, len: usize, size: usize },
    #[error("entry ({row},{col}) = {value} is out of range for size {size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("unit {unit} is out of range for size {size}")]
    UnitOutOfRange { unit: usize, size: usize },
    #[error("{what}: {requested} exceeds the limit of {limit}{hint}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
        hint: &'static str,
    },
    #[error("algebra is not a pre-L-algebra ({0} fails)")]
    NotPreL(&'static str),
    #[error("algebra is not an L-algebra")]
    NotL,
    #[error("subset {0:?} is not an ideal")]
    NotIdeal(Vec<usize>),
    #[error("partition {0:?} is not a congruence")]
    NotCongruence(Vec<usize>),
    #[error("element {element} is out of range for size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("carrier mismatch: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("commutator search found several minimal ideals: {0:?}")]
    AmbiguousCommutator(Vec<Vec<usize>>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
