use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} (parts must be positive and weakly decreasing)")]
    NotAPartition(Vec<u32>),

    #[error("not a strong composition: {0:?} (entries must be positive)")]
    NotAComposition(Vec<u32>),

    #[error("could not parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("filling does not match its shape")]
    ShapeMismatch,

    #[error("filling is not {0}")]
    NotTableau(&'static str),

    #[error("invalid gene decomposition: {0}")]
    InvalidGenes(#[from] GeneViolation),

    #[error("shape {0} does not have exactly two rows")]
    NotTwoRow(String),

    #[error("enumeration exceeded the limit of {0} objects")]
    LimitExceeded(usize),
}

/// The way a cell-to-gene assignment fails to be a genomic tableau.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneViolation {
    #[error("gene {gene} contains cells with different labels")]
    MixedLabels { gene: u32 },

    /// Column-interval condition: an equal label in an intervening column
    /// sits outside the gene.
    #[error("gene {gene} skips the cell at row {row}, column {col} carrying the same label")]
    NotColumnInterval { gene: u32, row: usize, col: usize },

    /// A gene has two boxes in one row.
    #[error("gene {gene} has two cells in row {row}")]
    TwoCellsInRow { gene: u32, row: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
