use thiserror::Error;

/// Errors produced by region construction and the tiling operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("region is empty")]
    EmptyRegion,
    #[error("region is not edge-connected")]
    DisconnectedRegion,
    #[error("cell is not in the region")]
    CellNotInRegion,
    #[error("region has negative coordinates and cannot be written in the file format")]
    NegativeCoordinates,
    #[error("operation requires a simply connected region")]
    NotSimplyConnected,
    #[error("operation requires a {0} region")]
    WrongLattice(&'static str),
    #[error("operands belong to different regions")]
    DifferentRegions,
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("invalid height function: {0}")]
    InvalidHeights(String),
    #[error("flip is not available at that location")]
    FlipNotAvailable,
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("region is not a center-symmetric hexagon in canonical position")]
    NotHexagon,
    #[error("invalid plane partition: {0}")]
    InvalidPartition(String),
    #[error("rectangle formula requires an even number of rows; transpose the arguments")]
    OddRectangleRows,
    #[error("working precision too low: product failed the integrality check")]
    PrecisionLoss,
    #[error("enumeration limit of {0} tilings exceeded")]
    EnumerationLimit(usize),
    #[error("{0}")]
    InvalidArguments(String),
}

pub type Result<T> = std::result::Result<T, Error>;
