//! Error types, one enum per subsystem.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("ambient dimension must be 2 or 3, got {dim}")]
    BadDimension { dim: usize },
    #[error("non-finite component")]
    NonFinite,
    #[error("zero vector cannot be normalised")]
    ZeroVector,
    #[error("matrix is singular (det = {det:e})")]
    SingularMatrix { det: f64 },
    #[error("generator is not skew-symmetric (defect {defect:e})")]
    NotSkew { defect: f64 },
    #[error("plane basis is not orthonormal (defect {defect:e})")]
    NotOrthonormal { defect: f64 },
    #[error("plane dimension m = {m} must satisfy 1 <= m < n = {n}")]
    BadPlaneDim { m: usize, n: usize },
    #[error("mollifier radius must be positive, got {eps}")]
    BadMollifierRadius { eps: f64 },
    #[error("cutoff width must be positive, got {mu}")]
    BadCutoffWidth { mu: f64 },
    #[error("region must contain at least one sample point")]
    EmptyRegion,
}

#[derive(Debug, Error)]
pub enum CloudError {
    #[error("generation depth {depth} outside supported range 0..={max}")]
    DepthOutOfRange { depth: u32, max: u32 },
    #[error("iterated system would produce {size} points, over the 1e7 guard")]
    SizeGuard { size: u128 },
    #[error("similarity ratio must lie in (0, 1), got {ratio}")]
    BadRatio { ratio: f64 },
    #[error("curve needs at least 2 samples, got {samples}")]
    TooFewSamples { samples: usize },
    #[error("invalid curve descriptor: {reason}")]
    BadCurve { reason: String },
    #[error("weights and points disagree or are invalid: {reason}")]
    Inconsistent { reason: String },
    #[error("malformed cloud file: {reason}")]
    Parse { reason: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error)]
pub enum MeasureError {
    #[error("covering scale delta = {delta:e} below the 1e-9 float-grid guard")]
    DeltaTooSmall { delta: f64 },
    #[error("covering scale delta must be positive, got {delta}")]
    BadDelta { delta: f64 },
    #[error("box dimension m = {m} must satisfy 1 <= m < n = {n}")]
    BadBoxDim { m: usize, n: usize },
    #[error("projected length requires a planar cloud (n = 2), got n = {n}")]
    NotPlanar { n: usize },
    #[error("favard quadrature needs at least 8 angles, got {angles}")]
    TooFewAngles { angles: usize },
}

#[derive(Debug, Error)]
pub enum MapError {
    #[error("affine part is not invertible: {0}")]
    NotInvertible(GeometryError),
    #[error("shear slope bound violated: |alpha| * max|s'| = {bound} >= 1 on the domain box")]
    ShearTooSteep { bound: f64 },
    #[error("shear axes out of range or equal: in {in_axis}, out {out_axis}, dim {dim}")]
    BadShearAxes { in_axis: usize, out_axis: usize, dim: usize },
    #[error("dimension mismatch: {a} vs {b}")]
    DimMismatch { a: usize, b: usize },
    #[error("point lies outside the chart domain (|phi(x)| = {radius_seen} > {radius})")]
    OutsideDomain { radius_seen: f64, radius: f64 },
    #[error("sampled Jacobian rank is not m: kept singular value {kept:e}, dropped {dropped:e}")]
    RankDefect { kept: f64, dropped: f64 },
    #[error("sample grid is empty")]
    EmptyGrid,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error)]
pub enum FlowError {
    #[error("rotation pushes chart boundary samples outside the chart (worst excess {excess:e})")]
    DomainViolation { excess: f64 },
    #[error("cloud point outside the chart domain")]
    CloudOutsideChart,
    #[error("two-sided pushforward estimates disagree: {side_a} vs {side_b}, tolerance {tol}")]
    PushforwardMismatch { side_a: f64, side_b: f64, tol: f64 },
    #[error("no feasible rotation among {trials} trials (rho too large for epsilon)")]
    NoFeasibleRotation { trials: usize },
    #[error("flow stability guard violated: |t| * Lip = {product} >= 1")]
    StabilityGuard { product: f64 },
    #[error("integrator needs at least 16 steps, got {steps}")]
    TooFewSteps { steps: usize },
    #[error("key lemma hypothesis violated: O reaches within {dist} of the chart boundary, need {mu}")]
    LemmaHypothesis { dist: f64, mu: f64 },
    #[error("rotation is the identity, which the lemma excludes")]
    ExcludedIdentity,
    #[error("no admissible flow time above the minimum step {min_time} (rotation too far for eta)")]
    NoAdmissibleTime { min_time: f64 },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("charts fail to cover the domain: {uncovered} grid cells uncovered")]
    Uncovered { uncovered: usize },
    #[error("no admissible collar width above grid resolution (cloud concentrated on the boundary)")]
    NoAdmissibleCollar,
    #[error("budget violated at step {step}: {what} = {measured} exceeds {budget}")]
    BudgetViolation { step: usize, what: &'static str, measured: f64, budget: f64 },
    #[error("cauchy check needs at least 3 composed maps, got {got}")]
    TooFewMaps { got: usize },
    #[error("supports of (zeta - id) overlap across elements {a} and {b} (gap {gap})")]
    SupportOverlap { a: usize, b: usize, gap: f64 },
    #[error("element has no cloud mass left at step {step}; iteration terminated early")]
    EmptyElement { step: usize },
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Map(#[from] MapError),
}
