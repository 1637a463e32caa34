use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// `Undecided` is special: it is not a failure of the input but of the
/// refinement budget, and callers usually surface it as a third verdict
/// outcome rather than an error.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("rational function is identically zero")]
    ZeroFunction,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("polynomial has nonreal coefficients")]
    NonRealCoefficients,
    #[error("interval endpoint is a root of the polynomial")]
    EndpointIsRoot,
    #[error("interval endpoint lies on the divisor support")]
    EndpointOnSupport,
    #[error("interval is empty or reversed")]
    EmptyInterval,
    #[error("undecided after {0} refinement steps")]
    Undecided(u32),
    #[error("function has nonreal zeros or poles")]
    NonRealRoots,
    #[error("interlacing constraint violated: {0}")]
    InterlacingViolated(String),
    #[error("function does not satisfy the {0}-interlacing condition")]
    NotNInterlacing(usize),
    #[error("function is not #-real")]
    NotSharpReal,
    #[error("no factorization into rational Herglotz factors found")]
    FactorSearchExhausted,
    #[error("zero or pole on the integration contour")]
    SingularOnContour,
    #[error("root within 1e-9 of the real axis; oracle declines")]
    RootNearAxis,
    #[error("index set out of range for dimension {0}")]
    IndexOutOfRange(usize),
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix does not have full column rank")]
    RankDeficient,
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular over the rational function field")]
    SingularMatrix,
    #[error("kernel or range of the matrix function varies with the point: {0}")]
    ConstantKernelViolated(String),
    #[error("kernel of the matrix function differs from the kernel of its adjoint")]
    KernelAdjointMismatch,
    #[error("pole of order >= 2 in entry ({0},{1})")]
    NonSimplePole(usize, usize),
    #[error("extracted coefficient matrix is not Hermitian: {0}")]
    HermitianViolation(String),
    #[error("partial-fraction representation requires rational poles")]
    AlgebraicPole,
    #[error("grid point is a pole of the function")]
    PoleOnGrid,
    #[error("grid point does not lie in the open upper half-plane")]
    GridNotUpperHalfPlane,
    #[error("matrix function has not been verified Herglotz: {0}")]
    NotVerifiedHerglotz(String),
    #[error("hypotheses violated: {0}")]
    HypothesesViolated(String),
    #[error("det E+ is identically zero")]
    SingularEPlus,
    #[error("det E is identically zero")]
    SingularE,
    #[error("subspace does not contain the range of Q")]
    SubspaceTooSmall,
    #[error("evaluation point is a pole")]
    EvalAtPole,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
