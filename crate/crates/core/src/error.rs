use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("box extent must be positive: x_min = {x_min}, x_max = {x_max}")]
    EmptyExtent { x_min: f64, x_max: f64 },
    #[error("qubit count {n} outside supported range [{min}, {max}]")]
    QubitCount { n: u32, min: u32, max: u32 },
    #[error("packet width must be positive, got sigma = {0}")]
    PacketWidth(f64),
    #[error("packet center {x0} lies outside the box [{x_min}, {x_max}]")]
    PacketCenter { x0: f64, x_min: f64, x_max: f64 },
    #[error("well width must be positive, got sigma_v = {0}")]
    WellWidth(f64),
    #[error("absorber height must be nonnegative, got u0 = {0}")]
    AbsorberHeight(f64),
    #[error("absorber falloff must be positive, got alpha = {0}")]
    AbsorberFalloff(f64),
    #[error("absorbing regions overlap: width {k} exceeds half of {n_points} points")]
    AbsorberWidth { k: usize, n_points: usize },
    #[error("absorbing potential must be nonnegative: W[{index}] = {value}")]
    NegativeAbsorber { index: usize, value: f64 },
    #[error("vector length {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitIndex { index: usize, num_qubits: usize },
    #[error("gate control equals target (qubit {0})")]
    ControlIsTarget(usize),
    #[error("gate angle must be finite, got {0}")]
    NonFiniteAngle(f64),
    #[error("dense oracle limited to {max} qubits, got {num_qubits}")]
    DenseTooLarge { num_qubits: usize, max: usize },
    #[error("angle count {0} must be a power of two covering at least one control qubit")]
    BadAngleCount(usize),
    #[error("time step must be positive, got dt = {0}")]
    NonPositiveTimeStep(f64),
    #[error("state fully absorbed: ancilla-zero probability {0:e} is below the post-selection floor")]
    FullyAbsorbed(f64),
    #[error("sampling requires at least one shot")]
    NoShots,
}
