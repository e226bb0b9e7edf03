use thiserror::Error;
use xmod_hopf::{AlgebraError, Check, ValidationReport};

/// Malformed input; the command exits with status 2.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("SyntaxError at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("SyntaxError in {path}: {message}")]
    Invalid { path: String, message: String },
    #[error("ReferenceError in {path}: {message}")]
    Reference { path: String, message: String },
    #[error("FieldMismatch in {path}: {message}")]
    FieldMismatch { path: String, message: String },
    #[error("ShapeError in {path}: {message}")]
    Shape { path: String, message: String },
    #[error("IoError: {0}")]
    Io(String),
}

impl InputError {
    pub fn invalid(path: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Invalid {
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn reference(path: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Reference {
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn shape(path: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Shape {
            path: path.into(),
            message: message.into(),
        }
    }

    /// Short kind name used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            InputError::Syntax { .. } | InputError::Invalid { .. } => "SyntaxError",
            InputError::Reference { .. } => "ReferenceError",
            InputError::FieldMismatch { .. } => "FieldMismatch",
            InputError::Shape { .. } => "ShapeError",
            InputError::Io(_) => "IoError",
        }
    }
}

/// Why a structure could not be produced.
#[derive(Debug)]
pub enum CliError {
    Input(InputError),
    /// A constructor refused the data on mathematical grounds; exit status 1.
    Violation(ValidationReport),
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Sorts library errors into input errors and axiom violations. `path` names
/// the document entry being built.
pub fn classify(path: &str, err: AlgebraError) -> CliError {
    use AlgebraError::*;
    match err {
        ScalarSyntax(m) => InputError::invalid(path, format!("scalar literal {m}")).into(),
        ShapeMismatch(m) | InvalidGroup(m) | Unsupported(m) => InputError::shape(path, m).into(),
        NotPrime(p) => InputError::invalid(path, format!("{p} is not an admissible prime")).into(),
        MixedFields(a, b) => InputError::FieldMismatch {
            path: path.into(),
            message: format!("{a} and {b}"),
        }
        .into(),
        InvalidCrossedModule(r) | Invalid(r) | AxiomCheckFailed(r) | NotPivotal(r) => {
            let mut report = ValidationReport::new();
            report.absorb(path, r);
            CliError::Violation(report)
        }
        other => {
            let mut check = Check::new(format!("{path}: construction"));
            check.fail(|| other.to_string());
            CliError::Violation(ValidationReport { checks: vec![check] })
        }
    }
}
